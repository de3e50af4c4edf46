"""
Base generator interface
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Sequence

Record = Dict[str, Any]


class EmitError(Exception):
    """Raised when records cannot be rendered in the requested format."""

    pass


class BaseGenerator(ABC):
    """Base class for record formatters"""

    def __init__(self, fields: Optional[Sequence[str]] = None):
        self.fields = list(fields) if fields is not None else None

    def _resolve_fields(self, records: List[Record]) -> List[str]:
        """Field order of the first record; every record must match it"""
        if not records:
            return list(self.fields or [])
        fields = list(records[0].keys())
        for record in records[1:]:
            if list(record.keys()) != fields:
                raise EmitError(f"Records are not homogeneous: {list(record.keys())} vs {fields}")
        if self.fields is not None and fields != self.fields:
            raise EmitError(f"Records carry fields {fields}, expected {self.fields}")
        return fields

    @abstractmethod
    def generate(self, records: List[Record]) -> str:
        """Render records as text"""
        pass
