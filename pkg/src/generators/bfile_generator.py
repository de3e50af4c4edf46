"""
OEIS b-file output generator
"""
from typing import List

from src.generators.base import BaseGenerator, EmitError, Record


class BFileGenerator(BaseGenerator):
    """'index value' lines; only two-field integer sequences qualify"""

    def generate(self, records: List[Record]) -> str:
        fields = self._resolve_fields(records)
        if records and len(fields) != 2:
            raise EmitError(f"b-file output needs (index, value) records, got fields {fields}")
        lines = []
        for record in records:
            index, value = (record[f] for f in fields)
            if not isinstance(index, int) or not isinstance(value, int):
                raise EmitError(f"b-file entries must be integers, got {record}")
            lines.append(f"{index} {value}")
        return "\n".join(lines)
