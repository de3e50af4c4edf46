"""
CSV output generator
"""
import csv
import io
from typing import Any, List

from src.generators.base import BaseGenerator, Record


class CSVGenerator(BaseGenerator):
    """Header line followed by one row per record"""

    @staticmethod
    def _cell(value: Any) -> str:
        if value is None:
            return ""
        if isinstance(value, (list, tuple)):
            return " ".join(str(v) for v in value)
        return str(value)

    def generate(self, records: List[Record]) -> str:
        fields = self._resolve_fields(records)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(fields)
        for record in records:
            writer.writerow([self._cell(record[f]) for f in fields])
        return buffer.getvalue().rstrip("\n")
