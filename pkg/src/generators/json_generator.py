"""
JSON lines output generator
"""
import json
from typing import List

from src.generators.base import BaseGenerator, Record
from src.utils.logger import logger


class JSONGenerator(BaseGenerator):
    """One JSON object per line, keys in record order"""

    def generate(self, records: List[Record]) -> str:
        self._resolve_fields(records)
        if not records:
            logger.debug("No records to generate JSON for")
        return "\n".join(json.dumps(record, ensure_ascii=False, default=str) for record in records)
