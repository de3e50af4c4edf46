"""
Format dispatch for command output
"""
from typing import Dict, List, Optional, Sequence, Type

from src.generators.base import BaseGenerator, EmitError, Record
from src.generators.bfile_generator import BFileGenerator
from src.generators.csv_generator import CSVGenerator
from src.generators.json_generator import JSONGenerator
from src.utils.constants import OutputConstants

GENERATORS: Dict[str, Type[BaseGenerator]] = {
    OutputConstants.FORMAT_JSON: JSONGenerator,
    OutputConstants.FORMAT_CSV: CSVGenerator,
    OutputConstants.FORMAT_BFILE: BFileGenerator,
}


def emit(records: List[Record], fmt: str, fields: Optional[Sequence[str]] = None) -> str:
    """
    Render homogeneous records as json lines, csv or b-file text.

    Args:
        records: Ordered mappings sharing one field order
        fmt: "json", "csv" or "bfile"
        fields: Header used when records is empty

    Raises:
        EmitError: Unknown format, mixed records, or non-sequence b-file data
    """
    if fmt not in GENERATORS:
        raise EmitError(f"Unknown output format: {fmt}")
    return GENERATORS[fmt](fields).generate(list(records))
