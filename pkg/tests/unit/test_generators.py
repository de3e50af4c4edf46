"""
Unit tests for output generators
"""

import json

import pytest

from src.generators.base import EmitError
from src.generators.bfile_generator import BFileGenerator
from src.generators.csv_generator import CSVGenerator
from src.generators.emitter import emit
from src.generators.json_generator import JSONGenerator


@pytest.fixture
def sequence_records():
    return [{"n": 2, "t": 1}, {"n": 3, "t": 3}, {"n": 4, "t": 7}]


class TestCSVGenerator:
    """Tests for CSV output"""

    def test_header_and_rows(self, sequence_records):
        assert CSVGenerator().generate(sequence_records) == "n,t\n2,1\n3,3\n4,7"

    def test_none_renders_empty(self):
        records = [{"n": 3, "r1": 4, "r5": None}]
        assert CSVGenerator().generate(records) == "n,r1,r5\n3,4,"

    def test_empty_records_keep_header(self):
        assert CSVGenerator(["index", "perm"]).generate([]) == "index,perm"

    def test_perm_strings_are_quoted(self):
        assert CSVGenerator().generate([{"perm": "3,1,4,2"}]) == 'perm\n"3,1,4,2"'

    def test_rejects_mixed_records(self):
        with pytest.raises(EmitError):
            CSVGenerator().generate([{"n": 1}, {"m": 1}])


class TestJSONGenerator:
    """Tests for JSON lines output"""

    def test_one_object_per_line(self, sequence_records):
        lines = JSONGenerator().generate(sequence_records).splitlines()
        assert [json.loads(line) for line in lines] == sequence_records

    def test_key_order_is_kept(self):
        text = JSONGenerator().generate([{"z": 1, "a": 2}])
        assert text == '{"z": 1, "a": 2}'

    def test_empty(self):
        assert JSONGenerator().generate([]) == ""


class TestBFileGenerator:
    """Tests for b-file output"""

    def test_index_value_lines(self, sequence_records):
        assert BFileGenerator().generate(sequence_records) == "2 1\n3 3\n4 7"

    def test_needs_two_fields(self):
        with pytest.raises(EmitError):
            BFileGenerator().generate([{"n": 1, "m": 0, "count": 1}])

    def test_needs_integers(self):
        with pytest.raises(EmitError):
            BFileGenerator().generate([{"n": 1, "perm": "1"}])


class TestEmit:
    """Tests for format dispatch"""

    def test_dispatch(self, sequence_records):
        assert emit(sequence_records, "bfile") == "2 1\n3 3\n4 7"
        assert emit(sequence_records, "csv").startswith("n,t\n")

    def test_unknown_format(self, sequence_records):
        with pytest.raises(EmitError):
            emit(sequence_records, "xml")

    def test_fields_must_match(self, sequence_records):
        with pytest.raises(EmitError):
            emit(sequence_records, "csv", fields=["t", "n"])
