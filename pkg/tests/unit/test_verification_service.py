"""
Unit tests for the verification service
"""

import pytest

from src.services.verification_service import (
    CheckResult,
    VerificationError,
    VerificationService,
    _partitions,
)
from src.utils.config import Config, ParallelConfig


@pytest.fixture
def service():
    return VerificationService(max_n=4)


class TestPartitions:
    """Tests for the integer partition helper"""

    def test_partitions_of_four(self):
        assert _partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_zero(self):
        assert _partitions(0) == [()]


class TestRun:
    """Tests for suite selection and reporting"""

    def test_unknown_suite(self, service):
        with pytest.raises(VerificationError):
            service.run(["table1", "tables"])

    def test_results_are_check_results(self, service):
        results = service.run(["seidel"])
        assert results
        assert all(isinstance(r, CheckResult) and r.suite == "seidel" for r in results)
        assert service.passed

    def test_results_reset_between_runs(self, service):
        first = len(service.run(["seidel"]))
        assert len(service.run(["seidel"])) == first

    def test_failed_check_is_recorded(self, service):
        service._expect("table1", "deliberate", 1, 2)
        assert not service.passed
        assert service.results[-1].detail == "got 1, expected 2"

    def test_workers_come_from_config(self):
        config = Config(parallel=ParallelConfig(workers=2))
        assert VerificationService(config).workers == 2


class TestSuites:
    """Each suite passes on a correct build at small sizes"""

    @pytest.mark.parametrize("suite", [
        "table1", "headline", "schedule", "monotonicity", "symmetry",
        "seidel", "collapsed", "turan",
    ])
    def test_fast_suites(self, service, suite):
        results = service.run([suite])
        assert results
        assert service.passed, [r for r in results if not r.passed]

    def test_table1_respects_max_n(self, service):
        names = [r.name for r in service.run(["table1"])]
        assert names == ["t_r(3)", "t_r(4)"]


@pytest.mark.slow
class TestAllSuites:
    """Every suite together"""

    def test_all_suites_pass(self, service):
        results = service.run()
        assert {r.suite for r in results} == set(VerificationService.SUITES)
        assert service.passed, [r for r in results if not r.passed]
