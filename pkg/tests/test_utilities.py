from fractions import Fraction

import pytest

from wittpaths.utilities import (
    ConsistencyError,
    EnumerationBoundError,
    WittPathsError,
    format_exact,
    require_integer,
)
from wittpaths.utilities.count_table import CountTable
from wittpaths.utilities.wittpaths_procedure import OutputRecord, WittPathsProcedure


def test_format_exact():
    assert format_exact(7) == "7"
    assert format_exact(Fraction(6, 3)) == "2"
    assert format_exact(Fraction(-4, 6)) == "-2/3"
    assert format_exact("yes") == "yes"
    with pytest.raises(TypeError):
        format_exact(0.5)
    with pytest.raises(TypeError):
        format_exact(True)


def test_require_integer():
    assert require_integer(Fraction(8, 2), "x") == 4
    assert require_integer(-3, "x", nonnegative=False) == -3
    with pytest.raises(ConsistencyError):
        require_integer(Fraction(1, 2), "x")
    with pytest.raises(ConsistencyError):
        require_integer(-1, "x")


def test_error_hierarchy():
    assert issubclass(ConsistencyError, WittPathsError)
    assert issubclass(EnumerationBoundError, WittPathsError)


class TestCountTable:
    def test_rows_and_csv(self):
        table = CountTable(["theta"])
        table.add_row((1, 2), {"theta": 4})
        table.add_row((2, 2), {"theta": Fraction(10)})
        assert table.to_csv() == "multidegree,N,theta\n\"1,2\",3,4\n\"2,2\",4,10\n"
        assert len(table.export_df()) == 2

    def test_missing_column(self):
        table = CountTable(["theta", "M"])
        with pytest.raises(ValueError):
            table.add_row((1, 1), {"theta": 4})

    def test_appends_to_existing_frame(self, tmp_path):
        path = tmp_path / "table.csv"
        table = CountTable(["M"])
        table.add_row((1, 1), {"M": 1})
        table.to_csv(str(path))
        loaded = CountTable.read_csv(str(path))
        loaded.add_row((2, 2), {"M": 1})
        assert list(loaded.export_df()["multidegree"]) == ["1,1", "2,2"]


class EmptyProcedure(WittPathsProcedure):
    pass


class EchoProcedure(WittPathsProcedure):
    COMMAND = "echo"
    DATA_COLUMNS = ["value"]

    def execute(self):
        self.emit("results", {"value": Fraction(1, 3)})
        self.emit("notice", "hello")


class BadLabelProcedure(EchoProcedure):
    def execute(self):
        self.emit("results", {"other": 1})


class NoExecuteProcedure(WittPathsProcedure):
    COMMAND = "noop"
    DATA_COLUMNS = ["value"]


class TestProcedure:
    def test_record(self):
        record = EchoProcedure(timing=False).run()
        assert record.results == {"value": "1/3"}
        assert record.notices == ["hello"]
        assert record.elapsed_ms is None
        assert record.as_dict() == {
            "command": "echo",
            "input": {},
            "results": {"value": "1/3"},
            "status": "ok",
            "notices": ["hello"],
        }

    def test_missing_command(self):
        with pytest.raises(NotImplementedError):
            EmptyProcedure().run()

    def test_missing_execute(self):
        with pytest.raises(NotImplementedError):
            NoExecuteProcedure().run()

    def test_unknown_result_label(self):
        with pytest.raises(WittPathsError):
            BadLabelProcedure().run()


def test_output_record_text():
    record = OutputRecord(
        command="verify",
        input={"identity": "sherman"},
        results={"passed": "no"},
        status="fail",
        mismatch={"exponent": "1,1"},
        elapsed_ms=1.23456,
    )
    assert record.to_text().splitlines() == [
        "command: verify",
        "input.identity: sherman",
        "passed = no",
        "mismatch.exponent: 1,1",
        "status: fail",
        "elapsed_ms: 1.235",
    ]
    assert record.as_dict()["elapsed_ms"] == 1.235
