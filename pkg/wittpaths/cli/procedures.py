"""
Procedures behind the witt-paths commands.

Each command is a pymeasure Procedure whose Parameters hold and validate the
command-line configuration:
    * CountProcedure: closed-form counters of one multidegree
    * OracleProcedure: brute-force word and necklace counts
    * DimsProcedure: generator dimensions by two routes
    * VerifyProcedure: product identities as truncated power series
    * TableProcedure: counters of every multidegree up to a total degree
"""

import logging
from typing import Any, Dict, List, Optional

from pymeasure.experiment import (
    BooleanParameter,
    IntegerParameter,
    ListParameter,
    Parameter,
)

from wittpaths.counters import identities, lie_dims, oracle
from wittpaths.counters.path_counts import (
    WittFunctionKind,
    theta,
    witt_F,
    witt_F_prime,
    witt_M,
)
from wittpaths.counters.sign_counts import (
    h_value,
    p_value,
    theta_minus,
    theta_plus,
    witt_G,
)
from wittpaths.kernels.numth import MultiDegree, compositions
from wittpaths.utilities import ConsistencyError, format_exact
from wittpaths.utilities.count_table import CountTable
from wittpaths.utilities.wittpaths_procedure import WittPathsProcedure

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

KIND_CHOICES = ["F", "G", "H"]
IDENTITY_CHOICES = [
    "sherman",
    "cancellation",
    "gen-witt",
    "plus-minus",
    "witt-classical",
]
ORACLE_CHOICES = ["words", "necklaces", "signed-necklaces"]


def parse_multidegree(procedure: WittPathsProcedure, text: str) -> MultiDegree:
    """Parse a multidegree and emit a notice when zero entries were stripped."""
    m = MultiDegree.parse(text)
    if len(text.split(",")) != m.rank:
        procedure.emit(
            "notice", f"zero entries stripped, using multidegree {format_tuple(m)}"
        )
    return m


def format_tuple(values) -> str:
    return ",".join(str(v) for v in values)


class CountProcedure(WittPathsProcedure):
    """Procedure evaluating every closed-form counter of one multidegree."""

    multidegree: Parameter = Parameter("Multidegree", default="1")

    COMMAND = "count"
    DATA_COLUMNS: List[str] = [
        "theta",
        "theta_plus",
        "theta_minus",
        "F",
        "F_prime",
        "G",
        "H",
        "P",
        "M",
    ]

    def input_echo(self) -> Dict[str, Any]:
        return {"multidegree": self.multidegree}

    def execute(self) -> None:
        m = parse_multidegree(self, self.multidegree)
        values: Dict[str, Any] = {
            "theta": theta(m),
            "theta_plus": theta_plus(m),
            "theta_minus": theta_minus(m),
        }
        if m.rank >= 2:
            values.update(
                {
                    "F": witt_F(m),
                    "F_prime": witt_F_prime(m),
                    "G": witt_G(m),
                    "H": h_value(m),
                    "P": p_value(m),
                }
            )
        values["M"] = witt_M(m)
        self.emit("results", values)


class OracleProcedure(WittPathsProcedure):
    """Procedure running one brute-force enumeration oracle."""

    which: ListParameter = ListParameter(
        "Oracle", choices=ORACLE_CHOICES, default="words"
    )
    multidegree: Parameter = Parameter("Multidegree", default="1")
    max_n: IntegerParameter = IntegerParameter(
        "Enumeration Bound", minimum=1, default=oracle.DEFAULT_MAX_N
    )
    listing: BooleanParameter = BooleanParameter("List Representatives", default=False)
    workers: IntegerParameter = IntegerParameter("Worker Threads", minimum=1, default=1)

    COMMAND = "oracle"
    DATA_COLUMNS: List[str] = ["total", "classes", "periodic_classes", "necklaces"]

    def input_echo(self) -> Dict[str, Any]:
        return {"oracle": self.which, "multidegree": self.multidegree}

    def execute(self) -> None:
        m = parse_multidegree(self, self.multidegree)
        if self.which == "words":
            classes = oracle.word_classes(m, max_n=self.max_n)
            if self.workers == 1:
                representatives = oracle.nonperiodic_from_classes(classes)
            else:
                representatives = oracle.nonperiodic_representatives(
                    m, max_n=self.max_n, workers=self.workers
                )
            total = sum(m.total // period for period in classes.values())
            self.emit(
                "results",
                {
                    "total": total,
                    "classes": len(representatives),
                    "periodic_classes": len(classes) - len(representatives),
                },
            )
            if self.listing:
                listing = [oracle.describe_blocks(b) for b in representatives]
                self.emit("listing", listing)
        elif self.which == "necklaces":
            self.emit("results", {"necklaces": oracle.necklace_M_oracle(m, self.max_n)})
        else:
            count = oracle.signed_necklace_oracle(m, self.max_n)
            self.emit("results", {"necklaces": count})


class DimsProcedure(WittPathsProcedure):
    """Procedure computing a generator dimension by expansion and by series."""

    kind: ListParameter = ListParameter(
        "Witt Function", choices=KIND_CHOICES, default="H"
    )
    multidegree: Parameter = Parameter("Multidegree", default="1,1")
    degree: IntegerParameter = IntegerParameter("Degree Bound", minimum=1, default=8)

    COMMAND = "dims"
    DATA_COLUMNS: List[str] = ["dims_faa", "dims_series", "agree"]

    def input_echo(self) -> Dict[str, Any]:
        return {"kind": self.kind, "k": self.multidegree, "degree": self.degree}

    def execute(self) -> None:
        k = parse_multidegree(self, self.multidegree)
        kind = WittFunctionKind(self.kind)
        by_expansion = lie_dims.dims_faa(kind, k)
        by_series = lie_dims.dims_series(kind, k, degree_bound=self.degree)
        agree = by_expansion == by_series
        self.emit(
            "results",
            {
                "dims_faa": by_expansion,
                "dims_series": by_series,
                "agree": "yes" if agree else "no",
            },
        )
        if not agree:
            self.outcome = "fail"
            raise ConsistencyError(
                f"Generator dimension routes disagree at {format_tuple(k)}: "
                f"{format_exact(by_expansion)} vs {format_exact(by_series)}."
            )


class VerifyProcedure(WittPathsProcedure):
    """Procedure checking one product identity coefficientwise."""

    identity: ListParameter = ListParameter(
        "Identity", choices=IDENTITY_CHOICES, default="sherman"
    )
    edges: IntegerParameter = IntegerParameter("Number of Edges", minimum=1, default=2)
    degree: IntegerParameter = IntegerParameter("Degree Bound", minimum=1, default=6)
    kind: ListParameter = ListParameter(
        "Witt Function", choices=KIND_CHOICES, default="H"
    )
    corrupt: Parameter = Parameter("Corrupted Multidegree", default="")
    corrupt_delta: IntegerParameter = IntegerParameter(
        "Corruption Shift", minimum=-1000, maximum=1000, default=1
    )

    COMMAND = "verify"
    DATA_COLUMNS: List[str] = ["passed"]

    def input_echo(self) -> Dict[str, Any]:
        echo: Dict[str, Any] = {
            "identity": self.identity,
            "edges": self.edges,
            "degree": self.degree,
        }
        if self.identity == "gen-witt":
            echo["kind"] = self.kind
        if self.corrupt:
            echo["corrupt"] = self.corrupt
        return echo

    def _corruption(self) -> Optional[identities.Corruption]:
        if not self.corrupt:
            return None
        try:
            vector = tuple(int(part) for part in self.corrupt.split(","))
        except ValueError:
            raise ValueError(
                f"Corrupted multidegree `{self.corrupt}` is malformed."
            ) from None
        if len(vector) != self.edges or min(vector) < 0 or not any(vector):
            raise ValueError(
                f"Corrupted multidegree `{self.corrupt}` needs {self.edges} "
                "nonnegative entries, not all zero."
            )
        return identities.Corruption(vector, delta=self.corrupt_delta)

    def execute(self) -> None:
        corruption = self._corruption()
        if self.identity == "sherman":
            report = identities.verify_sherman(self.edges, self.degree, corruption)
        elif self.identity == "cancellation":
            report = identities.verify_cancellation(self.edges, self.degree, corruption)
        elif self.identity == "plus-minus":
            report = identities.verify_plus_minus_products(
                self.edges, self.degree, corruption
            )
        elif self.identity == "gen-witt":
            report = identities.verify_gen_witt(
                WittFunctionKind(self.kind), self.edges, self.degree, corruption
            )
        else:
            report = identities.verify_witt_classical(
                self.edges, self.degree, corruption
            )
        self.emit("results", {"passed": "yes" if report.passed else "no"})
        if report.first_mismatch is not None:
            exponent, lhs, rhs = report.first_mismatch
            self.emit(
                "mismatch",
                {
                    "exponent": format_tuple(exponent),
                    "lhs": format_exact(lhs),
                    "rhs": None if rhs is None else format_exact(rhs),
                    "detail": report.detail,
                },
            )
            self.outcome = "fail"


class TableProcedure(WittPathsProcedure):
    """Procedure tabulating counters of every sorted multidegree up to a total."""

    edges: IntegerParameter = IntegerParameter("Number of Edges", minimum=1, default=2)
    max_total: IntegerParameter = IntegerParameter(
        "Maximal Total", minimum=1, default=6
    )
    output: Parameter = Parameter("CSV Output Path", default="")

    COMMAND = "table"
    DATA_COLUMNS: List[str] = ["rows"]
    TABLE_COLUMNS: List[str] = ["theta", "theta_plus", "theta_minus", "F", "M"]

    def input_echo(self) -> Dict[str, Any]:
        return {"edges": self.edges, "max_total": self.max_total}

    def build_table(self) -> CountTable:
        table = CountTable(self.TABLE_COLUMNS)
        for total in range(self.edges, self.max_total + 1):
            for entries in compositions(total, self.edges):
                if list(entries) != sorted(entries):
                    continue
                m = MultiDegree(entries)
                table.add_row(
                    m,
                    {
                        "theta": theta(m),
                        "theta_plus": theta_plus(m),
                        "theta_minus": theta_minus(m),
                        "F": witt_F(m) if m.rank >= 2 else "",
                        "M": witt_M(m),
                    },
                )
        return table

    def execute(self) -> None:
        table = self.build_table()
        df = table.export_df()
        if self.output:
            table.to_csv(self.output)
            self.emit("notice", f"table written to {self.output}")
        self.emit("results", {"rows": len(df)})
        self.emit("listing", table.to_string().splitlines())
