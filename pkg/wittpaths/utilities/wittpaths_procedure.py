"""Base procedure module for witt-paths commands."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from time import monotonic
from typing import Any, Dict, List, Optional

from pymeasure.experiment import BooleanParameter, Procedure

from wittpaths.utilities import ResultTuple, WittPathsError, format_exact

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())


@dataclass
class OutputRecord:
    """Machine-readable result of one command.

    Values are exact strings: integers without denominator, rationals as `p/q`.
    """

    command: str
    input: Dict[str, Any]
    results: Dict[str, str] = field(default_factory=dict)
    status: str = "ok"
    mismatch: Optional[Dict[str, Any]] = None
    elapsed_ms: Optional[float] = None
    listing: Optional[List[str]] = None
    notices: List[str] = field(default_factory=list)

    def as_dict(self) -> Dict[str, Any]:
        record: Dict[str, Any] = {
            "command": self.command,
            "input": self.input,
            "results": self.results,
            "status": self.status,
        }
        if self.mismatch is not None:
            record["mismatch"] = self.mismatch
        if self.listing is not None:
            record["listing"] = self.listing
        if self.notices:
            record["notices"] = self.notices
        if self.elapsed_ms is not None:
            record["elapsed_ms"] = round(self.elapsed_ms, 3)
        return record

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def to_text(self) -> str:
        """Stable line-oriented rendering."""
        lines = [f"command: {self.command}"]
        lines.extend(f"input.{key}: {value}" for key, value in self.input.items())
        lines.extend(f"{key} = {value}" for key, value in self.results.items())
        if self.listing is not None:
            lines.extend(f"  {entry}" for entry in self.listing)
        if self.mismatch is not None:
            lines.extend(
                f"mismatch.{key}: {value}" for key, value in self.mismatch.items()
            )
        lines.append(f"status: {self.status}")
        if self.elapsed_ms is not None:
            lines.append(f"elapsed_ms: {self.elapsed_ms:.3f}")
        return "\n".join(lines)


class WittPathsProcedure(Procedure):
    """Base Procedure for witt-paths commands to subclass.

    Subclass procedures must define `COMMAND` and `DATA_COLUMNS` attributes and
    an `execute` method that reports results through `emit`. Running a
    procedure calls startup, execute and shutdown sequentially and collects
    everything emitted into an :class:`OutputRecord`.
    """

    timing = BooleanParameter("Report Timing", default=True)

    COMMAND: str = ""
    DATA_COLUMNS: List[str] = []

    def __init__(self, **kwargs) -> None:
        """Initialize result containers and set parameter values."""
        self._results: List[ResultTuple] = []
        self._listing: Optional[List[str]] = None
        self._mismatch: Optional[Dict[str, Any]] = None
        self._notices: List[str] = []
        self.outcome: str = "ok"
        super().__init__(**kwargs)

    def _check_errors(self) -> None:
        if not self.COMMAND:
            raise NotImplementedError(
                "Attribute `COMMAND` must be overridden by child class "
                f"`{self.__class__.__name__}`."
            )
        if not self.DATA_COLUMNS:
            raise NotImplementedError(
                "Attribute `DATA_COLUMNS` must be overridden by child class "
                f"`{self.__class__.__name__}`."
            )

    def input_echo(self) -> Dict[str, Any]:
        """Parameters echoed in the output record. Overwrite in subclass."""
        return {}

    def startup(self) -> None:
        """Validate parameters with pymeasure before running."""
        self._check_errors()
        self.refresh_parameters()

    def execute(self) -> None:
        """Compute and emit results."""
        raise NotImplementedError(
            "Method `execute` missing from procedure class "
            f"`{self.__class__.__name__}`."
        )

    def shutdown(self) -> None:
        log.debug("Command %s finished with status %s.", self.COMMAND, self.outcome)

    def emit(self, topic: str, record: Any) -> None:
        """Collect results instead of forwarding them to a pymeasure worker."""
        if topic == "results":
            for label, value in record.items():
                if label not in self.DATA_COLUMNS:
                    raise WittPathsError(
                        f"Result `{label}` missing from `DATA_COLUMNS` of "
                        f"`{self.__class__.__name__}`."
                    )
                self._results.append(ResultTuple(label, value))
        elif topic == "listing":
            self._listing = list(record)
        elif topic == "mismatch":
            self._mismatch = dict(record)
        elif topic == "notice":
            log.info("%s", record)
            self._notices.append(str(record))
        else:
            log.debug("Ignoring %s emission.", topic)

    def should_stop(self) -> bool:
        return False

    def run(self) -> OutputRecord:
        """Run startup, execute and shutdown, returning the collected record."""
        start = monotonic()
        self.startup()
        try:
            self.execute()
        finally:
            self.shutdown()
        elapsed = (monotonic() - start) * 1000 if self.timing else None
        return OutputRecord(
            command=self.COMMAND,
            input=self.input_echo(),
            results={label: format_exact(value) for label, value in self._results},
            status=self.outcome,
            mismatch=self._mismatch,
            elapsed_ms=elapsed,
            listing=self._listing,
            notices=self._notices,
        )
