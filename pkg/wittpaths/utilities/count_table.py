"""Tabulation of counter values for many multidegrees."""

from typing import Dict, List, Optional, Sequence, Union

import pandas as pd

from wittpaths.utilities import Exact, format_exact


class CountTable:
    """Table of exact counter values, one row per multidegree.

    Values are stored as exact strings so CSV export never passes through
    floating point.
    """

    def __init__(
        self, columns: Sequence[str], df: Optional[pd.DataFrame] = None
    ) -> None:
        """Set column names and optional initial data."""
        self.columns: List[str] = ["multidegree", "N", *columns]
        self.df: pd.DataFrame
        if df is None:
            self.df = pd.DataFrame(columns=self.columns, dtype=str)
        else:
            self.df = df
        self._rows: List[Dict[str, str]] = []

    def add_row(self, multidegree: Sequence[int], values: Dict[str, Exact]) -> None:
        """Append the values of one multidegree."""
        missing = set(self.columns[2:]) - set(values)
        if missing:
            raise ValueError(f"Row for {tuple(multidegree)} lacks columns {missing}.")
        row = {
            "multidegree": ",".join(str(v) for v in multidegree),
            "N": str(sum(multidegree)),
        }
        row.update({key: format_exact(values[key]) for key in self.columns[2:]})
        self._rows.append(row)

    def export_df(self) -> pd.DataFrame:
        """Return counter table dataframe."""
        if self._rows:
            new_rows = pd.DataFrame(self._rows, columns=self.columns, dtype=str)
            if self.df.empty:
                self.df = new_rows
            else:
                self.df = pd.concat((self.df, new_rows), ignore_index=True)
            self._rows = []
        return self.df

    def to_csv(self, path: Optional[str] = None) -> Union[str, None]:
        """Write the table as CSV to `path`, or return the CSV text."""
        return self.export_df().to_csv(path, index=False)

    def to_string(self) -> str:
        return self.export_df().to_string(index=False)

    @classmethod
    def read_csv(cls, path: str) -> "CountTable":
        """Load a table previously written by :meth:`to_csv`."""
        df = pd.read_csv(path, dtype=str)
        return cls(list(df.columns[2:]), df)
