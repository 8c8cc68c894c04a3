"""Machine-readable report documents for the command-line frontend.

A report is an invocation record, a list of flat result rows, and run
metadata.  Exact rationals are serialized as ``"num/den"`` strings and
counts as decimal strings; floats never appear in integral-mode fields.
JSON round-trips losslessly and CSV output is byte-stable for identical
inputs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction


def fraction_str(value) -> str:
    """Exact ``num/den`` form, denominator always spelled out."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def approx_str(value) -> str:
    """Short decimal approximation companion to an exact field."""
    return format(float(Fraction(value)), ".12g")


def compact_number(value) -> str:
    """Human-facing exact form: integers bare, other rationals as a/b."""
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass
class ReportDocument:
    """One command invocation with its results and metadata."""

    command: dict
    results: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "results": self.results,
            "metadata": self.metadata,
        }
        return json.dumps(payload, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportDocument":
        payload = json.loads(text)
        return cls(
            command=payload["command"],
            results=payload["results"],
            metadata=payload["metadata"],
        )

    @property
    def columns(self) -> list:
        return list(self.command.get("columns", []))

    def to_csv(self) -> str:
        """UTF-8, LF line endings, header row first."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.results:
            writer.writerow([row.get(col, "") for col in self.columns])
        return buffer.getvalue()

    def to_markdown(self) -> str:
        cols = self.columns
        lines = ["| " + " | ".join(cols) + " |", "| " + " | ".join("---" for _ in cols) + " |"]
        for row in self.results:
            lines.append("| " + " | ".join(str(row.get(col, "")) for col in cols) + " |")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")
