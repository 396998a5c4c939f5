"""CSV serialization of run records and summary rows.

Floats are written with ``repr`` so that reading a file back reproduces the
exact values; booleans are written as ``true``/``false``.
"""

import csv
import io
from pathlib import Path

from ..models.run_record import (
    RUN_CSV_COLUMNS,
    SUMMARY_CSV_COLUMNS,
    RunRecord,
    RunRecordValue,
    SummaryRow,
)
from ..utils.errors import InvalidParameterError


def _cell(value: RunRecordValue) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_bool(text: str) -> bool:
    if text not in ("true", "false"):
        raise InvalidParameterError(f"Expected 'true' or 'false', got {text!r}")
    return text == "true"


def _format(columns: tuple[str, ...], rows: list[dict[str, RunRecordValue]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(_cell(row[column]) for column in columns)
    return buffer.getvalue()


def _rows(text: str, columns: tuple[str, ...]) -> list[dict[str, str]]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != columns:
        raise InvalidParameterError(
            f"Unexpected CSV header {reader.fieldnames}, expected {list(columns)}"
        )
    return list(reader)


def format_runs_csv(records: list[RunRecord]) -> str:
    """Serialize run records with the per-run header."""
    return _format(RUN_CSV_COLUMNS, [r.to_row() for r in records])


def format_summary_csv(rows: list[SummaryRow]) -> str:
    """Serialize summary rows with the summary header."""
    return _format(SUMMARY_CSV_COLUMNS, [r.to_dict() for r in rows])


def parse_runs_csv(text: str) -> list[RunRecord]:
    """Parse the output of `format_runs_csv`.

    Raises:
        InvalidParameterError: If the header or a cell is malformed.
    """
    return [
        RunRecord(
            algorithm=row["algorithm"],
            problem=row["problem"],
            n=int(row["n"]),
            run=int(row["run"]),
            seed=int(row["seed"]),
            evaluations=int(row["evaluations"]),
            iterations=int(row["iterations"]),
            best_fitness=int(row["best_fitness"]),
            hit_optimum=_parse_bool(row["hit_optimum"]),
            wall_ms=float(row["wall_ms"]),
        )
        for row in _rows(text, RUN_CSV_COLUMNS)
    ]


def parse_summary_csv(text: str) -> list[SummaryRow]:
    """Parse the output of `format_summary_csv`."""
    return [
        SummaryRow(
            algorithm=row["algorithm"],
            problem=row["problem"],
            n=int(row["n"]),
            runs=int(row["runs"]),
            mean_evals_per_n=float(row["mean_evals_per_n"]),
            std_evals_per_n=float(row["std_evals_per_n"]),
            mean_iterations=float(row["mean_iterations"]),
        )
        for row in _rows(text, SUMMARY_CSV_COLUMNS)
    ]


def read_runs_csv(path: Path) -> list[RunRecord]:
    """Read a runs.csv file."""
    return parse_runs_csv(path.read_text(encoding="utf-8"))


def read_summary_csv(path: Path) -> list[SummaryRow]:
    """Read a summary.csv file."""
    return parse_summary_csv(path.read_text(encoding="utf-8"))
