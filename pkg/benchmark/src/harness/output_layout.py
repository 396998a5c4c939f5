"""Output directory management for experiment results.

The output directory structure:
    <out>/
    ├── runs.csv        # one row per run
    ├── summary.csv     # one row per (algorithm, problem, n)
    └── config.json     # the validated configuration that produced them
"""

import json
import os
from pathlib import Path

from ..models.run_record import RunRecord, SummaryRow
from .csv_io import format_runs_csv, format_summary_csv


class OutputLayout:
    """Paths and atomic writers for an experiment output directory."""

    RUNS_FILE = "runs.csv"
    SUMMARY_FILE = "summary.csv"
    CONFIG_FILE = "config.json"

    @classmethod
    def get_runs_file(cls, out: Path) -> Path:
        """Get the absolute path to runs.csv."""
        return out.resolve() / cls.RUNS_FILE

    @classmethod
    def get_summary_file(cls, out: Path) -> Path:
        """Get the absolute path to summary.csv."""
        return out.resolve() / cls.SUMMARY_FILE

    @classmethod
    def get_config_file(cls, out: Path) -> Path:
        """Get the absolute path to config.json."""
        return out.resolve() / cls.CONFIG_FILE

    @classmethod
    def ensure_out_dir(cls, out: Path) -> None:
        """Create the output directory if necessary.

        Raises:
            PermissionError: If the directory exists but is not writable.
        """
        out.mkdir(parents=True, exist_ok=True)
        if not os.access(out, os.W_OK):
            raise PermissionError(
                f"Permission denied: Cannot write to directory {out}. "
                "Please check directory permissions and try again."
            )

    @staticmethod
    def write_atomic(path: Path, text: str) -> None:
        """Write `text` to `path` via a temp file and rename."""
        temp_path = path.with_suffix(path.suffix + ".tmp")
        with temp_path.open("w", encoding="utf-8", newline="") as f:
            f.write(text)
        temp_path.replace(path)

    @classmethod
    def write_results(
        cls,
        out: Path,
        records: list[RunRecord],
        summaries: list[SummaryRow],
        config: dict[str, object] | None = None,
    ) -> None:
        """Write runs.csv, summary.csv and, if given, config.json."""
        cls.ensure_out_dir(out)
        cls.write_atomic(cls.get_runs_file(out), format_runs_csv(records))
        cls.write_atomic(cls.get_summary_file(out), format_summary_csv(summaries))
        if config is not None:
            cls.write_atomic(
                cls.get_config_file(out), json.dumps(config, indent=2) + "\n"
            )
