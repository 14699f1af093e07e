"""Reporter writing JSON reports, CSV tables and console summaries."""

from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
from rich.console import Console

from ..types.models import CompletenessReport
from ..utils.logger import get_logger
from .exceptions import ReportSaveError
from .formatters import catalog_table, to_json_text, verdict_table

logger = get_logger(__name__)

CSV_FLOAT_FORMAT = "%.17g"


class Reporter:
    """Writes machine-readable results; human-readable output goes to stderr."""

    def __init__(self, output_dir: Optional[str] = None, console: Optional[Console] = None):
        """
        Initialize Reporter.

        Args:
            output_dir: Directory for report and table files (None: stdout only)
            console: Console for summaries (default: rich console on stderr)
        """
        self.output_dir = Path(output_dir) if output_dir else None
        self.console = console or Console(stderr=True)
        logger.debug(f"Reporter initialized (output_dir={self.output_dir})")

    def _target(self, file_name: str) -> Path:
        if self.output_dir is None:
            raise ReportSaveError(f"no output directory configured for {file_name}")
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise ReportSaveError(f"cannot create {self.output_dir}: {e}") from e
        return self.output_dir / file_name

    def save_json(self, data: Any, file_name: str) -> Path:
        """
        Save a report as deterministic JSON.

        Raises:
            ReportSaveError: If no output directory is configured or writing fails
        """
        path = self._target(file_name)
        try:
            path.write_text(to_json_text(data), encoding="utf-8")
        except OSError as e:
            raise ReportSaveError(f"cannot write {path}: {e}") from e
        logger.info(f"JSON report saved to {path}")
        return path

    def save_table(self, frame: pd.DataFrame, file_name: str) -> Path:
        """
        Save a table as CSV with 17 significant digits.

        Raises:
            ReportSaveError: If no output directory is configured or writing fails
        """
        path = self._target(file_name)
        try:
            frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
        except OSError as e:
            raise ReportSaveError(f"cannot write {path}: {e}") from e
        logger.info(f"Table saved to {path} ({len(frame)} rows)")
        return path

    def print_lines(self, lines: List[str]) -> None:
        for line in lines:
            self.console.print(line, markup=False, highlight=False)

    def print_verdicts(self, report: CompletenessReport) -> None:
        self.console.print(verdict_table(report))

    def print_catalog(self, entries: List[Dict[str, Any]]) -> None:
        self.console.print(catalog_table(entries))
