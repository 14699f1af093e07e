"""Reporter module for JSON reports, CSV tables and console summaries."""

from .reporter import Reporter
from .formatters import ReportEncoder, format_float, to_json_text
from .exceptions import ReporterError, ReportFormatError, ReportSaveError

__all__ = [
    "Reporter",
    "format_float",
    "to_json_text",
    "ReportEncoder",
    "ReporterError",
    "ReportFormatError",
    "ReportSaveError",
]
