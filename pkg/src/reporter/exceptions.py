"""Custom exceptions for Reporter module."""


class ReporterError(Exception):
    """Base exception for Reporter module."""

    pass


class ReportFormatError(ReporterError):
    """Exception raised when a report holds a value JSON cannot represent."""

    pass


class ReportSaveError(ReporterError):
    """Exception raised when saving a report or table fails."""

    pass
