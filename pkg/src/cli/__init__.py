"""Command-line front-end."""

from .exceptions import CLIError, ProblemSpecError
from .orchestrator import CommandResult, Orchestrator, OrchestratorConfig
from .problem_spec import load_problem_spec

__all__ = [
    "CLIError",
    "ProblemSpecError",
    "CommandResult",
    "Orchestrator",
    "OrchestratorConfig",
    "load_problem_spec",
]
