"""Sign/normalization ledgers: which variant of a printed formula is a soliton."""

from typing import Callable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from ..tensor.curvature import max_soliton_residual
from ..tensor.fields import SolitonSpec
from ..types.models import SignLedgerEntry, SignVariantResult
from ..utils.config import get_default_config
from ..utils.logger import get_logger
from .exceptions import CatalogVerificationError

logger = get_logger(__name__)

T = TypeVar("T")


def settle_variants(
    entry_id: str,
    variants: Sequence[Tuple[str, T]],
    to_spec: Callable[[T], SolitonSpec],
    points: np.ndarray,
    tolerance: Optional[float] = None,
) -> Tuple[SignLedgerEntry, T, SolitonSpec, float]:
    """
    Evaluate every variant and keep the first whose residual vanishes.

    The printed variant comes first, so it is kept whenever it works.

    Args:
        entry_id: Identifier recorded in the ledger
        variants: (label, candidate) pairs, printed form first
        to_spec: Builds the soliton candidate of a variant
        points: Sample points
        tolerance: Vanishing threshold (default: configured residual tolerance)

    Returns:
        (ledger, kept candidate, its SolitonSpec, its max residual)

    Raises:
        CatalogVerificationError: If no variant vanishes
    """
    tol = get_default_config().residual_tol if tolerance is None else tolerance
    results: List[SignVariantResult] = []
    kept: Optional[Tuple[str, T, SolitonSpec, float]] = None
    for label, candidate in variants:
        spec = to_spec(candidate)
        residual = max_soliton_residual(spec, points)
        vanishes = residual <= tol
        results.append(SignVariantResult(label=label, max_residual=residual, vanishes=vanishes))
        if vanishes and kept is None:
            kept = (label, candidate, spec, residual)

    written = variants[0][0]
    if kept is None:
        summary = ", ".join(f"{r.label}: {r.max_residual:.3e}" for r in results)
        raise CatalogVerificationError(f"{entry_id}: no variant within {tol:.1e} ({summary})")

    label, candidate, spec, residual = kept
    if label != written:
        logger.warning(f"{entry_id}: printed variant '{written}' fails, using '{label}'")
    ledger = SignLedgerEntry(
        entry_id=entry_id,
        written=written,
        used=label,
        matches_written=label == written,
        candidates=results,
    )
    return ledger, candidate, spec, residual
