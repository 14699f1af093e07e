"""Catalog of closed-form solitons EX21-EX26, each verified when built."""

import math
from fractions import Fraction
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..reductions.ansatz import RotationAnsatz, TranslationAnsatz
from ..reductions.constants import b_nk
from ..reductions.profiles import AnalyticProfile
from ..tensor.fields import ScalarField
from ..tensor.jets import log, power, sqrt
from ..tensor.sampling import domain_filter, sample_points
from ..types.models import CatalogEntry, Signature
from ..utils.logger import get_logger
from .exceptions import FamilyInputError, UnknownCatalogEntryError
from .ledger import settle_variants

logger = get_logger(__name__)

SEMI_SPACE_MARGIN = 1e-3

Ansatz = Union[TranslationAnsatz, RotationAnsatz]
Distance = Callable[[np.ndarray], float]


class _Draft(NamedTuple):
    """Unverified entry: sign variants of one ansatz plus its domain."""

    params: Dict[str, float]
    signature: Signature
    variants: List[Tuple[str, Ansatz]]
    k: int
    lam: float
    lam_exact: str
    k_range: Tuple[int, int]
    box_lo: List[float]
    box_hi: List[float]
    distance: Optional[Distance]
    margin: Optional[float]


class _Recipe(NamedTuple):
    description: str
    defaults: Dict[str, float]
    build: Callable[[Dict[str, float], Optional[Signature]], _Draft]


def _exact(value: float) -> str:
    """Shortest rational spelling of value when it is exact, else its repr."""
    fraction = Fraction(value).limit_denominator()
    return str(fraction) if float(fraction) == value else repr(value)


def _integer(params: Dict[str, float], key: str) -> int:
    value = params[key]
    if value != int(value):
        raise FamilyInputError(f"'{key}' must be an integer, got {value}")
    return int(value)


def _order(params: Dict[str, float], lo_k: int = 1) -> Tuple[int, int]:
    n, k = _integer(params, "n"), _integer(params, "k")
    if n < 2 or not lo_k <= k <= n:
        raise FamilyInputError(f"need n >= 2 and {lo_k} <= k <= n, got n={n}, k={k}")
    return n, k


def _signature(sig: Optional[Signature], n: int, default: Signature) -> Signature:
    chosen = sig or default
    if chosen.n != n:
        raise FamilyInputError(f"signature has {chosen.n} entries, expected {n}")
    return chosen


def _first_axis_box(n: int, x1: Tuple[float, float]) -> Tuple[List[float], List[float]]:
    return [x1[0]] + [-1.0] * (n - 1), [x1[1]] + [1.0] * (n - 1)


def _ex21(params: Dict[str, float], sig: Optional[Signature]) -> _Draft:
    n, k = _order(params)
    if n < 3:
        raise FamilyInputError(f"EX21 needs n >= 3, got n={n}")
    theta = _integer(params, "theta")
    if theta < 1:
        raise FamilyInputError(f"theta must be a positive integer, got {theta}")
    c, d = params["c"], params["d"]
    signature = _signature(sig, n, Signature.lorentzian(n))
    alpha = [1, 1] + [0] * (n - 2)
    phi = AnalyticProfile(lambda s: 1.0 / (1.0 + s ** (2 * theta)), name="phi_ex21")

    def potential(sign: float) -> AnalyticProfile:
        a = sign * c
        return AnalyticProfile(
            lambda s: a * s
            + 2 * a * s ** (2 * theta + 1) / (2 * theta + 1)
            + a * s ** (4 * theta + 1) / (4 * theta + 1)
            + d,
            name="f_ex21",
        )

    variants: List[Tuple[str, Ansatz]] = [
        (label, TranslationAnsatz(signature, alpha, phi, potential(sign), name="EX21"))
        for label, sign in (("+c", 1.0), ("-c", -1.0))
    ]
    lo, hi = [-1.0] * n, [1.0] * n
    return _Draft(params, signature, variants, k, 0.0, "0", (1, n), lo, hi, None, None)


def _ex22(params: Dict[str, float], sig: Optional[Signature]) -> _Draft:
    n, k = _order(params)
    if n == 2 * k:
        raise FamilyInputError(f"EX22 needs n != 2k, got n={n}, k={k}")
    c0, c1 = params["c0"], params["c1"]
    signature = _signature(sig, n, Signature.euclidean(n))
    alpha = [1] + [0] * (n - 1)
    exponent = 2 * k / (2 * k - n)
    phi = AnalyticProfile(lambda s: power(s + c1, exponent), name="phi_ex22")
    # f is constant, so its sign never enters the residual
    f = AnalyticProfile.constant(c0)
    variants: List[Tuple[str, Ansatz]] = [
        ("f=c0", TranslationAnsatz(signature, alpha, phi, f, name="EX22"))
    ]
    lo, hi = _first_axis_box(n, (0.0, 2.0))

    def distance(x: np.ndarray) -> float:
        return float(x[0]) + c1

    return _Draft(
        params, signature, variants, k, 0.0, "0", (1, n), lo, hi, distance, SEMI_SPACE_MARGIN
    )


def _ex23(params: Dict[str, float], sig: Optional[Signature]) -> _Draft:
    n = _integer(params, "n")
    if n < 4 or n % 2 != 0:
        raise FamilyInputError(f"EX23 needs an even n >= 4, got n={n}")
    k = n // 2
    if "k" in params and params["k"] != k:
        raise FamilyInputError(f"EX23 fixes k = n/2 = {k}, got k={params['k']}")
    params = {**params, "k": float(k)}
    c3, c4 = params["c3"], params["c4"]
    c = float(b_nk(n, k)) * n * n
    params["c"] = c
    signature = _signature(sig, n, Signature.euclidean(n))
    alpha = [1] + [0] * (n - 1)
    scale = n / (n - 1)
    phi = AnalyticProfile(lambda s: power(scale * s + c4, (n - 1) / n), name="phi_ex23")

    def potential(sign: float) -> AnalyticProfile:
        a = -sign * c * (n - 1) / (n - 2)
        return AnalyticProfile(lambda s: a * power(scale * s + c4, 2 / n - 1) + c3, name="f_ex23")

    variants: List[Tuple[str, Ansatz]] = [
        (label, TranslationAnsatz(signature, alpha, phi, potential(sign), name="EX23"))
        for label, sign in (("-c(n-1)/(n-2)", 1.0), ("+c(n-1)/(n-2)", -1.0))
    ]
    lo, hi = _first_axis_box(n, (0.0, 2.0))

    def distance(x: np.ndarray) -> float:
        return scale * float(x[0]) + c4

    return _Draft(
        params, signature, variants, k, 0.0, "0", (k, k), lo, hi, distance, SEMI_SPACE_MARGIN
    )


def _ex24(params: Dict[str, float], sig: Optional[Signature]) -> _Draft:
    n, k = _order(params)
    lam, c1 = params["lambda"], params["c1"]
    signature = _signature(sig, n, Signature.euclidean(n))
    phi = AnalyticProfile.constant(1.0, name="phi_ex24")
    interval = (-math.inf, math.inf)
    variants: List[Tuple[str, Ansatz]] = []
    for label, a in (
        ("lambda/2", lam / 2),
        ("-lambda/2", -lam / 2),
        ("(n-1)lambda", (n - 1) * lam),
        ("-(n-1)lambda", -(n - 1) * lam),
    ):
        f = AnalyticProfile(lambda r, a=a: a * r + c1, name="f_ex24")
        variants.append((label, RotationAnsatz(signature, phi, f, interval, name="EX24")))
    lo, hi = [-1.0] * n, [1.0] * n
    return _Draft(params, signature, variants, k, lam, _exact(lam), (1, n), lo, hi, None, None)


def _ex25(params: Dict[str, float], sig: Optional[Signature]) -> _Draft:
    n, k = _order(params, lo_k=2)
    c0, lam, c1 = params["c0"], params["lambda"], params["c1"]
    if not c0 > 0:
        raise FamilyInputError(f"c0 must be positive, got {c0}")
    signature = _signature(sig, n, Signature.euclidean(n))
    interval = (0.0, math.inf)
    phi = AnalyticProfile(lambda r: c0 * r, name="phi_ex25", interval=interval)
    a = -(n - 1) * lam / c0**2
    variants: List[Tuple[str, Ansatz]] = []
    for label, coefficient in (("-(n-1)lambda/(c0^2 r)", a), ("+(n-1)lambda/(c0^2 r)", -a)):
        f = AnalyticProfile(
            lambda r, b=coefficient: b / r + c1, name="f_ex25", interval=interval
        )
        variants.append((label, RotationAnsatz(signature, phi, f, interval, name="EX25")))
    lo, hi = [0.5] * n, [1.5] * n
    return _Draft(params, signature, variants, k, lam, _exact(lam), (2, n), lo, hi, None, None)


def _ex26(params: Dict[str, float], sig: Optional[Signature]) -> _Draft:
    n = _integer(params, "n")
    if n < 2:
        raise FamilyInputError(f"EX26 needs n >= 2, got n={n}")
    if "k" in params and params["k"] != 1:
        raise FamilyInputError(f"EX26 is a k = 1 soliton, got k={params['k']}")
    params = {**params, "k": 1.0}
    c0 = params["c0"]
    lam = Fraction(n - 2, 2)
    signature = _signature(sig, n, Signature.euclidean(n))
    interval = (-1.0, math.inf)
    phi = AnalyticProfile(lambda r: sqrt(1.0 + r), name="phi_ex26", interval=interval)
    weight = (n - 1) * (n + 2) / 2
    variants: List[Tuple[str, Ansatz]] = []
    for label, a in (("+(n-1)(n+2)/2", weight), ("-(n-1)(n+2)/2", -weight)):
        f = AnalyticProfile(lambda r, a=a: a * log(1.0 + r) + c0, name="f_ex26", interval=interval)
        variants.append((label, RotationAnsatz(signature, phi, f, interval, name="EX26")))
    lo, hi = [-1.0] * n, [1.0] * n
    params["lambda"] = float(lam)
    return _Draft(params, signature, variants, 1, float(lam), str(lam), (1, 1), lo, hi, None, None)


_CATALOG: Dict[str, _Recipe] = {
    "EX21": _Recipe(
        "Lorentzian steady soliton, phi = 1/(1+xi^(2 theta)), xi = x1 + x2 light-like",
        {"n": 3, "k": 1, "theta": 1, "c": 1.0, "d": 0.0},
        _ex21,
    ),
    "EX22": _Recipe(
        "Steady soliton, phi^((2k-n)/(2k)) = xi + c1, constant f, semi-space xi + c1 > 0",
        {"n": 3, "k": 1, "c0": 0.0, "c1": 1.0},
        _ex22,
    ),
    "EX23": _Recipe(
        "Steady soliton with n = 2k, phi = (n xi/(n-1) + c4)^((n-1)/n), semi-space",
        {"n": 4, "c3": 0.0, "c4": 1.0},
        _ex23,
    ),
    "EX24_GAUSSIAN": _Recipe(
        "Gaussian soliton, flat metric with quadratic potential",
        {"n": 3, "k": 1, "lambda": 0.0, "c1": 0.0},
        _ex24,
    ),
    "EX25_LINEAR": _Recipe(
        "Riemannian soliton on R^n minus the origin, phi = c0 r, k >= 2",
        {"n": 3, "k": 2, "c0": 1.0, "lambda": 1.0, "c1": 0.0},
        _ex25,
    ),
    "EX26_CIGARLIKE": _Recipe(
        "Riemannian k = 1 soliton, phi = sqrt(1+r), lambda = (n-2)/2 (cigar for n = 2)",
        {"n": 3, "c0": 0.0},
        _ex26,
    ),
}

_ALIASES = {"EX24": "EX24_GAUSSIAN", "EX25": "EX25_LINEAR", "EX26": "EX26_CIGARLIKE"}


def _recipe(entry_id: str) -> Tuple[str, _Recipe]:
    key = _ALIASES.get(entry_id.upper(), entry_id.upper())
    if key not in _CATALOG:
        raise UnknownCatalogEntryError(
            f"unknown catalog id '{entry_id}'; known ids: {', '.join(catalog_ids())}"
        )
    return key, _CATALOG[key]


def _draft(
    entry_id: str, params: Dict[str, Any], signature: Optional[Signature]
) -> Tuple[str, _Recipe, _Draft]:
    key, recipe = _recipe(entry_id)
    allowed = set(recipe.defaults) | {"k"}
    unknown = sorted(set(params) - allowed)
    if unknown:
        raise FamilyInputError(f"{key}: unknown parameters {unknown}; allowed {sorted(allowed)}")
    merged: Dict[str, float] = {}
    for name, value in {**recipe.defaults, **params}.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise FamilyInputError(f"{key}: parameter '{name}' must be numeric, got {value!r}")
        merged[name] = float(value)
    return key, recipe, recipe.build(merged, signature)


def catalog_ids() -> List[str]:
    return list(_CATALOG)


def is_catalog_id(entry_id: str) -> bool:
    key = _ALIASES.get(entry_id.upper(), entry_id.upper())
    return key in _CATALOG


def canonical_id(entry_id: str) -> str:
    """
    Resolve aliases (EX24, EX25, EX26) and case to the catalog key.

    Raises:
        UnknownCatalogEntryError: If the id is unknown
    """
    return _recipe(entry_id)[0]


def catalog_defaults(entry_id: str) -> Dict[str, float]:
    return dict(_recipe(entry_id)[1].defaults)


def describe_catalog() -> List[Dict[str, Any]]:
    """Id, description and default parameters of every entry."""
    return [
        {"id": key, "description": recipe.description, "defaults": dict(recipe.defaults)}
        for key, recipe in _CATALOG.items()
    ]


def catalog(
    entry_id: str,
    seed: int = 0,
    count: Optional[int] = None,
    signature: Optional[Sequence[int]] = None,
    **params: Any,
) -> CatalogEntry:
    """
    Build and verify a catalog entry.

    Every sign variant is evaluated on quasi-random points of the domain
    box; the first one whose soliton residual vanishes (printed form first)
    becomes the entry's SolitonSpec.

    Args:
        entry_id: Catalog id (EX21, EX22, EX23, EX24_GAUSSIAN, EX25_LINEAR, EX26_CIGARLIKE)
        seed: Sampling seed
        count: Verification points (default: configured sample count)
        signature: Background signature (default: the entry's own)
        **params: Overrides of the entry's default constants

    Returns:
        Verified CatalogEntry

    Raises:
        UnknownCatalogEntryError: If the id is unknown
        FamilyInputError: If a parameter is unknown or outside its domain
        CatalogVerificationError: If no variant vanishes
    """
    sig = None if signature is None else Signature(eps=list(signature))
    key, recipe, draft = _draft(entry_id, params, sig)
    first = draft.variants[0][1]
    distance = draft.distance
    if distance is None and isinstance(first, RotationAnsatz):
        distance = first.distance_to_boundary
    accept = domain_filter(first.phi_field(), distance, margin=draft.margin)
    points = sample_points(draft.box_lo, draft.box_hi, count=count, seed=seed, accept=accept)

    lam = draft.lam
    ledger, ansatz, spec, residual = settle_variants(
        key, draft.variants, lambda a: a.to_soliton_spec(draft.k, lam), points
    )
    logger.info(
        f"Catalog {key}: n={spec.n}, k={spec.k}, lambda={draft.lam}, "
        f"residual {residual:.3e} over {len(points)} points, kept '{ledger.used}'"
    )
    return CatalogEntry(
        id=key,
        description=recipe.description,
        params=draft.params,
        spec=spec,
        ansatz=ansatz,
        expected_lambda=lam,
        expected_lambda_exact=draft.lam_exact,
        k_range=draft.k_range,
        box_lo=draft.box_lo,
        box_hi=draft.box_hi,
        sign_variant=ledger,
        max_residual=residual,
        sample_count=len(points),
        accept=accept,
    )


def catalog_metric(
    entry_id: str, signature: Optional[Sequence[int]] = None, **params: Any
) -> Tuple[ScalarField, Signature]:
    """
    Conformal factor of a catalog entry, optionally on another signature.

    No verification is done: a signature analogue (for instance the
    Riemannian version of EX21) is a metric for geodesic work, not a soliton.

    Returns:
        (phi field, signature)
    """
    sig = None if signature is None else Signature(eps=list(signature))
    _, _, draft = _draft(entry_id, params, sig)
    return draft.variants[0][1].phi_field(), draft.signature
