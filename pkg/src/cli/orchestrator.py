"""Orchestrator dispatching problem specs to the numerical packages."""

import math
from pathlib import Path
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel

from ..families import (
    canonical_id,
    catalog,
    catalog_defaults,
    catalog_metric,
    family_lightlike_steady,
    family_rotation_null_curvature,
    family_translation_n_eq_2k,
    family_translation_n_ne_2k,
    family_translation_phi_const,
    is_catalog_id,
    potential_from_phi,
    reduced_table,
)
from ..geodesics import (
    completeness_probe,
    first_integral_drift,
    integrate,
    lightlike_invariant_columns,
    speed_drift,
)
from ..quadrature import (
    ImplicitRelation,
    admissible_xi_range,
    build_profile,
    profile_from_table,
    read_profile_csv,
)
from ..reductions import (
    AnalyticProfile,
    RotationAnsatz,
    TabulatedProfile,
    TranslationAnsatz,
    rotation_residuals,
    rotation_sigma_k,
    to_fraction,
    translation_residuals,
    translation_sigma_k,
)
from ..reporter import Reporter
from ..reporter.formatters import (
    format_certificate_lines,
    format_geodesic_lines,
    format_verify_lines,
)
from ..tensor import (
    ScalarField,
    SolitonSpec,
    curvature_pack,
    domain_filter,
    max_soliton_residual,
    sample_points,
)
from ..types.models import (
    CompletenessReport,
    CurvatureReport,
    FamilyCertificate,
    FamilyParams,
    FamilyTag,
    GeodesicReport,
    GeodesicState,
    ProblemSpec,
    ProfileTable,
    ReduceReport,
    SignLedgerEntry,
    Signature,
    VerifyReport,
)
from ..utils.config import NumericsConfig, set_default_config
from ..utils.logger import get_logger
from .exceptions import ProblemSpecError
from .problem_spec import load_problem_spec, resolve_table_path

logger = get_logger(__name__)

Ansatz = Union[TranslationAnsatz, RotationAnsatz]
Box = Tuple[List[float], List[float]]

COMMANDS = ("verify", "curvature", "reduce", "family", "solve-implicit", "geodesic", "probe")
IMPLICIT_TAGS = (FamilyTag.TRANSLATION_N_NE_2K, FamilyTag.TRANSLATION_N_EQ_2K)
ROUND_TRIP_TOL = 1e-9
DEFAULT_XI_HALF_WIDTH = 0.5
ADMISSIBLE_SHARE = 0.9
TABLE_EDGE_INSET = 0.01
PROBE_DEFAULT_INITS = 20


class OrchestratorConfig:
    """Configuration for Orchestrator."""

    def __init__(
        self,
        command: str,
        spec_path: str,
        output_dir: Optional[str] = None,
        tolerance: Optional[float] = None,
        seed: Optional[int] = None,
        points: Optional[int] = None,
        threads: Optional[int] = None,
        verbose: bool = False,
    ):
        """
        Initialize orchestrator configuration.

        Args:
            command: One of the spec-driven subcommands
            spec_path: JSON problem spec
            output_dir: Directory for reports and tables (None: stdout only)
            tolerance: Residual tolerance override
            seed: Sampling seed override (default: spec seed, else 0)
            points: Sample point count override
            threads: Worker cap for batch work
            verbose: Enable verbose logging
        """
        if command not in COMMANDS:
            raise ValueError(f"unknown command '{command}', expected one of {COMMANDS}")
        self.command = command
        self.spec_path = spec_path
        self.output_dir = output_dir
        self.tolerance = tolerance
        self.seed = seed
        self.points = points
        self.threads = threads
        self.verbose = verbose


class CommandResult(NamedTuple):
    """Report of one command plus its pass flag and console summary."""

    report: BaseModel
    passed: bool
    lines: List[str]
    files: List[str]


class _Subject(NamedTuple):
    """Soliton candidate (or bare metric) resolved from a problem spec."""

    source: str
    phi: ScalarField
    sig: Signature
    k: int
    lam: float
    spec: Optional[SolitonSpec]
    ansatz: Optional[Ansatz]
    box: Box
    accept: Optional[Callable[[np.ndarray], bool]]
    expected_lambda: Optional[str]
    ledger: Optional[SignLedgerEntry]
    constants: Dict[str, Any]
    tag: str
    table: Optional[ProfileTable]
    relation: Optional[ImplicitRelation]


class Orchestrator:
    """
    Runs one spec-driven command.

    Stages:
    1. Problem spec loading
    2. Candidate construction and the numerical work of the command
    3. Report output
    """

    def __init__(self, config: OrchestratorConfig, reporter: Optional[Reporter] = None):
        """
        Initialize orchestrator.

        Args:
            config: Orchestrator configuration
            reporter: Reporter (default: one writing to config.output_dir)
        """
        self.config = config
        overrides: Dict[str, Any] = {"threads": config.threads}
        if config.tolerance is not None:
            overrides["residual_tol"] = config.tolerance
        if config.points is not None:
            overrides["sample_points"] = config.points
        self.numerics = NumericsConfig(**overrides)
        set_default_config(self.numerics)
        self.reporter = reporter or Reporter(config.output_dir)
        self.seed = 0
        logger.info(f"Orchestrator initialized: command={config.command}, spec={config.spec_path}")

    def run(self) -> CommandResult:
        """
        Execute the configured command.

        Returns:
            CommandResult

        Raises:
            ProblemSpecError: If the spec is unreadable or inconsistent
            FamilyError, QuadratureError, GeodesicError, TensorCoreError: From the work itself
        """
        logger.info("[1/3] 문제 정의 읽는 중...")
        spec = load_problem_spec(self.config.spec_path)
        self.seed = self.config.seed if self.config.seed is not None else (spec.seed or 0)

        logger.info(f"[2/3] '{self.config.command}' 실행 중...")
        handlers: Dict[str, Callable[[ProblemSpec], CommandResult]] = {
            "verify": self._verify,
            "curvature": self._curvature,
            "reduce": self._reduce,
            "family": self._family,
            "solve-implicit": self._solve_implicit,
            "geodesic": self._geodesic,
            "probe": self._probe,
        }
        result = handlers[self.config.command](spec)

        logger.info("[3/3] 리포트 저장 중...")
        files = list(result.files)
        if self.config.output_dir:
            name = f"{self.config.command.replace('-', '_')}_report.json"
            files.append(str(self.reporter.save_json(result.report, name)))
        logger.info(f"✓ '{self.config.command}' 완료 (판정: {'통과' if result.passed else '실패'})")
        return result._replace(files=files)

    # ------------------------------------------------------------------
    # Candidate resolution
    # ------------------------------------------------------------------

    def _subject(self, spec: ProblemSpec) -> _Subject:
        family = spec.family
        if family is not None and family.tag != FamilyTag.CATALOG:
            return self._family_subject(spec, family)
        if family is not None:
            params = {key: value for key, value in family.params.items() if key != "id"}
            entry_id = family.params.get("id")
            if not isinstance(entry_id, str):
                raise ProblemSpecError("family.params.id must name a catalog entry")
            return self._catalog_subject(spec, entry_id, params)
        if spec.ansatz is None:
            raise ProblemSpecError("spec needs an 'ansatz' or a 'family' section")
        if is_catalog_id(spec.ansatz.profile):
            return self._catalog_subject(spec, spec.ansatz.profile, {})
        return self._table_subject(spec, None)

    def _catalog_params(
        self, spec: ProblemSpec, entry_id: str, params: Dict[str, Any]
    ) -> Dict[str, Any]:
        defaults = catalog_defaults(entry_id)
        merged: Dict[str, Any] = {"n": spec.n, "k": spec.k, **params}
        if "lambda" in defaults and "lambda" not in params:
            merged["lambda"] = spec.lambda_
        return merged

    def _catalog_subject(
        self, spec: ProblemSpec, entry_id: str, params: Dict[str, Any]
    ) -> _Subject:
        merged = self._catalog_params(spec, entry_id, params)
        entry = catalog(
            entry_id,
            seed=self.seed,
            count=self.numerics.sample_points,
            signature=spec.signature,
            **merged,
        )
        if entry.expected_lambda != spec.lambda_:
            logger.warning(
                f"{entry.id}: spec lambda {spec.lambda_} differs from the entry's "
                f"{entry.expected_lambda_exact}; the entry's value is used"
            )
        return _Subject(
            source=entry.id,
            phi=entry.spec.phi,
            sig=entry.spec.signature,
            k=entry.spec.k,
            lam=entry.expected_lambda,
            spec=entry.spec,
            ansatz=entry.ansatz,
            box=(list(entry.box_lo), list(entry.box_hi)),
            accept=entry.accept,
            expected_lambda=entry.expected_lambda_exact,
            ledger=entry.sign_variant,
            constants=dict(entry.params),
            tag=entry.id,
            table=None,
            relation=None,
        )

    def _alpha(self, spec: ProblemSpec, default: List[int]) -> List[Any]:
        if spec.ansatz is not None and spec.ansatz.alpha is not None:
            if len(spec.ansatz.alpha) != spec.n:
                raise ProblemSpecError(f"ansatz.alpha needs {spec.n} entries")
            return list(spec.ansatz.alpha)
        return default

    def _alpha_norm2(self, spec: ProblemSpec, alpha: List[Any]) -> float:
        total = sum(e * to_fraction(a) ** 2 for e, a in zip(spec.signature, alpha))
        return float(total)

    def _translation_subject(
        self,
        spec: ProblemSpec,
        ansatz: TranslationAnsatz,
        lam: float,
        tag: str,
        constants: Dict[str, Any],
        xi_window: Optional[Tuple[float, float]] = None,
        table: Optional[ProfileTable] = None,
        relation: Optional[ImplicitRelation] = None,
    ) -> _Subject:
        phi = ansatz.phi_field()
        base = domain_filter(phi)
        if xi_window is None:
            box: Box = ([-1.0] * spec.n, [1.0] * spec.n)
            accept = base
        else:
            a, b = xi_window
            inset = TABLE_EDGE_INSET * (b - a)
            lo_xi, hi_xi = a + inset, b - inset
            reach = max(abs(a), abs(b)) / max(abs(float(c)) for c in ansatz.alpha)
            box = ([-reach] * spec.n, [reach] * spec.n)

            def accept(point: np.ndarray) -> bool:
                xi = float(np.dot(ansatz.alpha, point))
                return lo_xi < xi < hi_xi and base(point)

        return _Subject(
            source=tag,
            phi=phi,
            sig=spec.sig,
            k=spec.k,
            lam=lam,
            spec=ansatz.to_soliton_spec(spec.k, lam),
            ansatz=ansatz,
            box=box,
            accept=accept,
            expected_lambda=None,
            ledger=None,
            constants=constants,
            tag=tag,
            table=table,
            relation=relation,
        )

    def _table_profile(self, reference: str) -> TabulatedProfile:
        path = resolve_table_path(reference, self.config.spec_path)
        if path is None:
            raise ProblemSpecError(
                f"profile '{reference}' is neither a catalog id nor an existing table file"
            )
        return read_profile_csv(path)

    def _table_subject(self, spec: ProblemSpec, family: Optional[FamilyParams]) -> _Subject:
        assert spec.ansatz is not None
        if spec.ansatz.type != "translation":
            raise ProblemSpecError("table profiles are translation profiles (ansatz.type)")
        profile = self._table_profile(spec.ansatz.profile)
        c = family.number("c", 0.0) if family else 0.0
        d = family.number("d", 0.0) if family else 0.0
        alpha = self._alpha(spec, [1] + [0] * (spec.n - 1))
        f = potential_from_phi(profile, c, d)
        ansatz = TranslationAnsatz(spec.sig, alpha, profile, f, name="table")
        window = (float(profile.grid[0]), float(profile.grid[-1]))
        return self._translation_subject(
            spec, ansatz, spec.lambda_, spec.ansatz.profile, {"c": c, "d": d}, window
        )

    def _relation(self, spec: ProblemSpec, family: FamilyParams) -> ImplicitRelation:
        alpha = self._alpha(spec, [1] + [0] * (spec.n - 1))
        norm2 = self._alpha_norm2(spec, alpha)
        c = family.number("c", 0.0)
        c1 = family.number("c1", 0.0)
        c2 = family.number("c2", 0.0)
        phi0 = family.number("phi0", 1.0)
        if family.tag == FamilyTag.TRANSLATION_N_NE_2K:
            return family_translation_n_ne_2k(spec.n, spec.k, c, c1, c2, norm2, phi0)
        if spec.k != spec.n // 2 or spec.n % 2:
            raise ProblemSpecError(f"{family.tag.value} needs n = 2k, got n={spec.n}, k={spec.k}")
        return family_translation_n_eq_2k(spec.n, c, c1, c2, norm2, phi0)

    def _xi_window(self, rel: ImplicitRelation, family: FamilyParams) -> Tuple[float, float]:
        lo, hi = admissible_xi_range(rel)
        xi0 = rel.xi_of(0.0)
        start = xi0 - DEFAULT_XI_HALF_WIDTH
        end = xi0 + DEFAULT_XI_HALF_WIDTH
        if math.isfinite(lo):
            start = max(start, xi0 - ADMISSIBLE_SHARE * (xi0 - lo))
        if math.isfinite(hi):
            end = min(end, xi0 + ADMISSIBLE_SHARE * (hi - xi0))
        return family.number("xi_lo", start), family.number("xi_hi", end)

    def _implicit_table(
        self, spec: ProblemSpec, family: FamilyParams
    ) -> Tuple[ImplicitRelation, ProfileTable]:
        rel = self._relation(spec, family)
        window = self._xi_window(rel, family)
        grid = int(family.number("grid", float(self.numerics.default_grid_size)))
        return rel, build_profile(rel, window, grid_size=grid)

    def _family_subject(self, spec: ProblemSpec, family: FamilyParams) -> _Subject:
        tag = family.tag
        if tag in IMPLICIT_TAGS:
            rel, table = self._implicit_table(spec, family)
            profile = profile_from_table(table)
            alpha = self._alpha(spec, [1] + [0] * (spec.n - 1))
            c, d = family.number("c", 0.0), family.number("d", 0.0)
            ansatz = TranslationAnsatz(
                spec.sig, alpha, profile, potential_from_phi(profile, c, d), name=tag.value
            )
            window = (table.xi[0], table.xi[-1])
            return self._translation_subject(
                spec, ansatz, 0.0, tag.value, dict(rel.constants), window, table, rel
            )

        if tag == FamilyTag.LIGHTLIKE_STEADY:
            alpha = self._alpha(spec, [1, 1] + [0] * (spec.n - 2))
            if spec.ansatz is not None and not is_catalog_id(spec.ansatz.profile):
                return self._table_subject(spec, family)
            theta = int(family.number("theta", 1.0))
            phi = AnalyticProfile(lambda s: 1.0 / (1.0 + s ** (2 * theta)), name="phi_lightlike")
            c, d = family.number("c", 0.0), family.number("d", 0.0)
            ansatz = family_lightlike_steady(spec.sig, alpha, phi, c, d)
            constants = {"theta": theta, "c": c, "d": d}
            return self._translation_subject(spec, ansatz, 0.0, tag.value, constants)

        if tag == FamilyTag.TRANSLATION_PHI_CONST:
            alpha = self._alpha(spec, [1] + [0] * (spec.n - 1))
            b, c, d = family.number("b", 1.0), family.number("c", 0.0), family.number("d", 0.0)
            ansatz = family_translation_phi_const(spec.sig, alpha, b, c, d)
            return self._translation_subject(spec, ansatz, 0.0, tag.value, {"b": b, "c": c, "d": d})

        case = "a" if tag == FamilyTag.ROTATION_GAUSSIAN else "b"
        member = family_rotation_null_curvature(
            spec.n,
            spec.k,
            spec.lambda_,
            case,
            c1=family.number("c1", 0.0),
            c2=family.number("c2", 1.0),
            c0=family.number("c0", 1.0),
            signature=spec.sig,
            seed=self.seed,
            count=self.numerics.sample_points,
        )
        ansatz = member.ansatz
        box: Box = ([-1.0] * spec.n, [1.0] * spec.n) if case == "a" else (
            [0.5] * spec.n,
            [1.5] * spec.n,
        )
        return _Subject(
            source=tag.value,
            phi=ansatz.phi_field(),
            sig=spec.sig,
            k=spec.k,
            lam=spec.lambda_,
            spec=member.spec,
            ansatz=ansatz,
            box=box,
            accept=domain_filter(ansatz.phi_field(), ansatz.distance_to_boundary),
            expected_lambda=None,
            ledger=member.sign_variant,
            constants=dict(member.constants),
            tag=tag.value,
            table=None,
            relation=None,
        )

    # ------------------------------------------------------------------
    # Sampling helpers
    # ------------------------------------------------------------------

    def _box(self, spec: ProblemSpec, subject: _Subject) -> Box:
        if spec.sample_box is not None:
            return list(spec.sample_box.lo), list(spec.sample_box.hi)
        return subject.box

    def _points(self, spec: ProblemSpec, subject: _Subject) -> np.ndarray:
        lo, hi = self._box(spec, subject)
        accept = subject.accept or domain_filter(subject.phi)
        return sample_points(lo, hi, self.numerics.sample_points, self.seed, accept)

    def _invariant(self, ansatz: Ansatz, point: np.ndarray) -> float:
        values = [float(c) for c in point]
        if isinstance(ansatz, TranslationAnsatz):
            return float(ansatz.xi(values))
        return float(ansatz.r(values))

    def _reduced_row(
        self, ansatz: Ansatz, subject: _Subject, t: float
    ) -> Tuple[float, float, float]:
        n, k, lam = ansatz.n, subject.k, subject.lam
        phi, dphi, ddphi = ansatz.phi.derivatives(t)
        if isinstance(ansatz, TranslationAnsatz):
            res = translation_residuals(ansatz, n, k, lam, t)
            sigma = translation_sigma_k(phi, dphi, ddphi, ansatz.alpha_norm2, n, k)
        else:
            res = rotation_residuals(ansatz, n, k, lam, t)
            sigma = rotation_sigma_k(phi, dphi, ddphi, t, n, k)
        return res.r1, res.r2, sigma

    # ------------------------------------------------------------------
    # Commands
    # ------------------------------------------------------------------

    def _verify(self, spec: ProblemSpec) -> CommandResult:
        subject = self._subject(spec)
        assert subject.spec is not None
        tol = self.numerics.residual_tol
        points = self._points(spec, subject)
        residual = max_soliton_residual(subject.spec, points)

        grid: Optional[Dict[str, Any]] = None
        if subject.ansatz is not None:
            values = sorted(self._invariant(subject.ansatz, p) for p in points)
            rows = [self._reduced_row(subject.ansatz, subject, t) for t in values]
            r1 = max(abs(row[0]) for row in rows)
            r2 = max(abs(row[1]) for row in rows)
            grid = {
                "points": len(values),
                "min": values[0],
                "max": values[-1],
                "max_abs_r1": r1,
                "max_abs_r2": r2,
                "max_abs": max(r1, r2),
            }
        passed = residual <= tol and (grid is None or grid["max_abs"] <= tol)
        report = VerifyReport(
            source=subject.source,
            n=spec.n,
            k=subject.k,
            lambda_=subject.lam,
            expected_lambda=subject.expected_lambda,
            max_residual=residual,
            points=len(points),
            grid=grid,
            tolerance=tol,
            passed=passed,
            sign_variant_used=subject.ledger,
        )
        return CommandResult(report, passed, format_verify_lines(report), [])

    def _curvature(self, spec: ProblemSpec) -> CommandResult:
        subject = self._subject(spec)
        rows = []
        for point in self._points(spec, subject):
            pack = curvature_pack(subject.phi, subject.sig, point)
            rows.append(
                {
                    "x": pack.x,
                    "scalar": pack.scalar,
                    "sigma": pack.sigma,
                    "ricci": pack.ricci,
                    "endo": pack.endo,
                }
            )
        report = CurvatureReport(source=subject.source, points=rows)
        lines = [f"곡률 계산: {subject.source}, {len(rows)}개 점"]
        return CommandResult(report, True, lines, [])

    def _reduce(self, spec: ProblemSpec) -> CommandResult:
        subject = self._subject(spec)
        ansatz = subject.ansatz
        if ansatz is None:
            raise ProblemSpecError(f"{subject.source} has no translation/rotation ansatz")
        values = [self._invariant(ansatz, p) for p in self._points(spec, subject)]
        grid = np.linspace(min(values), max(values), self.numerics.sample_points)
        r1, r2, sigma = [], [], []
        for t in grid:
            row = self._reduced_row(ansatz, subject, float(t))
            r1.append(row[0])
            r2.append(row[1])
            sigma.append(row[2])
        tol = self.numerics.residual_tol
        max_r1 = float(np.max(np.abs(r1)))
        max_r2 = float(np.max(np.abs(r2)))
        report = ReduceReport(
            source=subject.source,
            ansatz="translation" if isinstance(ansatz, TranslationAnsatz) else "rotation",
            grid=grid.tolist(),
            r1=r1,
            r2=r2,
            sigma_k=sigma,
            max_abs_r1=max_r1,
            max_abs_r2=max_r2,
            tolerance=tol,
            passed=max(max_r1, max_r2) <= tol,
        )
        lines = [f"축약 잔차: r1 {max_r1:.3e}, r2 {max_r2:.3e} ({len(grid)}개 격자점)"]
        return CommandResult(report, report.passed, lines, [])

    def _save_table(self, table: ProfileTable, name: str) -> Optional[str]:
        if not self.config.output_dir:
            return None
        return str(self.reporter.save_table(table.to_dataframe(), name))

    def _family(self, spec: ProblemSpec) -> CommandResult:
        subject = self._subject(spec)
        table = subject.table
        domain: Dict[str, Any]
        if table is None:
            ansatz = subject.ansatz
            if ansatz is None:
                raise ProblemSpecError(f"{subject.source} has no profile to tabulate")
            values = [self._invariant(ansatz, p) for p in self._points(spec, subject)]
            grid = np.linspace(min(values), max(values), self.numerics.default_grid_size)
            table = reduced_table(
                ansatz,
                grid,
                subject.k,
                subject.lam,
                subject.tag,
                constants=_numeric(subject.constants),
                tolerance=self.numerics.residual_tol,
            )
            domain = {"invariant": [float(grid[0]), float(grid[-1])]}
            round_trip = None
        else:
            domain = {"xi": [table.xi[0], table.xi[-1]], "admissible_xi": list(table.admissible_xi)}
            round_trip = table.round_trip_error

        name = subject.tag.lower()
        table_file = self._save_table(table, f"{name}_table.csv")
        certificate = FamilyCertificate(
            command="family",
            tag=subject.tag,
            constants=subject.constants,
            domain=domain,
            certified_residual=table.certified_residual,
            round_trip_error=round_trip,
            tolerance=table.tolerance,
            certified=table.certified,
            table_file=Path(table_file).name if table_file else None,
            sign_variant_used=subject.ledger,
        )
        files = [table_file] if table_file else []
        return CommandResult(
            certificate, certificate.certified, format_certificate_lines(certificate), files
        )

    def _solve_implicit(self, spec: ProblemSpec) -> CommandResult:
        family = spec.family
        if family is None or family.tag not in IMPLICIT_TAGS:
            raise ProblemSpecError(
                "solve-implicit needs family.tag TRANSLATION_N_NE_2K or TRANSLATION_N_EQ_2K"
            )
        rel, table = self._implicit_table(spec, family)
        table_file = self._save_table(table, "profile.csv")
        certificate = FamilyCertificate(
            command="solve-implicit",
            tag=rel.tag,
            constants=rel.constants,
            domain={
                "xi": [table.xi[0], table.xi[-1]],
                "admissible_xi": list(table.admissible_xi),
                "phi_bracket": list(rel.bracket),
                "singular_ends": list(rel.singular_ends),
            },
            certified_residual=table.certified_residual,
            round_trip_error=table.round_trip_error,
            tolerance=table.tolerance,
            certified=table.certified,
            table_file=Path(table_file).name if table_file else None,
        )
        passed = table.round_trip_error <= ROUND_TRIP_TOL and table.certified
        files = [table_file] if table_file else []
        return CommandResult(certificate, passed, format_certificate_lines(certificate), files)

    def _metric(self, spec: ProblemSpec) -> Tuple[str, ScalarField, Signature, Optional[int], Box]:
        """Conformal factor for geodesic work; catalog metrics skip verification."""
        entry_id: Optional[str] = None
        params: Dict[str, Any] = {}
        if spec.family is not None and spec.family.tag == FamilyTag.CATALOG:
            raw = spec.family.params.get("id")
            if not isinstance(raw, str):
                raise ProblemSpecError("family.params.id must name a catalog entry")
            entry_id = raw
            params = {key: value for key, value in spec.family.params.items() if key != "id"}
        elif spec.family is None and spec.ansatz is not None and is_catalog_id(spec.ansatz.profile):
            entry_id = spec.ansatz.profile

        default_box: Box = ([-1.0] * spec.n, [1.0] * spec.n)
        if entry_id is None:
            subject = self._subject(spec)
            return subject.source, subject.phi, subject.sig, None, subject.box

        merged = self._catalog_params(spec, entry_id, params)
        merged.pop("lambda", None)
        phi, sig = catalog_metric(entry_id, signature=spec.signature, **merged)
        key = canonical_id(entry_id)
        theta: Optional[int] = None
        if key == "EX21" and sig.n >= 3 and sig.eps[0] + sig.eps[1] == 0:
            theta = int(merged.get("theta", 1))
        return key, phi, sig, theta, default_box

    def _geodesic(self, spec: ProblemSpec) -> CommandResult:
        setup = spec.geodesic
        if setup is None or setup.init is None:
            raise ProblemSpecError("geodesic needs geodesic.init with x and v")
        source, phi, sig, theta, _ = self._metric(spec)
        init = GeodesicState(x=setup.init.x, v=setup.init.v)
        columns = lightlike_invariant_columns(theta) if theta is not None else None
        traj = integrate(phi, sig, init, setup.t_max, tol=setup.tol, first_integrals=columns)
        drift = first_integral_drift(traj, theta) if theta is not None else None

        files = []
        trajectory_file = None
        if self.config.output_dir:
            path = self.reporter.save_table(traj.to_dataframe(), "trajectory.csv")
            files.append(str(path))
            trajectory_file = path.name
        report = GeodesicReport(
            source=source,
            termination=traj.termination,
            t_final=traj.t_final,
            steps=traj.steps,
            samples=int(traj.t.size),
            speed_drift=speed_drift(traj),
            invariant_drift=drift,
            trajectory_file=trajectory_file,
        )
        return CommandResult(report, True, format_geodesic_lines(report), files)

    def _probe_inits(self, spec: ProblemSpec, phi: ScalarField, box: Box) -> List[GeodesicState]:
        setup = spec.geodesic
        if setup is not None and setup.inits:
            return [GeodesicState(x=item.x, v=item.v) for item in setup.inits]
        if setup is not None and setup.init is not None:
            return [GeodesicState(x=setup.init.x, v=setup.init.v)]
        count = self.config.points or PROBE_DEFAULT_INITS
        lo, hi = box
        positions = sample_points(lo, hi, count, self.seed, domain_filter(phi))
        velocities = sample_points([-1.0] * spec.n, [1.0] * spec.n, count, self.seed + 1)
        logger.info(f"Drew {count} initial conditions (seed {self.seed})")
        return [GeodesicState(x=x.tolist(), v=v.tolist()) for x, v in zip(positions, velocities)]

    def _probe(self, spec: ProblemSpec) -> CommandResult:
        source, phi, sig, _, box = self._metric(spec)
        if spec.sample_box is not None:
            box = (list(spec.sample_box.lo), list(spec.sample_box.hi))
        inits = self._probe_inits(spec, phi, box)
        setup = spec.geodesic
        t_max = setup.t_max if setup is not None else 100.0
        tol = setup.tol if setup is not None else None
        report: CompletenessReport = completeness_probe(
            phi, sig, inits, t_max, tol=tol, box=box, seed=self.seed, config=self.numerics
        )
        self.reporter.print_verdicts(report)
        lines = [f"완비성 판정 ({source}): {report.aggregate}"]
        return CommandResult(report, True, lines, [])


def _numeric(constants: Dict[str, Any]) -> Dict[str, float]:
    out = {}
    for key, value in constants.items():
        try:
            out[key] = float(value)
        except (TypeError, ValueError):
            continue
    return out
