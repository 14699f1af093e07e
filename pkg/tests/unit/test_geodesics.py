"""
Unit tests for geodesic integration, first integrals and completeness probing
"""
import numpy as np
import pytest

from src.families import catalog_metric
from src.geodesics import (
    BOUNDED_FACTOR,
    COMPLETE,
    GeodesicInputError,
    bounded_factor_check,
    completeness_probe,
    first_integral_drift,
    geodesic_rhs,
    integrate,
    lightlike_invariant_columns,
    reduced_lightlike_rhs,
    speed_drift,
)
from src.tensor import ScalarField
from src.types.models import GeodesicState, Signature
from src.utils.config import NumericsConfig


@pytest.fixture
def flat2() -> ScalarField:
    """평탄한 2차원 인자"""
    return ScalarField.constant(2, 1.0, positive=True, name="flat")


@pytest.fixture
def lightlike_metric():
    """EX21 계량 (theta = 1, n = 3)"""
    return catalog_metric("EX21")


@pytest.mark.unit
class TestIntegrate:
    """측지선 적분 테스트"""

    def test_straight_line_in_flat_space(self, flat2):
        """평탄 공간의 직선"""
        init = GeodesicState(x=[0.5, -1.0], v=[0.3, 0.4])
        traj = integrate(flat2, Signature.euclidean(2), init, 10.0, samples=11)

        assert traj.termination == "reached_tmax"
        assert traj.t_final == pytest.approx(10.0)
        assert traj.t.tolist() == pytest.approx(np.linspace(0.0, 10.0, 11).tolist())
        assert traj.x[-1].tolist() == pytest.approx([3.5, 3.0], abs=1e-9)
        assert speed_drift(traj) <= 1e-12

    def test_rhs_in_flat_space(self, flat2):
        """평탄 공간의 가속도 0"""
        x_dot, v_dot = geodesic_rhs(
            flat2, Signature.lorentzian(2), GeodesicState(x=[0.0, 1.0], v=[2.0, -1.0])
        )
        assert x_dot.tolist() == [2.0, -1.0]
        assert v_dot.tolist() == [0.0, 0.0]

    def test_speed_is_conserved(self):
        """g(v, v) 보존"""
        phi = ScalarField(2, lambda xs: 1.0 + 0.1 * xs[0] * xs[0] + 0.05 * xs[1], positive=True)
        init = GeodesicState(x=[0.1, 0.2], v=[0.5, -0.3])
        traj = integrate(phi, Signature.euclidean(2), init, 1.0)
        assert traj.termination == "reached_tmax"
        assert speed_drift(traj) <= 1e-7

    def test_finite_time_singularity_stops_early(self):
        """유한 시간 특이점: t = 1/2 이전에 중단"""
        phi = ScalarField(2, lambda xs: 1.0 / (1.0 - xs[0]), positive=True)
        init = GeodesicState(x=[0.0, 0.0], v=[1.0, 0.0])
        traj = integrate(phi, Signature.euclidean(2), init, 5.0)
        assert traj.termination != "reached_tmax"
        assert traj.t_final < 0.5 + 1e-6

    def test_blow_up_threshold(self, flat2):
        """좌표 크기 임계값 초과"""
        config = NumericsConfig(blowup=5.0)
        init = GeodesicState(x=[0.0, 0.0], v=[1.0, 0.0])
        traj = integrate(flat2, Signature.euclidean(2), init, 10.0, config=config)
        assert traj.termination == "blow_up"

    def test_step_budget(self, flat2):
        """스텝 예산 소진"""
        config = NumericsConfig(max_steps=1)
        init = GeodesicState(x=[0.0, 0.0], v=[1.0, 0.0])
        traj = integrate(flat2, Signature.euclidean(2), init, 10.0, config=config)
        assert traj.termination == "step_collapse"
        assert traj.steps == 1

    def test_trajectory_table_columns(self, flat2):
        """궤적 표 열"""
        init = GeodesicState(x=[0.0, 0.0], v=[1.0, 1.0])
        frame = integrate(flat2, Signature.euclidean(2), init, 1.0, samples=5).to_dataframe()
        assert list(frame.columns) == ["t", "x1", "x2", "v1", "v2", "speed"]
        assert len(frame) == 5

    def test_reversed_state(self):
        """역방향 초기 조건"""
        state = GeodesicState(t=1.0, x=[1.0, 2.0], v=[0.5, -0.5]).reversed()
        assert state.v == [-0.5, 0.5]
        assert state.x == [1.0, 2.0]


def _end_point(phi, sig, init, tol):
    return integrate(phi, sig, init, 5.0, tol=tol).x[-1]


@pytest.mark.unit
class TestIntegrateAccuracy:
    """시간 역전과 허용 오차 수렴 테스트"""

    @pytest.mark.parametrize("metric", ["sphere", "EX21"])
    def test_time_reversal_returns_to_start(self, metric, sphere_phi):
        """정방향 적분 후 역방향 적분은 시작점으로 복귀"""
        if metric == "sphere":
            phi, sig = sphere_phi(3), Signature.euclidean(3)
        else:
            phi, sig = catalog_metric("EX21")
        init = GeodesicState(x=[0.3, -0.2, 0.5], v=[0.4, 0.1, -0.3])

        forward = integrate(phi, sig, init, 5.0)
        assert forward.termination == "reached_tmax"
        backward = integrate(phi, sig, forward.final_state.reversed(), 5.0)

        assert backward.termination == "reached_tmax"
        assert backward.t_final == pytest.approx(10.0)
        assert backward.x[-1].tolist() == pytest.approx(init.x, abs=1e-6)
        assert (-backward.v[-1]).tolist() == pytest.approx(init.v, abs=1e-6)

    @pytest.mark.parametrize("metric", ["sphere", "EX21"])
    def test_tighter_tolerance_is_more_accurate(self, metric, sphere_phi):
        """허용 오차를 줄이면 끝점 오차 감소"""
        if metric == "sphere":
            phi, sig = sphere_phi(3), Signature.euclidean(3)
        else:
            phi, sig = catalog_metric("EX21")
        init = GeodesicState(x=[0.3, -0.2, 0.5], v=[0.4, 0.1, -0.3])
        reference = _end_point(phi, sig, init, 1e-12)

        errors = [
            float(np.max(np.abs(_end_point(phi, sig, init, tol) - reference)))
            for tol in (1e-6, 1e-8, 1e-10)
        ]
        assert errors[1] < errors[0]
        assert errors[2] < errors[1]
        assert errors[2] <= 1e-8


@pytest.mark.unit
@pytest.mark.error_scenario
class TestIntegrateErrors:
    """측지선 입력 에러 테스트"""

    def test_non_positive_horizon(self, flat2):
        """t_max <= 0"""
        init = GeodesicState(x=[0.0, 0.0], v=[1.0, 0.0])
        with pytest.raises(GeodesicInputError):
            integrate(flat2, Signature.euclidean(2), init, 0.0)

    def test_non_positive_tolerance(self, flat2):
        """tol <= 0"""
        init = GeodesicState(x=[0.0, 0.0], v=[1.0, 0.0])
        with pytest.raises(GeodesicInputError):
            integrate(flat2, Signature.euclidean(2), init, 1.0, tol=-1e-9)

    def test_initial_point_outside_domain(self):
        """정의역 밖 초기점"""
        phi = ScalarField(2, lambda xs: xs[0], positive=True)
        init = GeodesicState(x=[-1.0, 0.0], v=[1.0, 0.0])
        with pytest.raises(GeodesicInputError):
            integrate(phi, Signature.euclidean(2), init, 1.0)

    def test_state_lengths_must_match(self):
        """x, v 길이 불일치"""
        with pytest.raises(ValueError):
            GeodesicState(x=[0.0, 0.0], v=[1.0])


@pytest.mark.unit
class TestFirstIntegrals:
    """광선형 평행이동 계량의 보존량 테스트"""

    def test_invariants_are_conserved(self, lightlike_metric):
        """J3, K 보존"""
        phi, sig = lightlike_metric
        init = GeodesicState(x=[0.1, 0.2, 0.0], v=[0.3, 0.1, 0.5])
        traj = integrate(phi, sig, init, 5.0, first_integrals=lightlike_invariant_columns(1))

        assert set(traj.invariants) == {"J3", "K"}
        report = first_integral_drift(traj, 1)
        assert report.max_drift <= 1e-6
        assert report.k_initial == pytest.approx(0.4 * (1.0 + 0.09) ** 2)

    def test_reduced_system_matches_full_flow(self, lightlike_metric):
        """축약 계와 전체 측지선 방정식 비교"""
        phi, sig = lightlike_metric
        state = GeodesicState(x=[0.4, -0.1, 0.7], v=[0.2, -0.6, 0.3])
        _, v_dot = geodesic_rhs(phi, sig, state)

        cols = lightlike_invariant_columns(1)(np.array([state.x]), np.array([state.v]))
        rhs = reduced_lightlike_rhs(1, float(cols["K"][0]), [float(cols["J3"][0])])
        reduced = rhs(0.0, np.array([0.4, -0.1, 0.2, -0.6]))
        assert reduced[2:] == pytest.approx(v_dot[:2], abs=1e-12)

    def test_drift_needs_three_coordinates(self, flat2):
        """n >= 3 필요"""
        traj = integrate(flat2, Signature.euclidean(2), GeodesicState(x=[0, 0], v=[1, 0]), 1.0)
        with pytest.raises(GeodesicInputError):
            first_integral_drift(traj, 1)

    def test_theta_must_be_positive(self):
        """theta >= 1"""
        with pytest.raises(GeodesicInputError):
            lightlike_invariant_columns(0)


@pytest.mark.unit
class TestCompleteness:
    """완비성 탐색 테스트"""

    def test_bounded_factor_fires_on_riemannian(self):
        """유계 인자 + 리만 부호"""
        phi = ScalarField(2, lambda xs: 1.0 / (1.0 + xs[0] * xs[0] + xs[1] * xs[1]), positive=True)
        check = bounded_factor_check(phi, Signature.euclidean(2), count=32)
        assert check.applicable
        assert check.bounded
        assert check.fires
        assert len(check.sup_estimates) == 4
        assert 0.8 < check.bound <= 1.0

    def test_bounded_factor_not_applicable_on_lorentzian(self):
        """로렌츠 부호에서는 적용 불가"""
        phi = ScalarField.constant(2, 1.0, positive=True)
        check = bounded_factor_check(phi, Signature.lorentzian(2), count=8)
        assert check.bounded
        assert not check.applicable
        assert not check.fires

    def test_unbounded_factor(self):
        """비유계 인자"""
        phi = ScalarField(2, lambda xs: 1.0 + xs[0] * xs[0] + xs[1] * xs[1], positive=True)
        check = bounded_factor_check(phi, Signature.euclidean(2), count=16)
        assert not check.bounded
        assert not check.fires

    def test_flat_probe(self, flat2):
        """평탄 공간 탐색"""
        inits = [
            GeodesicState(x=[0.0, 0.0], v=[1.0, 0.0]),
            GeodesicState(x=[0.5, 0.5], v=[-0.2, 0.3]),
            GeodesicState(x=[-1.0, 0.2], v=[0.0, 1.0]),
        ]
        config = NumericsConfig(threads=2)
        report = completeness_probe(flat2, Signature.euclidean(2), inits, 10.0, config=config)
        assert [v.index for v in report.verdicts] == [0, 1, 2]
        assert all(v.verdict == COMPLETE for v in report.verdicts)
        assert all(v.t_backward == pytest.approx(10.0) for v in report.verdicts)
        assert report.aggregate == BOUNDED_FACTOR

    def test_lorentzian_probe_is_evidence_only(self, flat2):
        """로렌츠 부호: 유한 시간 증거만"""
        inits = [GeodesicState(x=[0.0, 0.0], v=[1.0, 1.0])]
        report = completeness_probe(flat2, Signature.lorentzian(2), inits, 5.0)
        assert report.aggregate == COMPLETE
        assert not report.bounded_check.fires

    def test_empty_initial_conditions(self, flat2):
        """초기 조건 없음"""
        with pytest.raises(GeodesicInputError):
            completeness_probe(flat2, Signature.euclidean(2), [], 1.0)
