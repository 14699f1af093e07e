"""
Unit tests for jets, curvature and sampling
"""
import math
from math import comb

import numpy as np
import pytest

from src.tensor import (
    DimensionMismatchError,
    DomainError,
    Jet,
    SamplingError,
    ScalarField,
    central_differences,
    characteristic_coefficients,
    conformal_christoffel,
    curvature_pack,
    domain_filter,
    hessian_conformal,
    log,
    power,
    ricci_conformal,
    sample_points,
    scalar_conformal,
    schouten_endomorphism,
    sigma_all,
    sin,
    sqrt,
)
from src.types.models import Signature


@pytest.mark.unit
class TestJets:
    """2차 jet 산술 테스트"""

    def test_product_gradient(self):
        """곱의 기울기"""
        x, y = Jet.variables([1.0, 2.0])
        product = x * y
        assert product.value == 2.0
        assert product.grad.tolist() == [2.0, 1.0]
        assert product.hess.tolist() == [[0.0, 1.0], [1.0, 0.0]]

    def test_matches_central_differences(self, wavy_phi, sample_point):
        """jet 미분과 중심 차분 비교"""
        jet = wavy_phi.jet(sample_point)
        grad, hess = central_differences(wavy_phi, sample_point)

        assert np.allclose(jet.grad, grad, atol=1e-8)
        assert np.allclose(jet.hess, hess, atol=1e-4)

    def test_hessian_exactly_symmetric(self):
        """헤세 행렬의 비트 단위 대칭성"""
        field = ScalarField(
            3, lambda xs: sin(xs[0] * xs[1]) / (2.0 + xs[2] * xs[0]) + sqrt(1.0 + xs[1] * xs[1])
        )
        hess = field.jet([0.4, -1.3, 0.7]).hess
        assert np.array_equal(hess, hess.T)

    def test_chain_rule_values(self):
        """합성 함수의 값과 미분"""
        (s,) = Jet.variables([3.0])
        j = sqrt(1.0 + s)
        assert j.value == pytest.approx(2.0)
        assert j.grad[0] == pytest.approx(0.25)
        assert j.hess[0, 0] == pytest.approx(-1.0 / 32.0)

    def test_integer_power_of_negative_base(self):
        """정수 지수는 음수 밑 허용"""
        (s,) = Jet.variables([-2.0])
        j = power(s, 3)
        assert j.value == pytest.approx(-8.0)
        assert j.grad[0] == pytest.approx(12.0)
        assert j.hess[0, 0] == pytest.approx(-12.0)

    def test_plain_floats_pass_through(self):
        """실수 입력은 실수 반환"""
        assert power(4.0, 0.5) == pytest.approx(2.0)
        assert log(math.e) == pytest.approx(1.0)


@pytest.mark.unit
@pytest.mark.error_scenario
class TestJetDomainErrors:
    """jet 정의역 에러 테스트"""

    def test_fractional_power_of_negative_base(self):
        """음수 밑의 분수 지수"""
        (s,) = Jet.variables([-1.0])
        with pytest.raises(DomainError):
            power(s, 0.5)

    def test_log_of_zero(self):
        """0의 로그"""
        (s,) = Jet.variables([0.0])
        with pytest.raises(DomainError):
            log(s)

    def test_division_by_zero_jet(self):
        """값이 0인 jet으로 나누기"""
        (s,) = Jet.variables([0.0])
        with pytest.raises(DomainError):
            1.0 / s

    def test_positive_field_rejects_non_positive_value(self):
        """양수 필드가 음수 값을 반환"""
        phi = ScalarField(2, lambda xs: xs[0], positive=True, name="x1")
        with pytest.raises(DomainError):
            phi.jet([-1.0, 0.0])
        with pytest.raises(DomainError):
            phi.value([-1.0, 0.0])

    def test_wrong_point_length(self):
        """좌표 개수 불일치"""
        phi = ScalarField(2, lambda xs: 1.0 + xs[0] * xs[0], positive=True)
        with pytest.raises(DimensionMismatchError):
            phi.jet([0.0, 0.0, 0.0])


@pytest.mark.unit
class TestCurvature:
    """공형 계량 곡률 테스트"""

    def test_sigma_all_of_diagonal(self):
        """대각 행렬의 기본 대칭 함수"""
        assert sigma_all(np.diag([1.0, 2.0, 3.0])).tolist() == [6.0, 11.0, 6.0]

    def test_characteristic_coefficients_match_numpy(self):
        """특성 다항식 계수"""
        rng = np.random.default_rng(7)
        matrix = rng.normal(size=(4, 4))
        assert np.allclose(characteristic_coefficients(matrix), np.poly(matrix), atol=1e-10)

    def test_sigma_all_rejects_non_square(self):
        """정사각 행렬이 아닌 입력"""
        with pytest.raises(DimensionMismatchError):
            sigma_all(np.zeros((2, 3)))

    def test_flat_metric_has_no_curvature(self, lorentzian3):
        """상수 인자는 평탄"""
        phi = ScalarField.constant(3, 2.0, positive=True)
        pack = curvature_pack(phi, lorentzian3, [0.1, 0.2, 0.3])
        assert np.allclose(pack.ricci, 0.0)
        assert pack.scalar == pytest.approx(0.0)
        assert np.allclose(pack.sigma, 0.0)
        assert np.allclose(conformal_christoffel(phi, lorentzian3, [0.1, 0.2, 0.3]), 0.0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_round_sphere(self, sphere_phi, n):
        """단위 구면: Ric = (n-1) g, R = n(n-1), 슈텐 자기사상 = I/2"""
        phi = sphere_phi(n)
        sig = Signature.euclidean(n)
        x = np.linspace(-0.4, 0.6, n)
        value = phi.value(x)

        assert scalar_conformal(phi, sig, x) == pytest.approx(n * (n - 1))
        assert np.allclose(ricci_conformal(phi, sig, x), (n - 1) * np.eye(n) / value**2)
        assert np.allclose(schouten_endomorphism(phi, sig, x), 0.5 * np.eye(n))
        expected = [comb(n, k) / 2**k for k in range(1, n + 1)]
        assert np.allclose(curvature_pack(phi, sig, x).sigma, expected)

    def test_christoffel_against_metric_derivatives(self, wavy_phi, lorentzian3, sample_point):
        """크리스토펠 기호와 계량 차분 비교"""
        eps = lorentzian3.array
        h = 1e-6

        def metric_derivative(m: int) -> np.ndarray:
            step = np.zeros(3)
            step[m] = h
            plus = eps / wavy_phi.value(sample_point + step) ** 2
            minus = eps / wavy_phi.value(sample_point - step) ** 2
            return np.diag((plus - minus) / (2 * h))

        dg = [metric_derivative(m) for m in range(3)]
        inverse = eps * wavy_phi.value(sample_point) ** 2
        expected = np.zeros((3, 3, 3))
        for k in range(3):
            for i in range(3):
                for j in range(3):
                    expected[k, i, j] = (
                        0.5 * inverse[k] * (dg[i][j, k] + dg[j][i, k] - dg[k][i, j])
                    )

        gamma = conformal_christoffel(wavy_phi, lorentzian3, sample_point)
        assert np.allclose(gamma, expected, atol=1e-7)
        assert np.allclose(gamma, np.transpose(gamma, (0, 2, 1)))

    def test_hessian_uses_christoffel_symbols(self, wavy_phi, lorentzian3, sample_point):
        """Hess f = d^2 f - Gamma df"""
        f = ScalarField(3, lambda xs: xs[0] * xs[1] + sin(xs[2]), name="f")
        jet = f.jet(sample_point)
        gamma = conformal_christoffel(wavy_phi, lorentzian3, sample_point)
        expected = jet.hess - np.einsum("kij,k->ij", gamma, jet.grad)

        hess = hessian_conformal(f, wavy_phi, lorentzian3, sample_point)
        assert np.allclose(hess, expected, atol=1e-12)
        assert np.array_equal(hess, hess.T)

    def test_dimension_mismatch(self, wavy_phi):
        """필드와 부호의 차원 불일치"""
        with pytest.raises(DimensionMismatchError):
            ricci_conformal(wavy_phi, Signature.euclidean(2), [0.0, 0.0])


@pytest.mark.unit
class TestSampling:
    """준난수 표본점 테스트"""

    def test_same_seed_same_points(self):
        """같은 시드, 같은 점"""
        a = sample_points([-1.0, 0.0], [1.0, 2.0], count=16, seed=3)
        b = sample_points([-1.0, 0.0], [1.0, 2.0], count=16, seed=3)
        assert np.array_equal(a, b)
        assert a.shape == (16, 2)

    def test_points_inside_box(self):
        """상자 안의 점"""
        points = sample_points([-1.0, 0.0, 5.0], [1.0, 2.0, 6.0], count=32, seed=0)
        assert np.all(points >= [-1.0, 0.0, 5.0])
        assert np.all(points <= [1.0, 2.0, 6.0])

    def test_predicate_filters_points(self):
        """조건을 만족하는 점만 채택"""
        points = sample_points([-1.0, -1.0], [1.0, 1.0], count=20, accept=lambda p: p[0] > 0)
        assert len(points) == 20
        assert np.all(points[:, 0] > 0)

    def test_domain_filter_rejects_non_positive_phi(self):
        """공형 인자가 양수가 아닌 점 제외"""
        phi = ScalarField(2, lambda xs: xs[0], positive=True)
        accept = domain_filter(phi)
        assert accept(np.array([0.5, 0.0]))
        assert not accept(np.array([-0.5, 0.0]))

    def test_domain_filter_keeps_away_from_singular_set(self):
        """특이 집합과의 거리 유지"""
        phi = ScalarField.constant(2, 1.0, positive=True)
        accept = domain_filter(phi, distance=lambda p: abs(float(p[0])), margin=0.1)
        assert accept(np.array([0.5, 0.0]))
        assert not accept(np.array([0.05, 0.0]))


@pytest.mark.unit
@pytest.mark.error_scenario
class TestSamplingErrors:
    """표본 추출 에러 테스트"""

    def test_no_admissible_points(self):
        """허용되는 점 없음"""
        with pytest.raises(SamplingError):
            sample_points([0.0], [1.0], count=4, accept=lambda p: False, max_batches=2)

    def test_empty_box(self):
        """빈 상자"""
        with pytest.raises(SamplingError):
            sample_points([0.0, 1.0], [1.0, 1.0], count=4)

    def test_corner_length_mismatch(self):
        """꼭짓점 길이 불일치"""
        with pytest.raises(DimensionMismatchError):
            sample_points([0.0, 0.0], [1.0, 1.0, 1.0], count=4)
