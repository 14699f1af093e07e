"""
Unit tests for the implicit-relation solver
"""
import math

import numpy as np
import pytest

from src.families import family_translation_n_eq_2k, family_translation_n_ne_2k
from src.quadrature import (
    ImplicitRelation,
    OutOfDomainError,
    QuadratureInputError,
    RelationDomainError,
    admissible_xi_range,
    antiderivative,
    build_profile,
    invert,
    odd_root,
    profile_from_table,
    read_profile_csv,
)
from src.utils.config import NumericsConfig


def _log_relation() -> ImplicitRelation:
    """A(phi) = ln(phi): phi(xi) = exp(xi)"""
    return ImplicitRelation(
        lambda s: 1.0 / s,
        1.0,
        slope=1.0,
        offset=0.0,
        ode_residual=lambda p, d, dd: p * dd - d * d,
        tag="log",
    )


@pytest.fixture
def sqrt_relation() -> ImplicitRelation:
    """n = 2k = 2, c = 4, c1 = 0: phi(xi) = sqrt(1 + 2 xi)"""
    return family_translation_n_eq_2k(2, c=4.0, c1=0.0, c2=0.0)


@pytest.mark.unit
class TestOddRoot:
    """홀수 차 실근 테스트"""

    def test_negative_value(self):
        """음수의 세제곱근"""
        assert odd_root(-8.0, 3) == pytest.approx(-2.0)

    def test_degree_one(self):
        """1차는 항등"""
        assert odd_root(-0.25, 1) == -0.25

    def test_even_degree_rejected(self):
        """짝수 차 거부"""
        with pytest.raises(QuadratureInputError):
            odd_root(4.0, 2)


@pytest.mark.unit
class TestRelation:
    """음함수 관계식 테스트"""

    def test_antiderivative(self):
        """부정적분"""
        rel = ImplicitRelation(lambda s: 1.0, 1.0, 1.0, 0.0, lambda p, d, dd: 0.0)
        assert antiderivative(rel, 2.5) == pytest.approx(1.5, abs=1e-12)

    def test_invert_log_relation(self):
        """ln 관계식 역변환"""
        rel = _log_relation()
        for xi in (-1.5, -0.2, 0.0, 0.5, 2.0):
            assert invert(rel, xi) == pytest.approx(math.exp(xi), rel=1e-10)

    def test_bracket_without_singular_ends(self):
        """특이점 없는 구간"""
        rel = _log_relation()
        assert rel.singular_ends == (False, False)
        assert rel.bracket[0] == pytest.approx(1e-6)
        assert rel.bracket[1] == pytest.approx(1e6)
        lo, hi = admissible_xi_range(rel)
        assert lo == pytest.approx(math.log(1e-6), rel=1e-9)
        assert hi == pytest.approx(math.log(1e6), rel=1e-9)

    def test_singular_lower_end(self):
        """n != 2k: 괄호 식의 부호 변화에서 끝나는 구간"""
        rel = family_translation_n_ne_2k(3, 1, c=1.0, c1=1.0, c2=0.0)
        assert rel.singular_ends == (True, False)
        assert rel.bracket[0] == pytest.approx(0.05**0.4, rel=1e-9)

    def test_derivative_from_relation(self, sqrt_relation):
        """phi' = slope / I(phi)"""
        assert sqrt_relation.derivative(2.0) == pytest.approx(0.5)


@pytest.mark.unit
@pytest.mark.error_scenario
class TestRelationErrors:
    """관계식 에러 테스트"""

    def test_non_positive_base_point(self):
        """phi0 <= 0"""
        with pytest.raises(QuadratureInputError):
            ImplicitRelation(lambda s: 1.0, 0.0, 1.0, 0.0, lambda p, d, dd: 0.0)

    def test_zero_slope(self):
        """기울기 0"""
        with pytest.raises(QuadratureInputError):
            ImplicitRelation(lambda s: 1.0, 1.0, 0.0, 0.0, lambda p, d, dd: 0.0)

    def test_integrand_vanishes_at_base(self):
        """기준점에서 피적분 함수 0"""
        with pytest.raises(RelationDomainError):
            ImplicitRelation(lambda s: s - 1.0, 1.0, 1.0, 0.0, lambda p, d, dd: 0.0)

    def test_xi_outside_admissible_interval(self):
        """허용 구간 밖 xi"""
        rel = _log_relation()
        with pytest.raises(OutOfDomainError) as info:
            invert(rel, 20.0)
        assert info.value.admissible is not None
        assert info.value.admissible[1] == pytest.approx(math.log(1e6), rel=1e-9)


@pytest.mark.unit
class TestBuildProfile:
    """프로파일 표 구성과 인증 테스트"""

    def test_sqrt_profile(self, sqrt_relation):
        """n = 2k 닫힌 형태와 비교"""
        table = build_profile(sqrt_relation, (0.0, 1.0), grid_size=257)
        xi = np.asarray(table.xi)
        assert np.allclose(table.phi, np.sqrt(1.0 + 2.0 * xi), rtol=1e-11)
        assert np.allclose(table.dphi, 1.0 / np.sqrt(1.0 + 2.0 * xi), rtol=1e-11)
        assert table.certified
        assert table.round_trip_error <= 1e-9
        assert table.tag == "TRANSLATION_N_EQ_2K"

    def test_n_ne_2k_profile_certified(self):
        """n != 2k 관계식의 ODE 인증"""
        rel = family_translation_n_ne_2k(3, 1, c=1.0, c1=1.0, c2=0.0)
        table = build_profile(rel, (-0.2, 0.2), grid_size=257)
        assert table.certified
        assert table.certified_residual <= 1e-6
        assert table.round_trip_error <= 1e-9
        assert all(p > 0 for p in table.phi)

    def test_tabulated_profile_from_table(self, sqrt_relation):
        """표에서 만든 프로파일"""
        table = build_profile(sqrt_relation, (0.0, 1.0), grid_size=65)
        profile = profile_from_table(table)
        value, d1, _ = profile.derivatives(0.4)
        assert value == pytest.approx(math.sqrt(1.8), rel=1e-8)
        assert d1 == pytest.approx(1.0 / math.sqrt(1.8), rel=1e-8)

    def test_read_written_table(self, sqrt_relation, temp_output_dir):
        """CSV 표 읽기"""
        table = build_profile(sqrt_relation, (0.0, 1.0), grid_size=65)
        path = temp_output_dir / "profile.csv"
        table.to_dataframe().to_csv(path, index=False, float_format="%.17g")
        profile = read_profile_csv(path)
        assert profile.name == "profile"
        assert profile.interval == (0.0, 1.0)
        assert profile.slopes is not None


def _profile_error(table) -> float:
    xi = np.asarray(table.xi)
    return float(np.max(np.abs(np.asarray(table.phi) - np.sqrt(1.0 + 2.0 * xi))))


@pytest.mark.unit
class TestProfileRefinement:
    """격자와 구적 허용 오차를 조이면 결과가 나빠지지 않음"""

    def test_finer_grid(self, sqrt_relation):
        """격자 2배: 잔차와 프로파일 오차 비증가"""
        coarse = build_profile(sqrt_relation, (0.0, 1.0), grid_size=129)
        fine = build_profile(sqrt_relation, (0.0, 1.0), grid_size=257)
        assert fine.certified_residual <= coarse.certified_residual
        assert _profile_error(fine) <= _profile_error(coarse) + 1e-11

    def test_tighter_quadrature(self):
        """구적 허용 오차 강화: 프로파일 오차, 왕복 오차 비증가"""
        tables = []
        for eps in (1e-10, 1e-14):
            config = NumericsConfig(quad_epsabs=eps, quad_epsrel=eps)
            rel = family_translation_n_eq_2k(2, c=4.0, c1=0.0, c2=0.0, config=config)
            tables.append(build_profile(rel, (0.0, 1.0), grid_size=257))
        loose, tight = tables
        assert _profile_error(tight) <= _profile_error(loose) + 1e-11
        assert tight.round_trip_error <= loose.round_trip_error + 1e-11
        assert tight.certified_residual <= loose.certified_residual + 1e-9


@pytest.mark.unit
@pytest.mark.error_scenario
class TestBuildProfileErrors:
    """프로파일 표 에러 테스트"""

    def test_grid_too_small(self, sqrt_relation):
        """최소 격자보다 작은 격자"""
        with pytest.raises(QuadratureInputError):
            build_profile(sqrt_relation, (0.0, 1.0), grid_size=9)

    def test_empty_range(self, sqrt_relation):
        """빈 xi 구간"""
        with pytest.raises(QuadratureInputError):
            build_profile(sqrt_relation, (1.0, 1.0), grid_size=33)

    def test_range_leaves_admissible_interval(self, sqrt_relation):
        """허용 구간을 벗어난 xi 구간"""
        with pytest.raises(OutOfDomainError):
            build_profile(sqrt_relation, (-1.0, 0.0), grid_size=33)

    def test_missing_table(self, temp_output_dir):
        """없는 표 파일"""
        with pytest.raises(QuadratureInputError):
            read_profile_csv(temp_output_dir / "missing.csv")

    def test_table_without_phi_column(self, temp_output_dir):
        """phi 열 없음"""
        path = temp_output_dir / "bad.csv"
        path.write_text("xi,value\n0,1\n1,2\n", encoding="utf-8")
        with pytest.raises(QuadratureInputError):
            read_profile_csv(path)
