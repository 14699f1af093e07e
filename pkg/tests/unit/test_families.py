"""
Unit tests for the solution families, sign ledgers and tables
"""
import numpy as np
import pytest

from src.families import (
    CatalogVerificationError,
    FamilyDomainError,
    FamilyInputError,
    family_lightlike_steady,
    family_rotation_null_curvature,
    family_translation_n_eq_2k,
    family_translation_n_ne_2k,
    family_translation_phi_const,
    null_sigma_max,
    p_constant,
    potential_from_phi,
    reduced_table,
    settle_variants,
)
from src.reductions import AnalyticProfile, TranslationAnsatz
from src.tensor import max_soliton_residual, sample_points
from src.types.models import Signature


@pytest.fixture
def cube_points() -> np.ndarray:
    """[-1, 1]^3 의 표본점"""
    return sample_points([-1.0] * 3, [1.0] * 3, count=24, seed=5)


@pytest.mark.unit
class TestPotential:
    """f' = c / phi^2 퍼텐셜 테스트"""

    def test_constant_phi(self):
        """상수 인자의 선형 퍼텐셜"""
        f = potential_from_phi(AnalyticProfile.constant(1.0), 2.0, 1.0)
        assert f.value(3.0) == pytest.approx(7.0, abs=1e-12)

    def test_first_reduced_equation_holds(self):
        """f'' + 2 f' phi' / phi = 0"""
        phi = AnalyticProfile(lambda s: 1.0 / (1.0 + s * s))
        f = potential_from_phi(phi, 1.5)
        value, d1, d2 = phi.derivatives(0.7)
        _, df, ddf = f.derivatives(0.7)
        assert df == pytest.approx(1.5 / value**2)
        assert ddf + 2.0 * df * d1 / value == pytest.approx(0.0, abs=1e-12)

    def test_quadrature_value(self):
        """적분 값: phi = 1/(1+s^2) 이면 f = s + 2 s^3/3 + s^5/5"""
        phi = AnalyticProfile(lambda s: 1.0 / (1.0 + s * s))
        f = potential_from_phi(phi, 1.0, base=0.0)
        assert f.value(0.5) == pytest.approx(0.5 + 2 * 0.125 / 3 + 0.03125 / 5, rel=1e-10)

    def test_base_outside_interval(self):
        """구간 밖 기준점"""
        phi = AnalyticProfile(lambda r: r, interval=(0.0, 1.0))
        with pytest.raises(FamilyDomainError):
            potential_from_phi(phi, 1.0, base=2.0)


@pytest.mark.unit
class TestTranslationFamilies:
    """평행이동 해 족 테스트"""

    def test_p_constant(self):
        """p 상수"""
        assert p_constant(4, 1, 6.0) == pytest.approx(1.0)

    def test_phi_const_member_is_steady_soliton(self, cube_points, lorentzian3):
        """상수 인자 족은 lambda = 0 솔리톤"""
        ansatz = family_translation_phi_const(lorentzian3, [1, 2, 0], b=2.0, c=0.7, d=1.0)
        spec = ansatz.to_soliton_spec(2, 0.0)
        assert max_soliton_residual(spec, cube_points) <= 1e-12

    def test_lightlike_member_is_steady_soliton(self, cube_points, lorentzian3):
        """광선형 방향의 임의 인자"""
        phi = AnalyticProfile(lambda s: 1.0 / (1.0 + s * s), name="phi")
        ansatz = family_lightlike_steady(lorentzian3, [1, 1, 0], phi, c=0.8, d=0.1)
        for k in (1, 2, 3):
            spec = ansatz.to_soliton_spec(k, 0.0)
            assert max_soliton_residual(spec, cube_points) <= 1e-8

    def test_implicit_relation_constants(self):
        """n != 2k 관계식 상수"""
        rel = family_translation_n_ne_2k(3, 1, c=1.0, c1=1.0, c2=0.0)
        assert rel.tag == "TRANSLATION_N_NE_2K"
        assert rel.slope == pytest.approx(-2.0)
        assert rel.constants["p"] == pytest.approx(0.25)

    def test_n_eq_2k_relation(self):
        """n = 2k 관계식"""
        rel = family_translation_n_eq_2k(2, c=4.0, c1=0.0, c2=0.0)
        assert rel.constants["k"] == 1
        assert rel.integrand(3.0) == pytest.approx(3.0)


@pytest.mark.unit
@pytest.mark.error_scenario
class TestTranslationFamilyErrors:
    """평행이동 해 족 에러 테스트"""

    def test_n_equals_2k_rejected(self):
        """n = 2k 는 다른 족"""
        with pytest.raises(FamilyInputError):
            family_translation_n_ne_2k(4, 2, c=1.0, c1=1.0, c2=0.0)

    def test_both_constants_zero(self):
        """c = c1 = 0"""
        with pytest.raises(FamilyInputError):
            family_translation_n_ne_2k(3, 1, c=0.0, c1=0.0, c2=0.0)
        with pytest.raises(FamilyInputError):
            family_translation_n_eq_2k(4, c=0.0, c1=0.0, c2=0.0)

    def test_odd_dimension_for_n_eq_2k(self):
        """홀수 차원"""
        with pytest.raises(FamilyInputError):
            family_translation_n_eq_2k(5, c=1.0, c1=1.0, c2=0.0)

    def test_lightlike_family_needs_null_direction(self, lorentzian3):
        """공간형 방향 거부"""
        phi = AnalyticProfile.constant(1.0)
        with pytest.raises(FamilyInputError):
            family_lightlike_steady(lorentzian3, [0, 1, 0], phi, c=1.0)

    def test_non_positive_constant_phi(self, euclidean3):
        """b <= 0"""
        with pytest.raises(FamilyInputError):
            family_translation_phi_const(euclidean3, [1, 0, 0], b=0.0, c=1.0)


@pytest.mark.unit
class TestRotationFamilies:
    """회전 영곡률 해 족 테스트"""

    def test_gaussian_member_needs_negated_coefficient(self):
        """가우스 해: 인쇄된 부호 대신 반대 부호 사용"""
        member = family_rotation_null_curvature(3, 1, 1.0, "a", c2=2.0, count=16)
        ledger = member.sign_variant
        assert ledger is not None
        assert not ledger.matches_written
        assert ledger.used == "-(n-1)lambda r/c2^2"
        assert max_soliton_residual(member.spec, sample_points([-1.0] * 3, [1.0] * 3, 8)) <= 1e-8

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_linear_phi_member_as_printed(self, k):
        """선형 인자 해는 인쇄된 그대로 성립"""
        member = family_rotation_null_curvature(3, k, 0.5, "b", c0=1.5, count=16)
        assert member.sign_variant is not None
        assert member.sign_variant.matches_written
        assert member.null_sigma_max == pytest.approx(0.0, abs=1e-10)

    def test_lorentzian_signature(self, lorentzian3):
        """로렌츠 부호의 가우스 해"""
        member = family_rotation_null_curvature(3, 2, -0.5, "a", signature=lorentzian3, count=16)
        assert member.spec.signature == lorentzian3

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("case", ["a", "b"])
    def test_all_sigma_vanish(self, n, case):
        """n = 2..6, r in [0.1, 10]: 모든 s <= n 에서 sigma_s = 0"""
        r_values = np.linspace(0.1, 10.0, 200)
        for k in sorted({1, n}):
            member = family_rotation_null_curvature(n, k, 0.5, case, c0=1.5, c2=2.0, count=8)
            assert member.null_sigma_max <= 1e-10
            assert null_sigma_max(member.ansatz, r_values) <= 1e-10

    @pytest.mark.parametrize("n", range(2, 7))
    def test_all_sigma_vanish_lorentzian(self, n):
        """로렌츠 부호의 가우스 해도 sigma_s = 0"""
        member = family_rotation_null_curvature(
            n, n, -0.5, "a", signature=Signature.lorentzian(n), count=8
        )
        assert null_sigma_max(member.ansatz, np.linspace(0.1, 10.0, 200)) <= 1e-10


@pytest.mark.unit
@pytest.mark.error_scenario
class TestRotationFamilyErrors:
    """회전 해 족 에러 테스트"""

    def test_unknown_case(self):
        """알 수 없는 경우"""
        with pytest.raises(FamilyInputError):
            family_rotation_null_curvature(3, 1, 1.0, "c")

    def test_non_positive_constants(self):
        """c2 <= 0, c0 <= 0"""
        with pytest.raises(FamilyInputError):
            family_rotation_null_curvature(3, 1, 1.0, "a", c2=-1.0)
        with pytest.raises(FamilyInputError):
            family_rotation_null_curvature(3, 1, 1.0, "b", c0=0.0)

    def test_signature_length(self):
        """부호 길이 불일치"""
        with pytest.raises(FamilyInputError):
            family_rotation_null_curvature(3, 1, 1.0, "a", signature=Signature.euclidean(4))


@pytest.mark.unit
class TestSignLedger:
    """부호 원장 테스트"""

    def _variant(self, sig: Signature, f: AnalyticProfile) -> TranslationAnsatz:
        return TranslationAnsatz(sig, [1, 0, 0], AnalyticProfile.constant(1.0), f)

    def test_first_vanishing_variant_is_kept(self, euclidean3, cube_points):
        """처음으로 잔차가 사라지는 변형 채택"""
        variants = [
            ("quadratic", self._variant(euclidean3, AnalyticProfile(lambda s: s * s))),
            ("linear", self._variant(euclidean3, AnalyticProfile(lambda s: 3.0 * s))),
        ]
        ledger, kept, spec, residual = settle_variants(
            "TEST", variants, lambda a: a.to_soliton_spec(1, 0.0), cube_points
        )
        assert ledger.written == "quadratic"
        assert ledger.used == "linear"
        assert not ledger.matches_written
        assert kept is variants[1][1]
        assert residual <= 1e-12
        assert [c.vanishes for c in ledger.candidates] == [False, True]

    def test_no_variant_vanishes(self, euclidean3, cube_points):
        """모든 변형 실패"""
        variants = [("quadratic", self._variant(euclidean3, AnalyticProfile(lambda s: s * s)))]
        with pytest.raises(CatalogVerificationError):
            settle_variants("TEST", variants, lambda a: a.to_soliton_spec(1, 0.0), cube_points)


@pytest.mark.unit
class TestReducedTable:
    """해석적 해 표 테스트"""

    def test_phi_const_table_certified(self, euclidean3):
        """상수 인자 표 인증"""
        ansatz = family_translation_phi_const(euclidean3, [1, 0, 0], b=1.5, c=2.0)
        grid = np.linspace(-1.0, 1.0, 41)
        table = reduced_table(ansatz, grid, 1, 0.0, "TRANSLATION_PHI_CONST", {"b": 1.5})
        assert table.certified
        assert len(table.xi) == 41
        assert table.phi == [1.5] * 41
        assert table.round_trip_error == 0.0
        assert list(table.to_dataframe().columns) == ["xi", "phi", "dphi", "ddphi", "residual"]

    def test_wrong_lambda_not_certified(self, euclidean3):
        """잘못된 lambda 는 인증 실패"""
        ansatz = family_translation_phi_const(euclidean3, [1, 0, 0], b=1.5, c=2.0)
        table = reduced_table(ansatz, np.linspace(-1.0, 1.0, 9), 1, 0.3, "TRANSLATION_PHI_CONST")
        assert not table.certified
        assert table.certified_residual == pytest.approx(0.3)
