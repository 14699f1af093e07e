"""
Unit tests for the verified soliton catalog
"""
import pytest

from src.families import (
    FamilyInputError,
    UnknownCatalogEntryError,
    canonical_id,
    catalog,
    catalog_defaults,
    catalog_ids,
    catalog_metric,
    describe_catalog,
    family_translation_n_eq_2k,
    is_catalog_id,
)
from src.quadrature import invert
from src.tensor import max_soliton_residual, sample_points

ALL_IDS = ["EX21", "EX22", "EX23", "EX24_GAUSSIAN", "EX25_LINEAR", "EX26_CIGARLIKE"]


@pytest.mark.unit
class TestCatalogEntries:
    """카탈로그 항목 검증 테스트"""

    @pytest.mark.parametrize("entry_id", ALL_IDS)
    def test_default_entry_verifies(self, entry_id):
        """기본 매개변수 항목의 잔차"""
        entry = catalog(entry_id, count=16)
        assert entry.id == entry_id
        assert entry.max_residual <= 1e-8
        assert entry.sample_count == 16
        assert entry.k_range[0] <= entry.spec.k <= entry.k_range[1]

    def test_cigar_expected_lambda(self):
        """EX26: lambda = (n-2)/2 정확값"""
        assert catalog("EX26", count=8).expected_lambda_exact == "1/2"
        entry = catalog("EX26", count=8, n=4)
        assert entry.expected_lambda_exact == "1"
        assert entry.expected_lambda == 1.0

    def test_constant_potential_has_one_variant(self):
        """EX22: 상수 f 는 변형 하나만 검사"""
        ledger = catalog("EX22", count=8).sign_variant
        assert [c.label for c in ledger.candidates] == ["f=c0"]
        assert ledger.used == "f=c0"
        assert ledger.matches_written

    @pytest.mark.parametrize("n,c", [(4, -12.0), (6, 30.0)])
    def test_ex23_profile_solves_relation(self, n, c):
        """EX23: phi = (n xi/(n-1) + c4)^((n-1)/n) 는 c1 = 0 관계식의 해"""
        entry = catalog("EX23", count=8, n=n, c4=1.0)
        assert entry.params["c"] == pytest.approx(c)
        rel = family_translation_n_eq_2k(n, c=c, c1=0.0, c2=0.0)
        for xi in (-0.2, 0.0, 0.3, 0.6):
            assert entry.ansatz.phi.value(xi) == pytest.approx(invert(rel, xi), rel=1e-9)

    def test_gaussian_sign_ledger(self):
        """EX24: 반대 부호 -(n-1) lambda 사용"""
        entry = catalog("EX24_GAUSSIAN", count=16, **{"lambda": 1.0})
        ledger = entry.sign_variant
        assert ledger.written == "lambda/2"
        assert ledger.used == "-(n-1)lambda"
        assert not ledger.matches_written
        assert entry.expected_lambda_exact == "1"

    def test_linear_phi_as_printed(self):
        """EX25: 인쇄된 형태 그대로 성립"""
        entry = catalog("EX25", count=16, k=3)
        assert entry.sign_variant.matches_written
        assert entry.spec.k == 3

    def test_lightlike_entry_is_lorentzian(self):
        """EX21: 로렌츠 부호와 광선형 방향"""
        entry = catalog("EX21", count=16, n=4, theta=2)
        assert entry.spec.signature.eps == [-1, 1, 1, 1]
        assert entry.ansatz.is_lightlike
        assert entry.expected_lambda == 0.0

    def test_same_seed_same_verification(self):
        """같은 시드의 재현성"""
        a = catalog("EX22", seed=4, count=12)
        b = catalog("EX22", seed=4, count=12)
        assert a.max_residual == b.max_residual

    def test_entry_residual_on_fresh_points(self):
        """다른 점에서도 잔차 0"""
        entry = catalog("EX26", count=8)
        points = sample_points(entry.box_lo, entry.box_hi, count=16, seed=11, accept=entry.accept)
        assert max_soliton_residual(entry.spec, points) <= 1e-8


@pytest.mark.unit
class TestCatalogLookup:
    """카탈로그 조회 테스트"""

    def test_ids(self):
        """항목 목록"""
        assert catalog_ids() == ALL_IDS
        assert [item["id"] for item in describe_catalog()] == ALL_IDS

    def test_aliases(self):
        """별칭과 대소문자"""
        assert canonical_id("ex26") == "EX26_CIGARLIKE"
        assert canonical_id("EX24") == "EX24_GAUSSIAN"
        assert is_catalog_id("ex25")
        assert not is_catalog_id("profile.csv")

    def test_defaults_are_copies(self):
        """기본값 사본 반환"""
        defaults = catalog_defaults("EX21")
        defaults["theta"] = 99
        assert catalog_defaults("EX21")["theta"] == 1

    def test_metric_on_other_signature(self):
        """다른 부호의 계량 (검증 없음)"""
        phi, sig = catalog_metric("EX21", signature=[1, 1, 1])
        assert sig.is_riemannian
        assert phi.value([0.0, 0.0, 0.0]) == pytest.approx(1.0)


@pytest.mark.unit
@pytest.mark.error_scenario
class TestCatalogErrors:
    """카탈로그 에러 테스트"""

    def test_unknown_id(self):
        """알 수 없는 항목"""
        with pytest.raises(UnknownCatalogEntryError):
            catalog("EX99")

    def test_unknown_parameter(self):
        """알 수 없는 매개변수"""
        with pytest.raises(FamilyInputError):
            catalog("EX21", zeta=1.0)

    def test_non_numeric_parameter(self):
        """숫자가 아닌 매개변수"""
        with pytest.raises(FamilyInputError):
            catalog("EX21", c="one")

    def test_ex22_rejects_n_equal_2k(self):
        """EX22: n = 2k 거부"""
        with pytest.raises(FamilyInputError):
            catalog("EX22", n=2, k=1)

    def test_ex23_needs_even_dimension(self):
        """EX23: 짝수 n >= 4"""
        with pytest.raises(FamilyInputError):
            catalog("EX23", n=5)

    def test_ex26_fixes_first_order(self):
        """EX26: k = 1 고정"""
        with pytest.raises(FamilyInputError):
            catalog("EX26", k=2)

    def test_ex25_needs_k_at_least_two(self):
        """EX25: k >= 2"""
        with pytest.raises(FamilyInputError):
            catalog("EX25", k=1)

    def test_signature_length(self):
        """부호 길이 불일치"""
        with pytest.raises(FamilyInputError):
            catalog("EX24", signature=[1, 1])
