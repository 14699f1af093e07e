"""
Pytest configuration and shared fixtures for yamabe-lab tests.
"""
import json
import sys
import tempfile
from pathlib import Path
from typing import Any, Callable, Dict, Generator

import numpy as np
import pytest

# Add the project root to path so that ``src`` imports as a package
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.tensor import ScalarField, exp  # noqa: E402
from src.types.models import Signature  # noqa: E402
from src.utils.config import set_default_config  # noqa: E402


# ============================================================================
# Directories and Paths
# ============================================================================

@pytest.fixture(scope="session")
def project_root() -> Path:
    """프로젝트 루트 디렉토리"""
    return Path(__file__).parent.parent


@pytest.fixture
def temp_output_dir() -> Generator[Path, None, None]:
    """임시 출력 디렉토리 (테스트 후 자동 삭제)"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(autouse=True)
def reset_numerics() -> Generator[None, None, None]:
    """테스트마다 기본 수치 설정 초기화"""
    set_default_config(None)
    yield
    set_default_config(None)


# ============================================================================
# Problem specs
# ============================================================================

@pytest.fixture
def write_spec(temp_output_dir: Path) -> Callable[[Dict[str, Any], str], Path]:
    """문제 정의 JSON 파일 작성기"""

    def write(data: Dict[str, Any], name: str = "spec.json") -> Path:
        path = temp_output_dir / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return path

    return write


# ============================================================================
# Fields and signatures
# ============================================================================

@pytest.fixture
def euclidean3() -> Signature:
    """3차원 유클리드 부호"""
    return Signature.euclidean(3)


@pytest.fixture
def lorentzian3() -> Signature:
    """3차원 로렌츠 부호 (-1, 1, 1)"""
    return Signature.lorentzian(3)


@pytest.fixture
def sphere_phi() -> Callable[[int], ScalarField]:
    """입체 사영 구면의 공형 인자 (1 + |x|^2) / 2"""

    def build(n: int) -> ScalarField:
        return ScalarField(
            n,
            lambda xs: 0.5 * (1.0 + sum(c * c for c in xs)),
            positive=True,
            name="sphere",
        )

    return build


@pytest.fixture
def wavy_phi() -> ScalarField:
    """원점 근방에서 양수인 비대칭 공형 인자"""
    return ScalarField(
        3,
        lambda xs: 1.5 + 0.1 * xs[0] * xs[0] + 0.2 * xs[1] * xs[2] + 0.1 * exp(0.3 * xs[2]),
        positive=True,
        name="wavy",
    )


@pytest.fixture
def sample_point() -> np.ndarray:
    """검증용 고정 점"""
    return np.array([0.3, -0.2, 0.5])
