import sys
from pathlib import Path
from typing import Callable

import pytest

_PROJECT_ROOT: Path = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(_PROJECT_ROOT))

from core.groups import FiniteMatrixGroup, build_group, build_l_group, unitriangular_group

"""共用 fixture：小群全部在記憶體中枚舉，session 範圍共享以避免重算乘法表"""


@pytest.fixture(scope="session")
def h_group() -> FiniteMatrixGroup:
    """U(3,2)，8 階"""

    return unitriangular_group(3, 2)


@pytest.fixture(scope="session")
def g_group() -> FiniteMatrixGroup:
    """U(4,2)，64 階"""

    return unitriangular_group(4, 2)


@pytest.fixture(scope="session")
def l_group() -> FiniteMatrixGroup:
    """L_0 ⊆ U(4,2)，32 階"""

    return build_l_group(2)


@pytest.fixture
def make_group() -> Callable[[str], FiniteMatrixGroup]:
    """依 CLI 群代號建立群的 factory"""

    def _make_group(key: str) -> FiniteMatrixGroup:
        return build_group(key)

    return _make_group
