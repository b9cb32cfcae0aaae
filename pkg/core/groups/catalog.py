import re
from pathlib import Path
from typing import Callable, Dict

from core.groups.matrix_group import (
    FiniteMatrixGroup,
    direct_product,
    parse_group_text,
    unitriangular_group,
)
from core.groups.subgroups import build_l_group, named_subgroup
from core.utils import UnknownSubgroupError

"""CLI 群代號 → FiniteMatrixGroup"""


_UNITRIANGULAR = re.compile(r"^U\((\d+),(\d+)\)$")


def _with_basis(group: FiniteMatrixGroup) -> FiniteMatrixGroup:
    group.basis = list(group.generators)
    return group


def _c2() -> FiniteMatrixGroup:
    group = unitriangular_group(2, 2)
    group.name = "C2"
    return _with_basis(group)


def _c2_squared() -> FiniteMatrixGroup:
    return _with_basis(direct_product(_c2(), _c2(), "C2^2"))


def _c4() -> FiniteMatrixGroup:
    group = named_subgroup(unitriangular_group(3, 2), "C_H(1,1)")
    group.name = "C4"
    return group


def _trivial() -> FiniteMatrixGroup:
    group = unitriangular_group(1, 2)
    group.name = "trivial"
    return group


GROUP_KEYS: Dict[str, Callable[[], FiniteMatrixGroup]] = {
    "H": lambda: unitriangular_group(3, 2),
    "G": lambda: unitriangular_group(4, 2),
    "L": lambda: build_l_group(2),
    "H3": lambda: unitriangular_group(3, 3),
    "L3": lambda: build_l_group(3),
    "C2": _c2,
    "C2^2": _c2_squared,
    "C4": _c4,
    "trivial": _trivial,
}
"""固定代號；另支援 U(n,p)、<母群>/<子群名> 與 file:<path>"""


def build_group(key: str) -> FiniteMatrixGroup:
    """
    - Description:
        解析群代號
    - Parameters:
        - key: str
            例如 "G"、"U(3,3)"、"G/C2_4G"、"H/C_H(1,1)"、"file:groups/d8.txt"
    - Return:
        - FiniteMatrixGroup
    """

    key = key.strip()
    if key.startswith("file:"):
        path: Path = Path(key[len("file:"):])
        return parse_group_text(path.read_text(encoding="utf-8"), name=path.stem)

    if "/" in key:
        ambient_key, label = key.split("/", 1)
        return named_subgroup(build_group(ambient_key), label)

    match = _UNITRIANGULAR.match(key.replace(" ", ""))
    if match:
        return unitriangular_group(int(match.group(1)), int(match.group(2)))

    factory = GROUP_KEYS.get(key)
    if factory is None:
        raise UnknownSubgroupError(f"unknown group key {key!r}")
    return factory()
