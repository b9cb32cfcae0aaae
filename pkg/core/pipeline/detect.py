from typing import Dict, List, Optional, Set, Tuple

from loguru import logger

from core.characters import CharacterTable, character_table
from core.groups import (
    DetectionBound,
    FiniteMatrixGroup,
    build_group,
    build_l_group,
    centralizer,
    detection_bound,
    direct_product,
    elementary_abelian_subgroups,
    group_isomorphic,
    unitriangular_group,
)
from core.pipeline.commands import report_name
from core.pipeline.reference import DETECTION_BOUNDS, NONCENTRAL_CENTRALIZER_TYPES
from core.pipeline.report import Report

"""偵測上界 n − c 與基本交換子群的中心化子類型"""


WHOLE_GROUP: str = "whole group"
ELEMENTARY_ABELIAN: str = "elementary abelian"
UNCLASSIFIED: str = "unclassified"


class CentralizerClassifier:
    """
    把中心化子歸到 {elementary abelian, L, C2 x U(3,2), whole group}；
    其他情況回報 unclassified，不做猜測。結果以元素集合快取。
    """

    def __init__(self, group: FiniteMatrixGroup):
        self.group: FiniteMatrixGroup = group
        self._cache: Dict[frozenset, str] = {}
        self._models: Optional[Dict[int, List[Tuple[str, FiniteMatrixGroup]]]] = None

    def models(self) -> Dict[int, List[Tuple[str, FiniteMatrixGroup]]]:
        """階 → [(類型名稱, 模型群)]；只在第一次需要比對同構時建立"""

        if self._models is None:
            c2: FiniteMatrixGroup = build_group("C2")
            self._models = {
                16: [("C2 x U(3,2)", direct_product(c2, unitriangular_group(3, 2), "C2 x U(3,2)"))],
                32: [("L", build_l_group(2))],
            }
        return self._models

    def classify(self, sub: FiniteMatrixGroup) -> str:
        members: frozenset = frozenset(sub.keys.tolist())
        if members in self._cache:
            return self._cache[members]

        if sub.order == self.group.order:
            kind: str = WHOLE_GROUP
        elif sub.is_abelian and sub.exponent <= self.group.p:
            kind = ELEMENTARY_ABELIAN
        else:
            kind = UNCLASSIFIED
            if self.group.p == 2:
                for name, model in self.models().get(sub.order, []):
                    if group_isomorphic(sub, model):
                        kind = name
                        break
        self._cache[members] = kind
        logger.debug(f"{self.group.name}: centralizer of order {sub.order} classified as {kind}")
        return kind


def cmd_detect(key: str) -> Report:
    """
    - Description:
        最小忠實表示次數 n、中心秩 c、上界 n − c，以及每個基本交換子群 V 的 C_G(V)
    - Parameters:
        - key: str
            群代號
    - Return:
        - Report
    """

    group: FiniteMatrixGroup = build_group(key)
    table: CharacterTable = character_table(group)
    bound: DetectionBound = detection_bound(group, table)
    report: Report = Report(report_name("detect", key))

    faithful: str = " + ".join(table.labels[i] for i in bound.faithful_set) or "(empty)"
    report.note(
        f"{group.name}: minimal faithful degree {bound.min_faithful_degree} via {faithful}",
        f"center rank {bound.center_rank}",
    )
    if key in DETECTION_BOUNDS:
        report.check(f"{key}.detect.bound", "detection bound n - c", bound.bound, DETECTION_BOUNDS[key])
    else:
        report.record(f"{key}.detect.bound", "detection bound n - c", bound.bound)

    classifier: CentralizerClassifier = CentralizerClassifier(group)
    center_keys: Set[int] = set(group.keys[group.center_indices].tolist())
    noncentral: Set[str] = set()
    unclassified: List[str] = []
    for v in elementary_abelian_subgroups(group):
        c: FiniteMatrixGroup = centralizer(group, v.fusion_into(group).tolist(), f"C({v.name})")
        kind: str = classifier.classify(c)
        central: bool = set(v.keys.tolist()) <= center_keys
        report.note(
            f"{v.name} (rank {len(v.basis or [])}{', central' if central else ''}): |C| = {c.order}, {kind}"
        )
        if not central:
            noncentral.add(kind)
        if kind == UNCLASSIFIED:
            unclassified.append(v.name)

    types: List[str] = sorted(noncentral)
    if key in NONCENTRAL_CENTRALIZER_TYPES:
        report.check(
            f"{key}.detect.centralizers",
            "types of centralizers of non-central elementary abelian subgroups",
            types,
            sorted(NONCENTRAL_CENTRALIZER_TYPES[key]),
        )
    else:
        report.record(f"{key}.detect.centralizers", "types of centralizers of non-central elementary abelian subgroups", types)
    if unclassified:
        report.record(f"{key}.detect.unclassified", "subgroups whose centralizer has no listed type", ", ".join(unclassified))
    return report
