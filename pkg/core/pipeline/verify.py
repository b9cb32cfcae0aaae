from typing import Callable, List, Optional, Sequence, Set, Tuple

from loguru import logger

from core.characters import (
    CharacterIdentity,
    character_table,
    g_identities,
    g_restrictions,
    h_identities,
    h_restrictions,
    l_identities,
    l_restrictions,
    printed_discrepancies,
)
from core.groups import build_group
from core.pipeline.chow import chow_g, chow_h, chow_l
from core.pipeline.commands import cmd_group_info, cmd_table
from core.pipeline.config import PipelineConfig
from core.pipeline.detect import cmd_detect
from core.pipeline.properties import property_stage
from core.pipeline.reference import CLASS_COUNTS, DETECTION_BOUNDS, TABLE_KEYS
from core.pipeline.report import Report, ReportItem
from core.utils import PipelineCheckError, Verdict, WorkbenchError

"""
完整檢查

依序跑過所有區段，失敗的子檢查記錄後繼續；任何一筆 FAIL 都讓 verify 的結束碼非零。
"""


IDENTITY_CATALOGS: List[Tuple[str, Callable]] = [
    ("H", h_identities),
    ("H3", h_identities),
    ("L", l_identities),
    ("L3", l_identities),
    ("G", g_identities),
]

RESTRICTION_CATALOGS: List[Tuple[str, Callable]] = [
    ("H", h_restrictions),
    ("H3", h_restrictions),
    ("L", l_restrictions),
    ("G", g_restrictions),
]


def add_identities(
    report: Report,
    key: str,
    identities: Sequence[CharacterIdentity],
    documented: Optional[Set[str]] = None,
) -> None:
    """照抄的式子（expected=None）只記錄；其餘逐條比對。給定 documented 時，另比對不成立的照抄式集合"""

    prefix: str = "" if identities and identities[0].key.startswith(f"{key}.") else f"{key}/"
    for identity in identities:
        item_id: str = prefix + identity.key
        if identity.expected is None:
            report.record(item_id, f"{identity.claim} (printed form)", "holds" if identity.holds else "fails")
        else:
            report.check(item_id, identity.claim, identity.holds, identity.expected)
    if documented is not None:
        found: List[str] = sorted(identity.key for identity in identities if identity.discrepancy)
        report.check(
            f"{key}.printed.corrections",
            "printed forms fail exactly where the recorded corrections say",
            ", ".join(found) or "none",
            ", ".join(sorted(documented)) or "none",
        )


def _identity_section(report: Report, key: str, catalog: Callable) -> None:
    table = character_table(build_group(key))
    add_identities(report, key, catalog(table), printed_discrepancies(table))


def _error_item(section: str, error: Exception) -> ReportItem:
    return ReportItem(
        f"{section}.error",
        f"section {section} runs to completion",
        f"{type(error).__name__}: {error}",
        "no error",
        Verdict.FAIL,
    )


def run_section(report: Report, section: str, body: Callable[[], None]) -> None:
    """執行一個區段；例外轉成 FAIL 項目，其他區段照常進行"""

    logger.info(f"verify: {section}")
    try:
        body()
    except PipelineCheckError as e:
        report.add(e.item if isinstance(e.item, ReportItem) else _error_item(section, e))
    except WorkbenchError as e:
        logger.error(f"verify: {section} failed: {e}")
        report.add(_error_item(section, e))


def cmd_verify(config: Optional[PipelineConfig] = None) -> Report:
    """
    - Description:
        類數、特徵標表、恆等式與限制目錄、三個 Chow 環、偵測上界與性質檢查
    - Parameters:
        - config: Optional[PipelineConfig]
            省略時使用 PipelineConfig.default()
    - Return:
        - Report
            非 strict；report.ok 為 False 時 CLI 以狀態 1 結束
    """

    config = config if config is not None else PipelineConfig.default()
    report: Report = Report("verify")

    for key in CLASS_COUNTS:
        run_section(report, f"classes.{key}", lambda key=key: report.extend(cmd_group_info(key)))
    for key in TABLE_KEYS:
        run_section(report, f"table.{key}", lambda key=key: report.extend(cmd_table(key)))

    for key, catalog in IDENTITY_CATALOGS:
        run_section(
            report,
            f"identities.{key}",
            lambda key=key, catalog=catalog: _identity_section(report, key, catalog),
        )
    for key, catalog in RESTRICTION_CATALOGS:
        run_section(
            report,
            f"restrictions.{key}",
            lambda key=key, catalog=catalog: add_identities(report, key, catalog(build_group(key))),
        )

    run_section(report, "chow.H", lambda: chow_h(config, report))
    run_section(report, "chow.L", lambda: chow_l(config, report))
    run_section(report, "chow.G", lambda: chow_g(config, report))

    for key in DETECTION_BOUNDS:
        run_section(report, f"detect.{key}", lambda key=key: report.extend(cmd_detect(key)))

    run_section(report, "properties", lambda: property_stage(config, report))

    logger.info(report.summary())
    return report
