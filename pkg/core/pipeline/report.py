from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd
from loguru import logger

from core.config import RESULTS_DIR_PATH
from core.utils import PipelineCheckError, Verdict

"""
檢查報告

每個 ReportItem 記錄一個可重現的數字：computed 與 expected 都以字串保存，
逐字相等才判定 PASS。輸出有兩種：給人看的 text()，以及逐行的
`id|verdict|computed|expected` 協定。
"""


CSV_ENCODING: str = "utf-8-sig"  # Excel 開啟不會亂碼


@dataclass(frozen=True)
class ReportItem:
    id: str
    claim: str
    computed: str
    expected: str
    verdict: Verdict

    @classmethod
    def check(cls, id: str, claim: str, computed: Any, expected: Any) -> "ReportItem":
        computed_text: str = str(computed)
        expected_text: str = str(expected)
        verdict: Verdict = Verdict.PASS if computed_text == expected_text else Verdict.FAIL
        return cls(id, claim, computed_text, expected_text, verdict)

    @classmethod
    def skipped(cls, id: str, claim: str, reason: str, expected: Any = "") -> "ReportItem":
        return cls(id, claim, f"skipped: {reason}", str(expected), Verdict.SKIP)

    @classmethod
    def recorded(cls, id: str, claim: str, computed: Any) -> "ReportItem":
        """照抄的式子：只記錄計算結果，不參與判定"""

        return cls(id, claim, str(computed), "recorded", Verdict.SKIP)

    @property
    def failed(self) -> bool:
        return self.verdict == Verdict.FAIL

    def line(self) -> str:
        return f"{self.id}|{self.verdict.value}|{self.computed}|{self.expected}"


class Report:
    """
    - Description:
        一個子命令的報告
    - Parameters:
        - name: str
            報告名稱，也是 CSV 檔名
        - strict: bool
            True 時第一筆 FAIL 立即以 PipelineCheckError 中止
    """

    def __init__(self, name: str, strict: bool = False):
        self.name: str = name
        self.strict: bool = strict
        self.items: List[ReportItem] = []
        self.notes: List[str] = []  # 不參與判定的輸出（表格、關係式列表等）

    # === 加入項目 ===

    def add(self, item: ReportItem) -> ReportItem:
        self.items.append(item)
        if item.failed:
            logger.warning(f"[{self.name}] FAIL {item.line()}")
            if self.strict:
                raise PipelineCheckError(f"{self.name}: check failed: {item.line()}", item)
        else:
            logger.debug(f"[{self.name}] {item.line()}")
        return item

    def check(self, id: str, claim: str, computed: Any, expected: Any) -> ReportItem:
        return self.add(ReportItem.check(id, claim, computed, expected))

    def skip(self, id: str, claim: str, reason: str, expected: Any = "") -> ReportItem:
        return self.add(ReportItem.skipped(id, claim, reason, expected))

    def record(self, id: str, claim: str, computed: Any) -> ReportItem:
        return self.add(ReportItem.recorded(id, claim, computed))

    def note(self, *lines: str) -> None:
        self.notes.extend(lines)

    def extend(self, other: "Report") -> None:
        """併入另一份報告；strict 時仍逐筆檢查"""

        for item in other.items:
            self.add(item)
        self.notes.extend(other.notes)

    # === 彙總 ===

    @property
    def failed(self) -> List[ReportItem]:
        return [item for item in self.items if item.failed]

    @property
    def ok(self) -> bool:
        return not self.failed

    def counts(self) -> Dict[str, int]:
        result: Dict[str, int] = {v.value: 0 for v in Verdict}
        for item in self.items:
            result[item.verdict.value] += 1
        return result

    def summary(self) -> str:
        counts: Dict[str, int] = self.counts()
        return f"{self.name}: " + ", ".join(f"{n} {k}" for k, n in counts.items())

    # === 輸出 ===

    def lines(self) -> List[str]:
        return [item.line() for item in self.items]

    def text(self) -> str:
        out: List[str] = [f"== {self.name} =="]
        out.extend(self.notes)
        if self.items:
            if self.notes:
                out.append("")
            width: int = max(len(item.id) for item in self.items)
            for item in self.items:
                out.append(f"[{item.verdict.value:<4}] {item.id:<{width}}  {item.claim}")
                if item.verdict != Verdict.PASS:
                    out.append(f"       computed: {item.computed}")
                    out.append(f"       expected: {item.expected}")
            out.append(self.summary())
        return "\n".join(out)

    def to_frame(self) -> pd.DataFrame:
        columns: List[str] = ["id", "claim", "computed", "expected", "verdict"]
        rows: List[Dict[str, Any]] = []
        for item in self.items:
            row: Dict[str, Any] = asdict(item)
            row["verdict"] = item.verdict.value
            rows.append(row)
        return pd.DataFrame(rows, columns=columns)

    def save_csv(self, path: Optional[Path] = None) -> Path:
        """寫出 CSV；未指定路徑時存到 RESULTS_DIR_PATH/<name>.csv"""

        save_path: Path = path if path is not None else RESULTS_DIR_PATH / f"{self.name}.csv"
        save_path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(save_path, index=False, encoding=CSV_ENCODING)
        logger.info(f"* Report saved to: {save_path}")
        return save_path
