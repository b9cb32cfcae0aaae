from pathlib import Path

import pandas as pd
import pytest

from core.pipeline import Report, ReportItem
from core.pipeline.report import CSV_ENCODING
from core.utils import PipelineCheckError, Verdict

"""報告項目的判定、strict 中止與輸出格式"""


# === ReportItem ===


def test_check_compares_text():
    assert ReportItem.check("a", "claim", [2, 2, 4], [2, 2, 4]).verdict == Verdict.PASS
    assert ReportItem.check("a", "claim", 4, "4").verdict == Verdict.PASS  # 以字串比對
    assert ReportItem.check("a", "claim", 3, 4).failed


def test_skipped_and_recorded():
    skipped = ReportItem.skipped("a", "claim", "bound too low", expected=3)
    recorded = ReportItem.recorded("b", "claim", "fails")

    assert skipped.verdict == Verdict.SKIP
    assert skipped.computed == "skipped: bound too low"
    assert (recorded.verdict, recorded.computed, recorded.expected) == (Verdict.SKIP, "fails", "recorded")
    assert not skipped.failed and not recorded.failed


def test_line_protocol():
    item = ReportItem.check("G.gr1", "claim", [2, 2, 2], [2, 2, 2])

    assert item.line() == "G.gr1|PASS|[2, 2, 2]|[2, 2, 2]"


# === Report ===


def test_counts_and_summary():
    report = Report("demo")
    report.check("a", "ok", 1, 1)
    report.check("b", "bad", 1, 2)
    report.skip("c", "later", "no data")
    report.record("d", "printed", "holds")

    assert report.counts() == {"PASS": 1, "FAIL": 1, "SKIP": 2}
    assert [item.id for item in report.failed] == ["b"]
    assert not report.ok
    assert report.summary() == "demo: 1 PASS, 1 FAIL, 2 SKIP"


def test_strict_report_stops_on_failure():
    report = Report("demo", strict=True)
    report.check("a", "ok", 1, 1)

    with pytest.raises(PipelineCheckError) as excinfo:
        report.check("b", "bad", 1, 2)
    assert isinstance(excinfo.value.item, ReportItem)
    assert excinfo.value.item.id == "b"


def test_extend_rechecks_in_strict_mode():
    loose = Report("loose")
    loose.check("x", "bad", 0, 1)
    loose.note("a note")

    with pytest.raises(PipelineCheckError):
        Report("strict", strict=True).extend(loose)

    merged = Report("merged")
    merged.extend(loose)
    assert merged.notes == ["a note"]
    assert len(merged.failed) == 1


def test_text_shows_values_only_when_not_passing():
    report = Report("demo")
    report.note("header line")
    report.check("a", "ok", 1, 1)
    report.check("b", "bad", 1, 2)
    text = report.text()

    assert text.startswith("== demo ==\nheader line\n")
    assert "computed: 1" in text and "expected: 2" in text
    assert text.count("computed:") == 1
    assert text.endswith(report.summary())


def test_csv_round_trip(tmp_path: Path):
    report = Report("demo")
    report.check("a", "ok", 1, 1)
    report.skip("b", "later", "no data")
    path = report.save_csv(tmp_path / "demo.csv")

    frame = pd.read_csv(path, encoding=CSV_ENCODING)
    assert list(frame.columns) == ["id", "claim", "computed", "expected", "verdict"]
    assert frame["verdict"].tolist() == ["PASS", "SKIP"]
