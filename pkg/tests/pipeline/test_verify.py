from pathlib import Path

import pytest

from core.characters import CharacterIdentity, CharacterTable, VirtualRep, character_table
from core.config import BUILTIN_COHOM_FILES, DATA_DIR_PATH
from core.groups import FiniteMatrixGroup
from core.pipeline import PipelineConfig, Report, cmd_verify
from core.pipeline.chow import chow_h
from core.pipeline.verify import add_identities, run_section
from core.utils import CohomDataError, GroupFamily, PipelineCheckError, Verdict

"""verify：區段錯誤轉成 FAIL、照抄式只記錄、整體執行"""


@pytest.fixture(scope="module")
def h_table(h_group: FiniteMatrixGroup) -> CharacterTable:
    return character_table(h_group)


# === 恆等式 ===


def test_add_identities(h_table: CharacterTable):
    one = VirtualRep.basis(h_table, 0)
    other = VirtualRep.basis(h_table, 1)
    identities = [
        CharacterIdentity("same", "x = x", one, one),
        CharacterIdentity("printed", "x = y as printed", one, other, expected=None),
        CharacterIdentity("wrong", "x = y", one, other),
    ]
    report = Report("identities")
    add_identities(report, "H", identities)

    assert [item.id for item in report.items] == ["H/same", "H/printed", "H/wrong"]
    assert [item.verdict for item in report.items] == [Verdict.PASS, Verdict.SKIP, Verdict.FAIL]
    assert report.items[1].computed == "fails"


def test_printed_corrections_check(h_table: CharacterTable):
    one = VirtualRep.basis(h_table, 0)
    other = VirtualRep.basis(h_table, 1)
    identities = [CharacterIdentity("H.printed", "x = y as printed", one, other, expected=None)]

    matching = Report("identities")
    add_identities(matching, "H", identities, {"H.printed"})
    undocumented = Report("identities")
    add_identities(undocumented, "H", identities, set())

    assert matching.items[-1].id == "H.printed.corrections"
    assert matching.items[-1].verdict == Verdict.PASS
    assert undocumented.items[-1].verdict == Verdict.FAIL
    assert undocumented.items[-1].computed == "H.printed"
    assert undocumented.items[-1].expected == "none"


def test_add_identities_keeps_qualified_keys(h_table: CharacterTable):
    one = VirtualRep.basis(h_table, 0)
    report = Report("identities")
    add_identities(report, "H", [CharacterIdentity("H.adams", "claim", one, one)])

    assert report.items[0].id == "H.adams"


# === 區段 ===


def test_run_section_turns_errors_into_items():
    report = Report("verify")

    def broken() -> None:
        raise CohomDataError("bad file")

    def failing() -> None:
        Report("inner", strict=True).check("inner.x", "claim", 1, 2)

    run_section(report, "broken", broken)
    run_section(report, "failing", failing)

    assert [item.id for item in report.items] == ["broken.error", "inner.x"]
    assert report.items[0].computed == "CohomDataError: bad file"
    assert all(item.verdict == Verdict.FAIL for item in report.items)


def test_config_error_becomes_error_item():
    report = Report("verify")

    def bad_config() -> None:
        raise PipelineCheckError("no cohomology data configured")

    run_section(report, "chow.X", bad_config)
    assert report.items[0].id == "chow.X.error"


def test_tampered_source_fails_chow_section(tmp_path: Path):
    text: str = (DATA_DIR_PATH / BUILTIN_COHOM_FILES["8#3"]).read_text(encoding="utf-8")
    path: Path = tmp_path / "tampered.txt"
    path.write_text(
        text.replace("MAP b1_0 -> 0\nMAP b1_1 -> c1_0", "MAP b1_0 -> c1_1\nMAP b1_1 -> c1_0", 1),
        encoding="utf-8",
    )
    config = PipelineConfig(degree_bound=3)
    config.cohom_sources[GroupFamily.H] = str(path)
    report = Report("verify")

    run_section(report, "chow.H", lambda: chow_h(config, report))

    error = report.items[-1]
    assert error.id == "chow.H.error"
    assert error.computed.startswith("RelationViolationError:")
    assert "b1_0*b1_1" in error.computed
    assert [item.id for item in report.failed] == ["chow.H.error"]


# === 全部 ===


@pytest.mark.slow
@pytest.mark.timeout(3600)
def test_verify_low_bound():
    report = cmd_verify(PipelineConfig(degree_bound=3))
    skipped = {item.id for item in report.items if item.verdict == Verdict.SKIP}

    assert report.ok, [item.line() for item in report.failed]
    assert {"H.presentation.counts", "L.presentation.ideal", "G.presentation.counts"} <= skipped
    assert "G.deg3.balance" in {item.id for item in report.items}


def test_slow_runs_have_timeouts(request):
    marks = {m.name: m.args for m in test_verify_low_bound.pytestmark}

    assert request.config.getini("timeout") == "1800"
    assert marks["timeout"] == (3600,)
