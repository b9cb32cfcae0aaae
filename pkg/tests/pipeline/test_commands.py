import pytest

from core.pipeline import Report, cmd_cycle_map, cmd_gr_gamma, cmd_group_info, cmd_table, parse_choice
from core.pipeline.commands import degree_multiset, report_name
from core.utils import PipelineCheckError, Verdict

"""單項子命令：group info、table、gr-gamma、cycle-map"""


def verdict_of(report: Report, item_id: str) -> Verdict:
    return next(item.verdict for item in report.items if item.id == item_id)


# === 小工具 ===


def test_report_name():
    assert report_name("group", "U(3,3)") == "group_U_3_3"
    assert report_name("table", "G/C2_4G") == "table_G_C2_4G"
    assert report_name("detect", "C2^2") == "detect_C2_2"


def test_degree_multiset():
    assert degree_multiset([1, 1, 1, 1, 2]) == "1^4,2"
    assert degree_multiset([2, 1, 4, 2]) == "1,2^2,4"


def test_parse_choice():
    assert parse_choice("c1(f(1,0))=b1_1^2@1") == ("c1(f(1,0))", "b1_1^2", "1")
    assert parse_choice(" c1(phi0) = b1_1^2 @ 2 ") == ("c1(phi0)", "b1_1^2", "2")


@pytest.mark.parametrize("text", ["c1(phi0)=b1_1^2", "c1(phi0)@1", "=b1_1^2@1", "c1(phi0)=@1", "c1(phi0)=b1_1^2@"])
def test_parse_choice_rejects(text: str):
    with pytest.raises(PipelineCheckError):
        parse_choice(text)


# === group info ===


@pytest.mark.parametrize("key,classes", [("H", 5), ("L", 14), ("G", 16), ("H3", 11)])
def test_group_info(key: str, classes: int):
    report = cmd_group_info(key)

    assert report.ok
    assert f"conjugacy classes: {classes}" in report.notes
    assert verdict_of(report, f"{key}.classes.burnside") == Verdict.PASS
    assert verdict_of(report, f"{key}.classes.closed_form") == Verdict.PASS


def test_group_info_without_reference():
    report = cmd_group_info("C2^2")

    assert report.name == "group_C2_2"
    assert [item.id for item in report.items] == ["C2^2.classes.burnside"]
    assert "conjugacy classes: 4" in report.notes


# === table ===


def test_table_h():
    report = cmd_table("H")

    assert report.ok
    assert verdict_of(report, "H.table.degrees") == Verdict.PASS
    assert report.notes[0].startswith("U(3,2): 5 irreducibles")


def test_table_without_reference_notes_degrees():
    report = cmd_table("C4")

    assert report.ok
    assert "degrees: 1^4" in report.notes
    assert all(not item.id.endswith(".degrees") for item in report.items)


# === gr-gamma ===


def test_gr_gamma_h():
    report = cmd_gr_gamma("H", 2)

    assert report.ok
    assert report.name == "gr2_H"
    assert verdict_of(report, "H.gr2") == Verdict.PASS
    assert verdict_of(report, "H.order.c2(phi)") == Verdict.PASS
    assert "H.order.c1(phi)" not in [item.id for item in report.items]


def test_gr_gamma_rejects_degree_zero():
    with pytest.raises(PipelineCheckError):
        cmd_gr_gamma("H", 0)


# === cycle-map ===


def test_cycle_map_h():
    report = cmd_cycle_map("H")

    assert report.ok
    assert verdict_of(report, "H.cycle.candidates") == Verdict.PASS
    assert sum(note.startswith("-- candidate") for note in report.notes) == 2


def test_cycle_map_choice_is_recorded():
    report = cmd_cycle_map("H", choices=[parse_choice("c1(f(1,0))=b1_1^2@1")])
    item = next(item for item in report.items if item.id == "H.cycle.candidates")

    assert report.ok
    assert (item.verdict, item.computed, item.expected) == (Verdict.SKIP, "1", "recorded")


def test_cycle_map_needs_chern_generators():
    with pytest.raises(PipelineCheckError):
        cmd_cycle_map("C4")
