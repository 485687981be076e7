import pytest

from roughring.errata import CONFIRMED, DISCREPANCY, errata_report, format_errata


@pytest.fixture(scope="module")
def full():
    return errata_report()


def by_id(entries):
    return {e.id: e for e in entries}


def test_full_report_contents(full):
    ids = by_id(full)
    assert len(full) == 35
    for key in ("EX31-B2", "EX32", "P42-mul"):
        assert ids[key].is_discrepancy
    assert ids["EX31-B2"].computed == "lower {}, upper {e f}"
    assert ids["EX32"].computed == "lower {1 2}, upper {1 2 3 5 6}"
    assert ids["EX21-A"].status == ids["EX21-B"].status == ids["EX31-B1"].status == CONFIRMED
    assert ids["EX22-F1"].status == ids["EX22-F2"].status == DISCREPANCY
    assert ids["T43-surjective-only"].status == "hypothesis-needed"
    for key in ("PS22", "T41", "T42", "T44", "T51", "T43-injective"):
        assert ids[key].status == CONFIRMED


def test_scopes():
    assert errata_report([]) == []
    p21 = errata_report(["P21"])
    assert [e.id for e in p21] == ["P21-1", "P21-2", "P21-3", "P21-4", "P21-5"]
    assert [e.id for e in errata_report(["EX31-B2"])] == ["EX31-B2"]


def test_format_is_deterministic(full):
    text = format_errata(full)
    assert text == format_errata(errata_report())
    assert text.startswith("format: 1\ncommand: errata\nentries: 35\n")
    assert text.endswith("\n") and "\r" not in text
    assert format_errata([]) == "format: 1\ncommand: errata\nentries: 0\ndiscrepancies: 0\n"
