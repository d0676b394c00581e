import pytest

from eulerlab.checks import CHECKS, run_checks


def test_registry_tokens():
    assert set(CHECKS) == {"macmahon", "thm01", "thm20", "eq1", "gf",
                           "thT1", "fubini", "li-binomial", "counts"}
    for name, (fn, description) in CHECKS.items():
        assert callable(fn) and description


def test_all_suites_pass_at_small_sizes():
    results = run_checks("all", max_n=4)
    assert [r.name for r in results] == list(CHECKS)
    for res in results:
        assert res.passed, f"{res.name}: {res.witness}"
        assert res.lines
        assert res.witness is None


def test_run_checks_accepts_list():
    results = run_checks(["thm20", "fubini"], max_n=5)
    assert [r.name for r in results] == ["thm20", "fubini"]


def test_run_checks_unknown_name():
    with pytest.raises(ValueError):
        run_checks("nope")


def test_eq1_lines_document_the_rejected_readings():
    (res,) = run_checks("eq1", max_n=3)
    note = res.lines[-1]
    assert "literal index reading gives 1" in note
    assert "direct gives 13" in note


def test_thm01_lines_name_the_reading():
    (res,) = run_checks("thm01", max_n=5)
    assert all("literal and transposed slice filters agree" in line
               for line in res.lines)
