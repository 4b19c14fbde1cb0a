import pytest

from ewtableaux import verify as vf
from ewtableaux.permstat import decreasing_adjacencies, fixed_points


def test_recurrences():
    assert [vf.fibonacci(m) for m in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert [vf.eulerian(4, k) for k in range(4)] == [1, 11, 11, 1]
    assert [vf.stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert [vf.narayana(4, k) for k in range(1, 5)] == [1, 6, 6, 1]


def test_distribution():
    perms3 = list(vf.perms(3))
    assert vf.distribution(perms3, decreasing_adjacencies) == {0: 3, 1: 2, 2: 1}
    assert vf.distribution(perms3, lambda p: len(fixed_points(p) - {1})) == {0: 3, 1: 2, 2: 1}
    assert vf.distribution([], len) == {}


def test_fibonacci_rows():
    report = vf.run_suite("fibonacci", 3, n_workers=1)
    assert report.passed
    assert report.status == "PASS"
    assert (3, "total", 5, 5) in report.rows
    assert "3 total 5 5 PASS" in report.table().splitlines()


def test_eulerian_is_labelled_conjecture():
    report = vf.run_suite("eulerian", 4, n_workers=1)
    assert report.status == "CONJECTURE-CONSISTENT"
    rows = [(key, e, o) for n, key, e, o in report.rows if n == 4]
    assert [o for _, _, o in rows] == [1, 11, 11, 1]


def test_shapes_small():
    report = vf.run_suite("shapes", 3, n_workers=1)
    assert report.passed
    assert all(e == o for _, _, e, o in report.rows)


def test_tsv_lines():
    report = vf.run_suite("allzero", 3, n_workers=1)
    for line in report.tsv_lines():
        fields = line.split("\t")
        assert fields[0] == "allzero"
        assert fields[-1] == "PASS"


def test_failed_rows_make_a_failed_report():
    report = vf.VerificationReport("x", 1)
    report.add(1, "k=0", 1, 2)
    assert report.status == "FAIL"
    assert report.table().splitlines()[1] == "1 k=0 1 2 FAIL"


def test_guardrails():
    with pytest.raises(vf.UnknownSuite):
        vf.run_suite("nope")
    with pytest.raises(vf.GuardrailExceeded):
        vf.run_suite("fibonacci", 50)
    with pytest.raises(vf.GuardrailExceeded):
        vf.run_suite("fibonacci", 0)


@pytest.mark.parametrize("name", sorted(vf.SUITES))
def test_every_suite_passes_at_small_size(name):
    report = vf.run_suite(name, 5, n_workers=1)
    assert report.passed, report.table()


def test_parallel_run_matches_serial():
    one = vf.run_suite("stirling_top", 6, n_workers=1)
    two = vf.run_suite("stirling_top", 6, n_workers=2)
    assert one.rows == two.rows
    assert one.counterexamples == two.counterexamples


def test_workers_from_environment(monkeypatch):
    monkeypatch.setenv("EWTAB_WORKERS", "3")
    assert vf.workers() == 3
