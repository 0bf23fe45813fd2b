import pytest

from conftest import ALL_TYPES

from abideals import abposets as ap
from abideals.rootsys import build_root_system
from abideals.tables import b_sum_form, closed_form, golden_checks, malcev_row, table_rows


@pytest.mark.parametrize("t", ALL_TYPES, ids=lambda t: f"{t[0]}{t[1]}")
def test_golden_values(t):
    rs = build_root_system(*t)
    for label, expected, got in golden_checks(rs):
        assert expected == got, label


@pytest.mark.parametrize("n", range(1, 9))
def test_type_a_grid(n):
    rs = build_root_system("A", n)
    for row in table_rows(rs):
        i, h = row["h"], row["alpha"]
        assert i <= h <= n - i + 1
        assert row["dim"] == i * (n - i + 1)
    assert malcev_row(rs)["d"] == (n + 1) ** 2 // 4


@pytest.mark.parametrize("n", range(3, 9))
def test_type_b_sum_form_matches_closed_form(n):
    rs = build_root_system("B", n)
    for a in range(3, n):
        for i in range(2, ap.k_of(rs, rs.simple_roots[a - 1]) + 1):
            assert b_sum_form(n, a, i) == closed_form(rs, a, i)[0]


def test_type_d_last_two_nodes_agree():
    rs = build_root_system("D", 8)
    a, b = rs.simple_roots[6], rs.simple_roots[7]
    assert [m.dim for m in ap.tower(rs, a).ideals] == [m.dim for m in ap.tower(rs, b).ideals]


def test_b2_has_no_recorded_closed_form():
    rs = build_root_system("B", 2)
    assert all(row["expected"] is None for row in table_rows(rs))


def test_row_layout():
    rs = build_root_system("E", 7)
    rows = [r for r in table_rows(rs) if r["alpha"] == 7]
    assert [r["dim"] for r in rows] == [17, 26, 27]
    assert rows[-1]["tau"] == "θ∨+θ∨(D6)+θ∨(A1)"
    assert rows[-1]["g_sequence"] == [18, 10, 2]
    assert all(r["agree"] for r in rows)
