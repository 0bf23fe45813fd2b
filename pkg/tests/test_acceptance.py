"""Acceptance criteria, one test (and one summary line) per criterion."""
import subprocess
import sys
import time

import pytest

from conftest import ALL_TYPES, record_acceptance

from abideals import abposets as ap
from abideals import ideals as idl
from abideals.rootsys import build_root_system
from abideals.tables import golden_checks
from abideals.verify import FULL_RANK, SUITES, run_suite

PETERSON_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(3, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


def _report(n, name, ok, detail=""):
    record_acceptance(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {name}" + (f" ({detail})" if detail else ""))


@pytest.fixture(scope="session")
def suite_results():
    """verify --suite all for every type, computed once."""
    start = time.perf_counter()
    out = {}
    for t in ALL_TYPES:
        rs = build_root_system(*t)
        out[rs.name] = run_suite(rs, "all")
    return out, time.perf_counter() - start


def test_criterion_1_peterson_counts():
    start = time.perf_counter()
    bad = []
    for t in PETERSON_TYPES:
        rs = build_root_system(*t)
        n = len(idl.enumerate_abelian(rs))
        if n != 2 ** rs.rank:
            bad.append((rs.name, n))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    _report(1, "2^rank abelian ideals for all listed types", ok,
            f"{len(PETERSON_TYPES)} types in {elapsed:.1f}s" + (f", mismatches {bad}" if bad else ""))
    assert not bad
    assert elapsed < 60


def test_criterion_2_golden_tables():
    bad, n = [], 0
    for t in ALL_TYPES:
        rs = build_root_system(*t)
        if rs.series == "B" and rs.rank < 3:
            continue
        for label, expected, got in golden_checks(rs):
            n += 1
            if expected != got:
                bad.append((label, expected, got))
    # the exceptional blocks: common dim m_1 and the multiset of dim m_h for h >= 2,
    # independent of how the roots are labelled
    blocks = {
        "E6": (11, [16, 16, 13, 13, 12]),
        "E7": (17, [18, 20, 20, 19, 22, 26, 27]),
        "E8": (29, [36, 34, 34, 33, 32, 31, 30]),
        "F4": (8, [9]),
        "G2": (3, []),
    }
    for name, values in blocks.items():
        rs = build_root_system(name[0], int(name[1]))
        first = {ap.m_h(rs, rs.simple_roots[i], 1).dim for i in rs.long_simple}
        higher = sorted(ap.m_h(rs, rs.simple_roots[i], h).dim
                        for i in rs.long_simple
                        for h in range(2, ap.k_of(rs, rs.simple_roots[i]) + 1))
        n += 1
        if first != {values[0]} or higher != sorted(values[1]):
            bad.append((name, values, sorted(first), higher))
    _report(2, "golden dimension tables and Malcev d, exact", not bad,
            f"{n} values" + (f", mismatches {bad[:3]}" if bad else ""))
    assert not bad


def _tower_formula_mismatches(literal: bool):
    bad, n = [], 0
    f = ap.dim_m_h_uniform if literal else ap.dim_m_h
    for t in ALL_TYPES:
        rs = build_root_system(*t)
        for a in rs.long_positive_roots():
            T = ap.tower(rs, a)
            for h in range(1, T.k + 1):
                n += 1
                if f(rs, a, h) != T.ideals[h - 1].dim:
                    bad.append((rs.name, a, h))
    return bad, n


def test_criterion_3_dual_formulas():
    bad, n = _tower_formula_mismatches(literal=False)
    checks = n
    for t in ALL_TYPES:
        rs = build_root_system(*t)
        for i in rs.long_simple:
            a = rs.simple_roots[i]
            checks += 3
            if ap.suter_dim(rs, a) != ap.m_of(rs, a).dim or ap.suter_dim_uniform(rs, a) != ap.m_of(rs, a).dim:
                bad.append((rs.name, "suter", i + 1))
            if ap.y_alpha(rs, a).length != rs.g - 2:
                bad.append((rs.name, "length of y_alpha", i + 1))
            T = ap.tower(rs, a)
            if any(ap.dim_m_h_uniform(rs, a, h) != T.ideals[h - 1].dim for h in range(1, T.k + 1)):
                bad.append((rs.name, "uniform formula, simple root", i + 1))
        for p in ap.enumerate_X(rs):
            checks += 1
            phi2 = sum(1 for b in rs.positive_roots if rs.pair(p.tau, b) == 2)
            if ap.min_Iab_tau_dimension(rs, p.tau) != phi2 or ap.min_Iab_tau(rs, p.tau).dim != phi2:
                bad.append((rs.name, "min I_ab(tau)", p.label))
    _report(3, "formula side equals construction side", not bad,
            f"{checks} comparisons; tower formula with first term l(w_alpha)"
            + (f", mismatches {bad[:3]}" if bad else ""))
    assert not bad


@pytest.mark.xfail(strict=True, reason="g - 1 is the length of w_alpha only for simple alpha; see ledger")
def test_criterion_3_literal_first_term_for_non_simple_roots():
    bad, n = _tower_formula_mismatches(literal=True)
    ok = not bad
    example = ""
    if bad:
        name, a, h = bad[0]
        rs = build_root_system(name[0], int(name[1:]))
        example = (f"e.g. {name} alpha={a} h={h}: g-1 formula {ap.dim_m_h_uniform(rs, a, h)}, "
                   f"explicit {ap.tower(rs, a).ideals[h - 1].dim}")
    non_simple = all(sum(a) > 1 for _, a, _ in bad)
    _report(3, "tower formula with first term g - 1 for every long positive root", ok,
            f"{len(bad)} of {n} (alpha, h) pairs disagree, "
            f"{'all' if non_simple else 'not all'} with alpha non-simple; {example}")
    assert ok


def test_criterion_4_structural(suite_results):
    results, _ = suite_results
    bad = [(name, c.label) for name, res in results.items() for s, c in res
           if s in ("counts", "encodings", "posets") and not c.passed]
    n = sum(1 for res in results.values() for s, _ in res if s in ("counts", "encodings", "posets"))
    _report(4, f"bijections and partitions (all ideals up to rank {FULL_RANK}, abelian side to rank 8)",
            not bad, f"{n} checks over {len(results)} types" + (f", failures {bad[:3]}" if bad else ""))
    assert not bad


def test_criterion_5_round_trip(suite_results):
    results, elapsed = suite_results
    bad, n = [], 0
    for name, res in results.items():
        for s, c in res:
            if s == "encodings" and (c.label.startswith("round trip") or "dim = length" in c.label):
                n += 1
                if not c.passed:
                    bad.append((name, c.label))
    ok = not bad and n >= 2 * len(results) and elapsed < 300
    _report(5, "ideal -> w -> ideal round trip and dim = length", ok,
            f"{n} checks; full verification over all types took {elapsed:.0f}s"
            + (f", failures {bad[:3]}" if bad else ""))
    assert not bad
    assert elapsed < 300


def test_criterion_6_verify_all(suite_results):
    results, _ = suite_results
    failed = [(name, c.label) for name, res in results.items() for _, c in res if not c.passed]
    labels_ok = all(c.label.strip() for res in results.values() for _, c in res)
    suites_ok = all({s for s, _ in res} == set(SUITES) for res in results.values())
    cli_codes = {}
    for t in ("A3", "B3", "G2", "F4"):
        proc = subprocess.run([sys.executable, "-m", "abideals", "verify", "--type", t, "--suite", "all"],
                              capture_output=True, text=True)
        cli_codes[t] = proc.returncode
    ok = not failed and labels_ok and suites_ok and all(v == 0 for v in cli_codes.values())
    _report(6, "verify --suite all exits 0 and every check is labelled", ok,
            f"in-process over {len(results)} types, CLI exit codes {cli_codes}"
            + (f", failures {failed[:3]}" if failed else ""))
    assert ok
