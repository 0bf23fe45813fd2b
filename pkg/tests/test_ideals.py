import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abideals import ideals as idl
from abideals.rootsys import AffineRoot, build_root_system
from abideals.weyl import AffineWeylElement

ORACLE_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2"]
# Catalan-type counts of ad-nilpotent ideals (hand-checked literature values)
AD_NILPOTENT = {"A4": 42, "B3": 20, "C3": 20, "D4": 50, "G2": 8, "F4": 105, "E6": 833, "B5": 252, "D5": 182}


def _rs(name):
    return build_root_system(name[0], int(name[1:]))


def _brute_force(rs):
    """All upward closed subsets of Delta^+ by exhaustive subset search."""
    pos = rs.positive_roots
    n = len(pos)
    ups = []
    for i, b in enumerate(pos):
        ups.append([j for j, c in enumerate(pos)
                    if any(tuple(x + y for x, y in zip(b, s)) == c for s in rs.simple_roots)])
    out = []
    for mask in range(1 << n):
        if all(all(mask >> j & 1 for j in ups[i]) for i in range(n) if mask >> i & 1):
            out.append(mask)
    return out


def _is_abelian_brute(rs, roots):
    return not any(tuple(x + y for x, y in zip(a, b)) in rs.index for a, b in combinations(roots, 2))


@pytest.mark.parametrize("name", ORACLE_TYPES)
def test_enumeration_against_subset_oracle(name):
    rs = _rs(name)
    oracle = _brute_force(rs)
    got = idl.enumerate_ad_nilpotent(rs)
    assert sorted(i.bits for i in got) == sorted(oracle)
    abelian = [m for m in oracle
               if _is_abelian_brute(rs, [rs.positive_roots[j] for j in range(rs.n_pos) if m >> j & 1])]
    assert sorted(i.bits for i in idl.enumerate_abelian(rs)) == sorted(abelian)
    assert len(abelian) == 2 ** rs.rank


@pytest.mark.parametrize("name,count", sorted(AD_NILPOTENT.items()))
def test_ad_nilpotent_counts(name, count):
    assert len(idl.enumerate_ad_nilpotent(_rs(name))) == count


def test_small_examples():
    rs = _rs("A2")
    assert len(idl.enumerate_abelian(rs)) == 4
    assert len(idl.enumerate_ad_nilpotent(rs)) == 5
    assert len(idl.enumerate_abelian(_rs("G2"))) == 4


def test_filtration_and_nilpotence():
    rs = _rs("A3")
    full = idl.Ideal.from_roots(rs, rs.positive_roots)
    layers = idl.filtration(full)
    assert [layer.dim for layer in layers] == [6, 3, 1]
    assert idl.nilpotence_index(full) == 3
    assert idl.nilpotence_index(idl.zero_ideal(rs)) == 0
    top = idl.Ideal.from_roots(rs, [rs.theta])
    assert idl.nilpotence_index(top) == 1
    assert idl.L_set(top) == {AffineRoot(tuple(-c for c in rs.theta), 1)}


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4"])
def test_round_trip_all_ideals(name):
    rs = _rs(name)
    for i in idl.enumerate_ad_nilpotent(rs):
        w = idl.w_of_ideal(i)
        assert w.inversion_set() == idl.L_set(i)
        assert idl.ideal_of_w(w, check=True) == i
        assert idl.is_W_element(w)
        if i.is_abelian():
            assert w.length == i.dim
            assert idl.is_Wab_element(w)


def test_elements_outside_the_image_are_rejected():
    rs = _rs("A2")
    bad = AffineWeylElement.simple_reflection(rs, 1)
    assert idl.W_violation(bad) is not None
    with pytest.raises(idl.NotInImage):
        idl.ideal_of_w(bad)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "A3", "B3", "C3", "G2"]), st.lists(st.integers(0, 3), max_size=10))
def test_ideal_of_w_inverts_on_the_image(name, word):
    rs = _rs(name)
    w = AffineWeylElement.from_word(rs, [i % (rs.rank + 1) for i in word])
    if idl.is_W_element(w):
        i = idl.ideal_of_w(w)
        assert idl.w_of_ideal(i) == w


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4", "F4"])
def test_F_image_and_regions(name):
    rs = _rs(name)
    D = set(idl.enumerate_D(rs))
    allid = idl.enumerate_ad_nilpotent(rs)
    images = {idl.F_map(idl.w_of_ideal(i)) for i in allid}
    assert images == D and len(images) == len(allid)
    ab = {idl.F_map(idl.w_of_ideal(i)) for i in idl.enumerate_abelian(rs)}
    assert ab == set(idl.enumerate_Dab(rs))


def test_generators_and_maximal():
    rs = _rs("A3")
    i = idl.Ideal.generated_by(rs, [(1, 1, 0), (0, 1, 1)])
    assert idl.generators(i) == {(1, 1, 0), (0, 1, 1)}
    assert idl.generators_from_w(idl.w_of_ideal(i)) == idl.generators(i)
    maximal = idl.maximal_abelian_by_inclusion(rs)
    assert len(maximal) == 3
    assert all(idl.is_maximal_abelian(m) for m in maximal)


def test_record_round_trip_through_json():
    rs = _rs("B3")
    for i in idl.enumerate_abelian(rs):
        rec = json.loads(json.dumps(idl.ideal_record(i)))
        back, w = idl.ideal_from_record(rs, rec)
        assert back == i
        assert w == idl.w_of_ideal(i)
        assert rec["dim"] == i.dim and rec["abelian"] is True
