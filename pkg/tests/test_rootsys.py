from fractions import Fraction

import pytest

from abideals.rootsys import (
    AffineRoot,
    RootSystemError,
    SubsystemDescriptor,
    build_root_system,
    cartan_matrix,
    parse_type,
    simple_components,
)
from abideals.verify import KNOWN_DUAL_COXETER, root_string_positive_roots

# |Delta^+| for each series, a standard table independent of the construction
N_POS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

HIGHEST_ROOT = {
    "E6": (1, 2, 2, 3, 2, 1),
    "E7": (2, 2, 3, 4, 3, 2, 1),
    "E8": (2, 3, 4, 6, 5, 4, 3, 2),
    "F4": (2, 3, 4, 2),
    "G2": (3, 2),
    "B4": (1, 2, 2, 2),
    "C4": (2, 2, 2, 1),
    "D5": (1, 2, 2, 1, 1),
}


def test_positive_root_counts(any_rs):
    assert any_rs.n_pos == N_POS[any_rs.series](any_rs.rank)
    assert len(any_rs.roots) == 2 * any_rs.n_pos


def test_reflection_closure_matches_root_strings(any_rs):
    assert root_string_positive_roots(any_rs.cartan) == set(any_rs.positive_roots)


@pytest.mark.parametrize("name,theta", sorted(HIGHEST_ROOT.items()))
def test_highest_root(name, theta):
    assert parse_type(name).theta == theta


def test_bourbaki_conventions():
    assert cartan_matrix("B", 3)[2][1] == -2
    assert cartan_matrix("C", 3)[1][2] == -2
    assert cartan_matrix("F", 4)[2][1] == -2
    assert cartan_matrix("G", 2)[0][1] == -3
    assert build_root_system("B", 3).long_simple == (0, 1)
    assert build_root_system("C", 3).long_simple == (2,)
    assert build_root_system("G", 2).long_simple == (1,)


def test_form_normalization_and_symmetry(any_rs):
    rs = any_rs
    assert rs.form(rs.theta, rs.theta) == 2
    for a in rs.simple_roots:
        for b in rs.simple_roots:
            assert rs.form(a, b) == rs.form(b, a)
    for b in rs.positive_roots:
        assert rs.half_norm(b) in (1, Fraction(1, 2), Fraction(1, 3))


def test_dual_coxeter_and_comarks(any_rs):
    rs = any_rs
    assert rs.g == KNOWN_DUAL_COXETER[rs.series](rs.rank)
    assert rs.g == 1 + sum(rs.comarks)
    assert rs.coroot(rs.theta) == rs.comarks


def test_pairing_is_integral_and_reflection_preserves_roots(any_rs):
    rs = any_rs
    for b in rs.positive_roots[:40]:
        for i in range(rs.rank):
            assert rs.reflect(b, i) in rs.index
        assert rs.pairing(b, b) == 2
        assert rs.pair(rs.coroot(b), b) == 2


def test_dominant_roots_are_theta_and_theta_short(any_rs):
    rs = any_rs
    dom = {b for b in rs.roots if rs.is_dominant(b)}
    assert dom == {rs.theta, rs.theta_short}


def test_coweight_round_trip(any_rs):
    rs = any_rs
    for b in rs.positive_roots[:30]:
        tau = rs.coroot(b)
        assert rs.coroot_from_coweights(rs.coweight_coords(tau)) == tau


def test_coweights_outside_coroot_lattice():
    rs = build_root_system("A", 2)
    assert rs.coroot_from_coweights((1, 0)) is None
    assert rs.coroot_from_coweights((1, 1)) == (1, 1)


def test_parabolic_highest_root_and_components():
    rs = build_root_system("E", 7)
    assert simple_components(rs, {0, 2, 4, 5, 6}) == [frozenset({0, 2}), frozenset({4, 5, 6})]
    assert rs.parabolic_highest_root(range(1, 7)) == (0, 1, 1, 2, 2, 2, 1)


def test_affine_simple_roots_and_subsystem():
    rs = build_root_system("E", 7)
    a0 = rs.affine_simple_roots()[0]
    assert a0 == AffineRoot(tuple(-c for c in rs.theta), 1)
    # the orthogonal complement of alpha_7 in the extended diagram is D6
    basis = [a for a in rs.affine_simple_roots() if rs.pairing(a.finite, rs.simple_roots[6]) == 0]
    S = SubsystemDescriptor(rs, basis)
    comp = [c for c in S.components() if a0 in c.basis][0]
    assert comp.rank == 6 and comp.size() == 60 and comp.dual_coxeter_number() == 10


def test_subsystem_highest_root_requires_irreducible():
    rs = build_root_system("A", 3)
    S = rs.subsystem({0, 2})
    assert not S.irreducible
    with pytest.raises(ValueError):
        S.highest_root()


@pytest.mark.parametrize("series,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E", 5), ("E", 9),
                                         ("F", 3), ("G", 3), ("H", 3)])
def test_invalid_types(series, rank):
    with pytest.raises(RootSystemError):
        build_root_system(series, rank)


def test_parse_type():
    assert parse_type("e7").name == "E7"
    with pytest.raises(RootSystemError):
        parse_type("E")
