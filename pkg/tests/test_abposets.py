import pytest

from abideals import abposets as ap
from abideals import ideals as idl
from abideals.rootsys import build_root_system


def _rs(name):
    return build_root_system(name[0], int(name[1:]))


def _chains(rs):
    return sorted(tuple(tuple(sorted(j + 1 for j in J)) for J in c.subsystems)
                  for c in ap.enumerate_good_chains(rs))


def test_x_of_e6():
    rs = _rs("E6")
    pts = ap.enumerate_X(rs)
    assert [p.label for p in pts] == ["0", "ω2∨", "ω1∨+ω6∨"]
    assert [p.chain_label() for p in pts] == ["0", "θ∨", "θ∨+θ∨(A5)"]
    assert _chains(rs) == [((1, 2, 3, 4, 5, 6),), ((1, 2, 3, 4, 5, 6), (1, 3, 4, 5, 6))]


def test_x_of_e7():
    rs = _rs("E7")
    labels = [p.chain_label() for p in ap.enumerate_X(rs)]
    assert labels == ["0", "θ∨", "θ∨+θ∨(D6)", "θ∨+θ∨(D6)+θ∨(A1)"]
    assert ap.enumerate_X(rs)[2].Pi_tau == frozenset(range(1, 7))
    assert ap.enumerate_X(rs)[3].Pi_tau == frozenset({6})


@pytest.mark.parametrize("n", range(1, 9))
def test_x_of_type_a(n):
    rs = build_root_system("A", n)
    pts = [p for p in ap.enumerate_X(rs) if p.k]
    assert len(pts) == (n + 1) // 2
    for j, p in enumerate(pts, start=1):
        expected = [0] * n
        expected[j - 1] += 1
        expected[n - j] += 1
        assert list(rs.coweight_coords(p.tau)) == expected
        assert p.chain.subsystems[-1] == frozenset(range(j - 1, n - j + 1))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_good_chains_of_b_odd(m):
    n = 2 * m + 1
    rs = build_root_system("B", n)
    full = tuple(range(1, n + 1))
    expected = [(full,), (full, (1,))]
    for j in range(1, m):
        expected.append((full,) + tuple(tuple(range(2 * i + 1, n + 1)) for i in range(1, j + 1)))
    assert _chains(rs) == sorted(expected)


def test_g2_and_c_chains():
    assert [p.label for p in ap.enumerate_X(_rs("G2"))] == ["0", "ω2∨"]
    rs = _rs("C4")
    assert [p.label for p in ap.enumerate_X(rs)] == ["0", "ω1∨", "ω2∨", "ω3∨", "2ω4∨"]


def test_chain_violation_messages():
    rs = _rs("E6")
    assert ap.chain_violation(rs, [range(6), {0, 2, 3, 4, 5}]) is None
    assert ap.chain_violation(rs, [range(6), {0, 2}]) is not None
    assert not ap.is_good_chain(rs, [{0, 1}])


def test_standard_decomposition_rejects_points_outside_x():
    rs = _rs("A3")
    with pytest.raises(ValueError):
        ap.standard_decomposition(rs, (1, 0, 0))


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "F4", "A5"])
def test_partition_and_intervals_against_enumeration(name):
    rs = _rs(name)
    ab = idl.enumerate_abelian(rs)
    parts = ap.partition_by_tau_alpha(rs)
    assert sum(map(len, parts.values())) == len(ab) - 1
    for (tau, alpha), members in parts.items():
        lo, hi = ap.extrema_Iab_tau_alpha(rs, tau, alpha)
        assert min(members, key=lambda i: i.dim) == lo
        assert max(members, key=lambda i: i.dim) == hi
        assert {i for i in ab if lo <= i <= hi} == set(members)
        assert len(members) == ap.Iab_tau_alpha_size(rs, tau, alpha)
        assert hi.dim == ap.max_Iab_tau_alpha_dimension(rs, tau, alpha)


def test_empty_poset_is_an_error():
    rs = _rs("E7")
    tau3 = ap.enumerate_X(rs)[3].tau
    with pytest.raises(ap.EmptyPoset):
        ap.extrema_Iab_tau_alpha(rs, tau3, rs.simple_roots[0])
    with pytest.raises(ValueError):
        ap.extrema_Iab_tau_alpha(rs, tau3, (1, 0, 0, 0, 0, 0, 0, 0))


def test_zero_point_conventions():
    rs = _rs("A3")
    zero = (0, 0, 0)
    assert ap.partition_by_tau(rs)[zero] == [idl.zero_ideal(rs)]
    assert ap.xpoint(rs, zero).Pi_prime == frozenset()
    assert ap.v_tau(rs, zero).is_identity()
    with pytest.raises(ValueError):
        ap.alpha_of(idl.zero_ideal(rs))


def test_v_tau_examples():
    rs = _rs("A3")
    tau = rs.coroot(rs.theta)
    v = ap.v_tau(rs, tau)
    assert (v * v).is_identity()
    assert v.act(rs.theta) == tuple(-c for c in rs.theta)
    assert v.act(rs.simple_roots[1]) == rs.simple_roots[1]


def test_minimum_of_i_ab_tau():
    rs = _rs("E6")
    for p in ap.enumerate_X(rs):
        lo = ap.min_Iab_tau(rs, p.tau)
        members = ap.partition_by_tau(rs)[p.tau]
        assert all(lo <= i for i in members)
        assert lo.dim == ap.min_Iab_tau_dimension(rs, p.tau)


def test_tower_c3():
    rs = _rs("C3")
    T = ap.tower(rs, rs.simple_roots[2])
    assert [i.dim for i in T.ideals] == [3, 5, 6]
    assert T.g_values == (3, 2)
    assert all(a < b for a, b in zip(T.ideals, T.ideals[1:]))


def test_tower_e7_alpha7():
    rs = _rs("E7")
    a = rs.simple_roots[6]
    assert [i.dim for i in ap.tower(rs, a).ideals] == [17, 26, 27]
    assert [ap.descriptor_label(ap.hat_subsystem(rs, a, h)) for h in (1, 2)] == ["D6", "A1"]
    assert ap.suter_dim(rs, a) == ap.suter_dim_second_form(rs, a) == 27


def test_e7_hat_subsystems_in_bourbaki_numbering():
    # with alpha_2 the branch node attached to alpha_4
    rs = _rs("E7")
    got = {i + 1: ap.descriptor_label(ap.hat_subsystem(rs, rs.simple_roots[i], 1)) for i in range(1, 7)}
    assert got == {2: "A3", 3: "A1", 4: "A2", 5: "A3", 6: "A5", 7: "D6"}


def test_e6_hat_subsystems():
    rs = _rs("E6")
    got = {i + 1: ap.descriptor_label(ap.hat_subsystem(rs, rs.simple_roots[i], 1)) for i in (0, 2, 3, 4, 5)}
    assert got == {1: "A5", 3: "A2", 4: "A1", 5: "A2", 6: "A5"}


def test_psi_sizes():
    rs = _rs("D6")
    for a in rs.long_positive_roots():
        for h in range(1, ap.k_of(rs, a)):
            assert len(ap.psi(rs, a, h)) == ap.g_h(rs, a, h) - 1


def test_first_term_for_non_simple_roots():
    # I_ab(theta) in A2 is {<theta>}: the uniform g - 1 term overcounts by one
    rs = _rs("A2")
    assert ap.Iab_alpha(rs, rs.theta) == [idl.Ideal.from_roots(rs, [rs.theta])]
    assert ap.dim_m_h(rs, rs.theta, 1) == 1
    assert ap.dim_m_h_uniform(rs, rs.theta, 1) == 2
    assert ap.check_w_alpha_length(rs, rs.theta) == 1
    for i in range(2):
        assert ap.check_w_alpha_length(rs, rs.simple_roots[i]) == rs.g - 1


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2", "A4", "B4", "C4", "F4"])
def test_i_ab_alpha_against_coset_search(name):
    rs = _rs(name)
    for a in rs.long_positive_roots():
        members = ap.Iab_alpha(rs, a)
        reps = ap.affine_coset_representatives(rs, a)
        assert len(reps) == len(members)
        lo = idl.ideal_of_w(ap.check_w_alpha(rs, a))
        hi = idl.ideal_of_w(ap.check_w_alpha(rs, a) * ap.w_star(rs, a))
        assert {idl.ideal_of_w(ap.check_w_alpha(rs, a) * x) for x in reps} == set(members)
        assert min(members, key=lambda i: i.dim) == lo
        assert max(members, key=lambda i: i.dim) == hi == ap.m_of(rs, a)


@pytest.mark.parametrize("name", ["A5", "B4", "C4", "D5", "E6", "F4", "G2"])
def test_maximal_abelian_ideals_biject_with_long_simple_roots(name):
    rs = _rs(name)
    bij = ap.maximal_abelian_bijection(rs)
    assert set(bij.values()) == set(idl.maximal_abelian_by_inclusion(rs))
    assert len(set(bij.values())) == len(rs.long_simple)
    assert ap.malcev_dimension(rs) == max(i.dim for i in idl.enumerate_abelian(rs))
