"""Structure of the poset of abelian ideals.

Every abelian ideal i has w_i = t_tau v with tau in X, the coroot points of
the closure of twice the fundamental alcove. This module computes

- X, both by a lattice scan and from good chains (standard orthogonal
  decompositions tau = theta_1^vee + ... + theta_k^vee);
- the partition of the abelian ideals by tau and by the long root
  alpha = v^{-1}(-theta), with explicit minima and maxima of each piece;
- for a long positive root alpha, the tower m_1(alpha) < ... < m_k(alpha)
  of maxima, its dimension formula, and the maximal abelian ideals.

Simple roots are 0-based in function arguments. Subsystems of the finite
root system are described by sets of simple indices.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .ideals import (
    Ideal,
    enumerate_abelian,
    ideal_of_w,
    is_Wab_element,
    w_of_ideal,
)
from .rootsys import (
    AffineRoot,
    Coroot,
    Root,
    RootSystem,
    SubsystemDescriptor,
    cartan_type_label,
    simple_components,
)
from .weyl import (
    AffineWeylElement,
    WeylElement,
    element_from_inversions,
    longest_element,
    parabolic_order,
)


class EmptyPoset(ValueError):
    """I_ab(tau, alpha) is empty."""


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _neg(x):
    return tuple(-a for a in x)


def _rank2_name(rs: RootSystem) -> str:
    # inside C_n the rank two pieces are conventionally called C2
    return "C2" if rs.series == "C" else "B2"


def primed(rs: RootSystem, J: Iterable[int]) -> frozenset[int]:
    """Simple roots of the irreducible standard subsystem J not orthogonal to its highest root."""
    J = frozenset(J)
    th = rs.parabolic_highest_root(J)
    return frozenset(j for j in J if rs.pairing(rs.simple_roots[j], th) != 0)


def orthogonal_components(rs: RootSystem, J: Iterable[int]) -> list[frozenset[int]]:
    """Components of the roots of J orthogonal to theta(J)."""
    J = frozenset(J)
    return simple_components(rs, J - primed(rs, J))


def type_label(rs: RootSystem, J: Iterable[int]) -> str:
    J = sorted(J)
    if not J:
        return "0"
    parts = []
    for comp in simple_components(rs, J):
        comp = sorted(comp)
        cart = [[rs.cartan[i][j] for j in comp] for i in comp]
        parts.append(cartan_type_label(cart, [rs.d[i] for i in comp], _rank2_name(rs)))
    return "×".join(parts)


def descriptor_label(S: SubsystemDescriptor) -> str:
    if S.rank == 0:
        return "0"
    parts = []
    for comp in S.components():
        parts.append(cartan_type_label(comp.cartan, [S.rs.half_norm(b.finite) for b in comp.basis],
                                       _rank2_name(S.rs)))
    return "×".join(parts)


# ---------------------------------------------------------------------------
# good chains and X

@dataclass(frozen=True)
class GoodChain:
    """A chain Delta_1 > ... > Delta_k of standard irreducible subsystems,
    each given by its set of (0-based) simple roots."""

    rs: RootSystem = field(compare=False, repr=False)
    subsystems: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.subsystems)

    @property
    def highest_roots(self) -> tuple[Root, ...]:
        return tuple(self.rs.parabolic_highest_root(J) for J in self.subsystems)

    @property
    def tau(self) -> Coroot:
        t = (0,) * self.rs.rank
        for th in self.highest_roots:
            t = _add(t, self.rs.coroot(th))
        return t

    def prefix(self, h: int) -> "GoodChain":
        return GoodChain(self.rs, self.subsystems[:h])

    def descriptor(self, i: int) -> SubsystemDescriptor:
        return self.rs.subsystem(self.subsystems[i])

    def labels(self) -> list[str]:
        return [type_label(self.rs, J) for J in self.subsystems]

    def __repr__(self):
        parts = ["{" + ",".join(str(j + 1) for j in sorted(J)) + "}" for J in self.subsystems]
        return f"GoodChain({self.rs.name}: {' > '.join(parts)})"


def chain_violation(rs: RootSystem, chain: Sequence[Iterable[int]]) -> str | None:
    """None for a good chain, otherwise the first failed condition."""
    chain = [frozenset(J) for J in chain]
    if not chain:
        return None
    if chain[0] != frozenset(range(rs.rank)):
        return "the chain must start with the whole system"
    for i, J in enumerate(chain):
        if len(simple_components(rs, J)) != 1:
            return f"Delta_{i + 1} is not irreducible"
        if i > 0 and J not in orthogonal_components(rs, chain[i - 1]):
            return (f"Delta_{i + 1} is not a component of the roots of Delta_{i} "
                    f"orthogonal to theta_{i}")
        if not rs.is_long(rs.parabolic_highest_root(J)):
            return f"Delta_{i + 1} contains no long root"
    for i, J in enumerate(chain):
        th = rs.parabolic_highest_root(J)
        for a in range(rs.rank):
            if rs.pairing(rs.simple_roots[a], th) <= 0:
                continue
            for j in range(i + 2, len(chain)):
                if any(rs.cartan[a][b] != 0 for b in chain[j]):
                    return (f"alpha_{a + 1} pairs positively with theta_{i + 1} "
                            f"but is not orthogonal to Delta_{j + 1}")
    return None


def is_good_chain(rs: RootSystem, chain: Sequence[Iterable[int]]) -> bool:
    return chain_violation(rs, chain) is None


@lru_cache(maxsize=None)
def enumerate_good_chains(rs: RootSystem) -> tuple[GoodChain, ...]:
    """All good chains (the empty chain excluded)."""
    out = []

    def rec(chain):
        out.append(GoodChain(rs, tuple(chain)))
        for comp in orthogonal_components(rs, chain[-1]):
            ext = chain + [comp]
            if is_good_chain(rs, ext):
                rec(ext)

    rec([frozenset(range(rs.rank))])
    return tuple(out)


def X_lattice_scan(rs: RootSystem) -> list[Coroot]:
    """Q^vee points with (tau, alpha_i) >= 0 and (tau, theta) <= 2."""
    m = rs.marks
    n = rs.rank
    out = []

    def rec(i, left, x):
        if i == n:
            tau = rs.coroot_from_coweights(x)
            if tau is not None:
                out.append(tau)
            return
        for c in range(left // m[i] + 1):
            rec(i + 1, left - c * m[i], x + [c])

    rec(0, 2, [])
    return sorted(out)


def coweight_label(rs: RootSystem, tau) -> str:
    x = rs.coweight_coords(tau)
    terms = []
    for i, c in enumerate(x):
        if c:
            terms.append(f"{'' if c == 1 else c}ω{i + 1}∨")
    return "+".join(terms) or "0"


@dataclass(frozen=True)
class XPoint:
    rs: RootSystem = field(compare=False, repr=False)
    tau: Coroot
    chain: GoodChain = field(compare=False)

    @property
    def k(self) -> int:
        return self.chain.k

    @property
    def Pi_tau(self) -> frozenset[int]:
        """Simple roots of Delta(tau) (empty for tau = 0)."""
        return self.chain.subsystems[-1] if self.k else frozenset()

    @property
    def theta_tau(self) -> Root | None:
        return self.chain.highest_roots[-1] if self.k else None

    @property
    def Pi_prime(self) -> frozenset[int]:
        """Simple roots not orthogonal to tau."""
        return frozenset(i for i in range(self.rs.rank)
                         if self.rs.pair(self.tau, self.rs.simple_roots[i]) != 0)

    @property
    def label(self) -> str:
        return coweight_label(self.rs, self.tau)

    def chain_label(self) -> str:
        if not self.k:
            return "0"
        labels = self.chain.labels()
        return "+".join(["θ∨"] + [f"θ∨({lab})" for lab in labels[1:]])


def standard_decomposition(rs: RootSystem, tau) -> GoodChain:
    """The good chain with tau = sum of theta_i^vee."""
    tau = tuple(tau)
    if not any(tau):
        return GoodChain(rs, ())
    if not rs.is_dominant_coroot(tau) or rs.pair(tau, rs.theta) != 2:
        raise ValueError(f"{tau} is not a nonzero point of X")
    J = frozenset(range(rs.rank))
    chain = []
    rest = tau
    while True:
        chain.append(J)
        rest = tuple(r - c for r, c in zip(rest, rs.coroot(rs.parabolic_highest_root(J))))
        if any(c < 0 for c in rest):
            raise ValueError(f"{tau} is not a sum of highest coroots along a chain")
        if not any(rest):
            break
        supp = {i for i, c in enumerate(rest) if c}
        nxt = [C for C in orthogonal_components(rs, J) if supp <= C]
        if len(nxt) != 1:
            raise ValueError(f"{tau}: remainder {rest} is not supported on one component")
        J = nxt[0]
    why = chain_violation(rs, chain)
    if why is not None:
        raise ValueError(f"{tau}: decomposition is not a good chain ({why})")
    return GoodChain(rs, tuple(chain))


def xpoint(rs: RootSystem, tau) -> XPoint:
    tau = tuple(tau)
    return XPoint(rs, tau, standard_decomposition(rs, tau))


@lru_cache(maxsize=None)
def enumerate_X(rs: RootSystem) -> tuple[XPoint, ...]:
    """X computed by a lattice scan and from good chains; the two must agree."""
    scan = set(X_lattice_scan(rs))
    chains = enumerate_good_chains(rs)
    from_chains = [c.tau for c in chains]
    if len(set(from_chains)) != len(from_chains):
        raise RuntimeError("two good chains give the same point of X")
    zero = (0,) * rs.rank
    if scan != set(from_chains) | {zero}:
        raise RuntimeError(f"X mismatch: scan {sorted(scan)} vs chains {sorted(from_chains)}")
    pts = [XPoint(rs, zero, GoodChain(rs, ()))] + [XPoint(rs, c.tau, c) for c in chains]
    return tuple(sorted(pts, key=lambda p: (p.k, rs.coweight_coords(p.tau))))


# ---------------------------------------------------------------------------
# the partition by tau and alpha

@dataclass(frozen=True)
class AbelianEntry:
    ideal: Ideal
    w: AffineWeylElement
    tau: Coroot
    alpha: Root | None


@lru_cache(maxsize=None)
def abelian_catalog(rs: RootSystem) -> tuple[AbelianEntry, ...]:
    out = []
    for i in enumerate_abelian(rs):
        w = w_of_ideal(i)
        alpha = None
        if i.bits:
            alpha = w.v.inverse().act(_neg(rs.theta))
        out.append(AbelianEntry(i, w, w.tau, alpha))
    return tuple(out)


def _entry(i: Ideal) -> AbelianEntry:
    for e in abelian_catalog(i.rs):
        if e.ideal == i:
            return e
    raise ValueError(f"{i} is not abelian")


def tau_of(i: Ideal) -> XPoint:
    return xpoint(i.rs, w_of_ideal(i).tau)


def alpha_of(i: Ideal) -> Root:
    """v^{-1}(-theta) for w_i = t_tau v; a long positive root."""
    if not i.bits:
        raise ValueError("alpha is undefined for the zero ideal")
    w = w_of_ideal(i)
    return w.v.inverse().act(_neg(i.rs.theta))


def partition_by_tau(rs: RootSystem) -> dict[Coroot, list[Ideal]]:
    parts = defaultdict(list)
    for e in abelian_catalog(rs):
        parts[e.tau].append(e.ideal)
    return dict(parts)


def partition_by_tau_alpha(rs: RootSystem) -> dict[tuple[Coroot, Root], list[Ideal]]:
    parts = defaultdict(list)
    for e in abelian_catalog(rs):
        if e.alpha is not None:
            parts[(e.tau, e.alpha)].append(e.ideal)
    return dict(parts)


def level_counts(rs: RootSystem, tau) -> dict[int, int]:
    """|Delta^j_tau| over all roots (both signs)."""
    out = defaultdict(int)
    for b in rs.roots:
        out[rs.pair(tau, b)] += 1
    return dict(out)


@lru_cache(maxsize=None)
def _v_tau(rs: RootSystem, tau: Coroot) -> WeylElement:
    prime = frozenset(i for i in range(rs.rank) if rs.pair(tau, rs.simple_roots[i]) != 0)
    rest = frozenset(range(rs.rank)) - prime
    keep = set(rs.parabolic_positive_roots(rest))
    return element_from_inversions(rs, [b for b in rs.positive_roots if b not in keep], affine=False)


def v_tau(rs: RootSystem, tau) -> WeylElement:
    """w_0^I w_0 for I the simple roots not orthogonal to tau; its inversion
    set is the set of positive roots outside the parabolic orthogonal to tau."""
    return _v_tau(rs, tuple(tau))


def min_Iab_tau(rs: RootSystem, tau) -> Ideal:
    tau = tuple(tau)
    return ideal_of_w(AffineWeylElement(tau, v_tau(rs, tau)))


def min_Iab_tau_dimension(rs: RootSystem, tau) -> int:
    """(|Delta^even_tau| - |Delta^0_tau|) / 2."""
    c = level_counts(rs, tau)
    even = sum(v for j, v in c.items() if j % 2 == 0)
    return (even - c.get(0, 0)) // 2


# ---------------------------------------------------------------------------
# alpha-relative constructions

def _check_long_positive(rs: RootSystem, alpha) -> Root:
    alpha = tuple(alpha)
    if alpha not in rs.index or not rs.is_positive(alpha):
        raise ValueError(f"{alpha} is not a positive root")
    if not rs.is_long(alpha):
        raise ValueError(f"{alpha} is not a long root")
    return alpha


@lru_cache(maxsize=None)
def _maximal_good_chain(rs: RootSystem, alpha: Root) -> GoodChain:
    chain = [frozenset(range(rs.rank))]
    supp = rs.support(alpha)
    while True:
        nxt = [C for C in orthogonal_components(rs, chain[-1]) if supp <= C]
        if not nxt or not is_good_chain(rs, chain + [nxt[0]]):
            break
        chain.append(nxt[0])
    return GoodChain(rs, tuple(chain))


def maximal_good_chain(rs: RootSystem, alpha) -> GoodChain:
    """The longest good chain all of whose members contain alpha."""
    return _maximal_good_chain(rs, _check_long_positive(rs, alpha))


def k_of(rs: RootSystem, alpha) -> int:
    return maximal_good_chain(rs, alpha).k


def tau_h(rs: RootSystem, alpha, h: int) -> Coroot:
    ch = maximal_good_chain(rs, alpha)
    if not 1 <= h <= ch.k:
        raise ValueError(f"h must lie in 1..{ch.k}")
    return ch.prefix(h).tau


def X_alpha(rs: RootSystem, alpha) -> list[Coroot]:
    ch = maximal_good_chain(rs, alpha)
    return [ch.prefix(h).tau for h in range(1, ch.k + 1)]


def _y_in(rs: RootSystem, J: frozenset[int], alpha: Root) -> WeylElement:
    # minimal element of W(J) sending alpha to theta(J); its inverse has
    # inversion set {beta in Delta^+(J) : <beta, alpha^vee> = -1}
    N = [b for b in rs.parabolic_positive_roots(J) if rs.pairing(b, alpha) == -1]
    return element_from_inversions(rs, N, affine=False).inverse()


@lru_cache(maxsize=None)
def _y_alpha(rs: RootSystem, alpha: Root) -> WeylElement:
    return _y_in(rs, frozenset(range(rs.rank)), alpha)


def y_alpha(rs: RootSystem, alpha) -> WeylElement:
    return _y_alpha(rs, _check_long_positive(rs, alpha))


def y_tau_alpha(rs: RootSystem, tau, alpha) -> WeylElement:
    alpha = _check_long_positive(rs, alpha)
    pt = xpoint(rs, tau)
    if not pt.k or not rs.support(alpha) <= pt.Pi_tau:
        raise EmptyPoset(f"{alpha} is not a root of Delta(tau)")
    return _y_in(rs, pt.Pi_tau, alpha)


def check_w_alpha(rs: RootSystem, alpha) -> AffineWeylElement:
    """s_0 y_alpha."""
    y = y_alpha(rs, alpha)
    return AffineWeylElement.simple_reflection(rs, 0) * AffineWeylElement.from_finite(y)


def orthogonal_simple(rs: RootSystem, alpha) -> frozenset[int]:
    return frozenset(i for i in range(rs.rank) if rs.pairing(rs.simple_roots[i], alpha) == 0)


@dataclass(frozen=True)
class CosetData:
    """Data describing I_ab(tau, alpha) as a coset poset W_{alpha,tau} \\ W_alpha."""

    W_alpha: frozenset[int]
    P: frozenset[int]
    W_alpha_tau: frozenset[int]


def coset_data(rs: RootSystem, tau, alpha) -> CosetData:
    pt = xpoint(rs, tau)
    orth = orthogonal_simple(rs, alpha)
    # simple roots outside Delta(tau) that are not orthogonal to it
    P = frozenset(i for i in orth - pt.Pi_tau
                  if any(rs.cartan[i][j] != 0 for j in pt.Pi_tau))
    return CosetData(orth, P, orth - P)


def in_X_alpha(rs: RootSystem, tau, alpha) -> bool:
    pt = xpoint(rs, tau)
    return pt.k > 0 and rs.support(alpha) <= pt.Pi_tau


def extrema_Iab_tau_alpha(rs: RootSystem, tau, alpha) -> tuple[Ideal, Ideal]:
    """Minimum and maximum of I_ab(tau, alpha)."""
    alpha = _check_long_positive(rs, alpha)
    tau = tuple(tau)
    if not in_X_alpha(rs, tau, alpha):
        raise EmptyPoset(f"I_ab({tau}, {alpha}) is empty")
    vt = v_tau(rs, tau)
    y = y_tau_alpha(rs, tau, alpha)
    cd = coset_data(rs, tau, alpha)
    top = longest_element(rs, cd.W_alpha_tau) * longest_element(rs, cd.W_alpha)
    lo = ideal_of_w(AffineWeylElement(tau, vt * y))
    hi = ideal_of_w(AffineWeylElement(tau, vt * y * top))
    return lo, hi


def Iab_tau_alpha_size(rs: RootSystem, tau, alpha) -> int:
    """|W_alpha| / |W_{alpha,tau}|."""
    cd = coset_data(rs, tau, alpha)
    return _order(rs, cd.W_alpha) // _order(rs, cd.W_alpha_tau)


@lru_cache(maxsize=None)
def _order(rs: RootSystem, J: frozenset[int]) -> int:
    return parabolic_order(rs, J)


def max_Iab_tau_alpha_dimension(rs: RootSystem, tau, alpha) -> int:
    """|Delta^2_tau| + l(y_{tau,alpha}) + l(w_0^alpha) - l(w_0^{alpha,tau})."""
    cd = coset_data(rs, tau, alpha)
    c = level_counts(rs, tau)
    return (c.get(2, 0) + y_tau_alpha(rs, tau, alpha).length
            + len(rs.parabolic_positive_roots(cd.W_alpha))
            - len(rs.parabolic_positive_roots(cd.W_alpha_tau)))


# ---------------------------------------------------------------------------
# the tower of maxima

def _in_delta_alpha(rs: RootSystem, gamma, orth: frozenset[int]) -> bool:
    return gamma in rs.index and rs.support(gamma) <= orth


def psi(rs: RootSystem, alpha, h: int) -> list[Root]:
    """Psi_h(alpha): roots beta of Delta_h(alpha) with beta = theta_h or theta_h - beta in Delta_alpha."""
    alpha = _check_long_positive(rs, alpha)
    ch = maximal_good_chain(rs, alpha)
    J = ch.subsystems[h - 1]
    th = ch.highest_roots[h - 1]
    orth = orthogonal_simple(rs, alpha)
    out = []
    for b in rs.parabolic_positive_roots(J):
        diff = tuple(x - y for x, y in zip(th, b))
        if b == th or _in_delta_alpha(rs, diff, orth):
            out.append(b)
    return out


def Phi_h(rs: RootSystem, alpha, h: int) -> Ideal:
    """Ideal with roots Psi_1 u ... u Psi_h."""
    roots = []
    for i in range(1, h + 1):
        roots.extend(psi(rs, alpha, i))
    return Ideal.from_roots(rs, set(roots))


def m_h(rs: RootSystem, alpha, h: int) -> Ideal:
    """m_h(alpha) = i(w_alpha w_{h-1,alpha}) with w_{h-1,alpha} the element of Phi_{h-1}."""
    alpha = _check_long_positive(rs, alpha)
    k = k_of(rs, alpha)
    if not 1 <= h <= k:
        raise ValueError(f"h = {h} outside 1..{k}")
    w = check_w_alpha(rs, alpha)
    if h > 1:
        prev = Phi_h(rs, alpha, h - 1)
        if not prev.is_upward_closed() or not prev.is_abelian():
            raise RuntimeError(f"Phi_{h - 1}({alpha}) is not an abelian ideal")
        w = w * w_of_ideal(prev)
    if not is_Wab_element(w):
        raise RuntimeError(f"the element for m_{h}({alpha}) is not abelian")
    return ideal_of_w(w)


def hat_subsystem(rs: RootSystem, alpha, h: int) -> SubsystemDescriptor:
    """Component containing -theta_h + delta of the subsystem with basis
    (Pi_h u {-theta_h + delta}) restricted to alpha^perp."""
    alpha = _check_long_positive(rs, alpha)
    ch = maximal_good_chain(rs, alpha)
    if not 1 <= h < ch.k:
        raise ValueError(f"h = {h} outside 1..{ch.k - 1}")
    J = ch.subsystems[h - 1]
    th = ch.highest_roots[h - 1]
    a0 = AffineRoot(_neg(th), 1)
    basis = [AffineRoot(rs.simple_roots[j], 0) for j in sorted(J)
             if rs.pairing(rs.simple_roots[j], alpha) == 0]
    basis.append(a0)
    for comp in SubsystemDescriptor(rs, basis).components():
        if a0 in comp.basis:
            return comp
    raise AssertionError("unreachable")


def g_h(rs: RootSystem, alpha, h: int) -> int:
    return hat_subsystem(rs, alpha, h).dual_coxeter_number()


def check_w_alpha_length(rs: RootSystem, alpha) -> int:
    """l(s_0 y_alpha) = 1 + #{beta > 0 : <beta, alpha^vee> = -1}.

    This is g - 1 exactly when alpha is simple; for other long roots it is
    smaller, and the uniform dimension formulas must use it in place of g - 1.
    """
    alpha = _check_long_positive(rs, alpha)
    return 1 + sum(1 for b in rs.positive_roots if rs.pairing(b, alpha) == -1)


def dim_m_h(rs: RootSystem, alpha, h: int) -> int:
    """l(w_alpha) + sum_{i<h} (g_i(alpha) - 1); l(w_alpha) = g - 1 for simple alpha."""
    k = k_of(rs, alpha)
    if not 1 <= h <= k:
        raise ValueError(f"h = {h} outside 1..{k}")
    return check_w_alpha_length(rs, alpha) + sum(g_h(rs, alpha, i) - 1 for i in range(1, h))


def dim_m_h_uniform(rs: RootSystem, alpha, h: int) -> int:
    """g - 1 + sum_{i<h} (g_i(alpha) - 1), literally; agrees with :func:`dim_m_h`
    only for simple alpha."""
    k = k_of(rs, alpha)
    if not 1 <= h <= k:
        raise ValueError(f"h = {h} outside 1..{k}")
    return rs.g - 1 + sum(g_h(rs, alpha, i) - 1 for i in range(1, h))


@dataclass(frozen=True)
class MaxTower:
    alpha: Root
    taus: tuple[Coroot, ...]
    ideals: tuple[Ideal, ...]
    g_values: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.taus)


@lru_cache(maxsize=None)
def _tower(rs: RootSystem, alpha: Root) -> MaxTower:
    ch = maximal_good_chain(rs, alpha)
    taus = tuple(ch.prefix(h).tau for h in range(1, ch.k + 1))
    ideals = tuple(m_h(rs, alpha, h) for h in range(1, ch.k + 1))
    gs = tuple(g_h(rs, alpha, h) for h in range(1, ch.k))
    return MaxTower(alpha, taus, ideals, gs)


def tower(rs: RootSystem, alpha) -> MaxTower:
    return _tower(rs, _check_long_positive(rs, alpha))


def m_of(rs: RootSystem, alpha) -> Ideal:
    """The maximal abelian ideal m(alpha) = m_{k(alpha)}(alpha)."""
    return tower(rs, alpha).ideals[-1]


def _affine_orthogonal_basis(rs: RootSystem, alpha) -> list[AffineRoot]:
    return [a for a in rs.affine_simple_roots() if rs.pairing(a.finite, alpha) == 0]


def _suter_excess(rs: RootSystem, alpha: Root) -> int:
    hat = SubsystemDescriptor(rs, _affine_orthogonal_basis(rs, alpha))
    fin = rs.subsystem(orthogonal_simple(rs, alpha))
    return (hat.size() - fin.size()) // 2


def suter_dim(rs: RootSystem, alpha) -> int:
    """l(w_alpha) + (|hat Delta_alpha| - |Delta_alpha|) / 2, which is
    g - 1 + (|hat Delta_alpha| - |Delta_alpha|) / 2 for simple alpha."""
    alpha = _check_long_positive(rs, alpha)
    return check_w_alpha_length(rs, alpha) + _suter_excess(rs, alpha)


def suter_dim_uniform(rs: RootSystem, alpha) -> int:
    """g - 1 + (|hat Delta_alpha| - |Delta_alpha|) / 2, literally."""
    alpha = _check_long_positive(rs, alpha)
    return rs.g - 1 + _suter_excess(rs, alpha)


def suter_dim_second_form(rs: RootSystem, alpha) -> int:
    """For alpha orthogonal to theta: l(w_alpha) + (|hat Delta_1| - |hat Delta_1^0|) / 2,
    with hat Delta_1 the component of hat Delta_alpha containing alpha_0 and
    hat Delta_1^0 its finite roots."""
    alpha = _check_long_positive(rs, alpha)
    if rs.pairing(rs.theta, alpha) != 0:
        raise ValueError(f"{alpha} is not orthogonal to theta")
    a0 = rs.affine_simple_roots()[0]
    hat = next(c for c in SubsystemDescriptor(rs, _affine_orthogonal_basis(rs, alpha)).components()
               if a0 in c.basis)
    pos = hat.positive_roots_in_basis()
    j = hat.basis.index(a0)
    finite = sum(1 for c in pos if c[j] == 0)
    return check_w_alpha_length(rs, alpha) + (len(pos) - finite)


def malcev_dimension(rs: RootSystem) -> int:
    return max(suter_dim(rs, rs.simple_roots[i]) for i in rs.long_simple)


def maximal_abelian_bijection(rs: RootSystem) -> dict[int, Ideal]:
    """Long simple root (0-based index) -> m(alpha)."""
    return {i: m_of(rs, rs.simple_roots[i]) for i in rs.long_simple}


def poset_maxima(ideals: Sequence[Ideal]) -> list[Ideal]:
    return [i for i in ideals if not any(i < j for j in ideals)]


def maximal_elements_Iab_tau(rs: RootSystem, tau) -> set[Ideal]:
    """{m_k(alpha) : alpha long simple in Delta(tau)}, k the chain length of tau."""
    pt = xpoint(rs, tau)
    if not pt.k:
        return {Ideal(rs, 0)}
    out = set()
    for i in sorted(pt.Pi_tau):
        if rs.d[i] == 1:
            a = rs.simple_roots[i]
            out.add(m_h(rs, a, pt.k))
    return out


# ---------------------------------------------------------------------------
# I_ab(alpha) and the affine coset poset

def Phi_star(rs: RootSystem, alpha) -> Ideal:
    """Roots whose coefficients on Adj(alpha) equal the marks."""
    adj = [i for i in range(rs.rank) if rs.pairing(rs.simple_roots[i], alpha) != 0]
    return Ideal.from_roots(rs, [b for b in rs.positive_roots
                                 if all(b[i] == rs.marks[i] for i in adj)])


def w_star(rs: RootSystem, alpha) -> AffineWeylElement:
    """Longest minimal coset representative of W_alpha in hat W_alpha.

    For alpha orthogonal to theta it is w of Phi_star(alpha); otherwise
    alpha_0 is not orthogonal to alpha, the two groups coincide and the
    representative is 1.
    """
    if rs.pairing(rs.theta, alpha) != 0:
        return AffineWeylElement.identity(rs)
    return w_of_ideal(Phi_star(rs, alpha))


def Iab_alpha(rs: RootSystem, alpha) -> list[Ideal]:
    alpha = tuple(alpha)
    return [e.ideal for e in abelian_catalog(rs) if e.alpha == alpha]


def affine_coset_representatives(rs: RootSystem, alpha) -> list[AffineWeylElement]:
    """Elements x of hat W_alpha whose left descents lie in {alpha_0}, by search."""
    labels = [j for j, a in enumerate(rs.affine_simple_roots()) if rs.pairing(a.finite, alpha) == 0]
    e = AffineWeylElement.identity(rs)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            lx = x.length
            for j in labels:
                # minimal coset representatives are closed under taking prefixes,
                # so extend on the right
                y = x.times_simple(j)
                if y in seen or y.length < lx:
                    continue
                if y.left_descents() <= {0}:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda x: x.length)
