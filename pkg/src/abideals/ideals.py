"""Ad-nilpotent and abelian ideals of a Borel subalgebra.

An ideal is recorded by its set of roots Phi, an upward closed subset of
the positive roots, stored as a bit mask over ``rs.positive_roots``.
Each ideal i is encoded by the affine Weyl group element w_i whose
inversion set is

    L(i) = union over k >= 1 of (-Phi^k + k delta),

where Phi^1 = Phi and Phi^k = (Phi^{k-1} + Phi) intersected with the roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .rootsys import AffineRoot, Coroot, Root, RootSystem
from .weyl import AffineWeylElement, NotAnInversionSet, WeylElement, element_from_inversions


class NotInImage(ValueError):
    """The affine element does not encode an ad-nilpotent ideal."""


# ---------------------------------------------------------------------------
# bit tables

@dataclass(frozen=True)
class _Tables:
    up: tuple[int, ...]        # mask of beta + alpha_i that are roots
    down: tuple[int, ...]      # mask of beta - alpha_i that are positive roots
    partners: tuple[int, ...]  # mask of positive gamma with beta + gamma a root
    sums: tuple[tuple[tuple[int, int], ...], ...]  # (gamma, beta+gamma) pairs


@lru_cache(maxsize=None)
def _tables(rs: RootSystem) -> _Tables:
    P = rs.n_pos
    pos = rs.positive_roots
    idx = rs.index
    up, down, partners, sums = [], [], [], []
    for b in pos:
        u = d = 0
        for i in range(rs.rank):
            bu = list(b)
            bu[i] += 1
            k = idx.get(tuple(bu))
            if k is not None:
                u |= 1 << k
            bd = list(b)
            bd[i] -= 1
            k = idx.get(tuple(bd))
            if k is not None and k < P:
                d |= 1 << k
        p, s = 0, []
        for j, c in enumerate(pos):
            k = idx.get(tuple(x + y for x, y in zip(b, c)))
            if k is not None:
                p |= 1 << j
                s.append((j, k))
        up.append(u)
        down.append(d)
        partners.append(p)
        sums.append(tuple(s))
    return _Tables(tuple(up), tuple(down), tuple(partners), tuple(sums))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """Ideal of the Borel subalgebra given by its root set Phi (bit mask)."""

    rs: RootSystem = field(compare=False, repr=False)
    bits: int

    @classmethod
    def from_roots(cls, rs: RootSystem, roots: Iterable) -> "Ideal":
        mask = 0
        for b in roots:
            k = rs.index[tuple(b)]
            if k >= rs.n_pos:
                raise ValueError(f"{tuple(b)} is not a positive root")
            mask |= 1 << k
        return cls(rs, mask)

    @classmethod
    def generated_by(cls, rs: RootSystem, roots: Iterable) -> "Ideal":
        """Smallest ideal containing the given positive roots."""
        t = _tables(rs)
        mask = cls.from_roots(rs, roots).bits
        frontier = mask
        while frontier:
            new = 0
            for k in _bits(frontier):
                new |= t.up[k]
            frontier = new & ~mask
            mask |= new
        return cls(rs, mask)

    @property
    def indices(self) -> list[int]:
        return list(_bits(self.bits))

    @property
    def roots(self) -> list[Root]:
        pos = self.rs.positive_roots
        return [pos[k] for k in _bits(self.bits)]

    @property
    def dim(self) -> int:
        return bin(self.bits).count("1")

    def __contains__(self, beta) -> bool:
        k = self.rs.index.get(tuple(beta))
        return k is not None and k < self.rs.n_pos and bool(self.bits >> k & 1)

    def __le__(self, other: "Ideal") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "Ideal") -> bool:
        return self.bits != other.bits and self <= other

    def is_upward_closed(self) -> bool:
        up = _tables(self.rs).up
        return all(up[k] & ~self.bits == 0 for k in _bits(self.bits))

    def is_abelian(self) -> bool:
        partners = _tables(self.rs).partners
        return all(partners[k] & self.bits == 0 for k in _bits(self.bits))

    def __repr__(self):
        return f"Ideal({self.rs.name}, dim={self.dim}, roots={self.roots})"


def is_abelian(i: Ideal) -> bool:
    return i.is_abelian()


def zero_ideal(rs: RootSystem) -> Ideal:
    return Ideal(rs, 0)


def _enumerate(rs: RootSystem, abelian: bool) -> list[Ideal]:
    # decide roots from the top down; beta may join only if all its
    # upper covers already have (and, for abelian ideals, if it adds no sum)
    t = _tables(rs)
    P = rs.n_pos
    out = []

    def rec(k, mask, forbidden):
        if k < 0:
            out.append(mask)
            return
        rec(k - 1, mask, forbidden)
        if t.up[k] & ~mask == 0 and not (abelian and forbidden >> k & 1):
            rec(k - 1, mask | 1 << k, forbidden | t.partners[k])

    rec(P - 1, 0, 0)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return [Ideal(rs, m) for m in out]


@lru_cache(maxsize=None)
def enumerate_ad_nilpotent(rs: RootSystem) -> tuple[Ideal, ...]:
    """All ad-nilpotent ideals, sorted by dimension and then by bit pattern."""
    return tuple(_enumerate(rs, abelian=False))


@lru_cache(maxsize=None)
def enumerate_abelian(rs: RootSystem) -> tuple[Ideal, ...]:
    """All abelian ideals in the same order as :func:`enumerate_ad_nilpotent`.

    The search prunes non-abelian branches instead of filtering the full
    list; the two agree (checked in the test suite).
    """
    return tuple(_enumerate(rs, abelian=True))


def filtration(i: Ideal) -> list[Ideal]:
    """Nonempty layers Phi^1, Phi^2, ... of the descending central series."""
    t = _tables(i.rs)
    layers = []
    cur = i.bits
    while cur:
        layers.append(Ideal(i.rs, cur))
        nxt = 0
        for k in _bits(cur):
            for j, s in t.sums[k]:
                if i.bits >> j & 1:
                    nxt |= 1 << s
        cur = nxt
    return layers


def nilpotence_index(i: Ideal) -> int:
    """Number of nonempty layers; 0 for the zero ideal by convention."""
    return len(filtration(i))


def L_set(i: Ideal) -> frozenset[AffineRoot]:
    out = []
    for k, layer in enumerate(filtration(i), start=1):
        for b in layer.roots:
            out.append(AffineRoot(tuple(-c for c in b), k))
    return frozenset(out)


def w_of_ideal(i: Ideal) -> AffineWeylElement:
    """The element w_i with N(w_i) = L(i)."""
    try:
        return element_from_inversions(i.rs, L_set(i), affine=True)
    except NotAnInversionSet as exc:  # pragma: no cover - would be a bug
        raise RuntimeError(f"L(i) is not biconvex for {i}: {exc}") from exc


def W_violation(w: AffineWeylElement) -> str | None:
    """None if w encodes an ad-nilpotent ideal, otherwise the failed condition."""
    rs = w.rs
    N = w.inversion_set()
    fin = [g for g in N if g.level == 0]
    if fin:
        return (f"w(C_1) is not in the dominant chamber: the finite root {fin[0].finite} "
                f"is an inversion")
    sigma = w.v.inverse().act_coroot(w.tau)
    for i, s in enumerate(rs.simple_roots):
        p = rs.pair(sigma, s)
        if p > 1:
            return f"(v^-1(tau), alpha_{i + 1}) = {p} exceeds 1"
    p = rs.pair(w.tau, w.v.act(rs.theta))
    if p < -2:
        return f"(tau, v(theta)) = {p} is below -2"
    return None


def is_W_element(w: AffineWeylElement) -> bool:
    return W_violation(w) is None


def is_Wab_element(w: AffineWeylElement) -> bool:
    """N(w) lies in -Delta^+ + delta."""
    rs = w.rs
    return all(g.level == 1 and rs.is_positive(tuple(-c for c in g.finite))
               for g in w.inversion_set())


def ideal_of_w(w: AffineWeylElement, check: bool = False) -> Ideal:
    """Inverse of :func:`w_of_ideal`: Phi = {beta : -beta + delta in N(w)}."""
    why = W_violation(w)
    if why is not None:
        raise NotInImage(why)
    rs = w.rs
    phi = [tuple(-c for c in g.finite) for g in w.inversion_set() if g.level == 1]
    i = Ideal.from_roots(rs, phi)
    if not i.is_upward_closed():
        raise NotInImage("the level-one inversions do not form an upward closed set")
    if check and L_set(i) != w.inversion_set():
        raise NotInImage("N(w) differs from L(i) of the recovered ideal")
    return i


# ---------------------------------------------------------------------------
# the map F and the regions D, D_ab, D_j

def F_map(w: AffineWeylElement) -> Coroot:
    """F(t_tau v) = v^{-1}(tau)."""
    return w.v.inverse().act_coroot(w.tau)


def in_D(rs: RootSystem, sigma) -> bool:
    return (all(rs.pair(sigma, s) <= 1 for s in rs.simple_roots)
            and rs.pair(sigma, rs.theta) >= -2)


def in_Dab(rs: RootSystem, sigma) -> bool:
    return all(rs.pair(sigma, b) in (0, 1, -1, -2) for b in rs.positive_roots)


def in_Dprime_j(rs: RootSystem, sigma, j: int) -> bool:
    return all(-(j + 1) <= rs.pair(sigma, b) < j + 1 for b in rs.positive_roots)


def in_Dj(rs: RootSystem, sigma, j: int) -> bool:
    return in_D(rs, sigma) and in_Dprime_j(rs, sigma, j)


def alcove_in_dilate(w: AffineWeylElement, j: int) -> bool:
    """w(C_1) lies in C_{j+1}: no separating hyperplane H_{alpha,k} with
    k <= 0 or k >= j + 1, i.e. N(w) only has levels 1..j with negative
    finite part."""
    rs = w.rs
    return all(1 <= g.level <= j and not rs.is_positive(g.finite) for g in w.inversion_set())


def enumerate_D(rs: RootSystem) -> list[Coroot]:
    return list(_enumerate_D(rs))


@lru_cache(maxsize=None)
def _enumerate_D(rs: RootSystem) -> tuple[Coroot, ...]:
    """Q^vee-points of D by a scan of coweight coordinates.

    With x_i = (sigma, alpha_i) <= 1 and sum m_i x_i = (sigma, theta) >= -2,
    y_i = 1 - x_i >= 0 satisfies sum m_i y_i <= sum m_i + 2, a finite simplex.
    """
    m = rs.marks
    n = rs.rank
    budget = sum(m) + 2
    out = []

    def rec(i, left, x):
        if i == n:
            tau = rs.coroot_from_coweights(x)
            if tau is not None:
                out.append(tau)
            return
        for y in range(left // m[i] + 1):
            rec(i + 1, left - y * m[i], x + [1 - y])

    rec(0, budget, [])
    return tuple(sorted(out))


def enumerate_Dab(rs: RootSystem) -> list[Coroot]:
    return [s for s in enumerate_D(rs) if in_Dab(rs, s)]


# ---------------------------------------------------------------------------
# generators and maximality

def generators(i: Ideal) -> frozenset[Root]:
    """Minimal elements of Phi."""
    down = _tables(i.rs).down
    pos = i.rs.positive_roots
    return frozenset(pos[k] for k in _bits(i.bits) if down[k] & i.bits == 0)


def generators_from_w(w: AffineWeylElement) -> frozenset[Root]:
    """{beta > 0 : w(alpha) = beta - delta for some affine simple alpha}."""
    rs = w.rs
    out = set()
    for a in rs.affine_simple_roots():
        g = w.act(a)
        if g.level == -1 and rs.is_positive(g.finite):
            out.add(g.finite)
    return frozenset(out)


def is_maximal_abelian(i: Ideal) -> bool:
    """w_i maps no affine simple root into Delta^- + delta."""
    w = w_of_ideal(i)
    rs = i.rs
    for a in rs.affine_simple_roots():
        g = w.act(a)
        if g.level == 1 and not rs.is_positive(g.finite):
            return False
    return True


def is_maximal_abelian_by_coordinates(i: Ideal) -> bool:
    """(sigma, alpha_i) != -1 for all i and (sigma, theta) != 0, sigma = F(w_i)."""
    rs = i.rs
    sigma = F_map(w_of_ideal(i))
    return (all(rs.pair(sigma, s) != -1 for s in rs.simple_roots)
            and rs.pair(sigma, rs.theta) != 0)


def maximal_abelian_by_inclusion(rs: RootSystem) -> list[Ideal]:
    ab = enumerate_abelian(rs)
    return [i for i in ab if not any(i < j for j in ab)]


# ---------------------------------------------------------------------------
# serialization

def ideal_record(i: Ideal) -> dict:
    w = w_of_ideal(i)
    return {
        "phi": [list(b) for b in i.roots],
        "dim": i.dim,
        "abelian": i.is_abelian(),
        "nilpotence": nilpotence_index(i),
        "w": {"tau": list(w.tau), "v_images": [list(b) for b in w.v.images]},
        "F": list(F_map(w)),
    }


def ideal_from_record(rs: RootSystem, record: dict) -> tuple[Ideal, AffineWeylElement]:
    i = Ideal.from_roots(rs, [tuple(b) for b in record["phi"]])
    w = AffineWeylElement(tuple(record["w"]["tau"]),
                          WeylElement(rs, tuple(tuple(b) for b in record["w"]["v_images"])))
    return i, w
