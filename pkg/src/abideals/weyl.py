"""Finite and affine Weyl groups acting on roots and affine roots.

A finite element is stored through the images of the simple roots. An
affine element is ``t_tau v`` with ``tau`` in the coroot lattice and ``v``
finite; it acts on affine roots by

    t_tau v (beta + k delta) = v(beta) + (k - (v(beta), tau)) delta.

Index 0 denotes the affine simple root alpha_0 = -theta + delta in reduced
words and descent sets; 1..n are the Bourbaki labels of the finite ones.
Internally the finite simple reflections are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .rootsys import AffineRoot, Coroot, Root, RootSystem


class NotAnInversionSet(ValueError):
    """Raised when a set of roots is not the inversion set of any element."""

    def __init__(self, msg, pair=None):
        super().__init__(msg)
        self.pair = pair


def _lincomb(images, coeffs):
    n = len(images[0]) if images else 0
    out = [0] * n
    for c, img in zip(coeffs, images):
        if c:
            for j in range(n):
                out[j] += c * img[j]
    return tuple(out)


@dataclass(frozen=True)
class WeylElement:
    rs: RootSystem = field(compare=False, repr=False)
    images: tuple[Root, ...]

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        return cls(rs, rs.simple_roots)

    @classmethod
    def simple_reflection(cls, rs: RootSystem, i: int) -> "WeylElement":
        """s_{alpha_i}, with i 0-based."""
        return cls(rs, tuple(rs.reflect(s, i) for s in rs.simple_roots))

    @classmethod
    def reflection(cls, rs: RootSystem, beta: Root) -> "WeylElement":
        return cls(rs, tuple(rs.reflect_by(s, beta) for s in rs.simple_roots))

    @classmethod
    def from_word(cls, rs: RootSystem, word: Iterable[int]) -> "WeylElement":
        """Product s_{i_1} ... s_{i_m} of 0-based simple reflections."""
        v = cls.identity(rs)
        for i in word:
            v = v.times_simple(i)
        return v

    def times_simple(self, j: int) -> "WeylElement":
        """Right multiplication by s_j: (v s_j)(alpha_i) = v(alpha_i) - a_ji v(alpha_j)."""
        a = self.rs.cartan
        img = self.images
        vj = img[j]
        new = []
        for i, vi in enumerate(img):
            c = a[j][i]
            new.append(vi if c == 0 else tuple(x - c * y for x, y in zip(vi, vj)))
        return WeylElement(self.rs, tuple(new))

    def times_reflection(self, beta: Root) -> "WeylElement":
        """Right multiplication by s_beta."""
        vb = self.act(beta)
        rs = self.rs
        new = []
        for i, vi in enumerate(self.images):
            c = rs.pairing(rs.simple_roots[i], beta)
            new.append(vi if c == 0 else tuple(x - c * y for x, y in zip(vi, vb)))
        return WeylElement(rs, tuple(new))

    # -- action -----------------------------------------------------------
    def act(self, beta) -> Root:
        return _lincomb(self.images, beta)

    @cached_property
    def _coroot_images(self):
        return tuple(self.rs.coroot(img) for img in self.images)

    def act_coroot(self, tau) -> Coroot:
        return _lincomb(self._coroot_images, tau)

    @cached_property
    def perm(self) -> tuple[int, ...]:
        """Action on root indices of ``rs.roots``."""
        idx = self.rs.index
        return tuple(idx[self.act(b)] for b in self.rs.roots)

    @cached_property
    def inverse_perm(self) -> tuple[int, ...]:
        out = [0] * len(self.perm)
        for k, j in enumerate(self.perm):
            out[j] = k
        return tuple(out)

    def inverse(self) -> "WeylElement":
        rs = self.rs
        inv = self.inverse_perm
        return WeylElement(rs, tuple(rs.roots[inv[i]] for i in range(rs.rank)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if isinstance(other, AffineWeylElement):
            return AffineWeylElement.from_finite(self) * other
        return WeylElement(self.rs, tuple(self.act(img) for img in other.images))

    def sends_negative(self, beta) -> bool:
        """True if v(beta) is a negative root."""
        return self.perm[self.rs.index[tuple(beta)]] >= self.rs.n_pos

    # -- combinatorics ----------------------------------------------------
    def inversion_indices(self) -> frozenset[int]:
        """Indices of N(v) = {beta > 0 : v^{-1}(beta) < 0}."""
        P = self.rs.n_pos
        inv = self.inverse_perm
        return frozenset(k for k in range(P) if inv[k] >= P)

    def inversion_set(self) -> frozenset[Root]:
        roots = self.rs.roots
        return frozenset(roots[k] for k in self.inversion_indices())

    @property
    def length(self) -> int:
        return len(self.inversion_indices())

    def left_descents(self) -> frozenset[int]:
        """0-based simple indices i with alpha_i in N(v)."""
        inv = self.inverse_perm
        P = self.rs.n_pos
        return frozenset(i for i in range(self.rs.rank) if inv[i] >= P)

    def right_descents(self) -> frozenset[int]:
        P = self.rs.n_pos
        return frozenset(i for i in range(self.rs.rank) if self.perm[i] >= P)

    def reduced_word(self) -> list[int]:
        """0-based reduced word obtained by peeling the lowest left descent."""
        return _peel_finite(self.rs, set(self.inversion_indices()))

    def is_identity(self) -> bool:
        return self.images == self.rs.simple_roots

    def __repr__(self):
        word = " ".join(f"s{i + 1}" for i in self.reduced_word())
        return f"WeylElement({self.rs.name}: {word or '1'})"


@dataclass(frozen=True)
class AffineWeylElement:
    """w = t_tau v."""

    tau: Coroot
    v: WeylElement

    @property
    def rs(self) -> RootSystem:
        return self.v.rs

    @classmethod
    def identity(cls, rs: RootSystem) -> "AffineWeylElement":
        return cls((0,) * rs.rank, WeylElement.identity(rs))

    @classmethod
    def from_finite(cls, v: WeylElement) -> "AffineWeylElement":
        return cls((0,) * v.rs.rank, v)

    @classmethod
    def translation(cls, rs: RootSystem, tau) -> "AffineWeylElement":
        return cls(tuple(tau), WeylElement.identity(rs))

    @classmethod
    def simple_reflection(cls, rs: RootSystem, i: int) -> "AffineWeylElement":
        """Affine label i: 0 is s_0 = t_{theta^vee} s_theta, 1..n are the finite ones."""
        if i == 0:
            return cls(rs.coroot(rs.theta), WeylElement.reflection(rs, rs.theta))
        return cls.from_finite(WeylElement.simple_reflection(rs, i - 1))

    @classmethod
    def from_word(cls, rs: RootSystem, word: Iterable[int]) -> "AffineWeylElement":
        w = cls.identity(rs)
        for i in word:
            w = w.times_simple(i)
        return w

    def times_simple(self, j: int) -> "AffineWeylElement":
        """Right multiplication by the affine simple reflection with label j."""
        if j == 0:
            rs = self.rs
            shift = self.v.act_coroot(rs.coroot(rs.theta))
            return AffineWeylElement(tuple(a + b for a, b in zip(self.tau, shift)),
                                     self.v.times_reflection(rs.theta))
        return AffineWeylElement(self.tau, self.v.times_simple(j - 1))

    def act(self, gamma: AffineRoot) -> AffineRoot:
        vb = self.v.act(gamma.finite)
        return AffineRoot(vb, gamma.level - self.rs.pair(self.tau, vb))

    def __mul__(self, other) -> "AffineWeylElement":
        if isinstance(other, WeylElement):
            other = AffineWeylElement.from_finite(other)
        shift = self.v.act_coroot(other.tau)
        return AffineWeylElement(tuple(a + b for a, b in zip(self.tau, shift)), self.v * other.v)

    def inverse(self) -> "AffineWeylElement":
        vi = self.v.inverse()
        return AffineWeylElement(tuple(-c for c in vi.act_coroot(self.tau)), vi)

    def inversion_set(self) -> frozenset[AffineRoot]:
        """N(w) = {gamma > 0 : w^{-1}(gamma) < 0}.

        For gamma = beta + k delta, w^{-1}(gamma) = v^{-1}(beta) + (k + (beta, tau)) delta,
        so gamma is an inversion iff k < -(beta, tau), or k = -(beta, tau) and
        v^{-1}(beta) < 0.
        """
        rs = self.rs
        P = rs.n_pos
        inv = self.v.inverse_perm
        out = []
        for r, beta in enumerate(rs.roots):
            c = -rs.pair(self.tau, beta)
            kmin = 0 if r < P else 1
            top = c if inv[r] >= P else c - 1
            for k in range(kmin, top + 1):
                out.append(AffineRoot(beta, k))
        return frozenset(out)

    @property
    def length(self) -> int:
        rs = self.rs
        P = rs.n_pos
        inv = self.v.inverse_perm
        total = 0
        for r, beta in enumerate(rs.roots):
            c = -rs.pair(self.tau, beta)
            kmin = 0 if r < P else 1
            top = c if inv[r] >= P else c - 1
            if top >= kmin:
                total += top - kmin + 1
        return total

    def left_descents(self) -> frozenset[int]:
        """Affine labels j with alpha_j in N(w)."""
        return frozenset(j for j, a in enumerate(self.rs.affine_simple_roots())
                         if not self.inverse().act(a).is_positive())

    def right_descents(self) -> frozenset[int]:
        """Affine labels j with w(alpha_j) < 0."""
        return frozenset(j for j, a in enumerate(self.rs.affine_simple_roots())
                         if not self.act(a).is_positive())

    def reduced_word(self) -> list[int]:
        return _peel_affine(self.rs, _affine_to_internal(self.rs, self.inversion_set()))

    def is_identity(self) -> bool:
        return not any(self.tau) and self.v.is_identity()

    def __repr__(self):
        word = " ".join(f"s{i}" for i in self.reduced_word())
        return f"AffineWeylElement({self.rs.name}: {word or '1'})"


# ---------------------------------------------------------------------------
# module-level helpers

def act(v: WeylElement, x, coroot: bool = False):
    return v.act_coroot(x) if coroot else v.act(x)


def affine_act(w: AffineWeylElement, gamma: AffineRoot) -> AffineRoot:
    return w.act(gamma)


def inversion_set(w):
    return w.inversion_set()


def length(w) -> int:
    return w.length


def weak_leq(v, w) -> bool:
    return v.inversion_set() <= w.inversion_set()


def descents(w, side: str = "left") -> frozenset[int]:
    if side == "left":
        return w.left_descents()
    if side == "right":
        return w.right_descents()
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def s0(rs: RootSystem) -> AffineWeylElement:
    return AffineWeylElement.simple_reflection(rs, 0)


# -- peeling -------------------------------------------------------------------

def _peel_finite(rs: RootSystem, S: set[int]) -> list[int] | None:
    word = []
    n = rs.rank
    table = rs.reflection_table
    while S:
        for i in range(n):
            if i in S:
                break
        else:
            return None
        S.discard(i)
        t = table[i]
        S = {t[r] for r in S}
        word.append(i)
    return word


def _affine_to_internal(rs: RootSystem, N) -> set[tuple[int, int]]:
    return {(rs.index[g.finite], g.level) for g in N}


def _peel_affine(rs: RootSystem, S: set[tuple[int, int]]) -> list[int] | None:
    word = []
    n = rs.rank
    table = rs.reflection_table
    st, tp = rs.s_theta_table, rs.theta_pairing
    a0 = (rs.n_pos + rs.theta_index, 1)
    while S:
        if a0 in S:
            S.discard(a0)
            S = {(st[r], k + tp[r]) for r, k in S}
            word.append(0)
            continue
        for i in range(n):
            if (i, 0) in S:
                break
        else:
            return None
        S.discard((i, 0))
        t = table[i]
        S = {(t[r], k) for r, k in S}
        word.append(i + 1)
    return word


def _finite_violation(rs: RootSystem, N: frozenset[Root]):
    pos = rs.positive_roots
    for b1 in N:
        for b2 in N:
            s = tuple(x + y for x, y in zip(b1, b2))
            if s in rs.index and s not in N:
                return (b1, b2), "not closed: the sum of the pair is missing"
    for eta in N:
        for b1 in pos:
            b2 = tuple(x - y for x, y in zip(eta, b1))
            if b2 in rs.index and rs.is_positive(b2) and b1 not in N and b2 not in N:
                return (b1, b2), "co-closure fails: neither summand of a member is present"
    return None, "no simple root in the set"


def _affine_violation(rs: RootSystem, N: frozenset[AffineRoot]):
    for g1 in N:
        for g2 in N:
            s = tuple(x + y for x, y in zip(g1.finite, g2.finite))
            if s in rs.index and AffineRoot(s, g1.level + g2.level) not in N:
                return (g1, g2), "not closed: the sum of the pair is missing"
    for eta in N:
        for gamma in rs.roots:
            rest = tuple(x - y for x, y in zip(eta.finite, gamma))
            if rest not in rs.index:
                continue
            for j in range(0, eta.level + 1):
                b1, b2 = AffineRoot(gamma, j), AffineRoot(rest, eta.level - j)
                if b1.is_positive() and b2.is_positive() and b1 not in N and b2 not in N:
                    return (b1, b2), "co-closure fails: neither summand of a member is present"
    return None, "no simple root in the set"


def find_biconvexity_violation(rs: RootSystem, N):
    """A violated pair (or None) together with a short reason."""
    N = frozenset(N)
    if any(isinstance(g, AffineRoot) for g in N):
        return _affine_violation(rs, N)
    return _finite_violation(rs, N)


def is_biconvex(rs: RootSystem, N) -> bool:
    return find_biconvexity_violation(rs, N)[0] is None


def element_from_inversions(rs: RootSystem, N, affine: bool | None = None):
    """The unique element whose inversion set is N.

    Repeatedly removes the lowest-index simple root alpha in N and replaces N
    by s_alpha(N minus alpha). When that succeeds N is an inversion set;
    otherwise a violated pair is reported.
    """
    N = frozenset(N)
    if affine is None:
        affine = any(isinstance(g, AffineRoot) for g in N)
    if affine:
        N = frozenset(g if isinstance(g, AffineRoot) else AffineRoot(tuple(g), 0) for g in N)
        bad = [g for g in N if g.finite not in rs.index or not g.is_positive()]
        if bad:
            raise NotAnInversionSet(f"{bad[0]} is not a positive affine root")
        word = _peel_affine(rs, _affine_to_internal(rs, N))
        if word is None:
            pair, why = _affine_violation(rs, N)
            raise NotAnInversionSet(f"not an inversion set ({why}): {pair}", pair)
        return AffineWeylElement.from_word(rs, word)
    bad = [b for b in N if tuple(b) not in rs.index or not rs.is_positive(b)]
    if bad:
        raise NotAnInversionSet(f"{bad[0]} is not a positive root")
    word = _peel_finite(rs, {rs.index[tuple(b)] for b in N})
    if word is None:
        pair, why = _finite_violation(rs, N)
        raise NotAnInversionSet(f"not an inversion set ({why}): {pair}", pair)
    return WeylElement.from_word(rs, word)


def longest_element(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    """Longest element of the parabolic subgroup generated by s_j, j in J (0-based)."""
    return element_from_inversions(rs, rs.parabolic_positive_roots(J), affine=False)


def coset_extrema(rs: RootSystem, J: Iterable[int]) -> tuple[WeylElement, WeylElement]:
    """Minimum and maximum of the poset of minimal right coset representatives
    of W(J) in W, i.e. 1 and w_0^J w_0."""
    J = frozenset(J)
    w0 = longest_element(rs, range(rs.rank))
    return WeylElement.identity(rs), longest_element(rs, J) * w0


def parabolic_order(rs: RootSystem, J: Iterable[int]) -> int:
    """|W(J)| computed as a product of orbit sizes of fundamental weights."""
    J = sorted(J)
    if not J:
        return 1
    j = J[-1]
    rest = J[:-1]
    # orbit of the j-th fundamental weight under W(J); coordinates over J
    pos = {i: k for k, i in enumerate(J)}
    start = tuple(int(i == j) for i in J)
    seen = {start}
    stack = [start]
    a = rs.cartan
    while stack:
        lam = stack.pop()
        for i in J:
            c = lam[pos[i]]
            if c == 0:
                continue
            # s_i(lam) = lam - <lam, a_i^vee> alpha_i; alpha_i has weight coords a_ki
            mu = tuple(lam[pos[k]] - c * a[k][i] for k in J)
            if mu not in seen:
                seen.add(mu)
                stack.append(mu)
    return len(seen) * parabolic_order(rs, rest)


def enumerate_group(rs: RootSystem, J: Iterable[int] | None = None) -> list[WeylElement]:
    """All elements of W(J) by breadth-first search; only sensible for small groups."""
    J = range(rs.rank) if J is None else sorted(J)
    e = WeylElement.identity(rs)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for v in frontier:
            for i in J:
                u = WeylElement(rs, tuple(rs.reflect(img, i) for img in v.images))
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda v: (v.length, v.images))
