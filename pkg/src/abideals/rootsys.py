"""Finite crystallographic root systems in Bourbaki numbering.

Roots are integer tuples of coordinates in the simple-root basis, coroots
are integer tuples in the simple-coroot basis. Simple roots are indexed
from 0 internally; user-facing labels add one (Bourbaki index).

The bilinear form is normalized so that the highest root has square
length 2, which makes long roots coincide with their coroots.
"""
from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, NamedTuple, Sequence

Root = tuple[int, ...]
Coroot = tuple[int, ...]

SERIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


class AffineRoot(NamedTuple):
    """A real affine root ``finite + level * delta``."""

    finite: Root
    level: int

    def __neg__(self):
        return AffineRoot(tuple(-c for c in self.finite), -self.level)

    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and _is_positive_vector(self.finite))


def _is_positive_vector(v) -> bool:
    return any(c > 0 for c in v) and all(c >= 0 for c in v)


def validate_type(series: str, rank: int) -> None:
    if not isinstance(series, str) or series.upper() not in SERIES or len(series) != 1:
        raise RootSystemError(f"unknown series {series!r}; expected one of A..G")
    series = series.upper()
    if not isinstance(rank, int) or rank < 1:
        raise RootSystemError(f"rank must be a positive integer, got {rank!r}")
    bounds = {
        "A": (rank >= 1, "A_n requires n >= 1"),
        "B": (rank >= 2, "B_n requires n >= 2"),
        "C": (rank >= 2, "C_n requires n >= 2"),
        "D": (rank >= 4, "D_n requires n >= 4"),
        "E": (rank in (6, 7, 8), "E_n requires n in {6, 7, 8}"),
        "F": (rank == 4, "F_n exists only for n = 4"),
        "G": (rank == 2, "G_n exists only for n = 2"),
    }
    ok, msg = bounds[series]
    if not ok:
        raise RootSystemError(f"invalid type {series}{rank}: {msg}")


def cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with entries a_ij = <alpha_j, alpha_i^vee>, Bourbaki numbering."""
    validate_type(series, rank)
    series = series.upper()
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        # 1-based indices as in the Bourbaki tables
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if series in "ABCD":
        last = n - 1 if series == "D" else n
        for i in range(1, last):
            link(i, i + 1)
        if series == "B":
            link(n - 1, n, -1, -2)
        elif series == "C":
            link(n - 1, n, -2, -1)
        elif series == "D":
            link(n - 2, n)
    elif series == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif series == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif series == "G":
        link(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Half square lengths d_i with d_i a_ij = d_j a_ji, largest value 1 per component."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if j != i and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    comp.append(j)
                    queue.append(j)
        top = max(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / top
    return tuple(d)


def positive_roots_from_cartan(cartan: Sequence[Sequence[int]]) -> list[Root]:
    """Positive roots in basis coordinates, generated by closing the simple
    roots under simple reflections while staying positive."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for i in range(n):
            p = sum(cartan[i][j] * beta[j] for j in range(n))
            if p == 0:
                continue
            gamma = list(beta)
            gamma[i] -= p
            gamma = tuple(gamma)
            if gamma not in seen and all(c >= 0 for c in gamma) and any(gamma):
                seen.add(gamma)
                queue.append(gamma)
    return sorted(seen, key=root_sort_key)


def root_sort_key(beta: Root):
    # height first; within a height, alpha_1 before alpha_2 etc.
    return (sum(beta), tuple(-c for c in beta))


def _matrix_inverse(m: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootSystem:
    """An irreducible finite root system of type ``series`` and ``rank``.

    Attributes of interest:

    - ``positive_roots``: sorted by height, then with alpha_1 first; this
      order is the bit order used for ideals.
    - ``roots``: positive roots followed by their negatives (same order).
    - ``d``: half square lengths of simple roots, normalized by (theta, theta) = 2.
    - ``theta``, ``theta_short``, ``marks``, ``comarks``, ``g``.

    Instances are treated as immutable; use :func:`build_root_system`
    to obtain a shared instance.
    """

    def __init__(self, series: str, rank: int):
        validate_type(series, rank)
        self.series = series.upper()
        self.rank = rank
        self.name = f"{self.series}{rank}"
        self.cartan = cartan_matrix(self.series, rank)
        self.d = symmetrizer(self.cartan)
        n = rank

        pos = positive_roots_from_cartan(self.cartan)
        self.positive_roots: tuple[Root, ...] = tuple(pos)
        self.n_pos = len(pos)
        self.roots: tuple[Root, ...] = tuple(pos) + tuple(tuple(-c for c in b) for b in pos)
        self.index: dict[Root, int] = {b: k for k, b in enumerate(self.roots)}
        self.simple_roots: tuple[Root, ...] = tuple(pos[:n])
        assert all(self.simple_roots[i][i] == 1 for i in range(n))

        self.theta: Root = pos[-1]
        if len(pos) > 1 and sum(pos[-2]) == sum(self.theta):
            raise RootSystemError("highest root is not unique")
        self.marks = self.theta
        self._half_norm = tuple(self._half_norm_of(b) for b in pos)
        # coroot coordinates: beta^vee = sum_j beta_j d_j / q(beta) alpha_j^vee
        cor = []
        for b, q in zip(pos, self._half_norm):
            c = [b[j] * self.d[j] / q for j in range(n)]
            assert all(x.denominator == 1 for x in c)
            cor.append(tuple(int(x) for x in c))
        self._coroots = tuple(cor) + tuple(tuple(-x for x in c) for c in cor)

        long_half = self._half_norm[-1]
        assert long_half == 1
        short = [b for b, q in zip(pos, self._half_norm) if q != long_half]
        self.theta_short: Root = short[-1] if short else self.theta
        self.comarks = tuple(int(self.d[i] * self.marks[i]) for i in range(n))
        assert all(self.d[i] * self.marks[i] == self.comarks[i] for i in range(n))
        self.g = 1 + sum(self.comarks)

        # lookup tables used by the fast paths in weyl and ideals
        N = len(self.roots)
        self.reflection_table = tuple(
            tuple(self.index[self.reflect(self.roots[r], i)] for r in range(N))
            for i in range(n)
        )
        self.theta_index = self.index[self.theta]
        self.theta_pairing = tuple(self.pairing(self.roots[r], self.theta) for r in range(N))
        self.s_theta_table = tuple(
            self.index[tuple(c - p * t for c, t in zip(self.roots[r], self.theta))]
            for r, p in zip(range(N), self.theta_pairing)
        )
        self.inverse_cartan = _matrix_inverse(self.cartan)
        # integer matrix and common denominator, for fast lattice tests
        den = 1
        for row in self.inverse_cartan:
            for v in row:
                den = den * v.denominator // gcd(den, v.denominator)
        self._scaled_inverse = (den, tuple(tuple(int(v * den) for v in row)
                                           for row in self.inverse_cartan))

    def __repr__(self):
        return f"RootSystem({self.name})"

    # -- basic predicates -------------------------------------------------
    def is_root(self, beta) -> bool:
        return tuple(beta) in self.index

    def is_positive(self, beta) -> bool:
        return self.index[tuple(beta)] < self.n_pos

    def height(self, beta) -> int:
        return sum(beta)

    def support(self, beta) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(beta) if c)

    def simple_root(self, i: int) -> Root:
        return self.simple_roots[i]

    # -- form and pairings ------------------------------------------------
    def _half_norm_of(self, beta) -> Fraction:
        return self.form(beta, beta) / 2

    def form(self, x, y) -> Fraction:
        """(x, y) for x, y in the root lattice."""
        n = self.rank
        a, d = self.cartan, self.d
        return sum((d[i] * a[i][j] * x[i] * y[j] for i in range(n) if x[i]
                    for j in range(n) if y[j] and a[i][j]), Fraction(0))

    def coroot_form(self, s, t) -> Fraction:
        """(s, t) for s, t in the coroot lattice; (a_i^v, a_j^v) = a_ij / d_j."""
        n = self.rank
        a, d = self.cartan, self.d
        return sum((Fraction(a[i][j], 1) / d[j] * s[i] * t[j] for i in range(n) if s[i]
                    for j in range(n) if t[j] and a[i][j]), Fraction(0))

    def half_norm(self, beta) -> Fraction:
        k = self.index.get(tuple(beta))
        if k is None:
            return self._half_norm_of(beta)
        return self._half_norm[k % self.n_pos]

    def is_long(self, beta) -> bool:
        return self.half_norm(beta) == 1

    def coroot(self, beta) -> Coroot:
        return self._coroots[self.index[tuple(beta)]]

    def pair(self, tau, beta) -> int:
        """(tau, beta) for a coroot-lattice vector tau and a root-lattice vector beta."""
        a = self.cartan
        n = self.rank
        return sum(tau[i] * a[i][j] * beta[j] for i in range(n) if tau[i] for j in range(n))

    def pairing(self, beta, alpha) -> int:
        """<beta, alpha^vee> for root-lattice beta and a root alpha."""
        return self.pair(self.coroot(alpha), beta)

    def reflect(self, beta, i: int) -> Root:
        """s_{alpha_i}(beta)."""
        p = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        out = list(beta)
        out[i] -= p
        return tuple(out)

    def reflect_by(self, beta, alpha) -> Root:
        p = self.pairing(beta, alpha)
        return tuple(b - p * a for b, a in zip(beta, alpha))

    def reflect_coroot(self, tau, alpha) -> Coroot:
        """s_alpha(tau) = tau - (tau, alpha) alpha^vee."""
        p = self.pair(tau, alpha)
        return tuple(t - p * c for t, c in zip(tau, self.coroot(alpha)))

    # -- dominance and order ----------------------------------------------
    def is_dominant(self, x) -> bool:
        """Dominance of a root-lattice vector."""
        return all(self.pairing(x, s) >= 0 for s in self.simple_roots)

    def is_dominant_coroot(self, tau) -> bool:
        return all(self.pair(tau, s) >= 0 for s in self.simple_roots)

    def dominant_roots(self) -> frozenset[Root]:
        return frozenset({self.theta, self.theta_short})

    @staticmethod
    def root_poset_leq(beta, gamma) -> bool:
        return all(b <= c for b, c in zip(beta, gamma))

    # -- coweight coordinates ---------------------------------------------
    def coweight_coords(self, tau) -> tuple[int, ...]:
        """Coordinates of tau in the fundamental coweight basis, i.e. (tau, alpha_i)."""
        return tuple(self.pair(tau, s) for s in self.simple_roots)

    def coroot_from_coweights(self, x) -> Coroot | None:
        """The coroot vector with (tau, alpha_j) = x_j, or None if not in Q^vee."""
        n = self.rank
        den, inv = self._scaled_inverse
        out = []
        for j in range(n):
            v = sum(x[i] * inv[i][j] for i in range(n))
            if v % den:
                return None
            out.append(v // den)
        return tuple(out)

    # -- subsystems -------------------------------------------------------
    @property
    def long_simple(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.d[i] == 1)

    def long_positive_roots(self) -> tuple[Root, ...]:
        return tuple(b for b in self.positive_roots if self.is_long(b))

    def parabolic_positive_roots(self, J: Iterable[int]) -> tuple[Root, ...]:
        J = frozenset(J)
        return tuple(b for b in self.positive_roots if all(b[i] == 0 or i in J for i in range(self.rank)))

    def parabolic_highest_root(self, J: Iterable[int]) -> Root:
        J = frozenset(J)
        comps = simple_components(self, J)
        if len(comps) != 1:
            raise RootSystemError(f"subsystem has {len(comps)} components, expected 1")
        return self.parabolic_positive_roots(J)[-1]

    def subsystem(self, J: Iterable[int]) -> "SubsystemDescriptor":
        return SubsystemDescriptor(self, tuple(AffineRoot(self.simple_roots[i], 0) for i in sorted(J)))

    def affine_simple_roots(self) -> tuple[AffineRoot, ...]:
        """alpha_0 = -theta + delta followed by alpha_1, ..., alpha_n."""
        return (AffineRoot(tuple(-c for c in self.theta), 1),) + tuple(
            AffineRoot(s, 0) for s in self.simple_roots)


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    return RootSystem(series.upper(), rank)


def parse_type(label: str) -> RootSystem:
    """Build from a label such as ``"E7"``."""
    label = label.strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise RootSystemError(f"cannot parse type label {label!r}")
    return build_root_system(label[0].upper(), int(label[1:]))


def pairing(rs: RootSystem, beta, alpha) -> int:
    return rs.pairing(beta, alpha)


def form(rs: RootSystem, x, y) -> Fraction:
    return rs.form(x, y)


def simple_components(rs: RootSystem, J: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the Dynkin diagram restricted to J, ordered by least index."""
    J = set(J)
    out = []
    while J:
        start = min(J)
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in list(J):
                if j not in comp and rs.cartan[i][j] != 0:
                    comp.add(j)
                    stack.append(j)
        J -= comp
        out.append(frozenset(comp))
    return out


# ---------------------------------------------------------------------------
# subsystems given by a basis

def _affine_pairing(rs: RootSystem, b: AffineRoot, c: AffineRoot) -> int:
    # delta pairs trivially with everything
    return rs.pair(rs.coroot(c.finite), b.finite)


def _affine_sort_key(rs: RootSystem, b: AffineRoot):
    return (b.level, rs.index.get(b.finite, len(rs.roots)), b.finite)


class SubsystemDescriptor:
    """Root subsystem generated by a basis of mutually obtuse (affine) roots.

    Basis elements are :class:`AffineRoot` values; finite roots carry level 0.
    Everything (roots, highest root, comarks, dual Coxeter number) is
    computed from the subsystem's own Cartan matrix.
    """

    def __init__(self, rs: RootSystem, basis: Sequence[AffineRoot]):
        self.rs = rs
        basis = tuple(b if isinstance(b, AffineRoot) else AffineRoot(tuple(b), 0) for b in basis)
        self.basis = tuple(sorted(set(basis), key=lambda b: _affine_sort_key(rs, b)))
        m = len(self.basis)
        self.cartan = tuple(tuple(_affine_pairing(rs, self.basis[j], self.basis[i]) for j in range(m))
                            for i in range(m))
        for i in range(m):
            for j in range(m):
                if i != j and self.cartan[i][j] > 0:
                    raise RootSystemError(
                        f"basis roots {self.basis[i]} and {self.basis[j]} are not obtuse")
        self._roots = None

    def __repr__(self):
        return f"SubsystemDescriptor({self.rs.name}, {list(self.basis)})"

    def __eq__(self, other):
        return isinstance(other, SubsystemDescriptor) and other.rs is self.rs and other.basis == self.basis

    def __hash__(self):
        return hash(self.basis)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def _graph_components(self) -> list[list[int]]:
        m = self.rank
        seen, out = set(), []
        for s in range(m):
            if s in seen:
                continue
            comp, stack = [s], [s]
            seen.add(s)
            while stack:
                i = stack.pop()
                for j in range(m):
                    if j not in seen and self.cartan[i][j] != 0:
                        seen.add(j)
                        comp.append(j)
                        stack.append(j)
            out.append(sorted(comp))
        return out

    @property
    def irreducible(self) -> bool:
        return len(self._graph_components()) == 1

    def components(self) -> list["SubsystemDescriptor"]:
        return [SubsystemDescriptor(self.rs, [self.basis[i] for i in comp])
                for comp in self._graph_components()]

    def positive_roots_in_basis(self) -> list[Root]:
        if self._roots is None:
            self._roots = positive_roots_from_cartan(self.cartan) if self.rank else []
        return self._roots

    def to_ambient(self, coeffs) -> AffineRoot:
        n = self.rs.rank
        fin = [0] * n
        level = 0
        for c, b in zip(coeffs, self.basis):
            if c:
                level += c * b.level
                for j in range(n):
                    fin[j] += c * b.finite[j]
        return AffineRoot(tuple(fin), level)

    def positive_roots(self) -> list[AffineRoot]:
        return [self.to_ambient(c) for c in self.positive_roots_in_basis()]

    def size(self) -> int:
        """Number of roots (positive and negative)."""
        return 2 * len(self.positive_roots_in_basis())

    def _require_irreducible(self):
        if self.rank == 0:
            raise RootSystemError("empty subsystem has no highest root")
        k = len(self._graph_components())
        if k != 1:
            raise RootSystemError(f"subsystem is reducible with {k} components")

    def highest_root_coeffs(self) -> Root:
        self._require_irreducible()
        return self.positive_roots_in_basis()[-1]

    def highest_root(self) -> AffineRoot:
        return self.to_ambient(self.highest_root_coeffs())

    def comarks(self) -> tuple[int, ...]:
        top = self.highest_root_coeffs()
        qt = self.rs.half_norm(self.highest_root().finite)
        out = []
        for c, b in zip(top, self.basis):
            v = self.rs.half_norm(b.finite) / qt * c
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def dual_coxeter_number(self) -> int:
        return 1 + sum(self.comarks())

    def contains(self, gamma: AffineRoot) -> bool:
        return gamma in set(self.positive_roots()) or (-gamma) in set(self.positive_roots())


def components(rs: RootSystem, roots: Iterable) -> list[SubsystemDescriptor]:
    """Split a set of mutually obtuse roots into irreducible pieces."""
    roots = list(roots)
    if not roots:
        return []
    return SubsystemDescriptor(rs, roots).components()


def highest_root(S: SubsystemDescriptor) -> AffineRoot:
    return S.highest_root()


def dual_coxeter_number(S: SubsystemDescriptor) -> int:
    return S.dual_coxeter_number()


def cartan_type_label(cartan: Sequence[Sequence[int]], half_norms: Sequence[Fraction],
                      rank2: str = "B2") -> str:
    """Dynkin type of an irreducible Cartan matrix, e.g. ``"D6"``. Used for labels only.

    B2 and C2 coincide; ``rank2`` picks the name used for them.
    """
    n = len(cartan)
    pos = positive_roots_from_cartan(cartan)
    npos = len(pos)
    if n == 1:
        return "A1"
    top = max(half_norms)
    # half norm of a root from the basis norms
    def q(beta):
        return sum(half_norms[i] * cartan[i][j] * beta[i] * beta[j]
                   for i in range(n) for j in range(n)) / 2
    long_count = sum(1 for b in pos if q(b) == top)
    if long_count == npos:
        if npos == n * (n + 1) // 2:
            return f"A{n}"
        if n >= 4 and npos == n * (n - 1):
            return f"D{n}"
        return {36: "E6", 63: "E7", 120: "E8"}[npos]
    if n == 2 and npos == 6:
        return "G2"
    if n == 4 and npos == 24:
        return "F4"
    if long_count == n * (n - 1) and n > 2:
        return f"B{n}"
    if long_count == n and n > 2:
        return f"C{n}"
    return rank2
