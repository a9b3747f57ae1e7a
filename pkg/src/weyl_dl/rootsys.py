"""Root systems from Cartan data, and Weyl groups realized as permutations of the roots.

Everything is exact: roots live in the root lattice (integer coordinates in the
simple-root basis) and group elements are permutations of the finite root list.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod

import numpy as np

from .errors import InvalidType, NonFinite, SizeLimit

Coords = tuple[int, ...]
Perm = tuple[int, ...]

DEFAULT_MAX_ORDER = 2_000_000
DEFAULT_MAX_ROOTS = 10_000

# Groups up to this order get a dense multiplication table (fast vectorized
# conjugation sweeps); larger ones fall back to composing permutations.
MULT_TABLE_LIMIT = 4096

ACCEPTED_TYPES = "A(n>=1), B(n>=2), C(n>=3), D(n>=4), G(2), F(4)"


def _chain(n: int) -> list[list[int]]:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = 2
        if i + 1 < n:
            m[i][i + 1] = -1
            m[i + 1][i] = -1
    return m


def standard_cartan_matrix(type_label: str, rank: int) -> tuple[Coords, ...]:
    """Standard Cartan matrix of an irreducible type, entry(i,j) = <a_j, a_i^v>."""
    if type_label == "A" and rank >= 1:
        m = _chain(rank)
    elif type_label == "B" and rank >= 2:
        m = _chain(rank)
        m[rank - 1][rank - 2] = -2
    elif type_label == "C" and rank >= 3:
        m = _chain(rank)
        m[rank - 2][rank - 1] = -2
    elif type_label == "D" and rank >= 4:
        m = _chain(rank)
        # branch node: the last two simple roots both attach to node rank-3
        m[rank - 1][rank - 2] = 0
        m[rank - 2][rank - 1] = 0
        m[rank - 1][rank - 3] = -1
        m[rank - 3][rank - 1] = -1
    elif type_label == "G" and rank == 2:
        m = [[2, -1], [-3, 2]]
    elif type_label == "F" and rank == 4:
        m = _chain(4)
        m[2][1] = -2
    else:
        raise InvalidType(
            f"unsupported type {type_label}{rank}; accepted: {ACCEPTED_TYPES}"
        )
    return tuple(tuple(row) for row in m)


def fundamental_degrees(type_label: str, rank: int) -> tuple[int, ...]:
    """Degrees of the basic invariants; their product is the group order."""
    if type_label == "A":
        return tuple(range(2, rank + 2))
    if type_label in ("B", "C"):
        return tuple(range(2, 2 * rank + 1, 2))
    if type_label == "D":
        return tuple(range(2, 2 * rank - 1, 2)) + (rank,)
    if type_label == "G":
        return (2, 6)
    if type_label == "F":
        return (2, 6, 8, 12)
    raise InvalidType(f"no degree table for type {type_label}")


@dataclass(frozen=True)
class CartanDatum:
    """An irreducible Cartan matrix plus the rank of the central torus it sits over."""

    type_label: str
    rank: int
    cartan_matrix: tuple[Coords, ...]
    central_rank: int = 0

    def __post_init__(self) -> None:
        m = self.cartan_matrix
        assert len(m) == self.rank and all(len(row) == self.rank for row in m)
        for i in range(self.rank):
            assert m[i][i] == 2
            for j in range(self.rank):
                if i == j:
                    continue
                assert m[i][j] <= 0
                assert (m[i][j] == 0) == (m[j][i] == 0)
                assert m[i][j] * m[j][i] in (0, 1, 2, 3)

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def group_id(self) -> str:
        if self.central_rank:
            return f"{self.label}+z{self.central_rank}"
        return self.label


def build_cartan(type_label: str, rank: int, central_rank: int = 0) -> CartanDatum:
    """Standard Cartan datum for an irreducible pair, rejecting aliases (C2, D2, D3)."""
    if not isinstance(rank, int) or rank < 1:
        raise InvalidType(f"rank must be a positive integer, got {rank!r}")
    if central_rank < 0:
        raise InvalidType(f"central_rank must be non-negative, got {central_rank}")
    if type_label == "E":
        raise InvalidType(
            f"type E is not enumerated at desk scale; accepted: {ACCEPTED_TYPES}"
        )
    matrix = standard_cartan_matrix(type_label, rank)
    return CartanDatum(type_label, rank, matrix, central_rank)


@dataclass(frozen=True)
class RootSystem:
    """The finite root set, in simple-root coordinates, with the simple reflections.

    Roots are ordered: positive roots first, sorted by (height, coordinates),
    then the negatives in the matching order.  This ordering is what makes every
    downstream permutation, and hence every table, deterministic.
    """

    cartan: CartanDatum
    roots: tuple[Coords, ...]
    n_positive: int
    simple_reflection_perms: tuple[Perm, ...]

    @property
    def positive_roots(self) -> tuple[Coords, ...]:
        return self.roots[: self.n_positive]

    @cached_property
    def root_index(self) -> dict[Coords, int]:
        return {r: i for i, r in enumerate(self.roots)}

    @cached_property
    def simple_root_columns(self) -> tuple[int, ...]:
        """Root-list positions of the simple roots, in simple-root order."""
        rank = self.cartan.rank
        cols = []
        for i in range(rank):
            e = tuple(1 if j == i else 0 for j in range(rank))
            cols.append(self.root_index[e])
        return tuple(cols)


def _reflect(cartan: CartanDatum, v: Coords, i: int) -> Coords:
    pairing = sum(cartan.cartan_matrix[i][j] * v[j] for j in range(cartan.rank))
    out = list(v)
    out[i] -= pairing
    return tuple(out)


def build_root_system(cartan: CartanDatum, max_roots: int = DEFAULT_MAX_ROOTS) -> RootSystem:
    """Close the simple roots under the simple reflections.

    Raises NonFinite if the closure exceeds max_roots, which only happens for a
    Cartan matrix that is not of finite type.
    """
    rank = cartan.rank
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    seen: set[Coords] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = _reflect(cartan, v, i)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > max_roots:
            raise NonFinite(
                f"root closure exceeded {max_roots} vectors; Cartan matrix is not finite type"
            )
        frontier = nxt

    positives = sorted(
        (v for v in seen if all(c >= 0 for c in v)),
        key=lambda v: (sum(v), v),
    )
    negatives = [tuple(-c for c in v) for v in positives]
    roots = tuple(positives + negatives)
    if len(roots) != len(seen):
        raise NonFinite("root set is not symmetric under negation")

    index = {r: k for k, r in enumerate(roots)}
    perms = []
    for i in range(rank):
        perms.append(tuple(index[_reflect(cartan, r, i)] for r in roots))
    rs = RootSystem(cartan, roots, len(positives), tuple(perms))

    # s_i negates a_i and permutes the remaining positive roots
    for i, p in enumerate(perms):
        col = rs.simple_root_columns[i]
        assert p[col] == col + rs.n_positive
        for r in range(rs.n_positive):
            if r != col:
                assert p[r] < rs.n_positive
    return rs


def _compose(a: Perm, b: Perm) -> Perm:
    """a after b."""
    return tuple(a[x] for x in b)


class WeylGroup:
    """The full reflection group, enumerated as permutations of the root list.

    Elements are indexed 0..order-1 in canonical order: by length, then by the
    lexicographic image of the root list.  Index 0 is the identity.
    """

    def __init__(
        self,
        rootsystem: RootSystem,
        elements: tuple[Perm, ...],
        lengths: tuple[int, ...],
        words: tuple[tuple[int, ...], ...],
        mult_table_limit: int = MULT_TABLE_LIMIT,
    ):
        self.rootsystem = rootsystem
        self.cartan = rootsystem.cartan
        self.elements = elements
        self.lengths = lengths
        self.words = words
        self.identity_index = 0
        self._mult_table_limit = mult_table_limit
        self.generator_indices = tuple(
            self.element_index[p] for p in rootsystem.simple_reflection_perms
        )
        self.group_id = rootsystem.cartan.group_id
        self.cache: dict = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @cached_property
    def element_index(self) -> dict[Perm, int]:
        return {p: i for i, p in enumerate(self.elements)}

    @cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray] | None:
        """Dense (multiplication, inverse) index tables, or None above the size limit."""
        n = self.order
        if n > self._mult_table_limit:
            return None
        E = np.array(self.elements, dtype=np.int64)
        cols = np.array(self.rootsystem.simple_root_columns)
        base = len(self.rootsystem.roots)
        powers = base ** np.arange(len(cols), dtype=np.int64)
        codes = E[:, cols] @ powers
        order_idx = np.argsort(codes, kind="stable")
        sorted_codes = codes[order_idx]

        def lookup(c: np.ndarray) -> np.ndarray:
            return order_idx[np.searchsorted(sorted_codes, c)]

        mult = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            images = E[a][E[:, cols]]
            mult[a] = lookup(images @ powers)
        inv_perms = np.argsort(E, axis=1)
        inv = lookup(inv_perms[:, cols] @ powers).astype(np.int32)
        mult.setflags(write=False)
        inv.setflags(write=False)
        return mult, inv

    def mul(self, a: int, b: int) -> int:
        """Index of elements[a] after elements[b]."""
        t = self._tables
        if t is not None:
            return int(t[0][a, b])
        return self.element_index[_compose(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        t = self._tables
        if t is not None:
            return int(t[1][a])
        p = self.elements[a]
        q = [0] * len(p)
        for i, x in enumerate(p):
            q[x] = i
        return self.element_index[tuple(q)]

    def conjugate_sweep(self, w: int, xs: np.ndarray | None = None) -> np.ndarray:
        """Indices of x*w*x^-1 for every x in xs (all elements by default)."""
        t = self._tables
        if xs is None:
            xs = np.arange(self.order)
        if t is not None:
            mult, inv = t
            return mult[mult[xs, w], inv[xs]].astype(np.int64)
        out = np.empty(len(xs), dtype=np.int64)
        for k, x in enumerate(xs):
            out[k] = self.mul(self.mul(int(x), w), self.inv(int(x)))
        return out

    def word_str(self, e: int) -> str:
        """Reduced word of an element, e.g. 's1*s2'; the identity is 'e'."""
        word = self.words[e]
        if not word:
            return "e"
        return "*".join(f"s{i + 1}" for i in word)

    def inversions(self, e: int) -> int:
        """Number of positive roots sent to negative roots."""
        p = self.elements[e]
        npos = self.rootsystem.n_positive
        return sum(1 for r in range(npos) if p[r] >= npos)

    @cached_property
    def longest_element(self) -> int:
        npos = self.rootsystem.n_positive
        longest = [e for e in range(self.order) if self.lengths[e] == npos]
        assert len(longest) == 1
        return longest[0]


def enumerate_group(
    rootsystem: RootSystem,
    max_order: int = DEFAULT_MAX_ORDER,
    mult_table_limit: int = MULT_TABLE_LIMIT,
) -> WeylGroup:
    """Breadth-first closure of the simple reflections; length = search depth."""
    identity = tuple(range(len(rootsystem.roots)))
    gens = rootsystem.simple_reflection_perms
    found: dict[Perm, tuple[int, tuple[int, ...]]] = {identity: (0, ())}
    frontier = [identity]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for p in frontier:
            word = found[p][1]
            for i, g in enumerate(gens):
                q = _compose(p, g)
                if q not in found:
                    found[q] = (depth, word + (i,))
                    nxt.append(q)
        if len(found) > max_order:
            raise SizeLimit(
                f"group order exceeds the configured maximum {max_order}"
            )
        frontier = nxt

    ordering = sorted(found, key=lambda p: (found[p][0], p))
    elements = tuple(ordering)
    lengths = tuple(found[p][0] for p in ordering)
    words = tuple(found[p][1] for p in ordering)

    cartan = rootsystem.cartan
    expected = prod(fundamental_degrees(cartan.type_label, cartan.rank))
    assert len(elements) == expected, (
        f"enumerated {len(elements)} elements for {cartan.label}, expected {expected}"
    )
    return WeylGroup(rootsystem, elements, lengths, words, mult_table_limit)


def build_weyl_group(
    type_label: str,
    rank: int,
    central_rank: int = 0,
    max_order: int = DEFAULT_MAX_ORDER,
) -> WeylGroup:
    """Convenience: cartan -> root system -> enumerated group."""
    cartan = build_cartan(type_label, rank, central_rank)
    return enumerate_group(build_root_system(cartan), max_order=max_order)
