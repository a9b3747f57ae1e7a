"""The Deligne-Lusztig operator on the virtual-character lattice.

DL(V) = sum over subsets I of the simple reflections of (-1)^|I| ind res V.
The operator is assembled exactly, verified to coincide with tensoring by the
sign character, to square to the identity, and to induce the transpose pairing
on partition labels in type A.  Cohomological shift bookkeeping appears only
through the parity ledger: the inverse-side signs (-1)^(d_empty + d_I) collapse
to (-1)^|I|, which dl_inverse_matrix checks structurally by assembling the
operator from the shift numbers themselves.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chars import (
    CharacterTable,
    VirtualCharacter,
    decompose,
    sign,
    tensor,
    unit,
)
from .errors import GroupMismatch
from .grp import conjugacy_classes, parabolic
from .indres import induce, restrict
from .rootsys import WeylGroup


@dataclass(frozen=True)
class ShiftLedger:
    """The central-torus dimensions d_i = central_rank + sigma_size - i.

    d_I depends only on |I|; the parity (-1)^(d_0 + d_|I|) is the sign carried
    by the inverse-side layers and must equal (-1)^|I|.
    """

    central_rank: int
    sigma_size: int

    def shift(self, i: int) -> int:
        assert 0 <= i <= self.sigma_size
        return self.central_rank + self.sigma_size - i

    @property
    def d(self) -> tuple[int, ...]:
        return tuple(self.shift(i) for i in range(self.sigma_size + 1))

    def inverse_side_sign(self, subset_size: int) -> int:
        return (-1) ** ((self.shift(0) + self.shift(subset_size)) % 2)

    def parity_identity_holds(self, subset_size: int) -> bool:
        return self.inverse_side_sign(subset_size) == (-1) ** subset_size


@dataclass(frozen=True)
class SpringerLabel:
    """Display label of one irreducible: a partition in type A, degree+ordinal otherwise."""

    irr_index: int
    display: str


def _subsets(rank: int) -> list[tuple[int, ...]]:
    return list(
        itertools.chain.from_iterable(
            itertools.combinations(range(rank), k) for k in range(rank + 1)
        )
    )


def _alternating_matrix(W: WeylGroup, table: CharacterTable, signs: dict[int, int]) -> tuple[tuple[int, ...], ...]:
    """Columns are the images of the irreducibles under sum of sign * ind res."""
    classes = conjugacy_classes(W)
    k = table.n_irreducibles
    columns = []
    for i in range(k):
        chi = table.irreducibles[i]
        acc = [0 * v for v in chi.values]
        for subset in _subsets(W.rank):
            P = parabolic(W, subset)
            term = induce(restrict(chi, P), P, W)
            s = signs[len(subset)]
            acc = [a + s * t for a, t in zip(acc, term.values)]
        image = decompose(table, type(chi)(table.group_id, tuple(acc)))
        columns.append(image.coeffs)
    return tuple(columns)


def dl_matrix(W: WeylGroup, table: CharacterTable) -> tuple[tuple[int, ...], ...]:
    """dl_matrix[i] is the coefficient vector of DL applied to irreducible i."""
    key = ("dl_matrix", table.group_id)
    if key not in W.cache:
        signs = {k: (-1) ** k for k in range(W.rank + 1)}
        W.cache[key] = _alternating_matrix(W, table, signs)
    return W.cache[key]


def dl_inverse_matrix(W: WeylGroup, table: CharacterTable) -> tuple[tuple[int, ...], ...]:
    """Same operator assembled from the inverse-side shift parities."""
    key = ("dl_inverse_matrix", table.group_id)
    if key not in W.cache:
        ledger = ShiftLedger(W.cartan.central_rank, W.rank)
        signs = {k: ledger.inverse_side_sign(k) for k in range(W.rank + 1)}
        W.cache[key] = _alternating_matrix(W, table, signs)
    return W.cache[key]


def _apply(matrix: tuple[tuple[int, ...], ...], v: VirtualCharacter) -> tuple[int, ...]:
    k = len(matrix)
    out = [0] * k
    for i, c in enumerate(v.coeffs):
        if c:
            for j in range(k):
                out[j] += c * matrix[i][j]
    return tuple(out)


def dl_operator(W: WeylGroup, table: CharacterTable, v: VirtualCharacter) -> VirtualCharacter:
    """Apply DL to a virtual character, exactly."""
    if v.group_id != table.group_id:
        raise GroupMismatch(f"{v.group_id} vs table on {table.group_id}")
    return VirtualCharacter(table.group_id, _apply(dl_matrix(W, table), v))


def dl_inverse_operator(W: WeylGroup, table: CharacterTable, v: VirtualCharacter) -> VirtualCharacter:
    """Apply the inverse-side assembly of DL; equals dl_operator on the nose."""
    if v.group_id != table.group_id:
        raise GroupMismatch(f"{v.group_id} vs table on {table.group_id}")
    return VirtualCharacter(table.group_id, _apply(dl_inverse_matrix(W, table), v))


def sign_tensor_permutation(W: WeylGroup, table: CharacterTable) -> tuple[int, ...]:
    """The permutation of the irreducibles given by tensoring with sign."""
    classes = conjugacy_classes(W)
    sgn = decompose(table, sign(W, classes))
    perm = []
    for i in range(table.n_irreducibles):
        image = tensor(table, sgn, unit(table, i))
        nonzero = [(j, c) for j, c in enumerate(image.coeffs) if c]
        assert len(nonzero) == 1 and nonzero[0][1] == 1
        perm.append(nonzero[0][0])
    return tuple(perm)


@dataclass(frozen=True)
class SignTwistReport:
    permutation: tuple[int, ...]
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_sign_twist(W: WeylGroup, table: CharacterTable) -> SignTwistReport:
    """DL on each irreducible equals sign tensor that irreducible, exactly."""
    matrix = dl_matrix(W, table)
    perm = sign_tensor_permutation(W, table)
    violations = []
    for i in range(table.n_irreducibles):
        expected = unit(table, perm[i]).coeffs
        if matrix[i] != expected:
            violations.append(
                f"irreducible #{i}: DL image {matrix[i]} != sign-tensor image {expected}"
            )
    return SignTwistReport(perm, tuple(violations))


@dataclass(frozen=True)
class InvolutionReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_involution(W: WeylGroup, table: CharacterTable) -> InvolutionReport:
    """The matrix of DL squares to the identity, exactly."""
    matrix = dl_matrix(W, table)
    k = len(matrix)
    violations = []
    for i in range(k):
        twice = _apply(matrix, VirtualCharacter(table.group_id, matrix[i]))
        expected = tuple(1 if j == i else 0 for j in range(k))
        if twice != expected:
            violations.append(f"column #{i}: DL^2 image is {twice}")
    return InvolutionReport(tuple(violations))


def irreducible_labels(table: CharacterTable) -> tuple[SpringerLabel, ...]:
    """Per-irreducible display labels in canonical order."""
    out = []
    seen_by_degree: dict[int, int] = {}
    for i, deg in enumerate(table.degrees):
        if table.labels is not None:
            display = "(" + ",".join(str(p) for p in table.labels[i]) + ")"
        else:
            ordinal = seen_by_degree.get(deg, 0) + 1
            seen_by_degree[deg] = ordinal
            display = f"d{deg}.{ordinal}"
        out.append(SpringerLabel(i, display))
    return tuple(out)


def springer_table(W: WeylGroup, table: CharacterTable) -> tuple[tuple[SpringerLabel, SpringerLabel], ...]:
    """The pairing alpha -> sign tensor alpha, rendered in labels.

    In type A this is transposition of partitions.
    """
    labels = irreducible_labels(table)
    perm = sign_tensor_permutation(W, table)
    return tuple((labels[i], labels[perm[i]]) for i in range(table.n_irreducibles))
