"""Fundamental partition of the coordinates of a perfect code.

Two coordinates share a class iff every dual codeword agrees on them. A class
is labelled by the integer whose k-th bit is the coordinate's value in the
k-th dual basis vector; label 0 is the set of coordinates where the whole dual
vanishes (it may be empty, but the label always exists).
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from . import gf2
from .bitcode import BinaryCode, dual
from .design import SteinerLoop
from .errors import InvalidInput, TheoryViolation
from .mollard import mollard_dual_basis
from .perm import Permutation


@dataclass(frozen=True)
class FundamentalPartition:
    n: int
    corank: int
    labels: tuple[int, ...]  # label of coordinate i at position i; slot 0 is 0

    @property
    def num_classes(self) -> int:
        return 1 << self.corank

    @property
    def classes(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {j: set() for j in range(self.num_classes)}
        for i in range(1, self.n + 1):
            out[self.labels[i]].add(i)
        return {j: frozenset(c) for j, c in out.items()}

    def as_partition(self) -> frozenset[frozenset[int]]:
        """Label-free view: the nonempty blocks."""
        return frozenset(c for c in self.classes.values() if c)

    def same_as(self, other: FundamentalPartition) -> bool:
        return self.classes[0] == other.classes[0] and self.as_partition() == other.as_partition()

    def to_json(self) -> dict:
        return {
            "classes": [{"label": j, "coords": sorted(c)} for j, c in sorted(self.classes.items())],
            "corank": self.corank,
        }


def partition_from_dual(n: int, dual_basis: Sequence[int]) -> FundamentalPartition:
    labels = [0] * (n + 1)
    for i in range(n):
        labels[i + 1] = sum(((h >> i) & 1) << k for k, h in enumerate(dual_basis))
    fp = FundamentalPartition(n, len(dual_basis), tuple(labels))
    _check_sizes(fp)
    return fp


def _check_sizes(fp: FundamentalPartition) -> None:
    q, rem = divmod(fp.n + 1, fp.num_classes)
    if rem:
        raise TheoryViolation(f"{fp.num_classes} classes do not divide n + 1 = {fp.n + 1}")
    for j, c in fp.classes.items():
        want = q - 1 if j == 0 else q
        if len(c) != want:
            raise TheoryViolation(f"class {j} has {len(c)} coordinates, expected {want}")


def fundamental_partition(code: BinaryCode, dual_basis: Sequence[int] | None = None) -> FundamentalPartition:
    """Group coordinates by their column over a dual basis.

    Without ``dual_basis`` the basis is the one produced by elimination on
    the span of the code.
    """
    if dual_basis is None:
        dual_basis = dual(code).basis
    elif gf2.rank(dual_basis) != len(dual_basis):
        raise InvalidInput("dual basis is not linearly independent")
    return partition_from_dual(code.n, dual_basis)


def respects_partition(fp: FundamentalPartition, perm: Permutation) -> bool:
    if perm.degree != fp.n:
        return False
    classes = fp.classes
    if perm.apply_set(classes[0]) != classes[0]:
        return False
    lab = fp.labels
    for j, c in classes.items():
        if j == 0 or not c:
            continue
        images = {lab[perm(i)] for i in c}
        if len(images) != 1 or 0 in images:
            return False
    return True


def heden_loop(fp: FundamentalPartition, loop: SteinerLoop) -> tuple[tuple[int, ...], ...]:
    """Operation on class labels induced by the Steiner loop.

    The loop identity 0 is treated as a member of class 0. Raises
    TheoryViolation if some pair of classes sends representatives into
    different classes, or if the table is not an elementary abelian 2-group.
    """
    if loop.n != fp.n:
        raise InvalidInput("loop and partition have different lengths")
    k = fp.num_classes
    lab = (0, *fp.labels[1:])
    table: list[list[int | None]] = [[None] * k for _ in range(k)]
    for a in range(fp.n + 1):
        for b in range(fp.n + 1):
            j, jj = lab[a], lab[b]
            got = lab[loop(a, b)]
            prev = table[j][jj]
            if prev is None:
                table[j][jj] = got
            elif prev != got:
                raise TheoryViolation(f"classes {j} and {jj} do not determine a product class")
    if any(x is None for row in table for x in row):
        raise TheoryViolation("some pair of classes has no representatives")
    out = tuple(tuple(row) for row in table)  # type: ignore[arg-type]
    if not is_elementary_abelian_table(out):
        raise TheoryViolation("class operation is not an elementary abelian 2-group")
    return out


def is_elementary_abelian_table(table: Sequence[Sequence[int]]) -> bool:
    k = len(table)
    r = range(k)
    if any(table[0][j] != j or table[j][0] != j for j in r):
        return False
    if any(table[j][j] != 0 for j in r):
        return False
    if any(table[a][b] != table[b][a] for a in r for b in r):
        return False
    return all(table[table[a][b]][c] == table[a][table[b][c]] for a, b, c in itertools.product(r, repeat=3))


def mollard_partition(C: BinaryCode, D: BinaryCode, check: bool = True) -> FundamentalPartition:
    """Fundamental partition of M(C, D) from those of C and D.

    Cell (r, s) gets label label_C(r) | label_D(s) << corank(C), with the
    row/column index 0 carrying label 0. With ``check`` the result is compared
    against the partition computed from the dual of M(C, D) by elimination.
    """
    from .mollard import GridCoords, MollardCode

    fC = fundamental_partition(C)
    fD = fundamental_partition(D)
    g = GridCoords(C.n, D.n)
    labels = [0] * (g.n + 1)
    for i in range(1, g.n + 1):
        r, s = g.cell(i)
        labels[i] = (fC.labels[r] if r else 0) | ((fD.labels[s] if s else 0) << fC.corank)
    fp = FundamentalPartition(g.n, fC.corank + fD.corank, tuple(labels))
    _check_sizes(fp)
    if check:
        direct = fundamental_partition(MollardCode(C, D, check=False))
        if not fp.same_as(direct):
            raise TheoryViolation("product partition differs from the directly computed one")
    return fp


def mollard_partition_from_dual(C: BinaryCode, D: BinaryCode) -> FundamentalPartition:
    """Partition read off the lifted dual basis (row blocks, then column blocks)."""
    basis = mollard_dual_basis(C, D)
    return partition_from_dual(C.n * D.n + C.n + D.n, basis)
