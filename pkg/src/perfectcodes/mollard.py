"""The Mollard construction for perfect codes and Steiner triple systems.

Coordinates of a Mollard code built from codes of lengths t and m are the
grid cells (r, s) in {0..t} x {0..m} without (0, 0). Cell (r, s) is stored at
linear index ``r * (m + 1) + s`` (so bit ``r * (m + 1) + s - 1`` of a word).
Row r >= 1 is {(r, s) : 0 <= s <= m}; column s >= 1 is {(r, s) : 0 <= r <= t}.

A word z belongs to M(C, D) iff its row parities p1(z) lie in C and its
column parities p2(z) lie in D.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from . import gf2
from .bitcode import BinaryCode, LinearCode, is_perfect, support
from .design import TripleSystem, sts_of_code
from .errors import ConstructionBug, CorruptDesign, InvalidInput, InvalidParameter, ResourceLimit


@dataclass(frozen=True)
class GridCoords:
    t: int
    m: int

    @property
    def n(self) -> int:
        return self.t * self.m + self.t + self.m

    def index(self, r: int, s: int) -> int:
        if not (0 <= r <= self.t and 0 <= s <= self.m) or (r, s) == (0, 0):
            raise InvalidInput(f"({r}, {s}) is not a grid cell for t={self.t}, m={self.m}")
        return r * (self.m + 1) + s

    def cell(self, i: int) -> tuple[int, int]:
        if not 1 <= i <= self.n:
            raise InvalidInput(f"index {i} outside 1..{self.n}")
        return divmod(i, self.m + 1)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.n + 1):
            yield self.cell(i)

    def bit(self, r: int, s: int) -> int:
        return 1 << (self.index(r, s) - 1)

    @cached_property
    def row_masks(self) -> tuple[int, ...]:
        """Entry r (1..t) covers row r including column 0; entry 0 is row 0."""
        m1 = self.m + 1
        rows = [sum(1 << (s - 1) for s in range(1, m1))]
        for r in range(1, self.t + 1):
            rows.append(sum(1 << (r * m1 + s - 1) for s in range(m1)))
        return tuple(rows)

    @cached_property
    def col_masks(self) -> tuple[int, ...]:
        """Entry s (1..m) covers column s including row 0; entry 0 is column 0."""
        m1 = self.m + 1
        cols = [sum(1 << (r * m1 - 1) for r in range(1, self.t + 1))]
        for s in range(1, m1):
            cols.append(sum(1 << (r * m1 + s - 1) for r in range(self.t + 1)))
        return tuple(cols)

    @cached_property
    def cell_triples(self) -> tuple[int, ...]:
        """e_{r,s} + e_{0,s} + e_{r,0} for r, s >= 1, ordered by (r, s)."""
        return tuple(
            self.bit(r, s) | self.bit(0, s) | self.bit(r, 0)
            for r in range(1, self.t + 1)
            for s in range(1, self.m + 1)
        )

    @cached_property
    def inner_mask(self) -> int:
        return sum(self.bit(r, s) for r in range(1, self.t + 1) for s in range(1, self.m + 1))

    def p1(self, z: int) -> int:
        out = 0
        rows = self.row_masks
        for r in range(1, self.t + 1):
            if (z & rows[r]).bit_count() & 1:
                out |= 1 << (r - 1)
        return out

    def p2(self, z: int) -> int:
        out = 0
        cols = self.col_masks
        for s in range(1, self.m + 1):
            if (z & cols[s]).bit_count() & 1:
                out |= 1 << (s - 1)
        return out

    def embed1(self, x: int) -> int:
        """x on the column-0 cells (r, 0)."""
        m1 = self.m + 1
        return sum(1 << (r * m1 - 1) for r in support(x))

    def embed2(self, y: int) -> int:
        """y on the row-0 cells (0, s): the first m bits."""
        return y

    def lift_rows(self, u: int) -> int:
        """Word supported on supp(u) x {0..m}."""
        rows = self.row_masks
        return sum(rows[r] for r in support(u))

    def lift_cols(self, v: int) -> int:
        """Word supported on {0..t} x supp(v)."""
        cols = self.col_masks
        return sum(cols[s] for s in support(v))

    def check_length(self, z: int) -> None:
        if z < 0 or z >> self.n:
            raise InvalidInput(f"word does not fit length {self.n}")


def p1(grid: GridCoords, z: int) -> int:
    grid.check_length(z)
    return grid.p1(z)


def p2(grid: GridCoords, z: int) -> int:
    grid.check_length(z)
    return grid.p2(z)


class MollardCode(BinaryCode):
    """M(C, D) with the zero function, held structurally.

    Membership, kernel, weight-3 words and the dual are all derived from the
    component codes; words are only enumerated on request.
    """

    def __init__(self, C: BinaryCode, D: BinaryCode, check: bool = True):
        if check:
            for name, code in (("C", C), ("D", D)):
                if 0 not in code:
                    raise InvalidParameter(f"{name} must contain the zero word")
                if not is_perfect(code):
                    raise InvalidParameter(f"{name} must be perfect")
        self.C = C
        self.D = D
        self.grid = GridCoords(C.n, D.n)
        self.t = C.n
        self.m = D.n
        self.n = self.grid.n

    def __contains__(self, z: int) -> bool:
        if z < 0 or z >> self.n:
            return False
        g = self.grid
        return g.p1(z) in self.C and g.p2(z) in self.D

    @property
    def size(self) -> int:
        return self.C.size * self.D.size << (self.t * self.m)

    def recompose(self, x: int, y: int, cells: Iterable[tuple[int, int]]) -> int:
        g = self.grid
        z = g.embed1(x) ^ g.embed2(y)
        for r, s in cells:
            if not (1 <= r <= self.t and 1 <= s <= self.m):
                raise InvalidInput(f"cell ({r}, {s}) is not an inner cell")
            z ^= g.bit(r, s) | g.bit(0, s) | g.bit(r, 0)
        return z

    def words(self) -> Iterator[int]:
        if not self.enumerable:
            raise ResourceLimit(f"{self!r} is too large to enumerate")
        triples = self.grid.cell_triples
        inner = list(gf2.span_elements(list(triples)))
        g = self.grid
        for x in self.C.words():
            x1 = g.embed1(x)
            for y in self.D.words():
                base = x1 ^ y
                for a in inner:
                    yield base ^ a

    def span_generators(self) -> list[int]:
        g = self.grid
        return (
            [g.embed1(x) for x in self.C.span.basis()]
            + [g.embed2(y) for y in self.D.span.basis()]
            + list(g.cell_triples)
        )

    def kernel_basis(self) -> list[int]:
        g = self.grid
        return (
            [g.embed1(x) for x in self.C.kernel_basis()]
            + [g.embed2(y) for y in self.D.kernel_basis()]
            + list(g.cell_triples)
        )

    def kernel_contains(self, z: int) -> bool:
        if z not in self:
            return False
        g = self.grid
        return self.C.kernel_contains(g.p1(z)) and self.D.kernel_contains(g.p2(z))

    def coset_reps(self) -> list[int]:
        return list(self._coset_reps)

    @cached_property
    def _coset_reps(self) -> tuple[int, ...]:
        g = self.grid
        return tuple(g.embed1(x) ^ g.embed2(y) for x in self.C.coset_reps() for y in self.D.coset_reps())

    @cached_property
    def sts(self) -> TripleSystem:
        return mollard_sts(sts_of_code(self.C), sts_of_code(self.D))

    def weight3_words(self) -> list[int]:
        return sorted((1 << (a - 1)) | (1 << (b - 1)) | (1 << (c - 1)) for a, b, c in self.sts.triples)

    def min_distance(self) -> int:
        # z, z + e both in M iff p1(e) is a difference of C-words and p2(e)
        # one of D-words; differences of weight below d(C) are only 0.
        dC = self.C.min_distance() if self.C.size > 1 else None
        dD = self.D.min_distance() if self.D.size > 1 else None

        def is_diff(code: BinaryCode, d: int | None, x: int) -> bool:
            if x == 0:
                return True
            if d is None or x.bit_count() < d:
                return False
            return any((c ^ x) in code for c in code.words())

        g = self.grid
        for w in range(1, self.n + 1):
            for pos in itertools.combinations(range(self.n), w):
                e = sum(1 << p for p in pos)
                if is_diff(self.C, dC, g.p1(e)) and is_diff(self.D, dD, g.p2(e)):
                    return w
        raise AssertionError("unreachable")

    def __repr__(self) -> str:
        return f"MollardCode(t={self.t}, m={self.m}, n={self.n})"


def mollard(C: BinaryCode, D: BinaryCode) -> MollardCode:
    return MollardCode(C, D)


def embed1(M: MollardCode, x: int) -> int:
    if x not in M.C:
        raise InvalidInput("x is not a word of C")
    return M.grid.embed1(x)


def embed2(M: MollardCode, y: int) -> int:
    if y not in M.D:
        raise InvalidInput("y is not a word of D")
    return M.grid.embed2(y)


def decompose(M: MollardCode, z: int) -> tuple[int, int, frozenset[tuple[int, int]]]:
    """Unique (x, y, cells) with z = x^1 + y^2 + sum over cells of the cell triples."""
    if z not in M:
        raise InvalidInput("word is not in the Mollard code")
    g = M.grid
    cells = frozenset(g.cell(i) for i in support(z & g.inner_mask))
    rest = z
    for r, s in cells:
        rest ^= g.bit(r, s) | g.bit(0, s) | g.bit(r, 0)
    # rest now lives on column 0 and row 0 only
    x = g.p1(rest)
    y = rest & g.row_masks[0]
    if g.embed1(x) ^ y != rest:
        raise ConstructionBug("decomposition left cells outside row 0 and column 0")
    return x, y, cells


def mollard_dual_basis(C: BinaryCode, D: BinaryCode) -> list[int]:
    """Row blocks of the dual(C) basis, then column blocks of the dual(D) basis."""
    from .bitcode import dual

    g = GridCoords(C.n, D.n)
    return [g.lift_rows(u) for u in dual(C).basis] + [g.lift_cols(v) for v in dual(D).basis]


def mollard_dual(C: BinaryCode, D: BinaryCode) -> LinearCode:
    """Dual of M(C, D), spanned by the lifts of dual(C) and dual(D) words."""
    return LinearCode(C.n * D.n + C.n + D.n, mollard_dual_basis(C, D))


def sts_families(S1: TripleSystem, S2: TripleSystem) -> dict[str, frozenset[tuple[int, int, int]]]:
    """The four triple families of the Mollard design, as sorted index triples.

    "00": {(r,0), (r,s), (0,s)};  "33": one triple of each system, cells
    matched in all 6 ways;  "30": an S1 triple in column 0 against one row
    pair in a column s;  "03": the transpose.
    """
    t, m = S1.n, S2.n
    g = GridCoords(t, m)
    ix = g.index

    def tri(a, b, c):
        return tuple(sorted((ix(*a), ix(*b), ix(*c))))

    f00 = {tri((r, 0), (r, s), (0, s)) for r in range(1, t + 1) for s in range(1, m + 1)}
    f33 = set()
    for a in S1.triples:
        for b in S2.triples:
            for pb in itertools.permutations(b):
                f33.add(tri(*zip(a, pb)))
    f30 = set()
    for a in S1.triples:
        for r, r1, r2 in itertools.permutations(a):
            for s in range(m + 1):
                f30.add(tri((r, 0), (r1, s), (r2, s)))
    f03 = set()
    for b in S2.triples:
        for s, s1, s2 in itertools.permutations(b):
            for r in range(t + 1):
                f03.add(tri((r, s), (r, s1), (0, s2)))
    return {"00": frozenset(f00), "33": frozenset(f33), "30": frozenset(f30), "03": frozenset(f03)}


def mollard_sts(S1: TripleSystem, S2: TripleSystem) -> TripleSystem:
    fams = sts_families(S1, S2)
    triples = set().union(*fams.values())
    if sum(len(f) for f in fams.values()) != len(triples):
        raise ConstructionBug("triple families overlap")
    try:
        return TripleSystem(S1.n * S2.n + S1.n + S2.n, triples)
    except CorruptDesign as exc:
        raise ConstructionBug(f"Mollard triples are not a Steiner system: {exc}") from exc


def kernel_membership(M: MollardCode, z: int) -> bool:
    """z is a period of M iff p1(z) is a period of C and p2(z) one of D."""
    if z not in M:
        raise InvalidInput("word is not in the Mollard code")
    g = M.grid
    return M.C.kernel_contains(g.p1(z)) and M.D.kernel_contains(g.p2(z))


def mollard_mu_formula(mu_C: int, mu_D: int, t: int, m: int, r: int, s: int) -> int:
    if r and not s:
        return mu_C * (m + 1) + m
    if s and not r:
        return mu_D * (t + 1) + t
    if r and s:
        return 1 + 2 * (mu_D + mu_C + mu_C * mu_D)
    raise InvalidInput("(0, 0) is not a coordinate")


def mollard_mu(M: MollardCode, coord: tuple[int, int]) -> int:
    """Closed-form mu at grid cell (r, s) from the mu profiles of C and D."""
    from .linearity import mu_profile

    r, s = coord
    M.grid.index(r, s)
    mu_C = mu_profile(M.C).values[r] if r else 0
    mu_D = mu_profile(M.D).values[s] if s else 0
    return mollard_mu_formula(mu_C, mu_D, M.t, M.m, r, s)
