"""Linear algebra over GF(2) on int-packed vectors.

A vector of length n is a Python int; bit ``i - 1`` holds coordinate ``i``.
Elimination always pivots on the lowest set bit, so every basis produced
here is reproducible from the input order.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def lowbit(v: int) -> int:
    """Index (0-based) of the lowest set bit of a nonzero vector."""
    return (v & -v).bit_length() - 1


def parity(v: int) -> int:
    return v.bit_count() & 1


def dot(u: int, v: int) -> int:
    return (u & v).bit_count() & 1


class Echelon:
    """Incremental row-echelon form keyed by pivot bit.

    Row ``rows[p]`` has its lowest set bit at ``p``. Rows are kept fully
    reduced: no row has a bit set at another row's pivot.
    """

    def __init__(self, vectors: Iterable[int] = ()):
        self.rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        rows = self.rows
        w = v
        # rows are fully reduced, so one pass over set pivot bits suffices
        for p, row in rows.items():
            if (w >> p) & 1:
                w ^= row
        return w

    def add(self, v: int) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        w = self.reduce(v)
        if not w:
            return False
        p = lowbit(w)
        for q, row in self.rows.items():
            if (row >> p) & 1:
                self.rows[q] = row ^ w
        self.rows[p] = w
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self.rows)

    def basis(self) -> list[int]:
        return [self.rows[p] for p in sorted(self.rows)]

    def copy(self) -> Echelon:
        e = Echelon()
        e.rows = dict(self.rows)
        return e


def rank(vectors: Iterable[int]) -> int:
    return len(Echelon(vectors))


def span_basis(vectors: Iterable[int]) -> list[int]:
    """Reduced basis of the span, ordered by pivot."""
    return Echelon(vectors).basis()


def orthogonal_basis(vectors: Iterable[int], n: int) -> list[int]:
    """Basis of all length-``n`` vectors orthogonal to every input vector.

    Built from the reduced echelon form: each non-pivot column ``f`` gives
    ``e_f`` plus the pivots of the rows that have bit ``f`` set. The result is
    ordered by free column.
    """
    rows = Echelon(vectors).rows
    out = []
    for f in range(n):
        if f in rows:
            continue
        w = 1 << f
        for p, row in rows.items():
            if (row >> f) & 1:
                w |= 1 << p
        out.append(w)
    return out


def span_elements(basis: list[int]) -> Iterator[int]:
    """All 2^k elements of the span of ``basis``, in Gray-code order."""
    v = 0
    yield v
    for i in range(1, 1 << len(basis)):
        v ^= basis[lowbit(i)]
        yield v


def canonical_coset_rep(ech: Echelon, v: int) -> int:
    """Unique representative of ``v + span`` (reduction by the echelon)."""
    return ech.reduce(v)
