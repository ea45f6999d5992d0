"""Steiner triple systems, their quasigroup/loop, Pasch counts and automorphisms."""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from . import gf2
from .bitcode import BinaryCode, support
from .errors import CorruptCode, CorruptDesign, InvalidInput, NotClosed
from .perm import PermGroup


class TripleSystem:
    """Steiner triple system on points 1..n.

    The Steiner property (every pair of points in exactly one triple) is
    checked on construction.
    """

    def __init__(self, n: int, triples: Iterable[Iterable[int]]):
        if n < 1:
            raise InvalidInput("order must be positive")
        ts = frozenset(tuple(sorted(t)) for t in triples)
        third = [[0] * (n + 1) for _ in range(n + 1)]
        for t in ts:
            if len(t) != 3 or len(set(t)) != 3 or t[0] < 1 or t[2] > n:
                raise CorruptDesign(f"bad triple {t} for order {n}")
            a, b, c = t
            for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
                if third[x][y]:
                    raise CorruptDesign(f"pair {{{x}, {y}}} lies in two triples")
                third[x][y] = third[y][x] = z
        if len(ts) * 6 != n * (n - 1):
            raise CorruptDesign(f"{len(ts)} triples cannot cover all pairs of {n} points")
        for i in range(1, n + 1):
            third[i][i] = i
        self.n = n
        self.triples = ts
        # third[i][j] is the quasigroup product i.j (i.i = i)
        self.third = third

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TripleSystem):
            return NotImplemented
        return self.n == other.n and self.triples == other.triples

    def __hash__(self) -> int:
        return hash((self.n, self.triples))

    def __len__(self) -> int:
        return len(self.triples)

    def __repr__(self) -> str:
        return f"TripleSystem(n={self.n}, triples={len(self.triples)})"

    @property
    def points(self) -> range:
        return range(1, self.n + 1)

    def mul(self, i: int, j: int) -> int:
        return self.third[i][j]

    def triples_through(self, i: int) -> list[tuple[int, int, int]]:
        return sorted(t for t in self.triples if i in t)

    def incidence_vectors(self) -> list[int]:
        return [(1 << (a - 1)) | (1 << (b - 1)) | (1 << (c - 1)) for a, b, c in self.triples]

    def closure(self, points: Iterable[int]) -> frozenset[int]:
        """Smallest subsystem containing ``points``."""
        third = self.third
        dom = list(dict.fromkeys(points))
        seen = set(dom)
        k = 0
        while k < len(dom):
            x = dom[k]
            tx = third[x]
            for j in range(k):
                z = tx[dom[j]]
                if z not in seen:
                    seen.add(z)
                    dom.append(z)
            k += 1
        return frozenset(seen)

    @cached_property
    def nu(self) -> tuple[int, ...]:
        """Pasch counts per point; entry 0 is unused."""
        return (0, *(pasch_count_at(self, i) for i in self.points))


@dataclass(frozen=True)
class SteinerLoop:
    """Loop on {0} u {1..n}: i*j is the third point, i*i = 0, 0 is the identity."""

    n: int
    table: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, j: int) -> int:
        return self.table[i][j]

    def is_commutative(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.n + 1) for j in range(self.n + 1))


def sts_of_code(code: BinaryCode) -> TripleSystem:
    """Triples are the supports of the weight-3 codewords."""
    if 0 not in code:
        raise InvalidInput("the code must contain the zero word")
    try:
        return TripleSystem(code.n, (support(w) for w in code.weight3_words()))
    except CorruptDesign as exc:
        raise CorruptCode(f"weight-3 words do not form a Steiner system: {exc}") from exc


def loop_of(ts: TripleSystem) -> SteinerLoop:
    n = ts.n
    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i == 0:
                row.append(j)
            elif j == 0:
                row.append(i)
            elif i == j:
                row.append(0)
            else:
                row.append(ts.third[i][j])
        rows.append(tuple(row))
    return SteinerLoop(n, tuple(rows))


def quasigroup_mul(ts: TripleSystem, i: int, j: int) -> int:
    if not (1 <= i <= ts.n and 1 <= j <= ts.n):
        raise InvalidInput(f"points must lie in 1..{ts.n}")
    k = ts.third[i][j]
    if not k:
        raise CorruptDesign(f"pair {{{i}, {j}}} is not covered")
    return k


def _pasch_completions(ts: TripleSystem, i: int):
    """Yield each Pasch incident to ``i`` once, as its four triples.

    A Pasch through ``i`` holds exactly two triples on ``i``: (i, j, k) and
    (i, a, b). The other two are fixed by a matching of {j, k} with {a, b}:
    c = j.a must satisfy c.k = b (and symmetrically with a, b swapped).
    """
    third = ts.third
    lines = [tuple(p for p in t if p != i) for t in ts.triples if i in t]
    for (j, k), (a, b) in itertools.combinations(lines, 2):
        for x, y in ((a, b), (b, a)):
            c = third[j][x]
            if third[c][k] == y:
                yield (i, j, k), (i, x, y), (c, j, x), (c, k, y)


def pasch_count_at(ts: TripleSystem, i: int) -> int:
    return sum(1 for _ in _pasch_completions(ts, i))


def pasch_configurations(ts: TripleSystem) -> frozenset[frozenset[tuple[int, ...]]]:
    """All Pasch configurations, each a set of four sorted triples."""
    out = set()
    for i in ts.points:
        for conf in _pasch_completions(ts, i):
            out.add(frozenset(tuple(sorted(t)) for t in conf))
    return frozenset(out)


def nu_max(n: int) -> int:
    return (n - 1) * (n - 3) // 4


def lin_nu(ts: TripleSystem) -> frozenset[int]:
    top = nu_max(ts.n)
    return frozenset(i for i in ts.points if ts.nu[i] == top)


def check_nu_identities(ts: TripleSystem, l: int) -> tuple[bool, bool, bool]:
    """(l is nu-linear, (l.s).(l.s') = s.s', l.(s.s') = (l.s).s') over distinct s, s' != l.

    The third identity skips pairs with s.s' = l: there l.(s.s') = l.l = l
    while (l.s).s' = s'.s' = s', so it would fail in every system. In the
    Steiner loop both sides are 0 for those pairs.
    """
    q = ts.third
    others = [s for s in ts.points if s != l]
    ql = q[l]
    swap = all(q[ql[s]][ql[t]] == q[s][t] for s, t in itertools.permutations(others, 2))
    assoc = all(ql[q[s][t]] == q[ql[s]][t] for s, t in itertools.permutations(others, 2) if q[s][t] != l)
    return ts.nu[l] == nu_max(ts.n), swap, assoc


def span_dimension(ts: TripleSystem) -> int:
    return gf2.rank(ts.incidence_vectors())


def is_projective(ts: TripleSystem) -> bool:
    """Whether the span of the triples is a Hamming code of length n."""
    n = ts.n
    if (n + 1) & n:
        return False
    m = (n + 1).bit_length() - 1
    vecs = ts.incidence_vectors()
    if gf2.rank(vecs) != n - m:
        return False
    # a linear [n, n - m] code is perfect iff its check columns are distinct and nonzero
    checks = gf2.orthogonal_basis(vecs, n)
    cols = {sum(((h >> i) & 1) << k for k, h in enumerate(checks)) for i in range(n)}
    return len(cols) == n and 0 not in cols


def subdesign(ts: TripleSystem, points: Iterable[int]) -> TripleSystem:
    """Restriction to ``points``, relabelled 1..|points| in increasing order."""
    pts = sorted(set(points))
    if any(not 1 <= p <= ts.n for p in pts):
        raise InvalidInput("points outside the system")
    if not pts:
        raise NotClosed("empty point set")
    relabel = {p: k for k, p in enumerate(pts, 1)}
    inside = [tuple(relabel[p] for p in t) for t in ts.triples if all(p in relabel for p in t)]
    try:
        return TripleSystem(len(pts), inside)
    except CorruptDesign as exc:
        raise NotClosed(f"restriction to {pts} is not a Steiner system") from exc


def sts_automorphisms(
    ts: TripleSystem,
    setwise_fixed: Iterable[int] | None = None,
    budget: int | None = None,
) -> PermGroup:
    """Automorphism group, optionally restricted to the setwise stabilizer of a point set."""
    from .autsearch import AutomorphismSearch

    colors = None
    if setwise_fixed is not None:
        fixed = set(setwise_fixed)
        colors = [0] + [int(i in fixed) for i in ts.points]
    return AutomorphismSearch(ts, colors=colors, budget=budget).group()
