"""Backtrack search for automorphisms of a Steiner triple system.

An automorphism is fixed by the images of a *base*: points b_1, b_2, ...
where each b_k lies outside the subsystem generated by the earlier ones and
the last subsystem is everything. Mapping b_k extends the partial map to the
whole generated subsystem through x.y -> phi(x).phi(y); any clash prunes the
branch at once.

The group itself is built level by level from the bottom of the base. At
level k the orbit of b_k under the pointwise stabilizer of b_1..b_{k-1} is
grown by searching for one representative per candidate image not already
reached; a candidate found unreachable rules out its whole orbit under the
generators known so far. The order is the product of the orbit lengths.

Point colours (for instance a setwise-fixed set, combined with the Pasch
count at each point) must be preserved. An optional ``accept`` predicate
restricts the result to a subgroup, such as the symmetries of a code.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterator, Sequence
from math import prod

from .design import TripleSystem
from .errors import ResourceLimit
from .perm import Permutation, PermGroup


class _Partial:
    __slots__ = ("phi", "inv", "dom")

    def __init__(self, phi: list[int], inv: list[int], dom: list[int]):
        self.phi = phi
        self.inv = inv
        self.dom = dom


class AutomorphismSearch:
    def __init__(
        self,
        ts: TripleSystem,
        colors: Sequence[Hashable] | None = None,
        accept: Callable[[Permutation], bool] | None = None,
        budget: int | None = None,
        use_nu: bool = True,
    ):
        n = ts.n
        self.ts = ts
        self.accept = accept
        self.budget = budget
        self.nodes = 0
        base_col = list(colors) if colors is not None else [0] * (n + 1)
        if len(base_col) != n + 1:
            raise ValueError("colors must have one entry per point plus a slot 0")
        if use_nu:
            nu = ts.nu
            col = [(base_col[i], nu[i]) for i in range(n + 1)]
        else:
            col = [(base_col[i],) for i in range(n + 1)]
        # interning colours as small ints keeps the inner loop cheap
        ids: dict[Hashable, int] = {}
        self.col = [ids.setdefault(c, len(ids)) for c in col]
        self.classes: dict[int, list[int]] = {}
        for i in range(1, n + 1):
            self.classes.setdefault(self.col[i], []).append(i)
        self.base = self._choose_base()

    def _choose_base(self) -> list[int]:
        ts = self.ts
        order = sorted(ts.points, key=lambda i: (len(self.classes[self.col[i]]), i))
        base: list[int] = []
        closed: frozenset[int] = frozenset()
        while len(closed) < ts.n:
            b = next(i for i in order if i not in closed)
            base.append(b)
            closed = ts.closure([*base])
        return base

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise ResourceLimit(f"automorphism search exceeded {self.budget} nodes")

    def _extend(self, st: _Partial, b: int, c: int) -> _Partial | None:
        """Add b -> c and close up; None on any inconsistency."""
        self._tick()
        col = self.col
        if col[b] != col[c] or st.inv[c] or st.phi[b]:
            return None
        third = self.ts.third
        phi = st.phi[:]
        inv = st.inv[:]
        dom = st.dom[:]
        phi[b] = c
        inv[c] = b
        k = len(dom)
        dom.append(b)
        while k < len(dom):
            x = dom[k]
            tx = third[x]
            tfx = third[phi[x]]
            for j in range(k):
                y = dom[j]
                z = tx[y]
                fz = tfx[phi[y]]
                pz = phi[z]
                if pz:
                    if pz != fz:
                        return None
                elif inv[fz] or col[z] != col[fz]:
                    return None
                else:
                    phi[z] = fz
                    inv[fz] = z
                    dom.append(z)
            k += 1
        return _Partial(phi, inv, dom)

    def _root(self) -> _Partial:
        n = self.ts.n
        return _Partial([0] * (n + 1), [0] * (n + 1), [])

    def _leaf(self, st: _Partial) -> Permutation | None:
        p = Permutation._raw(tuple(st.phi))
        if self.accept is None or self.accept(p):
            return p
        return None

    def _dfs(self, st: _Partial, level: int) -> Iterator[Permutation]:
        if level == len(self.base):
            p = self._leaf(st)
            if p is not None:
                yield p
            return
        b = self.base[level]
        for c in self.classes[self.col[b]]:
            nxt = self._extend(st, b, c)
            if nxt is not None:
                yield from self._dfs(nxt, level + 1)

    def all_automorphisms(self) -> Iterator[Permutation]:
        """Every automorphism (respecting colours and ``accept``), by plain backtracking."""
        return self._dfs(self._root(), 0)

    def group(self) -> PermGroup:
        base = self.base
        k = len(base)
        # identity partial maps on the subsystems generated by base prefixes
        fixed = [self._root()]
        for b in base[:-1]:
            st = self._extend(fixed[-1], b, b)
            assert st is not None
            fixed.append(st)
        gens_from: list[list[Permutation]] = [[] for _ in range(k)]
        orbit_sizes = [1] * k
        for level in range(k - 1, -1, -1):
            known = [g for lv in range(level, k) for g in gens_from[lv]]
            b = base[level]
            orbit = _orbit(b, known)
            ruled_out: set[int] = set()
            for c in self.classes[self.col[b]]:
                if c in orbit or c in ruled_out:
                    continue
                start = self._extend(fixed[level], b, c)
                found = None
                if start is not None:
                    found = next(self._dfs(start, level + 1), None)
                if found is None:
                    ruled_out |= _orbit(c, known)
                else:
                    gens_from[level].append(found)
                    known.append(found)
                    orbit = _orbit(b, known)
            orbit_sizes[level] = len(orbit)
        gens = [g for lv in gens_from for g in lv]
        grp = PermGroup(self.ts.n, gens, order=prod(orbit_sizes))
        grp.base = tuple(base)
        grp.orbit_sizes = tuple(orbit_sizes)
        return grp


def _orbit(point: int, gens: Sequence[Permutation]) -> set[int]:
    seen = {point}
    stack = [point]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g.img[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def automorphism_group(
    ts: TripleSystem,
    colors: Sequence[Hashable] | None = None,
    accept: Callable[[Permutation], bool] | None = None,
    budget: int | None = None,
) -> PermGroup:
    return AutomorphismSearch(ts, colors=colors, accept=accept, budget=budget).group()


def all_automorphisms(
    ts: TripleSystem,
    colors: Sequence[Hashable] | None = None,
    accept: Callable[[Permutation], bool] | None = None,
    budget: int | None = None,
) -> Iterator[Permutation]:
    return AutomorphismSearch(ts, colors=colors, accept=accept, budget=budget).all_automorphisms()
