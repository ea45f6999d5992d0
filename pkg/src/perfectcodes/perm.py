"""Permutations of the points 1..n and groups generated by them.

Composition follows function notation: ``(p * q)(i) == p(q(i))``.
Group orders come from sympy's deterministic Schreier-Sims; the
breadth-first closure in :meth:`PermGroup.elements` is an independent route
and the two are cross-checked whenever both run.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property
from math import lcm

from sympy.combinatorics import Permutation as _SymPerm
from sympy.combinatorics import PermutationGroup as _SymGroup

from .errors import InvalidInput, ResourceLimit

DEFAULT_BOUND = 10**6


class Permutation:
    """Bijection of {1..n}, stored as an image tuple with a fixed slot 0."""

    __slots__ = ("img", "_hash")

    def __init__(self, images: Sequence[int]):
        img = (0, *images)
        n = len(img) - 1
        if sorted(img) != list(range(n + 1)):
            raise InvalidInput(f"not a permutation of 1..{n}: {list(images)}")
        self.img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> Permutation:
        p = object.__new__(cls)
        p.img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._raw(tuple(range(n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 1 <= a <= n:
                    raise InvalidInput(f"bad cycle entry {a}")
                seen.add(a)
            for a, b in zip(cyc, (*cyc[1:], cyc[0])):
                img[a] = b
        return cls._raw(tuple(img))

    @classmethod
    def from_map(cls, n: int, mapping: dict[int, int]) -> Permutation:
        """Permutation from a partial dict; unmentioned points are fixed."""
        img = list(range(n + 1))
        for a, b in mapping.items():
            img[a] = b
        return cls(img[1:])

    @property
    def degree(self) -> int:
        return len(self.img) - 1

    @property
    def images(self) -> tuple[int, ...]:
        return self.img[1:]

    def __call__(self, i: int) -> int:
        return self.img[i]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise InvalidInput("degree mismatch")
        a = self.img
        return Permutation._raw(tuple(a[j] for j in other.img))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.img)
        for i, j in enumerate(self.img):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.img))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.img == other.img

    def __hash__(self) -> int:
        return self._hash

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(1, len(self.img)):
            if i in seen or self.img[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.img[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.img[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(1, *(len(c) for c in self.cycles()))

    def support(self) -> list[int]:
        return [i for i in range(1, len(self.img)) if self.img[i] != i]

    def apply_word(self, w: int) -> int:
        """Move the bit at coordinate i to coordinate p(i)."""
        img = self.img
        out = 0
        while w:
            low = w & -w
            out |= 1 << (img[low.bit_length()] - 1)
            w ^= low
        return out

    def apply_set(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(self.img[i] for i in points)

    def apply_triple(self, triple: Sequence[int]) -> tuple[int, ...]:
        return tuple(sorted(self.img[i] for i in triple))

    def __repr__(self) -> str:
        cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation<{self.degree}>{cyc or '()'}"


def commute(p: Permutation, q: Permutation) -> bool:
    return p * q == q * p


class PermGroup:
    """Subgroup of S_n given by generators.

    ``order`` may be supplied by a caller that already knows it exactly (for
    example from a backtrack search that produced a base and strong
    generators); otherwise it is computed with a stabilizer chain.
    """

    def __init__(self, degree: int, generators: Iterable[Permutation], order: int | None = None):
        gens = []
        for g in generators:
            if g.degree != degree:
                raise InvalidInput(f"generator of degree {g.degree} in a group of degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._known_order = order
        self._elements: frozenset[Permutation] | None = None
        # filled in by searches that build a base and strong generators
        self.base: tuple[int, ...] | None = None
        self.orbit_sizes: tuple[int, ...] | None = None

    @cached_property
    def _sym(self) -> _SymGroup:
        n = self.degree + 1
        gens = [_SymPerm(list(g.img)) for g in self.generators] or [_SymPerm(list(range(n)))]
        return _SymGroup(gens)

    @cached_property
    def chain_order(self) -> int:
        """Order from the stabilizer chain, ignoring any supplied value."""
        return int(self._sym.order())

    @property
    def order(self) -> int:
        if self._known_order is not None:
            return self._known_order
        return self.chain_order

    def __len__(self) -> int:
        return self.order

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        if self._elements is not None:
            return p in self._elements
        return bool(self._sym.contains(_SymPerm(list(p.img))))

    def elements(self, bound: int = DEFAULT_BOUND) -> frozenset[Permutation]:
        """All elements, by breadth-first closure under the generators."""
        if self._elements is None:
            ident = Permutation.identity(self.degree)
            seen = {ident}
            queue = deque([ident])
            while queue:
                x = queue.popleft()
                for g in self.generators:
                    y = g * x
                    if y not in seen:
                        seen.add(y)
                        if len(seen) > bound:
                            raise ResourceLimit(f"group closure exceeds {bound} elements")
                        queue.append(y)
            self._elements = frozenset(seen)
        return self._elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements())

    def is_abelian(self) -> bool:
        gs = self.generators
        return all(commute(a, b) for i, a in enumerate(gs) for b in gs[i + 1 :])

    def is_elementary_abelian_2(self) -> bool:
        return self.is_abelian() and all((g * g).is_identity() for g in self.generators)

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        stack = [point]
        while stack:
            x = stack.pop()
            for g in self.generators:
                y = g.img[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        done: set[int] = set()
        out = []
        for i in range(1, self.degree + 1):
            if i not in done:
                o = self.orbit(i)
                done |= o
                out.append(o)
        return out

    def stabilizes_set(self, points: Iterable[int]) -> bool:
        pts = frozenset(points)
        return all(g.apply_set(pts) == pts for g in self.generators)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(g in other for g in self.generators)

    def equals(self, other: PermGroup) -> bool:
        """Equal orders plus one-sided generator containment."""
        return self.order == other.order and self.is_subgroup_of(other)

    def pointwise_stabilizer(self, points: Iterable[int]) -> PermGroup:
        stab = self._sym.pointwise_stabilizer(sorted(points))
        gens = [Permutation._raw(tuple(g.array_form)) for g in stab.generators]
        return PermGroup(self.degree, gens, order=int(stab.order()))

    def normalizes(self, other: PermGroup) -> bool:
        """Whether every generator of ``self`` conjugates ``other`` into itself."""
        return all(g * h * g.inverse() in other for g in self.generators for h in other.generators)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, gens={len(self.generators)}, order={self.order})"


def group_closure(gens: Sequence[Permutation], bound: int = DEFAULT_BOUND, degree: int | None = None) -> PermGroup:
    """Group generated by ``gens``; elements are enumerated when the order is at most ``bound``.

    The element count from closure must agree with the stabilizer-chain order.
    """
    if degree is None:
        if not gens:
            raise InvalidInput("degree needed for an empty generator list")
        degree = gens[0].degree
    g = PermGroup(degree, gens)
    if g.chain_order <= bound:
        els = g.elements(bound)
        if len(els) != g.chain_order:
            raise AssertionError(f"closure found {len(els)} elements, chain order {g.chain_order}")
    return g


def join(degree: int, *groups: PermGroup | Iterable[Permutation]) -> PermGroup:
    gens: list[Permutation] = []
    for grp in groups:
        gens.extend(grp.generators if isinstance(grp, PermGroup) else grp)
    return PermGroup(degree, gens)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [])
    gens = [Permutation.from_cycles(n, [(1, 2)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(1, n + 1))]))
    return PermGroup(n, gens)


def all_permutations(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for p in permutations(range(1, n + 1)):
        yield Permutation(p)
