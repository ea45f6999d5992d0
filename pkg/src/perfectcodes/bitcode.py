"""Binary words and codes.

Codewords are Python ints: bit ``i - 1`` is coordinate ``i`` (coordinates are
1-based, as in the usual notation for codes of length n). :class:`BitWord`
wraps one such int together with its length for callers who want a typed
value; the code classes work on the raw ints for speed.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import cached_property

from . import gf2
from .errors import InvalidInput, InvalidParameter, ResourceLimit

# explicit enumeration ceiling: codes larger than this are structured only
MAX_EXPLICIT = 1 << 20


@dataclass(frozen=True)
class BitWord:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 1:
            raise InvalidInput("word length must be positive")
        if self.bits < 0 or self.bits >> self.length:
            raise InvalidInput("bits do not fit the word length")

    @classmethod
    def from_str(cls, s: str) -> BitWord:
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise InvalidInput(f"not a 0/1 string: {s!r}")
        return cls(len(s), sum(1 << i for i, ch in enumerate(s) if ch == "1"))

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> BitWord:
        return cls(length, support_to_int(support))

    def __add__(self, other: BitWord) -> BitWord:
        if other.length != self.length:
            raise InvalidInput("length mismatch")
        return BitWord(self.length, self.bits ^ other.bits)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return (self.bits >> (i - 1)) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return support(self.bits)

    def __str__(self) -> str:
        return to_str(self.bits, self.length)


def support(v: int) -> tuple[int, ...]:
    """1-based coordinates of the set bits."""
    out = []
    while v:
        low = v & -v
        out.append(low.bit_length())
        v ^= low
    return tuple(out)


def support_to_int(coords: Iterable[int]) -> int:
    v = 0
    for i in coords:
        v |= 1 << (i - 1)
    return v


def to_str(v: int, n: int) -> str:
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))


def from_str(s: str) -> int:
    return BitWord.from_str(s).bits


def _is_pow2(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


class BinaryCode:
    """A binary code of length ``n``.

    Subclasses provide membership and whichever structured enumerators they
    can support. Words are ints. All instances are treated as immutable.
    """

    n: int

    def __contains__(self, word: int) -> bool:
        raise NotImplementedError

    @property
    def size(self) -> int:
        raise NotImplementedError

    @property
    def enumerable(self) -> bool:
        return self.size <= MAX_EXPLICIT

    def words(self) -> Iterator[int]:
        raise NotImplementedError

    def __iter__(self) -> Iterator[int]:
        return self.words()

    def __len__(self) -> int:
        return self.size

    def span_generators(self) -> Iterable[int]:
        """A family whose span equals the span of the code."""
        return self.words()

    @cached_property
    def span(self) -> gf2.Echelon:
        return gf2.Echelon(self.span_generators())

    @property
    def is_linear(self) -> bool:
        return 1 << len(self.span) == self.size

    def kernel_basis(self) -> list[int]:
        raise NotImplementedError

    @cached_property
    def _kernel_ech(self) -> gf2.Echelon:
        return gf2.Echelon(self.kernel_basis())

    def kernel_contains(self, x: int) -> bool:
        return x in self._kernel_ech and x in self

    def coset_reps(self) -> list[int]:
        """One representative per coset of the kernel inside the code."""
        raise NotImplementedError

    def weight3_words(self) -> list[int]:
        raise NotImplementedError

    def min_distance(self) -> int:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, size={self.size})"


class ExplicitCode(BinaryCode):
    """A code given by its full word set."""

    def __init__(self, n: int, words: Iterable[int]):
        if n < 1:
            raise InvalidInput("code length must be positive")
        ws = frozenset(words)
        if not ws:
            raise InvalidInput("empty code")
        if len(ws) > MAX_EXPLICIT:
            raise ResourceLimit(f"{len(ws)} words exceeds the explicit limit")
        for w in ws:
            if w < 0 or w >> n:
                raise InvalidInput(f"word {w:#x} does not fit length {n}")
        self.n = n
        self._words = ws

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> ExplicitCode:
        ws = [BitWord.from_str(s) for s in strings]
        if not ws:
            raise InvalidInput("empty code")
        n = ws[0].length
        if any(w.length != n for w in ws):
            raise InvalidInput("words of different lengths")
        return cls(n, (w.bits for w in ws))

    def __contains__(self, word: int) -> bool:
        return word in self._words

    @property
    def size(self) -> int:
        return len(self._words)

    def words(self) -> Iterator[int]:
        return iter(sorted(self._words))

    @property
    def word_set(self) -> frozenset[int]:
        return self._words

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.n == other.n and self.size == other.size and all(w in other for w in self._words)

    def __hash__(self) -> int:
        return hash((self.n, self._words))

    @cached_property
    def _kernel(self) -> tuple[list[int], gf2.Echelon]:
        # Definitional test x + C = C. Kernel is linear, so words already in
        # the span of the kernel found so far are skipped; words of a coset
        # already rejected are skipped too.
        ws = self._words
        ker = gf2.Echelon()
        rejected: set[int] = set()
        basis = []
        for x in sorted(ws):
            if x in ker:
                continue
            rep = ker.reduce(x)
            if rep in rejected:
                continue
            if all((x ^ c) in ws for c in ws):
                ker.add(x)
                basis.append(x)
                rejected = {ker.reduce(r) for r in rejected}
            else:
                rejected.add(rep)
        return gf2.span_basis(basis), ker

    def kernel_basis(self) -> list[int]:
        return list(self._kernel[0])

    def kernel_contains(self, x: int) -> bool:
        return x in self._kernel[1] and x in self._words

    def coset_reps(self) -> list[int]:
        return list(self._coset_reps)

    @cached_property
    def _coset_reps(self) -> tuple[int, ...]:
        ker = self._kernel[1]
        reps: dict[int, int] = {}
        for w in sorted(self._words):
            reps.setdefault(ker.reduce(w), w)
        return tuple(sorted(reps.values()))

    def weight3_words(self) -> list[int]:
        return sorted(w for w in self._words if w.bit_count() == 3)

    def min_distance(self) -> int:
        if self.size < 2:
            raise InvalidInput("minimum distance of a singleton code is undefined")
        return self._dmin

    @cached_property
    def _dmin(self) -> int:
        # scan error patterns by weight; |C| * C(n, r) lookups per radius
        ws = self._words
        for r in range(1, self.n + 1):
            for pos in itertools.combinations(range(self.n), r):
                e = 0
                for p in pos:
                    e |= 1 << p
                if any((c ^ e) in ws for c in ws):
                    return r
        raise AssertionError("unreachable")


class LinearCode(BinaryCode):
    """A linear code given by a generating family."""

    def __init__(self, n: int, generators: Iterable[int]):
        if n < 1:
            raise InvalidInput("code length must be positive")
        gens = list(generators)
        for g in gens:
            if g < 0 or g >> n:
                raise InvalidInput(f"word {g:#x} does not fit length {n}")
        self.n = n
        self.span = gf2.Echelon(gens)
        self.basis = self.span.basis()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __contains__(self, word: int) -> bool:
        return 0 <= word and not word >> self.n and word in self.span

    @property
    def size(self) -> int:
        return 1 << len(self.basis)

    def words(self) -> Iterator[int]:
        if not self.enumerable:
            raise ResourceLimit(f"linear code of dimension {self.dimension} is too large to enumerate")
        return gf2.span_elements(self.basis)

    def span_generators(self) -> list[int]:
        return list(self.basis)

    @property
    def is_linear(self) -> bool:
        return True

    def kernel_basis(self) -> list[int]:
        return list(self.basis)

    def kernel_contains(self, x: int) -> bool:
        return x in self

    def coset_reps(self) -> list[int]:
        return [0]

    def weight3_words(self) -> list[int]:
        out = []
        for pos in itertools.combinations(range(self.n), 3):
            w = (1 << pos[0]) | (1 << pos[1]) | (1 << pos[2])
            if w in self.span:
                out.append(w)
        return sorted(out)

    def min_distance(self) -> int:
        if not self.basis:
            raise InvalidInput("minimum distance of a singleton code is undefined")
        if self.enumerable:
            return min(w.bit_count() for w in self.words() if w)
        for r in range(1, self.n + 1):
            for pos in itertools.combinations(range(self.n), r):
                if sum(1 << p for p in pos) in self.span:
                    return r
        raise AssertionError("unreachable")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinearCode):
            return self.n == other.n and self.basis == other.basis
        if isinstance(other, BinaryCode):
            return other.__eq__(self)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.basis)))


def explicit(code: BinaryCode) -> ExplicitCode:
    if isinstance(code, ExplicitCode):
        return code
    if not code.enumerable:
        raise ResourceLimit(f"{code!r} is too large to materialize")
    return ExplicitCode(code.n, code.words())


def is_perfect(code: BinaryCode) -> bool:
    """Whether every length-n vector is within distance 1 of exactly one word.

    Decided as |C| (n + 1) = 2^n together with minimum distance 3.
    """
    n = code.n
    if not _is_pow2(n + 1):
        return False
    if code.size * (n + 1) != 1 << n:
        return False
    if code.size == 1:
        # {0} of length 1: one ball covers the space, distance undefined
        return n == 1
    return code.min_distance() == 3


def hamming_code(m: int) -> LinearCode:
    """Hamming code of length 2^m - 1.

    Column ``i`` of the parity-check matrix is the binary expansion of ``i``.
    """
    if m < 2:
        raise InvalidParameter("Hamming codes need m >= 2")
    n = (1 << m) - 1
    checks = []
    for k in range(m):
        checks.append(sum(1 << (i - 1) for i in range(1, n + 1) if (i >> k) & 1))
    return LinearCode(n, gf2.orthogonal_basis(checks, n))


def rank(code: BinaryCode) -> int:
    if code.size == 0:
        raise InvalidInput("rank of an empty code")
    return len(code.span)


def kernel(code: BinaryCode) -> LinearCode:
    return LinearCode(code.n, code.kernel_basis())


def dual(code: BinaryCode) -> LinearCode:
    return LinearCode(code.n, gf2.orthogonal_basis(code.span.basis(), code.n))


def min_distance(code: BinaryCode) -> int:
    return code.min_distance()


def weight3_words(code: BinaryCode) -> list[int]:
    return code.weight3_words()


def vasilev(base: BinaryCode, lam: Callable[[int], int] | Mapping[int, int]) -> ExplicitCode:
    """Vasil'ev extension of a perfect code of length n to length 2n + 1.

    Words are ``(v + c | v | parity(v) + lam(c))`` for ``v`` in F_2^n and ``c``
    in ``base``; the first n coordinates carry ``v + c``, the next n carry
    ``v`` and the last one the check bit.
    """
    n = base.n
    if 0 not in base:
        raise InvalidParameter("base code must contain the zero word")
    cw = list(base.words())
    lookup = lam.get if isinstance(lam, Mapping) else lam
    lam_vals = {}
    for c in cw:
        b = lookup(c)
        if b not in (0, 1):
            raise InvalidParameter(f"lambda is undefined on codeword {to_str(c, n)}")
        lam_vals[c] = b
    if lam_vals[0] != 0:
        raise InvalidParameter("lambda(0) must be 0")
    words = []
    for v in range(1 << n):
        pv = gf2.parity(v)
        for c in cw:
            words.append((v ^ c) | (v << n) | ((pv ^ lam_vals[c]) << (2 * n)))
    return ExplicitCode(2 * n + 1, words)


def is_linear_map(base: BinaryCode, lam: Mapping[int, int]) -> bool:
    """Whether ``c -> lam(c)`` is GF(2)-linear on the span of ``base``.

    Equivalent to the graph {(c | lam(c))} spanning no more than the base.
    """
    n = base.n
    graph = gf2.rank(c | (lam[c] << n) for c in base.words())
    return graph == rank(base)


def nonlinear_lambda(base: BinaryCode, seed: int) -> dict[int, int]:
    """Seeded pseudo-random nonlinear bit map on ``base`` with lam(0) = 0."""
    rng = random.Random(seed)
    cw = list(base.words())
    if len(cw) < 4:
        raise InvalidParameter("every map on a code with fewer than 4 words is linear")
    while True:
        lam = {c: rng.getrandbits(1) for c in cw}
        lam[0] = 0
        if not is_linear_map(base, lam):
            return lam
