"""mu-invariants of coordinates: how many weight-3 kernel words pass through each.

A coordinate is mu-linear when it lies in the largest possible number,
(n - 1) / 2, of weight-3 words of the kernel.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .bitcode import BinaryCode, ExplicitCode, LinearCode, is_perfect, support
from .design import lin_nu, sts_of_code
from .errors import ResourceLimit, TheoryViolation


@dataclass(frozen=True)
class MuProfile:
    n: int
    values: tuple[int, ...]  # slot 0 unused
    lin_mu: frozenset[int]

    @property
    def threshold(self) -> int:
        return (self.n - 1) // 2

    def to_json(self) -> dict:
        return {
            "mu": {str(i): self.values[i] for i in range(1, self.n + 1)},
            "lin_mu": sorted(self.lin_mu),
            "threshold": self.threshold,
        }


def kernel_triples(code: BinaryCode) -> list[int]:
    """Weight-3 words of the code that are also kernel words."""
    return [w for w in code.weight3_words() if code.kernel_contains(w)]


def mu_profile(code: BinaryCode) -> MuProfile:
    cached = code.__dict__.get("_mu_profile")
    if cached is not None:
        return cached
    counts = [0] * (code.n + 1)
    for w in kernel_triples(code):
        for i in support(w):
            counts[i] += 1
    top = (code.n - 1) // 2
    prof = MuProfile(code.n, tuple(counts), frozenset(i for i in range(1, code.n + 1) if counts[i] == top))
    code.__dict__["_mu_profile"] = prof
    return prof


def mu(code: BinaryCode, i: int) -> int:
    return mu_profile(code).values[i]


def lin_mu(code: BinaryCode) -> frozenset[int]:
    return mu_profile(code).lin_mu


def check_linmu_subset_linnu(code: BinaryCode) -> bool:
    return lin_mu(code) <= lin_nu(sts_of_code(code))


def subcode_on(code: BinaryCode, coords: Iterable[int]) -> ExplicitCode | None:
    """Codewords supported inside ``coords``, restricted and relabelled 1..k.

    Returns None when ``coords`` is empty (there is no length-0 code).
    """
    pts = sorted(set(coords))
    if not pts:
        return None
    k = len(pts)
    if k <= 20:
        # every vector supported on pts, tested for membership
        found = []
        for sub in range(1 << k):
            w = sum(1 << (pts[j] - 1) for j in range(k) if (sub >> j) & 1)
            if w in code:
                found.append(sub)
    elif code.enumerable:
        allowed = sum(1 << (p - 1) for p in pts)
        pos = {p: j for j, p in enumerate(pts)}
        found = [
            sum(1 << pos[i] for i in support(w))
            for w in code.words()
            if not w & ~allowed
        ]
    else:
        raise ResourceLimit(f"cannot restrict {code!r} to {k} coordinates")
    return ExplicitCode(k, found)


def hamming_subcode_on_linmu(code: BinaryCode) -> LinearCode | None:
    """Span of the weight-3 kernel words inside Lin_mu, on those coordinates."""
    pts = sorted(lin_mu(code))
    if not pts:
        return None
    inside = sum(1 << (p - 1) for p in pts)
    pos = {p: j for j, p in enumerate(pts)}
    gens = [
        sum(1 << pos[i] for i in support(w))
        for w in kernel_triples(code)
        if not w & ~inside
    ]
    return LinearCode(len(pts), gens)


def check_hamming_on_linmu(code: BinaryCode) -> bool:
    """Whether the weight-3 kernel words on Lin_mu span a linear perfect code there.

    Also checks that this span lies in the kernel and, when the restriction
    can be computed, equals the full subcode of the code on Lin_mu.
    """
    L = sorted(lin_mu(code))
    k = len(L)
    if (k + 1) & k:
        raise TheoryViolation(f"|Lin_mu| + 1 = {k + 1} is not a power of two")
    sub = hamming_subcode_on_linmu(code)
    if sub is None:
        return True
    if not is_perfect(sub):
        return False
    # lifted basis words must be kernel words of the full code
    for b in sub.basis:
        w = sum(1 << (L[j - 1] - 1) for j in support(b))
        if not code.kernel_contains(w):
            return False
    try:
        restricted = subcode_on(code, L)
    except ResourceLimit:
        return True
    return restricted is not None and restricted.size == sub.size and all(w in sub for w in restricted.words())


def hamming_rank(n: int) -> int:
    """Dimension of a Hamming code of length n."""
    return n - (n + 1).bit_length() + 1
