import itertools

import pytest

from perfectcodes import MollardCode, hamming_code, nonlinear_lambda, sts_of_code, vasilev
from perfectcodes.design import TripleSystem
from perfectcodes.perm import Permutation

# seed 2 gives a nonprojective triple system; seed 1 does not
NONPROJECTIVE_SEED = 2


@pytest.fixture(scope="session")
def h3():
    return hamming_code(2)


@pytest.fixture(scope="session")
def h7():
    return hamming_code(3)


@pytest.fixture(scope="session")
def h15():
    return hamming_code(4)


@pytest.fixture(scope="session")
def v15(h7):
    return vasilev(h7, nonlinear_lambda(h7, NONPROJECTIVE_SEED))


@pytest.fixture(scope="session")
def fano(h7):
    return sts_of_code(h7)


@pytest.fixture(scope="session")
def pg15(h15):
    return sts_of_code(h15)


@pytest.fixture(scope="session")
def sts15(v15):
    return sts_of_code(v15)


@pytest.fixture(scope="session")
def trivial3():
    return TripleSystem(3, [(1, 2, 3)])


@pytest.fixture(scope="session")
def m15(h3):
    return MollardCode(h3, h3)


@pytest.fixture(scope="session")
def m63(h3, v15):
    return MollardCode(h3, v15)


# independent oracles


def brute_symmetries(words, n):
    """Every permutation of 1..n mapping the word set onto itself (n <= 8)."""
    ws = frozenset(words)
    out = []
    for img in itertools.permutations(range(1, n + 1)):
        p = Permutation(img)
        if all(p.apply_word(w) in ws for w in ws):
            out.append(p)
    return out


def brute_kernel(words):
    ws = frozenset(words)
    return {x for x in ws if all(x ^ c in ws for c in ws)}


def brute_triples(words):
    return {tuple(i + 1 for i in range(w.bit_length()) if w >> i & 1) for w in words if w.bit_count() == 3}


def naive_pasch_count(ts):
    """Scan all 4-subsets of triples for the six-point, two-per-point shape."""
    nu = [0] * (ts.n + 1)
    for quad in itertools.combinations(sorted(ts.triples), 4):
        pts = [p for t in quad for p in t]
        if len(set(pts)) == 6 and all(pts.count(p) == 2 for p in set(pts)):
            for p in set(pts):
                nu[p] += 1
    return nu


def cell_bit(m, r, s):
    return 1 << (r * (m + 1) + s - 1)


def parities(t, m, z):
    """Row parities (rows 1..t, column 0 included) and column parities (columns 1..m, row 0 included)."""
    x = sum(1 << (r - 1) for r in range(1, t + 1)
            if sum(bool(z & cell_bit(m, r, s)) for s in range(m + 1)) % 2)
    y = sum(1 << (s - 1) for s in range(1, m + 1)
            if sum(bool(z & cell_bit(m, r, s)) for r in range(t + 1)) % 2)
    return x, y


def oracle_member(C, D, z):
    x, y = parities(C.n, D.n, z)
    return x in C and y in D


def mu_by_scan(C, D):
    """mu at every Mollard coordinate by testing all weight-3 vectors of length tm + t + m."""
    t, m = C.n, D.n
    n = t * m + t + m
    kC, kD = brute_kernel(C.words()), brute_kernel(D.words())
    counts = [0] * (n + 1)
    for a, b, c in itertools.combinations(range(n), 3):
        x, y = parities(t, m, (1 << a) | (1 << b) | (1 << c))
        if x in kC and y in kD:
            for p in (a, b, c):
                counts[p + 1] += 1
    return counts
