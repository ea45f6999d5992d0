import pytest

from perfectcodes import gf2
from perfectcodes.bitcode import ExplicitCode, dual, from_str, is_perfect, rank
from perfectcodes.design import sts_of_code
from perfectcodes.errors import InvalidInput, InvalidParameter
from perfectcodes.fundpart import mollard_partition, mollard_partition_from_dual
from perfectcodes.linearity import mu_profile
from perfectcodes.mollard import (
    MollardCode,
    decompose,
    embed1,
    kernel_membership,
    mollard_dual,
    mollard_mu,
    mollard_mu_formula,
    mollard_sts,
    sts_families,
)

from conftest import brute_kernel, brute_triples, cell_bit, mu_by_scan, oracle_member


@pytest.fixture(scope="module")
def m15_words(m15):
    return frozenset(m15.words())


def test_m15_size_and_membership(h3, m15, m15_words):
    assert m15.n == 15 and m15.size == 2**11 == len(m15_words)
    brute = {z for z in range(1 << 15) if oracle_member(h3, h3, z)}
    assert brute == m15_words
    assert all((z in m15) == (z in m15_words) for z in range(1 << 15))


def test_m15_is_perfect_with_rank_and_kernel(m15, m15_words):
    assert is_perfect(m15)
    assert rank(m15) == 11
    assert len(brute_kernel(m15_words)) == 2**11
    assert len(m15.kernel_basis()) == 11


def test_embeddings(h3, m15):
    x = from_str("111")
    assert embed1(m15, x) == cell_bit(3, 1, 0) | cell_bit(3, 2, 0) | cell_bit(3, 3, 0)
    assert embed1(m15, 0) == 0
    with pytest.raises(InvalidInput):
        embed1(m15, from_str("100"))


def test_decompose_round_trip(m15, m15_words):
    e = cell_bit(3, 1, 1) | cell_bit(3, 0, 1) | cell_bit(3, 1, 0)
    assert decompose(m15, e) == (0, 0, frozenset({(1, 1)}))
    for z in m15_words:
        x, y, cells = decompose(m15, z)
        assert m15.recompose(x, y, cells) == z
    with pytest.raises(InvalidInput):
        decompose(m15, 1 << 4)


def test_triple_families(trivial3, m15, m15_words):
    fams = sts_families(trivial3, trivial3)
    assert len(fams["00"]) == 9
    assert sum(len(f) for f in fams.values()) == 35
    composed = mollard_sts(trivial3, trivial3)
    assert composed.triples == frozenset(brute_triples(m15_words))
    assert composed == sts_of_code(m15)


def test_fano_by_trivial_is_steiner(fano, trivial3):
    S = mollard_sts(fano, trivial3)
    assert S.n == 31 and len(S) == 31 * 30 // 6


def test_mollard_dual_matches_elimination(h3, m15, m15_words):
    direct = dual(ExplicitCode(15, m15_words))
    assert mollard_dual(h3, h3) == direct
    assert direct.dimension == 4
    for u in dual(h3).words():
        lifted = sum(cell_bit(3, r, s) for r in range(1, 4) if u >> (r - 1) & 1 for s in range(4))
        assert all(gf2.dot(lifted, z) == 0 for z in m15_words)


def test_kernel_dimension_formula(h7, v15):
    M = MollardCode(h7, v15)
    assert len(M.kernel_basis()) == len(h7.kernel_basis()) + len(v15.kernel_basis()) + 7 * 15


def test_kernel_membership_definitional_small(m15, m15_words):
    ker = brute_kernel(m15_words)
    assert all(kernel_membership(m15, z) == (z in ker) for z in m15_words)


def test_mu_formula_cases():
    assert mollard_mu_formula(1, 1, 3, 3, 1, 0) == 7
    assert mollard_mu_formula(1, 1, 3, 3, 1, 1) == 7
    assert mollard_mu_formula(0, 0, 3, 3, 2, 2) == 1
    with pytest.raises(InvalidInput):
        mollard_mu_formula(0, 0, 3, 3, 0, 0)


def test_mu_at_every_coordinate_m15(m15, m15_words):
    ker = brute_kernel(m15_words)
    for r in range(4):
        for s in range(4):
            if r == s == 0:
                continue
            i = r * 4 + s
            direct = sum(1 for w in ker if w.bit_count() == 3 and w >> (i - 1) & 1)
            assert direct == mollard_mu(m15, (r, s)) == 7


def test_mu_at_every_coordinate_m63(h3, v15, m63):
    counts = mu_by_scan(h3, v15)
    for i in range(1, 64):
        r, s = divmod(i, 16)
        assert counts[i] == mollard_mu(m63, (r, s)) == mu_profile(m63).values[i]


def test_partition_product(h3, v15, m15):
    fp = mollard_partition(h3, h3)
    assert fp.classes[0] == frozenset() and fp.num_classes == 16
    assert all(len(c) == 1 for j, c in fp.classes.items() if j)
    big = mollard_partition(h3, v15)
    assert big.num_classes == 2 ** ((3 - rank(h3)) + (15 - rank(v15)))
    assert big.same_as(mollard_partition_from_dual(h3, v15))


def test_rejects_non_perfect_component(h3):
    with pytest.raises(InvalidParameter):
        MollardCode(ExplicitCode(3, [0, 0b011]), h3)
