import itertools

import pytest

from perfectcodes.design import (
    TripleSystem,
    check_nu_identities,
    is_projective,
    lin_nu,
    loop_of,
    nu_max,
    pasch_configurations,
    pasch_count_at,
    quasigroup_mul,
    span_dimension,
    sts_automorphisms,
    sts_of_code,
    subdesign,
)
from perfectcodes.errors import CorruptDesign, InvalidInput, NotClosed
from perfectcodes.symmetry import is_automorphism

from conftest import naive_pasch_count


def test_steiner_property_is_enforced():
    with pytest.raises(CorruptDesign):
        TripleSystem(7, [(1, 2, 3), (1, 2, 4)])
    with pytest.raises(CorruptDesign):
        TripleSystem(7, [(1, 2, 3)])
    with pytest.raises(CorruptDesign):
        TripleSystem(3, [(1, 2, 5)])


def test_fano_counts(fano):
    assert len(fano) == 7
    assert all(len(fano.triples_through(i)) == 3 for i in fano.points)
    assert list(fano.nu[1:]) == naive_pasch_count(fano)[1:]
    assert all(fano.nu[i] == 6 == nu_max(7) for i in fano.points)
    assert len(pasch_configurations(fano)) == 7


def test_pg15_every_point_saturated(pg15):
    assert all(pg15.nu[i] == 42 for i in pg15.points)
    assert lin_nu(pg15) == frozenset(range(1, 16))
    assert len(pasch_configurations(pg15)) == 15 * 42 // 6


def test_nonprojective_sts15_pasch_against_scan(sts15):
    naive = naive_pasch_count(sts15)
    assert [sts15.nu[i] for i in sts15.points] == naive[1:]
    assert [pasch_count_at(sts15, i) for i in sts15.points] == naive[1:]
    assert sum(naive) == 6 * len(pasch_configurations(sts15))
    assert not is_projective(sts15)
    assert len(lin_nu(sts15)) < (15 - 1) / 2


def test_loop_table(fano, sts15):
    for ts in (fano, sts15):
        L = loop_of(ts)
        n = ts.n
        assert L.is_commutative()
        for i in range(n + 1):
            assert L(0, i) == i and L(i, i) == 0
            # each row is a permutation of 0..n
            assert sorted(L.table[i]) == list(range(n + 1))
            for j in range(n + 1):
                assert L(i, L(i, j)) == j


def test_quasigroup_mul(fano):
    a, b, c = sorted(fano.triples)[0]
    assert quasigroup_mul(fano, a, b) == c
    assert quasigroup_mul(fano, a, a) == a
    with pytest.raises(InvalidInput):
        quasigroup_mul(fano, 0, 1)


def test_projectivity(fano, pg15, trivial3):
    assert is_projective(fano) and is_projective(pg15) and is_projective(trivial3)
    assert span_dimension(pg15) == 11


def test_subdesign(pg15):
    a, b = 1, 2
    c = next(p for p in pg15.points if p not in (a, b, pg15.mul(a, b)))
    closed = pg15.closure([a, b, c])
    assert len(closed) == 7
    sub = subdesign(pg15, closed)
    assert sub.n == 7 and is_projective(sub)
    with pytest.raises(NotClosed):
        subdesign(pg15, [a, b, c])


@pytest.mark.parametrize("name,order", [("trivial3", 6), ("fano", 168), ("pg15", 20160)])
def test_automorphism_orders(request, name, order):
    ts = request.getfixturevalue(name)
    G = sts_automorphisms(ts)
    assert G.order == order
    assert all(is_automorphism(ts, g) for g in G.generators)


def test_fano_automorphisms_by_scan(fano):
    count = sum(
        1
        for img in itertools.permutations(range(1, 8))
        if all(tuple(sorted(img[p - 1] for p in t)) in fano.triples for t in fano.triples)
    )
    assert count == 168 == sts_automorphisms(fano).order


def test_nu_identities_agree(fano, pg15, trivial3, sts15):
    # the three ways of saying a point is linear give the same answer everywhere
    for ts in (fano, pg15, trivial3, sts15):
        for l in ts.points:
            a, b, c = check_nu_identities(ts, l)
            assert a == b == c


def test_sts15_single_linear_point(sts15):
    flags = {l: check_nu_identities(sts15, l)[0] for l in sts15.points}
    assert {l for l, f in flags.items() if f} == set(lin_nu(sts15))


def test_sts_of_code_needs_zero(h7):
    from perfectcodes.bitcode import ExplicitCode

    shifted = ExplicitCode(7, [w ^ 1 for w in h7.words()])
    with pytest.raises(InvalidInput):
        sts_of_code(shifted)
