"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION <k> PASS|FAIL|SKIP`` line with the
measured values and wall time, then asserts. Run on its own with

    pytest tests/test_acceptance.py -v -s
"""

import time

import pytest

from perfectcodes.bitcode import ExplicitCode, dual, hamming_code, is_perfect, kernel, rank
from perfectcodes.design import (
    check_nu_identities,
    is_projective,
    lin_nu,
    loop_of,
    span_dimension,
    sts_automorphisms,
    sts_of_code,
    subdesign,
)
from perfectcodes.fundpart import fundamental_partition, heden_loop, is_elementary_abelian_table, respects_partition
from perfectcodes.linearity import check_hamming_on_linmu, check_linmu_subset_linnu, lin_mu, mu_profile
from perfectcodes.mollard import GridCoords, MollardCode, decompose, mollard_dual, mollard_mu, mollard_sts
from perfectcodes.perm import PermGroup, group_closure
from perfectcodes.symmetry import (
    aut_group,
    dub1,
    dub2,
    is_automorphism,
    is_symmetry,
    ort,
    ort_sts,
    row_shape_ok,
    stab_setwise,
    sym_group,
    t_blocks,
)
from perfectcodes import gf2

from conftest import brute_kernel, brute_symmetries, brute_triples, mu_by_scan, oracle_member


def verdict(capsys, k, ok, seconds, limit, detail):
    status = "PASS" if ok and seconds < limit else "FAIL"
    with capsys.disabled():
        print(f"\nCRITERION {k} {status} ({seconds:.1f}s, limit {limit:g}s): {detail}")
    assert ok, detail
    assert seconds < limit, f"took {seconds:.1f}s, limit {limit}s"


def test_criterion_1_hamming7_symmetry_group(capsys):
    t0 = time.perf_counter()
    h7 = hamming_code(3)
    scan = brute_symmetries(h7.words(), 7)
    search = sym_group(h7)
    formula = 7 * 6 * 4
    ok = len(scan) == search.order == formula and set(scan) == set(search.elements())
    verdict(capsys, 1, ok, time.perf_counter() - t0, 5,
            f"S7 scan {len(scan)}, backtracking {search.order}, n(n-1)(n-3) = {formula}")


def test_criterion_2_projective_sts15_automorphisms(capsys):
    t0 = time.perf_counter()
    pg = sts_of_code(hamming_code(4))
    G = sts_automorphisms(pg)
    formula = 15 * 14 * 12 * 8
    ok = is_projective(pg) and G.order == formula and all(is_automorphism(pg, g) for g in G.generators)
    verdict(capsys, 2, ok, time.perf_counter() - t0, 60, f"|Aut| = {G.order}, 15*14*12*8 = {formula}")


def test_criterion_3_smallest_mollard_code(capsys):
    t0 = time.perf_counter()
    h3 = hamming_code(2)
    M = MollardCode(h3, h3)
    words = frozenset(M.words())
    brute = frozenset(z for z in range(1 << 15) if oracle_member(h3, h3, z))
    rk = rank(ExplicitCode(15, words))
    kd = len(brute_kernel(words)).bit_length() - 1
    tm = 9
    printed = rank(h3) + rank(h3)
    ok = (
        is_perfect(M)
        and len(words) == 2**11
        and words == brute
        and rk == rank(h3) + rank(h3) + tm == 11
        and kd == len(kernel(h3).basis) * 2 + tm == 11
    )
    verdict(capsys, 3, ok, time.perf_counter() - t0, 10,
            f"{len(words)} words, brute-force set equal {words == brute}, rank {rk} = 1+1+9, kernel dim {kd} = 1+1+9; "
            f"rank formula without tm gives {printed} (documented as failing)")
    assert printed != rk


def test_criterion_4_mu_formulas(capsys):
    t0 = time.perf_counter()
    h3 = hamming_code(2)
    M15 = MollardCode(h3, h3)
    scan15 = mu_by_scan(h3, h3)
    small = all(scan15[i] == mollard_mu(M15, M15.grid.cell(i)) == 7 for i in range(1, 16))

    from conftest import NONPROJECTIVE_SEED
    from perfectcodes.bitcode import nonlinear_lambda, vasilev

    h7 = hamming_code(3)
    v15 = vasilev(h7, nonlinear_lambda(h7, NONPROJECTIVE_SEED))
    M63 = MollardCode(h3, v15)
    scan63 = mu_by_scan(h3, v15)
    formula = [mollard_mu(M63, M63.grid.cell(i)) for i in range(1, 64)]
    big = scan63[1:] == formula and rank(v15) > 11
    verdict(capsys, 4, small and big, time.perf_counter() - t0, 60,
            f"n=15 all 7: {small}; n=63 formula equals direct count at 63 coordinates: {big}, "
            f"values {sorted(set(formula))}")


def test_criterion_5_small_stabilizer_factorization(capsys):
    t0 = time.perf_counter()
    h3 = hamming_code(2)
    M = MollardCode(h3, h3)
    g = M.grid
    C1 = [g.index(r, 0) for r in range(1, 4)]
    D2 = [g.index(0, s) for s in range(1, 4)]
    words = frozenset(M.words())

    # exhaustive stabilizer: every automorphism of the order-15 triple system, filtered by the code
    aut = sts_automorphisms(M.sts)
    pts = frozenset(D2)
    G_set = {x for x in aut.elements() if x.apply_set(pts) == pts and all(x.apply_word(z) in words for z in words)}

    symC = sym_group(h3)
    symD = sym_group(h3)
    d1 = {dub1(g, p) for p in symC.elements()}
    d2 = {dub2(g, p) for p in symD.elements()}
    orts = [ort(M, l, u) for l in lin_mu(h3) for u in dual(h3).words()]
    O = group_closure(orts, degree=15)
    gen = group_closure([*d1, *orts, *d2], degree=15)
    equal = G_set == set(gen.elements())

    c1, d2pts = frozenset(C1), frozenset(D2)
    both = {x for x in G_set if x.apply_set(c1) == c1}
    lemma6 = both == {a * b for a in d1 for b in d2}
    fix_c1 = {x for x in G_set if all(x(i) == i for i in C1)}
    fix_d2 = {x for x in G_set if all(x(i) == i for i in D2)}
    pointwise = fix_c1 == d2 and fix_d2 == {a * o for a in d1 for o in O.elements()}

    T = {x for x in G_set if row_shape_ok(g, x)}
    elem_ab = all((x * x).is_identity() for x in T) and all(a * b == b * a for a in T for b in T)
    cap = (1 + len(lin_mu(h3))) ** (3 - rank(h3))
    bound = len(T) == cap == 16 and T == set(O.elements())

    ok = len(G_set) == 576 and equal and lemma6 and pointwise and elem_ab and bound
    verdict(capsys, 5, ok, time.perf_counter() - t0, 120,
            f"|G| = {len(G_set)}, equals generated group {equal}, C1/D2 setwise intersection = Dub1 x Dub2 "
            f"({len(both)}) {lemma6}, pointwise stabilizers {pointwise}, T elementary abelian {elem_ab}, "
            f"|T| = {len(T)} of bound {cap}")


def test_criterion_6_design_stabilizer_nonprojective(capsys, sts15, trivial3):
    limit = 600
    t0 = time.perf_counter()
    S1, S2 = trivial3, sts15
    g = GridCoords(3, 15)
    S = mollard_sts(S1, S2)
    D2 = [g.index(0, s) for s in range(1, 16)]
    G = aut_group(S, [D2])
    aut1, aut2 = aut_group(S1), aut_group(S2)
    perp = gf2.span_basis(gf2.orthogonal_basis(S1.incidence_vectors(), 3))
    orts = [ort_sts(S1, S2, l, u) for l in sorted(lin_nu(S2)) for u in perp]
    gens = [*(dub1(g, p) for p in aut1.generators), *orts, *(dub2(g, p) for p in aut2.generators)]
    H = PermGroup(g.n, gens)
    seconds = time.perf_counter() - t0
    if seconds > limit:
        with capsys.disabled():
            print(f"\nCRITERION 6 SKIP: search took {seconds:.0f}s, over the {limit}s budget")
        pytest.skip("over budget")
    contained = all(x in G for x in H.generators) and all(x in H for x in G.generators)
    ok = not is_projective(S2) and G.order == H.order and contained
    verdict(capsys, 6, ok, seconds, limit,
            f"|Stab| = {G.order}, generated {H.order} = {aut1.order}*{PermGroup(g.n, orts).order}*{aut2.order}, "
            f"containment both ways {contained}")


def test_criterion_7_property_suites(capsys, h7, h15, v15, fano, pg15, sts15, m63):
    t0 = time.perf_counter()
    results = {}
    h3 = hamming_code(2)
    M15 = MollardCode(h3, h3)
    words15 = frozenset(M15.words())

    # containments for every computed symmetry
    def preserved(code, elems):
        ker = set(kernel(code).words())
        dl = dual(code)
        ts = sts_of_code(code)
        return all(
            all(x.apply_word(k) in ker for k in ker) and all(x.apply_word(u) in dl for u in dl.basis)
            and is_automorphism(ts, x)
            for x in elems
        )
    symH7 = list(sym_group(h7).elements())
    symV = list(sym_group(v15).elements())
    symM = list(stab_setwise(M15, None).elements())
    results["kernel, dual and triples preserved"] = (
        preserved(h7, symH7) and preserved(v15, symV) and preserved(ExplicitCode(15, words15), symM)
    )

    results["decomposition round trip on all 2^11 words"] = all(
        M15.recompose(*decompose(M15, z)) == z for z in words15
    )
    results["triple partition equals weight-3 words"] = (
        mollard_sts(sts_of_code(h3), sts_of_code(h3)).triples == frozenset(brute_triples(words15))
    )
    results["dual equality"] = mollard_dual(h3, h3) == dual(ExplicitCode(15, words15))

    symH15 = sym_group(h15)
    fp7, fp15 = fundamental_partition(h7), fundamental_partition(h15)
    results["partition respected by 168 + 20160 symmetries"] = (
        len(symH7) == 168 and symH15.order == 20160
        and all(respects_partition(fp7, x) for x in symH7)
        and all(respects_partition(fp15, x) for x in symH15.elements())
    )
    results["class tables elementary abelian"] = all(
        is_elementary_abelian_table(heden_loop(fundamental_partition(c), loop_of(sts_of_code(c))))
        for c in (h3, h7, h15, v15, ExplicitCode(15, words15))
    )
    results["triple-equivalence at every point"] = all(
        len(set(check_nu_identities(ts, l))) == 1 for ts in (fano, pg15, sts15) for l in ts.points
    )
    L = lin_mu(v15)
    results["linearity theorem on nonlinear length 15"] = (
        check_linmu_subset_linnu(v15)
        and is_projective(subdesign(sts15, lin_nu(sts15)))
        and check_hamming_on_linmu(v15)
        and L < frozenset(range(1, 16))
    )
    prof = mu_profile(m63).values
    g = m63.grid
    LD = lin_mu(m63.D) | {0}
    results["mu(r,s) = mu(r,0) exactly on linear columns at n=63"] = all(
        (prof[g.index(r, s)] == prof[g.index(r, 0)]) == (s in LD)
        for r in range(1, 4) for s in range(16)
    )
    failed = [k for k, v in results.items() if not v]
    verdict(capsys, 7, not failed, time.perf_counter() - t0, 300,
            f"{len(results) - len(failed)}/{len(results)} suites hold" + (f"; failed: {failed}" if failed else ""))
