"""Symmetries of codes and of Mollard codes/designs.

Symmetry groups are never found by scanning S_n: Sym(C) sits inside the
automorphism group of STS(C), so the triple-system backtracker is run with a
code-membership filter at the leaves.

Grid permutations act on Mollard coordinates (r, s) through the layout of
:class:`~perfectcodes.mollard.GridCoords`:

* ``dub1(pi)`` moves row r to row pi(r) (r >= 1) and fixes row 0;
* ``dub2(pi)`` moves column s to column pi(s) (s >= 1) and fixes column 0;
* ``ort(l, u)`` replaces s by s*l (Steiner loop product) inside every row
  r in supp(u) and fixes the other rows.
"""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Sequence

from . import gf2
from .autsearch import AutomorphismSearch
from .bitcode import BinaryCode, dual, support
from .design import SteinerLoop, TripleSystem, lin_nu, loop_of, sts_of_code
from .errors import InvalidInput, InvalidParameter
from .linearity import lin_mu
from .mollard import GridCoords, MollardCode
from .perm import Permutation, PermGroup


def code_sts(code: BinaryCode) -> TripleSystem:
    if isinstance(code, MollardCode):
        return code.sts
    return sts_of_code(code)


def is_symmetry(code: BinaryCode, perm: Permutation, exhaustive: bool = False) -> bool:
    """Whether permuting coordinates maps the code onto itself.

    The default test is exact for any code: perm maps a kernel basis into the
    kernel and one word of each kernel coset into the code. Since the image of
    a kernel coset is then a kernel coset inside the code, the image of the
    code is contained in (hence equal to) the code. ``exhaustive`` instead
    maps every codeword.
    """
    if perm.degree != code.n:
        raise InvalidInput(f"permutation of degree {perm.degree} on a code of length {code.n}")
    if exhaustive:
        return all(perm.apply_word(w) in code for w in code.words())
    return all(code.kernel_contains(perm.apply_word(k)) for k in code.kernel_basis()) and all(
        perm.apply_word(c) in code for c in code.coset_reps()
    )


def _colors_for(n: int, blocks: Iterable[Iterable[int]]) -> list[Hashable]:
    """Colour each point by the block containing it (0 for points in no block)."""
    col: list[Hashable] = [0] * (n + 1)
    for k, block in enumerate(blocks, 1):
        for i in block:
            if col[i]:
                raise InvalidInput(f"point {i} in two colour blocks")
            col[i] = k
    return col


def _search(
    ts: TripleSystem,
    blocks: Iterable[Iterable[int]] = (),
    accept: Callable[[Permutation], bool] | None = None,
    budget: int | None = None,
) -> AutomorphismSearch:
    return AutomorphismSearch(ts, colors=_colors_for(ts.n, blocks), accept=accept, budget=budget)


def stab_setwise(
    code: BinaryCode,
    fixed_coords: Iterable[int] | None = None,
    budget: int | None = None,
    blocks: Sequence[Iterable[int]] = (),
) -> PermGroup:
    """Symmetries of ``code`` stabilizing ``fixed_coords`` as a set.

    ``blocks`` adds further sets that must each be stabilized; singleton
    blocks give pointwise stabilizers.
    """
    parts = list(blocks)
    if fixed_coords is not None:
        parts.insert(0, fixed_coords)
    return _search(code_sts(code), parts, accept=lambda p: is_symmetry(code, p), budget=budget).group()


def sym_group(code: BinaryCode, budget: int | None = None) -> PermGroup:
    return stab_setwise(code, None, budget=budget)


def iter_symmetries(
    code: BinaryCode,
    blocks: Sequence[Iterable[int]] = (),
    budget: int | None = None,
) -> Iterator[Permutation]:
    """Every symmetry (stabilizing each block), by plain backtracking over Aut(STS)."""
    return _search(code_sts(code), blocks, accept=lambda p: is_symmetry(code, p), budget=budget).all_automorphisms()


def aut_group(ts: TripleSystem, blocks: Sequence[Iterable[int]] = (), budget: int | None = None) -> PermGroup:
    return _search(ts, blocks, budget=budget).group()


def is_automorphism(ts: TripleSystem, perm: Permutation) -> bool:
    if perm.degree != ts.n:
        raise InvalidInput("degree mismatch")
    return all(perm.apply_triple(t) in ts.triples for t in ts.triples)


# grid permutations


def _grid_perm(g: GridCoords, f: Callable[[int, int], tuple[int, int]]) -> Permutation:
    imgs = [g.index(*f(*g.cell(i))) for i in range(1, g.n + 1)]
    return Permutation(imgs)


def dub1(g: GridCoords, pi: Permutation) -> Permutation:
    if pi.degree != g.t:
        raise InvalidInput(f"dub1 needs a permutation of degree t={g.t}")
    return _grid_perm(g, lambda r, s: (pi(r) if r else 0, s))


def dub2(g: GridCoords, pi: Permutation) -> Permutation:
    if pi.degree != g.m:
        raise InvalidInput(f"dub2 needs a permutation of degree m={g.m}")
    return _grid_perm(g, lambda r, s: (r, pi(s) if s else 0))


def ort_perm(g: GridCoords, loop: SteinerLoop, l: int, u: int) -> Permutation:
    """(r, s) -> (r, s*l) on rows r in supp(u); identity elsewhere."""
    rows = set(support(u))
    return _grid_perm(g, lambda r, s: (r, loop(s, l)) if r in rows else (r, s))


def ort(M: MollardCode, l: int, u: int) -> Permutation:
    if l not in lin_mu(M.D):
        raise InvalidParameter(f"{l} is not a mu-linear coordinate of D")
    if u not in dual(M.C):
        raise InvalidParameter("u is not a word of the dual of C")
    return ort_perm(M.grid, loop_of(sts_of_code(M.D)), l, u)


def ort_sts(S1: TripleSystem, S2: TripleSystem, l: int, u: int) -> Permutation:
    """Design version: l must be nu-linear in S2, u orthogonal to every triple of S1."""
    if l not in lin_nu(S2):
        raise InvalidParameter(f"{l} is not a nu-linear point of S2")
    if any(gf2.dot(u, v) for v in S1.incidence_vectors()):
        raise InvalidParameter("u is not orthogonal to the triples of S1")
    return ort_perm(GridCoords(S1.n, S2.n), loop_of(S2), l, u)


def row_shape_ok(g: GridCoords, perm: Permutation) -> bool:
    """Every row r >= 1 maps into itself and every (0, s) is fixed."""
    for i in range(1, g.n + 1):
        r, s = g.cell(i)
        r2, s2 = g.cell(perm(i))
        if r == 0 and (r2, s2) != (r, s):
            return False
        if r and r2 != r:
            return False
    return True


def in_T(M: MollardCode, perm: Permutation) -> bool:
    return perm.degree == M.n and row_shape_ok(M.grid, perm) and is_symmetry(M, perm)


def t_blocks(g: GridCoords) -> list[list[int]]:
    """Colour blocks forcing the row/row-0 shape: each row, then each (0, s) alone."""
    rows = [[g.index(r, s) for s in range(g.m + 1)] for r in range(1, g.t + 1)]
    fixed = [[g.index(0, s)] for s in range(1, g.m + 1)]
    return rows + fixed


def dual_words(C: BinaryCode | TripleSystem, limit_dim: int = 6) -> list[int]:
    """Nonzero dual words: all of them when the dual is small, else a basis."""
    if isinstance(C, TripleSystem):
        basis = gf2.span_basis(gf2.orthogonal_basis(C.incidence_vectors(), C.n))
    else:
        basis = dual(C).basis
    if len(basis) <= limit_dim:
        return [w for w in gf2.span_elements(basis) if w]
    return basis
