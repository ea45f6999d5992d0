"""Symmetries of the Mollard code built from two repetition codes.

The stabilizer of the row-0 coordinates splits into three visible pieces:
row permutations, column permutations and the Ort involutions that shift
columns inside a chosen set of rows.
"""

from perfectcodes import MollardCode, hamming_code
from perfectcodes.bitcode import dual, from_str
from perfectcodes.linearity import lin_mu
from perfectcodes.perm import PermGroup
from perfectcodes.symmetry import dub1, dub2, ort, row_shape_ok, stab_setwise, sym_group

h3 = hamming_code(2)
M = MollardCode(h3, h3)
g = M.grid
print(M, "size", M.size)


def show(perm):
    # draw where each grid cell goes, row by row
    for r in range(g.t + 1):
        cells = []
        for s in range(g.m + 1):
            if r == s == 0:
                cells.append("  .  ")
            else:
                cells.append("(%d,%d)" % g.cell(perm(g.index(r, s))))
        print("   ", " ".join(cells))


D2 = [g.index(0, s) for s in range(1, g.m + 1)]
G = stab_setwise(M, D2)
print("whole symmetry group:", sym_group(M).order)
print("stabilizer of the row-0 cells:", G.order)

symC, symD = sym_group(h3), sym_group(h3)
orts = [ort(M, l, u) for l in sorted(lin_mu(h3)) for u in dual(h3).words() if u]
O = PermGroup(g.n, orts)
print("|Sym C| * |<Ort>| * |Sym D| =", symC.order, "*", O.order, "*", symD.order)

print("\nOrt with l = 1 on rows 2 and 3:")
show(ort(M, 1, from_str("011")))

T = [x for x in G.elements() if row_shape_ok(g, x)]
print("\nrow-preserving part T:", len(T), "elements, all involutions:",
      all((x * x).is_identity() for x in T))

# Dub2 is not normal here: conjugating it by an Ort moves column 0
pi = symD.generators[0]
o = orts[0]
conj = o * dub2(g, pi) * o.inverse()
print("\nOrt . Dub2(pi) . Ort^-1 moves column 0:",
      any(conj(g.index(r, 0)) != g.index(r, 0) for r in range(1, g.t + 1)))
print("Dub1 and Dub2 commute:", dub1(g, symC.generators[0]) * dub2(g, pi) == dub2(g, pi) * dub1(g, symC.generators[0]))
