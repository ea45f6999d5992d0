"""A Mollard triple system of order 63 over a nonprojective system of order 15."""

import time

from perfectcodes import hamming_code, nonlinear_lambda, vasilev
from perfectcodes.design import TripleSystem, is_projective, lin_nu, sts_of_code
from perfectcodes.verify import verify_theorem3

h7 = hamming_code(3)
S2 = sts_of_code(vasilev(h7, nonlinear_lambda(h7, 2)))
S1 = TripleSystem(3, [(1, 2, 3)])
print("S2:", S2, "projective:", is_projective(S2), "Lin_nu:", sorted(lin_nu(S2)))

t0 = time.perf_counter()
report = verify_theorem3(S1, S2)
print(report.text())
print("%.1fs" % (time.perf_counter() - t0))
