"""Perfect codes of length 7 and 15 and the numbers that tell them apart."""

from perfectcodes import hamming_code, nonlinear_lambda, vasilev
from perfectcodes.bitcode import dual, is_perfect, rank, to_str
from perfectcodes.design import is_projective, lin_nu, sts_of_code
from perfectcodes.fundpart import fundamental_partition
from perfectcodes.linearity import lin_mu, mu_profile

h7 = hamming_code(3)
print("Hamming code of length 7:", h7.size, "words, rank", rank(h7))
for w in sorted(h7.words())[:4]:
    print("  ", to_str(w, 7))
print("   ...")

# doubling it with a zero function keeps the code linear
lin15 = vasilev(h7, {c: 0 for c in h7.words()})
# a seeded nonlinear function breaks linearity but not perfection
v15 = vasilev(h7, nonlinear_lambda(h7, 2))

for name, code in [("linear doubling", lin15), ("nonlinear doubling", v15)]:
    print()
    print(name)
    print("  perfect:", is_perfect(code))
    print("  rank:", rank(code), " kernel dim:", len(code.kernel_basis()), " dual dim:", dual(code).dimension)
    fp = fundamental_partition(code)
    sizes = [len(fp.classes[j]) for j in sorted(fp.classes)]
    print("  partition class sizes:", sizes)
    prof = mu_profile(code)
    print("  mu:", list(prof.values[1:]), " Lin_mu:", sorted(lin_mu(code)))
    ts = sts_of_code(code)
    print("  nu:", list(ts.nu[1:]), " Lin_nu:", sorted(lin_nu(ts)), " projective:", is_projective(ts))
