"""Walkthrough: normal glider ideals in M_2 and their groupoid.

Run:  python3 demos/03_brandt_groupoid.py
"""

from gliderbs.brandt import (NormalGliderIdeal, inverse, modulizer_chain,
                             product, two_sided_translate, unit_left,
                             verify_groupoid)
from gliderbs.fields import QQ_FIELD, padic
from gliderbs.filtration import valuation_filtration
from gliderbs.glider import FiltrationTail, Glider
from gliderbs.lattice import matrix_algebra
from gliderbs.orders import builtin_mnr

q = QQ_FIELD
fe = q.from_int
f5 = valuation_filtration(padic(5))
alg = matrix_algebra(2)
b = builtin_mnr(2, f5.base_ring).lattice

print("M = the negative part B > 5B > 25B > ... as a chain in M_2.")
m = NormalGliderIdeal(Glider(f5, "algebra", [b], FiltrationTail(), alg=alg))

inv = inverse(m)
print("inverse levels (top-left entries):",
      [str(inv.level(i).rows[0][0]) for i in range(4)])

e = unit_left(m)
print("unit = M * M^-1; its levels are the negative filtration itself:")
print("  (M M^-1)_i == F_-i A for i in 0..6:",
      all(e.level(i) == b.scale(fe(5) ** i) for i in range(7)))
print("the same chain falls out of the modulizer computation:",
      modulizer_chain(m) == e)

print("\nA sample of shifted chains pi^k * M, k in [-2, 2]:")
sample = []
for k in range(-2, 3):
    x = fe(5) ** k if k >= 0 else q.parse("1/5") ** (-k)
    sample.append(NormalGliderIdeal(
        Glider(f5, "algebra", [b.scale(x)], FiltrationTail(), alg=alg)))
print("product of the k=2 and k=-1 chains starts at:",
      str(product(sample[4], sample[1]).level(0).rows[0][0]))

report = verify_groupoid(sample)
print("groupoid verification:")
for a in report.axioms:
    extra = f" ({a['detail']})" if a["detail"] else ""
    print(f"  axiom {a['axiom']}: {a['status']}{extra}")

print("\nConjugating by g = diag(5, 1) moves the unit:")
g = (fe(5), fe(0), fe(0), fe(1))
ginv = (q.parse("1/5"), fe(0), fe(0), fe(1))
moved = two_sided_translate(m, g, ginv)
print("units equal?", unit_left(moved) == unit_left(m))
rep2 = verify_groupoid([m, moved])
gate = next(a for a in rep2.axioms if a["axiom"] == 2)
print("gate report with two distinct units:", gate["detail"])
print("all axioms still pass:", rep2.all_pass())
