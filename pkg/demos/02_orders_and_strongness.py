"""Walkthrough: ramification in orders and the strongness dichotomy.

Run:  python3 demos/02_orders_and_strongness.py
"""

from gliderbs.fields import QQ_FIELD, padic
from gliderbs.filtration import is_strong, product_law_witness
from gliderbs.lattice import BaseRing, quotient_length
from gliderbs.orders import (builtin_hurwitz2, builtin_mnr, ceil_sum_compare,
                             maxorder_filtration, maxorder_strong_check,
                             radical)

print("Two maximal orders: M_2 over Z_(5) and the Hurwitz quaternions at 2.")
m2 = builtin_mnr(2, BaseRing(QQ_FIELD, (padic(5),)))
hur = builtin_hurwitz2()

p5 = radical(m2, 5)
p2 = radical(hur, 2)
print(f"M_2(Z_(5)): prime = 5*B, ramification e = {p5.e}")
print(f"Hurwitz:    prime P with P^2 = 2*Lambda, e = {p2.e}, "
      f"length(Lambda/P) = {quotient_length(hur.lattice, p2.ideal)}")

print("\nThe ceiling comparison drives everything: "
      "ceil(k/e)+ceil(l/e) vs ceil((k+l)/e)")
for (e, k, l) in ((2, 1, 1), (2, 2, 2), (3, 1, 1)):
    print(f"  e={e}, k={k}, l={l}: {ceil_sum_compare(e, k, l)}")

print("\nDegree -1 part = P^k.  Strong iff e divides k:")
for order, name in ((m2, "M_2(Z_(5))"), (hur, "Hurwitz")):
    for k in range(5):
        crit = maxorder_strong_check(order, (k,))
        fa = maxorder_filtration(order, (k,))
        direct = is_strong(fa)
        law = product_law_witness(fa)
        print(f"  {name:11s} k={k}: criterion {str(crit):5s} "
              f"direct {str(direct):5s} "
              f"product law {'holds' if law is None else f'fails at {law}'}")

print("\nNote the k=1, k=3 Hurwitz rows: not only does degree-1 strength")
print("fail, the candidate chain is not even a filtration (the product")
print("law breaks) - the two failures are the same divisibility fact.")
