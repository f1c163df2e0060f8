"""Walkthrough: filtrations on Q and the classification of their chains.

Run:  python3 demos/01_field_chains.py
"""

from gliderbs.fields import QQ_FIELD, padic
from gliderbs.filtration import (FieldFiltration, StepFunction, estep,
                                 is_strong, valuation_filtration)
from gliderbs.gbs import classify_field_glider, enumerate_gbs_field
from gliderbs.glider import negative_part

q = QQ_FIELD

print("The 5-adic valuation filtration on Q: F_n = 5^-n Z_(5).")
f5 = valuation_filtration(padic(5))
print("strong:", is_strong(f5), "| step:", estep(f5))

print("\nIts irreducible chains in the shift window [-3, 3]:")
for el in enumerate_gbs_field(f5, (-3, 3)):
    print("  shift", el.shift)

print("\nNow the two-prime localization at S = primes except 2, 3:")
print("F_0 = Z_S, negatives are the 6-adic chain, positives invert 2, 3.")
f23 = FieldFiltration(
    q, (padic(2), padic(3)),
    StepFunction((-1, 1), {-1: (-1, -1), 0: (0, 0), 1: (1, 1)},
                 (1, (1, 1)), (1, (1, 1))))
print("strong:", is_strong(f23))
print("enumeration over any window:", enumerate_gbs_field(f23, (-5, 5)))

print("\nThe negative part Z_S > 6Z_S > 36Z_S > ... is reducible:")
verdict = classify_field_glider(negative_part(f23))
print("verdict:", verdict.status, "| criterion:", verdict.rule)
print("witness chain (exponents at 2 and 3):",
      [verdict.witness.level(n).exps for n in range(4)])
print("the witness is 2 * (6^n): it sits strictly between consecutive")
print("levels and matches no reindexing of the chain.")

print("\nA non-strong filtration with the same deep structure:")
print("positive part 5-adic, negatives R > M^2 > M^3 > ...")
fmod = FieldFiltration(
    q, (padic(5),),
    StepFunction((-1, 1), {-1: (-2,), 0: (0,), 1: (1,)},
                 (1, (1,)), (1, (1,))))
print("strong:", is_strong(fmod),
      "| enumeration:", [e.shift for e in enumerate_gbs_field(fmod, (-1, 1))])
print("the completion machinery recognizes the same three chains.")
