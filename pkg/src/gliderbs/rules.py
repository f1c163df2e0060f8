"""Identifiers for the mathematical criteria the classifiers cite.

Reports and verdicts carry one of these ids; the table gives each a
one-line statement so that CLI output is self-describing.
"""

RULES = {
    "field.dvr-enumeration":
        "Over the valuation filtration of a discrete valuation ring, the "
        "irreducible glider chains are exactly the shifted chains "
        "F_n > F_{n-1} > ..., one for each integer shift.",
    "field.strong-requires-dvr":
        "A strong field filtration admits an irreducible glider chain only "
        "when its degree-0 ring is a discrete valuation ring and the "
        "filtration is its valuation filtration.",
    "field.associated-strong":
        "A non-strong field filtration with an irreducible glider chain "
        "completes to a strong e-step filtration with the same positive "
        "part; classification happens over the completion.",
    "field.estep-unsupported":
        "Strong e-step filtrations with e >= 2 are outside the classifier's "
        "irreducible class; no witness was extractable.",
    "csa.relative-product":
        "Over a matrix algebra with an induced filtration on a DVR "
        "valuation base, irreducible glider chains are the column chains "
        "F_m A v > F_{m-1} A v > ... indexed by a projective point and an "
        "integer shift.",
    "csa.principal":
        "An irreducible glider chain in a csa has zero body and generates "
        "an irreducible principal left ideal.",
    "csa.ramification-one":
        "Nonempty enumeration over a maximal order forces ramification "
        "index 1: a level quotient over a deeper scalar step is not simple.",
    "csa.matrix-split-witness":
        "For a split matrix algebra of size >= 2 the negative part of the "
        "filtration is reducible; a column subchain is a witness.",
    "csa.unsupported-algebra":
        "Point extraction needs a split matrix algebra; other algebras are "
        "out of the classifier's class.",
    "order.ceil-superadditivity":
        "ceil(k/e) + ceil(l/e) >= ceil((k+l)/e), strict exactly when both "
        "remainders are nonzero and their sum is at most e.",
    "order.maxorder-divisibility":
        "Over a maximal order, the filtration generated by a product of "
        "prime-ideal powers is strong iff each exponent is divisible by "
        "the ramification index.",
    "order.degree-minus-one":
        "The degree -1 part of the induced field filtration is the product "
        "of the base primes to the ceilings k_i/e_i.",
    "brandt.groupoid-axioms":
        "Normal glider ideals with proper multiplication form a groupoid: "
        "units, gating, associativity, inverses, connectivity.",
    "brandt.unit-modulizer":
        "The left unit of a normal glider ideal equals both the maximal "
        "negative filtration acting on it and the product with its inverse.",
    "brandt.strong-unit-chain":
        "Over a strong base the unit chain of the negative part is the "
        "negative filtration itself: (M M^-1)_i = F_{-i}A.",
    "tensor.strong-map":
        "A strong base filtration induces a classification-preserving map "
        "on irreducible chains under quadratic scalar extension.",
    "rank2.z2-classification":
        "Irreducible Z^2-lex glider grids over the composite valuation are "
        "the pure shift grids, one per pair of integers.",
    "rank2.z-degenerate":
        "A Z^2 presentation whose vertical direction is trivial is "
        "essentially a Z-filtration and is excluded.",
    "glider.triviality":
        "A subglider is trivial when it hits the body (T1), hits zero "
        "(T2), or reindexes the big chain along a strictly increasing map "
        "(T3); anything else witnesses reducibility.",
}
