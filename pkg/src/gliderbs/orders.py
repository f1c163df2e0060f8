"""Orders in the supported algebras: prime ideals, ramification indices,
and the divisibility criterion for strongness over a maximal order.

Builtins: the full matrix order M_n(R) over any semilocal base (unramified,
e = 1 at every prime) and the Hurwitz quaternion order at 2 (ramified,
e = 2).  Custom orders get their radical from the quotient algebra over
the residue field by nilpotency probing; that requires the caller to
declare maximality, and the declared hypothesis is re-checked against the
computed identities (P^e = pB, simple quotient).
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import (MaximalityError, SpecValidationError, UnsupportedError)
from .fields import QQ_FIELD, padic
from .filtration import (AlgebraFiltration, FieldFiltration,
                         StepFunction)
from .lattice import (BaseRing, FracIdeal, canonicalize,
                      matrix_algebra, mult, quaternion_algebra,
                      quotient_length, span)

__all__ = [
    "OrderData", "PrimeData",
    "builtin_mnr", "builtin_hurwitz2",
    "ceil_sum_compare", "radical", "induced_degree_minus_one",
    "maxorder_strong_check", "maxorder_filtration",
]


class OrderData:
    """A verified order: a full lattice that is a ring containing 1."""

    def __init__(self, lattice, alg, builtin="custom", declared_maximal=False):
        if not lattice.full:
            raise SpecValidationError("an order must be a full lattice")
        one = alg.one_vector(lattice.base.field)
        if not lattice.contains_vector(one):
            raise SpecValidationError("an order must contain 1")
        if mult(lattice, lattice, alg) != lattice:
            raise SpecValidationError("not closed under multiplication")
        self.lattice = lattice
        self.alg = alg
        self.builtin = builtin
        self.declared_maximal = declared_maximal or builtin in (
            "mnr", "hurwitz2")

    @property
    def base(self):
        return self.lattice.base

    def __repr__(self):
        return f"OrderData({self.builtin}, {self.alg!r})"


class PrimeData:
    """A prime (= maximal two-sided) ideal of an order with its
    ramification index: p_j B = P^e."""

    def __init__(self, order, ideal, prime_index, e):
        self.order = order
        self.ideal = ideal
        self.prime_index = prime_index
        self.e = e

    def __repr__(self):
        return f"PrimeData(j={self.prime_index}, e={self.e})"


def builtin_mnr(n, base):
    """M_n(R): the standard maximal order in the split matrix algebra."""
    alg = matrix_algebra(n)
    field = base.field
    d = alg.dim
    rows = [[field.one() if i == j else field.zero() for j in range(d)]
            for i in range(d)]
    return OrderData(canonicalize(base, d, rows), alg, builtin="mnr")


def builtin_hurwitz2():
    """The Hurwitz quaternion order over Z localized at 2, inside the
    rational quaternions (-1, -1): basis 1, i, j, (1+i+j+k)/2."""
    base = BaseRing(QQ_FIELD, (padic(2),))
    alg = quaternion_algebra(-1, -1)
    fe = QQ_FIELD.from_fraction
    one, zero, half = fe(1), fe(0), fe(Fraction(1, 2))
    rows = [
        [one, zero, zero, zero],
        [zero, one, zero, zero],
        [zero, zero, one, zero],
        [half, half, half, half],
    ]
    return OrderData(canonicalize(base, 4, rows), alg, builtin="hurwitz2")


# ---------------------------------------------------------------------------
# the ceiling comparison
# ---------------------------------------------------------------------------

def _ceil_div(k, e):
    return -((-k) // e)


def ceil_sum_compare(e, k, l):
    """'strict' when ceil(k/e) + ceil(l/e) > ceil((k+l)/e), else 'equal'.

    Characterization: strict iff both remainders k mod e and l mod e are
    nonzero and their sum is at most e.
    """
    if e <= 0:
        raise SpecValidationError("the step e must be positive")
    i, j = k % e, l % e
    strict = (0 < i and 0 < j and 2 <= i + j <= e)
    return "strict" if strict else "equal"


# ---------------------------------------------------------------------------
# radicals and ramification
# ---------------------------------------------------------------------------

def _prime_index(order, p):
    vals = order.base.valuations
    for j, v in enumerate(vals):
        if v.kind == "padic" and v.p == p:
            return j
    if isinstance(p, int) and 0 <= p < len(vals):
        return p
    raise SpecValidationError(f"{p} is not a maximal ideal of the base")


def radical(order, p):
    """The prime of the order over the base prime p, with its ramification
    index e (the least power landing in pB)."""
    j = _prime_index(order, p)
    if order.builtin == "mnr":
        pi = order.base.uniformizers[j]
        ideal = order.lattice.scale(pi)
        prime = PrimeData(order, ideal, j, 1)
    elif order.builtin == "hurwitz2":
        prime = _custom_radical(order, j)
        if prime.e != 2:  # pragma: no cover - fixed builtin
            raise SpecValidationError("Hurwitz ramification must be 2")
    else:
        if not order.declared_maximal:
            raise MaximalityError(
                "radical of a custom order requires declared maximality")
        prime = _custom_radical(order, j)
    _verify_prime(prime)
    return prime


def _verify_prime(prime):
    order, j = prime.order, prime.prime_index
    b, alg = order.lattice, order.alg
    pb = b.scale(order.base.uniformizers[j])
    power = b
    for _ in range(prime.e):
        power = mult(power, prime.ideal, alg)
    if power != pb:
        raise MaximalityError(
            f"P^{prime.e} differs from pB: the order is not maximal at "
            f"prime {j} (or the declared maximality certificate is wrong)")
    if mult(b, prime.ideal, alg) != prime.ideal or \
            mult(prime.ideal, b, alg) != prime.ideal:
        raise MaximalityError("computed prime is not two-sided")


def _custom_radical(order, j):
    """Radical via the quotient algebra over the residue field: probe
    elements for generating a nilpotent two-sided ideal."""
    b, alg = order.lattice, order.alg
    base = order.base
    v = base.valuations[j]
    fld = v.residue_field()
    if fld.kind not in ("FP", "FP2"):
        raise UnsupportedError(
            "radical computation needs a finite residue field")
    d = alg.dim
    size = (fld.p if fld.kind == "FP" else fld.p ** 2) ** d
    if size > 4096:
        raise UnsupportedError(
            f"residue algebra has {size} elements, over the probing bound; "
            "use a builtin order")
    field = base.field

    def red(vec):
        cs = b.coords(vec)
        return [v.residue(c) if c else fld.zero() for c in cs]

    # multiplication table of the quotient algebra in the order basis
    mul_table = []
    for r1 in b.rows:
        row = []
        for r2 in b.rows:
            row.append(red(alg.mul_coords(r1, r2, field)))
        mul_table.append(row)

    def q_mul(u, w):
        out = [fld.zero()] * d
        for s, cu in enumerate(u):
            if not cu:
                continue
            for t, cw in enumerate(w):
                if not cw:
                    continue
                prod = cu * cw
                for idx, c in enumerate(mul_table[s][t]):
                    if c:
                        out[idx] = out[idx] + prod * c
        return out

    basis_elems = [[fld.one() if i == s else fld.zero() for i in range(d)]
                   for s in range(d)]

    def two_sided_ideal(x):
        gens = []
        for a in basis_elems:
            ax = q_mul(a, x)
            for c in basis_elems:
                gens.append(q_mul(ax, c))
        rows, _ = linalg.rref([g for g in gens if any(g)], fld)
        return rows

    def is_nilpotent_ideal(rows):
        # powers strictly descend until zero, so dim+1 steps decide
        current = rows
        for _ in range(d + 1):
            if not current:
                return True
            nxt = [q_mul(u, w) for u in current for w in rows]
            current, _ = linalg.rref([g for g in nxt if any(g)], fld)
        return not current

    radical_rows = []
    for x in _all_vectors(fld, d):
        if not any(x):
            continue
        if _in_span(radical_rows, x, fld):
            continue
        ideal_rows = two_sided_ideal(x)
        if is_nilpotent_ideal(ideal_rows):
            merged = radical_rows + ideal_rows
            radical_rows, _ = linalg.rref(merged, fld)
    # preimage lattice: lifts of the radical basis plus p*B
    pi = base.uniformizers[j]
    lifts = []
    for row in radical_rows:
        vec = [field.zero()] * d
        for s, c in enumerate(row):
            if c:
                vec = [a + v.lift(c) * e2 for a, e2 in zip(vec, b.rows[s])]
        lifts.append(vec)
    gens = lifts + [[pi * e2 for e2 in row] for row in b.rows]
    ideal = span(base, d, gens)
    pb = b.scale(pi)
    power = ideal
    e = 1
    while not pb.contains(power):
        power = mult(power, ideal, alg)
        e += 1
        if e > d * d:
            raise UnsupportedError(
                f"radical power search exceeded the bound {d * d}; "
                f"reached length {quotient_length(b, power)} without "
                "hitting pB")
    return PrimeData(order, ideal, j, e)


def _in_span(rows, vec, fld):
    if not rows:
        return not any(vec)
    test, _ = linalg.rref([list(r) for r in rows] + [list(vec)], fld)
    return len(test) == len(rows)


def _all_vectors(fld, d):
    if fld.kind == "FP":
        elems = [fld.from_int(t) for t in range(fld.p)]
    else:
        from .fields import FieldElem
        elems = [FieldElem(fld, (a, bb))
                 for a in range(fld.p) for bb in range(fld.p)]

    def rec(prefix):
        if len(prefix) == d:
            yield list(prefix)
            return
        for e in elems:
            yield from rec(prefix + [e])

    yield from rec([])


# ---------------------------------------------------------------------------
# the maximal-order strongness criterion
# ---------------------------------------------------------------------------

def induced_degree_minus_one(primes):
    """The degree -1 part of the induced field filtration: the fractional
    ideal prod p_i^{ceil(k_i/e_i)} for F_-1 A = prod P_i^{k_i}."""
    if not primes:
        raise SpecValidationError("need at least one prime")
    order = primes[0][0].order
    seen = set()
    exps = [0] * order.base.nprimes
    for prime, k in primes:
        if prime.order is not order:
            raise SpecValidationError("primes over different orders")
        if k < 0:
            raise SpecValidationError("exponents must be nonnegative")
        if prime.prime_index in seen:
            raise SpecValidationError("repeated underlying prime")
        seen.add(prime.prime_index)
        exps[prime.prime_index] = _ceil_div(k, prime.e)
    return FracIdeal(order.base, tuple(exps))


def maxorder_strong_check(order, ks):
    """True iff e_i divides k_i at every base prime: the filtration with
    F_-1 A = prod P_i^{k_i} over the maximal order is then strong."""
    ks = list(ks)
    if len(ks) != order.base.nprimes:
        raise SpecValidationError("one exponent per base prime required")
    if any(k < 0 for k in ks):
        raise SpecValidationError("exponents must be nonnegative")
    for j, k in enumerate(ks):
        prime = radical(order, _prime_value(order, j))
        if k % prime.e:
            return False
    return True


def _prime_value(order, j):
    v = order.base.valuations[j]
    return v.p if v.kind == "padic" else j


def maxorder_filtration(order, ks):
    """The candidate chain with F_-1 A = prod P_i^{k_i}, positive part
    F_m A = (prod p_i^{-floor(k_i m / e_i)}) B, and the induced field
    filtration as base.

    This hybrid satisfies the filtration product law exactly when each e_i
    divides k_i (that equivalence is the content of the divisibility
    criterion), so it is built without the product-law validation; the
    degree-1 strength test and `product_law_witness` are run on it by the
    cross-checks.  Ascent, the degree-0 ring, and the intersection with K
    are still verified here."""
    ks = list(ks)
    base = order.base
    if len(ks) != base.nprimes:
        raise SpecValidationError("one exponent per base prime required")
    if any(k < 0 for k in ks):
        raise SpecValidationError("exponents must be nonnegative")
    primes = [radical(order, _prime_value(order, j))
              for j in range(base.nprimes)]
    degenerate = all(k == 0 for k in ks)
    es = [p.e for p in primes]
    period = 1
    for e in es:
        g, a, bb = e, e, period
        while bb:
            a, bb = bb, a % bb
        period = period * e // a

    def phi_of(mdeg):
        if mdeg >= 0:
            return tuple(_floor_div(k * mdeg, e) for k, e in zip(ks, es))
        return tuple(-_ceil_div(k * (-mdeg), e) for k, e in zip(ks, es))

    def _floor_div(a, b):
        return a // b

    window = (-period, period)
    table = {nn: phi_of(nn) for nn in range(-period, period + 1)}
    inc = tuple(k * period // e for k, e in zip(ks, es))
    if degenerate:
        # constant chain: not separated/exhaustive; build the levels only
        fk = None
    else:
        sf = StepFunction(window, table, (period, inc), (period, inc))
        fk = FieldFiltration(base.field, base.valuations, sf)

    ppow = {}

    def neg_level(mdeg):
        if mdeg in ppow:
            return ppow[mdeg]
        if mdeg == 0:
            out = order.lattice
        else:
            out = neg_level(mdeg - 1)
            for prime, k in zip(primes, ks):
                for _ in range(k):
                    out = mult(out, prime.ideal, order.alg)
        ppow[mdeg] = out
        return out

    levels = []
    for nn in range(-period, period + 1):
        if nn <= 0:
            levels.append(neg_level(-nn))
        else:
            exps = tuple(-_floor_div(k * nn, e) for k, e in zip(ks, es))
            levels.append(order.lattice.scale_ideal(FracIdeal(base, exps)))
    jminus = FracIdeal(base, tuple(k * period // e
                                   for k, e in zip(ks, es)))
    jplus = jminus.inverse()
    if degenerate:
        # constant chain, only used for the degree-1 identity L_1 L_-1 = L_0
        fk = FieldFiltration(
            base.field, base.valuations,
            StepFunction((-1, 1), {-1: (-1,) * base.nprimes,
                                   0: (0,) * base.nprimes,
                                   1: (1,) * base.nprimes},
                         (1, (1,) * base.nprimes),
                         (1, (1,) * base.nprimes)))
    fa = AlgebraFiltration(order.alg, fk, order.lattice,
                           mode="explicit", window=window,
                           levels=levels, plus=(period, jplus),
                           minus=(period, jminus), validate=False)
    # targeted validation: ascent, L_0, and the intersection with K
    span_n = period
    for nn in range(-period - span_n, period + span_n):
        if not fa.level(nn + 1).contains(fa.level(nn)):
            raise SpecValidationError(  # pragma: no cover - always ascends
                f"candidate levels not ascending at {nn}")
    if fa.level(0) != order.lattice:
        raise SpecValidationError("L_0 must be the order")
    if not degenerate:
        for nn in range(-period, period + 1):
            if fa._intersection_with_K(nn) != fk.level(nn):
                raise SpecValidationError(
                    f"intersection with K at degree {nn} deviates from the "
                    "ceiling formula")
    return fa
