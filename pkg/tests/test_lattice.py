import random
from fractions import Fraction

import pytest

from gliderbs.errors import (BaseMismatchError, ContainmentError, RankError,
                             SpecValidationError)
from gliderbs.fields import QQ_FIELD, padic, val
from gliderbs.lattice import (BaseRing, FracIdeal, add, canonicalize,
                              colon_left, colon_right, intersect,
                              intermediate_module, is_simple_quotient,
                              matrix_algebra, mult, quaternion_algebra,
                              quotient_length, span)
from gliderbs import linalg


def fe(n):
    return QQ_FIELD.from_fraction(Fraction(n))


def identity_rows(d):
    return [[fe(1 if i == j else 0) for j in range(d)] for i in range(d)]


def hurwitz_lattice():
    base = BaseRing(QQ_FIELD, (padic(2),))
    h = QQ_FIELD.parse("1/2")
    rows = identity_rows(4)[:3] + [[h, h, h, h]]
    return canonicalize(base, 4, rows), base


def test_canonicalize_identity(r5, b_m2):
    assert b_m2.rows == tuple(tuple(r) for r in identity_rows(4))


def test_canonicalize_absorbs_redundant(r5, b_m2):
    gens = identity_rows(4) + [[fe(5) * e for e in row]
                               for row in identity_rows(4)[:2]]
    assert canonicalize(r5, 4, gens) == b_m2


def test_canonicalize_rejects_rank_deficient(r5):
    with pytest.raises(RankError):
        canonicalize(r5, 4, identity_rows(4)[:3])


def test_hurwitz_golden_values():
    lam, base = hurwitz_lattice()
    d = linalg.det([list(r) for r in lam.rows], QQ_FIELD)
    assert val(padic(2), d) == -1
    alg = quaternion_algebra(-1, -1)
    assert mult(lam, lam, alg) == lam
    one_plus_i = [fe(1), fe(1), fe(0), fe(0)]
    p = span(base, 4, [alg.mul_coords(one_plus_i, r, QQ_FIELD)
                       for r in lam.rows])
    assert quotient_length(lam, p) == 2
    assert mult(p, p, alg) == lam.scale(fe(2))
    assert colon_left(p, p, alg) == lam


def test_add_intersect_examples(r5, b_m2, m2):
    l5 = b_m2.scale(fe(5))
    assert add(l5, b_m2) == b_m2
    assert intersect(l5, b_m2) == l5
    assert add(b_m2, b_m2) == b_m2
    assert intersect(b_m2, b_m2) == b_m2


def test_mult_examples(r5, b_m2, m2):
    assert mult(b_m2, b_m2, m2) == b_m2
    l5 = b_m2.scale(fe(5))
    inv5 = b_m2.scale(QQ_FIELD.parse("1/5"))
    assert mult(l5, inv5, m2) == b_m2


def test_colon_examples(r5, b_m2, m2):
    assert colon_left(b_m2, b_m2, m2) == b_m2
    l5 = b_m2.scale(fe(5))
    assert colon_left(l5, b_m2, m2) == l5
    assert colon_right(b_m2, b_m2, m2) == b_m2


def test_quotient_length_examples(r5, b_m2):
    one = canonicalize(r5, 1, [[fe(1)]])
    assert quotient_length(one, one.scale(fe(5))) == 1
    assert quotient_length(b_m2, b_m2.scale(fe(5))) == 4
    with pytest.raises(ContainmentError):
        quotient_length(b_m2.scale(fe(5)), b_m2)


def test_base_mismatch(r5, b_m2):
    other = BaseRing(QQ_FIELD, (padic(2),))
    lat2 = canonicalize(other, 4, identity_rows(4))
    with pytest.raises(BaseMismatchError):
        add(b_m2, lat2)


def test_simple_quotient_examples(r5, b_m2, m2):
    one = canonicalize(r5, 1, [[fe(1)]])
    assert is_simple_quotient(one, one.scale(fe(5)), one, matrix_algebra(1))
    col = span(r5, 4, [identity_rows(4)[0], identity_rows(4)[2]])
    assert is_simple_quotient(col, col.scale(fe(5)), b_m2, m2)
    assert not is_simple_quotient(b_m2, b_m2.scale(fe(5)), b_m2, m2)
    assert not is_simple_quotient(col, col.scale(fe(25)), b_m2, m2)
    w = intermediate_module(col, col.scale(fe(25)), b_m2, m2)
    assert w == col.scale(fe(5))


def test_unit_iff_zero_val_vector(r5):
    rnd = random.Random(3)
    for _ in range(60):
        x = QQ_FIELD.from_fraction(
            Fraction(rnd.randint(1, 400), rnd.randint(1, 400)))
        assert r5.is_unit(x) == (r5.val_vector(x) == (0,))


def test_two_prime_gcd_mixing():
    rs = BaseRing(QQ_FIELD, (padic(2), padic(3)))
    one = canonicalize(rs, 1, [[fe(1)]])
    assert span(rs, 1, [[fe(4)], [fe(9)]]) == one
    assert span(rs, 1, [[fe(18)], [fe(12)]]) == span(rs, 1, [[fe(6)]])


def test_fracideal_matches_rank_one_lattices():
    rs = BaseRing(QQ_FIELD, (padic(2), padic(3)))
    rnd = random.Random(5)
    for _ in range(40):
        e = (rnd.randint(-3, 3), rnd.randint(-3, 3))
        f = (rnd.randint(-3, 3), rnd.randint(-3, 3))
        a, b = FracIdeal(rs, e), FracIdeal(rs, f)
        la, lb = a.to_lattice(), b.to_lattice()
        assert a.mul(b).to_lattice() == span(
            rs, 1, [[la.rows[0][0] * lb.rows[0][0]]])
        assert a.add(b).to_lattice() == add(la, lb)
        assert a.intersect(b).to_lattice() == intersect(la, lb)
        assert a.contains(b) == la.contains(lb)


def test_colon_of_rank_deficient_column(r5, b_m2, m2):
    col = span(r5, 4, [identity_rows(4)[0], identity_rows(4)[2]])
    assert colon_left(col, col, m2) == b_m2


def test_algebra_validation():
    with pytest.raises(SpecValidationError):
        quaternion_algebra(0, -1)
    alg = quaternion_algebra(-1, -1)
    # Hamilton table spot checks: ij = k, ji = -k, k^2 = -1
    i = alg.basis_vector(1, QQ_FIELD)
    j = alg.basis_vector(2, QQ_FIELD)
    k = alg.mul_coords(i, j, QQ_FIELD)
    assert k == [fe(0), fe(0), fe(0), fe(1)]
    assert alg.mul_coords(j, i, QQ_FIELD) == [fe(0), fe(0), fe(0), fe(-1)]
    assert alg.mul_coords(k, k, QQ_FIELD) == [fe(-1), fe(0), fe(0), fe(0)]
