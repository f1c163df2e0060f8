from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gliderbs.errors import FieldMismatchError, ParseError, UnsupportedError
from gliderbs.fields import (GAUSS_FIELD, INF, QQ_FIELD, QX_FIELD,
                             QXY_FIELD, composite2, fp_func_field,
                             gauss_prime, padic, poly_prime, residue,
                             uniformizer, uniformizer_pair, val, xadic)


def test_val_padic_examples():
    v5 = padic(5)
    assert val(v5, QQ_FIELD.from_int(50)) == 2
    assert val(v5, QQ_FIELD.zero()) is INF
    assert val(v5, QQ_FIELD.parse("1/5")) == -1


def test_uniformizers():
    assert str(uniformizer(padic(5))) == "5"
    assert str(uniformizer(xadic(QX_FIELD))) == "x"
    assert str(uniformizer(gauss_prime("1+i"))) == "1+i"
    with pytest.raises(UnsupportedError):
        uniformizer(composite2())


def test_uniformizer_pair():
    x, y = uniformizer_pair(composite2())
    assert (str(x), str(y)) == ("x", "y")
    c2 = composite2()
    assert val(c2, x) == (1, 0)
    assert val(c2, y) == (0, 1)


def test_composite_val_example():
    c2 = composite2()
    e = QXY_FIELD.parse("x^2*y^3 + x^3")
    assert val(c2, e) == (2, 3)


def test_residue_examples():
    v5 = padic(5)
    r = residue(v5, QQ_FIELD.parse("7/2"))
    assert str(r) == "1" and r.field.name == "F5"
    assert str(residue(v5, QQ_FIELD.one())) == "1"
    r2 = residue(xadic(QXY_FIELD), QXY_FIELD.parse("x+y"))
    assert str(r2) == "y" and r2.field.name == "Q(y)"
    with pytest.raises(UnsupportedError):
        residue(v5, QQ_FIELD.parse("1/5"))


def test_gauss_prime_cases():
    assert gauss_prime("1+i").case == "ramified"
    assert gauss_prime("3").case == "inert"
    assert gauss_prime("2+i").case == "split"
    with pytest.raises(UnsupportedError):
        gauss_prime("5")  # splits; 5 itself is not prime in Z[i]
    with pytest.raises(UnsupportedError):
        gauss_prime("1/2+i")


def test_gauss_valuations():
    w = gauss_prime("2+i")
    G = GAUSS_FIELD
    assert val(w, G.from_int(5)) == 1
    assert val(w, G.parse("2-i")) == 0
    assert val(w, G.parse("(2+i)^3")) == 3
    vr = gauss_prime("1+i")
    assert val(vr, G.from_int(2)) == 2
    vi = gauss_prime("3")
    assert val(vi, G.from_int(9)) == 2
    assert val(vi, G.parse("1+i")) == 0


def test_gauss_residues():
    vr = gauss_prime("1+i")
    assert str(residue(vr, GAUSS_FIELD.parse("3+2i"))) == "1"
    vs = gauss_prime("2+i")
    # i = -2 = 3 mod (2+i)
    assert str(residue(vs, GAUSS_FIELD.gen("i"))) == "3"
    vi = gauss_prime("3")
    r = residue(vi, GAUSS_FIELD.parse("4+5i"))
    assert str(r) == "1+2i" and r.field.name == "F3[i]"


def test_poly_prime():
    g = poly_prime("x^2+1", QX_FIELD)
    e = QX_FIELD.parse("(x^2+1)^2/(x-1)")
    assert val(g, e) == 2
    r = residue(g, QX_FIELD.parse("x^3"))
    # x^3 = x*(x^2+1) - x, so the residue is -x
    assert str(r) == "-x"
    with pytest.raises(UnsupportedError):
        poly_prime("x^2-1", QX_FIELD)


def test_parse_print_roundtrip_examples():
    cases = {
        QQ_FIELD: ["7/2", "-3", "0"],
        GAUSS_FIELD: ["1+i", "-i", "2+3/4i", "1/2-5i"],
        QX_FIELD: ["x^2 + 1", "(1/2*x^2 + 1/2)/(x + 1)", "-x"],
        QXY_FIELD: ["x^3 + x^2*y^3", "(x*y)/(y + 1)"],
    }
    for field, texts in cases.items():
        for t in texts:
            e = field.parse(t)
            assert field.parse(str(e)) == e
            assert str(field.parse(str(e))) == str(e)


def test_parse_errors():
    with pytest.raises(ParseError):
        QQ_FIELD.parse("2 +")
    with pytest.raises(ParseError):
        QQ_FIELD.parse("x")
    with pytest.raises(ParseError):
        QX_FIELD.parse("$")


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        QQ_FIELD.one() + QX_FIELD.one()
    with pytest.raises(FieldMismatchError):
        val(padic(5), QX_FIELD.one())


def test_fp_function_field():
    F = fp_func_field(5)
    e = F.parse("(x+7)/(x-1)")
    assert str(e) == "(x + 2)/(x + 4)"
    assert val(xadic(F), F.parse("x^3")) == 3


nonzero_rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50),
    max_denominator=40).filter(lambda r: r != 0)


@given(nonzero_rationals, nonzero_rationals)
def test_val_multiplicative(a, b):
    v = padic(5)
    x, y = QQ_FIELD.from_fraction(a), QQ_FIELD.from_fraction(b)
    assert val(v, x * y) == val(v, x) + val(v, y)


@given(nonzero_rationals, nonzero_rationals)
def test_ultrametric(a, b):
    v = padic(3)
    x, y = QQ_FIELD.from_fraction(a), QQ_FIELD.from_fraction(b)
    s = x + y
    lo = min(val(v, x), val(v, y))
    if s:
        assert val(v, s) >= lo
        if val(v, x) != val(v, y):
            assert val(v, s) == lo


@given(nonzero_rationals, nonzero_rationals)
def test_residue_multiplicative(a, b):
    v = padic(7)
    x, y = QQ_FIELD.from_fraction(a), QQ_FIELD.from_fraction(b)
    if val(v, x) == 0 and val(v, y) == 0:
        assert residue(v, x * y) == residue(v, x) * residue(v, y)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4),
       st.integers(-4, 4))
def test_composite_additive(a1, b1, a2, b2):
    c2 = composite2()
    F = QXY_FIELD
    u = F.parse("x") ** a1 * F.parse("y") ** b1 * F.parse("1+x")
    w = F.parse("x") ** a2 * F.parse("y") ** b2 * F.parse("(2+y)/(3+x*y)")
    va, vb = val(c2, u), val(c2, w)
    assert val(c2, u * w) == (va[0] + vb[0], va[1] + vb[1])
