import pytest

from gliderbs.brandt import (NormalGliderIdeal, inverse, left_glider_order,
                             modulizer_chain, product, right_glider_order,
                             two_sided_translate, unit_left, unit_right,
                             verify_groupoid)
from gliderbs.errors import RankError
from gliderbs.fields import QQ_FIELD
from gliderbs.glider import FiltrationTail, Glider
from gliderbs.lattice import add, mult, span


def fe(n):
    return QQ_FIELD.from_int(n)


@pytest.fixture()
def neg_part(f5, b_m2, m2):
    return NormalGliderIdeal(
        Glider(f5, "algebra", [b_m2], FiltrationTail(), alg=m2))


def test_left_order_of_negative_part(neg_part, b_m2):
    assert left_glider_order(neg_part).lattice == b_m2
    assert right_glider_order(neg_part).lattice == b_m2


def test_normal_ideal_requires_full_levels(f5, b_m2, m2, r5):
    col = span(r5, 4, [b_m2.rows[0], b_m2.rows[2]])
    with pytest.raises(RankError):
        NormalGliderIdeal(Glider(f5, "algebra", [col], FiltrationTail(),
                                 alg=m2))


def test_product_level_unfolding(neg_part, b_m2, m2):
    """(M*N)_2 = M_0 N_2 + M_1 N_1 + M_2 N_0."""
    m = neg_part
    prod = product(m, m)
    direct = add(add(mult(m.level(0), m.level(2), m2),
                     mult(m.level(1), m.level(1), m2)),
                 mult(m.level(2), m.level(0), m2))
    assert prod.level(2) == direct


def test_negative_part_is_idempotent(neg_part):
    assert product(neg_part, neg_part) == neg_part


def test_inverse_and_units(neg_part, fa_m2):
    inv = inverse(neg_part)
    for i in range(4):
        assert inv.level(i) == fa_m2.level(-i)
    assert inverse(inv) == neg_part
    e = unit_left(neg_part)
    for i in range(7):
        assert e.level(i) == fa_m2.level(-i)
    assert unit_right(neg_part) == e
    assert product(e, e) == e


def test_unit_equals_modulizer(neg_part):
    assert unit_left(neg_part) == modulizer_chain(neg_part)


def test_shifted_chain_product(neg_part, f5, b_m2, m2):
    pi_k = b_m2.scale(fe(25))
    pi_l = b_m2.scale(QQ_FIELD.parse("1/5"))
    mk = NormalGliderIdeal(Glider(f5, "algebra", [pi_k],
                                  FiltrationTail(), alg=m2))
    ml = NormalGliderIdeal(Glider(f5, "algebra", [pi_l],
                                  FiltrationTail(), alg=m2))
    out = product(mk, ml)
    assert out.level(0) == b_m2.scale(fe(5))


def test_conjugate_left_order(neg_part, f5, m2):
    g = (fe(5), fe(0), fe(0), fe(1))
    ginv = (QQ_FIELD.parse("1/5"), fe(0), fe(0), fe(1))
    moved = two_sided_translate(neg_part, g, ginv)
    conj_rows = [m2.mul_coords(m2.mul_coords(g, row, QQ_FIELD), ginv,
                               QQ_FIELD)
                 for row in neg_part.level(0).rows]
    conj = span(neg_part.level(0).base, 4, conj_rows)
    assert left_glider_order(moved).lattice == conj


def test_groupoid_on_shifts(neg_part, f5, b_m2, m2):
    sample = [neg_part]
    for k in (-1, 1):
        x = fe(5) ** k if k > 0 else QQ_FIELD.parse("1/5")
        sample.append(NormalGliderIdeal(
            Glider(f5, "algebra", [b_m2.scale(x)], FiltrationTail(),
                   alg=m2)))
    rep = verify_groupoid(sample)
    assert rep.all_pass()
    gate = next(a for a in rep.axioms if a["axiom"] == 2)
    assert "0 blocked" in gate["detail"]


def test_groupoid_gate_blocks_improper_pairs(neg_part):
    g = (fe(5), fe(0), fe(0), fe(1))
    ginv = (QQ_FIELD.parse("1/5"), fe(0), fe(0), fe(1))
    other = two_sided_translate(neg_part, g, ginv)
    rep = verify_groupoid([neg_part, other])
    assert rep.all_pass()
    gate = next(a for a in rep.axioms if a["axiom"] == 2)
    assert gate["detail"].startswith("2 blocked")
