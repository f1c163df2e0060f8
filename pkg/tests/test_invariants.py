"""Cross-module invariants pinned by the structural results."""

import random

from gliderbs.brandt import (NormalGliderIdeal, left_glider_order, product,
                             unit_left)
from gliderbs.fields import QQ_FIELD, padic
from gliderbs.filtration import (FieldFiltration, StepFunction, estep,
                                 is_strong, valuation_filtration)
from gliderbs.gbs import classify_field_glider, realize_field_element
from gliderbs.glider import FiltrationTail, Glider, body, is_glider
from gliderbs.lattice import ZERO_MODULE, matrix_algebra, mult


def test_strong_with_jump_implies_one_step():
    rnd = random.Random(13)
    for _ in range(10):
        c = rnd.randint(1, 3)
        f = FieldFiltration(
            QQ_FIELD, (padic(5),),
            StepFunction((0, 0), {0: (0,)}, (1, (c,)), (1, (c,))))
        assert is_strong(f)
        assert estep(f) == 1


def test_estep_power_identities():
    f = FieldFiltration(
        QQ_FIELD, (padic(5),),
        StepFunction((-2, 2), {-2: (-1,), -1: (-1,), 0: (0,),
                               1: (0,), 2: (1,)}, (2, (1,)), (2, (1,))))
    e = estep(f)
    assert e == 2
    for n in range(1, 5):
        power = f.level(-e)
        for _ in range(n - 1):
            power = power.mul(f.level(-e))
        assert power == f.level(-n * e)


def test_body_below_all_levels(f5):
    for n in (-2, 0, 3):
        g = realize_field_element(f5, n)
        b = body(g)
        for i in range(g.horizon + 2):
            assert b is ZERO_MODULE or g.level(i).contains(b)


def test_enumerated_elements_reclassify(f5):
    from gliderbs.gbs import enumerate_gbs_field

    for el in enumerate_gbs_field(f5, (-2, 2)):
        v = classify_field_glider(realize_field_element(f5, el.shift))
        assert v.status == "irreducible" and v.element == el


def test_left_order_grows_under_proper_products(f5, b_m2, m2):
    m = NormalGliderIdeal(Glider(f5, "algebra", [b_m2],
                                 FiltrationTail(), alg=m2))
    n = NormalGliderIdeal(Glider(
        f5, "algebra", [b_m2.scale(QQ_FIELD.from_int(5))],
        FiltrationTail(), alg=m2))
    prod = product(m, n)
    assert left_glider_order(prod).lattice.contains(
        left_glider_order(m).lattice)


def test_unit_chain_is_multiplicative(f5, b_m2, m2):
    m = NormalGliderIdeal(Glider(f5, "algebra", [b_m2],
                                 FiltrationTail(), alg=m2))
    e = unit_left(m)
    for i in range(4):
        for j in range(4):
            prod = mult(e.level(i), e.level(j), m2)
            assert e.level(i + j).contains(prod)


def test_tensor_filtration_product_law(fa_m2):
    from gliderbs.tensorext import gauss_extension, tensor_filtration

    tf = tensor_filtration(fa_m2, gauss_extension(5, "split", "2+i"))
    for p in range(-2, 3):
        for q in range(-2, 3):
            prod = mult(tf.level(p), tf.level(q), tf.alg)
            assert tf.level(p + q).contains(prod)


def test_random_gliders_survive_shift(f5):
    from gliderbs.glider import shift

    rnd = random.Random(17)
    from gliderbs.lattice import FracIdeal

    for _ in range(25):
        exps = [rnd.randint(-2, 2)]
        for _ in range(rnd.randint(1, 3)):
            exps.append(exps[-1] + rnd.randint(1, 2))
        g = Glider(f5, "field",
                   [FracIdeal(f5.base_ring, (e,)) for e in exps],
                   FiltrationTail())
        gamma = rnd.randint(0, len(exps) + 1)
        assert is_glider(shift(g, gamma))[0]
