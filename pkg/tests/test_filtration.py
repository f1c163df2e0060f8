import random

import pytest

from gliderbs.errors import SpecValidationError
from gliderbs.fields import QQ_FIELD, padic
from gliderbs.filtration import (AlgebraFiltration, FieldFiltration,
                                 StepFunction, associated_strong, estep,
                                 induced_on_K, is_strong, jacobson_check,
                                 member, product_law_witness,
                                 strong_completion, valuation_filtration)
from gliderbs.glider import FiltrationTail, Glider, MultiplyBy
from gliderbs.lattice import FracIdeal
from gliderbs.orders import builtin_hurwitz2, maxorder_filtration


def test_member_examples(f5, f23):
    q = QQ_FIELD
    assert member(f5, -2, q.from_int(50))
    assert not member(f5, -3, q.from_int(50))
    assert member(f23, 0, q.parse("1/5"))
    assert not member(f23, 0, q.parse("1/2"))
    assert member(f23, 1, q.parse("1/6"))


def test_is_strong_examples(f5, f23, f_mod):
    assert is_strong(f5)
    assert is_strong(f23)
    assert not is_strong(f_mod)


def test_estep_examples(f5, f_mod):
    assert estep(f5) == 1
    assert estep(f_mod) is None
    two_step = FieldFiltration(
        QQ_FIELD, (padic(5),),
        StepFunction((-2, 2), {-2: (-1,), -1: (-1,), 0: (0,),
                               1: (0,), 2: (1,)}, (2, (1,)), (2, (1,))))
    assert estep(two_step) == 2
    assert not is_strong(two_step)


def test_jacobson_examples(f5, f23):
    assert jacobson_check(f5)
    assert jacobson_check(f23)


def test_validator_rejects_flat_negative_degree():
    # phi(-1) = 0 cannot coexist with a growing positive part
    with pytest.raises(SpecValidationError):
        FieldFiltration(
            QQ_FIELD, (padic(5),),
            StepFunction((-1, 1), {-1: (0,), 0: (0,), 1: (1,)},
                         (1, (1,)), (1, (1,))))


def test_validator_rejects_degenerate():
    with pytest.raises(SpecValidationError):
        StepFunction((0, 0), {0: ()}, (1, ()), (1, ()))
    with pytest.raises(SpecValidationError):
        StepFunction((0, 0), {0: (0,)}, (1, (0,)), (1, (1,)))


def test_associated_strong_examples(f5, f_mod):
    # already strong: the valuation chain reproduces the filtration
    m = Glider(f5, "field",
               [FracIdeal(f5.base_ring, (i,)) for i in range(3)],
               MultiplyBy(FracIdeal(f5.base_ring, (1,))))
    assert associated_strong(f5, m) == f5
    # the modified filtration completes to the valuation filtration
    m2 = Glider(f_mod, "field",
                [FracIdeal(f_mod.base_ring, (i,)) for i in range(4)],
                MultiplyBy(FracIdeal(f_mod.base_ring, (1,))))
    out = associated_strong(f_mod, m2)
    assert out == f5 and out.is_dvr_valuation()


def test_associated_strong_two_step():
    # positive part jumping every 2 steps + the matching glider
    f = FieldFiltration(
        QQ_FIELD, (padic(5),),
        StepFunction((-2, 2), {-2: (-1,), -1: (-1,), 0: (0,),
                               1: (0,), 2: (1,)}, (2, (1,)), (2, (1,))))
    chain = [FracIdeal(f.base_ring, ((i + 1) // 2,)) for i in range(7)]
    m = Glider(f, "field", chain, FiltrationTail())
    out = associated_strong(f, m)
    assert estep(out) == 2


def test_associated_strong_rejects_wrong_start(f5):
    m = Glider(f5, "field", [FracIdeal(f5.base_ring, (1,))],
               MultiplyBy(FracIdeal(f5.base_ring, (1,))))
    with pytest.raises(SpecValidationError):
        associated_strong(f5, m)


def test_strong_completion(f_mod, f5):
    comp, e = strong_completion(f_mod)
    assert e == 1 and comp.is_dvr_valuation() and comp == f5


def test_induced_on_K_induced_mode(fa_m2, f5):
    assert induced_on_K(fa_m2) is f5


def test_induced_on_K_explicit_powers(m2_order):
    fa = maxorder_filtration(m2_order, (1,))
    fk = induced_on_K(fa)
    assert fk.is_dvr_valuation()


def test_induced_on_K_hurwitz_radical():
    fa = maxorder_filtration(builtin_hurwitz2(), (1,))
    fk = induced_on_K(fa)
    # P meet Q = 2 Z_(2): phi(-1) = phi(-2) = -1
    assert fk.phi(-1) == (-1,) and fk.phi(-2) == (-1,)
    assert fk.phi(-3) == (-2,)


def test_product_law_dichotomy():
    hur = builtin_hurwitz2()
    assert product_law_witness(maxorder_filtration(hur, (2,))) is None
    assert product_law_witness(maxorder_filtration(hur, (1,))) is not None


def test_levelwise_product_randomized(f23):
    # member-set products F_n F_m inside F_{n+m} on sampled elements
    rnd = random.Random(11)
    q = QQ_FIELD
    for _ in range(60):
        n, m = rnd.randint(-3, 3), rnd.randint(-3, 3)
        xn = f23.level(n).generator() * q.from_int(rnd.randint(1, 9))
        xm = f23.level(m).generator() * q.from_int(rnd.randint(1, 9))
        assert member(f23, n + m, xn * xm)


def test_algebra_filtration_validation(f5, b_m2, m2):
    fa = AlgebraFiltration(m2, f5, b_m2, mode="induced")
    assert fa.level(0) == b_m2
    assert fa.level(-1) == b_m2.scale(QQ_FIELD.from_int(5))
    assert is_strong(fa)
    with pytest.raises(SpecValidationError):
        AlgebraFiltration(m2, f5, b_m2.scale(QQ_FIELD.from_int(5)),
                          mode="induced")


def test_explicit_equals_induced(f5, b_m2, m2):
    levels = [f5.level(n).generator() for n in range(-1, 2)]
    lats = [b_m2.scale(g) for g in levels]
    fa = AlgebraFiltration(
        m2, f5, b_m2, mode="explicit", window=(-1, 1), levels=lats,
        plus=(1, FracIdeal(f5.base_ring, (-1,))),
        minus=(1, FracIdeal(f5.base_ring, (1,))))
    assert induced_on_K(fa) == f5
    assert is_strong(fa)
    assert estep(fa) == 1
