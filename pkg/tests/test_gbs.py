import pytest

from gliderbs.errors import SpecValidationError, UnsupportedError
from gliderbs.fields import GAUSS_FIELD, QQ_FIELD, gauss_prime, padic
from gliderbs.filtration import (AlgebraFiltration, valuation_filtration,
                                 scaled_valuation_filtration)
from gliderbs.gbs import (BsPoint, bs_left_ideal, classify_csa_glider,
                          classify_field_glider, enumerate_gbs_csa,
                          enumerate_gbs_field, find_negative_part_witness,
                          realize_csa_element, realize_field_element)
from gliderbs.glider import (FiltrationTail, Glider, classify_subglider,
                             negative_part, scalar_shift, shift)
from gliderbs.lattice import (canonicalize, matrix_algebra,
                              quaternion_algebra)


def fe(n):
    return QQ_FIELD.from_int(n)


def test_bs_point_normalization():
    p = BsPoint([fe(2), fe(4)])
    assert [str(c) for c in p.coords] == ["1", "2"]
    with pytest.raises(SpecValidationError):
        BsPoint([fe(0), fe(0)])


def test_bs_left_ideal_examples():
    p10 = BsPoint([fe(1), fe(0)])
    L = bs_left_ideal(p10, 2)
    e11 = (fe(1), fe(0), fe(0), fe(0))
    e21 = (fe(0), fe(0), fe(1), fe(0))
    e12 = (fe(0), fe(1), fe(0), fe(0))
    assert L.contains(e11) and L.contains(e21) and not L.contains(e12)
    p11 = BsPoint([fe(1), fe(1)])
    L2 = bs_left_ideal(p11, 2)
    assert L2.contains((fe(1), fe(1), fe(0), fe(0)))
    assert L2.contains((fe(0), fe(0), fe(1), fe(1)))
    assert not L2.contains(e11)


def test_classify_field_dvr(f5):
    v = classify_field_glider(realize_field_element(f5, 2))
    assert v.status == "irreducible" and v.element.shift == 2


def test_classify_field_gap_reducible(f5):
    gap = Glider(f5, "field", [f5.level(0), f5.level(-2)],
                 FiltrationTail())
    v = classify_field_glider(gap)
    assert v.status == "reducible"
    assert classify_subglider(v.witness,
                              shift(gap, v.witness_shift)).kind == \
        "nontrivial"


def test_classify_field_pq(f23):
    v = classify_field_glider(negative_part(f23))
    assert v.status == "reducible"
    assert [v.witness.level(n).exps for n in range(3)] == \
        [(1, 0), (2, 1), (3, 2)]


def test_enumerate_field(f5, f23, f_mod):
    assert [e.shift for e in enumerate_gbs_field(f5, (-1, 1))] == [-1, 0, 1]
    assert enumerate_gbs_field(f23, (-2, 2)) == []
    assert len(enumerate_gbs_field(f_mod, (-1, 1))) == 3


def test_shift_equivariance_of_classification(f5):
    g = realize_field_element(f5, 2)
    v = classify_field_glider(scalar_shift(g, fe(5)))
    assert v.status == "irreducible" and v.element.shift == 1


def test_classify_csa_examples(fa_m2):
    p10 = BsPoint([fe(1), fe(0)])
    v = classify_csa_glider(realize_csa_element(fa_m2, p10, 0))
    assert v.status == "irreducible"
    assert v.element.point == p10 and v.element.shift == 0


def test_classify_csa_negative_part_reducible(fa_m2):
    neg = Glider(fa_m2, "algebra", [fa_m2.level(0)], FiltrationTail(),
                 alg=fa_m2.alg)
    v = classify_csa_glider(neg)
    assert v.status == "reducible"
    assert v.witness.level(0).rank == 2  # a column subchain


def test_classify_csa_gap_reducible(fa_m2):
    p10 = BsPoint([fe(1), fe(0)])
    g = realize_csa_element(fa_m2, p10, 0)
    gap = Glider(fa_m2, "algebra", [g.level(0), g.level(2)],
                 FiltrationTail(), alg=fa_m2.alg)
    v = classify_csa_glider(gap)
    assert v.status == "reducible" and v.witness_shift == 0
    assert v.witness.level(0) == g.level(1)


def test_enumerate_csa(fa_m2):
    pts = [BsPoint([fe(1), fe(0)]), BsPoint([fe(0), fe(1)])]
    els = enumerate_gbs_csa(fa_m2, (0, 1), pts)
    assert len(els) == 4
    assert els[0].point.sort_key() <= els[-1].point.sort_key()


def test_negative_part_witness_errors(f5):
    one = canonicalize(f5.base_ring, 1, [[fe(1)]])
    fa1 = AlgebraFiltration(matrix_algebra(1), f5, one, mode="induced")
    with pytest.raises(UnsupportedError):
        find_negative_part_witness(fa1)


def test_ramified_scalar_step_reducible():
    """The golden case over Q(i): M_2 over the (1+i)-adic base with the
    doubled scalar step; column chains have non-simple level quotients."""
    w = gauss_prime("1+i")
    fr = scaled_valuation_filtration(w, 2)
    ring = fr.base_ring
    g = GAUSS_FIELD
    rows = [[g.one() if i == j else g.zero() for j in range(4)]
            for i in range(4)]
    b = canonicalize(ring, 4, rows)
    fa = AlgebraFiltration(matrix_algebra(2), fr, b, mode="induced")
    p = BsPoint([g.one(), g.zero()])
    v = classify_csa_glider(realize_csa_element(fa, p, 0))
    assert v.status == "reducible"
    assert v.rule == "csa.ramification-one"
    # witness top level is (1+i) B v
    pi = g.parse("1+i")
    assert v.witness.level(0).rows[0][0] == pi


def test_quaternion_out_of_class(f5):
    # division-algebra inputs classify out-of-class for point extraction
    from gliderbs.orders import builtin_hurwitz2
    from gliderbs.filtration import valuation_filtration

    hur = builtin_hurwitz2()
    f2 = valuation_filtration(padic(2))
    fa = AlgebraFiltration(quaternion_algebra(-1, -1), f2, hur.lattice,
                           mode="induced")
    neg = Glider(fa, "algebra", [fa.level(0)], FiltrationTail(),
                 alg=fa.alg)
    v = classify_csa_glider(neg)
    assert v.status == "out-of-class"
    assert v.rule == "csa.unsupported-algebra"


def test_zero_hitting_chains_reducible(f5, fa_m2):
    from gliderbs.glider import ZeroAfter

    z = Glider(f5, "field", [f5.level(0), f5.level(-1)], ZeroAfter())
    assert classify_field_glider(z).status == "reducible"
    zc = Glider(fa_m2, "algebra", [fa_m2.level(0)], ZeroAfter(),
                alg=fa_m2.alg)
    v = classify_csa_glider(zc)
    assert v.status == "reducible" and v.rule == "csa.principal"


def test_round_trip_property(fa_m2):
    pts = [BsPoint([fe(1), fe(2)]), BsPoint([fe(3), fe(1)])]
    for el in enumerate_gbs_csa(fa_m2, (-1, 1), pts):
        chain = realize_csa_element(fa_m2, el.point, el.shift)
        v = classify_csa_glider(chain)
        assert v.status == "irreducible" and v.element == el
