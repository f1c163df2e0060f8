import pytest

from gliderbs.fields import QQ_FIELD, padic
from gliderbs.filtration import (AlgebraFiltration, FieldFiltration,
                                 StepFunction, valuation_filtration)
from gliderbs.lattice import canonicalize, matrix_algebra
from gliderbs.orders import builtin_hurwitz2, builtin_mnr


@pytest.fixture(scope="session")
def q():
    return QQ_FIELD


@pytest.fixture(scope="session")
def f5():
    """The 5-adic valuation filtration on Q."""
    return valuation_filtration(padic(5))


@pytest.fixture(scope="session")
def r5(f5):
    return f5.base_ring


@pytest.fixture(scope="session")
def m2():
    return matrix_algebra(2)


@pytest.fixture(scope="session")
def b_m2(r5, m2, q):
    fe = q.from_int
    rows = [[fe(1 if i == j else 0) for j in range(4)] for i in range(4)]
    return canonicalize(r5, 4, rows)


@pytest.fixture(scope="session")
def fa_m2(f5, b_m2, m2):
    """M_2 over Z_(5), induced filtration."""
    return AlgebraFiltration(m2, f5, b_m2, mode="induced")


@pytest.fixture(scope="session")
def f23():
    """The two-prime localization filtration at (2, 3)."""
    return FieldFiltration(
        QQ_FIELD, (padic(2), padic(3)),
        StepFunction((-1, 1), {-1: (-1, -1), 0: (0, 0), 1: (1, 1)},
                     (1, (1, 1)), (1, (1, 1))))


@pytest.fixture(scope="session")
def f_mod():
    """Non-strong filtration: valuation positive part, deeper negatives
    R > M^2 > M^3 > ..."""
    return FieldFiltration(
        QQ_FIELD, (padic(5),),
        StepFunction((-1, 1), {-1: (-2,), 0: (0,), 1: (1,)},
                     (1, (1,)), (1, (1,))))


@pytest.fixture(scope="session")
def hurwitz():
    return builtin_hurwitz2()


@pytest.fixture(scope="session")
def m2_order(r5):
    return builtin_mnr(2, r5)
