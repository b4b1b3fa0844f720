import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdamped import DomainError, QSeries, TailGuardError, ddt, dq, euler_op, evaluate, mul, mul_t
from qdamped.qcore import q_bracket
from qdamped.special import eq_eval_product, eq_series

from conftest import random_series


def coeffs(s):
    return s.coeffs.tolist()


def test_dq_of_t_squared():
    assert coeffs(dq(QSeries([0, 0, 1], 2.0))) == [0, 3]


def test_dq_of_constant():
    out = dq(QSeries([5], 3.0))
    assert out.order == 0 and coeffs(out) == [0]


def test_dq_maps_exponential_to_minus_itself():
    e = eq_series(-1.0, 2.0, 30)
    oracle = -1 * eq_series(-1.0, 2.0, 29)
    got = dq(e)
    assert got.order == 29
    np.testing.assert_allclose(got.coeffs, oracle.coeffs, rtol=1e-13, atol=0)


def test_euler_op_examples():
    assert coeffs(euler_op(QSeries([1, 1, 1], 2.0))) == [0, 1, 2]
    assert coeffs(euler_op(QSeries([7], 2.0))) == [0]
    s = QSeries([1, -2, 3, 0.5], 2.0)
    assert coeffs(euler_op(euler_op(s))) == [n * n * c for n, c in enumerate(coeffs(s))]


def test_ddt_examples():
    assert coeffs(ddt(QSeries([0, 0, 1], 2.0))) == [0, 2]
    assert coeffs(ddt(QSeries([3], 2.0))) == [0]


def test_ddt_t_commutator_is_identity():
    s = QSeries([0.3, -1.0, 2.5, 4.0, -0.25], 2.0)
    diff = ddt(mul_t(s)) - mul_t(ddt(s))
    assert diff.order == s.order
    np.testing.assert_array_equal(diff.coeffs, s.coeffs)


def test_mul_examples():
    assert coeffs(mul(QSeries([1, 1], 2.0), QSeries([1, -1], 2.0))) == [1, 0]
    s = QSeries([1, 2, 3], 2.0)
    assert coeffs(mul(s, QSeries([1, 0, 0], 2.0))) == coeffs(s)


def test_mul_matches_brute_force_convolution():
    e = eq_series(-1.0, 2.0, 25)
    c = e.coeffs
    oracle = [sum(c[i] * c[n - i] for i in range(n + 1)) for n in range(26)]
    np.testing.assert_allclose(mul(e, e).coeffs, oracle, rtol=1e-14, atol=1e-300)


def test_mul_rejects_different_q():
    with pytest.raises(ValueError):
        mul(QSeries([1], 2.0), QSeries([1], 3.0))


def test_eval_examples():
    assert evaluate(eq_series(-3.0, 2.0, 10), 0.0) == 1.0
    # a bare polynomial is not a truncated tail: loosen the guard
    assert evaluate(QSeries([1, 2, 3], 2.0), 1.0, rel_tol=1.0) == 6.0


def test_eval_against_product():
    got = evaluate(eq_series(-1.0, 2.0, 40), 1.0, rel_tol=1e-10)
    assert got == pytest.approx(eq_eval_product(-1.0, 2.0).value.real, rel=1e-10)


def test_eval_tail_guard_fires_when_order_too_small():
    with pytest.raises(TailGuardError):
        evaluate(eq_series(-1.0, 1.1, 8), 5.0)


def test_eval_tail_guard_sees_parity_sparse_series():
    cos_like = eq_series(1j, 1.1, 9).real  # c_9 == 0
    with pytest.raises(TailGuardError):
        evaluate(cos_like, 6.0)


def test_eval_vectorised_matches_scalar():
    s = eq_series(-2.0, 2.0, 64)
    ts = np.linspace(0, 3, 7)
    np.testing.assert_array_equal(evaluate(s, ts), [evaluate(s, t) for t in ts])


def test_eval_rejects_nonpositive_tolerance():
    with pytest.raises(DomainError):
        evaluate(QSeries([1], 2.0), 1.0, rel_tol=0)


def test_series_is_immutable():
    s = QSeries([1, 2], 2.0)
    with pytest.raises(ValueError):
        s.coeffs[0] = 3


def test_dq_tends_to_ddt_as_q_to_one():
    rng = np.random.default_rng(0)
    for _ in range(20):
        s = random_series(rng, 1 + 1e-9, 20)
        assert np.max(np.abs(dq(s).coeffs - ddt(s).coeffs)) <= 1e-6


@pytest.mark.parametrize("q", [1.1, 2.0, 5.0])
def test_euler_dq_commutator_is_minus_dq(q):
    rng = np.random.default_rng(1)
    s = random_series(rng, q, 20, complex_=True)
    lhs = euler_op(dq(s)) - dq(euler_op(s))
    rhs = -1 * dq(s)
    np.testing.assert_allclose(lhs.coeffs, rhs.coeffs, rtol=1e-12, atol=0)


coef = st.floats(min_value=-1, max_value=1)


@settings(max_examples=50)
@given(
    st.lists(coef, min_size=3, max_size=15),
    st.lists(coef, min_size=3, max_size=15),
    coef,
    coef,
)
def test_operators_are_linear(a, b, alpha, beta):
    n = min(len(a), len(b))
    sa, sb = QSeries(a[:n], 2.0), QSeries(b[:n], 2.0)
    combo = alpha * sa + beta * sb
    for op in (dq, euler_op, ddt):
        np.testing.assert_allclose(
            op(combo).coeffs, (alpha * op(sa) + beta * op(sb)).coeffs, rtol=1e-12, atol=1e-12
        )


def test_dq_coefficients_are_brackets():
    s = QSeries(np.ones(8), 3.0)
    assert coeffs(dq(s)) == [q_bracket(n, 3.0) for n in range(1, 8)]
