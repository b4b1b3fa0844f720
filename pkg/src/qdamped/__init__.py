"""Jackson q-calculus toolkit for the q-damped harmonic oscillator."""

from .errors import DomainError, TailGuardError
from .qcore import QParam, q_bracket, q_derivative_at, q_factorial
from .series import QSeries, ddt, dq, euler_op, evaluate, mul, mul_t
from .special import (
    EqProductEval,
    cosq_series,
    eq_eval_product,
    eq_series,
    eq_zeros,
    lnq_eval,
    sinq_series,
)

__all__ = [
    "DomainError",
    "TailGuardError",
    "QParam",
    "q_bracket",
    "q_factorial",
    "q_derivative_at",
    "QSeries",
    "dq",
    "euler_op",
    "ddt",
    "mul",
    "mul_t",
    "evaluate",
    "EqProductEval",
    "eq_series",
    "eq_eval_product",
    "cosq_series",
    "sinq_series",
    "lnq_eval",
    "eq_zeros",
]
