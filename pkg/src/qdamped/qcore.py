"""q-arithmetic primitives and the sampled Jackson q-derivative."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class QParam:
    """Deformation parameter, restricted to q > 1."""

    q: float

    def __post_init__(self):
        q = float(self.q)
        if not math.isfinite(q) or q <= 1.0:
            raise DomainError(f"q-operations need q > 1, got q={self.q!r}")
        object.__setattr__(self, "q", q)

    def __float__(self):
        return self.q


def as_q(q):
    """Validate ``q`` (float or QParam) and return it as a float."""
    if isinstance(q, QParam):
        return q.q
    return QParam(q).q


def q_bracket(n, q):
    """Return [n]_q = 1 + q + ... + q**(n-1), summed term by term."""
    q = as_q(q)
    if n < 0:
        raise DomainError(f"q_bracket needs n >= 0, got {n}")
    total = 0.0
    power = 1.0
    for _ in range(n):
        total += power
        power *= q
    return total


def q_brackets(n_max, q):
    """List of [0]_q ... [n_max]_q built with the recurrence [n] = 1 + q[n-1]."""
    q = as_q(q)
    out = [0.0]
    for _ in range(n_max):
        out.append(1.0 + q * out[-1])
    return out


def q_factorial(n, q):
    """Return [n]_q! = [1]_q [2]_q ... [n]_q.

    Raises OverflowError instead of returning inf.
    """
    q = as_q(q)
    if n < 0:
        raise DomainError(f"q_factorial needs n >= 0, got {n}")
    result = 1.0
    for k in range(1, n + 1):
        result *= q_bracket(k, q)
        if math.isinf(result):
            raise OverflowError(f"[{n}]_q! exceeds float range at k={k}, q={q}")
    return result


def q_derivative_at(f, t, q):
    """Jackson difference quotient (f(qt) - f(t)) / ((q - 1) t).

    The quotient is singular at t = 0; use ``series.dq`` there.  ``t`` may be
    an array when ``f`` accepts one.
    """
    q = as_q(q)
    if np.any(np.asarray(t) == 0):
        raise DomainError("sampled q-derivative is undefined at t=0; use series.dq")
    return (f(q * t) - f(t)) / ((q - 1.0) * t)
