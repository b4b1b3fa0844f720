"""Truncated power series with exact coefficient-wise operators.

A ``QSeries`` stores c_0 ... c_N of sum c_n t**n together with the q it was
built under.  Every operator here (Jackson derivative, Euler operator t d/dt,
ordinary derivative, multiplication) acts on the coefficient list, so operator
identities can be checked without sampling.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, TailGuardError
from .qcore import as_q, q_brackets

DEFAULT_ORDER = 64


@dataclass(frozen=True, eq=False)
class QSeries:
    coeffs: np.ndarray
    q: float

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty 1-d sequence")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "q", as_q(self.q))

    @property
    def order(self):
        return self.coeffs.size - 1

    @property
    def is_real(self):
        return not np.any(self.coeffs.imag)

    @property
    def real(self):
        return QSeries(self.coeffs.real, self.q)

    @property
    def imag(self):
        return QSeries(self.coeffs.imag, self.q)

    def truncate(self, order):
        if order < 0:
            raise ValueError("order must be >= 0")
        return QSeries(self.coeffs[: order + 1], self.q)

    def _check_q(self, other):
        if other.q != self.q:
            raise ValueError(f"series built under different q ({self.q} vs {other.q})")

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        self._check_q(other)
        n = min(self.order, other.order) + 1
        return QSeries(self.coeffs[:n] + other.coeffs[:n], self.q)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QSeries(-self.coeffs, self.q)

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return mul(self, other)
        return QSeries(self.coeffs * complex(other), self.q)

    def __rmul__(self, other):
        return QSeries(self.coeffs * complex(other), self.q)

    def __repr__(self):
        return f"QSeries(order={self.order}, q={self.q}, coeffs[:4]={self.coeffs[:4]!r})"

    def __call__(self, t, rel_tol=1e-12):
        return evaluate(self, t, rel_tol)


def zero(q, order=0):
    return QSeries(np.zeros(order + 1), q)


def monomial(n, q, order=None):
    """The series t**n, truncated at ``order`` (default n)."""
    order = n if order is None else order
    c = np.zeros(order + 1)
    if n <= order:
        c[n] = 1.0
    return QSeries(c, q)


def dq(s):
    """Jackson derivative: c_n -> [n]_q c_n, moved to degree n-1."""
    if s.order == 0:
        return zero(s.q)
    brackets = np.array(q_brackets(s.order, s.q)[1:])
    return QSeries(brackets * s.coeffs[1:], s.q)


def euler_op(s):
    """t d/dt: c_n -> n c_n, same order."""
    return QSeries(np.arange(s.order + 1) * s.coeffs, s.q)


def ddt(s):
    """Ordinary derivative: c_n -> n c_n at degree n-1."""
    if s.order == 0:
        return zero(s.q)
    return QSeries(np.arange(1, s.order + 1) * s.coeffs[1:], s.q)


def mul_t(s, k=1):
    """Multiply by t**k.  The order grows by k; no information is invented."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return QSeries(np.concatenate([np.zeros(k), s.coeffs]), s.q)


def mul(a, b):
    """Cauchy product truncated at min(order_a, order_b)."""
    a._check_q(b)
    n = min(a.order, b.order) + 1
    return QSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n], a.q)


def power(op, s, n):
    for _ in range(n):
        s = op(s)
    return s


def evaluate(s, t, rel_tol=1e-12):
    """Horner evaluation with a truncation guard.

    The guard compares the last retained terms against the partial sum,
    |c_N t**N| / (1 + |sum|), and raises TailGuardError above ``rel_tol``.
    The last two terms are used so that series with only even or only odd
    powers are still guarded.  ``t`` may be a scalar or an array; the result
    is real when every coefficient is real.
    """
    if rel_tol <= 0:
        raise DomainError("rel_tol must be positive")
    c = s.coeffs if not s.is_real else s.coeffs.real
    t_arr = np.asarray(t, dtype=float if np.isrealobj(t) else complex)
    acc = np.zeros(t_arr.shape, dtype=c.dtype if np.isrealobj(t_arr) else complex) + c[-1]
    for coef in c[-2::-1]:
        acc = acc * t_arr + coef
    n = s.order
    last = np.abs(c[n]) * np.abs(t_arr) ** n
    if n >= 1:
        last = np.maximum(last, np.abs(c[n - 1]) * np.abs(t_arr) ** (n - 1))
    ratio = last / (1.0 + np.abs(acc))
    bad = ~(ratio <= rel_tol)
    if np.any(bad):
        idx = np.flatnonzero(np.ravel(bad))[0]
        t_bad = np.ravel(t_arr)[idx]
        r_bad = np.ravel(ratio)[idx]
        raise TailGuardError(
            f"order {n} is too small at t={t_bad!r}: tail ratio {r_bad:.3g} > {rel_tol:g}",
            t=t_bad,
            ratio=r_bad,
        )
    if acc.ndim == 0:
        return acc.item()
    return acc


def max_abs(s):
    return float(np.max(np.abs(s.coeffs)))
