"""Constant-coefficient q-difference equations with repeated roots.

The operator identities

    [t d/dt, D] = -D
    t d/dt D^n = D^n (t d/dt - n)
    t d/dt (w + D)^n = (w + D)^n t d/dt - n (w + D)^(n-1) D

are checked instance by instance on truncated series: each ``*_check``
returns LHS - RHS applied to ``f``, which is the zero series when the
identity holds.  That is exact up to floating point for the given input,
not a proof.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qcore import as_q
from .series import DEFAULT_ORDER, QSeries, ddt, dq, euler_op, evaluate, mul_t, power
from .special import eq_series


def _shift(omega, s):
    """(omega + D) s."""
    return dq(s) + omega * s


def apply_operator(omega, n, f):
    """(D + omega)^n f; the order drops by n."""
    if n < 0:
        raise DomainError("n must be >= 0")
    if f.order < n:
        raise DomainError(f"order {f.order} too small for {n} applications")
    for _ in range(n):
        f = _shift(omega, f)
    return f


def commutator_check(f):
    return euler_op(dq(f)) - dq(euler_op(f)) + dq(f)


def shift_identity_check(n, f):
    if n < 1:
        raise DomainError("n must be >= 1")
    if f.order <= n:
        raise DomainError("order(f) must exceed n")
    lhs = euler_op(power(dq, f, n))
    rhs = power(dq, euler_op(f) - n * f, n)
    return lhs - rhs


def general_identity_check(omega, n, f):
    if n < 1:
        raise DomainError("n must be >= 1")
    lhs = euler_op(apply_operator(omega, n, f))
    rhs = apply_operator(omega, n, euler_op(f)) - n * apply_operator(omega, n - 1, dq(f))
    return lhs - rhs


@dataclass(frozen=True)
class DegenerateFamily:
    omega: complex
    n: int
    q: float
    members: tuple

    def annihilation_norms(self):
        """max |coeff| of (D + omega)^n x_k for each member."""
        return [float(np.max(np.abs(apply_operator(self.omega, self.n, x).coeffs))) for x in self.members]


def degenerate_member(lam, k, q, order):
    """t^k (d/dt)^k e_q(lam t), as an order-``order`` series."""
    base = eq_series(lam, q, order)
    return mul_t(power(ddt, base, k), k)


def degenerate_basis(omega, n, q, order=DEFAULT_ORDER):
    """n solutions x_k = t^k (d/dt)^k e_q(-omega t), k = 0..n-1, of (D + omega)^n x = 0."""
    q = as_q(q)
    if n < 1:
        raise DomainError("n must be >= 1")
    if order < n + 2:
        raise DomainError("order must be >= n + 2")
    members = tuple(degenerate_member(-omega, k, q, order) for k in range(n))
    return DegenerateFamily(omega=omega, n=n, q=q, members=members)


def generalized_wronskian(members, t=0.0):
    """Matrix with entry (j, k) = D_q^j x_k evaluated at t, and its determinant.

    This n x n form extends the 2 x 2 q-Wronskian of the oscillator.
    """
    n = len(members)
    rows = []
    for j in range(n):
        rows.append([evaluate(power(dq, x, j), t) for x in members])
    mat = np.array(rows)
    return mat, np.linalg.det(mat)


@dataclass(frozen=True)
class QDifferenceEquation:
    """sum_k a_k D_q^k x = 0 with constant a_0 .. a_N."""

    a: tuple
    q: float

    def __post_init__(self):
        a = tuple(complex(c) for c in self.a)
        if len(a) < 2:
            raise DomainError("degree must be >= 1")
        if a[-1] == 0:
            raise DomainError("leading coefficient a_N must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "q", as_q(self.q))

    @property
    def degree(self):
        return len(self.a) - 1

    def apply(self, x):
        out = self.a[0] * x
        d = x
        for coef in self.a[1:]:
            d = dq(d)
            out = out + coef * d
        return out

    def characteristic_roots(self):
        """Roots of sum_{k=0}^N a_k lambda^k, a_0 included."""
        return np.roots(self.a[::-1])


def general_solution(roots, coeffs, q, order=DEFAULT_ORDER):
    """sum of c * member over simple roots and degenerate families.

    ``roots`` is a list of (lambda, multiplicity); coefficients are consumed
    in order, one per basis function.
    """
    q = as_q(q)
    total = sum(m for _, m in roots)
    if len(coeffs) != total:
        raise DomainError(f"{len(coeffs)} coefficients for {total} basis functions")
    out = QSeries(np.zeros(order + 1), q)
    i = 0
    for lam, mult in roots:
        if mult < 1:
            raise DomainError("multiplicity must be >= 1")
        for k in range(mult):
            out = out + coeffs[i] * degenerate_member(lam, k, q, order)
            i += 1
    return out
