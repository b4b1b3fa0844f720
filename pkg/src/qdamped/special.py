"""Jackson q-exponential, q-trigonometric functions and the q-logarithm."""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, TailGuardError
from .qcore import as_q, q_brackets
from .series import DEFAULT_ORDER, QSeries, euler_op

PRODUCT_CUTOFF = 1e-18


def eq_series(lam, q, order=DEFAULT_ORDER):
    """Coefficients lam**n / [n]_q! of e_q(lam t), n = 0..order.

    Built with the ratio recurrence c_n = c_{n-1} lam / [n]_q, which underflows
    quietly to zero where [n]_q! itself would overflow.
    """
    q = as_q(q)
    if order < 0:
        raise DomainError("order must be >= 0")
    brackets = q_brackets(order, q)
    lam = complex(lam)
    c = np.empty(order + 1, dtype=complex)
    c[0] = 1.0
    for n in range(1, order + 1):
        c[n] = c[n - 1] * lam / brackets[n]
    return QSeries(c, q)


@dataclass(frozen=True)
class EqProductEval:
    q: float
    z: complex
    factors_used: int
    value: complex


def _log_tail(a, q, euler=False):
    """sum_{m>=0} log(1 + a q**-m) for |a| < 1, as a power series in a.

    log(1 + a q**-m) summed over m gives sum_k (-1)**(k+1) a**k / (k (1 - q**-k)).
    With ``euler`` the series for t d/dt of that sum is returned instead
    (a is linear in t, so the 1/k drops out).
    """
    lq = math.log1p(q - 1.0)
    total = 0.0 + 0.0j
    power = 1.0 + 0.0j
    for k in range(1, 200):
        power *= -a
        term = -power / (-math.expm1(-k * lq))
        if not euler:
            term /= k
        total += term
        if abs(term) <= 1e-17 * max(abs(total), 1e-300):
            break
    return total


def eq_eval_product(z, q, tol=PRODUCT_CUTOFF, max_factors=10_000):
    """e_q(z) = prod_{n>=0} (1 + (1 - 1/q) q**-n z), valid for q > 1.

    Factors are multiplied until the factor deviation drops below ``tol``;
    the remaining factors are folded in as exp of their summed logarithms.
    For q close to 1 the deviations shrink slowly, so after ``max_factors``
    the loop also stops once the deviation is below 1/2, where the log
    series for the tail still converges quickly.
    """
    q = as_q(q)
    if tol <= 0:
        raise DomainError("tol must be positive")
    z = complex(z)
    a = (1.0 - 1.0 / q) * z
    value = 1.0 + 0.0j
    n = 0
    while abs(a) >= tol and not (n >= max_factors and abs(a) < 0.5):
        value *= 1.0 + a
        a /= q
        n += 1
    value *= cmath.exp(_log_tail(a, q))
    return EqProductEval(q=q, z=z, factors_used=n, value=value)


def eq_value(z, q, order=DEFAULT_ORDER):
    """e_q(z) by the better-conditioned route: series near 0, product beyond |z| = 1."""
    if abs(z) <= 1.0:
        return eq_series(z, q, order)(1.0)
    return eq_eval_product(z, q).value


def eq_euler_product(z, q, tol=PRODUCT_CUTOFF, max_factors=10_000):
    """z e_q'(z), i.e. t d/dt e_q(lam t) at z = lam t, from the product form.

    Each factor 1 + a_n is linear in t, so t d/dt gives
    sum_n a_n prod_{m != n} (1 + a_m); prefix/suffix products keep this
    finite at the zeros of e_q.
    """
    q = as_q(q)
    z = complex(z)
    a = (1.0 - 1.0 / q) * z
    devs = []
    while abs(a) >= tol and not (len(devs) >= max_factors and abs(a) < 0.5):
        devs.append(a)
        a /= q
    tail = cmath.exp(_log_tail(a, q))
    n = len(devs)
    prefix = [1.0 + 0.0j] * (n + 1)
    for i, d in enumerate(devs):
        prefix[i + 1] = prefix[i] * (1.0 + d)
    total = prefix[n] * tail * _log_tail(a, q, euler=True)
    suffix = 1.0 + 0.0j
    for i in range(n - 1, -1, -1):
        total += devs[i] * prefix[i] * suffix * tail
        suffix *= 1.0 + devs[i]
    return total


def eq_euler_value(z, q, order=DEFAULT_ORDER):
    """z e_q'(z) with the same series/product crossover as ``eq_value``."""
    if abs(z) <= 1.0:
        return euler_op(eq_series(z, q, order))(1.0)
    return eq_euler_product(z, q)


def cosq_series(omega, q, order=DEFAULT_ORDER):
    """cos_q(omega t) = Re e_q(i omega t), even powers only."""
    return eq_series(1j * omega, q, order).real


def sinq_series(omega, q, order=DEFAULT_ORDER):
    """sin_q(omega t) = Im e_q(i omega t), odd powers only."""
    return eq_series(1j * omega, q, order).imag


def lnq_eval(x, q, order=None, rel_tol=1e-15):
    """Ln_q(1 - x) = -sum_{l>=1} x**l / [l]_q.

    The series converges for |x| < q.  Successive terms shrink by at least
    |x|/q, so the tail after the last retained term is bounded by
    |term| * rho / (1 - rho) with rho = |x|/q; ``order=None`` picks the
    smallest order meeting ``rel_tol`` under that bound.
    """
    q = as_q(q)
    rho = abs(x) / q
    if rho >= 1.0:
        raise DomainError(f"Ln_q(1-x) series diverges for |x| >= q (x={x!r}, q={q})")
    if x == 0:
        return 0.0 * x
    if order is None:
        # |term_l| <= |x| * rho**(l-1); solve for the tail bound
        order = max(1, math.ceil(math.log(rel_tol * (1.0 - rho) / abs(x)) / math.log(rho)) + 2) if rho > 0 else 1
    if order < 1:
        raise DomainError("order must be >= 1")
    brackets = q_brackets(order, q)
    total = 0.0 * x
    term = 1.0 + 0.0 * x
    for l in range(1, order + 1):
        term = term * x
        total -= term / brackets[l]
    last = abs(term / brackets[order])
    tail = last * rho / (1.0 - rho)
    if tail / (1.0 + abs(total)) > rel_tol:
        raise TailGuardError(
            f"Ln_q order {order} too small at x={x!r}: tail bound {tail:.3g}",
            t=x,
            ratio=tail,
        )
    return total


def eq_zeros(q, omega, count):
    """Positive zeros of e_q(-omega t): t_k = q**(k+1) / ((q-1) omega)."""
    q = as_q(q)
    if omega <= 0:
        raise DomainError("omega must be positive")
    if count < 1:
        raise DomainError("count must be >= 1")
    return [q ** (k + 1) / ((q - 1.0) * omega) for k in range(count)]
