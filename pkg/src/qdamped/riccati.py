"""q-Riccati equation D_q y + y(qt) y(t) + Gamma y + omega^2 = 0.

Any solution x of the q-damped oscillator gives a solution y = D_q x / x.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .qcore import as_q, q_derivative_at
from .series import dq, evaluate
from .special import eq_zeros

ZERO_THRESHOLD = 1e-8


@dataclass(frozen=True)
class RiccatiSample:
    t: float
    y: float
    residual: float


def _eq_profile_rate(x):
    """lam if x is c_0 e_q(lam t) with real lam, else None."""
    c = x.coeffs
    if x.order < 2 or c[0] == 0:
        return None
    lam = c[1] / c[0]
    if lam.imag != 0:
        return None
    guess = c[1] * lam / (1.0 + x.q)
    if not np.isclose(c[2], guess, rtol=1e-12, atol=0):
        return None
    return lam.real


def to_riccati(x, t, scale=1.0):
    """y(t) = D_q x(t) / x(t) from the series.

    Raises DomainError where |x(t)| <= 1e-8 (1 + scale); ``scale`` is the
    magnitude of x over the grid being sampled.
    """
    xv = evaluate(x, t)
    if abs(xv) <= ZERO_THRESHOLD * (1.0 + scale):
        msg = f"x({t}) = {xv:.3g} is too close to zero for y = D_q x / x"
        lam = _eq_profile_rate(x)
        if lam is not None and lam < 0 and t > 0:
            zeros = eq_zeros(x.q, -lam, 64)
            nearest = min(zeros, key=lambda z: abs(z - t))
            msg += f"; nearest zero of e_q is t={float(nearest)!r}"
        raise DomainError(msg)
    return evaluate(dq(x), t) / xv


def riccati_residual(y, t, Gamma, omega, q):
    """Left side of the q-Riccati equation with D_q y taken by difference quotient."""
    q = as_q(q)
    if t == 0:
        raise DomainError("q-Riccati residual is sampled with D_q and needs t != 0")
    return q_derivative_at(y, t, q) + y(q * t) * y(t) + Gamma * y(t) + omega ** 2


def riccati_samples(x, ts, Gamma, omega, exclusion=1e-2):
    """Sample y = D_q x / x and its residual on ``ts``.

    Points where t or qt lies within ``exclusion`` of a sign
    change of x are skipped.  Returns the list of samples kept.
    """
    q = x.q
    ts = np.asarray(ts, dtype=float)
    stencil = np.concatenate([ts, q * ts])
    scale = float(np.max(np.abs(evaluate(x, stencil))))
    zeros = _sign_changes(x, 0.0, float(np.max(stencil)) * 1.01)

    def y(s):
        return to_riccati(x, s, scale)

    out = []
    for t in ts:
        if t == 0:
            continue
        if any(abs(p - z) < exclusion for z in zeros for p in (t, q * t)):
            continue
        out.append(RiccatiSample(float(t), float(np.real(y(t))), float(np.real(riccati_residual(y, t, Gamma, omega, q)))))
    return out


def _sign_changes(x, t0, t1, samples=4000):
    grid = np.linspace(t0, t1, samples)
    vals = np.real(evaluate(x, grid))
    idx = np.flatnonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) <= 0)
    roots = []
    for i in idx:
        a, b = grid[i], grid[i + 1]
        fa = np.real(evaluate(x, a))
        for _ in range(60):
            mid = 0.5 * (a + b)
            fm = np.real(evaluate(x, mid))
            if fa * fm <= 0:
                b = mid
            else:
                a, fa = mid, fm
        roots.append(0.5 * (a + b))
    return roots
