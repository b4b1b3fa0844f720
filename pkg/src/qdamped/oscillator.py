"""The q-damped oscillator D_q^2 x + Gamma D_q x + omega^2 x = 0.

Roots and regime classification, series solution bases for the under-,
over- and critically damped cases, the q-Wronskian, the near-critical
perturbation limit, the classical (q = 1) reference solution and the
first-order equation gamma D_q x + k x = 0.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError
from .qcore import as_q, q_derivative_at
from .series import DEFAULT_ORDER, QSeries, dq, euler_op, evaluate
from .special import eq_eval_product, eq_euler_value, eq_series, eq_value, lnq_eval

CRITICAL_TOL = 1e-9

UNDER, OVER, CRITICAL = "under", "over", "critical"


@dataclass(frozen=True)
class ClassicalSpec:
    """m x'' + gamma x' + k x = 0."""

    m: float
    gamma: float
    k: float

    def __post_init__(self):
        if self.m <= 0 or self.k <= 0 or self.gamma < 0:
            raise DomainError(f"need m > 0, k > 0, gamma >= 0; got {self}")

    def to_q(self, q):
        return OscillatorSpec(Gamma=self.gamma / self.m, omega=math.sqrt(self.k / self.m), q=q)


@dataclass(frozen=True)
class OscillatorSpec:
    Gamma: float
    omega: float
    q: float

    def __post_init__(self):
        if not self.omega > 0 or self.Gamma < 0:
            raise DomainError(f"need omega > 0 and Gamma >= 0; got Gamma={self.Gamma}, omega={self.omega}")
        object.__setattr__(self, "q", as_q(self.q))

    @classmethod
    def from_classical(cls, spec, q):
        return spec.to_q(q)


@dataclass(frozen=True)
class RootPair:
    lambda1: complex
    lambda2: complex
    multiplicity: int
    regime: str
    Omega: Optional[float] = None


@dataclass(frozen=True)
class SolutionBasis:
    spec: OscillatorSpec
    x1: QSeries
    x2: QSeries
    labels: tuple
    closed_form_radius: Optional[float] = None
    A: complex = 1.0
    B: complex = 1.0
    roots: Optional[RootPair] = None

    def combined(self, A=None, B=None):
        A = self.A if A is None else A
        B = self.B if B is None else B
        return A * self.x1 + B * self.x2

    def values(self, t, A=None, B=None):
        """A x1(t) + B x2(t) evaluated pointwise through the special functions.

        Uses the product form of e_q where |lambda t| > 1, which avoids the
        cancellation the truncated series suffers at large negative arguments.
        """
        A = self.A if A is None else A
        B = self.B if B is None else B
        t_arr = np.asarray(t, dtype=float)
        out = np.array([A * v1 + B * v2 for v1, v2 in map(self._pair, t_arr.ravel())])
        if not np.any(out.imag):
            out = out.real
        out = out.reshape(t_arr.shape)
        return out.item() if out.ndim == 0 else out

    def _pair(self, t):
        r, q, order = self.roots, self.spec.q, DEFAULT_ORDER
        if r.regime == UNDER:
            e = eq_value(r.lambda1 * t, q, order)
            return e.real, e.imag
        if r.regime == OVER:
            return eq_value(r.lambda1.real * t, q, order).real, eq_value(r.lambda2.real * t, q, order).real
        z = -self.spec.omega * t
        return eq_value(z, q, order).real, eq_euler_value(z, q, order).real


def classify(Gamma, omega, tol=CRITICAL_TOL):
    disc = Gamma * Gamma - 4.0 * omega * omega
    if abs(disc) <= tol * max(Gamma * Gamma, 4.0 * omega * omega):
        return CRITICAL
    return UNDER if disc < 0 else OVER


def characteristic_roots(spec, tol=CRITICAL_TOL):
    """Roots of lambda^2 + Gamma lambda + omega^2 = 0 with regime tag."""
    if tol <= 0:
        raise DomainError("tol must be positive")
    G, w = spec.Gamma, spec.omega
    regime = classify(G, w, tol)
    if regime == CRITICAL:
        lam = complex(-G / 2.0)
        return RootPair(lam, lam, 2, CRITICAL)
    if regime == UNDER:
        Omega = math.sqrt(w * w - G * G / 4.0)
        return RootPair(complex(-G / 2.0, Omega), complex(-G / 2.0, -Omega), 1, UNDER, Omega)
    # larger-magnitude root first, the other from the product w^2
    big = -(G + math.sqrt(G * G - 4.0 * w * w)) / 2.0
    small = w * w / big
    return RootPair(complex(small), complex(big), 1, OVER)


def build_basis(spec, order=DEFAULT_ORDER, A=1.0, B=1.0):
    """Real series basis for the regime of ``spec``.

    under:    Re and Im of e_q((-Gamma/2 + i Omega) t)
    over:     e_q(lambda1 t), e_q(lambda2 t)
    critical: e_q(-omega t) and t d/dt e_q(-omega t)
    """
    if order < 2:
        raise DomainError("order must be >= 2")
    roots = characteristic_roots(spec)
    q = spec.q
    if roots.regime == UNDER:
        e = eq_series(roots.lambda1, q, order)
        return SolutionBasis(spec, e.real, e.imag, ("Re e_q(lambda1 t)", "Im e_q(lambda1 t)"), None, A, B, roots)
    if roots.regime == OVER:
        x1 = eq_series(roots.lambda1.real, q, order)
        x2 = eq_series(roots.lambda2.real, q, order)
        return SolutionBasis(spec, x1, x2, ("e_q(lambda1 t)", "e_q(lambda2 t)"), None, A, B, roots)
    x1 = eq_series(-spec.omega, q, order)
    return SolutionBasis(
        spec,
        x1,
        euler_op(x1),
        ("e_q(-omega t)", "t d/dt e_q(-omega t)"),
        critical_radius(spec),
        A,
        B,
        roots,
    )


def critical_radius(spec):
    """Disk |t| < q / ((q-1) omega) where the Ln_q form of x2 converges."""
    return spec.q / ((spec.q - 1.0) * spec.omega)


def residual(spec, x):
    """D_q^2 x + Gamma D_q x + omega^2 x, truncated to order(x) - 2."""
    if x.q != spec.q:
        raise ValueError("series and spec use different q")
    d1 = dq(x)
    return dq(d1) + spec.Gamma * d1 + spec.omega ** 2 * x


def sampled_residual(spec, f, t):
    """Same left-hand side, with D_q taken as the difference quotient on f."""
    q = spec.q

    def d1(s):
        return q_derivative_at(f, s, q)

    return q_derivative_at(d1, t, q) + spec.Gamma * d1(t) + spec.omega ** 2 * f(t)


def x2_closed_form(t, spec, order=None):
    """t d/dt e_q(-omega t) = Ln_q(1 - (q-1) omega t) e_q(-omega t) / (q-1).

    Only valid inside ``critical_radius(spec)``.
    """
    q, w = spec.q, spec.omega
    radius = critical_radius(spec)
    if not abs(t) < radius:
        raise DomainError(f"|t|={abs(t)} outside the Ln_q radius {radius}")
    ln = lnq_eval((q - 1.0) * w * t, q, order)
    return ln * eq_eval_product(-w * t, q).value.real / (q - 1.0)


def q_wronskian(basis, t):
    """x1 D_q x2 - x2 D_q x1 from the series."""
    x1, x2 = basis.x1, basis.x2
    v1, v2 = evaluate(x1, t), evaluate(x2, t)
    d1, d2 = evaluate(dq(x1), t), evaluate(dq(x2), t)
    return v1 * d2 - v2 * d1


def wronskian_closed_form(spec, t):
    """-omega e_q(-omega t)^2 for the critical pair (x1, t d/dt x1).

    From D_q t d/dt = t d/dt D_q + D_q one gets D_q x2 = -omega (x1 + x2),
    after which the x1 x2 terms cancel.  The product form of e_q is used so
    this stays independent of the series.
    """
    if classify(spec.Gamma, spec.omega) != CRITICAL:
        raise DomainError("closed-form Wronskian is for the critical regime only")
    e = eq_eval_product(-spec.omega * t, spec.q).value.real
    return -spec.omega * e * e


def perturbation_check(spec, epsilon, t, order=DEFAULT_ORDER):
    """Near-critical limit Gamma/2 = omega + epsilon.

    Returns (difference quotient in lambda, -x2(t)/omega).  The first entry is
    [e_q(lambda1 t) - e_q(lambda2 t)] / (2 sqrt(2 omega epsilon)) using the
    exact roots of the perturbed equation; it tends to d/dlambda e_q(lambda t)
    at lambda = -omega, which equals -x2(t)/omega.
    """
    if not epsilon > 0:
        raise DomainError("epsilon must be positive")
    w, q = spec.omega, spec.q
    shifted = w + epsilon
    root = math.sqrt(shifted * shifted - w * w)
    lam1, lam2 = -shifted + root, -shifted - root
    e1 = evaluate(eq_series(lam1, q, order), t)
    e2 = evaluate(eq_series(lam2, q, order), t)
    fd = (e1 - e2) / (2.0 * math.sqrt(2.0 * w * epsilon))
    x2 = evaluate(euler_op(eq_series(-w, q, order)), t)
    return fd, -x2 / w


def classical_solution(spec, A=1.0, B=1.0, tol=CRITICAL_TOL) -> Callable:
    """Closed-form solution of m x'' + gamma x' + k x = 0 as a function of t."""
    m, g, k = spec.m, spec.gamma, spec.k
    decay = g / (2.0 * m)
    disc = g * g - 4.0 * m * k
    if abs(disc) <= tol * max(g * g, 4.0 * m * k):
        return lambda t: (A + B * np.asarray(t)) * np.exp(-decay * np.asarray(t))
    if disc < 0:
        w = math.sqrt(k / m - decay * decay)

        def under(t):
            t = np.asarray(t)
            return np.exp(-decay * t) * (A * np.cos(w * t) + B * np.sin(w * t))

        return under
    s = math.sqrt(disc) / (2.0 * m)
    return lambda t: A * np.exp((-decay + s) * np.asarray(t)) + B * np.exp((-decay - s) * np.asarray(t))


def first_order_solution(gamma, k, x0, q, order=DEFAULT_ORDER):
    """x0 e_q(-k t / gamma), the solution of gamma D_q x + k x = 0."""
    if not gamma > 0:
        raise DomainError("gamma must be positive")
    return x0 * eq_series(-k / gamma, q, order)


def first_order_residual(gamma, k, x):
    return gamma * dq(x) + k * x
