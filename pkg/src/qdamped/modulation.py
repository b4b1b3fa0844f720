"""q-periodic modulation A(t) = sin(2 pi ln t / ln q) and self-similar windows."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .output import TimeSeriesOutput
from .qcore import as_q
from .series import QSeries

CONSTANT, QPERIODIC_SIN = "constant", "qperiodic_sin"


@dataclass(frozen=True)
class ModulationSpec:
    kind: str = CONSTANT
    amplitude: float = 1.0
    q: float = 2.0

    def __post_init__(self):
        if self.kind not in (CONSTANT, QPERIODIC_SIN):
            raise DomainError(f"unknown modulation kind {self.kind!r}")
        object.__setattr__(self, "q", as_q(self.q))


def qperiodic_sin(t, q):
    """sin(2 pi ln t / ln q); satisfies A(q t) = A(t)."""
    q = as_q(q)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError("q-periodic modulation is defined for t > 0 only")
    phase = np.log(t) / math.log(q)
    # reduce to one period before scaling by 2 pi
    phase = phase - np.round(phase)
    out = np.sin(2.0 * math.pi * phase)
    return out.item() if out.ndim == 0 else out


def verify_qperiodic(f, t, q):
    """f(qt) - f(t); zero for a q-periodic f."""
    q = as_q(q)
    if t == 0:
        raise DomainError("t must be nonzero")
    return f(q * t) - f(t)


def modulate(x, spec):
    """t -> A(t) x(t) as a callable.

    ``x`` is a QSeries (evaluated with its tail guard) or any function of t.
    """
    if isinstance(x, QSeries) and x.q != spec.q:
        raise ValueError("modulation and series use different q")
    if spec.kind == CONSTANT:
        return lambda t: spec.amplitude * x(t)
    return lambda t: spec.amplitude * qperiodic_sin(t, spec.q) * x(t)


def self_similar_windows(x_mod, scales, points, label="x"):
    """Sample ``x_mod`` on (0, s] for each scale s, ``points`` samples each.

    Grids are s/points, 2 s/points, ..., s; t = 0 is excluded.
    """
    if points < 2:
        raise DomainError("points must be >= 2")
    out = []
    for s in scales:
        if not s > 0:
            raise DomainError("scales must be positive")
        t = s * (np.arange(1, points + 1) / points)
        out.append(TimeSeriesOutput(t=t, x=np.asarray(x_mod(t)), label=f"{label}@{s!r}"))
    return out
