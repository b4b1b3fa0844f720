"""Command-line entry point: ``qdamped <command> [options]``.

Exit status: 0 success, 1 a verification bound was exceeded, 2 domain error,
3 truncation (tail-guard) failure.
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import degenerate, oscillator, riccati
from .errors import DomainError, TailGuardError
from .modulation import QPERIODIC_SIN, ModulationSpec, modulate, self_similar_windows
from .output import TimeSeriesOutput, to_csv
from .series import DEFAULT_ORDER, evaluate, max_abs
from .special import eq_zeros

COMMANDS = ("roots", "solve", "verify", "zeros", "degenerate", "riccati", "windows", "figures")
VERIFY_BOUND = 1e-8


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: float = 2.0
    Gamma: float = 2.0
    omega: float = 1.0
    A: complex = 1.0
    B: complex = 1.0
    t0: float = 0.0
    t1: float = 10.0
    steps: int = 1000
    order: int = DEFAULT_ORDER
    modulation: str = "off"
    output: str = None
    n: int = 3
    count: int = 5
    scales: tuple = (0.5, 0.05)
    points: int = 1000

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if not self.q > 1:
            raise DomainError(f"q must be > 1, got {self.q}")
        if not self.t0 < self.t1:
            raise DomainError(f"need t0 < t1, got {self.t0}, {self.t1}")
        if self.steps < 2:
            raise DomainError("steps must be >= 2")
        if self.order < 2:
            raise DomainError("order must be >= 2")

    @property
    def spec(self):
        return oscillator.OscillatorSpec(self.Gamma, self.omega, self.q)

    @property
    def grid(self):
        return np.linspace(self.t0, self.t1, self.steps)


def _fmt(v):
    v = complex(v)
    if v.imag == 0:
        return repr(v.real)
    return f"{v.real!r}{v.imag:+.17g}j"


def _emit(text, path, out):
    if path:
        Path(path).write_text(text)
    else:
        out.write(text)


def _solution(cfg):
    basis = oscillator.build_basis(cfg.spec, cfg.order, cfg.A, cfg.B)
    if cfg.modulation == "qperiodic":
        return basis, modulate(basis.values, ModulationSpec(QPERIODIC_SIN, 1.0, cfg.q))
    return basis, basis.values


def cmd_roots(cfg, out):
    r = oscillator.characteristic_roots(cfg.spec)
    if r.multiplicity == 2:
        out.write(f"lambda = {_fmt(r.lambda1)} (double), regime={r.regime}\n")
    else:
        out.write(f"lambda1 = {_fmt(r.lambda1)}, lambda2 = {_fmt(r.lambda2)}, regime={r.regime}")
        out.write(f", Omega={r.Omega!r}\n" if r.Omega is not None else "\n")
    return 0


def cmd_solve(cfg, out):
    _, f = _solution(cfg)
    t = cfg.grid
    if cfg.modulation == "qperiodic":
        t = t[t > 0]
    _emit(to_csv(TimeSeriesOutput(t=t, x=np.asarray(f(t)))), cfg.output, out)
    return 0


def cmd_verify(cfg, out):
    spec = cfg.spec
    basis = oscillator.build_basis(spec, cfg.order, cfg.A, cfg.B)
    x = basis.combined()
    scale = max(max_abs(basis.x1), max_abs(basis.x2))
    series_res = float(max(max_abs(oscillator.residual(spec, s)) for s in (basis.x1, basis.x2)) / scale)

    ts = np.linspace(0.0, 2.0, 201)[1:]
    f = x if cfg.modulation != "qperiodic" else modulate(x, ModulationSpec(QPERIODIC_SIN, 1.0, cfg.q))
    sampled = float(max(abs(oscillator.sampled_residual(spec, f, t)) for t in ts))

    out.write(f"regime={oscillator.classify(spec.Gamma, spec.omega)}\n")
    out.write(f"series_residual_max={series_res!r}\n")
    out.write(f"sampled_residual_max={sampled!r}\n")
    for t in (0.0, 0.5, 1.0):
        out.write(f"wronskian_series(t={t!r})={_fmt(oscillator.q_wronskian(basis, t))}\n")
        if basis.closed_form_radius is not None:
            out.write(f"wronskian_closed(t={t!r})={float(oscillator.wronskian_closed_form(spec, t))!r}\n")
    samples = riccati.riccati_samples(x, ts, spec.Gamma, spec.omega)
    ric = float(max((abs(s.residual) for s in samples), default=0.0))
    out.write(f"riccati_points={len(samples)} riccati_residual_max={ric!r}\n")

    failed = [
        name
        for name, value in (("series residual", series_res), ("sampled residual", sampled), ("riccati residual", ric))
        if not value <= VERIFY_BOUND
    ]
    if failed:
        print(f"verify: {', '.join(failed)} above {VERIFY_BOUND:g}", file=sys.stderr)
        return 1
    return 0


def cmd_zeros(cfg, out):
    for z in eq_zeros(cfg.q, cfg.omega, cfg.count):
        out.write(f"{z!r}\n")
    return 0


def cmd_degenerate(cfg, out):
    fam = degenerate.degenerate_basis(cfg.omega, cfg.n, cfg.q, cfg.order)
    for k, norm in enumerate(fam.annihilation_norms()):
        out.write(f"annihilation k={k} max_coeff={norm!r}\n")
    _, det = degenerate.generalized_wronskian(fam.members, 0.0)
    out.write(f"wronskian_det(t=0)={_fmt(det)}\n")
    if cfg.output:
        t = cfg.grid
        cols = {"t": t}
        for k, x in enumerate(fam.members):
            cols[f"x{k}"] = np.real(evaluate(x, t))
        Path(cfg.output).write_text(to_csv(None, cols))
    return 0


def cmd_riccati(cfg, out):
    spec = cfg.spec
    x = oscillator.build_basis(spec, cfg.order, cfg.A, cfg.B).combined()
    samples = riccati.riccati_samples(x, cfg.grid, spec.Gamma, spec.omega)
    cols = {
        "t": [s.t for s in samples],
        "y": [s.y for s in samples],
        "residual": [s.residual for s in samples],
    }
    worst = max((abs(s.residual) for s in samples), default=0.0)
    if cfg.output:
        Path(cfg.output).write_text(to_csv(None, cols))
        out.write(f"riccati_points={len(samples)} riccati_residual_max={worst!r}\n")
    else:
        out.write(to_csv(None, cols))
    return 0


def cmd_windows(cfg, out):
    basis = oscillator.build_basis(cfg.spec, cfg.order, cfg.A, cfg.B)
    spec = ModulationSpec(QPERIODIC_SIN if cfg.modulation != "off" else "constant", 1.0, cfg.q)
    windows = self_similar_windows(modulate(basis.values, spec), cfg.scales, cfg.points)
    base = Path(cfg.output) if cfg.output else None
    for s, w in zip(cfg.scales, windows):
        text = to_csv(w)
        if base is None:
            out.write(f"# scale={s!r}\n{text}")
        else:
            base.mkdir(parents=True, exist_ok=True)
            path = base / f"window_{s!r}.csv"
            path.write_text(text)
            out.write(f"{path}\n")
    return 0


# (name, Gamma, omega, A, B, modulated); q and time range come from the config
FIGURES = (
    ("cosq", 0.0, 1.0, 1.0, 0.0, False),
    ("cosq_qperiodic", 0.0, 1.0, 1.0, 0.0, True),
    ("underdamped", 1.0, 1.0, 1.0, 1.0, False),
    ("underdamped_qperiodic", 1.0, 1.0, 1.0, 1.0, True),
    ("overdamped", 5.0, 2.0, 1.0, 1.0, False),
    ("overdamped_qperiodic", 5.0, 2.0, 1.0, 1.0, True),
    ("critical", 2.0, 1.0, 1.0, 1.0, False),
    ("critical_qperiodic", 2.0, 1.0, 1.0, 1.0, True),
)


def cmd_figures(cfg, out):
    outdir = Path(cfg.output or "figures")
    outdir.mkdir(parents=True, exist_ok=True)
    for name, G, w, A, B, modulated in FIGURES:
        sub = RunConfig(
            "solve", q=cfg.q, Gamma=G, omega=w, A=A, B=B, t0=cfg.t0, t1=cfg.t1,
            steps=cfg.steps, order=cfg.order, modulation="qperiodic" if modulated else "off",
            output=str(outdir / f"{name}.csv"),
        )
        cmd_solve(sub, out)
        out.write(f"{sub.output}\n")
    win = RunConfig(
        "windows", q=cfg.q, Gamma=2.0, omega=1.0, order=cfg.order, modulation="qperiodic",
        scales=cfg.scales, points=cfg.points, output=str(outdir / "windows"),
    )
    return cmd_windows(win, out)


HANDLERS = {
    "roots": cmd_roots,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "zeros": cmd_zeros,
    "degenerate": cmd_degenerate,
    "riccati": cmd_riccati,
    "windows": cmd_windows,
    "figures": cmd_figures,
}


def run(cfg, out=None):
    """Execute ``cfg`` and return the exit status."""
    out = sys.stdout if out is None else out
    try:
        return HANDLERS[cfg.command](cfg, out)
    except TailGuardError as exc:
        print(f"tail guard: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2


def _scales(text):
    return tuple(float(s) for s in text.split(","))


def build_parser():
    parser = argparse.ArgumentParser(prog="qdamped", description="q-damped oscillator toolkit")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--q", type=float, default=2.0)
        p.add_argument("--Gamma", type=float, default=2.0)
        p.add_argument("--omega", type=float, default=1.0)
        p.add_argument("--A", type=float, default=1.0)
        p.add_argument("--A-im", type=float, default=0.0)
        p.add_argument("--B", type=float, default=1.0)
        p.add_argument("--B-im", type=float, default=0.0)
        p.add_argument("--t0", type=float, default=0.0)
        p.add_argument("--t1", type=float, default=10.0)
        p.add_argument("--steps", type=int, default=1000)
        p.add_argument("--order", type=int, default=DEFAULT_ORDER)
        p.add_argument("--modulation", choices=("off", "qperiodic"), default="off")
        p.add_argument("--output", "-o", default=None)
        p.add_argument("--n", type=int, default=3, help="multiplicity (degenerate)")
        p.add_argument("--count", type=int, default=5, help="number of zeros (zeros)")
        p.add_argument("--scales", type=_scales, default=(0.5, 0.05), help="comma-separated (windows)")
        p.add_argument("--points", type=int, default=1000, help="samples per window (windows)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    A = complex(args.A, args.A_im)
    B = complex(args.B, args.B_im)
    try:
        cfg = RunConfig(
            command=args.command, q=args.q, Gamma=args.Gamma, omega=args.omega,
            A=A.real if A.imag == 0 else A, B=B.real if B.imag == 0 else B,
            t0=args.t0, t1=args.t1, steps=args.steps, order=args.order,
            modulation=args.modulation, output=args.output, n=args.n, count=args.count,
            scales=args.scales, points=args.points,
        )
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
