"""Sampled time series and their CSV form.

Header ``t,x`` for real data and ``t,x_re,x_im`` for complex data, one row
per sample, floats written with ``repr`` (shortest round-trip form).
"""

import io
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class TimeSeriesOutput:
    t: np.ndarray
    x: np.ndarray
    label: str = "x"

    @property
    def is_complex(self):
        return np.iscomplexobj(self.x) and bool(np.any(np.imag(self.x)))


def _fmt(v):
    return repr(float(v))


def to_csv(series, columns=None):
    """Render a TimeSeriesOutput (or a dict of named columns) as CSV text."""
    buf = io.StringIO()
    if columns is None:
        if series.is_complex:
            buf.write("t,x_re,x_im\n")
            for t, x in zip(series.t, series.x):
                buf.write(f"{_fmt(t)},{_fmt(x.real)},{_fmt(x.imag)}\n")
        else:
            buf.write("t,x\n")
            for t, x in zip(series.t, np.real(series.x)):
                buf.write(f"{_fmt(t)},{_fmt(x)}\n")
        return buf.getvalue()
    names = list(columns)
    buf.write(",".join(names) + "\n")
    for row in zip(*(columns[n] for n in names)):
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def write_csv(path, series):
    with open(path, "w", newline="") as fh:
        fh.write(to_csv(series))


def read_csv(path_or_text):
    """Parse CSV written by ``to_csv`` back into a TimeSeriesOutput."""
    if "\n" in path_or_text:
        text = path_or_text
    else:
        with open(path_or_text) as fh:
            text = fh.read()
    lines = text.strip("\n").split("\n")
    header = lines[0].split(",")
    rows = [[float(v) for v in line.split(",")] for line in lines[1:]]
    data = np.array(rows, dtype=float).reshape(len(rows), len(header))
    t = data[:, 0]
    if header == ["t", "x_re", "x_im"]:
        return TimeSeriesOutput(t=t, x=data[:, 1] + 1j * data[:, 2])
    if header == ["t", "x"]:
        return TimeSeriesOutput(t=t, x=data[:, 1])
    raise ValueError(f"unexpected CSV header {header}")
