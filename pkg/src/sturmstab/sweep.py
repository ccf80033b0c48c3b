"""Parameter-plane sweeps on exact rational grids."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .exact import Number, format_rational, parse_rational
from .model import DispersionSpec, SpecError, order_of
from .stability import ResonantDegeneracyError, unstable_modes

CSV_HEADER = ["x", "y", "unstable_n", "verdict"]
STABLE, UNSTABLE, DEGENERATE = "stable", "possibly-unstable", "degenerate"


@dataclass(frozen=True)
class Axis:
    name: str
    lo: Fraction
    hi: Fraction
    count: int

    def __post_init__(self):
        order_of(self.name)
        if self.count < 2:
            raise ValueError(f"axis {self.name}: need at least 2 points, got {self.count}")
        if not self.lo < self.hi:
            raise ValueError(f"axis {self.name}: need lo < hi")

    @classmethod
    def parse(cls, text: str) -> "Axis":
        """``name:lo:hi:count``."""
        parts = text.split(":")
        if len(parts) != 4:
            raise SpecError("axis must look like name:lo:hi:count", 1, text)
        name, lo, hi, count = parts
        col = len(name) + 2
        try:
            lo_v = parse_rational(lo)
        except ValueError:
            raise SpecError(f"bad rational {lo!r}", col, text) from None
        col += len(lo) + 1
        try:
            hi_v = parse_rational(hi)
        except ValueError:
            raise SpecError(f"bad rational {hi!r}", col, text) from None
        col += len(hi) + 1
        if not count.strip().isdigit():
            raise SpecError(f"bad point count {count!r}", col, text)
        return cls(name.strip(), lo_v, hi_v, int(count))

    def points(self) -> list[Fraction]:
        step = (self.hi - self.lo) / (self.count - 1)
        return [self.lo + k * step for k in range(self.count)]

    @property
    def step(self) -> Fraction:
        return (self.hi - self.lo) / (self.count - 1)

    def format(self) -> str:
        return f"{self.name}:{format_rational(self.lo)}:{format_rational(self.hi)}:{self.count}"


@dataclass(frozen=True)
class SweepGrid:
    """Fixed parameters plus one or two swept axes.

    Parameters not mentioned anywhere are zero.  With ``y`` omitted the sweep
    is a single line and every cell has ``y = None``.
    """

    fixed: tuple[tuple[str, Fraction], ...]
    x: Axis
    y: Optional[Axis] = None
    n_max: int = 30

    def __post_init__(self):
        names = [n for n, _ in self.fixed] + [self.x.name] + ([self.y.name] if self.y else [])
        for n in names:
            order_of(n)
        if len(set(names)) != len(names):
            raise ValueError(f"parameter names must be distinct, got {names}")
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")

    @staticmethod
    def parse_fixed(items: Iterable[str]) -> tuple[tuple[str, Fraction], ...]:
        out = []
        for text in items:
            name, eq, value = text.partition("=")
            if not eq:
                raise SpecError("fixed parameter must look like name=value", 1, text)
            try:
                out.append((name.strip(), parse_rational(value)))
            except ValueError:
                raise SpecError(f"bad rational {value!r}", len(name) + 2, text) from None
        return tuple(out)

    def spec_at(self, x: Fraction, y: Optional[Fraction]) -> DispersionSpec:
        params = dict(self.fixed)
        params[self.x.name] = x
        if self.y is not None:
            params[self.y.name] = y
        values = {order_of(k): v for k, v in params.items()}
        top = max(values)
        return DispersionSpec(tuple((m, values.get(m, Fraction(0))) for m in range(3, top + 1, 2)))

    def points(self) -> list[tuple[Fraction, Optional[Fraction]]]:
        """Row-major: ``y`` outer, ``x`` inner."""
        ys: Sequence[Optional[Fraction]] = self.y.points() if self.y else [None]
        return [(x, y) for y in ys for x in self.x.points()]

    def to_dict(self) -> dict:
        return {
            "fixed": {k: format_rational(v) for k, v in self.fixed},
            "x": self.x.format(),
            "y": self.y.format() if self.y else None,
            "nMax": self.n_max,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SweepGrid":
        return cls(
            fixed=tuple((k, parse_rational(v)) for k, v in d["fixed"].items()),
            x=Axis.parse(d["x"]),
            y=Axis.parse(d["y"]) if d.get("y") else None,
            n_max=int(d["nMax"]),
        )


@dataclass(frozen=True)
class CellResult:
    x: Fraction
    y: Optional[Fraction]
    unstable_n: tuple[int, ...] = ()
    verdict: str = field(default="")

    def __post_init__(self):
        if not self.verdict:
            object.__setattr__(self, "verdict", UNSTABLE if self.unstable_n else STABLE)

    def csv_row(self) -> list[str]:
        return [
            format_rational(self.x),
            "" if self.y is None else format_rational(self.y),
            ";".join(map(str, self.unstable_n)),
            self.verdict,
        ]


def evaluate_cell(grid: SweepGrid, x: Fraction, y: Optional[Fraction]) -> CellResult:
    try:
        spec = grid.spec_at(x, y)
        return CellResult(x, y, tuple(unstable_modes(spec, grid.n_max)))
    except (SpecError, ResonantDegeneracyError):
        # every dispersive coefficient vanishes at this grid point
        return CellResult(x, y, (), DEGENERATE)


def _cell_job(args):
    return evaluate_cell(*args)


def run_sweep(grid: SweepGrid, workers: int = 1) -> list[CellResult]:
    jobs = [(grid, x, y) for x, y in grid.points()]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_cell_job, jobs, chunksize=64))
    return [_cell_job(j) for j in jobs]


def scan_line(spec_of: Callable[[Fraction], DispersionSpec], values: Iterable[Number], n_max: int) -> list[tuple[Fraction, list[int]]]:
    """Unstable modes along a one-parameter family ``spec_of(value)``."""
    return [(Fraction(v), unstable_modes(spec_of(Fraction(v)), n_max)) for v in values]


def cells_to_csv(cells: Iterable[CellResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for c in cells:
        w.writerow(c.csv_row())
    return buf.getvalue()


def cells_to_json(grid: SweepGrid, cells: Iterable[CellResult]) -> str:
    return json.dumps({
        "format": 1,
        "grid": grid.to_dict(),
        "cells": [
            {"x": r[0], "y": r[1] or None, "unstable_n": list(c.unstable_n), "verdict": c.verdict}
            for c, r in ((c, c.csv_row()) for c in cells)
        ],
    }, indent=1) + "\n"


class SweepFileError(ValueError):
    def __init__(self, message: str, row: Optional[int] = None):
        self.row = row
        super().__init__(f"row {row}: {message}" if row is not None else message)


def _parse_cell(x: str, y, un, verdict: str, row: int) -> CellResult:
    try:
        xv = parse_rational(x)
        yv = None if y in ("", None) else parse_rational(y)
        if isinstance(un, str):
            ns = tuple(int(t) for t in un.split(";")) if un else ()
        else:
            ns = tuple(int(t) for t in un)
    except (ValueError, TypeError) as exc:
        raise SweepFileError(str(exc), row) from None
    if verdict not in (STABLE, UNSTABLE, DEGENERATE):
        raise SweepFileError(f"unknown verdict {verdict!r}", row)
    if list(ns) != sorted(set(ns)) or any(n < 1 for n in ns):
        raise SweepFileError("unstable_n must be strictly increasing positive integers", row)
    if (verdict == UNSTABLE) != bool(ns):
        raise SweepFileError("verdict disagrees with unstable_n", row)
    return CellResult(xv, yv, ns, verdict)


def read_sweep(text: str) -> tuple[Optional[SweepGrid], list[CellResult]]:
    """Parse a sweep file written by :func:`cells_to_csv` or :func:`cells_to_json`."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
            grid = SweepGrid.from_dict(data["grid"]) if data.get("grid") else None
            raw = data["cells"]
        except (ValueError, KeyError, TypeError) as exc:
            raise SweepFileError(f"malformed sweep JSON: {exc}") from None
        cells = []
        for i, c in enumerate(raw, start=1):
            try:
                cells.append(_parse_cell(c["x"], c.get("y"), c["unstable_n"], c["verdict"], i))
            except (KeyError, TypeError):
                raise SweepFileError("missing field", i) from None
        return grid, cells
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CSV_HEADER:
        raise SweepFileError(f"expected header {','.join(CSV_HEADER)}", 1)
    cells = []
    for i, r in enumerate(rows[1:], start=2):
        if len(r) != 4:
            raise SweepFileError(f"expected 4 columns, got {len(r)}", i)
        cells.append(_parse_cell(*r, row=i))
    return None, cells


__all__ = [
    "Axis", "SweepGrid", "CellResult", "evaluate_cell", "run_sweep", "scan_line",
    "cells_to_csv", "cells_to_json", "read_sweep", "SweepFileError",
    "STABLE", "UNSTABLE", "DEGENERATE",
]
