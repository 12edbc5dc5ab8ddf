"""Curve representation: jets of admissible curves in arc-length form.

A :class:`CurveJet` evaluates position and s-derivatives of a curve whose
canonical parameter is the pseudo-Galilean arc length, i.e. x(s) = s.  Two
constructors are provided: one wrapping user-supplied analytic derivative
functions, one that rebuilds all derivatives from a position function with
central finite differences.

The finite-difference scheme uses the 5-point stencils for orders 1-2 and
the 7-point stencils for orders 3-4 (all fourth-order accurate), followed
by one Richardson extrapolation level combining steps h and h/2.  The
combined rules annihilate polynomials up to degree 5 at every order, so
polynomial test curves come back exact up to round-off.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .algebra import PGVector, pg_cross
from .errors import (
    EmptyDomainError,
    EmptyGridError,
    JetOrderError,
    NarrowDomainError,
    StepTooSmallError,
)

_EPS = 2.220446049250313e-16

PositionFn = Callable[[float], PGVector]


class JetKind(Enum):
    ANALYTIC = "analytic"
    FINITE_DIFFERENCE = "finite-difference"


class CurveJet:
    """Evaluator of a curve's position and derivatives up to ``max_order``.

    Instances are immutable; evaluation is pure.  ``warnings`` collects
    non-fatal construction diagnostics (e.g. inconsistent supplied
    derivatives), never errors.
    """

    __slots__ = ("domain", "kind", "max_order", "warnings", "_jet_fn")

    def __init__(self, jet_fn: Callable[[float, int], PGVector],
                 domain: tuple[float, float], kind: JetKind,
                 max_order: int = 4, warnings: tuple[str, ...] = ()):
        lo, hi = float(domain[0]), float(domain[1])
        if not (lo < hi):
            raise EmptyDomainError(f"empty domain [{lo}, {hi}]")
        object.__setattr__(self, "domain", (lo, hi))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "max_order", int(max_order))
        object.__setattr__(self, "warnings", tuple(warnings))
        object.__setattr__(self, "_jet_fn", jet_fn)

    def __setattr__(self, *_):
        raise AttributeError("CurveJet is immutable")

    @property
    def span(self) -> float:
        return self.domain[1] - self.domain[0]

    def jet(self, s: float, order: int = 0) -> PGVector:
        if order < 0 or order > self.max_order:
            raise JetOrderError(
                f"order {order} not available (curve carries orders 0..{self.max_order})")
        lo, hi = self.domain
        slack = 1e-9 * max(1.0, abs(lo), abs(hi))
        if s < lo - slack or s > hi + slack:
            raise ValueError(f"parameter {s} outside domain [{lo}, {hi}]")
        return self._jet_fn(s, order)

    def position(self, s: float) -> PGVector:
        return self.jet(s, 0)


# ---------------------------------------------------------------------------
# analytic constructor


def _shifted(position: PositionFn, dx: float) -> PositionFn:
    def shifted(s: float) -> PGVector:
        p = position(s)
        return PGVector(p.x1 - dx, p.x2, p.x3)
    return shifted


def make_analytic_curve(position: PositionFn,
                        d1: PositionFn, d2: PositionFn,
                        d3: PositionFn, d4: PositionFn,
                        domain: tuple[float, float],
                        higher: Sequence[PositionFn] = ()) -> CurveJet:
    """Wrap closed-form jets into a curve.

    The x-component is normalized so that x(s) = s: a constant offset
    measured at the domain midpoint is subtracted.  At five reproducibly
    chosen interior points every supplied derivative is compared against a
    central difference of the one below it (relative tolerance 1e-4);
    mismatches are recorded as warnings, not errors.  ``higher`` may supply
    derivative functions beyond order 4 (used e.g. by fixtures that want
    exact Bertrand mates).
    """
    lo, hi = float(domain[0]), float(domain[1])
    if not (lo < hi):
        raise EmptyDomainError(f"empty domain [{lo}, {hi}]")

    mid = 0.5 * (lo + hi)
    dx = position(mid).x1 - mid
    if dx != 0.0:
        position = _shifted(position, dx)

    fns: list[PositionFn] = [position, d1, d2, d3, d4, *higher]
    warnings: list[str] = []

    span = hi - lo
    rng = random.Random(0x5EED)
    probes = [lo + (0.1 + 0.8 * rng.random()) * span for _ in range(5)]
    hp = (_EPS ** (1 / 3)) * max(1.0, abs(lo), abs(hi))
    hp = min(hp, 0.05 * span)
    for s in probes:
        p = position(s)
        if abs(p.x1 - s) > 1e-9 * max(1.0, abs(s)):
            warnings.append(f"position x-component differs from s at s={s:.6g}")
            break
    for k in range(1, len(fns)):
        bad = 0
        for s in probes:
            fd = (fns[k - 1](s + hp) - fns[k - 1](s - hp)) / (2.0 * hp)
            got = fns[k](s)
            scale = max(1.0, got.max_abs(), fd.max_abs())
            if (fd - got).max_abs() > 1e-4 * scale:
                bad += 1
        if bad:
            warnings.append(
                f"supplied order-{k} derivative disagrees with a central "
                f"difference of order {k - 1} at {bad}/5 probe points")

    def jet_fn(s: float, order: int) -> PGVector:
        return fns[order](s)

    return CurveJet(jet_fn, (lo, hi), JetKind.ANALYTIC,
                    max_order=len(fns) - 1, warnings=tuple(warnings))


# ---------------------------------------------------------------------------
# finite-difference constructor

# offsets, weights, denominator-scale for the base stencils (all O(h^4))
_STENCILS: dict[int, tuple[tuple[int, ...], tuple[float, ...], float]] = {
    1: ((-2, -1, 1, 2), (1.0, -8.0, 8.0, -1.0), 12.0),
    2: ((-2, -1, 0, 1, 2), (-1.0, 16.0, -30.0, 16.0, -1.0), 12.0),
    3: ((-3, -2, -1, 1, 2, 3), (1.0, -8.0, 13.0, -13.0, 8.0, -1.0), 8.0),
    4: ((-3, -2, -1, 0, 1, 2, 3), (-1.0, 12.0, -39.0, 56.0, -39.0, 12.0, -1.0), 6.0),
}


def _stencil(position: PositionFn, s: float, order: int, h: float) -> PGVector:
    offsets, weights, denom = _STENCILS[order]
    pts = [position(s + j * h) for j in offsets]
    scale = denom * h ** order
    return PGVector(
        math.fsum(w * p.x1 for w, p in zip(weights, pts)) / scale,
        math.fsum(w * p.x2 for w, p in zip(weights, pts)) / scale,
        math.fsum(w * p.x3 for w, p in zip(weights, pts)) / scale,
    )


def _richardson(position: PositionFn, s: float, order: int, h: float) -> PGVector:
    coarse = _stencil(position, s, order, h)
    fine = _stencil(position, s, order, 0.5 * h)
    return (16.0 * fine - coarse) / 15.0


def make_sampled_curve(position: PositionFn, domain: tuple[float, float],
                       h: float | None = None, max_order: int = 4) -> CurveJet:
    """Build a curve whose derivatives come from finite differences.

    ``position`` must be evaluable on the domain widened by 4h on each
    side (the centered stencils reach 3h past a requested point).  The
    default step balances truncation against round-off for the
    fourth-order jets of the Richardson-extrapolated scheme.
    """
    lo, hi = float(domain[0]), float(domain[1])
    if not (lo < hi):
        raise EmptyDomainError(f"empty domain [{lo}, {hi}]")
    if not 1 <= max_order <= 4:
        raise JetOrderError(f"max_order must be between 1 and 4, got {max_order}")

    scale = max(1.0, abs(lo), abs(hi))
    if h is None:
        h = (_EPS ** 0.1) * scale
    h = float(h)
    if h <= 0.0 or h < 64.0 * _EPS * scale:
        raise StepTooSmallError(f"step {h} is below the round-off guard")
    if hi - lo < 8.0 * h:
        raise NarrowDomainError(f"domain [{lo}, {hi}] is shorter than 8h = {8 * h}")

    # probe the left endpoint: for lattice-backed positions it is always
    # an evaluable sample, unlike the midpoint
    dx = position(lo).x1 - lo
    if dx != 0.0:
        position = _shifted(position, dx)

    def jet_fn(s: float, order: int) -> PGVector:
        if order == 0:
            return position(s)
        return _richardson(position, s, order, h)

    return CurveJet(jet_fn, (lo, hi), JetKind.FINITE_DIFFERENCE, max_order=max_order)


# ---------------------------------------------------------------------------
# admissibility and homothety


@dataclass(frozen=True)
class AdmissibilityReport:
    """Grid sweep of the admissibility conditions.

    ``worst_lightlike_margin`` is min over the grid of
    |y''^2 - z''^2| / (y''^2 + z''^2); ``worst_inflection_margin`` is the
    smallest sup-norm of the cross product of the first two derivatives.
    """

    admissible: bool
    worst_inflection_margin: float
    worst_lightlike_margin: float
    failing_params: tuple[float, ...]


def check_admissibility(c: CurveJet, grid: Sequence[float],
                        tol_light: float = 1e-10) -> AdmissibilityReport:
    """Check x' != 0, a nonvanishing cross product of the first two
    derivatives, and a y''^2 - z''^2 bounded away from the light cone."""
    if len(grid) == 0:
        raise EmptyGridError("admissibility sweep needs a non-empty grid")
    worst_infl = math.inf
    worst_light = math.inf
    failing: list[float] = []
    for s in grid:
        j1 = c.jet(s, 1)
        j2 = c.jet(s, 2)
        ok = True
        if abs(j1.x1) <= 1e-12:
            ok = False
        cross = pg_cross(j1, j2)
        scale = max(1.0, j1.max_abs(), j2.max_abs())
        infl = cross.max_abs()
        worst_infl = min(worst_infl, infl)
        if infl <= 1e-12 * scale:
            ok = False
        denom = j2.x2 * j2.x2 + j2.x3 * j2.x3
        if denom == 0.0:
            light = 0.0
        else:
            light = abs(j2.x2 * j2.x2 - j2.x3 * j2.x3) / denom
        worst_light = min(worst_light, light)
        if light <= tol_light:
            ok = False
        if not ok:
            failing.append(s)
    return AdmissibilityReport(
        admissible=not failing,
        worst_inflection_margin=worst_infl,
        worst_lightlike_margin=worst_light,
        failing_params=tuple(failing),
    )


def apply_homothety(c: CurveJet, mu: float) -> CurveJet:
    """Rescale the curve by mu > 0 and re-express it in its own arc length.

    The image of gamma under scaling by mu, parametrized by its arc length
    t, is t -> mu * gamma(t/mu); order-k jets scale by mu**(1-k).  The
    curve stays in arc-length form and keeps its kind and jet orders.
    """
    if not (mu > 0.0):
        raise ValueError(f"homothety factor must be positive, got {mu}")

    def jet_fn(t: float, order: int) -> PGVector:
        return (mu ** (1 - order)) * c.jet(t / mu, order)

    return CurveJet(jet_fn, (mu * c.domain[0], mu * c.domain[1]),
                    c.kind, max_order=c.max_order, warnings=c.warnings)
