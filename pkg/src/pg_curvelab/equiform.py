"""Scale-invariant (equiform) apparatus of an admissible curve.

With rho = 1/kappa the radius of curvature, the equiform frame is the
classical frame stretched by rho,

    tangent = rho * e1,   normal = rho * e2,   binormal = rho * e3,

and the two scale-invariant functions are the equiform curvature
K = d(rho)/ds and the equiform torsion T = rho * tau.  The rate fields
are plain s-derivatives of K and T; consumers that need rates in the
scale-invariant parameter sigma multiply by rho (d/dsigma = rho * d/ds).
The frame satisfies

    dT/dsigma = K*T + N,   dN/dsigma = K*N + T*B,   dB/dsigma = T*N + K*B.

All quantities are produced by truncated derivative-series arithmetic on
the curve jets, so a curve carrying exact order-4 jets yields K, T and
their rates exact to round-off.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from statistics import fmean
from typing import Sequence

from .algebra import PGVector
from .curves import CurveJet
from .errors import EmptyGridError, InadmissibleCurveError, JetOrderError
from .frenet import LIGHTLIKE_TOL
from .series import DSeries


@dataclass(frozen=True)
class EquiformData:
    """Scale-invariant apparatus at one parameter value.

    ``curvature_rate`` and ``torsion_rate`` are the s-derivatives of
    ``curvature`` and ``torsion``; ``epsilon`` is the causal character of
    the unit normal (+1 spacelike, -1 timelike).
    """

    s: float
    epsilon: int
    rho: float
    curvature: float
    torsion: float
    curvature_rate: float
    torsion_rate: float
    tangent: PGVector
    normal: PGVector
    binormal: PGVector


def equiform_data(c: CurveJet, s: float) -> EquiformData:
    """Evaluate the scale-invariant apparatus at s.

    Needs jets up to order 4 (the torsion rate sees the fourth
    derivative).  Raises the same admissibility errors as the classical
    apparatus.
    """
    if c.max_order < 4:
        raise JetOrderError(
            f"equiform apparatus needs order-4 jets, curve carries {c.max_order}")
    j1 = c.jet(s, 1)
    j2 = c.jet(s, 2)
    j3 = c.jet(s, 3)
    j4 = c.jet(s, 4)

    if abs(j1.x1 - 1.0) > 1e-6:
        raise InadmissibleCurveError(
            f"curve is not in arc-length form at s={s:.6g} (x'={j1.x1:.6g})",
            param=s)

    y2 = DSeries((j2.x2, j3.x2, j4.x2))
    z2 = DSeries((j2.x3, j3.x3, j4.x3))
    w3 = y2 * y2 - z2 * z2
    w = w3[0]
    mag = j2.x2 * j2.x2 + j2.x3 * j2.x3
    if mag == 0.0:
        raise InadmissibleCurveError(
            f"inflection point at s={s:.6g}: second derivative vanishes", param=s)
    if abs(w) <= LIGHTLIKE_TOL * mag:
        raise InadmissibleCurveError(
            f"lightlike acceleration at s={s:.6g}: y''^2 - z''^2 ~ 0", param=s)
    eps = 1 if w > 0.0 else -1

    absw3 = eps * w3                               # series of kappa^2 > 0
    rho3 = absw3.sqrt().reciprocal()               # (rho, K, dK/ds)
    rho = rho3[0]
    curvature = rho3[1]
    curvature_rate = rho3[2]

    num2 = DSeries((j2.x2 * j3.x3 - j3.x2 * j2.x3,
                    j2.x2 * j4.x3 - j4.x2 * j2.x3))
    tau2 = num2 / absw3.truncate(2)                # (tau, dtau/ds)
    torsion2 = rho3.truncate(2) * tau2             # (T, dT/ds)
    torsion = torsion2[0]
    torsion_rate = torsion2[1]

    rho2 = rho * rho
    tangent = PGVector(rho, rho * j1.x2, rho * j1.x3)
    normal = PGVector(0.0, rho2 * j2.x2, rho2 * j2.x3)
    binormal = PGVector(0.0, eps * rho2 * j2.x3, eps * rho2 * j2.x2)
    return EquiformData(s=s, epsilon=eps, rho=rho,
                        curvature=curvature, torsion=torsion,
                        curvature_rate=curvature_rate,
                        torsion_rate=torsion_rate,
                        tangent=tangent, normal=normal, binormal=binormal)


def equiform_grid(c: CurveJet, grid: Sequence[float]) -> list[EquiformData]:
    """Evaluate the apparatus over a grid, rejecting normal-character flips.

    A flip of epsilon inside the grid means the curve crossed the light
    cone, where none of the invariants are continuous; such curves are
    inadmissible as a whole.
    """
    if len(grid) == 0:
        raise EmptyGridError("equiform sweep needs a non-empty grid")
    datas = [equiform_data(c, s) for s in grid]
    eps0 = datas[0].epsilon
    for d in datas[1:]:
        if d.epsilon != eps0:
            raise InadmissibleCurveError(
                f"normal character flips between s={grid[0]:.6g} and "
                f"s={d.s:.6g}; the curve crosses the light cone", param=d.s)
    return datas


def equiform_residual(c: CurveJet, s: float, h: float = 1e-4) -> float:
    """Sup-norm defect of the scale-invariant frame equations at s.

    Frame sigma-derivatives are formed as rho(s) times a central s
    difference at step h and compared with the right-hand sides; the
    worst component is returned, normalized by
    rho * max(1, |K|, |T|).
    """
    dm = equiform_data(c, s - h)
    dp = equiform_data(c, s + h)
    d0 = equiform_data(c, s)
    if dm.epsilon != dp.epsilon or dm.epsilon != d0.epsilon:
        raise InadmissibleCurveError(
            f"normal character flips near s={s:.6g}; the curve crosses "
            "the light cone inside the difference stencil", param=s)

    scale = d0.rho * 0.5 / h
    dT = (dp.tangent - dm.tangent) * scale
    dN = (dp.normal - dm.normal) * scale
    dB = (dp.binormal - dm.binormal) * scale

    K, T = d0.curvature, d0.torsion
    r1 = (dT - (K * d0.tangent + d0.normal)).max_abs()
    r2 = (dN - (K * d0.normal + T * d0.binormal)).max_abs()
    r3 = (dB - (T * d0.normal + K * d0.binormal)).max_abs()
    return max(r1, r2, r3) / (d0.rho * max(1.0, abs(K), abs(T)))


# ---------------------------------------------------------------------------
# classification by constancy of the invariants


class NaturalClassTag(Enum):
    ISOTROPIC_LOG_SPIRAL = "isotropic-logarithmic-spiral"
    CIRCULAR_HELIX = "circular-helix"
    ISOTROPIC_CIRCLE = "isotropic-circle"
    OTHER = "other"


@dataclass(frozen=True)
class NaturalClass:
    """Outcome of the constant-invariant classification over a grid."""

    tag: NaturalClassTag
    curvature_mean: float
    curvature_spread: float
    torsion_mean: float
    torsion_spread: float


def _spread(vals: Sequence[float]) -> float:
    return max(vals) - min(vals)


def _is_zero(vals: Sequence[float], tol: float) -> bool:
    return max(abs(v) for v in vals) <= tol


def _is_const(vals: Sequence[float], tol: float) -> bool:
    return _spread(vals) <= tol * max(1.0, abs(fmean(vals)))


def natural_class(c: CurveJet, grid: Sequence[float],
                  tol_const: float = 1e-6,
                  tol_zero: float = 1e-9) -> NaturalClass:
    """Classify a curve by constancy of K and T over the grid.

    Writing "zero" for max |value| <= tol_zero and "constant" for
    (max - min) <= tol_const * max(1, |mean|):

    * K zero and T zero: isotropic circle (constant classical curvature,
      zero classical torsion).
    * K zero, T constant and nonzero: circular helix (both classical
      invariants constant).
    * K constant nonzero and T zero: isotropic logarithmic spiral.
    * Everything else — including both invariants constant and nonzero —
      is OTHER.
    """
    if len(grid) < 5:
        raise ValueError("classification needs a grid of at least 5 points")
    datas = equiform_grid(c, grid)
    Ks = [d.curvature for d in datas]
    Ts = [d.torsion for d in datas]

    result = NaturalClassTag.OTHER
    if _is_const(Ks, tol_const) and _is_const(Ts, tol_const):
        k_zero = _is_zero(Ks, tol_zero)
        t_zero = _is_zero(Ts, tol_zero)
        if k_zero and t_zero:
            result = NaturalClassTag.ISOTROPIC_CIRCLE
        elif k_zero:
            result = NaturalClassTag.CIRCULAR_HELIX
        elif t_zero:
            result = NaturalClassTag.ISOTROPIC_LOG_SPIRAL
    return NaturalClass(tag=result,
                        curvature_mean=fmean(Ks),
                        curvature_spread=_spread(Ks),
                        torsion_mean=fmean(Ts),
                        torsion_spread=_spread(Ts))
