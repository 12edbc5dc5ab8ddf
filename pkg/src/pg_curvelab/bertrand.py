"""Offset mates along the scale-invariant normal, and their verification.

The mate of a curve gamma at constant offset lam is gamma + lam * N with
N the scale-invariant normal (N = rho^2 * gamma'' in components, so the
x-component is untouched and the mate stays in arc-length form).  A pair
of curves is accepted as a mate pair when, over a verification grid,

  * both have vanishing equiform curvature (the offset family exists
    only over curves of constant classical curvature),
  * their scale-invariant normals are parallel at matching parameters,
  * the offset recovered from the geometry is constant and matches the
    claimed offset function (which must itself be constant), and
  * the scalar product of the two scale-invariant tangents is constant.

Mate jets are computed exactly through derivative-series arithmetic when
the base curve carries jets of order >= 6; otherwise orders three and
four fall back to finite differences of the exact second-derivative
function and the mate's domain shrinks by the stencil reach.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from statistics import fmean
from typing import Callable, Sequence

from .algebra import PGVector, pg_dot
from .curves import CurveJet, JetKind, _richardson
from .equiform import NaturalClassTag, equiform_grid, natural_class
from .errors import (
    InadmissibleCurveError,
    MateInadmissibleError,
    NarrowDomainError,
    StepTooSmallError,
)
from .frenet import LIGHTLIKE_TOL, frenet_data
from .series import DSeries

_EPS = 2.220446049250313e-16

OffsetFn = Callable[[float], float]


def _normal_series(base: CurveJet, s: float, n: int) -> tuple[DSeries, DSeries]:
    """Length-n derivative series of the two isotropic components of the
    scale-invariant normal rho^2 * gamma''.  Needs base jets to order n+1."""
    jets = [base.jet(s, 2 + i) for i in range(n)]
    y2 = DSeries(j.x2 for j in jets)
    z2 = DSeries(j.x3 for j in jets)
    w = y2 * y2 - z2 * z2
    mag = y2[0] * y2[0] + z2[0] * z2[0]
    if mag == 0.0 or abs(w[0]) <= LIGHTLIKE_TOL * mag:
        raise InadmissibleCurveError(
            f"cannot build the normal offset at s={s:.6g}: acceleration is "
            "vanishing or lightlike", param=s)
    eps = 1 if w[0] > 0.0 else -1
    rho2 = (eps * w).reciprocal()
    return rho2 * y2, rho2 * z2


def _probe_mate(mate: CurveJet, offset: float) -> None:
    lo, hi = mate.domain
    for f in (0.1, 0.3, 0.5, 0.7, 0.9):
        s = lo + f * (hi - lo)
        try:
            frenet_data(mate, s)
        except InadmissibleCurveError as exc:
            raise MateInadmissibleError(
                f"offset {offset:g} produces an inadmissible mate: {exc}",
                param=getattr(exc, "param", None)) from exc


def bertrand_mate(base: CurveJet, offset: float) -> CurveJet:
    """Construct the normal-offset mate of ``base`` at constant ``offset``.

    The returned curve carries order base.max_order - 2 jets (at least 4)
    when the base has order >= 6; otherwise it carries order-4 jets whose
    orders three and four are finite differences.  The mate is probed at
    five interior points and :class:`MateInadmissibleError` is raised if
    the offset flattens or degenerates it.
    """
    lam = float(offset)

    if base.max_order >= 6:
        n = base.max_order - 1          # mate orders 0 .. n - 1

        def jet_fn(s: float, order: int) -> PGVector:
            ny, nz = _normal_series(base, s, n)
            j = base.jet(s, order)
            return PGVector(j.x1, j.x2 + lam * ny[order], j.x3 + lam * nz[order])

        mate = CurveJet(jet_fn, base.domain, base.kind,
                        max_order=base.max_order - 2, warnings=base.warnings)
        _probe_mate(mate, lam)
        return mate

    # fallback: exact jets to order 2, finite differences above
    lo, hi = base.domain
    scale = max(1.0, abs(lo), abs(hi))
    mid = 0.5 * (lo + hi)
    fr = frenet_data(base, mid)
    freq = max(1.0, abs(fr.tau), fr.kappa)
    h = (_EPS ** (1 / 6)) * scale / freq
    if h < 64.0 * _EPS * scale:
        raise StepTooSmallError(
            f"mate difference step {h} is below the round-off guard")
    if hi - lo <= 8.0 * h:
        raise NarrowDomainError(
            f"domain [{lo}, {hi}] too short for the mate stencils (8h = {8 * h})")

    def exact_jet(s: float, order: int) -> PGVector:
        ny, nz = _normal_series(base, s, 3)
        j = base.jet(s, order)
        return PGVector(j.x1, j.x2 + lam * ny[order], j.x3 + lam * nz[order])

    def m2(s: float) -> PGVector:
        return exact_jet(s, 2)

    def jet_fn(s: float, order: int) -> PGVector:
        if order <= 2:
            return exact_jet(s, order)
        return _richardson(m2, s, order - 2, h)

    note = (f"mate jets of orders 3-4 are finite differences at step "
            f"{h:.3e}; domain shrunk by twice the step on each side")
    mate = CurveJet(jet_fn, (lo + 2.0 * h, hi - 2.0 * h),
                    JetKind.FINITE_DIFFERENCE, max_order=4,
                    warnings=base.warnings + (note,))
    _probe_mate(mate, lam)
    return mate


class BertrandNature(Enum):
    CIRCULAR_HELIX = "circular-helix"
    ISOTROPIC_CIRCLE = "isotropic-circle"
    NOT_BERTRAND = "not-bertrand"


def bertrand_nature(c: CurveJet, grid: Sequence[float]) -> BertrandNature:
    """Which offset-mate family the curve belongs to, if any.

    Curves of constant classical curvature admit offset mates: with
    nonzero torsion they are circular helices, with zero torsion
    isotropic circles.  Everything else admits none.
    """
    tag = natural_class(c, grid).tag
    if tag is NaturalClassTag.CIRCULAR_HELIX:
        return BertrandNature.CIRCULAR_HELIX
    if tag is NaturalClassTag.ISOTROPIC_CIRCLE:
        return BertrandNature.ISOTROPIC_CIRCLE
    return BertrandNature.NOT_BERTRAND


@dataclass(frozen=True)
class BertrandPair:
    """Verification outcome for a claimed mate pair.

    ``offset`` is the geometrically recovered offset (mean over the
    grid); ``failures`` lists the checks that failed, empty when
    ``is_pair``.  ``tangent_product_spread`` is the raw max - min of the
    scalar product of the scale-invariant tangents.
    """

    base: CurveJet
    mate: CurveJet
    offset: float
    is_pair: bool
    nature: BertrandNature
    normal_parallel_sup: float
    tangent_product_spread: float
    curvature_flatness_sup: float
    offset_spread: float
    failures: tuple[str, ...]


def _spread(vals: Sequence[float]) -> float:
    return max(vals) - min(vals)


def verify_bertrand_pair(base: CurveJet, mate: CurveJet,
                         offset_fn: OffsetFn | float,
                         grid: Sequence[float],
                         tol: float = 1e-8) -> BertrandPair:
    """Check the mate-pair conditions over a grid at tolerance ``tol``.

    ``offset_fn`` is the claimed offset, a constant or a function of the
    parameter; a non-constant claim fails verification even if the two
    curves are geometrically a pair at some constant offset.
    """
    if len(grid) < 5:
        raise ValueError("verification needs a grid of at least 5 points")
    if callable(offset_fn):
        claimed = [float(offset_fn(s)) for s in grid]
    else:
        claimed = [float(offset_fn)] * len(grid)

    db = equiform_grid(base, grid)
    dm = equiform_grid(mate, grid)

    flat_sup = max(max(abs(d.curvature) for d in db),
                   max(abs(d.curvature) for d in dm))

    par_sup = 0.0
    recovered: list[float] = []
    products: list[float] = []
    for s, b, m in zip(grid, db, dm):
        nb, nm = b.normal, m.normal
        det2 = nb.x2 * nm.x3 - nb.x3 * nm.x2
        norms = math.hypot(nb.x2, nb.x3) * math.hypot(nm.x2, nm.x3)
        par_sup = max(par_sup, abs(det2) / norms if norms else math.inf)

        o = mate.position(s) - base.position(s)
        nn = nb.x2 * nb.x2 + nb.x3 * nb.x3
        recovered.append((o.x2 * nb.x2 + o.x3 * nb.x3) / nn)

        products.append(pg_dot(m.tangent, b.tangent))

    lam_mean = fmean(recovered)
    lam_scale = max(1.0, abs(lam_mean))
    prod_spread = _spread(products)

    failures: list[str] = []
    if flat_sup > tol:
        failures.append(
            f"equiform curvature reaches {flat_sup:.3e}; offset mates "
            "exist only over curves of constant classical curvature")
    if par_sup > tol:
        failures.append(
            f"scale-invariant normals deviate from parallel by {par_sup:.3e}")
    if _spread(recovered) > tol * lam_scale:
        failures.append(
            f"recovered offset varies by {_spread(recovered):.3e} over the grid")
    if _spread(claimed) > tol * max(1.0, abs(fmean(claimed))):
        failures.append("claimed offset is not constant over the grid")
    if max(abs(r - c) for r, c in zip(recovered, claimed)) > tol * lam_scale:
        failures.append(
            f"claimed offset differs from the recovered {lam_mean:.6g}")
    if prod_spread > tol * max(1.0, abs(fmean(products))):
        failures.append(
            f"tangent scalar product varies by {prod_spread:.3e} over the grid")

    return BertrandPair(
        base=base, mate=mate, offset=lam_mean,
        is_pair=not failures,
        nature=bertrand_nature(base, grid),
        normal_parallel_sup=par_sup,
        tangent_product_spread=prod_spread,
        curvature_flatness_sup=flat_sup,
        offset_spread=_spread(recovered),
        failures=tuple(failures))
