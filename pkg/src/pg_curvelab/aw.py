"""Classification of curves by the span structure of higher derivatives.

For an admissible curve in arc-length form the second, third and fourth
derivative vectors live in the isotropic plane and decompose over the
scale-invariant normal N and binormal B:

    d2 = (1/rho^2) * N
    d3 = a11*N + a12*B     a11 = -K/rho^3          a12 = T/rho^3
    d4 = a21*N + a22*B     a21 = u/rho^4           a22 = v/rho^4

with u = 2K^2 + T^2 - K',  v = T' - 3KT, where the primes are rates in
the scale-invariant parameter sigma (rho times the s-rates of the
equiform module; that conversion is what makes d4 literally equal the
fourth s-derivative of the curve).  The
five classification conditions constrain d4:

    AW1      d4 has no isotropic-plane component        (u = 0 and v = 0)
    AW2      d4 parallel to d3 in the N-B plane         (det = 0)
    AW3      d4 parallel to N after removing its        (v = 0)
             component along the unit of d2
    WeakAW2  d4 lies along the unit vector built from   (u = 0)
             d3 by signed orthogonalization against d2
    WeakAW3  d4 lies along the unit of d2               (v = 0)

where det = K^2 T - K T' + T K' - T^3.  Scalar residuals divide |u|, |v|
and |det| by a magnitude floor built from K, T and their rates, so a
condition "holds" when its normalized residual is below tolerance.  The
vector forms of the same conditions are implemented independently and
used as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .algebra import PGVector, pg_dot
from .curves import CurveJet, JetKind
from .equiform import EquiformData, equiform_data, equiform_grid
from .errors import LightlikeNormalError

_OMEGA_FLOOR = 1e-30
_CONDITIONS = ("AW1", "AW2", "AW3", "WeakAW2", "WeakAW3")


def _u_coeff(K: float, Tq: float, Kp: float) -> float:
    return 2.0 * K * K + Tq * Tq - Kp


def _v_coeff(K: float, Tq: float, Tqp: float) -> float:
    return Tqp - 3.0 * K * Tq


def _det_coeff(K: float, Tq: float, Kp: float, Tqp: float) -> float:
    return K * K * Tq - K * Tqp + Tq * Kp - Tq * Tq * Tq


@dataclass(frozen=True)
class AWResiduals:
    """Normalized scalar residuals of the five conditions at one point."""

    aw1: float
    aw2: float
    aw3: float
    weak_aw2: float
    weak_aw3: float
    u: float
    v: float
    det: float
    omega: float

    def as_dict(self) -> dict[str, float]:
        return {"AW1": self.aw1, "AW2": self.aw2, "AW3": self.aw3,
                "WeakAW2": self.weak_aw2, "WeakAW3": self.weak_aw3}


def aw_residuals(K: float, Tq: float, Kp: float, Tqp: float) -> AWResiduals:
    """Scalar residuals from the invariants and their sigma-rates.

    Normalization: omega = max(K^2, T^2, |K'|, |T'|, floor).  The linear
    conditions are divided by omega, the cubic determinant by
    omega^(3/2), making every residual invariant under a common rescaling
    of (K, T, K', T') consistent with their weights.
    """
    u = _u_coeff(K, Tq, Kp)
    v = _v_coeff(K, Tq, Tqp)
    det = _det_coeff(K, Tq, Kp, Tqp)
    omega = max(K * K, Tq * Tq, abs(Kp), abs(Tqp), _OMEGA_FLOOR)
    lin = 1.0 / omega
    return AWResiduals(
        aw1=max(abs(u), abs(v)) * lin,
        aw2=abs(det) / omega ** 1.5,
        aw3=abs(v) * lin,
        weak_aw2=abs(u) * lin,
        weak_aw3=abs(v) * lin,
        u=u, v=v, det=det, omega=omega)


@dataclass(frozen=True)
class DerivativeVectors:
    """Derivatives two to four of the curve and their frame coefficients."""

    s: float
    frame: EquiformData
    d2: PGVector
    d3: PGVector
    d4: PGVector
    a11: float
    a12: float
    a21: float
    a22: float


def sigma_rates(d: EquiformData) -> tuple[float, float]:
    """Rates of the two invariants in the scale-invariant parameter."""
    return d.rho * d.curvature_rate, d.rho * d.torsion_rate


def derivative_vectors(c: CurveJet, s: float) -> DerivativeVectors:
    d = equiform_data(c, s)
    rho = d.rho
    r2 = rho * rho
    r3 = r2 * rho
    r4 = r3 * rho
    K, Tq = d.curvature, d.torsion
    Kp, Tqp = sigma_rates(d)
    a11 = -K / r3
    a12 = Tq / r3
    a21 = _u_coeff(K, Tq, Kp) / r4
    a22 = _v_coeff(K, Tq, Tqp) / r4
    return DerivativeVectors(
        s=s, frame=d,
        d2=(1.0 / r2) * d.normal,
        d3=a11 * d.normal + a12 * d.binormal,
        d4=a21 * d.normal + a22 * d.binormal,
        a11=a11, a12=a12, a21=a21, a22=a22)


@dataclass(frozen=True)
class UnitDirections:
    """Unit of d2 and the signed-orthogonalized unit of d3.

    ``q2`` is None when d3 has no component outside the line of d2 (for
    example whenever the torsion vanishes); the conditions that project
    onto it are then degenerate at this point.
    """

    q1: PGVector
    q2: PGVector | None


def unit_directions(dv: DerivativeVectors) -> UnitDirections:
    d2, d3 = dv.d2, dv.d3
    g11 = pg_dot(d2, d2)
    scale = d2.max_abs()
    if scale == 0.0 or abs(g11) <= 1e-14 * scale * scale:
        raise LightlikeNormalError(
            f"second derivative at s={dv.s:.6g} is numerically lightlike; "
            "no unit direction exists")
    q1 = d2 / abs(g11) ** 0.5
    e1 = 1.0 if g11 > 0.0 else -1.0          # <q1, q1> = e1
    w = d3 - (pg_dot(d3, q1) / e1) * q1
    g22 = pg_dot(w, w)
    wscale = w.max_abs()
    if wscale == 0.0 or abs(g22) <= 1e-14 * wscale * wscale:
        return UnitDirections(q1=q1, q2=None)
    return UnitDirections(q1=q1, q2=w / abs(g22) ** 0.5)


def _safe_div(num: float, *scales: float) -> float:
    if num == 0.0:
        return 0.0
    return num / max(*scales, _OMEGA_FLOOR)


def vector_identity_residuals(dv: DerivativeVectors) -> dict[str, float]:
    """The five conditions evaluated on the raw vectors.

    Each residual is the sup-norm of the defining vector equation's
    defect, normalized by the largest term entering it, and exactly 0.0
    when the defect vector is exactly zero.  Conditions whose unit
    direction does not exist are reported as NaN.
    """
    d2, d3, d4 = dv.d2, dv.d3, dv.d4
    out: dict[str, float] = {}

    out["AW1"] = _safe_div(d4.max_abs(),
                           d3.max_abs(), d2.max_abs())

    # parallelism of d3 and d4: <d3,d3>*d4 - <d4,d3>*d3
    g33 = pg_dot(d3, d3)
    g43 = pg_dot(d4, d3)
    defect = g33 * d4 - g43 * d3
    out["AW2"] = _safe_div(defect.max_abs(),
                           abs(g33) * d4.max_abs(), abs(g43) * d3.max_abs())

    # <d2,d2>*d4 - <d4,d2>*d2
    g22 = pg_dot(d2, d2)
    g42 = pg_dot(d4, d2)
    defect = g22 * d4 - g42 * d2
    out["AW3"] = _safe_div(defect.max_abs(),
                           abs(g22) * d4.max_abs(), abs(g42) * d2.max_abs())

    units = unit_directions(dv)
    if units.q2 is None:
        out["WeakAW2"] = float("nan")
    else:
        q2 = units.q2
        e2 = 1.0 if pg_dot(q2, q2) > 0.0 else -1.0
        defect = d4 - (pg_dot(d4, q2) / e2) * q2
        out["WeakAW2"] = _safe_div(defect.max_abs(), d4.max_abs())

    q1 = units.q1
    e1 = 1.0 if pg_dot(q1, q1) > 0.0 else -1.0
    defect = d4 - (pg_dot(d4, q1) / e1) * q1
    out["WeakAW3"] = _safe_div(defect.max_abs(), d4.max_abs())
    return out


@dataclass(frozen=True)
class AWVerdict:
    holds: bool
    sup_residual: float
    grid_size: int


@dataclass(frozen=True)
class AWReport:
    """Grid verdicts for the five span conditions.

    ``verdicts`` maps condition name to its verdict; ``holds`` collects
    the names whose sup residual stayed below the tolerance.
    ``degenerate_points`` lists parameters where the orthogonalized unit
    of d3 does not exist.  ``diagnostics`` carries cross-check or caller
    notes; it never changes the verdicts.
    """

    verdicts: Mapping[str, AWVerdict]
    tolerance: float
    degenerate_points: tuple[float, ...]
    diagnostics: tuple[str, ...]

    @property
    def holds(self) -> set[str]:
        return {name for name, v in self.verdicts.items() if v.holds}


def classify(c: CurveJet, grid: Sequence[float],
             tol: float | None = None,
             notes: Sequence[str] = ()) -> AWReport:
    """Sweep the grid and decide which span conditions hold on it.

    The default tolerance is 1e-8 for curves with analytic jets and 1e-5
    for finite-difference jets (whose fourth derivatives carry more
    round-off).  At each point the scalar residuals are also checked
    against the independent vector forms; a verdict-level disagreement is
    recorded as a diagnostic.
    """
    if tol is None:
        tol = 1e-8 if c.kind is JetKind.ANALYTIC else 1e-5
    equiform_grid(c, grid)  # admissibility + normal-character sweep

    sup: dict[str, float] = {name: 0.0 for name in _CONDITIONS}
    degenerate: list[float] = []
    diagnostics = list(notes)
    mismatches = 0
    for s in grid:
        dv = derivative_vectors(c, s)
        Kp, Tqp = sigma_rates(dv.frame)
        scalars = aw_residuals(dv.frame.curvature, dv.frame.torsion,
                               Kp, Tqp).as_dict()
        vectors = vector_identity_residuals(dv)
        for name in _CONDITIONS:
            sup[name] = max(sup[name], scalars[name])
            rv = vectors[name]
            if rv != rv:                      # NaN: unit direction missing
                continue
            if (scalars[name] <= tol) != (rv <= tol) and mismatches < 5:
                diagnostics.append(
                    f"{name} at s={s:.6g}: scalar residual "
                    f"{scalars[name]:.3e} and vector residual {rv:.3e} "
                    f"fall on opposite sides of tol={tol:.1e}")
                mismatches += 1
        weak2 = vectors["WeakAW2"]
        if weak2 != weak2:
            degenerate.append(s)

    verdicts = {name: AWVerdict(holds=sup[name] <= tol,
                                sup_residual=sup[name],
                                grid_size=len(grid))
                for name in _CONDITIONS}
    return AWReport(verdicts=verdicts, tolerance=tol,
                    degenerate_points=tuple(degenerate),
                    diagnostics=tuple(diagnostics))
