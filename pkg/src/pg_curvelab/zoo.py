"""Catalogue of closed-form example curves with oracle data.

Seven admissible curves in arc-length form, each carrying analytic jets
up to order eight and a table of closed-form oracle functions for the
classical and scale-invariant apparatus:

======================== ======================================== ========
name                     invariants                               eps
======================== ======================================== ========
timelike_general_helix   kappa = e^{-as},  tau = b                 +1
spacelike_general_helix  kappa = e^{-as},  tau = -b                -1
timelike_circular_helix  kappa = a/s,      tau = -b/(as)           -1
spacelike_circular_helix kappa = a/s,      tau = b/(as)            +1
timelike_log_spiral      kappa = 1/(as+b), tau = 0                 +1
bertrand_helix           kappa = a,        tau = b                 +1
isotropic_circle         kappa = a,        tau = 0                 +1
======================== ======================================== ========

The general helices have equiform curvature a*e^{as}; the circular
helices have constant equiform invariants (1/a, -+b/a^2); the log spiral
has equiform curvature a and zero equiform torsion; the last two have
zero equiform curvature and are the curves that admit normal-offset
mates.

Where published closed forms for these curves are internally
inconsistent (a frame sign that breaks the determinant normalization, a
torsion sign that contradicts the definition), the oracle stores the
self-consistent value and the entry's ``notes`` record the discrepancy.

Curves are built on a domain slightly wider (2% per side, clipped to the
validity region) than the entry's nominal domain, so that difference
stencils centered at the nominal endpoints stay evaluable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import PGVector
from .curves import CurveJet, make_analytic_curve
from .errors import ParameterConstraintError, UnknownCurveError

MAX_JET_ORDER = 8
_MARGIN = 1e-3          # lower bound kept under logarithm arguments


@dataclass(frozen=True)
class OracleForms:
    """Closed-form apparatus of a catalogue curve.

    All fields but ``epsilon`` are functions of the arc-length parameter.
    ``tangent``/``normal``/``binormal`` are the classical frame;
    the ``equiform_*`` triple is the scale-invariant frame.
    """

    kappa: Callable[[float], float]
    tau: Callable[[float], float]
    epsilon: int
    tangent: Callable[[float], PGVector]
    normal: Callable[[float], PGVector]
    binormal: Callable[[float], PGVector]
    equiform_curvature: Callable[[float], float]
    equiform_torsion: Callable[[float], float]
    equiform_tangent: Callable[[float], PGVector]
    equiform_normal: Callable[[float], PGVector]
    equiform_binormal: Callable[[float], PGVector]


@dataclass(frozen=True)
class ZooEntry:
    name: str
    params: dict[str, float]
    domain: tuple[float, float]
    curve: CurveJet
    oracle: OracleForms
    notes: tuple[str, ...]


JetFn = Callable[[float, int], PGVector]


def _build_curve(jet: JetFn, lo: float, hi: float,
                 valid_lo: float = -math.inf,
                 valid_hi: float = math.inf) -> CurveJet:
    pad = 0.02 * (hi - lo)
    plo = max(lo - pad, valid_lo)
    phi = min(hi + pad, valid_hi)
    fns = [lambda s, k=k: jet(s, k) for k in range(MAX_JET_ORDER + 1)]
    return make_analytic_curve(fns[0], fns[1], fns[2], fns[3], fns[4],
                               (plo, phi), higher=fns[5:])


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParameterConstraintError(message)


def _check_domain(domain: tuple[float, float] | None,
                  default: tuple[float, float]) -> tuple[float, float]:
    if domain is None:
        return default
    lo, hi = float(domain[0]), float(domain[1])
    _require(lo < hi, f"domain [{lo}, {hi}] is empty")
    return lo, hi


# ---------------------------------------------------------------------------
# general helices (exponential-times-hyperbolic family)


def _exp_helix_tables(a: float, b: float, p0: float, q0: float
                      ) -> list[tuple[float, float]]:
    """Coefficients (P_k, Q_k) with d^k/ds^k of e^{-as}(P0 cosh(bs) +
    Q0 sinh(bs)) equal to e^{-as}(P_k cosh(bs) + Q_k sinh(bs))."""
    tabs = [(p0, q0)]
    for _ in range(MAX_JET_ORDER):
        p, q = tabs[-1]
        tabs.append((-a * p + b * q, b * p - a * q))
    return tabs


def _general_helix(a: float, b: float, domain: tuple[float, float] | None,
                   mirrored: bool) -> ZooEntry:
    _require(a != 0.0 and b != 0.0, "parameters a and b must be nonzero")
    _require(a != b and a != -b,
             "parameters must satisfy a != +-b (the closed form divides "
             "by (a^2 - b^2)^2)")
    lo, hi = _check_domain(domain, (0.0, 2.0))

    d = (a * a - b * b) ** 2
    ycoef = _exp_helix_tables(a, b, (a * a + b * b) / d, 2.0 * a * b / d)
    zcoef = _exp_helix_tables(a, b, 2.0 * a * b / d, (a * a + b * b) / d)
    if mirrored:
        ycoef, zcoef = zcoef, ycoef

    def jet(s: float, k: int) -> PGVector:
        e = math.exp(-a * s)
        ch = math.cosh(b * s)
        sh = math.sinh(b * s)
        x = s if k == 0 else (1.0 if k == 1 else 0.0)
        py, qy = ycoef[k]
        pz, qz = zcoef[k]
        return PGVector(x, e * (py * ch + qy * sh), e * (pz * ch + qz * sh))

    def rho(s: float) -> float:
        return math.exp(a * s)

    def e2(s: float) -> PGVector:
        ch, sh = math.cosh(b * s), math.sinh(b * s)
        return PGVector(0.0, sh, ch) if mirrored else PGVector(0.0, ch, sh)

    def e3(s: float) -> PGVector:
        ch, sh = math.cosh(b * s), math.sinh(b * s)
        return PGVector(0.0, -ch, -sh) if mirrored else PGVector(0.0, sh, ch)

    def e1(s: float) -> PGVector:
        j = jet(s, 1)
        return PGVector(1.0, j.x2, j.x3)

    tau_val = -b if mirrored else b
    oracle = OracleForms(
        kappa=lambda s: math.exp(-a * s),
        tau=lambda s: tau_val,
        epsilon=-1 if mirrored else 1,
        tangent=e1, normal=e2, binormal=e3,
        equiform_curvature=lambda s: a * math.exp(a * s),
        equiform_torsion=lambda s: tau_val * math.exp(a * s),
        equiform_tangent=lambda s: rho(s) * e1(s),
        equiform_normal=lambda s: rho(s) * e2(s),
        equiform_binormal=lambda s: rho(s) * e3(s),
    )
    if mirrored:
        name = "spacelike_general_helix"
        notes = (
            "this curve is the component swap (y <-> z) of "
            "timelike_general_helix; its tabulated equiform-torsion sign "
            "-b*exp(a*s) agrees with the definitional value torsion/curvature",
        )
    else:
        name = "timelike_general_helix"
        notes = (
            "reference tables list the equiform torsion of this curve as "
            "-b*exp(a*s); the definition (torsion / curvature) gives "
            "+b*exp(a*s), which is the value stored here and reported",
        )
    return ZooEntry(name=name, params={"a": a, "b": b}, domain=(lo, hi),
                    curve=_build_curve(jet, lo, hi), oracle=oracle,
                    notes=notes)


# ---------------------------------------------------------------------------
# circular helices (power-times-hyperbolic-of-log family)


def _log_helix_tables(a: float, b: float, p0: float, q0: float
                      ) -> list[tuple[int, float, float]]:
    """Rows (m, P, Q) with the k-th derivative of s^{1}(P0 cosh(u) +
    Q0 sinh(u)), u = (b/a) ln(as), equal to s^{-m}(P cosh(u) + Q sinh(u))."""
    r = b / a
    tabs = [(-1, p0, q0)]
    for _ in range(MAX_JET_ORDER):
        m, p, q = tabs[-1]
        tabs.append((m + 1, -m * p + r * q, r * p - m * q))
    return tabs


def _circular_helix(a: float, b: float, domain: tuple[float, float] | None,
                    mirrored: bool) -> ZooEntry:
    _require(a != 0.0 and b != 0.0, "parameters a and b must be nonzero")
    _require(a != b and a != -b,
             "parameters must satisfy a != +-b (the closed form divides "
             "by b*(b^2 - a^2))")
    default = (0.5 / a, 3.0) if a > 0 else None
    if domain is None and default is None:
        raise ParameterConstraintError(
            "no default domain exists for a < 0; pass one with a*s > 0")
    lo, hi = _check_domain(domain, default or (0.0, 0.0))
    _require(min(a * lo, a * hi) >= _MARGIN,
             f"domain must keep a*s >= {_MARGIN} (logarithm argument)")

    c = a ** 3 / (b * (b * b - a * a))
    ycoef = _log_helix_tables(a, b, -a * c, b * c)
    zcoef = _log_helix_tables(a, b, b * c, -a * c)
    if mirrored:
        ycoef, zcoef = zcoef, ycoef

    def uu(s: float) -> float:
        return (b / a) * math.log(a * s)

    def jet(s: float, k: int) -> PGVector:
        ch, sh = math.cosh(uu(s)), math.sinh(uu(s))
        x = s if k == 0 else (1.0 if k == 1 else 0.0)
        m, py, qy = ycoef[k]
        _, pz, qz = zcoef[k]
        sc = s ** (-m)
        return PGVector(x, sc * (py * ch + qy * sh), sc * (pz * ch + qz * sh))

    def e2(s: float) -> PGVector:
        ch, sh = math.cosh(uu(s)), math.sinh(uu(s))
        return PGVector(0.0, ch, sh) if mirrored else PGVector(0.0, sh, ch)

    def e3(s: float) -> PGVector:
        ch, sh = math.cosh(uu(s)), math.sinh(uu(s))
        return PGVector(0.0, sh, ch) if mirrored else PGVector(0.0, -ch, -sh)

    def e1(s: float) -> PGVector:
        j = jet(s, 1)
        return PGVector(1.0, j.x2, j.x3)

    def rho(s: float) -> float:
        return s / a

    tau_sign = 1.0 if mirrored else -1.0
    oracle = OracleForms(
        kappa=lambda s: a / s,
        tau=lambda s: tau_sign * b / (a * s),
        epsilon=1 if mirrored else -1,
        tangent=e1, normal=e2, binormal=e3,
        equiform_curvature=lambda s: 1.0 / a,
        equiform_torsion=lambda s: tau_sign * b / (a * a),
        equiform_tangent=lambda s: rho(s) * e1(s),
        equiform_normal=lambda s: rho(s) * e2(s),
        equiform_binormal=lambda s: rho(s) * e3(s),
    )
    name = "spacelike_circular_helix" if mirrored else "timelike_circular_helix"
    flip = ("without" if mirrored else "with") + " a leading minus sign"
    notes = (
        f"reference tables list the binormal of this curve {flip}, which "
        "makes the frame determinant -1; the stored binormal carries the "
        "opposite sign so that det(tangent, normal, binormal) = +1",
    )
    return ZooEntry(name=name, params={"a": a, "b": b}, domain=(lo, hi),
                    curve=_build_curve(jet, lo, hi,
                                       valid_lo=_MARGIN / a if a > 0 else -math.inf,
                                       valid_hi=math.inf if a > 0 else _MARGIN / a),
                    oracle=oracle, notes=notes)


# ---------------------------------------------------------------------------
# logarithmic spiral


def _log_spiral(a: float, b: float,
                domain: tuple[float, float] | None) -> ZooEntry:
    _require(a != 0.0 and b != 0.0, "parameters a and b must be nonzero")
    lo, hi = _check_domain(domain, (0.0, 4.0))
    _require(min(a * lo + b, a * hi + b) >= _MARGIN,
             f"domain must keep a*s + b >= {_MARGIN} (logarithm argument)")

    def jet(s: float, k: int) -> PGVector:
        g = a * s + b
        if k == 0:
            return PGVector(s, g / (a * a) * (math.log(g) - 1.0), 0.0)
        if k == 1:
            return PGVector(1.0, math.log(g) / a, 0.0)
        y = (-1.0) ** k * math.factorial(k - 2) * a ** (k - 2) / g ** (k - 1)
        return PGVector(0.0, y, 0.0)

    def e1(s: float) -> PGVector:
        return PGVector(1.0, math.log(a * s + b) / a, 0.0)

    oracle = OracleForms(
        kappa=lambda s: 1.0 / (a * s + b),
        tau=lambda s: 0.0,
        epsilon=1,
        tangent=e1,
        normal=lambda s: PGVector(0.0, 1.0, 0.0),
        binormal=lambda s: PGVector(0.0, 0.0, 1.0),
        equiform_curvature=lambda s: a,
        equiform_torsion=lambda s: 0.0,
        equiform_tangent=lambda s: (a * s + b) * e1(s),
        equiform_normal=lambda s: PGVector(0.0, a * s + b, 0.0),
        equiform_binormal=lambda s: PGVector(0.0, 0.0, a * s + b),
    )
    notes = (
        "reference tables claim this curve satisfies the WeakAW2 condition "
        "and not WeakAW3; evaluating the span coefficients with constant "
        "nonzero equiform curvature and identically zero equiform torsion "
        "gives the opposite (u = 2a^2 != 0 so WeakAW2 fails with residual "
        "2, v = 0 so WeakAW3 holds); the computed verdicts are reported "
        "and this conflict is flagged rather than silently resolved",
    )
    valid_lo = (_MARGIN - b) / a if a > 0 else -math.inf
    valid_hi = math.inf if a > 0 else (_MARGIN - b) / a
    return ZooEntry(name="timelike_log_spiral", params={"a": a, "b": b},
                    domain=(lo, hi),
                    curve=_build_curve(jet, lo, hi, valid_lo, valid_hi),
                    oracle=oracle, notes=notes)


# ---------------------------------------------------------------------------
# constant-curvature fixtures (the curves admitting normal-offset mates)


def bertrand_fixture(a: float, b: float,
                     domain: tuple[float, float] | None = None) -> ZooEntry:
    """Constant-invariant helix (s, (a/b^2) cosh(bs), (a/b^2) sinh(bs)).

    It has kappa = a, tau = b, zero equiform curvature and equiform
    torsion b/a: the circular-helix case of the offset-mate family.
    """
    a, b = float(a), float(b)
    _require(a > 0.0, "parameter a must be positive (a is the curvature)")
    _require(b != 0.0, "parameter b must be nonzero")
    lo, hi = _check_domain(domain, (-1.0, 1.0))

    def jet(s: float, k: int) -> PGVector:
        ch, sh = math.cosh(b * s), math.sinh(b * s)
        x = s if k == 0 else (1.0 if k == 1 else 0.0)
        amp = a * b ** (k - 2)
        even = k % 2 == 0
        return PGVector(x, amp * (ch if even else sh), amp * (sh if even else ch))

    def e2(s: float) -> PGVector:
        return PGVector(0.0, math.cosh(b * s), math.sinh(b * s))

    def e3(s: float) -> PGVector:
        return PGVector(0.0, math.sinh(b * s), math.cosh(b * s))

    def e1(s: float) -> PGVector:
        return PGVector(1.0, (a / b) * math.sinh(b * s),
                        (a / b) * math.cosh(b * s))

    oracle = OracleForms(
        kappa=lambda s: a,
        tau=lambda s: b,
        epsilon=1,
        tangent=e1, normal=e2, binormal=e3,
        equiform_curvature=lambda s: 0.0,
        equiform_torsion=lambda s: b / a,
        equiform_tangent=lambda s: (1.0 / a) * e1(s),
        equiform_normal=lambda s: (1.0 / a) * e2(s),
        equiform_binormal=lambda s: (1.0 / a) * e3(s),
    )
    return ZooEntry(name="bertrand_helix", params={"a": a, "b": b},
                    domain=(lo, hi), curve=_build_curve(jet, lo, hi),
                    oracle=oracle, notes=())


def isotropic_circle_fixture(a: float,
                             domain: tuple[float, float] | None = None
                             ) -> ZooEntry:
    """Parabola (s, a s^2 / 2, 0): kappa = a, tau = 0, both equiform
    invariants zero — the isotropic-circle case of the offset-mate family."""
    a = float(a)
    _require(a > 0.0, "parameter a must be positive (a is the curvature)")
    lo, hi = _check_domain(domain, (-1.0, 1.0))

    def jet(s: float, k: int) -> PGVector:
        if k == 0:
            return PGVector(s, 0.5 * a * s * s, 0.0)
        if k == 1:
            return PGVector(1.0, a * s, 0.0)
        return PGVector(0.0, a if k == 2 else 0.0, 0.0)

    oracle = OracleForms(
        kappa=lambda s: a,
        tau=lambda s: 0.0,
        epsilon=1,
        tangent=lambda s: PGVector(1.0, a * s, 0.0),
        normal=lambda s: PGVector(0.0, 1.0, 0.0),
        binormal=lambda s: PGVector(0.0, 0.0, 1.0),
        equiform_curvature=lambda s: 0.0,
        equiform_torsion=lambda s: 0.0,
        equiform_tangent=lambda s: PGVector(1.0 / a, s, 0.0),
        equiform_normal=lambda s: PGVector(0.0, 1.0 / a, 0.0),
        equiform_binormal=lambda s: PGVector(0.0, 0.0, 1.0 / a),
    )
    return ZooEntry(name="isotropic_circle", params={"a": a},
                    domain=(lo, hi), curve=_build_curve(jet, lo, hi),
                    oracle=oracle, notes=())


# ---------------------------------------------------------------------------
# registry


_FAMILIES: dict[str, tuple[str, str]] = {
    # name -> (constraints description, default domain description)
    "timelike_general_helix": ("a, b nonzero; a != +-b", "[0, 2]"),
    "spacelike_general_helix": ("a, b nonzero; a != +-b", "[0, 2]"),
    "timelike_circular_helix": ("a, b nonzero; a != +-b; a*s > 0 on domain",
                                "[1/(2a), 3] for a > 0"),
    "spacelike_circular_helix": ("a, b nonzero; a != +-b; a*s > 0 on domain",
                                 "[1/(2a), 3] for a > 0"),
    "timelike_log_spiral": ("a, b nonzero; a*s + b > 0 on domain", "[0, 4]"),
    "bertrand_helix": ("a > 0; b nonzero", "[-1, 1]"),
    "isotropic_circle": ("a > 0 (b unused)", "[-1, 1]"),
}


def zoo_names() -> list[str]:
    return list(_FAMILIES)


def describe_constraints(name: str) -> tuple[str, str]:
    """(parameter constraints, default domain) for a catalogue name."""
    try:
        return _FAMILIES[name]
    except KeyError:
        raise UnknownCurveError(
            f"unknown curve {name!r}; known: {', '.join(_FAMILIES)}") from None


def get_example(name: str, a: float, b: float,
                domain: tuple[float, float] | None = None) -> ZooEntry:
    """Build a catalogue entry by name.

    Raises :class:`UnknownCurveError` for unknown names and
    :class:`ParameterConstraintError` when (a, b, domain) violate the
    family's validity constraints.
    """
    a, b = float(a), float(b)
    if name == "timelike_general_helix":
        return _general_helix(a, b, domain, mirrored=False)
    if name == "spacelike_general_helix":
        return _general_helix(a, b, domain, mirrored=True)
    if name == "timelike_circular_helix":
        return _circular_helix(a, b, domain, mirrored=False)
    if name == "spacelike_circular_helix":
        return _circular_helix(a, b, domain, mirrored=True)
    if name == "timelike_log_spiral":
        return _log_spiral(a, b, domain)
    if name == "bertrand_helix":
        return bertrand_fixture(a, b, domain)
    if name == "isotropic_circle":
        return isotropic_circle_fixture(a, domain)
    raise UnknownCurveError(
        f"unknown curve {name!r}; known: {', '.join(_FAMILIES)}")


def all_entries(params: dict[str, tuple[float, float]] | None = None
                ) -> list[ZooEntry]:
    """One entry per family at standard parameters (tests and sweeps).

    ``params`` may override the (a, b) pair per name.  Defaults: general
    helices and circular helices a=1, b=2 (circular helices on [0.6, 3]);
    log spiral and fixtures a=1, b=1.
    """
    chosen = {
        "timelike_general_helix": (1.0, 2.0),
        "spacelike_general_helix": (1.0, 2.0),
        "timelike_circular_helix": (1.0, 2.0),
        "spacelike_circular_helix": (1.0, 2.0),
        "timelike_log_spiral": (1.0, 1.0),
        "bertrand_helix": (1.0, 1.0),
        "isotropic_circle": (1.0, 1.0),
    }
    if params:
        chosen.update(params)
    out = []
    for name, (a, b) in chosen.items():
        domain = (0.6, 3.0) if "circular_helix" in name else None
        out.append(get_example(name, a, b, domain))
    return out
