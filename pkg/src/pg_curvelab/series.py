"""Truncated derivative-series arithmetic.

A :class:`DSeries` holds the values (f, f', f'', ..., f^(n-1)) of a smooth
scalar function at one point and propagates them through arithmetic with
the Leibniz/chain rules.  This removes hand-derived quotient- and
square-root-rule formulas from the geometric modules: e.g. the rate of the
equiform curvature comes out of ``(1/sqrt(w))`` applied to the series of
w = y''^2 - z''^2 instead of a page of algebra.

Only what the package needs is implemented: +, -, *, /, sqrt, scalar ops
and truncation.  Entries are plain floats; series in an expression must
have equal length.
"""

from __future__ import annotations

import math
from typing import Iterable


class DSeries:
    """Derivative values (f, f', ..., f^(n-1)) of a function at a point."""

    __slots__ = ("vals",)

    def __init__(self, vals: Iterable[float]):
        self.vals = tuple(float(v) for v in vals)
        if not self.vals:
            raise ValueError("DSeries needs at least one entry")

    def __len__(self) -> int:
        return len(self.vals)

    def __getitem__(self, k: int) -> float:
        return self.vals[k]

    def __repr__(self) -> str:
        return f"DSeries{self.vals!r}"

    def truncate(self, n: int) -> "DSeries":
        return DSeries(self.vals[:n])

    @staticmethod
    def constant(c: float, n: int) -> "DSeries":
        return DSeries((float(c),) + (0.0,) * (n - 1))

    def _check(self, other: "DSeries") -> None:
        if len(self) != len(other):
            raise ValueError("DSeries lengths differ")

    def __add__(self, other: "DSeries") -> "DSeries":
        self._check(other)
        return DSeries(a + b for a, b in zip(self.vals, other.vals))

    def __sub__(self, other: "DSeries") -> "DSeries":
        self._check(other)
        return DSeries(a - b for a, b in zip(self.vals, other.vals))

    def __neg__(self) -> "DSeries":
        return DSeries(-a for a in self.vals)

    def __mul__(self, other):
        if isinstance(other, DSeries):
            self._check(other)
            n = len(self)
            out = []
            for k in range(n):
                out.append(math.fsum(
                    math.comb(k, i) * self.vals[i] * other.vals[k - i]
                    for i in range(k + 1)))
            return DSeries(out)
        return DSeries(other * a for a in self.vals)

    __rmul__ = __mul__

    def __truediv__(self, other: "DSeries") -> "DSeries":
        """Series of f/g, solving the Leibniz identity order by order."""
        self._check(other)
        if other.vals[0] == 0.0:
            raise ZeroDivisionError("division by a series with zero leading value")
        n = len(self)
        out = [self.vals[0] / other.vals[0]]
        for k in range(1, n):
            acc = self.vals[k] - math.fsum(
                math.comb(k, i) * out[i] * other.vals[k - i] for i in range(k))
            out.append(acc / other.vals[0])
        return DSeries(out)

    def reciprocal(self) -> "DSeries":
        return DSeries.constant(1.0, len(self)) / self

    def sqrt(self) -> "DSeries":
        """Series of sqrt(f); requires a positive leading value."""
        if self.vals[0] <= 0.0:
            raise ValueError("sqrt needs a positive leading value")
        n = len(self)
        out = [math.sqrt(self.vals[0])]
        for k in range(1, n):
            acc = self.vals[k] - math.fsum(
                math.comb(k, i) * out[i] * out[k - i] for i in range(1, k))
            out.append(acc / (2.0 * out[0]))
        return DSeries(out)
