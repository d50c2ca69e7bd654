"""Generators for the named example families.

All three families are emitted in inequality form (``A x <= b`` with the
nonnegativity rows spelled out where the construction needs them) together
with their objective.  Parameters are validated in the exact order of the
scalar field they live in, so infinitesimal parameters work the same way as
rational ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .puiseux import PuiseuxFraction, T_LARGE
from .simplex import LinearProgram


class ParameterError(ValueError):
    """A generator parameter violates its documented bound."""


def _field_pair(delta, epsilon):
    """Coerce the two parameters into one common scalar field."""
    if isinstance(delta, PuiseuxFraction) or isinstance(epsilon, PuiseuxFraction):
        orient = (delta.orientation if isinstance(delta, PuiseuxFraction)
                  else epsilon.orientation)
        if not isinstance(delta, PuiseuxFraction):
            delta = PuiseuxFraction.constant(Fraction(delta), orient)
        if not isinstance(epsilon, PuiseuxFraction):
            epsilon = PuiseuxFraction.constant(Fraction(epsilon), orient)
        if delta.orientation is not epsilon.orientation:
            raise ParameterError("delta and epsilon use different orientations")
        one = PuiseuxFraction.one(orient)
        zero = PuiseuxFraction.zero(orient)
    else:
        delta, epsilon = Fraction(delta), Fraction(epsilon)
        one, zero = Fraction(1), Fraction(0)
    return delta, epsilon, one, zero


@dataclass
class GoldfarbSitSpec:
    """Parameters of the deformed-cube family.

    Requires 0 < delta <= 1/2 and 0 < epsilon < delta / 2, checked in the
    parameter field's own order.
    """

    d: int
    delta: object
    epsilon: object

    def __post_init__(self):
        if self.d < 2:
            raise ParameterError(f"dimension must be at least 2 (got d = {self.d})")
        delta, epsilon, one, zero = _field_pair(self.delta, self.epsilon)
        if not (delta > zero and delta <= one * Fraction(1, 2)):
            raise ParameterError(
                f"delta must satisfy 0 < delta <= 1/2 (violated by delta = {self.delta})")
        half_delta = delta * Fraction(1, 2)
        if not (epsilon > zero and epsilon < half_delta):
            raise ParameterError(
                f"epsilon must satisfy 0 < epsilon < delta/2 (violated by "
                f"epsilon = {self.epsilon}, delta/2 = {half_delta})")
        self.delta = delta
        self.epsilon = epsilon


def goldfarb_sit(spec: GoldfarbSitSpec) -> LinearProgram:
    """Deformed d-cube on which the steepest-edge walk from the origin is
    forced through every vertex.

    Rows (2d of them, in construction order): the two bounds on x1, then for
    each level j the pair  x_{j-1} - delta*x_j <= 0  and
    x_{j-1} + delta*x_j <= step(j).  The step sizes scale with the product
    epsilon*delta per level, which reproduces the reference vertex data.
    """
    d, delta, eps = spec.d, spec.delta, spec.epsilon
    e = eps * delta
    zero = delta - delta
    one = delta / delta
    rows: list[list] = []
    rhs: list = []

    def unit(j, coeff):
        row = [zero] * d
        row[j] = coeff
        return row

    rows.append(unit(0, zero - one))
    rhs.append(zero)
    rows.append(unit(0, one))
    rhs.append(_power(e, d - 1, one))
    for j in range(2, d + 1):
        row = [zero] * d
        row[j - 2] = one
        row[j - 1] = zero - delta
        rows.append(row)
        rhs.append(zero)
        row = [zero] * d
        row[j - 2] = one
        row[j - 1] = delta
        rows.append(row)
        rhs.append(_power(e, d - j, one) * delta)
    c = [_power(delta, d - i, one) for i in range(1, d + 1)]
    return LinearProgram(rows, rhs, c, sense="max", form="inequality")


def _power(x, k: int, one):
    acc = one
    for _ in range(k):
        acc = acc * x
    return acc


@dataclass
class LongWindingSpec:
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise ParameterError(f"r must be at least 1 (got {self.r})")


def long_and_winding(spec: LongWindingSpec) -> LinearProgram:
    """Feasibility set with 3r+4 rows in the 2r+2 variables
    u0, v0, ..., ur, vr over the field with t large; objective: minimize v0.

    Rows: u0 <= t, v0 <= t^2, then per level i the triple
    u_i <= t*u_{i-1}, u_i <= t*v_{i-1}, v_i <= t^(1 - 1/2^i) (u_{i-1}+v_{i-1}),
    and finally u_r >= 0, v_r >= 0.  Exponents live on the 1/2^r grid.
    """
    r = spec.r
    d = 2 * r + 2
    zero = PuiseuxFraction.zero(T_LARGE)
    one = PuiseuxFraction.one(T_LARGE)
    t = PuiseuxFraction.t(T_LARGE)

    def u(i):
        return 2 * i

    def v(i):
        return 2 * i + 1

    rows: list[list] = []
    rhs: list = []

    def blank():
        return [zero] * d

    row = blank()
    row[u(0)] = one
    rows.append(row)
    rhs.append(t)
    row = blank()
    row[v(0)] = one
    rows.append(row)
    rhs.append(t * t)
    for i in range(1, r + 1):
        row = blank()
        row[u(i)] = one
        row[u(i - 1)] = zero - t
        rows.append(row)
        rhs.append(zero)
        row = blank()
        row[u(i)] = one
        row[v(i - 1)] = zero - t
        rows.append(row)
        rhs.append(zero)
        g = PuiseuxFraction.t(T_LARGE, exp=Fraction(2 ** i - 1, 2 ** i))
        row = blank()
        row[v(i)] = one
        row[u(i - 1)] = zero - g
        row[v(i - 1)] = zero - g
        rows.append(row)
        rhs.append(zero)
    for var in (u(r), v(r)):
        row = blank()
        row[var] = zero - one
        rows.append(row)
        rhs.append(zero)
    c = blank()
    c[v(0)] = one
    return LinearProgram(rows, rhs, c, sense="min", form="inequality")


def param_polygon() -> LinearProgram:
    """The parametric quadrilateral-or-triangle: x1, x2 >= 0, x1 + x2 <= 3,
    x1 - x2 <= t, over the field with t large.  Objective: maximize x1 + x2.
    """
    zero = PuiseuxFraction.zero(T_LARGE)
    one = PuiseuxFraction.one(T_LARGE)
    t = PuiseuxFraction.t(T_LARGE)
    three = PuiseuxFraction.constant(3, T_LARGE)
    rows = [
        [zero - one, zero],
        [zero, zero - one],
        [one, one],
        [one, zero - one],
    ]
    rhs = [zero, zero, three, t]
    return LinearProgram(rows, rhs, [one, one], sense="max", form="inequality")
