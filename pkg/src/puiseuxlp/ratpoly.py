"""Sparse polynomials with rational exponents, and normalized quotients of them.

Coefficients and exponents are exact ``fractions.Fraction`` values.  An
:class:`ExpPoly` is a finite map from exponents to nonzero coefficients; its
*grid* is the smallest positive integer ``nu`` such that every exponent is an
integer multiple of ``1/nu``.  Writing ``s = t**(1/nu)`` turns such a
polynomial into an ordinary polynomial in ``s``, which is how gcd, division
and evaluation are carried out.

A :class:`RatFun` is a quotient ``num/den`` kept in a canonical form: on the
common grid, numerator and denominator are coprime polynomials in ``s`` with
nonnegative exponents, and the denominator's coefficient at its highest power
of ``s`` equals one.  Equal values therefore always have identical
representations, so ``==`` is a structural comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

CoeffLike = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class ExpPoly:
    """Polynomial in ``t`` with rational exponents and rational coefficients.

    The zero polynomial is the empty term map and has grid 1.  Instances are
    immutable by convention; all arithmetic returns new objects.
    """

    __slots__ = ("terms", "_grid")

    def __init__(self, terms: Mapping | Iterable | None = None):
        data: dict[Fraction, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                c = _as_fraction(coeff)
                if not c:
                    continue
                e = _as_fraction(exp)
                c0 = data.get(e)
                if c0 is None:
                    data[e] = c
                else:
                    c = c0 + c
                    if c:
                        data[e] = c
                    else:
                        del data[e]
        self.terms = data
        self._grid = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "ExpPoly":
        return ExpPoly()

    @staticmethod
    def const(c: CoeffLike) -> "ExpPoly":
        return ExpPoly({Fraction(0): _as_fraction(c)})

    @staticmethod
    def t_power(exp, coeff: CoeffLike = 1) -> "ExpPoly":
        """The monomial ``coeff * t**exp``."""
        return ExpPoly({_as_fraction(exp): _as_fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def grid(self) -> int:
        """Least positive ``nu`` with all exponents in (1/nu)*Z."""
        if self._grid is None:
            g = 1
            for e in self.terms:
                g = math.lcm(g, e.denominator)
            self._grid = g
        return self._grid

    def min_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exp(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self.terms)

    def lead_coeff(self) -> Fraction:
        """Coefficient at the largest exponent."""
        return self.terms[self.max_exp()]

    def trail_coeff(self) -> Fraction:
        """Coefficient at the smallest exponent."""
        return self.terms[self.min_exp()]

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get(Fraction(0)) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        if not isinstance(other, ExpPoly):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        data = dict(self.terms)
        for e, c in other.terms.items():
            c0 = data.get(e)
            if c0 is None:
                data[e] = c
            else:
                c0 = c0 + c
                if c0:
                    data[e] = c0
                else:
                    del data[e]
        out = ExpPoly.__new__(ExpPoly)
        out.terms = data
        out._grid = None
        return out

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        if not isinstance(other, ExpPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "ExpPoly":
        out = ExpPoly.__new__(ExpPoly)
        out.terms = {e: -c for e, c in self.terms.items()}
        out._grid = self._grid
        return out

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        if not isinstance(other, ExpPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ExpPoly()
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        data: dict[Fraction, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                c0 = data.get(e)
                if c0 is None:
                    data[e] = ca * cb
                else:
                    c0 = c0 + ca * cb
                    if c0:
                        data[e] = c0
                    else:
                        del data[e]
        out = ExpPoly.__new__(ExpPoly)
        out.terms = data
        out._grid = None
        return out

    def scale(self, c: CoeffLike) -> "ExpPoly":
        c = _as_fraction(c)
        if not c:
            return ExpPoly()
        out = ExpPoly.__new__(ExpPoly)
        out.terms = {e: co * c for e, co in self.terms.items()}
        out._grid = self._grid
        return out

    def shift_exponents(self, delta) -> "ExpPoly":
        """Multiply by ``t**delta``."""
        d = _as_fraction(delta)
        if not d or not self.terms:
            return self
        out = ExpPoly.__new__(ExpPoly)
        out.terms = {e + d: c for e, c in self.terms.items()}
        out._grid = None
        return out

    def subs_t_inverse(self) -> "ExpPoly":
        """Substitute ``t -> 1/t`` (negate every exponent)."""
        out = ExpPoly.__new__(ExpPoly)
        out.terms = {-e: c for e, c in self.terms.items()}
        out._grid = self._grid
        return out

    # -- dense conversion (s = t**(1/nu)) ------------------------------------

    def to_dense(self, nu: int, shift: int = 0) -> list[Fraction]:
        """Coefficient list of ``self * t**(shift/nu)`` as a polynomial in s.

        Requires every shifted exponent to be a nonnegative multiple of 1/nu.
        Index ``i`` of the result is the coefficient of ``s**i``.
        """
        if not self.terms:
            return []
        idx = {}
        top = 0
        for e, c in self.terms.items():
            k = e * nu + shift
            if k.denominator != 1 or k < 0:
                raise ValueError(f"exponent {e} not on nonnegative 1/{nu} grid")
            k = int(k)
            idx[k] = c
            if k > top:
                top = k
        out = [Fraction(0)] * (top + 1)
        for k, c in idx.items():
            out[k] = c
        return out

    @staticmethod
    def from_dense(coeffs: list[Fraction], nu: int, shift: int = 0) -> "ExpPoly":
        return ExpPoly({Fraction(i - shift, nu): c for i, c in enumerate(coeffs) if c})

    # -- comparison / repr ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, ExpPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            o = _as_fraction(other)
            if not o:
                return not self.terms
            return self.terms == {Fraction(0): o}
        return NotImplemented

    __hash__ = None

    def key(self) -> tuple:
        """Hashable canonical key (sorted term tuple)."""
        return tuple(sorted(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "ExpPoly(0)"
        parts = [f"{c}*t^{e}" for e, c in sorted(self.terms.items())]
        return "ExpPoly(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# dense univariate helpers (lists of Fraction, index = power of s)
# ---------------------------------------------------------------------------


def dense_strip(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def dense_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder of dense polynomials; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(0, len(a) - db)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i in range(db + 1):
            r[k + i] -= f * b[i]
        dense_strip(r)
    return dense_strip(q), r


def dense_to_primitive_int(p: list) -> list[int]:
    """Scale to integer coefficients with content 1 (sign preserved)."""
    p = dense_strip(list(p))
    if not p:
        return []
    den = 1
    for c in p:
        if isinstance(c, Fraction):
            den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


def int_pseudo_rem_signed(a: list[int], b: list[int]) -> tuple[list[int], int]:
    """Pseudo-remainder of integer polynomials and the sign of its scale.

    Returns (r, s) with r = lb**j * (a mod b) for some j >= 0 and
    s = sign(lb**j), so r/s is a positive multiple of the true remainder.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    j = 0
    while len(r) - 1 >= db and r:
        top = r[-1]
        if top == 0:
            r.pop()
            continue
        j += 1
        r = [c * lb for c in r]
        k = len(r) - 1 - db
        for i in range(db + 1):
            r[k + i] -= top * b[i]
        while r and r[-1] == 0:
            r.pop()
    s = 1 if (lb > 0 or j % 2 == 0) else -1
    return r, s


def dense_gcd(a: list, b: list) -> list[Fraction]:
    """Monic gcd by the Euclidean remainder walk.

    Remainders are kept as primitive integer polynomials (content divided
    out each step), which contains the classical coefficient blow-up while
    computing the same chain of degrees.
    """
    A = dense_to_primitive_int(a)
    B = dense_to_primitive_int(b)
    while B:
        R, _ = int_pseudo_rem_signed(A, B)
        A, B = B, dense_to_primitive_int(R)
    if not A:
        raise ValueError("gcd of two zero polynomials")
    lc = Fraction(A[-1])
    return [Fraction(c) / lc for c in A]


def dense_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] += ca * cb
    return dense_strip(out)


def dense_eval(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def dense_derivative(p: list[Fraction]) -> list[Fraction]:
    return dense_strip([c * i for i, c in enumerate(p)][1:])


# ---------------------------------------------------------------------------
# ExpPoly gcd
# ---------------------------------------------------------------------------


def _common_shift(*polys: ExpPoly) -> tuple[int, int]:
    """Common grid and the exponent shift clearing negative exponents."""
    nu = 1
    for p in polys:
        nu = math.lcm(nu, p.grid)
    low = Fraction(0)
    for p in polys:
        if p.terms:
            m = p.min_exp()
            if m < low:
                low = m
    return nu, int(-low * nu)


def poly_gcd(a: ExpPoly, b: ExpPoly) -> ExpPoly:
    """Monic gcd of two polynomials in their common substituted variable.

    Negative exponents are cleared by a common monomial shift which is
    restored afterwards, so shared monomial factors survive: gcd(p, p) is
    the monic multiple of p.  Two zero inputs are rejected.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of zero and zero is undefined")
    if a.is_zero() or b.is_zero():
        p = b if a.is_zero() else a
        return p.scale(1 / p.lead_coeff())
    nu, shift = _common_shift(a, b)
    g = dense_gcd(a.to_dense(nu, shift), b.to_dense(nu, shift))
    return ExpPoly.from_dense(g, nu, shift)


# ---------------------------------------------------------------------------
# RatFun
# ---------------------------------------------------------------------------


class RatFun:
    """Normalized quotient of two :class:`ExpPoly` values.

    Use :meth:`make` to build one; the raw constructor trusts its arguments
    to already be in canonical form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: ExpPoly, den: ExpPoly):
        self.num = num
        self.den = den

    @staticmethod
    def make(num: ExpPoly, den: ExpPoly) -> "RatFun":
        """Normalize ``num/den``: coprime on the common s-grid, monic den."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            return RATFUN_ZERO
        if den.is_monomial():
            (de, dc), = den.terms.items()
            num = num.scale(1 / dc)
            if de:
                num = num.shift_exponents(-de)
            # cancel the residual power of t shared with the numerator
            low = num.min_exp()
            if low < 0:
                return RatFun(num.shift_exponents(-low), ExpPoly.t_power(-low))
            return RatFun(num, EXP_ONE)
        nu, shift = _common_shift(num, den)
        dn = num.to_dense(nu, shift)
        dd = den.to_dense(nu, shift)
        g = dense_gcd(dn, dd)
        if len(g) > 1:
            dn = dense_divmod(dn, g)[0]
            dd = dense_divmod(dd, g)[0]
        lc = dd[-1]
        if lc != 1:
            dn = [c / lc for c in dn]
            dd = [c / lc for c in dd]
        return RatFun(ExpPoly.from_dense(dn, nu), ExpPoly.from_dense(dd, nu))

    @staticmethod
    def from_const(c: CoeffLike) -> "RatFun":
        c = _as_fraction(c)
        if not c:
            return RATFUN_ZERO
        return RatFun(ExpPoly.const(c), EXP_ONE)

    @staticmethod
    def t_power(exp, coeff: CoeffLike = 1) -> "RatFun":
        coeff = _as_fraction(coeff)
        exp = _as_fraction(exp)
        if not coeff:
            return RATFUN_ZERO
        if exp >= 0:
            return RatFun(ExpPoly.t_power(exp, coeff), EXP_ONE)
        return RatFun(ExpPoly.const(coeff), ExpPoly.t_power(-exp))

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.is_one() and (self.num.is_zero() or
                                      (self.num.is_monomial() and Fraction(0) in self.num.terms))

    def const_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.terms.get(Fraction(0), Fraction(0))

    @property
    def grid(self) -> int:
        return math.lcm(self.num.grid, self.den.grid)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "RatFun") -> "RatFun":
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1.is_one() and d2.is_one():
            s = self.num + other.num
            return RATFUN_ZERO if s.is_zero() else RatFun(s, EXP_ONE)
        if d1 == d2:
            return RatFun.make(self.num + other.num, d1)
        return RatFun.make(self.num * d2 + other.num * d1, d1 * d2)

    def __sub__(self, other: "RatFun") -> "RatFun":
        if not isinstance(other, RatFun):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "RatFun":
        if self.num.is_zero():
            return self
        return RatFun(-self.num, self.den)

    def __mul__(self, other: "RatFun") -> "RatFun":
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return RATFUN_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num * other.num, EXP_ONE)
        return RatFun.make(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den.is_monomial():
            return RatFun.make(num, den)
        lc = den.lead_coeff()
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.scale(1 / lc)
        return RatFun(num, den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if not isinstance(other, RatFun):
            return NotImplemented
        return self * other.inverse()

    def scale(self, c: CoeffLike) -> "RatFun":
        c = _as_fraction(c)
        if not c:
            return RATFUN_ZERO
        return RatFun(self.num.scale(c), self.den)

    def subs_t_inverse(self) -> "RatFun":
        return RatFun.make(self.num.subs_t_inverse(), self.den.subs_t_inverse())

    # -- evaluation ------------------------------------------------------------

    def evaluate_power(self, base: Fraction) -> Fraction:
        """Exact value at ``t = base**nu`` where nu is this value's grid.

        Equivalently: substitute ``s = base`` into the s-form of the
        quotient.  Raises ZeroDivisionError at a pole.
        """
        base = _as_fraction(base)
        if base < 0:
            raise ValueError("evaluation base must be nonnegative")
        nu = self.grid
        dv = dense_eval(self.den.to_dense(nu), base)
        if not dv:
            raise ZeroDivisionError(f"pole at evaluation point {base}**{nu}")
        nv = dense_eval(self.num.to_dense(nu), base) if not self.num.is_zero() else Fraction(0)
        return nv / dv

    # -- comparison / repr -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.is_one() and self.num == other
        return NotImplemented

    __hash__ = None

    def key(self) -> tuple:
        return (self.num.key(), self.den.key())

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"RatFun({self.num!r})"
        return f"RatFun({self.num!r} / {self.den!r})"


EXP_ONE = ExpPoly.const(1)
RATFUN_ZERO = RatFun(ExpPoly.zero(), EXP_ONE)
RATFUN_ONE = RatFun(EXP_ONE, EXP_ONE)
