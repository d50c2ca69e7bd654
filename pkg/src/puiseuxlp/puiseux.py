"""The ordered field of Puiseux fractions.

A :class:`PuiseuxFraction` wraps a normalized :class:`~puiseuxlp.ratpoly.RatFun`
together with an :class:`Orientation` that says whether the indeterminate t
orders as an infinitesimally large positive element (``T_LARGE``) or an
infinitesimally small one (``T_SMALL``).  The orientation affects comparisons
and valuations only, never the arithmetic.

Comparisons follow the leading-coefficient order: a nonzero element is
positive when the coefficient at the extreme exponent of its numerator (times
that of its denominator) is positive, using the largest exponent for
``T_LARGE`` and the smallest for ``T_SMALL``.  The two orientations exchange
under the substitution ``t -> 1/t``.

Scalar text format (whitespace-insensitive)::

    fraction  := polyexpr | "(" polyexpr ")" "/" "(" polyexpr ")"
    polyexpr  := [sign] term { contsign term }
    term      := rational | rational "*" mono | mono
    mono      := "t" | "t^" integer | "t^(" rational ")"
    rational  := integer [ "/" posinteger ]

Canonical printing lists terms by increasing exponent, elides unit
coefficients, renders continuation as ``" + "`` before positive terms and
``" -"`` before negative ones, and parenthesizes non-integer exponents.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple, Union

from .ratpoly import EXP_ONE, RATFUN_ONE, RATFUN_ZERO, ExpPoly, RatFun, dense_gcd
from . import roots as _roots

ScalarLike = Union[int, Fraction, "PuiseuxFraction"]


class Orientation(enum.Enum):
    """Whether t behaves as a large or a small positive infinitesimal."""

    T_LARGE = "t-large"
    T_SMALL = "t-small"


T_LARGE = Orientation.T_LARGE
T_SMALL = Orientation.T_SMALL


class OrientationError(ValueError):
    """Mixing values whose t means different things is always a bug."""


class PoleError(ZeroDivisionError):
    """Evaluation point is a zero of the denominator."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class PuiseuxFraction:
    """Element of the ordered field of Puiseux fractions."""

    __slots__ = ("value", "orientation")

    def __init__(self, value: RatFun, orientation: Orientation):
        self.value = value
        self.orientation = orientation

    # -- constructors --------------------------------------------------------

    @staticmethod
    def constant(c, orientation: Orientation) -> "PuiseuxFraction":
        return PuiseuxFraction(RatFun.from_const(Fraction(c)), orientation)

    @staticmethod
    def t(orientation: Orientation, exp=1, coeff=1) -> "PuiseuxFraction":
        """The monomial ``coeff * t**exp``."""
        return PuiseuxFraction(RatFun.t_power(Fraction(exp), Fraction(coeff)), orientation)

    @staticmethod
    def zero(orientation: Orientation) -> "PuiseuxFraction":
        return PuiseuxFraction(RATFUN_ZERO, orientation)

    @staticmethod
    def one(orientation: Orientation) -> "PuiseuxFraction":
        return PuiseuxFraction(RATFUN_ONE, orientation)

    def _coerce(self, other) -> "PuiseuxFraction":
        if isinstance(other, PuiseuxFraction):
            if other.orientation is not self.orientation:
                raise OrientationError(
                    f"cannot combine {self.orientation.value} with {other.orientation.value}")
            return other
        if isinstance(other, (int, Fraction)):
            return PuiseuxFraction.constant(other, self.orientation)
        return None

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __bool__(self) -> bool:
        return not self.value.is_zero()

    @property
    def grid(self) -> int:
        return self.value.grid

    def sign(self) -> int:
        """-1, 0 or +1 under this orientation's order."""
        v = self.value
        if v.is_zero():
            return 0
        if self.orientation is T_LARGE:
            c = v.num.lead_coeff() * v.den.lead_coeff()
        else:
            c = v.num.trail_coeff() * v.den.trail_coeff()
        return 1 if c > 0 else -1

    def val(self) -> Fraction | None:
        """Valuation: the degree difference of numerator and denominator.

        Uses largest exponents for ``T_LARGE`` and smallest for ``T_SMALL``.
        Returns ``None`` for zero (the infinite marker; rendered as minus
        infinity by the max-plus tropical conversion).
        """
        v = self.value
        if v.is_zero():
            return None
        if self.orientation is T_LARGE:
            return v.num.max_exp() - v.den.max_exp()
        return v.num.min_exp() - v.den.min_exp()

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PuiseuxFraction(self.value + o.value, self.orientation)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PuiseuxFraction(self.value - o.value, self.orientation)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PuiseuxFraction(o.value - self.value, self.orientation)

    def __neg__(self):
        return PuiseuxFraction(-self.value, self.orientation)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return PuiseuxFraction(self.value.scale(Fraction(other)), self.orientation)
        return PuiseuxFraction(self.value * o.value, self.orientation)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PuiseuxFraction(self.value / o.value, self.orientation)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PuiseuxFraction(o.value / self.value, self.orientation)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def inverse(self) -> "PuiseuxFraction":
        return PuiseuxFraction(self.value.inverse(), self.orientation)

    def subs_t_inverse(self) -> "PuiseuxFraction":
        """Same value with t replaced by 1/t, under the mirrored orientation."""
        flipped = T_SMALL if self.orientation is T_LARGE else T_LARGE
        return PuiseuxFraction(self.value.subs_t_inverse(), flipped)

    # -- order ----------------------------------------------------------------------

    def compare(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot compare PuiseuxFraction with {type(other).__name__}")
        return (self - o).sign()

    def __eq__(self, other):
        if isinstance(other, PuiseuxFraction):
            return (self.orientation is other.orientation) and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == other
        return NotImplemented

    __hash__ = None

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # -- evaluation ------------------------------------------------------------------

    def evaluate_power(self, base) -> Fraction:
        """Exact value at ``t = base**nu`` (nu = this value's grid)."""
        base = Fraction(base)
        try:
            return self.value.evaluate_power(base)
        except ZeroDivisionError:
            raise PoleError(f"pole at t = {base}**{self.grid}") from None

    def evaluate_at(self, tau) -> Fraction:
        """Exact value at ``t = tau``; tau must be an exact nu-th power.

        tau = 0 is allowed when no denominator vanishes there.
        """
        tau = Fraction(tau)
        if tau < 0:
            raise ValueError("evaluation point must be nonnegative")
        nu = self.grid
        base = exact_nth_root(tau, nu)
        if base is None:
            raise ValueError(
                f"{tau} has no exact rational {nu}-th root; pass a {nu}-th power "
                "or use interval evaluation")
        return self.evaluate_power(base)

    def sign_at(self, tau) -> int:
        """Exact sign of the value at ``t = tau`` for any positive rational.

        When ``tau**(1/nu)`` is irrational the sign is still decidable:
        vanishing is a gcd condition against ``x**nu - tau`` and a nonzero
        sign falls out of interval refinement around the root.
        """
        tau = Fraction(tau)
        if tau <= 0:
            raise ValueError("sign evaluation needs a positive point")
        if self.value.is_zero():
            return 0
        nu = self.grid
        num = self.value.num.to_dense(nu)
        den = self.value.den.to_dense(nu)
        sd = _sign_at_root(den, nu, tau)
        if sd == 0:
            raise PoleError(f"pole at t = {tau}")
        return _sign_at_root(num, nu, tau) * sd

    def evaluate_interval(self, tau, precision_bits: int = 53) -> "IntervalApprox":
        """Enclosing interval for the value at ``t = tau``, to the given width.

        The result has width at most ``2**-precision_bits`` and is exact in
        the sense that the true value always lies inside.  Poles are detected
        exactly and raise :class:`PoleError`.
        """
        tau = Fraction(tau)
        if tau <= 0:
            raise ValueError("evaluation point must be positive")
        nu = self.grid
        num = self.value.num.to_dense(nu)
        den = self.value.den.to_dense(nu)
        if _has_positive_root_at_power(den, nu, tau):
            raise PoleError(f"pole at t = {tau}")
        target = Fraction(1, 2 ** precision_bits)
        bits = max(8, precision_bits)
        while True:
            lo, hi = _nth_root_interval(tau, nu, bits)
            dlo, dhi = _interval_poly(den, lo, hi)
            if dlo <= 0 <= dhi:
                bits *= 2
                continue
            nlo, nhi = _interval_poly(num, lo, hi)
            cands = (nlo / dlo, nlo / dhi, nhi / dlo, nhi / dhi)
            qlo, qhi = min(cands), max(cands)
            if qhi - qlo <= target:
                return IntervalApprox(qlo, qhi)
            bits *= 2

    # -- repr ----------------------------------------------------------------------

    def __repr__(self) -> str:
        return f"PF[{self.orientation.value}]({pf_format(self)})"


class IntervalApprox(NamedTuple):
    lo: Fraction
    hi: Fraction

    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi


# ---------------------------------------------------------------------------
# numeric helpers
# ---------------------------------------------------------------------------


def _int_nth_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        return None
    if n in (0, 1) or k == 1:
        return n
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    # float guess can be off for huge inputs; fall back to bisection
    lo, hi = 0, 1 << ((n.bit_length() + k - 1) // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid ** k
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def exact_nth_root(x: Fraction, k: int) -> Fraction | None:
    """Exact rational k-th root of a positive rational, or None."""
    if k == 1:
        return x
    p = _int_nth_root(x.numerator, k)
    if p is None:
        return None
    q = _int_nth_root(x.denominator, k)
    if q is None:
        return None
    return Fraction(p, q)


def _nth_root_interval(tau: Fraction, nu: int, bits: int) -> tuple[Fraction, Fraction]:
    """Interval of width <= 2**-bits around tau**(1/nu)."""
    exact = exact_nth_root(tau, nu)
    if exact is not None:
        return exact, exact
    lo = Fraction(0)
    hi = max(Fraction(1), tau)
    width = Fraction(1, 2 ** bits)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid ** nu < tau:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _interval_poly(p: list[Fraction], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Interval Horner evaluation on [lo, hi] (0 <= lo)."""
    rlo = rhi = Fraction(0)
    for c in reversed(p):
        # multiply [rlo, rhi] by [lo, hi] with 0 <= lo <= hi
        cands = (rlo * lo, rlo * hi, rhi * lo, rhi * hi)
        rlo, rhi = min(cands) + c, max(cands) + c
    return rlo, rhi


def _sign_at_root(p: list[Fraction], nu: int, tau: Fraction) -> int:
    """Sign of p at the positive real nu-th root of tau, exactly."""
    if not p:
        return 0
    if len(p) == 1:
        return 1 if p[0] > 0 else (-1 if p[0] < 0 else 0)
    root = exact_nth_root(tau, nu)
    if root is not None:
        v = dense_eval_fraction(p, root)
        return 1 if v > 0 else (-1 if v < 0 else 0)
    if _has_positive_root_at_power(p, nu, tau):
        return 0
    lo = Fraction(0)
    hi = max(Fraction(1), tau)
    while True:
        vlo, vhi = _interval_poly(p, lo, hi)
        if vlo > 0:
            return 1
        if vhi < 0:
            return -1
        mid = (lo + hi) / 2
        if mid ** nu < tau:
            lo = mid
        else:
            hi = mid


def dense_eval_fraction(p: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _has_positive_root_at_power(den: list[Fraction], nu: int, tau: Fraction) -> bool:
    """Exact test: does den(s) vanish at the positive real nu-th root of tau?"""
    if not den:
        return True
    if len(den) == 1:
        return False
    probe = [Fraction(0)] * (nu + 1)
    probe[0] = -tau
    probe[nu] = Fraction(1)
    g = dense_gcd(den, probe)
    if len(g) <= 1:
        return False
    chain = _roots.sturm_chain(_roots.squarefree_part(g))
    bound = max(Fraction(1), tau) + 1
    return _roots.sturm_count(chain, Fraction(0), bound) > 0


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.take(ch):
            raise ParseError(f"expected {ch!r}", self.pos)

    def integer(self, signed=True) -> int:
        self.skip_ws()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def rational(self, signed=True) -> Fraction:
        num = self.integer(signed)
        save = self.pos
        if self.take("/"):
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                return Fraction(num, self.integer(signed=False))
            self.pos = save
        return Fraction(num)


def _parse_mono_exp(sc: _Scanner) -> Fraction:
    if not sc.take("^"):
        return Fraction(1)
    if sc.take("("):
        e = sc.rational()
        sc.expect(")")
        return e
    return Fraction(sc.integer())


def _parse_term(sc: _Scanner, sign: int) -> tuple[Fraction, Fraction]:
    """One term; returns (exponent, coefficient)."""
    ch = sc.peek()
    if ch == "t":
        sc.pos += 1
        return _parse_mono_exp(sc), Fraction(sign)
    coeff = sc.rational(signed=False) * sign
    save = sc.pos
    if sc.take("*"):
        if sc.peek() == "t":
            sc.pos += 1
            return _parse_mono_exp(sc), coeff
        sc.pos = save
    return Fraction(0), coeff


def _parse_polyexpr(sc: _Scanner) -> ExpPoly:
    terms: list[tuple[Fraction, Fraction]] = []
    sign = 1
    if sc.take("-"):
        sign = -1
    elif sc.take("+"):
        sign = 1
    terms.append(_parse_term(sc, sign))
    while True:
        ch = sc.peek()
        if ch == "+":
            sc.pos += 1
            terms.append(_parse_term(sc, 1))
        elif ch == "-":
            sc.pos += 1
            terms.append(_parse_term(sc, -1))
        else:
            break
    return ExpPoly(terms)


def pf_parse(text: str, orientation: Orientation) -> PuiseuxFraction:
    """Parse the scalar grammar; raises :class:`ParseError` with a position."""
    sc = _Scanner(text)
    if sc.peek() == "(":
        sc.expect("(")
        num = _parse_polyexpr(sc)
        sc.expect(")")
        sc.expect("/")
        sc.expect("(")
        den = _parse_polyexpr(sc)
        sc.expect(")")
    else:
        num = _parse_polyexpr(sc)
        den = EXP_ONE
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing input", sc.pos)
    if den.is_zero():
        raise ParseError("zero denominator", 0)
    return PuiseuxFraction(RatFun.make(num, den), orientation)


def parse_rational(text: str) -> Fraction:
    sc = _Scanner(text)
    v = sc.rational()
    sc.skip_ws()
    if sc.pos != len(sc.text):
        raise ParseError("trailing input", sc.pos)
    return v


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_mono(e: Fraction) -> str:
    if e == 1:
        return "t"
    if e.denominator == 1:
        return f"t^{e.numerator}"
    return f"t^({e.numerator}/{e.denominator})"


def format_poly(p: ExpPoly) -> str:
    """Canonical polynomial text: increasing exponents, unit coefficients elided."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, (e, c) in enumerate(sorted(p.terms.items())):
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _format_coeff(mag)
        elif mag == 1:
            body = _format_mono(e)
        else:
            body = f"{_format_coeff(mag)}*{_format_mono(e)}"
        if i == 0:
            parts.append(("-" if neg else "") + body)
        elif neg:
            parts.append(" -" + body)
        else:
            parts.append(" + " + body)
    return "".join(parts)


def pf_format(f: PuiseuxFraction) -> str:
    """Canonical scalar text; ``pf_parse(pf_format(f))`` returns f exactly."""
    v = f.value
    if v.den.is_one():
        return format_poly(v.num)
    return f"({format_poly(v.num)})/({format_poly(v.den)})"


def format_scalar(x) -> str:
    """Canonical text for any field scalar (rational or Puiseux)."""
    if isinstance(x, PuiseuxFraction):
        return pf_format(x)
    x = Fraction(x)
    return _format_coeff(x)


def format_vector(xs) -> str:
    """Space-separated entries, each wrapped in parentheses."""
    return " ".join(f"({format_scalar(x)})" for x in xs)


def scalar_parser(field: str):
    """Entry parser for one of the field tags rational / puiseux-tlarge / puiseux-tsmall."""
    if field == "rational":
        return parse_rational
    if field == "puiseux-tlarge":
        return lambda s: pf_parse(s, T_LARGE)
    if field == "puiseux-tsmall":
        return lambda s: pf_parse(s, T_SMALL)
    raise ValueError(f"unknown field tag {field!r}")


def field_tag(sample) -> str:
    if isinstance(sample, PuiseuxFraction):
        return "puiseux-tlarge" if sample.orientation is T_LARGE else "puiseux-tsmall"
    return "rational"


# convenience for building values in tests and demos


def pf(text: str, orientation: Orientation = T_LARGE) -> PuiseuxFraction:
    return pf_parse(text, orientation)
