"""Exact real-root tools for dense rational polynomials.

Polynomials are lists of ``Fraction`` coefficients, index = power.  Everything
here is exact: Sturm sequences for counting, bisection for refinement, and a
terminating rational-root identification based on the denominator bound from
the rational root theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ratpoly import (
    dense_derivative,
    dense_divmod,
    dense_eval,
    dense_gcd,
    dense_strip,
    dense_to_primitive_int,
    int_pseudo_rem_signed,
)


def squarefree_part(p: list[Fraction]) -> list[Fraction]:
    """p divided by gcd(p, p'); same roots, all simple."""
    p = dense_strip(list(p))
    if len(p) <= 1:
        return p
    g = dense_gcd(p, dense_derivative(p))
    if len(g) == 1:
        return p
    return dense_divmod(p, g)[0]


def strip_zero_root(p: list[Fraction]) -> list[Fraction]:
    """Remove the s**k factor (roots at zero)."""
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return p[k:]


def cauchy_root_bound(p: list[Fraction]) -> Fraction:
    """1 + max |a_i| / |a_n|: strictly exceeds the modulus of every root."""
    p = dense_strip(list(p))
    if len(p) <= 1:
        raise ValueError("bound needs a nonconstant polynomial")
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1])
    return 1 + m / lead


def sturm_chain(p: list) -> list[list[int]]:
    """Sturm sequence with primitive integer entries.

    Each remainder is scaled by a positive constant (content removal plus a
    sign fix on the pseudo-remainder), which leaves all sign variations
    unchanged.
    """
    a = dense_to_primitive_int(p)
    b = dense_to_primitive_int(dense_derivative([Fraction(c) for c in a]))
    chain = [a, b]
    while chain[-1]:
        r, s = int_pseudo_rem_signed(chain[-2], chain[-1])
        if s > 0:
            r = [-c for c in r]
        chain.append(dense_to_primitive_int(r))
    chain.pop()
    return chain


def _variations(values: list[Fraction]) -> int:
    signs = [1 if v > 0 else -1 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(chain: list[list[Fraction]], a: Fraction, b: Fraction) -> int:
    """Number of distinct roots in the half-open interval (a, b]."""
    va = _variations([dense_eval(q, a) for q in chain])
    vb = _variations([dense_eval(q, b) for q in chain])
    return va - vb


@dataclass
class IsolatedRoot:
    """One positive real root: exact rational value, or an open isolating
    interval (lo, hi) with lo > 0 known to contain exactly one root."""

    exact: Fraction | None
    lo: Fraction
    hi: Fraction


def isolate_positive_roots(p: list[Fraction]) -> list[IsolatedRoot]:
    """Isolate all distinct roots of p on the positive axis.

    Rational roots found along the way (at bisection midpoints) are deflated
    out and reported exactly.
    """
    p = strip_zero_root(squarefree_part(p))
    roots: list[IsolatedRoot] = []
    while True:
        if len(p) <= 1:
            return roots
        bound = cauchy_root_bound(p)
        chain = sturm_chain(p)
        total = sturm_count(chain, Fraction(0), bound)
        if total == 0:
            return roots
        stack = [(Fraction(0), bound, total)]
        restart = False
        while stack:
            lo, hi, cnt = stack.pop()
            if cnt == 1:
                roots.append(IsolatedRoot(None, lo, hi))
                continue
            mid = (lo + hi) / 2
            if dense_eval(p, mid) == 0:
                roots.append(IsolatedRoot(mid, mid, mid))
                # deflate and start over with the remaining roots
                p = dense_divmod(p, [-mid, Fraction(1)])[0]
                roots = [r for r in roots if r.exact is not None]
                restart = True
                break
            c1 = sturm_count(chain, lo, mid)
            if c1:
                stack.append((lo, mid, c1))
            if cnt - c1:
                stack.append((mid, hi, cnt - c1))
        if not restart:
            # refine interval roots so their endpoints are not roots of
            # anything downstream; they already isolate single simple roots.
            return roots


def refine_interval(p: list[Fraction], lo: Fraction, hi: Fraction,
                    width: Fraction) -> tuple[Fraction | None, Fraction, Fraction]:
    """Shrink an isolating interval of a simple root below ``width``.

    Returns ``(exact, lo, hi)``; ``exact`` is set when a midpoint hits the
    root.  Endpoint signs must differ (guaranteed for a simple root whose
    interval excludes other roots).
    """
    slo = dense_eval(p, lo)
    if slo == 0:
        return lo, lo, lo
    if dense_eval(p, hi) == 0:
        # nudge the right endpoint inward: the root inside is simple and
        # distinct from hi only if p(hi) != 0, so hi itself is the root
        return hi, hi, hi
    neg = slo < 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        v = dense_eval(p, mid)
        if v == 0:
            return mid, mid, mid
        if (v < 0) == neg:
            lo = mid
        else:
            hi = mid
    return None, lo, hi


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator strictly inside (lo, hi).

    Both endpoints must be nonnegative with lo < hi.
    """
    if not lo < hi:
        raise ValueError("empty interval")
    fl = lo.numerator // lo.denominator
    if fl + 1 < hi:
        return Fraction(fl + 1)
    a = lo - fl
    b = hi - fl
    if a == 0:
        n = (1 / b).numerator // (1 / b).denominator + 1
        return fl + Fraction(1, n)
    return fl + 1 / simplest_between(1 / b, 1 / a)


def _primitive_lead(p: list[Fraction]) -> int:
    """|leading coefficient| of the primitive integer form of p."""
    den = 1
    for c in p:
        den = math.lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    return abs(ints[-1]) // g


def identify_rational_root(p: list[Fraction], lo: Fraction, hi: Fraction
                           ) -> tuple[Fraction | None, Fraction, Fraction]:
    """Decide whether the single root in (lo, hi) is rational.

    Returns ``(root, lo, hi)`` with the (possibly refined) interval.  A
    rational root of the primitive integer form of p has denominator
    dividing the leading coefficient L, and two rationals with denominator
    at most L differ by more than 1/L**2, so refining below that width
    leaves at most one candidate: the simplest rational inside.
    """
    L = _primitive_lead(p)
    target = Fraction(1, L * L + 1)
    exact, lo, hi = refine_interval(p, lo, hi, target)
    if exact is not None:
        return exact, exact, exact
    cand = simplest_between(lo, hi)
    if dense_eval(p, cand) == 0:
        return cand, cand, cand
    return None, lo, hi
