"""Cone bookkeeping over an ordered field.

Homogenization, lineality, exact facet/ray incidence and sign tables, labeled
combinatorial-type comparison, matrix evaluation at a parameter value, and the
threshold above which evaluation preserves every sign (and hence the labeled
combinatorial type).

Conventions: inequality matrices are lists of rows acting on homogeneous
vectors ``(x0, x1, ..., xd)``; generator matrices are passed as lists of
column vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import roots as _roots
from .fieldlinalg import dot, kernel_basis, sign
from .puiseux import PoleError, PuiseuxFraction
from .ratpoly import dense_eval, dense_gcd


@dataclass
class ConeDescription:
    """Paired exterior and interior description of {x : A x >= 0}.

    ``inequalities`` are the facet-defining rows (a subset of the input, in
    input order; ``facet_rows`` gives their original indices), ``rays`` the
    extreme-ray representatives of the pointed quotient, ``lineality`` a row
    basis of the maximal linear subspace, and ``incidence[i][j]`` is True
    exactly when facet i vanishes on ray j.
    """

    inequalities: list
    rays: list
    lineality: list
    incidence: list
    facet_rows: list


@dataclass
class Tau0Result:
    """Largest zero/pole threshold of a matrix product's entries.

    Above ``threshold`` every entry of the product keeps its sign.  In
    ``exact_root`` mode the threshold is the largest zero or pole on the
    positive axis (0 if none), reported exactly when that number is rational
    and otherwise as an enclosing rational upper bound (``exact`` False).
    ``next_integer`` is the least integer strictly above every zero and pole.
    """

    threshold: Fraction
    mode: str
    next_integer: int
    exact: bool = True


def homogenize(a_rows: list, b: list) -> list:
    """Affine constraints a.x <= b become homogeneous rows (b, -a)."""
    if len(a_rows) != len(b):
        raise ValueError("row/rhs length mismatch")
    return [[b[i]] + [-x for x in a_rows[i]] for i in range(len(a_rows))]


def homogenize_point(x: list, one=1) -> list:
    return [one] + list(x)


def lineality_space(a_rows: list, ncols: int | None = None) -> list:
    """Row basis of the lineality space of {x : A x >= 0}.

    A vector lies in the cone together with its negative exactly when A
    annihilates it, so this is the kernel of A, computed by exact Gaussian
    elimination.
    """
    return kernel_basis(a_rows, ncols)


def evaluate_scalar(x, tau: Fraction):
    if isinstance(x, PuiseuxFraction):
        return x.evaluate_at(tau)
    return Fraction(x)


def evaluate_matrix(rows: list, tau, mode: str = "exact", precision_bits: int = 53) -> list:
    """Entrywise evaluation at t = tau; reports the entry of any pole."""
    tau = Fraction(tau)
    out = []
    for i, row in enumerate(rows):
        new = []
        for j, x in enumerate(row):
            try:
                if mode == "exact":
                    new.append(evaluate_scalar(x, tau))
                elif mode == "approx":
                    if isinstance(x, PuiseuxFraction):
                        new.append(x.evaluate_interval(tau, precision_bits))
                    else:
                        v = Fraction(x)
                        new.append((v, v))
                else:
                    raise ValueError(f"unknown evaluation mode {mode!r}")
            except PoleError:
                raise PoleError(f"pole at entry ({i}, {j}) for t = {tau}") from None
        out.append(new)
    return out


def evaluate_vector(vec: list, tau) -> list:
    return [evaluate_scalar(x, Fraction(tau)) for x in vec]


def incidence(a_rows: list, b_cols: list) -> list:
    """Boolean facet-by-ray table: True where the exact product vanishes."""
    return [[dot(row, col) == 0 for col in b_cols] for row in a_rows]


def sign_table(a_rows: list, b_cols: list) -> list:
    """Entrywise signs of A.B under the scalars' order."""
    return [[sign(dot(row, col)) for col in b_cols] for row in a_rows]


def sign_table_at(a_rows: list, b_cols: list, tau) -> list:
    """Entrywise signs of (A.B)(tau), exact even at points whose grid root
    is irrational (the entries then live in a real radical extension)."""
    tau = Fraction(tau)
    out = []
    for row in a_rows:
        srow = []
        for col in b_cols:
            entry = dot(row, col)
            if isinstance(entry, PuiseuxFraction):
                srow.append(entry.sign_at(tau))
            else:
                srow.append(sign(entry))
        out.append(srow)
    return out


def combinatorial_equal(inc1: list, inc2: list) -> bool:
    """Literal equality of same-shaped labeled incidence matrices.

    Inputs must already be irredundant and carried in construction order;
    differing shapes are an error, not inequality.
    """
    shape1 = (len(inc1), len(inc1[0]) if inc1 else 0)
    shape2 = (len(inc2), len(inc2[0]) if inc2 else 0)
    if shape1 != shape2:
        raise ValueError(f"incidence shape mismatch: {shape1} vs {shape2}")
    return inc1 == inc2


# ---------------------------------------------------------------------------
# threshold of sign stability (largest zero or pole of the product entries)
# ---------------------------------------------------------------------------


def _product_polys(a_rows: list, b_cols: list) -> list[tuple[list[Fraction], int]]:
    """Distinct (dense s-polynomial, grid) pairs from numerators and
    denominators of the nonzero entries of A.B, keeping only polynomials
    that can vanish on the positive axis (two or more terms)."""
    seen = {}
    for row in a_rows:
        for col in b_cols:
            entry = dot(row, col)
            if not isinstance(entry, PuiseuxFraction) or entry.is_zero():
                continue
            for poly in (entry.value.num, entry.value.den):
                if len(poly.terms) < 2:
                    continue
                key = poly.key()
                if key not in seen:
                    seen[key] = (poly.to_dense(poly.grid), poly.grid)
    return list(seen.values())


def _cauchy_threshold(polys: list[tuple[list[Fraction], int]]) -> Fraction:
    best = Fraction(0)
    for dense, nu in polys:
        b = _roots.cauchy_root_bound(dense) ** nu
        if b > best:
            best = b
    return best


def _lift_dense(p: list[Fraction], k: int) -> list[Fraction]:
    """Substitute x -> x**k into a dense polynomial."""
    if k == 1:
        return list(p)
    out = [Fraction(0)] * ((len(p) - 1) * k + 1)
    for i, c in enumerate(p):
        if c:
            out[i * k] = c
    return out


class _IntervalCand:
    """Largest positive root of one polynomial, known only by an interval.

    All interval candidates live on a shared s-axis (grid ``m``); the
    corresponding parameter value is the m-th power.
    """

    __slots__ = ("poly", "m", "lo", "hi")

    def __init__(self, poly, m, lo, hi):
        self.poly = poly
        self.m = m
        self.lo = lo
        self.hi = hi

    def t_range(self) -> tuple[Fraction, Fraction]:
        return self.lo ** self.m, self.hi ** self.m

    def refine(self):
        _, self.lo, self.hi = _roots.refine_interval(
            self.poly, self.lo, self.hi, (self.hi - self.lo) / 4)

    def equals_rational_power(self, tau: Fraction) -> bool:
        """Does this root's m-th power equal tau exactly?"""
        probe = [Fraction(0)] * (self.m + 1)
        probe[0] = -tau
        probe[self.m] = Fraction(1)
        g = dense_gcd(self.poly, probe)
        if len(g) <= 1:
            return False
        return (dense_eval(g, self.lo) == 0 or dense_eval(g, self.hi) == 0 or
                _roots.sturm_count(_roots.sturm_chain(g), self.lo, self.hi) > 0)

    def common_root(self, other: "_IntervalCand") -> bool:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if not lo < hi:
            return False
        g = dense_gcd(self.poly, other.poly)
        if len(g) <= 1:
            return False
        return _roots.sturm_count(_roots.sturm_chain(g), lo, hi) > 0


def _poly_largest_positive_root(dense: list[Fraction]) -> _roots.IsolatedRoot | None:
    """Largest positive root of one polynomial, exactly when rational."""
    iso = _roots.isolate_positive_roots(dense)
    if not iso:
        return None
    sf = _roots.strip_zero_root(_roots.squarefree_part(dense))
    exacts = [r.exact for r in iso if r.exact is not None]
    cleaned: list[_roots.IsolatedRoot] = []
    for r in iso:
        if r.exact is not None:
            cleaned.append(r)
            continue
        lo, hi = r.lo, r.hi
        # deflation restarts can leave a known rational root inside a later
        # isolating interval; shrink until the comparisons below are exact
        while any(lo < e < hi for e in exacts):
            _, lo, hi = _roots.refine_interval(sf, lo, hi, (hi - lo) / 4)
        cleaned.append(_roots.IsolatedRoot(None, lo, hi))
    best = cleaned[0]
    for r in cleaned[1:]:
        if r.exact is not None and best.exact is not None:
            if r.exact > best.exact:
                best = r
        elif r.exact is not None:
            if r.exact > best.hi:
                best = r
        elif best.exact is not None:
            if r.lo >= best.exact:
                best = r
        else:
            if r.lo >= best.hi:
                best = r
    if best.exact is None:
        e, lo, hi = _roots.identify_rational_root(sf, best.lo, best.hi)
        best = (_roots.IsolatedRoot(e, e, e) if e is not None
                else _roots.IsolatedRoot(None, lo, hi))
    return best


def _largest_root_candidates(polys: list[tuple[list[Fraction], int]]
                             ) -> tuple[list[Fraction], list[_IntervalCand]]:
    """Exact t-axis root values plus interval candidates on a common axis."""
    exact: list[Fraction] = []
    pending: list[tuple[list[Fraction], int]] = []
    for dense, nu in polys:
        root = _poly_largest_positive_root(dense)
        if root is None:
            continue
        if root.exact is not None:
            exact.append(root.exact ** nu)
        else:
            pending.append((dense, nu))
    intervals: list[_IntervalCand] = []
    if pending:
        m = 1
        for _, nu in pending:
            m = math.lcm(m, nu)
        for dense, nu in pending:
            # the largest positive root survives the monotone change of axis
            lifted = _lift_dense(dense, m // nu)
            best = _poly_largest_positive_root(lifted)
            if best.exact is not None:
                exact.append(best.exact ** m)
            else:
                intervals.append(_IntervalCand(
                    _roots.strip_zero_root(_roots.squarefree_part(lifted)),
                    m, best.lo, best.hi))
    return exact, intervals


def _max_interval_candidate(cands: list[_IntervalCand]) -> _IntervalCand:
    best = cands[0]
    for other in cands[1:]:
        while True:
            blo, bhi = best.t_range()
            olo, ohi = other.t_range()
            if bhi <= olo:
                best = other
                break
            if ohi <= blo:
                break
            if best.m == other.m and best.common_root(other):
                break  # equal roots: keep best
            best.refine()
            other.refine()
    return best


def tau0(a_rows: list, b_cols: list, mode: str = "cauchy_bound") -> Tau0Result:
    """Sign-stability threshold for the entries of A.B.

    ``cauchy_bound`` returns the max of the classical root bounds of the
    entries' numerators and denominators (transformed back through the
    exponent grid), a sound upper bound.  ``exact_root`` isolates the largest
    zero or pole on the positive axis with Sturm sequences and reports it
    exactly when rational.
    """
    polys = _product_polys(a_rows, b_cols)
    if mode == "cauchy_bound":
        thr = _cauchy_threshold(polys)
        return Tau0Result(thr, "cauchy_bound", int(thr) + 1, exact=False)
    if mode != "exact_root":
        raise ValueError(f"unknown tau0 mode {mode!r}")
    if not polys:
        return Tau0Result(Fraction(0), "exact_root", 1, exact=True)
    exact, intervals = _largest_root_candidates(polys)
    if not exact and not intervals:
        return Tau0Result(Fraction(0), "exact_root", 1, exact=True)
    best_exact = max(exact) if exact else None
    if intervals:
        winner = _max_interval_candidate(intervals)
        while best_exact is not None:
            tlo, thi = winner.t_range()
            if best_exact >= thi:
                winner = None
                break
            if best_exact <= tlo:
                break
            if winner.equals_rational_power(best_exact):
                winner = None
                break
            winner.refine()
    else:
        winner = None
    if winner is None:
        thr = best_exact
        return Tau0Result(thr, "exact_root", int(thr) + 1, exact=True)
    # the winning root is irrational on its axis: report a tight rational
    # upper bound below the next integer and below the Cauchy threshold
    cap = _cauchy_threshold(polys)
    while True:
        tlo, thi = winner.t_range()
        fl = tlo.numerator // tlo.denominator
        inside = fl + 1 if tlo < fl + 1 < thi else None
        if inside is not None:
            if winner.equals_rational_power(Fraction(inside)):
                return Tau0Result(Fraction(inside), "exact_root", inside + 1, exact=True)
            winner.refine()
            continue
        if thi - tlo < 1 and thi <= fl + 1 and thi <= cap:
            if thi == fl + 1:
                winner.refine()
                continue
            return Tau0Result(thi, "exact_root", fl + 1, exact=False)
        winner.refine()
