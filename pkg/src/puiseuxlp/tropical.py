"""Max-plus tropical arithmetic and the dual tropical convex hull.

Tropical numbers carry exact rationals (or minus infinity, the additive
neutral element).  A tropical cone is described externally by a matrix pair
``(Hplus, Hminus)`` with at most one finite entry per position, read as the
inequality system ``Hplus . z >= Hminus . z`` in max-plus arithmetic.

The dual hull algorithm lifts the pair to matrices over Puiseux fractions
(finite entry h becomes t**h, minus infinity becomes 0), enumerates the
extreme rays of the classical cone ``{x >= 0 : (Aplus - Aminus) x >= 0}``
and pushes the generators forward through the valuation map.  That is only
warranted when the exterior description is tropically sign-generic, which is
checked by enumerating square minors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .hull import enumerate_rays
from .puiseux import PuiseuxFraction, T_LARGE


class TropNum:
    """Element of the max-plus semiring: a rational, or minus infinity."""

    __slots__ = ("value",)

    def __init__(self, value):
        if value is None:
            self.value = None
        else:
            self.value = Fraction(value)

    @property
    def is_neg_inf(self) -> bool:
        return self.value is None

    def __add__(self, other):  # tropical addition = max
        other = trop(other)
        if self.value is None:
            return other
        if other.value is None:
            return self
        return TropNum(self.value if self.value >= other.value else other.value)

    def __mul__(self, other):  # tropical multiplication = +
        other = trop(other)
        if self.value is None or other.value is None:
            return NEG_INF
        return TropNum(self.value + other.value)

    def __eq__(self, other):
        if isinstance(other, TropNum):
            return self.value == other.value
        if other is None:
            return False
        if isinstance(other, (int, Fraction)):
            return self.value == Fraction(other)
        return NotImplemented

    def __lt__(self, other):
        other = trop(other)
        if self.value is None:
            return other.value is not None
        if other.value is None:
            return False
        return self.value < other.value

    def __le__(self, other):
        return self == trop(other) or self < other

    def __gt__(self, other):
        return trop(other) < self

    def __ge__(self, other):
        return trop(other) <= self

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "-inf" if self.value is None else str(self.value)


NEG_INF = TropNum(None)


def trop(x) -> TropNum:
    if isinstance(x, TropNum):
        return x
    if x is None:
        return NEG_INF
    return TropNum(x)


def trop_sum(xs) -> TropNum:
    acc = NEG_INF
    for x in xs:
        acc = acc + trop(x)
    return acc


def format_trop(x: TropNum) -> str:
    if x.is_neg_inf:
        return "-inf"
    v = x.value
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_trop(text: str) -> TropNum:
    text = text.strip()
    if text in ("-inf", "-infinity", "-oo"):
        return NEG_INF
    return TropNum(Fraction(text))


@dataclass
class TropicalSystem:
    """Exterior description (Hplus, Hminus) with its sign pattern chi.

    Per position at most one of the two entries is finite; chi is +1 where
    the finite entry sits in Hplus, -1 where it sits in Hminus, 0 where both
    are minus infinity.  ``width`` pins the column count when there are no
    rows (the unconstrained system).
    """

    hplus: list
    hminus: list
    chi: list
    width: int | None = None

    @staticmethod
    def make(hplus, hminus, width: int | None = None) -> "TropicalSystem":
        hp = [[trop(x) for x in row] for row in hplus]
        hm = [[trop(x) for x in row] for row in hminus]
        if len(hp) != len(hm) or any(len(a) != len(b) for a, b in zip(hp, hm)):
            raise ValueError("matrix pair must have equal shapes")
        chi = []
        for i, (rp, rm) in enumerate(zip(hp, hm)):
            crow = []
            for j, (p, q) in enumerate(zip(rp, rm)):
                if not p.is_neg_inf and not q.is_neg_inf:
                    raise ValueError(
                        f"entry ({i}, {j}) is finite on both sides; at most one is allowed")
                crow.append(1 if not p.is_neg_inf else (-1 if not q.is_neg_inf else 0))
            chi.append(crow)
        return TropicalSystem(hp, hm, chi, width)

    @property
    def nrows(self) -> int:
        return len(self.hplus)

    @property
    def ncols(self) -> int:
        if self.hplus:
            return len(self.hplus[0])
        if self.width is None:
            raise ValueError("empty system needs an explicit width")
        return self.width

    def combined(self) -> list:
        """Hplus entrywise-max Hminus (finite wherever either side is)."""
        return [[p + q for p, q in zip(rp, rm)]
                for rp, rm in zip(self.hplus, self.hminus)]

    def satisfied_by(self, z: list) -> bool:
        """Does z satisfy every max-plus row inequality?"""
        zt = [trop(x) for x in z]
        for rp, rm in zip(self.hplus, self.hminus):
            lhs = trop_sum(p * x for p, x in zip(rp, zt))
            rhs = trop_sum(q * x for q, x in zip(rm, zt))
            if lhs < rhs:
                return False
        return True


@dataclass
class TropGenerators:
    """Generator columns of a tropical cone."""

    columns: list

    def __iter__(self):
        return iter(self.columns)


# ---------------------------------------------------------------------------
# tropical determinant
# ---------------------------------------------------------------------------


def tdet(rows: list, method: str = "brute", brute_limit: int = 8
         ) -> tuple[TropNum, list]:
    """Optimal assignment value of a square tropical matrix.

    ``brute`` enumerates all permutations and returns every optimum;
    ``hungarian`` returns the value and a single optimal permutation.
    """
    u = [[trop(x) for x in row] for row in rows]
    n = len(u)
    if any(len(r) != n for r in u):
        raise ValueError("tropical determinant needs a square matrix")
    if n == 0:
        return TropNum(0), [()]
    if method == "hungarian":
        val, perm = _hungarian_max(u)
        return val, ([perm] if perm is not None else [])
    if method != "brute":
        raise ValueError(f"unknown tdet method {method!r}")
    if n > brute_limit:
        raise ValueError(f"brute-force determinant limited to {brute_limit}x{brute_limit}")
    best = NEG_INF
    opt: list = []
    for perm in itertools.permutations(range(n)):
        total = TropNum(0)
        for i in range(n):
            total = total * u[i][perm[i]]
            if total.is_neg_inf:
                break
        if total.is_neg_inf:
            continue
        if best.is_neg_inf or total.value > best.value:
            best = total
            opt = [perm]
        elif total.value == best.value:
            opt.append(perm)
    if best.is_neg_inf:
        return NEG_INF, []
    return best, opt


def _hungarian_max(u: list) -> tuple[TropNum, tuple | None]:
    """Exact max-weight perfect assignment with forbidden (-inf) entries.

    Classic potential-based shortest augmenting path on the negated weights.
    Returns (-inf, None) when no permutation avoids every forbidden entry.
    """
    n = len(u)
    INF = None  # stands for +infinity cost
    cost = [[None if u[i][j].is_neg_inf else -u[i][j].value for j in range(n)]
            for i in range(n)]

    def less(a, b):  # comparison with None = +infinity
        if a is None:
            return False
        if b is None:
            return True
        return a < b

    pot_u = [Fraction(0)] * (n + 1)
    pot_v = [Fraction(0)] * (n + 1)
    way = [0] * (n + 1)
    match = [n] * (n + 1)  # match[j] = row assigned to column j (n = none)
    for i in range(n):
        match[n] = i
        j0 = n
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = INF
            j1 = -1
            for j in range(n):
                if used[j]:
                    continue
                c = cost[i0][j]
                if c is None:
                    cur = INF
                else:
                    cur = c - pot_u[i0] - pot_v[j]
                if less(cur, minv[j]):
                    minv[j] = cur
                    way[j] = j0
                if less(minv[j], delta):
                    delta = minv[j]
                    j1 = j
            if delta is None:
                return NEG_INF, None  # no augmenting path avoids forbidden arcs
            for j in range(n + 1):
                if used[j]:
                    pot_u[match[j]] += delta
                    pot_v[j] -= delta
                else:
                    if minv[j] is not None:
                        minv[j] -= delta
            j0 = j1
            if match[j0] == n:
                break
        while j0 != n:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    perm = [0] * n
    total = Fraction(0)
    for j in range(n):
        i = match[j]
        perm[i] = j
        if cost[i][j] is None:
            return NEG_INF, None
        total += -cost[i][j]
    return TropNum(total), tuple(perm)


def perm_sign(perm) -> int:
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def term_sign(perm, chi_rows: list) -> int:
    """Sign of one assignment term: sgn(perm) times the chi product."""
    s = perm_sign(perm)
    for i, j in enumerate(perm):
        c = chi_rows[i][j]
        if c == 0:
            return 0
        if c < 0:
            s = -s
    return s


# ---------------------------------------------------------------------------
# sign genericity
# ---------------------------------------------------------------------------


@dataclass
class GenericityReport:
    status: str                      # "generic" | "violation" | "unchecked"
    rows: tuple = ()
    cols: tuple = ()
    perms: tuple = ()
    checked_up_to: int = 0

    @property
    def is_generic(self) -> bool:
        return self.status == "generic"


def is_sign_generic(sys: TropicalSystem, max_minor: int | None = None) -> GenericityReport:
    """Brute-force check over every square submatrix up to ``max_minor``.

    Generic means: every minor of the combined matrix has a finite tropical
    determinant and all optimal assignment terms share one nonzero sign.
    When the full size cannot be enumerated the verdict is "unchecked" (a
    bounded pass is never reported as generic).
    """
    m, d1 = sys.nrows, sys.ncols
    full = min(m, d1)
    if max_minor is None:
        max_minor = full if max(m, d1) <= 6 else 6
    limit = min(max_minor, full)
    combined = sys.combined()
    for k in range(1, limit + 1):
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(d1), k):
                sub = [[combined[i][j] for j in cols] for i in rows]
                val, perms = tdet(sub)
                if val.is_neg_inf:
                    return GenericityReport("violation", rows, cols, tuple(perms))
                chi_sub = [[sys.chi[i][j] for j in cols] for i in rows]
                signs = {term_sign(p, chi_sub) for p in perms}
                if len(signs) != 1 or 0 in signs:
                    return GenericityReport("violation", rows, cols, tuple(perms))
    if limit < full:
        return GenericityReport("unchecked", checked_up_to=limit)
    return GenericityReport("generic", checked_up_to=limit)


# ---------------------------------------------------------------------------
# lifting and the dual hull
# ---------------------------------------------------------------------------


def lift(sys: TropicalSystem) -> tuple[list, list]:
    """Matrices over Puiseux fractions whose entrywise valuation is (H+, H-).

    A finite entry h lifts to the monomial t**h; minus infinity lifts to 0,
    the unique element of infinite valuation.
    """
    def lift_one(x: TropNum) -> PuiseuxFraction:
        if x.is_neg_inf:
            return PuiseuxFraction.zero(T_LARGE)
        return PuiseuxFraction.t(T_LARGE, exp=x.value)

    aplus = [[lift_one(x) for x in row] for row in sys.hplus]
    aminus = [[lift_one(x) for x in row] for row in sys.hminus]
    return aplus, aminus


def matrix_val(rows: list) -> list:
    """Entrywise valuation, with zero rendered as minus infinity."""
    out = []
    for row in rows:
        vrow = []
        for x in row:
            v = x.val()
            vrow.append(NEG_INF if v is None else TropNum(v))
        out.append(vrow)
    return out


class GenericityError(ValueError):
    def __init__(self, report: GenericityReport):
        super().__init__(f"exterior description is not tropically sign-generic "
                         f"({report.status})")
        self.report = report


@dataclass
class DualHullWitness:
    """Dual hull output along with the classical lift that produced it."""

    generators: TropGenerators
    aplus: list
    aminus: list
    classical_rays: list


def trop_dual_hull(sys: TropicalSystem, force: bool = False,
                   check: GenericityReport | None = None) -> TropGenerators:
    return dual_hull_witness(sys, force=force, check=check).generators


def dual_hull_witness(sys: TropicalSystem, force: bool = False,
                      check: GenericityReport | None = None) -> DualHullWitness:
    """Generators of the tropical cone from its exterior description.

    Refuses non-generic (or uncheckable) input unless ``force`` is given;
    forced output carries no correctness warranty.
    """
    if check is None:
        check = is_sign_generic(sys)
    if not check.is_generic and not force:
        raise GenericityError(check)
    aplus, aminus = lift(sys)
    d1 = sys.ncols
    one = PuiseuxFraction.one(T_LARGE)
    zero = PuiseuxFraction.zero(T_LARGE)
    rows = [[p - q for p, q in zip(rp, rm)] for rp, rm in zip(aplus, aminus)]
    for j in range(d1):
        rows.append([one if k == j else zero for k in range(d1)])
    cone = enumerate_rays(rows, ncols=d1)
    cols = [matrix_val([ray])[0] for ray in cone.rays]
    return DualHullWitness(TropGenerators(cols), aplus, aminus, cone.rays)


# ---------------------------------------------------------------------------
# membership by residuation
# ---------------------------------------------------------------------------


def trop_member(z: list, gens: TropGenerators) -> bool:
    """Is z in the tropical cone of the given generator columns?

    Computes the largest scaling of each generator that stays below z
    (lambda_j = min over finite entries of z_i - G_ij) and checks whether
    the recombination reproduces z exactly.
    """
    zt = [trop(x) for x in z]
    cols = [[trop(x) for x in col] for col in gens.columns]
    n = len(zt)
    best = [NEG_INF] * n
    for col in cols:
        if len(col) != n:
            raise ValueError("generator length does not match point length")
        lam = None  # None = +infinity (unconstrained)
        for gi, zi in zip(col, zt):
            if gi.is_neg_inf:
                continue
            if zi.is_neg_inf:
                lam = NEG_INF
                break
            cand = zi.value - gi.value
            if lam is None or cand < lam.value:
                lam = TropNum(cand)
        if lam is None:
            # column entirely -inf contributes nothing
            continue
        for i in range(n):
            best[i] = best[i] + lam * col[i]
    return best == zt
