"""Field-generic exact simplex solvers.

Two problem forms are supported.

* ``inequality``: optimize ``c.x`` over ``{x : A x <= b}`` with free
  variables.  Solved by an active-set walk over vertices (bases = sets of
  tight rows).  The steepest-edge rule prices each candidate edge by the
  squared improvement rate ``(c.d)**2 / |d|**2`` of its geometric direction
  ``d`` in x-space, compared by cross multiplication so no square roots are
  needed.
* ``equality``: optimize ``c.x`` over ``{x : A x = b, x >= 0}``.  Solved on a
  dense exact tableau with the same pricing (every variable is geometric
  there).

Both engines are deterministic: steepest-edge ties break toward the lowest
index and the ratio test is lexicographic (a symbolic perturbation of the
right-hand side), which also rules out cycling.  The dual engine runs dual
steepest-edge pivots with weights recomputed exactly from the maintained
basis inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .fieldlinalg import dot, invert, kernel_basis, row_space_basis


@dataclass
class LinearProgram:
    """Data of one linear program.

    ``form="inequality"`` reads: optimize c.x subject to A x <= b (free x).
    ``form="equality"`` reads: optimize c.x subject to A x = b, x >= 0.
    """

    a_rows: list
    b: list
    c: list
    sense: str = "max"
    form: str = "inequality"

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise ValueError(f"unknown sense {self.sense!r}")
        if self.form not in ("inequality", "equality"):
            raise ValueError(f"unknown form {self.form!r}")
        m = len(self.a_rows)
        if len(self.b) != m:
            raise ValueError("rhs length does not match row count")
        if m and any(len(row) != len(self.a_rows[0]) for row in self.a_rows):
            raise ValueError("ragged constraint matrix")
        if m and len(self.c) != len(self.a_rows[0]):
            raise ValueError("objective length does not match column count")

    @property
    def nvars(self) -> int:
        return len(self.c)


@dataclass
class LPSolution:
    status: str                      # "optimal" | "infeasible" | "unbounded"
    value: object = None
    point: list | None = None
    dual: list | None = None         # multipliers on the original rows
    pivot_path: list = field(default_factory=list)
    pivot_count: int = 0
    certificate: list | None = None  # Farkas vector or unbounded ray
    engine: str = ""


@dataclass
class Phase1Result:
    feasible: bool
    point: list | None = None
    basis: tuple | None = None
    certificate: list | None = None
    pivots: int = 0


class SimplexError(ValueError):
    pass


def _zero_of(sample):
    return sample - sample


def _distinct_points(path) -> int:
    seen = []
    for _, pt in path:
        if pt not in seen:
            seen.append(pt)
    return len(seen)


# ---------------------------------------------------------------------------
# active-set engine (inequality form, free variables)
# ---------------------------------------------------------------------------


class _ActiveSet:
    """Vertex walk for max c.x s.t. rows.x <= b, rank(rows) = nvars."""

    def __init__(self, rows, b, c):
        self.rows = rows
        self.b = b
        self.c = c
        self.m = len(rows)
        self.d = len(c)

    def slack(self, i, x):
        return self.b[i] - dot(self.rows[i], x)

    def vertex_from_point(self, x):
        """Tight-row basis at x (requires rank d); returns (J, Ainv)."""
        tight = [i for i in range(self.m) if self.slack(i, x) == 0]
        J: list[int] = []
        rows_sel: list = []
        for i in tight:
            cand = rows_sel + [self.rows[i]]
            if len(kernel_basis(cand, self.d)) == self.d - len(cand):
                rows_sel.append(self.rows[i])
                J.append(i)
                if len(J) == self.d:
                    break
        if len(J) < self.d:
            raise SimplexError("point is not a vertex (too few independent tight rows)")
        return J, invert(rows_sel)

    def purify(self, x):
        """Move from a feasible point to a vertex without decreasing c.x."""
        while True:
            tight_rows = [self.rows[i] for i in range(self.m) if self.slack(i, x) == 0]
            ker = kernel_basis(tight_rows, self.d)
            if not ker:
                return x
            w = ker[0]
            cw = dot(self.c, w)
            if cw < 0:
                w = [-v for v in w]
                cw = -cw
            lam, _ = self._blocking(x, w)
            if lam is None:
                if cw > 0:
                    raise _Unbounded(w)
                w = [-v for v in w]
                lam, _ = self._blocking(x, w)
                if lam is None:
                    raise SimplexError("feasible line found; constraint matrix is rank-deficient")
            x = [xv + lam * wv for xv, wv in zip(x, w)]

    def _blocking(self, x, w):
        lam = None
        row = None
        for i in range(self.m):
            aw = dot(self.rows[i], w)
            if aw > 0:
                r = self.slack(i, x) / aw
                if lam is None or r < lam:
                    lam, row = r, i
        return lam, row

    def run(self, x, J, Ainv, record=True):
        """Iterate to optimality from vertex x with basis J."""
        path = [(tuple(sorted(J)), tuple(x))]
        pivots = 0
        while True:
            # inverse columns are the (negated) edge directions
            cols = [[Ainv[r][k] for r in range(self.d)] for k in range(self.d)]
            best_k = None
            best_z = best_n = None
            for k in range(self.d):
                dk = [-v for v in cols[k]]
                z = dot(self.c, dk)
                if z > 0:
                    n = dot(dk, dk)
                    if best_k is None:
                        best_k, best_z, best_n = k, z, n
                    else:
                        lhs = z * z * best_n
                        rhs = best_z * best_z * n
                        if lhs > rhs or (lhs == rhs and J[k] < J[best_k]):
                            best_k, best_z, best_n = k, z, n
            if best_k is None:
                y = self._dual(J, Ainv)
                return LPSolution("optimal", value=dot(self.c, x), point=x, dual=y,
                                  pivot_path=path, pivot_count=pivots)
            dk = [-Ainv[r][best_k] for r in range(self.d)]
            enter = self._ratio_test(x, dk, J, Ainv)
            if enter is None:
                return LPSolution("unbounded", certificate=dk, point=x,
                                  pivot_path=path, pivot_count=pivots)
            lam = self.slack(enter, x) / dot(self.rows[enter], dk)
            x = [xv + lam * dv for xv, dv in zip(x, dk)]
            Ainv = self._replace_row(Ainv, best_k, self.rows[enter])
            J = list(J)
            J[best_k] = enter
            pivots += 1
            if record:
                path.append((tuple(sorted(J)), tuple(x)))

    def _dual(self, J, Ainv):
        y = [0] * self.m
        for k in range(self.d):
            col = [Ainv[r][k] for r in range(self.d)]
            y[J[k]] = dot(self.c, col)
        return y

    def _ratio_test(self, x, dk, J, Ainv):
        """Lexicographic minimum-ratio row, simulating b_i -> b_i + eps**i."""
        cands = []
        for i in range(self.m):
            ad = dot(self.rows[i], dk)
            if ad > 0:
                cands.append((i, ad, self.slack(i, x) / ad))
        if not cands:
            return None
        best = min(r for _, _, r in cands)
        tied = [(i, ad) for i, ad, r in cands if r == best]
        if len(tied) == 1:
            return tied[0][0]
        # lexicographic comparison over perturbation powers
        weights = {i: [dot(self.rows[i], [Ainv[r][k] for r in range(self.d)]) for k in range(self.d)]
                   for i, _ in tied}
        pos_of = {j: k for k, j in enumerate(J)}
        winner = tied[0]
        for i, ad in tied[1:]:
            if self._lex_less(i, ad, winner[0], winner[1], weights, pos_of):
                winner = (i, ad)
        return winner[0]

    def _lex_less(self, i1, ad1, i2, ad2, weights, pos_of):
        for j in range(self.m):
            if j in pos_of:
                t1 = -weights[i1][pos_of[j]] / ad1
                t2 = -weights[i2][pos_of[j]] / ad2
            else:
                t1 = (1 / ad1) if j == i1 else 0
                t2 = (1 / ad2) if j == i2 else 0
            if t1 != t2:
                return t1 < t2
        return False

    @staticmethod
    def _replace_row(Ainv, k, new_row):
        """Basis inverse after replacing row k of the basis with new_row."""
        d = len(Ainv)
        v = [dot(new_row, [Ainv[r][j] for r in range(d)]) for j in range(d)]
        p = v[k]
        cols_k = [Ainv[r][k] for r in range(d)]
        out = [[Ainv[r][j] - cols_k[r] * v[j] / p for j in range(d)] for r in range(d)]
        for r in range(d):
            out[r][k] = cols_k[r] / p
        return out


class _Unbounded(Exception):
    def __init__(self, ray):
        self.ray = ray


def _aux_feasible_point(rows, b, d):
    """Feasible point of {A x <= b} via the auxiliary program in (x, theta):
    minimize theta subject to a_i.x - theta <= b_i and theta >= 0."""
    zero = _zero_of(b[0])
    one = zero + 1
    aux_rows = [list(r) + [-(one)] for r in rows] + [[zero] * d + [-(one)]]
    aux_b = list(b) + [zero]
    aux_c = [zero] * d + [-(one)]
    theta0 = zero
    for bi in b:
        v = zero - bi
        if v > theta0:
            theta0 = v
    x0 = [zero] * d + [theta0]
    eng = _ActiveSet(aux_rows, aux_b, aux_c)
    x0 = eng.purify(x0)
    J, Ainv = eng.vertex_from_point(x0)
    sol = eng.run(x0, J, Ainv, record=False)
    if sol.status != "optimal":
        raise SimplexError("auxiliary feasibility program failed to terminate at an optimum")
    theta = sol.point[d]
    if theta > 0:
        # infeasible: multipliers on the first m auxiliary rows certify it
        return None, [sol.dual[i] for i in range(len(rows))], sol.pivot_count
    return sol.point[:d], None, sol.pivot_count


# ---------------------------------------------------------------------------
# tableau engine (equality form, nonnegative variables)
# ---------------------------------------------------------------------------


class _Tableau:
    """Dense exact tableau for max c.x s.t. A x = b, x >= 0.

    Columns: n structural variables then m artificials whose block stays the
    basis inverse.  Rows of [rhs | inverse-block] remain lexicographically
    positive, which makes the lexicographic ratio test anti-cycling.
    """

    def __init__(self, a_rows, b, c):
        self.n = len(c)
        zero = _zero_of(b[0]) if b else Fraction(0)
        self.zero = zero
        self.m = len(a_rows)
        self.row_sign = [1] * self.m
        self.T = []
        self.rhs = []
        for i, row in enumerate(a_rows):
            r = list(row)
            bi = b[i]
            if bi < 0:
                r = [-x for x in r]
                bi = -bi
                self.row_sign[i] = -1
            art = [zero] * self.m
            art[i] = zero + 1
            self.T.append(r + art)
            self.rhs.append(bi)
        self.c = list(c)
        self.basis = [self.n + i for i in range(self.m)]
        self.active = list(range(self.m))
        self.obj = None  # reduced-cost row for the current objective

    # -- plumbing -----------------------------------------------------------

    def set_objective(self, costs):
        """costs has length n + m (artificials usually cost 0 or -1)."""
        self.costs = list(costs)
        red = list(costs)
        for r in self.active:
            cb = costs[self.basis[r]]
            if cb != 0:
                for j in range(self.n + self.m):
                    red[j] = red[j] - cb * self.T[r][j]
        self.obj = red

    def objective_value(self):
        total = self.zero
        for r in self.active:
            cb = self.costs[self.basis[r]]
            if cb != 0:
                total = total + cb * self.rhs[r]
        return total

    def pivot(self, r, j):
        piv = self.T[r][j]
        self.T[r] = [x / piv for x in self.T[r]]
        self.rhs[r] = self.rhs[r] / piv
        for i in self.active:
            if i != r and self.T[i][j] != 0:
                f = self.T[i][j]
                self.T[i] = [x - f * y for x, y in zip(self.T[i], self.T[r])]
                self.rhs[i] = self.rhs[i] - f * self.rhs[r]
        f = self.obj[j]
        if f != 0:
            self.obj = [x - f * y for x, y in zip(self.obj, self.T[r])]
        self.basis[r] = j

    def point(self):
        x = [self.zero] * self.n
        for r in self.active:
            if self.basis[r] < self.n:
                x[self.basis[r]] = self.rhs[r]
        return x

    def dual(self):
        """Multipliers w.r.t. the original (un-negated) rows."""
        y = []
        for i in range(self.m):
            acc = self.zero
            for r in self.active:
                cb = self.costs[self.basis[r]]
                if cb != 0:
                    acc = acc + cb * self.T[r][self.n + i]
            y.append(acc * self.row_sign[i])
        return y

    # -- pricing and ratio test ----------------------------------------------

    def _entering(self, allowed):
        best = None
        best_r = best_g = None
        for j in allowed:
            rj = self.obj[j]
            if rj > 0:
                g = self.zero + 1
                for i in self.active:
                    t = self.T[i][j]
                    if t != 0:
                        g = g + t * t
                if best is None:
                    best, best_r, best_g = j, rj, g
                else:
                    lhs = rj * rj * best_g
                    rhs = best_r * best_r * g
                    if lhs > rhs:
                        best, best_r, best_g = j, rj, g
            # ties keep the lowest index because iteration is ascending
        return best

    def _leaving(self, j):
        cands = []
        best = None
        for i in self.active:
            t = self.T[i][j]
            if t > 0:
                r = self.rhs[i] / t
                if best is None or r < best:
                    best = r
        if best is None:
            return None
        for i in self.active:
            t = self.T[i][j]
            if t > 0 and self.rhs[i] / t == best:
                cands.append(i)
        if len(cands) == 1:
            return cands[0]
        # lexicographic tie-break on the inverse block
        def lexrow(i):
            t = self.T[i][j]
            return [self.T[i][self.n + k] / t for k in range(self.m)]
        winner = cands[0]
        wrow = lexrow(winner)
        for i in cands[1:]:
            irow = lexrow(i)
            if irow < wrow:
                winner, wrow = i, irow
        return winner

    # -- phases ----------------------------------------------------------------

    def phase1(self):
        """Drive artificials to zero; returns a Farkas vector or None."""
        costs = [self.zero] * self.n + [self.zero - 1] * self.m
        self.set_objective(costs)
        pivots = 0
        while True:
            j = self._entering(range(self.n))
            if j is None:
                break
            r = self._leaving(j)
            if r is None:
                raise SimplexError("phase-1 objective unbounded; this cannot happen")
            self.pivot(r, j)
            pivots += 1
        self.phase1_pivots = pivots
        if self.objective_value() < 0:
            return self.dual()
        # kick remaining artificials out of the basis
        for r in list(self.active):
            if self.basis[r] >= self.n:
                j = next((j for j in range(self.n) if self.T[r][j] != 0), None)
                if j is None:
                    self.active.remove(r)  # redundant equality row
                else:
                    self.pivot(r, j)
        return None

    def phase2(self, record=True):
        self.set_objective(list(self.c) + [self.zero] * self.m)
        path = [(tuple(sorted(self.basis[r] for r in self.active)), tuple(self.point()))]
        pivots = 0
        while True:
            j = self._entering(range(self.n))
            if j is None:
                return LPSolution("optimal", value=self.objective_value(),
                                  point=self.point(), dual=self.dual(),
                                  pivot_path=path, pivot_count=pivots)
            r = self._leaving(j)
            if r is None:
                ray = [self.zero] * self.n
                ray[j] = self.zero + 1
                for i in self.active:
                    if self.basis[i] < self.n:
                        ray[self.basis[i]] = -self.T[i][j]
                return LPSolution("unbounded", certificate=ray, point=self.point(),
                                  pivot_path=path, pivot_count=pivots)
            self.pivot(r, j)
            pivots += 1
            if record:
                path.append((tuple(sorted(self.basis[r] for r in self.active)),
                             tuple(self.point())))

    # -- dual simplex -------------------------------------------------------------

    def dual_phase(self):
        """Dual steepest-edge iterations; requires dual-feasible obj row."""
        pivots = 0
        path = [(tuple(sorted(self.basis[r] for r in self.active)), tuple(self.point()))]
        while True:
            kick = self._kick_artificial()
            if kick is not None:
                if kick == "infeasible":
                    r = self._bad_artificial_row()
                    cert = [-self.T[r][self.n + k] * self.row_sign[k]
                            for k in range(self.m)]
                    if self.rhs[r] < 0:
                        cert = [-v for v in cert]
                    return LPSolution("infeasible", certificate=cert,
                                      pivot_path=path, pivot_count=pivots)
                pivots += 1
                continue
            best = None
            best_b = best_g = None
            for i in self.active:
                if self.rhs[i] < 0:
                    g = self.zero
                    for k in range(self.m):
                        t = self.T[i][self.n + k]
                        g = g + t * t
                    if best is None:
                        best, best_b, best_g = i, self.rhs[i], g
                    else:
                        lhs = self.rhs[i] * self.rhs[i] * best_g
                        rhs = best_b * best_b * g
                        if lhs > rhs:
                            best, best_b, best_g = i, self.rhs[i], g
            if best is None:
                return LPSolution("optimal", value=self.objective_value(),
                                  point=self.point(), dual=self.dual(),
                                  pivot_path=path, pivot_count=pivots)
            r = best
            enter = None
            enter_ratio = None
            for j in range(self.n):
                t = self.T[r][j]
                if t < 0:
                    ratio = self.obj[j] / t  # obj[j] <= 0, t < 0 -> ratio >= 0
                    if enter is None or ratio < enter_ratio:
                        enter, enter_ratio = j, ratio
            if enter is None:
                cert = [self.T[r][self.n + k] * self.row_sign[k] for k in range(self.m)]
                return LPSolution("infeasible", certificate=cert,
                                  pivot_path=path, pivot_count=pivots)
            self.pivot(r, enter)
            pivots += 1
            path.append((tuple(sorted(self.basis[r2] for r2 in self.active)),
                         tuple(self.point())))

    def _bad_artificial_row(self):
        for r in self.active:
            if self.basis[r] >= self.n and self.rhs[r] != 0:
                return r
        return None

    def _kick_artificial(self):
        """Remove a basic artificial carrying a nonzero value.

        Entering columns are chosen so the reduced-cost row stays dual
        feasible; a row with no usable column proves infeasibility.
        """
        r = self._bad_artificial_row()
        if r is None:
            return None
        if self.rhs[r] < 0:
            enter = None
            enter_ratio = None
            for j in range(self.n):
                t = self.T[r][j]
                if t < 0:
                    ratio = self.obj[j] / t
                    if enter is None or ratio < enter_ratio:
                        enter, enter_ratio = j, ratio
        else:
            enter = None
            enter_ratio = None
            for j in range(self.n):
                t = self.T[r][j]
                if t > 0:
                    ratio = self.obj[j] / t
                    if enter is None or ratio > enter_ratio:
                        enter, enter_ratio = j, ratio
        if enter is None:
            return "infeasible"
        self.pivot(r, enter)
        return "pivoted"


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def _negated(lp: LinearProgram) -> LinearProgram:
    return LinearProgram(lp.a_rows, lp.b, [-x for x in lp.c], "max", lp.form)


def _finish(sol: LPSolution, negate_value: bool, engine: str) -> LPSolution:
    if negate_value and sol.status == "optimal":
        sol.value = -sol.value
        if sol.dual is not None:
            sol.dual = [-y for y in sol.dual]
    sol.engine = engine
    return sol


def solve(lp: LinearProgram, engine: str = "primal_steepest",
          start: list | None = None) -> LPSolution:
    """Solve a linear program exactly.

    ``engine`` is ``primal_steepest`` or ``dual_steepest``; ``start`` is an
    optional feasible start vertex (inequality form only).
    """
    if engine not in ("primal_steepest", "dual_steepest"):
        raise ValueError(f"unknown engine {engine!r}")
    negate = lp.sense == "min"
    work = _negated(lp) if negate else lp
    if work.form == "inequality":
        if engine == "dual_steepest":
            sol = _solve_inequality_via_split(work)
        else:
            sol = _solve_inequality(work, start)
    else:
        if start is not None:
            raise SimplexError("start vertices are supported for inequality form only")
        sol = _solve_equality(work, engine)
    return _finish(sol, negate, engine)


def _solve_inequality(lp: LinearProgram, start=None) -> LPSolution:
    rows, b, c = lp.a_rows, lp.b, lp.c
    d = lp.nvars
    if not rows:
        raise SimplexError("inequality form needs at least one row")
    ker = kernel_basis(rows, d)
    if ker:
        # work on the quotient modulo the feasible set's lineality; the
        # constraints only see row-space components, so feasibility and
        # optimal values agree
        if start is not None:
            raise SimplexError("start vertices need a vertex-possessing system "
                               "(the feasible set contains lines)")
        W = row_space_basis(rows)
        red_rows = [[dot(r, w) for w in W] for r in rows]
        unb = next((w for w in ker if dot(c, w) != 0), None)
        if unb is not None:
            if all(bi >= 0 for bi in b):
                feas, cert = [0] * len(W), None
            else:
                feas, cert, _ = _aux_feasible_point(red_rows, b, len(W))
            if feas is None:
                return LPSolution("infeasible", certificate=cert)
            ray = unb if dot(c, unb) > 0 else [-v for v in unb]
            return LPSolution("unbounded", certificate=ray)
        red_c = [dot(c, w) for w in W]
        red = LinearProgram(red_rows, b, red_c, "max", "inequality")
        sol = _solve_inequality(red, None)
        if sol.point is not None:
            lift = lambda y: [dot([W[k][j] for k in range(len(W))], y) for j in range(d)]
            sol.point = lift(sol.point)
            sol.pivot_path = [(bs, tuple(lift(list(pt)))) for bs, pt in sol.pivot_path]
        return sol
    eng = _ActiveSet(rows, b, c)
    pivots0 = 0
    if start is not None:
        x0 = list(start)
        if any(eng.slack(i, x0) < 0 for i in range(eng.m)):
            raise SimplexError("start vertex is infeasible")
    else:
        zero = _zero_of(b[0])
        if all(bi >= 0 for bi in b):
            x0 = [zero] * d
        else:
            x0, cert, pivots0 = _aux_feasible_point(rows, b, d)
            if x0 is None:
                return LPSolution("infeasible", certificate=cert)
    try:
        x0 = eng.purify(x0)
        J, Ainv = eng.vertex_from_point(x0)
        sol = eng.run(x0, J, Ainv)
    except _Unbounded as u:
        return LPSolution("unbounded", certificate=u.ray)
    return sol


def _solve_inequality_via_split(lp: LinearProgram) -> LPSolution:
    """Dual engine path: encode free variables as differences and solve the
    equality form with the dual simplex."""
    rows, b, c = lp.a_rows, lp.b, lp.c
    d = lp.nvars
    zero = _zero_of(b[0]) if b else Fraction(0)
    one = zero + 1
    eq_rows = []
    for row in rows:
        eq_rows.append(list(row) + [-x for x in row] + [zero] * len(rows))
    for i in range(len(rows)):
        eq_rows[i][2 * d + i] = one
    eq_c = list(c) + [-x for x in c] + [zero] * len(rows)
    eq = LinearProgram(eq_rows, b, eq_c, "max", "equality")
    sol = _solve_equality(eq, "dual_steepest")
    if sol.status == "optimal":
        sol.point = [sol.point[j] - sol.point[d + j] for j in range(d)]
        sol.pivot_path = []
        sol.pivot_count = 0
    return sol


def _solve_equality(lp: LinearProgram, engine: str) -> LPSolution:
    tab = _Tableau(lp.a_rows, lp.b, lp.c)
    if engine == "dual_steepest":
        return _dual_equality(tab, lp)
    cert = tab.phase1()
    if cert is not None:
        return LPSolution("infeasible", certificate=cert)
    return tab.phase2()


def _dual_equality(tab: _Tableau, lp: LinearProgram) -> LPSolution:
    tab.set_objective(list(tab.c) + [tab.zero] * tab.m)
    if any(tab.obj[j] > 0 for j in range(tab.n)):
        # bootstrap dual feasibility on the homogeneous program (b = 0)
        zeros = [tab.zero] * tab.m
        boot = _Tableau(lp.a_rows, zeros, lp.c)
        sol = boot.phase2(record=False)
        if sol.status == "unbounded":
            check = _Tableau(lp.a_rows, lp.b, lp.c)
            cert = check.phase1()
            if cert is not None:
                return LPSolution("infeasible", certificate=cert)
            return LPSolution("unbounded", certificate=sol.certificate)
        tab = boot
        tab.rhs = []
        for i in range(tab.m):
            bi = lp.b[i]
            if tab.row_sign[i] < 0:
                bi = -bi
            tab.rhs.append(bi)
        # recompute rhs through the current basis inverse
        inv_rhs = []
        for r in range(tab.m):
            acc = tab.zero
            for k in range(tab.m):
                acc = acc + tab.T[r][tab.n + k] * tab.rhs[k]
            inv_rhs.append(acc)
        tab.rhs = inv_rhs
        tab.set_objective(list(tab.c) + [tab.zero] * tab.m)
    return tab.dual_phase()


def phase1(lp: LinearProgram) -> Phase1Result:
    """Feasibility only: a feasible point/basis or an exact Farkas certificate.

    For inequality form the certificate y satisfies y >= 0, y.A = 0 and
    y.b < 0; for equality form it satisfies y.A >= 0 and y.b < 0.
    """
    if lp.form == "inequality":
        rows, b, d = lp.a_rows, lp.b, lp.nvars
        if all(bi >= 0 for bi in b):
            zero = _zero_of(b[0])
            point = [zero] * d
            tight = tuple(i for i in range(len(rows)) if b[i] == 0)
            return Phase1Result(True, point=point, basis=tight, pivots=0)
        feas, cert, pivots = _aux_feasible_point(rows, b, d)
        if feas is None:
            return Phase1Result(False, certificate=cert, pivots=pivots)
        return Phase1Result(True, point=feas, pivots=pivots,
                            basis=tuple(i for i in range(len(rows))
                                        if b[i] - dot(rows[i], feas) == 0))
    tab = _Tableau(lp.a_rows, lp.b, lp.c)
    cert = tab.phase1()
    if cert is not None:
        return Phase1Result(False, certificate=cert, pivots=tab.phase1_pivots)
    return Phase1Result(True, point=tab.point(), pivots=tab.phase1_pivots,
                        basis=tuple(sorted(tab.basis[r] for r in tab.active)))
