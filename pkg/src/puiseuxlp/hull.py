"""Incremental convex hull over any ordered field, and cone ray enumeration.

The core is a beneath-and-beyond walk over homogeneous generator vectors: it
maintains a simplicial decomposition of the boundary (each cell carries an
exact inward functional), a placing triangulation, and a chart of the linear
hull so lower-dimensional input is handled transparently.  New cell
functionals come from the pencil of the two hyperplanes through a horizon
ridge, which needs no linear solves and keeps orientation automatically.

Affine point sets are hulled by embedding points as (1, x).  Ray enumeration
for {x : A x >= 0} splits off the lineality space, removes implicit
equalities (found by exact LP probes), and runs the same machinery on the
polar side: facets of the cone spanned by the inequality rows are exactly
the extreme rays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .fieldlinalg import dot, kernel_basis, rank, rref
from .polyhedral import ConeDescription
from .puiseux import PuiseuxFraction
from .simplex import LinearProgram, solve as lp_solve


class HullError(ValueError):
    pass


@dataclass
class Triangulation:
    """Placing triangulation: top-dimensional cells as input-index tuples."""

    simplices: list
    insertion_order: list


@dataclass
class HullResult:
    """Irredundant facets of the hull of homogeneous generators.

    ``facets`` are inward functionals in ambient coordinates (every input
    vector pairs nonnegatively with them); ``equations`` cut out the linear
    hull; ``incidence[i][j]`` marks facet i vanishing on input j.
    """

    facets: list
    equations: list
    vertices_used: list
    triangulation: Triangulation
    incidence: list
    dim: int


# ---------------------------------------------------------------------------
# the incremental core
# ---------------------------------------------------------------------------


class _Cell:
    __slots__ = ("verts", "functional")

    def __init__(self, verts: tuple, functional: list):
        self.verts = verts
        self.functional = functional


def _normalize_functional(f: list) -> list:
    lead = next((x for x in f if x != 0), None)
    if lead is None:
        raise HullError("zero functional")
    scale = lead if lead > 0 else -lead
    return [x / scale for x in f]


def _uniform_scalars(rows: list, sample) -> list:
    """Wrap plain rationals so every entry matches the sample's field."""
    if not isinstance(sample, PuiseuxFraction):
        return rows
    orient = sample.orientation
    return [[x if isinstance(x, PuiseuxFraction)
             else PuiseuxFraction.constant(Fraction(x), orient) for x in row]
            for row in rows]


def _field_sample(rows: list):
    for row in rows:
        for x in row:
            if isinstance(x, PuiseuxFraction):
                return x
    return None


def _func_key(f: list) -> tuple:
    out = []
    for x in f:
        if isinstance(x, PuiseuxFraction):
            out.append(x.value.key())
        else:
            out.append(Fraction(x))
    return tuple(out)


class _ConeHull:
    """Beneath-and-beyond over generator vectors of a pointed cone.

    The linear hull is charted incrementally in echelon form, so membership
    tests and coordinates cost one back-substitution per point.  Cell
    functionals are canonically normalized after every pencil update, which
    keeps their entries at the intrinsic size of their hyperplane instead of
    compounding across insertions.
    """

    def __init__(self, vectors: list):
        if not vectors:
            raise HullError("need at least one generator")
        self.vectors = vectors
        self.ambient = len(vectors[0])
        self.chart_rows: list = []     # echelon ambient vectors, pivot 1
        self.chart_pivots: list[int] = []
        self.cells: list[_Cell] = []
        self.triangulation: list[tuple] = []
        self.used: list[int] = []
        self._build()

    # chart helpers ---------------------------------------------------------

    def _reduce(self, v):
        """Echelon coordinates of v plus the unreduced residual."""
        res = list(v)
        alphas = []
        for pivot, vec in zip(self.chart_pivots, self.chart_rows):
            f = res[pivot]
            alphas.append(f)
            if f != 0:
                res = [a - f * b for a, b in zip(res, vec)]
        return res, alphas

    def _build(self):
        for idx, v in enumerate(self.vectors):
            if all(x == 0 for x in v):
                continue
            res, alphas = self._reduce(v)
            if any(x != 0 for x in res):
                self._dimension_jump(idx, res, alphas)
            else:
                self._insert(idx, alphas)

    def _dimension_jump(self, idx, res, alphas):
        pivot = next(j for j, x in enumerate(res) if x != 0)
        inv = res[pivot]
        one = inv / inv
        zero = one - one
        k = len(self.chart_rows)
        self.chart_rows.append([x / inv for x in res])
        self.chart_pivots.append(pivot)
        base_f = _normalize_functional([zero] * k + [one / inv])
        if k == 0:
            self.cells = [_Cell((), base_f)]
            self.triangulation = [(idx,)]
        else:
            # every old facet hyperplane extends through the new point; old
            # top simplices become the base cells of the wedge
            joined = []
            for cell in self.cells:
                fp = dot(cell.functional, alphas) if alphas else zero
                joined.append(_Cell(cell.verts + (idx,),
                                    cell.functional + [-(fp / inv)]))
            base = [_Cell(simplex, list(base_f)) for simplex in self.triangulation]
            self.cells = base + joined
            self.triangulation = [s + (idx,) for s in self.triangulation]
        self.used.append(idx)

    def _insert(self, idx, c):
        vals = [dot(cell.functional, c) for cell in self.cells]
        visible = [i for i, val in enumerate(vals) if val < 0]
        if not visible:
            return
        vis_set = set(visible)
        # horizon ridges: shared by one visible and one non-visible cell
        ridge_map: dict[tuple, list[int]] = {}
        for ci, cell in enumerate(self.cells):
            for drop in range(len(cell.verts)):
                ridge = cell.verts[:drop] + cell.verts[drop + 1:]
                ridge_map.setdefault(ridge, []).append(ci)
        new_cells = []
        for ridge, owners in ridge_map.items():
            if len(owners) != 2:
                continue
            a, b = owners
            if (a in vis_set) == (b in vis_set):
                continue
            vis, hid = (a, b) if a in vis_set else (b, a)
            fv = self.cells[vis].functional
            fh = self.cells[hid].functional
            val_v, val_h = vals[vis], vals[hid]
            # hyperplane through the ridge and the new point, inward oriented
            f_new = [val_h * x - val_v * y for x, y in zip(fv, fh)]
            new_cells.append(_Cell(ridge + (idx,), _normalize_functional(f_new)))
        if not new_cells:
            raise HullError("generators do not span a pointed cone")
        self.triangulation.extend(self.cells[i].verts + (idx,) for i in visible)
        self.cells = [cell for i, cell in enumerate(self.cells) if i not in vis_set] + new_cells
        self.used.append(idx)

    # results ----------------------------------------------------------------

    def chart_dim(self) -> int:
        return len(self.chart_rows)

    def ambient_functionals(self) -> list:
        """Pull every distinct cell hyperplane back to ambient coordinates."""
        dual = _dual_rows(self.chart_rows)
        merged: dict[tuple, list] = {}
        for cell in self.cells:
            f = cell.functional
            key = _func_key(f)
            if key not in merged:
                merged[key] = f
        out = []
        for f in merged.values():
            g = [sum_products(dual, f, j) for j in range(self.ambient)]
            out.append(_normalize_functional(g))
        return out

    def equations(self) -> list:
        return kernel_basis(self.chart_rows, self.ambient)


def _one_like(v):
    for x in v:
        if x != 0:
            return x / x
    raise HullError("zero vector has no unit")


def sum_products(dual_rows, coeffs, j):
    acc = None
    for f, row in zip(coeffs, dual_rows):
        term = f * row[j]
        acc = term if acc is None else acc + term
    return acc


def _dual_rows(basis: list) -> list:
    """Rows m_i with m_i . basis_j = delta_ij (a dual basis on the span).

    Take M = (G^-1) basis with G the Gram matrix, which is invertible over
    an ordered field because the basis rows are independent.
    """
    k = len(basis)
    d = len(basis[0])
    gram = [[dot(bi, bj) for bj in basis] for bi in basis]
    from .fieldlinalg import invert
    ginv = invert(gram)
    return [[sum_products_plain(ginv[i], basis, j) for j in range(d)] for i in range(k)]


def sum_products_plain(coeffs, rows, j):
    acc = None
    for c, row in zip(coeffs, rows):
        term = c * row[j]
        acc = term if acc is None else acc + term
    return acc


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def hull_facets(points: list, homogeneous: bool = False) -> HullResult:
    """Facets, placing triangulation and incidence of a point or vector hull.

    Affine points (``homogeneous=False``) are embedded as (1, x); functionals
    in the result then read ``(b, -a)`` against homogeneous points.  Lower
    dimensional input yields the hull inside its linear span plus the span's
    equation system.
    """
    if not points:
        raise HullError("empty input")
    if homogeneous:
        vecs = [list(p) for p in points]
    else:
        one = None
        for p in points:
            for x in p:
                if x != 0:
                    one = x / x
                    break
            if one is not None:
                break
        if one is None:
            one = Fraction(1)
        vecs = [[one] + list(p) for p in points]
    bb = _ConeHull(vecs)
    # keep discovery order: above the sign-stability threshold it matches
    # between a parametric run and its evaluation, which is what makes
    # labeled incidence comparison meaningful
    sample = _field_sample(vecs)
    facets = _uniform_scalars(bb.ambient_functionals(), sample)
    equations = _uniform_scalars(bb.equations(), sample)
    chart_dim = bb.chart_dim()
    inc = [[dot(f, v) == 0 for v in vecs] for f in facets]
    used = _extreme_inputs(vecs, facets, equations, chart_dim)
    tri = Triangulation(simplices=list(bb.triangulation), insertion_order=list(bb.used))
    return HullResult(facets=facets, equations=equations, vertices_used=used,
                      triangulation=tri, incidence=inc, dim=chart_dim)


def _extreme_inputs(vecs, facets, equations, chart_dim) -> list:
    """Input indices that are extreme generators, first representative per ray."""
    used = []
    reps: list[tuple[int, list]] = []
    for j, v in enumerate(vecs):
        if all(x == 0 for x in v):
            continue
        active = [facets[i] for i in range(len(facets)) if dot(facets[i], v) == 0]
        if rank(active + equations) != chart_dim - 1 + len(equations):
            continue
        canon = _normalize_functional(v)
        key = _func_key(canon)
        if any(key == k for k, _ in reps):
            continue
        reps.append((key, canon))
        used.append(j)
    return used


def enumerate_rays(a_rows: list, ncols: int | None = None) -> ConeDescription:
    """Extreme rays, irredundant facets and incidence of {x : A x >= 0}.

    The lineality space (kernel of A) is split off first; implicit
    equalities are detected with exact LP probes; the pointed, full
    dimensional remainder is dualized and hulled.  Rays are scaled so the
    first nonzero coordinate is +1 or -1.
    """
    if ncols is None:
        if not a_rows:
            raise HullError("ncols required when no rows are given")
        ncols = len(a_rows[0])
    if not a_rows or all(all(x == 0 for x in row) for row in a_rows):
        return ConeDescription(inequalities=[], rays=[], lineality=kernel_basis(a_rows, ncols),
                               incidence=[], facet_rows=[])
    red, piv = rref(a_rows)
    free = [c for c in range(ncols) if c not in piv]
    lineality = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for k, pc in enumerate(piv):
            vec[pc] = -red[k][fc]
        lineality.append(vec)
    # quotient modulo the lineality space: restrict to the pivot columns (a
    # kernel vector supported only on pivot columns is zero, so this is a
    # complement and leaves the entries untouched)
    r = len(piv)
    a1 = [[row[j] for j in piv] for row in a_rows]
    implicit = _implicit_rows(a1)
    if implicit:
        S = kernel_basis([a1[i] for i in implicit], r)
    else:
        S = None
    if S is not None and not S:
        # the cone is exactly the lineality space
        return ConeDescription(inequalities=[], rays=[], lineality=lineality,
                               incidence=[], facet_rows=[])
    if S is None:
        a2 = a1
    else:
        a2 = [[dot(a1[i], s) for s in S] for i in range(len(a1))]
    gen_rows = [i for i in range(len(a2)) if any(x != 0 for x in a2[i])]
    if not gen_rows:
        return ConeDescription(inequalities=[], rays=[], lineality=lineality,
                               incidence=[], facet_rows=[])
    qdim = r if S is None else len(S)
    bb = _ConeHull([a2[i] for i in gen_rows])
    if bb.chart_dim() != qdim:
        raise HullError("inequality rows do not span the quotient; implicit "
                        "equality detection failed")
    ray_funcs = bb.ambient_functionals()
    rays = []
    for g in ray_funcs:
        y = g if S is None else [sum_products_plain(g, S, j) for j in range(r)]
        x = [Fraction(0)] * ncols
        for k, pc in enumerate(piv):
            x[pc] = y[k]
        rays.append(_normalize_functional(x))
    sample = _field_sample(a_rows)
    rays = _uniform_scalars(rays, sample)
    lineality = _uniform_scalars(lineality, sample)
    facet_rows = _facet_defining_rows(a_rows, a2, gen_rows, ray_funcs, qdim)
    inequalities = [a_rows[i] for i in facet_rows]
    inc = [[dot(a_rows[i], ray) == 0 for ray in rays] for i in facet_rows]
    return ConeDescription(inequalities=inequalities, rays=rays,
                           lineality=lineality, incidence=inc,
                           facet_rows=facet_rows)


def _implicit_rows(a1: list) -> list:
    """Rows whose functional vanishes on all of {y : A1 y >= 0} (exact LPs)."""
    m = len(a1)
    r = len(a1[0])
    zero = None
    for row in a1:
        for x in row:
            if x != 0:
                zero = x - x
                break
        if zero is not None:
            break
    if zero is None:
        return list(range(m))
    one = zero + 1
    # single witness probe: a strictly interior direction exists exactly
    # when no inequality is an implicit equality
    wit_rows = [[-x for x in row] + [one] for row in a1]
    wit_rows.append([zero] * r + [one])
    wit_b = [zero] * m + [one]
    wit_c = [zero] * r + [one]
    wit = lp_solve(LinearProgram(wit_rows, wit_b, wit_c, "max", "inequality"))
    if wit.status == "optimal" and wit.value > 0:
        return []
    implicit = []
    for i in range(m):
        if all(x == 0 for x in a1[i]):
            implicit.append(i)
            continue
        rows = [[-x for x in row] for row in a1]
        rows.append(list(a1[i]))
        b = [zero] * m + [one]
        lp = LinearProgram(rows, b, list(a1[i]), "max", "inequality")
        sol = lp_solve(lp)
        if sol.status != "optimal":
            raise HullError("implicit-equality probe did not terminate at an optimum")
        if sol.value == 0:
            implicit.append(i)
    return implicit


def _facet_defining_rows(a_rows, a2, gen_rows, ray_funcs, qdim) -> list:
    """Original indices of rows that support facets, one per hyperplane."""
    out = []
    seen = []
    for pos, i in enumerate(gen_rows):
        v = a2[i]
        active = [f for f in ray_funcs if dot(f, v) == 0]
        if rank(active) != qdim - 1:
            continue
        key = _func_key(_normalize_functional(v))
        if key in seen:
            continue
        seen.append(key)
        out.append(i)
    return out


def volume(points: list) -> object:
    """Exact volume of the hull of affine points (0 for lower dimension).

    Sum of placing-triangulation simplex volumes |det| / d!.
    """
    if not points:
        raise HullError("empty input")
    res = hull_facets(points, homogeneous=False)
    d = len(points[0])
    sample = None
    for p in points:
        for x in p:
            sample = x
            break
        if sample is not None:
            break
    zero = sample - sample if sample is not None else Fraction(0)
    if res.dim != d + 1:
        return zero
    from .fieldlinalg import determinant
    total = zero
    fact = math.factorial(d)
    for simplex in res.triangulation.simplices:
        base = points[simplex[0]]
        mat = [[points[i][j] - base[j] for j in range(d)] for i in simplex[1:]]
        det = determinant(mat)
        if det < 0:
            det = -det
        total = total + det * Fraction(1, fact)
    return total
