"""Dense exact linear algebra over any ordered-field scalar.

Matrices are plain lists of row lists; scalars are ``Fraction`` or
:class:`~puiseuxlp.puiseux.PuiseuxFraction` (anything supporting exact
``+ - * /`` and comparisons with 0 and 1).  Nothing here mutates its inputs.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list  # list[list[scalar]]
Vector = list  # list[scalar]


def sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def dot(u: Vector, v: Vector):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    it = iter(range(len(u)))
    acc = None
    for i in it:
        term = u[i] * v[i]
        acc = term if acc is None else acc + term
    if acc is None:
        raise ValueError("empty vectors have no dot product")
    return acc


def mat_vec(a: Matrix, x: Vector) -> Vector:
    return [dot(row, x) for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return []
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def scale_vec(v: Vector, c) -> Vector:
    return [x * c for x in v]


def add_vec(u: Vector, v: Vector) -> Vector:
    return [a + b for a, b in zip(u, v)]


def sub_vec(u: Vector, v: Vector) -> Vector:
    return [a - b for a, b in zip(u, v)]


def rref(a: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column list."""
    m = [list(row) for row in a]
    pivots: list[int] = []
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a: Matrix) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def kernel_basis(a: Matrix, ncols: int | None = None) -> Matrix:
    """Echelon-reduced row basis of the right kernel {x : a x = 0}."""
    if not a:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        cols = ncols
        red, piv = [], []
    else:
        cols = len(a[0])
        red, piv = rref(a)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    one = Fraction(1)
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = one
        for r, pc in enumerate(piv):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def row_space_basis(a: Matrix) -> Matrix:
    """Echelon-reduced basis of the row space."""
    if not a:
        return []
    red, piv = rref(a)
    return [red[i] for i in range(len(piv))]


def solve_in_span(basis_rows: Matrix, target: Vector) -> Vector | None:
    """Coefficients c with sum(c_i * basis_rows[i]) == target, or None."""
    k = len(basis_rows)
    if k == 0:
        return [] if all(x == 0 for x in target) else None
    cols = len(target)
    aug = [[basis_rows[i][j] for i in range(k)] + [target[j]] for j in range(cols)]
    red, piv = rref(aug)
    if k in piv:  # pivot in the augmented column: inconsistent
        return None
    coeffs = [Fraction(0)] * k
    for r, pc in enumerate(piv):
        coeffs[pc] = red[r][k]
    return coeffs


def invert(a: Matrix) -> Matrix:
    """Inverse of a square nonsingular matrix."""
    n = len(a)
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(a)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def solve_square(a: Matrix, b: Vector) -> Vector:
    """Solution of a x = b for square nonsingular a."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, piv = rref(aug)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    return [red[i][n] for i in range(n)]


def determinant(a: Matrix):
    """Exact determinant by fraction-full Gaussian elimination."""
    n = len(a)
    m = [list(row) for row in a]
    det = None
    neg = False
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            zero = m[0][0] - m[0][0]
            return zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            neg = not neg
        pivot = m[c][c]
        det = pivot if det is None else det * pivot
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / pivot
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return -det if neg else det
