import random
from fractions import Fraction

import pytest

from puiseuxlp.fieldlinalg import dot
from puiseuxlp.instances import GoldfarbSitSpec, goldfarb_sit
from puiseuxlp.puiseux import PuiseuxFraction, T_SMALL, pf, pf_format
from puiseuxlp.simplex import LinearProgram, SimplexError, phase1, solve


def F(a, b=1):
    return Fraction(a, b)


def test_simple_bounded_max():
    lp = LinearProgram([[F(1)], [F(-1)]], [F(5), F(0)], [F(1)])
    sol = solve(lp)
    assert sol.status == "optimal"
    assert sol.value == 5
    assert sol.point == [5]


def test_infeasible_with_certificate():
    # x >= 1 and x <= 0
    lp = LinearProgram([[F(-1)], [F(1)]], [F(-1), F(0)], [F(1)])
    sol = solve(lp)
    assert sol.status == "infeasible"
    y = sol.certificate
    assert all(v >= 0 for v in y)
    assert sum(y[i] * lp.a_rows[i][0] for i in range(2)) == 0
    assert sum(y[i] * lp.b[i] for i in range(2)) < 0


def test_unbounded():
    lp = LinearProgram([[F(-1)]], [F(0)], [F(1)])
    sol = solve(lp)
    assert sol.status == "unbounded"


def test_min_sense():
    lp = LinearProgram([[F(1)], [F(-1)]], [F(5), F(2)], [F(1)], sense="min")
    sol = solve(lp)
    assert sol.status == "optimal"
    assert sol.value == -2
    assert sol.point == [-2]


def test_goldfarb_sit_reference_solution():
    eps = pf("2*t", T_SMALL)
    lp = goldfarb_sit(GoldfarbSitSpec(3, F(1, 2), eps))
    sol = solve(lp)
    assert sol.status == "optimal"
    assert pf_format(sol.value) == "1"
    assert [pf_format(x) for x in sol.point] == ["0", "0", "1"]


def test_goldfarb_sit_path_property_small():
    for d in (3, 4):
        lp = goldfarb_sit(GoldfarbSitSpec(d, F(1, 2), F(1, 6)))
        sol = solve(lp)
        points = []
        for _, pt in sol.pivot_path:
            if pt not in points:
                points.append(pt)
        assert len(points) == 2 ** d
        assert sol.pivot_count == 2 ** d - 1
        objs = [dot(lp.c, list(pt)) for _, pt in sol.pivot_path]
        assert all(a < b for a, b in zip(objs, objs[1:]))


def test_determinism():
    lp = goldfarb_sit(GoldfarbSitSpec(4, F(1, 2), F(1, 6)))
    s1, s2 = solve(lp), solve(lp)
    assert s1.pivot_path == s2.pivot_path


def test_phase1_goldfarb_sit_immediate():
    lp = goldfarb_sit(GoldfarbSitSpec(3, F(1, 2), F(1, 6)))
    res = phase1(lp)
    assert res.feasible
    assert res.pivots == 0
    assert all(x == 0 for x in res.point)


def test_phase1_infeasible_certificate():
    lp = LinearProgram([[F(-1)], [F(1)]], [F(-1), F(0)], [F(1)])
    res = phase1(lp)
    assert not res.feasible
    y = res.certificate
    assert all(v >= 0 for v in y)
    assert y[0] * (-1) + y[1] * 1 == 0
    assert y[0] * (-1) + y[1] * 0 < 0


def test_phase1_equality_zero_rhs():
    lp = LinearProgram([[F(1), F(1)]], [F(0)], [F(1), F(0)], form="equality")
    res = phase1(lp)
    assert res.feasible
    assert res.point == [0, 0]


def test_equality_form_solve_and_duality():
    # max x1 + x2  s.t.  x1 + x2 + s = 4, x1 - x2 = 1, x >= 0
    lp = LinearProgram(
        [[F(1), F(1), F(1)], [F(1), F(-1), F(0)]],
        [F(4), F(1)],
        [F(1), F(1), F(0)],
        form="equality",
    )
    sol = solve(lp)
    assert sol.status == "optimal"
    assert sol.value == 4
    assert dot(sol.dual, lp.b) == sol.value


def test_equality_infeasible():
    lp = LinearProgram([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)],
                       [F(1), F(0)], form="equality")
    sol = solve(lp)
    assert sol.status == "infeasible"
    y = sol.certificate
    # y.A >= 0 with y.b < 0 refutes feasibility over x >= 0
    lhs = [y[0] * lp.a_rows[0][j] + y[1] * lp.a_rows[1][j] for j in range(2)]
    assert all(v >= 0 for v in lhs)
    assert y[0] * 1 + y[1] * 2 < 0


def test_duality_random_inequality():
    rng = random.Random(5001)
    for _ in range(25):
        d = rng.randint(2, 4)
        m = rng.randint(d + 1, d + 4)
        rows = [[F(rng.randint(-4, 4)) for _ in range(d)] for _ in range(m)]
        # box rows keep it bounded and feasible around the origin
        for j in range(d):
            row = [F(0)] * d
            row[j] = F(1)
            rows.append(list(row))
            row = [F(0)] * d
            row[j] = F(-1)
            rows.append(row)
        b = [F(rng.randint(1, 9)) for _ in range(m)] + [F(5)] * (2 * d)
        c = [F(rng.randint(-5, 5)) for _ in range(d)]
        lp = LinearProgram(rows, b, c)
        sol = solve(lp)
        assert sol.status == "optimal"
        y = sol.dual
        assert all(v >= 0 for v in y)
        assert dot(y, b) == sol.value
        combo = [sum(y[i] * rows[i][j] for i in range(len(rows))) for j in range(d)]
        assert combo == c


def test_equality_random_duality():
    rng = random.Random(5002)
    for _ in range(20):
        n = rng.randint(3, 5)
        k = rng.randint(1, 2)
        a = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)]
        a.append([F(1)] * n)  # simplex row keeps it bounded
        x0 = [F(rng.randint(0, 4)) for _ in range(n)]
        b = [dot(row, x0) for row in a]
        c = [F(rng.randint(-4, 4)) for _ in range(n)]
        lp = LinearProgram(a, b, c, form="equality")
        sol = solve(lp)
        assert sol.status == "optimal"
        assert dot(c, sol.point) == sol.value
        assert dot(sol.dual, b) == sol.value
        assert all(x >= 0 for x in sol.point)
        assert [dot(row, sol.point) for row in a] == b


def test_dual_engine_agrees():
    rng = random.Random(5003)
    for _ in range(15):
        n = rng.randint(3, 5)
        k = rng.randint(1, 2)
        a = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(k)]
        a.append([F(1)] * n)
        x0 = [F(rng.randint(0, 4)) for _ in range(n)]
        b = [dot(row, x0) for row in a]
        c = [F(rng.randint(-4, 4)) for _ in range(n)]
        lp = LinearProgram(a, b, c, form="equality")
        primal = solve(lp, engine="primal_steepest")
        dual = solve(lp, engine="dual_steepest")
        assert dual.status == primal.status == "optimal"
        assert dual.value == primal.value


def test_dual_engine_inequality():
    lp = LinearProgram([[F(1)], [F(-1)]], [F(5), F(0)], [F(1)])
    sol = solve(lp, engine="dual_steepest")
    assert sol.status == "optimal"
    assert sol.value == 5


def test_dual_engine_statuses():
    infeas = LinearProgram([[F(1), F(1)], [F(1), F(1)]], [F(1), F(2)],
                           [F(1), F(0)], form="equality")
    assert solve(infeas, engine="dual_steepest").status == "infeasible"
    unbddd = LinearProgram([[F(1), F(-1)]], [F(0)], [F(1), F(1)], form="equality")
    assert solve(unbddd, engine="dual_steepest").status == "unbounded"


def test_start_vertex():
    lp = goldfarb_sit(GoldfarbSitSpec(3, F(1, 2), F(1, 6)))
    origin = [F(0)] * 3
    sol = solve(lp, start=origin)
    assert sol.status == "optimal"
    assert sol.pivot_count == 7
    with pytest.raises(SimplexError):
        solve(lp, start=[F(-1), F(0), F(0)])


def test_lineality_in_feasible_set():
    # one constraint in two variables: feasible set contains a line
    lp = LinearProgram([[F(1), F(0)]], [F(2)], [F(1), F(0)])
    sol = solve(lp)
    assert sol.status == "optimal"
    assert sol.value == 2
    lp2 = LinearProgram([[F(1), F(0)]], [F(2)], [F(1), F(1)])
    assert solve(lp2).status == "unbounded"
