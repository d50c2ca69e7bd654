import itertools
import random
from fractions import Fraction

import pytest

from puiseuxlp.puiseux import T_LARGE, PuiseuxFraction
from puiseuxlp.tropical import (
    NEG_INF,
    GenericityError,
    TropNum,
    TropicalSystem,
    dual_hull_witness,
    is_sign_generic,
    lift,
    matrix_val,
    tdet,
    term_sign,
    trop,
    trop_dual_hull,
    trop_member,
)


def F(a, b=1):
    return Fraction(a, b)


def t_scale(col, c):
    return [x * trop(c) for x in col]


# -- semiring -------------------------------------------------------------------


def test_semiring_laws_exhaustive():
    sample = [NEG_INF, trop(-2), trop(0), trop(F(1, 2)), trop(3)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
    for a in sample:
        assert a + NEG_INF == a
        assert a * NEG_INF == NEG_INF
        assert a * trop(0) == a


# -- determinant ------------------------------------------------------------------


def test_tdet_identity():
    val, perms = tdet([[0, None], [None, 0]])
    assert val == trop(0)
    assert perms == [(0, 1)]


def test_tdet_two_by_two_tie():
    val, perms = tdet([[1, 2], [3, 4]])
    assert val == trop(5)
    assert sorted(perms) == [(0, 1), (1, 0)]


def test_tdet_minus_inf_row():
    val, perms = tdet([[None, None], [1, 2]])
    assert val.is_neg_inf and perms == []


def test_tdet_hungarian_matches_brute():
    rng = random.Random(7001)
    for _ in range(60):
        n = rng.randint(1, 5)
        rows = [[None if rng.random() < 0.2 else F(rng.randint(-9, 9))
                 for _ in range(n)] for _ in range(n)]
        bval, bperms = tdet(rows, method="brute")
        hval, hperms = tdet(rows, method="hungarian")
        assert bval == hval
        if not bval.is_neg_inf:
            assert hperms[0] in bperms


def test_tdet_hungarian_larger_sizes():
    rng = random.Random(7002)
    for n in (6, 7, 8):
        rows = [[F(rng.randint(-20, 20)) for _ in range(n)] for _ in range(n)]
        bval, _ = tdet(rows, method="brute")
        hval, _ = tdet(rows, method="hungarian")
        assert bval == hval


# -- term signs -----------------------------------------------------------------------


def test_term_sign():
    chi = [[1, 1], [1, 1]]
    assert term_sign((0, 1), chi) == 1
    assert term_sign((1, 0), chi) == -1
    assert term_sign((0, 1), [[1, 1], [1, 0]]) == 0
    assert term_sign((0, 1), [[1, 1], [1, -1]]) == -1


# -- genericity --------------------------------------------------------------------------


def test_generic_one_row():
    sys_ = TropicalSystem.make([[0, None]], [[None, 0]])
    assert is_sign_generic(sys_).status == "generic"


def test_violation_by_tie():
    # combined matrix [[1,2],[3,4]] has both permutations optimal with
    # opposite permutation signs under an all-plus pattern
    sys_ = TropicalSystem.make([[1, 2], [3, 4]], [[None, None], [None, None]])
    rep = is_sign_generic(sys_)
    assert rep.status == "violation"
    assert len(rep.perms) == 2


def test_violation_by_minus_inf_entry():
    sys_ = TropicalSystem.make([[0, None], [None, 0]], [[None, None], [None, None]])
    rep = is_sign_generic(sys_)
    assert rep.status == "violation"
    assert rep.rows and rep.cols  # a 1x1 minor is already infinite


def test_unchecked_beyond_bound():
    hp = [[0] * 7 for _ in range(7)]
    hm = [[None] * 7 for _ in range(7)]
    rep = is_sign_generic(TropicalSystem.make(hp, hm))
    assert rep.status in ("violation", "unchecked")
    rep_small = is_sign_generic(TropicalSystem.make(hp, hm), max_minor=1)
    assert rep_small.status in ("violation", "unchecked")


# -- lift -------------------------------------------------------------------------------------


def test_lift_examples():
    sys_ = TropicalSystem.make([[0, None]], [[None, 0]])
    ap, am = lift(sys_)
    assert ap[0][0] == 1 and ap[0][1].is_zero()
    assert am[0][0].is_zero() and am[0][1] == 1
    h = TropicalSystem.make([[F(3, 2)]], [[None]])
    ap, _ = lift(h)
    assert ap[0][0] == PuiseuxFraction.t(T_LARGE, F(3, 2))


def test_lift_val_round_trip():
    rng = random.Random(7003)
    for _ in range(30):
        m, d1 = rng.randint(1, 3), rng.randint(1, 3)
        hp, hm = [], []
        for _ in range(m):
            rp, rm = [], []
            for _ in range(d1):
                v = None if rng.random() < 0.3 else F(rng.randint(-5, 5))
                if rng.random() < 0.5:
                    rp.append(v)
                    rm.append(None)
                else:
                    rp.append(None)
                    rm.append(v)
            hp.append(rp)
            hm.append(rm)
        sys_ = TropicalSystem.make(hp, hm)
        ap, am = lift(sys_)
        assert matrix_val(ap) == sys_.hplus
        assert matrix_val(am) == sys_.hminus


# -- dual hull --------------------------------------------------------------------------


def canon_col(col):
    ref = next((x for x in col if not x.is_neg_inf), None)
    if ref is None:
        return tuple(col)
    return tuple(x * trop(-ref.value) for x in col)


def test_dual_hull_worked_instance():
    sys_ = TropicalSystem.make([[0, None]], [[None, 0]])
    gens = trop_dual_hull(sys_)
    got = sorted(canon_col(c) for c in gens.columns)
    want = sorted([
        (trop(0), trop(0)),
        (trop(0), NEG_INF),
    ])
    assert got == want


def test_dual_hull_empty_system():
    sys_ = TropicalSystem.make([], [], width=2)
    gens = trop_dual_hull(sys_)
    got = sorted(canon_col(c) for c in gens.columns)
    assert got == sorted([(trop(0), NEG_INF), (NEG_INF, trop(0))])


def test_dual_hull_refuses_non_generic():
    sys_ = TropicalSystem.make([[0, None], [None, 0]], [[None, None], [None, None]])
    with pytest.raises(GenericityError):
        trop_dual_hull(sys_)
    gens = trop_dual_hull(sys_, force=True)
    assert gens.columns  # forced output exists, unwarranted


def rand_generic_system(rng, m, d1):
    while True:
        hp, hm = [], []
        for _ in range(m):
            rp, rm = [], []
            for _ in range(d1):
                v = F(rng.randint(-5, 5))
                if rng.random() < 0.5:
                    rp.append(v)
                    rm.append(None)
                else:
                    rp.append(None)
                    rm.append(v)
            hp.append(rp)
            hm.append(rm)
        sys_ = TropicalSystem.make(hp, hm)
        if is_sign_generic(sys_).status == "generic":
            return sys_


def test_dual_hull_random_generic():
    rng = random.Random(7004)
    for _ in range(6):
        m, d1 = rng.randint(1, 3), rng.randint(2, 3)
        sys_ = rand_generic_system(rng, m, d1)
        wit = dual_hull_witness(sys_)
        for col in wit.generators.columns:
            assert sys_.satisfied_by(col)
            assert trop_member(col, wit.generators)
        # valuation push-forward of random nonnegative combinations
        for _ in range(20):
            coeffs = [PuiseuxFraction.t(T_LARGE, rng.randint(0, 3), rng.randint(0, 4))
                      for _ in wit.classical_rays]
            x = [sum((c * ray[j] for c, ray in zip(coeffs, wit.classical_rays)),
                     PuiseuxFraction.zero(T_LARGE)) for j in range(sys_.ncols)]
            z = matrix_val([x])[0]
            assert trop_member(z, wit.generators)


# -- membership --------------------------------------------------------------------------


def test_member_examples():
    gens = trop_dual_hull(TropicalSystem.make([[0, None]], [[None, 0]]))
    assert trop_member([5, 3], gens)
    assert not trop_member([3, 5], gens)
    for col in gens.columns:
        assert trop_member(col, gens)


def test_member_neg_inf_coordinates():
    from puiseuxlp.tropical import TropGenerators

    gens = TropGenerators([[trop(0), trop(0)], [trop(0), NEG_INF]])
    assert trop_member([NEG_INF, NEG_INF], gens)
    assert trop_member([0, 0], gens)
    assert trop_member([0, -3], gens)
    assert not trop_member([NEG_INF, 0], gens)
