import json
from fractions import Fraction

import pytest

from puiseuxlp import cli
from puiseuxlp.formats import (
    FormatError,
    dump_generators,
    dump_polytope,
    dump_tropical,
    load_generators,
    load_polytope,
    load_tropical,
)
from puiseuxlp.tropical import NEG_INF, TropGenerators, TropicalSystem, trop


def F(a, b=1):
    return Fraction(a, b)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# -- formats ----------------------------------------------------------------


def test_polytope_bad_inputs():
    with pytest.raises(FormatError):
        load_polytope("{not json")
    with pytest.raises(FormatError):
        load_polytope(json.dumps({"field": "rational"}))
    with pytest.raises(FormatError):
        load_polytope(json.dumps({"field": "complex", "inequalities": []}))
    with pytest.raises(FormatError):
        load_polytope(json.dumps({"field": "rational",
                                  "inequalities": [["1"], ["1", "2"]]}))
    with pytest.raises(FormatError):
        load_polytope(json.dumps({"field": "rational",
                                  "inequalities": [["1", "t"]]}))


def test_tropical_round_trip():
    sys_ = TropicalSystem.make([[0, None], [F(1, 2), None]],
                               [[None, -3], [None, None]])
    text = dump_tropical(sys_)
    again = load_tropical(text)
    assert again.hplus == sys_.hplus
    assert again.hminus == sys_.hminus
    assert again.chi == sys_.chi
    assert dump_tropical(again) == text


def test_tropical_rejects_double_finite():
    with pytest.raises(FormatError):
        load_tropical(json.dumps({"Hplus": [["0"]], "Hminus": [["1"]]}))


def test_generators_round_trip():
    gens = TropGenerators([[trop(0), NEG_INF], [trop(F(1, 3)), trop(-2)]])
    text = dump_generators(gens)
    again = load_generators(text)
    assert again.columns == gens.columns
    assert dump_generators(again) == text


# -- CLI ----------------------------------------------------------------------


def test_pf_subcommands(capsys):
    code, out, _ = run(capsys, "pf", "normalize",
                       "(2*t^(3/2) - t^(-1))/(1 + 3*t^(-1/3))")
    assert code == 0
    assert out.strip() == "(-1 + 2*t^(5/2))/(3*t^(2/3) + t)"
    code, out, _ = run(capsys, "pf", "val", "t^3 - 4*t^4 + 4*t^5",
                       "--field", "puiseux-tsmall")
    assert (code, out.strip()) == (0, "3")
    code, out, _ = run(capsys, "pf", "cmp", "t", "1000000")
    assert (code, out.strip()) == (0, "GT")
    code, out, _ = run(capsys, "pf", "eval", "t^3 - 4*t^4 + 4*t^5",
                       "--at", "1/12", "--field", "puiseux-tsmall")
    assert (code, out.strip()) == (0, "25/62208")
    code, out, _ = run(capsys, "pf", "eval", "t^(1/2)", "--at", "2",
                       "--precision", "20")
    assert code == 0 and out.startswith("[")
    code, _, err = run(capsys, "pf", "normalize", "t^t")
    assert code == cli.EXIT_PARSE and "error" in err


def test_gen_lp_hull_pipeline(tmp_path, capsys):
    path = tmp_path / "gs3.json"
    code, _, _ = run(capsys, "gen", "goldfarb-sit", "-d", "3",
                     "--eps", "2*t", "--delta", "1/2",
                     "--field", "puiseux-tsmall", "-o", str(path))
    assert code == 0
    data = load_polytope(path.read_text())
    assert data.field == "puiseux-tsmall"
    assert len(data.inequalities) == 6

    code, out, _ = run(capsys, "lp", "solve", str(path), "--path")
    assert code == 0
    lines = out.strip().splitlines()
    assert "MAXIMAL_VALUE: (1)" in lines
    assert "MAXIMAL_VERTEX: (1) (0) (0) (1)" in lines
    assert "PIVOTS: 7" in lines
    assert "VERTICES_VISITED: 8" in lines

    code, out, _ = run(capsys, "hull", "volume", str(path))
    assert (code, out.strip()) == (0, "(t^3 -4*t^4 + 4*t^5)")

    code, out, _ = run(capsys, "hull", "vertices", str(path))
    assert code == 0
    assert len(out.strip().splitlines()) == 8

    code, out, _ = run(capsys, "hull", "facets", str(path))
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_gen_validation_failure(capsys):
    code, _, err = run(capsys, "gen", "goldfarb-sit", "-d", "3",
                       "--eps", "1/2", "--delta", "1/2")
    assert code == cli.EXIT_PARAMS
    assert "epsilon" in err


def test_gen_evaluate(tmp_path, capsys):
    path = tmp_path / "law1.json"
    code, _, _ = run(capsys, "gen", "long-and-winding", "-r", "1",
                     "--evaluate", "4", "-o", str(path))
    assert code == 0
    data = load_polytope(path.read_text())
    assert data.field == "rational"
    code, out, _ = run(capsys, "hull", "vertices", str(path))
    assert code == 0
    assert len(out.strip().splitlines()) == 11


def test_lp_exit_codes(tmp_path, capsys):
    infeasible = {
        "field": "rational",
        "inequalities": [["-1", "-1"], ["0", "1"]],
        "objective": ["0", "1"],
        "sense": "max",
    }
    p = tmp_path / "infeasible.json"
    p.write_text(json.dumps(infeasible))
    code, out, _ = run(capsys, "lp", "solve", str(p))
    assert code == cli.EXIT_INFEASIBLE
    assert "STATUS: infeasible" in out

    unbounded = {
        "field": "rational",
        "inequalities": [["0", "1"]],
        "objective": ["0", "1"],
        "sense": "max",
    }
    p2 = tmp_path / "unbounded.json"
    p2.write_text(json.dumps(unbounded))
    code, out, _ = run(capsys, "lp", "solve", str(p2))
    assert code == cli.EXIT_UNBOUNDED
    assert "STATUS: unbounded" in out


def test_cone_tau0_and_check_type(tmp_path, capsys):
    path = tmp_path / "polygon.json"
    code, _, _ = run(capsys, "gen", "param-polygon", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "cone", "tau0", str(path), "--exact")
    assert code == 0
    assert "TAU0: 3" in out
    assert "NEXT_INTEGER: 4" in out
    code, out, _ = run(capsys, "check-type", str(path), "--tau", "4")
    assert code == 0
    assert "TYPE_EQUAL: true" in out
    code, out, _ = run(capsys, "check-type", str(path), "--tau", "1")
    assert code == 0
    assert "TYPE_EQUAL: false" in out
    assert "SHAPE_MATCH: false" in out


def test_trop_commands(tmp_path, capsys):
    generic = {"Hplus": [["0", "-inf"]], "Hminus": [["-inf", "0"]]}
    p = tmp_path / "trop.json"
    p.write_text(json.dumps(generic))
    code, out, _ = run(capsys, "trop", "generic", str(p))
    assert code == 0 and "GENERIC: generic" in out
    code, out, _ = run(capsys, "trop", "dual-hull", str(p))
    assert code == 0
    assert sorted(out.strip().splitlines()) == ["(0) (-inf)", "(0) (0)"]

    bad = {"Hplus": [["0", "-inf"], ["-inf", "0"]],
           "Hminus": [["-inf", "-inf"], ["-inf", "-inf"]]}
    pb = tmp_path / "bad.json"
    pb.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "trop", "generic", str(pb))
    assert code == cli.EXIT_NOT_GENERIC
    code, _, _ = run(capsys, "trop", "dual-hull", str(pb))
    assert code == cli.EXIT_NOT_GENERIC
    code, out, _ = run(capsys, "trop", "dual-hull", str(pb), "--force")
    assert code == 0

    square = {"Hplus": [["1", "2"], ["3", "4"]],
              "Hminus": [["-inf", "-inf"], ["-inf", "-inf"]]}
    ps = tmp_path / "square.json"
    ps.write_text(json.dumps(square))
    code, out, _ = run(capsys, "trop", "tdet", str(ps))
    assert code == 0 and "TDET: 5" in out

    gens = {"generators": [["0", "0"], ["0", "-inf"]]}
    pg = tmp_path / "gens.json"
    pg.write_text(json.dumps(gens))
    code, out, _ = run(capsys, "trop", "member", str(pg), "--point", "5 3")
    assert code == 0 and "MEMBER: true" in out
    code, out, _ = run(capsys, "trop", "member", str(pg), "--point", "3 5")
    assert code == 0 and "MEMBER: false" in out


def test_bench_csv(capsys):
    code, out, _ = run(capsys, "bench", "goldfarb-sit", "--dmin", "3",
                       "--dmax", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "instance,field,d,m,n,pivots,seconds"
    rows = [l.split(",") for l in lines[1:]]
    assert [int(r[2]) for r in rows] == [3, 4]
    assert [int(r[4]) for r in rows] == [8, 16]
    assert [int(r[5]) for r in rows] == [7, 15]

    code, out, _ = run(capsys, "bench", "law", "--rmin", "1", "--rmax", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "instance,field,d,m,n,pivots,seconds"
    rows = [l.split(",") for l in lines[1:]]
    assert [int(r[4]) for r in rows] == [11, 28]


def test_parse_error_exit(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text("{oops")
    code, _, err = run(capsys, "lp", "solve", str(p))
    assert code == cli.EXIT_PARSE and "error" in err
