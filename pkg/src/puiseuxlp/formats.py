"""JSON file formats: polytope systems and tropical matrix pairs.

Scalars are stored as grammar strings (the same text the scalar parser and
printer use), so files stay human-diffable and round-trip bit-exactly.
Inequality rows are homogeneous: the constraint ``a.x <= b`` is the row
``(b, -a)`` against the point ``(1, x)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .puiseux import format_scalar, scalar_parser, field_tag
from .simplex import LinearProgram
from .tropical import TropicalSystem, TropGenerators, format_trop, parse_trop

FIELD_TAGS = ("rational", "puiseux-tlarge", "puiseux-tsmall")


class FormatError(ValueError):
    pass


@dataclass
class PolytopeData:
    """In-memory form of a polytope file."""

    field: str
    inequalities: list
    objective: list | None = None
    sense: str = "max"
    points: list | None = None

    def __eq__(self, other):
        if not isinstance(other, PolytopeData):
            return NotImplemented
        return (self.field == other.field
                and self.inequalities == other.inequalities
                and self.objective == other.objective
                and self.sense == other.sense
                and self.points == other.points)

    def to_linear_program(self) -> LinearProgram:
        """Read the homogeneous rows back as an inequality-form program."""
        if not self.inequalities:
            raise FormatError("file contains no inequality rows")
        rows = [[-x for x in r[1:]] for r in self.inequalities]
        rhs = [r[0] for r in self.inequalities]
        if self.objective is not None:
            c = list(self.objective[1:])
        else:
            zero = rhs[0] - rhs[0]
            c = [zero] * len(rows[0])
        return LinearProgram(rows, rhs, c, sense=self.sense, form="inequality")

    @staticmethod
    def from_linear_program(lp: LinearProgram, points: list | None = None) -> "PolytopeData":
        if lp.form != "inequality":
            raise FormatError("polytope files hold inequality-form systems")
        sample = lp.b[0]
        zero = sample - sample
        ineqs = [[lp.b[i]] + [zero - x for x in lp.a_rows[i]] for i in range(len(lp.a_rows))]
        objective = [zero] + list(lp.c)
        return PolytopeData(field=field_tag(sample), inequalities=ineqs,
                            objective=objective, sense=lp.sense, points=points)


def dump_polytope(data: PolytopeData) -> str:
    doc = {
        "field": data.field,
        "inequalities": [[format_scalar(x) for x in row] for row in data.inequalities],
        "sense": data.sense,
    }
    if data.objective is not None:
        doc["objective"] = [format_scalar(x) for x in data.objective]
    if data.points is not None:
        doc["points"] = [[format_scalar(x) for x in row] for row in data.points]
    return json.dumps(doc, indent=2) + "\n"


def load_polytope(text: str) -> PolytopeData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "field" not in doc or "inequalities" not in doc:
        raise FormatError("polytope file needs 'field' and 'inequalities'")
    tag = doc["field"]
    if tag not in FIELD_TAGS:
        raise FormatError(f"unknown field tag {tag!r}")
    parse = scalar_parser(tag)

    def parse_rows(rows, what):
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise FormatError(f"{what} must be a list of rows")
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise FormatError(f"{what} rows are not rectangular")
        try:
            return [[parse(s) for s in row] for row in rows]
        except ValueError as e:
            raise FormatError(f"bad scalar in {what}: {e}") from None

    ineqs = parse_rows(doc["inequalities"], "inequalities")
    sense = doc.get("sense", "max")
    if sense not in ("max", "min"):
        raise FormatError(f"unknown sense {sense!r}")
    objective = None
    if "objective" in doc:
        objective = parse_rows([doc["objective"]], "objective")[0]
        if ineqs and len(objective) != len(ineqs[0]):
            raise FormatError("objective length does not match inequality rows")
    points = None
    if "points" in doc:
        points = parse_rows(doc["points"], "points")
        if points and ineqs and len(points[0]) != len(ineqs[0]):
            raise FormatError("point length does not match inequality rows")
    return PolytopeData(field=tag, inequalities=ineqs, objective=objective,
                        sense=sense, points=points)


# ---------------------------------------------------------------------------
# tropical files
# ---------------------------------------------------------------------------


def dump_tropical(sys: TropicalSystem) -> str:
    doc = {
        "Hplus": [[format_trop(x) for x in row] for row in sys.hplus],
        "Hminus": [[format_trop(x) for x in row] for row in sys.hminus],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_tropical(text: str) -> TropicalSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "Hplus" not in doc or "Hminus" not in doc:
        raise FormatError("tropical file needs 'Hplus' and 'Hminus'")

    def parse_rows(rows, what):
        if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
            raise FormatError(f"{what} must be a list of rows")
        try:
            return [[parse_trop(s) for s in row] for row in rows]
        except ValueError as e:
            raise FormatError(f"bad tropical scalar in {what}: {e}") from None

    hp = parse_rows(doc["Hplus"], "Hplus")
    hm = parse_rows(doc["Hminus"], "Hminus")
    try:
        return TropicalSystem.make(hp, hm)
    except ValueError as e:
        raise FormatError(str(e)) from None


def dump_generators(gens: TropGenerators) -> str:
    doc = {"generators": [[format_trop(x) for x in col] for col in gens.columns]}
    return json.dumps(doc, indent=2) + "\n"


def load_generators(text: str) -> TropGenerators:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "generators" not in doc:
        raise FormatError("generator file needs 'generators'")
    cols = doc["generators"]
    if not isinstance(cols, list) or any(not isinstance(c, list) for c in cols):
        raise FormatError("'generators' must be a list of columns")
    try:
        return TropGenerators([[parse_trop(s) for s in col] for col in cols])
    except ValueError as e:
        raise FormatError(f"bad tropical scalar: {e}") from None
