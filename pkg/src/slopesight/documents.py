"""JSON documents for configurations, observations and reports.

Every rational is written in text form ("p/q", or "p" when q == 1) so that
documents are bit-exact and round-trip through :func:`json.loads`.
"""
from __future__ import annotations

import json
import os
import tempfile

from .errors import DocumentError, SlopesightError
from .geometry import (
    Point,
    SlantLine,
    VerticalLine,
    format_rational,
    format_slope,
    parse_rational,
    parse_slope,
)
from .observation import Configuration, Observation


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def write_atomic(path: str, text: str):
    """Write ``text`` to ``path`` via a temporary file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".slopesight-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _rational(value, where: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DocumentError(f"{where}: expected rational text, got {value!r}")
    try:
        return parse_rational(str(value))
    except SlopesightError as e:
        raise DocumentError(f"{where}: {e}") from None


def _field(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise DocumentError(f"{where}: missing {key!r}")
    return obj[key]


def point_doc(p: Point) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def encode_configuration(c: Configuration) -> dict:
    return {"points": [point_doc(p) for p in c.points]}


def decode_configuration(doc) -> Configuration:
    pts = _field(doc, "points", "configuration")
    if not isinstance(pts, list) or not pts:
        raise DocumentError("points: expected a non-empty list")
    points = []
    for i, pair in enumerate(pts):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"points[{i}]: expected [x, y]")
        points.append(Point(_rational(pair[0], f"points[{i}][0]"), _rational(pair[1], f"points[{i}][1]")))
    if len(set(points)) != len(points):
        dup = next(p for p in points if points.count(p) > 1)
        raise DocumentError(f"points: duplicate point ({dup.x}, {dup.y})")
    return Configuration(tuple(points))


def encode_line(line) -> dict:
    if isinstance(line, VerticalLine):
        return {"x": format_rational(line.x0)}
    return {"m": format_rational(line.m), "b": format_rational(line.b)}


def decode_line(doc, where="line"):
    if isinstance(doc, dict) and set(doc) == {"x"}:
        return VerticalLine(_rational(doc["x"], f"{where}.x"))
    if isinstance(doc, dict) and set(doc) == {"m", "b"}:
        return SlantLine(_rational(doc["m"], f"{where}.m"), _rational(doc["b"], f"{where}.b"))
    raise DocumentError(f"{where}: expected {{'x'}} or {{'m', 'b'}}")


def encode_observation(o: Observation) -> dict:
    return {
        "entries": [
            {"slope": format_slope(s), "lines": [encode_line(l) for l in lines]}
            for s, lines in o.entries
        ]
    }


def decode_observation(doc) -> Observation:
    entries = _field(doc, "entries", "observation")
    if not isinstance(entries, list):
        raise DocumentError("entries: expected a list")
    out = []
    for i, entry in enumerate(entries):
        where = f"entries[{i}]"
        raw = _field(entry, "slope", where)
        if not isinstance(raw, (str, int)) or isinstance(raw, bool):
            raise DocumentError(f"{where}.slope: expected slope text")
        try:
            s = parse_slope(str(raw))
        except SlopesightError as e:
            raise DocumentError(f"{where}.slope: {e}") from None
        lines = _field(entry, "lines", where)
        if not isinstance(lines, list):
            raise DocumentError(f"{where}.lines: expected a list")
        out.append((s, tuple(decode_line(l, f"{where}.lines[{j}]") for j, l in enumerate(lines))))
    try:
        return Observation(tuple(out))
    except SlopesightError as e:
        raise DocumentError(f"observation: {e}") from None


def encode_slopes(slopes) -> dict:
    return {"slopes": [format_slope(s) for s in slopes]}


def decode_slopes(doc) -> list:
    raw = _field(doc, "slopes", "order")
    if not isinstance(raw, list):
        raise DocumentError("slopes: expected a list")
    try:
        return [parse_slope(str(s)) for s in raw]
    except SlopesightError as e:
        raise DocumentError(f"slopes: {e}") from None


def encode_verdict(v) -> dict:
    doc = {"verdict": v.kind}
    if v.kind == "unique":
        doc["configurations"] = [encode_configuration(v.configuration)["points"]]
        doc["exhaustive"] = True
    elif v.kind == "ambiguous":
        doc["configurations"] = [encode_configuration(c)["points"] for c in v.witnesses]
        doc["exhaustive"] = v.exhaustive
        doc["count"] = v.count
        if v.phantoms:
            doc["phantoms"] = [point_doc(p) for p in v.phantoms]
    elif v.kind == "infeasible":
        doc["configurations"] = []
        doc["exhaustive"] = True
    else:
        doc["configurations"] = []
        doc["exhaustive"] = False
        doc["reason"] = v.reason
    return doc


def encode_census(report, comparison=None) -> dict:
    doc = {
        "n": report.n,
        "semantics": report.semantics.value,
        "order": [format_slope(s) for s in report.order],
        "total_examples": report.total_examples,
        "histogram": {str(k): v for k, v in report.histogram.items()},
        "max_required": report.max_required,
    }
    if comparison is not None:
        cmp = {
            "matches": comparison.matches,
            "expected_total": comparison.expected_total,
            "expected_histogram": {str(k): v for k, v in comparison.expected_histogram.items()},
        }
        if not comparison.matches:
            cmp["other_semantics_histogram"] = {
                str(k): v for k, v in comparison.other_semantics_histogram.items()
            }
            cmp["discrepancies"] = [
                {"points": encode_configuration(c)["points"], "required": k, "other_semantics": k2}
                for c, k, k2 in comparison.discrepancies
            ]
        doc["table_check"] = cmp
    return doc


def encode_adversarial(report) -> dict:
    inst = report.instance
    return {
        "n": inst.n,
        "center": point_doc(inst.center),
        "slopes": [format_slope(s) for s in inst.slopes],
        "points": encode_configuration(inst.configuration)["points"],
        "phantom_at_center": report.phantom_at_center,
        "nophantom_verdict_with_n": encode_verdict(report.nophantom_verdict_with_n),
        "unique_verdict_with_n": encode_verdict(report.unique_verdict_with_n),
        "verdict_with_n_plus_1": encode_verdict(report.verdict_with_n_plus_1),
        "nophantom_verdict_with_n_plus_1": encode_verdict(report.nophantom_verdict_with_n_plus_1),
        "required_slopes_nophantom": report.required_nophantom,
    }
