"""Command line front end.

Polygon documents come in as line-oriented text (or an equivalent JSON
object); every command prints a single JSON run report with stable field
order and deterministic, lexicographically sorted point lists.

Text grammar (one document, any number of polygon blocks)::

    # comments and blank lines are ignored
    polygon <optional label>
    <x> <y>
    <x> <y>
    polygon <optional label>
    ...

The leading ``polygon`` header may be omitted for a single anonymous block.
JSON form: ``{"polygons": [{"label": ..., "points": [[x, y], ...]}, ...]}``
or the shorthand ``{"points": [[x, y], ...]}``.

Exit codes: 0 success (and, for verification commands, the verified claim
holds); 1 internal failure or a verification that unexpectedly fails;
2 malformed input or usage; 3 a violated domain precondition.
"""

from __future__ import annotations

import argparse
import json
import operator
import random
import sys
from dataclasses import dataclass, field

from .counting import boundary_count, enumerate_lattice_points, interior_count, twice_area
from .decompose import decompose, decompose_all, verify_decomposition
from .dim3 import check_idp_3d, enumerate_lattice_points_3d, hfold_pointset_3d, reeve_tetrahedron
from .geometry import GeometryError, LatticePolygon, convex_hull
from .minkowski import PointSet, dilate, hfold_pointset, minkowski_sum, pointset_sum
from .sampling import random_lattice_polygon
from .svg import emit_svg
from .triangulation import triangulate_primitive

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_CONTRACT = 3


class ParseError(ValueError):
    """Malformed input document, with a 1-based line number where known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


@dataclass(frozen=True)
class PolygonDocument:
    """Raw labelled point list, prior to hulling."""

    points: tuple[tuple[int, int], ...]
    label: str | None = None


def _int_token(tok: str, lineno: int | None) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _parse_text(text: str) -> list[PolygonDocument]:
    docs: list[PolygonDocument] = []
    label: str | None = None
    points: list[tuple[int, int]] = []
    open_block = False

    def close_block(lineno):
        nonlocal label, points, open_block
        if open_block:
            if not points:
                raise ParseError("polygon block has no points", lineno)
            docs.append(PolygonDocument(tuple(points), label))
        label = None
        points = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "polygon":
            close_block(lineno)
            if len(tokens) > 2:
                raise ParseError("polygon header takes at most one label", lineno)
            label = tokens[1] if len(tokens) == 2 else None
            open_block = True
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'x y', got {line!r}", lineno)
        points.append((_int_token(tokens[0], lineno), _int_token(tokens[1], lineno)))
        open_block = True
    close_block(None)
    if not docs:
        raise ParseError("document contains no polygon")
    return docs


def _coerce_json_points(obj, what: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(obj, list) or not obj:
        raise ParseError(f"{what} must be a nonempty list of [x, y] pairs")
    pts = []
    for entry in obj:
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError(f"{what} entries must be [x, y] pairs, got {entry!r}")
        try:
            pts.append((operator.index(entry[0]), operator.index(entry[1])))
        except TypeError:
            raise ParseError(f"{what} coordinates must be integers, got {entry!r}") from None
    return tuple(pts)


def _parse_json(text: str) -> list[PolygonDocument]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if "points" in obj:
        return [PolygonDocument(_coerce_json_points(obj["points"], "points"), obj.get("label"))]
    blocks = obj.get("polygons")
    if not isinstance(blocks, list) or not blocks:
        raise ParseError("JSON document needs a nonempty 'polygons' list or a 'points' list")
    docs = []
    for blk in blocks:
        if not isinstance(blk, dict):
            raise ParseError(f"polygon entries must be objects, got {blk!r}")
        label = blk.get("label")
        if label is not None and not isinstance(label, str):
            raise ParseError(f"label must be a string, got {label!r}")
        docs.append(PolygonDocument(_coerce_json_points(blk.get("points"), "points"), label))
    return docs


def parse_document(text: str) -> list[PolygonDocument]:
    """Parse a polygon document in either the text or the JSON form."""
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty document")
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def serialize_documents(docs) -> str:
    """Canonical text form; parse(serialize(parse(s))) == parse(s) for valid s."""
    lines = []
    for doc in docs:
        lines.append(f"polygon {doc.label}" if doc.label else "polygon")
        lines.extend(f"{x} {y}" for x, y in doc.points)
    return "\n".join(lines) + "\n"


def _load_documents(args) -> list[PolygonDocument]:
    if not getattr(args, "input", None):
        raise ParseError("this command needs --input <path> (use '-' for stdin)")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as f:
            text = f.read()
    return parse_document(text)


def _single_polygon(docs) -> tuple[PolygonDocument, LatticePolygon]:
    if len(docs) != 1:
        raise ParseError(f"expected exactly one polygon block, got {len(docs)}")
    return docs[0], convex_hull(docs[0].points)


def _pts(points) -> list[list[int]]:
    return [[p[0], p[1]] for p in sorted(points)]


def _verts(P: LatticePolygon) -> list[list[int]]:
    return [[v.x, v.y] for v in P.vertices]


def _doc_json(doc: PolygonDocument) -> dict:
    out = {"points": [[x, y] for x, y in doc.points]}
    if doc.label:
        out["label"] = doc.label
    return out


def _cert_json(d) -> dict:
    return {
        "a": [d.a.x, d.a.y],
        "b": [d.b.x, d.b.y],
        "c": [d.c.x, d.c.y],
        "i": d.i,
        "j": d.j,
        "k": d.k,
        "h": d.h,
    }


@dataclass
class RunReport:
    """Deterministic, machine-parseable result of one CLI invocation."""

    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    status: str = "ok"
    error: dict | None = None
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "status": self.status,
            "inputs": self.inputs,
            "outputs": self.outputs,
        }
        if self.error is not None:
            payload["error"] = self.error
        return json.dumps(payload, indent=2)


def cmd_hull(args) -> RunReport:
    doc, P = _single_polygon(_load_documents(args))
    return RunReport(
        "hull",
        inputs={"polygon": _doc_json(doc)},
        outputs={"vertices": _verts(P), "dimension": P.dimension},
    )


def cmd_count(args) -> RunReport:
    doc, P = _single_polygon(_load_documents(args))
    counts = {
        "twice_area": twice_area(P),
        "boundary": boundary_count(P),
        "interior": interior_count(P),
    }
    counts["total"] = counts["boundary"] + counts["interior"]
    return RunReport("count", inputs={"polygon": _doc_json(doc)}, outputs=counts)


def cmd_triangulate(args) -> RunReport:
    doc, P = _single_polygon(_load_documents(args))
    T = triangulate_primitive(P)
    outputs = {
        "vertices": _verts(P),
        "triangle_count": len(T.triangles),
        "triangles": [[[v.x, v.y] for v in t.vertices] for t in T.triangles],
    }
    if args.svg:
        outputs["svg"] = emit_svg(T, path=args.svg)
    return RunReport("triangulate", inputs={"polygon": _doc_json(doc)}, outputs=outputs)


def cmd_sumset(args) -> RunReport:
    docs = _load_documents(args)
    polys = [convex_hull(d.points) for d in docs]
    inputs = {"polygons": [_doc_json(d) for d in docs]}
    if args.h is not None:
        if len(polys) != 1:
            raise ParseError("--h computes the h-fold sumset of exactly one polygon")
        inputs["h"] = args.h
        result = dilate(polys[0], args.h)
    else:
        if len(polys) < 2:
            raise ParseError("need two or more polygon blocks (or one block with --h)")
        result = polys[0]
        for Q in polys[1:]:
            result = minkowski_sum(result, Q)
    return RunReport(
        "sumset",
        inputs=inputs,
        outputs={"vertices": _verts(result), "twice_area": twice_area(result)},
    )


def cmd_decompose(args) -> RunReport:
    doc, P = _single_polygon(_load_documents(args))
    if args.point is None:
        raise ParseError("decompose needs --point <x,y>")
    h = args.h if args.h is not None else 1
    w = args.point
    T = triangulate_primitive(P) if P.dimension == 2 else None
    d = decompose(P, w, h, triangulation=T)
    ok, reason = verify_decomposition(d, P, w)
    outputs = {"point": [w[0], w[1]], "certificate": _cert_json(d), "verified": ok}
    if reason is not None:
        outputs["reason"] = reason
    if args.svg:
        if T is None:
            raise GeometryError("--svg needs a 2-dimensional polygon")
        outputs["svg"] = emit_svg(T, d, path=args.svg)
    return RunReport(
        "decompose",
        inputs={"polygon": _doc_json(doc), "point": [w[0], w[1]], "h": h},
        outputs=outputs,
    )


def _verify_one(P: LatticePolygon, h: int) -> dict:
    T = triangulate_primitive(P) if P.dimension == 2 else None
    certs = decompose_all(P, h, triangulation=T)
    base = enumerate_lattice_points(P)
    folded = frozenset(hfold_pointset(PointSet(base), h))
    dilated = enumerate_lattice_points(dilate(P, h))
    keys = frozenset(certs)
    equal = keys == dilated and folded == dilated
    bad = None
    for w, d in certs.items():
        ok, reason = verify_decomposition(d, P, w, lattice_points=base)
        if not ok:
            bad = {"point": [w.x, w.y], "reason": reason}
            break
    result = {
        "h": h,
        "points": len(dilated),
        "equal": equal,
        "certificates_ok": bad is None,
        "pass": equal and bad is None,
    }
    if not equal:
        witness = min((dilated | keys | folded) - (dilated & keys & folded))
        result["witness"] = [witness[0], witness[1]]
    if bad is not None:
        result["bad_certificate"] = bad
    return result


def cmd_verify_idp(args) -> RunReport:
    if args.input:
        doc, P = _single_polygon(_load_documents(args))
        h = args.h if args.h is not None else 2
        result = _verify_one(P, h)
        report = RunReport(
            "verify-idp", inputs={"polygon": _doc_json(doc), "h": h}, outputs=result
        )
        if not result["pass"]:
            report.exit_code = EXIT_INTERNAL
        return report
    # randomized sweep
    seed = args.seed if args.seed is not None else 0
    trials = args.trials
    max_coord = args.max_coord
    hmax = args.h if args.h is not None else 3
    rng = random.Random(seed)
    runs = []
    failures = 0
    for _ in range(trials):
        P = random_lattice_polygon(rng, max_coord=max_coord)
        T = triangulate_primitive(P)
        for h in range(1, hmax + 1):
            certs = decompose_all(P, h, triangulation=T)
            dilated = enumerate_lattice_points(dilate(P, h))
            ok = frozenset(certs) == dilated and all(
                verify_decomposition(d, P, w)[0] for w, d in certs.items()
            )
            if not ok:
                failures += 1
                runs.append({"polygon": _verts(P), "h": h, "pass": False})
    report = RunReport(
        "verify-idp",
        inputs={"seed": seed, "trials": trials, "max_coord": max_coord, "h_max": hmax},
        outputs={
            "checked": trials * hmax,
            "failures": failures,
            "pass": failures == 0,
            "failing_runs": runs,
        },
    )
    if failures:
        report.exit_code = EXIT_INTERNAL
    return report


def _plane_strictness_example() -> tuple[LatticePolygon, LatticePolygon]:
    P1 = convex_hull([(0, 0), (1, 0), (1, -1)])
    P2 = convex_hull([(0, 0), (1, 2), (2, 3)])
    return P1, P2


def cmd_counterexample(args) -> RunReport:
    if args.which == "plane":
        P1, P2 = _plane_strictness_example()
        hexagon = minkowski_sum(P1, P2)
        region_points = enumerate_lattice_points(hexagon)
        sums = pointset_sum(PointSet(enumerate_lattice_points(P1)), PointSet(enumerate_lattice_points(P2)))
        missing = sorted(region_points - frozenset(sums))
        confirmed = bool(missing)
        report = RunReport(
            "counterexample",
            inputs={"which": "plane", "triangles": [_verts(P1), _verts(P2)]},
            outputs={
                "sum_vertices": _verts(hexagon),
                "region_point_count": len(region_points),
                "pointset_sum_count": len(sums),
                "equal": not confirmed,
                "witness": [missing[0][0], missing[0][1]] if confirmed else None,
                "confirmed_strict": confirmed,
            },
        )
    else:
        h = args.h if args.h is not None else 2
        T = reeve_tetrahedron()
        equal, witness = check_idp_3d(T, h)
        base = enumerate_lattice_points_3d(T, 1)
        report = RunReport(
            "counterexample",
            inputs={"which": "space", "tetrahedron": [[v.x, v.y, v.z] for v in T.vertices], "h": h},
            outputs={
                "lattice_point_count": len(base),
                "sumset_count": len(hfold_pointset_3d(base, h)),
                "dilation_count": len(enumerate_lattice_points_3d(T, h)),
                "equal": equal,
                "witness": [witness.x, witness.y, witness.z] if witness else None,
                "confirmed_strict": not equal,
            },
        )
    if not report.outputs["confirmed_strict"]:
        report.exit_code = EXIT_INTERNAL
    return report


def _point_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}")
    try:
        return (int(parts[0], 10), int(parts[1], 10))
    except ValueError:
        raise argparse.ArgumentTypeError(f"coordinates must be integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latsum",
        description="Exact integer geometry for lattice polygons: hulls, Pick counts, "
        "Minkowski sumsets, primitive triangulations, and sumset decomposition certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, *, takes_input=True, takes_h=False, takes_svg=False):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        if takes_input:
            p.add_argument("--input", metavar="PATH", help="polygon document ('-' for stdin)")
        if takes_h:
            p.add_argument("--h", type=int, metavar="INT", help="fold/dilation factor")
        if takes_svg:
            p.add_argument("--svg", metavar="PATH", help="write an SVG figure here")
        return p

    add("hull", cmd_hull, "canonical convex hull of a point block")
    add("count", cmd_count, "doubled area, boundary and interior lattice-point counts")
    add("triangulate", cmd_triangulate, "primitive triangulation", takes_svg=True)
    add("sumset", cmd_sumset, "Minkowski sum of the blocks, or h-fold sumset with --h", takes_h=True)
    p_dec = add("decompose", cmd_decompose, "certificate for one point of the h-fold sumset",
                takes_h=True, takes_svg=True)
    p_dec.add_argument("--point", type=_point_arg, metavar="X,Y", help="lattice point of h*P")
    p_ver = add("verify-idp", cmd_verify_idp,
                "check h(P cap Z^2) = (hP) cap Z^2 with verified certificates", takes_h=True)
    p_ver.add_argument("--seed", type=int, metavar="INT", help="sweep seed (no --input)")
    p_ver.add_argument("--trials", type=int, default=20, metavar="INT", help="sweep size")
    p_ver.add_argument("--max-coord", type=int, default=8, metavar="INT",
                       help="sweep coordinate bound")
    p_ctr = add("counterexample", cmd_counterexample,
                "reproduce the strict-inclusion examples", takes_input=False, takes_h=True)
    p_ctr.add_argument("which", choices=("plane", "space"),
                       help="plane: two triangles whose point sums miss a sum point; "
                       "space: the Reeve tetrahedron at h=2")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except ParseError as e:
        report = RunReport(args.command, status="error",
                           error={"kind": "parse", "line": e.line, "message": str(e)},
                           exit_code=EXIT_PARSE)
    except GeometryError as e:
        report = RunReport(args.command, status="error",
                           error={"kind": "contract", "message": str(e)},
                           exit_code=EXIT_CONTRACT)
    except OSError as e:
        report = RunReport(args.command, status="error",
                           error={"kind": "io", "message": str(e)},
                           exit_code=EXIT_INTERNAL)
    print(report.to_json())
    return report.exit_code


def entry() -> None:
    sys.exit(main())
