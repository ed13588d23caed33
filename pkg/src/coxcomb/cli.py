"""coxcomb command line.

    coxcomb group {snf,coker,hom,localize,exact,forget} -i doc.json
    coxcomb ring {build,trinomials,expand,check-homogeneous,presentation} -i doc.json
    coxcomb platonic -i doc.json
    coxcomb logterm -i doc.json
    coxcomb iterate -i doc.json

Reports go to stdout (or ``-o FILE``) as canonical JSON.  Exit codes:
0 success, 2 malformed input, 3 failed mathematical precondition,
4 theorem hypotheses not met.
"""
from __future__ import annotations

import argparse
import datetime as _dt
import logging
import sys

from . import __version__
from .abelian import (
    FgAbelianGroup,
    GroupHom,
    cokernel,
    exactness,
    forget_grading,
    hom_group,
    localize,
)
from .document import InputDocument, SchemaError, canonical_json, parse_document, to_int, to_rational
from .errors import CoxcombError, HypothesesNotMet
from .geometry import ComplexityOneData, ExceptionalPoint, presentation_u, star_condition_hint, to_ring_input
from .intmatrix import IntegerMatrix, smith_normal_form
from .iteration import (
    ExponentConfig,
    ExponentPoint,
    Fiber,
    RamificationProfile,
    Status,
    run,
    run_gcd_heuristic,
)
from .platonic import GeometryFlags, is_platonic_ring, log_terminal
from .ring import (
    ExponentData,
    ProjectivePoint,
    RingData,
    alpha,
    build,
    combination_polynomial,
    expand_in_generating_set,
    trinomial,
    trinomials,
    verify_homogeneous,
)

log = logging.getLogger("coxcomb")

EXIT_OK, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_HYPOTHESES = 0, 2, 3, 4

# Clause identifiers attached to verdicts, and the statements shown by --cite.
CLAUSES = {
    "platonic-tuple": (
        "a tuple is Platonic iff, sorted decreasingly, it starts with (5,3,2), (4,3,2), "
        "(3,3,2), (x,2,2) or (x,y,1) with x >= y >= 1 and all further entries are 1"
    ),
    "platonic-ring": (
        "R(A,P0) is Platonic iff r <= 1 or every tuple (l_0i0, ..., l_rir) is Platonic"
    ),
    "complexity-one-platonic-criterion": (
        "X almost homogeneous of complexity one with O(X)* = k*: the total coordinate "
        "space is log terminal iff Cox(X)^U is a Platonic ring"
    ),
    "spherical-rational-singularities": (
        "X spherical with O(X)* = k*: the total coordinate space is log terminal"
    ),
    "fano-type": (
        "X Q-factorial projective: X is of Fano type iff Cox(X) is finitely generated "
        "and the total coordinate space is log terminal"
    ),
    "trinomial-presentation": (
        "Cox(X)^U = R(A,P0) with A the coordinates of the exceptional points, exponent "
        "vectors the multiplicities over them and m the number of dominating divisors"
    ),
    "pullback-formula": (
        "over a point with fiber size l in a degree-d quotient, each fiber point gets "
        "exponent vector n_i/(d/l), entry i repeated m_i times"
    ),
    "u-descent": "u_n, the number of classes of non-primitive exponent vectors, never increases",
    "localization-sequence": (
        "removing divisors D_1..D_s: Cl(X minus D) = Cl(X) / <[D_1], ..., [D_s]>"
    ),
    "forgetful-sequence": (
        "with Pic(G) = 0, Cl(X) is the cokernel of the character map G^ -> Cl^G(X)"
    ),
}


class Report(dict):
    pass


# ---------------------------------------------------------------------------
# decoding
# ---------------------------------------------------------------------------

def decode_matrix(obj) -> IntegerMatrix:
    if isinstance(obj, dict):
        return IntegerMatrix(obj["rows"], obj["cols"], tuple(to_int(x) for x in obj["entries"]))
    if not obj:
        return IntegerMatrix(0, 0, ())
    widths = {len(r) for r in obj}
    if len(widths) != 1:
        raise SchemaError("matrix rows have different lengths")
    return IntegerMatrix.from_rows([[to_int(x) for x in r] for r in obj])


def decode_group(obj) -> FgAbelianGroup:
    if "presentation" in obj:
        return cokernel(decode_matrix(obj["presentation"]))
    return FgAbelianGroup.from_invariants(obj.get("free_rank", 0), [to_int(t) for t in obj.get("torsion", [])])


def decode_flags(obj) -> GeometryFlags:
    return GeometryFlags(**(obj or {}))


def decode_exponents(ring: dict) -> ExponentData:
    return ExponentData(
        tuple(tuple(to_int(x) for x in v) for v in ring["exponent_vectors"]), ring.get("m", 0)
    )


def decode_points(ring: dict) -> list[ProjectivePoint]:
    if "points" not in ring:
        raise SchemaError("ring section needs 'points' for this command")
    return [ProjectivePoint(to_rational(a), to_rational(b)) for a, b in ring["points"]]


def decode_complexity_one(ring: dict) -> ComplexityOneData:
    pts = decode_points(ring)
    vecs = decode_exponents(ring).vectors
    if len(pts) != len(vecs):
        raise SchemaError("ring section: points and exponent_vectors differ in length")
    return ComplexityOneData(
        tuple(ExceptionalPoint(p, v) for p, v in zip(pts, vecs)), ring.get("m", 0)
    )


def decode_ring(ring: dict) -> RingData:
    if ring.get("normalize"):
        A, exps = to_ring_input(decode_complexity_one(ring))
        return build(A, exps)
    return build(decode_points(ring), decode_exponents(ring))


def decode_config(doc: InputDocument) -> ExponentConfig:
    it = doc.section("iteration")
    if "config" not in it:
        ring = doc.section("ring", required=False)
        if ring is None:
            raise SchemaError("iteration needs a 'config' or a 'ring' section")
        return ExponentConfig.from_vectors(decode_exponents(ring).vectors)
    pts = []
    for i, entry in enumerate(it["config"]):
        if isinstance(entry, dict):
            pts.append(ExponentPoint(str(entry["class"]), tuple(to_int(x) for x in entry["vector"])))
        else:
            pts.append(ExponentPoint(f"x{i}", tuple(to_int(x) for x in entry)))
    return ExponentConfig(tuple(pts))


def decode_profile(obj) -> RamificationProfile:
    per = {}
    for f in obj.get("fibers", []):
        idx = f["point"]
        if idx in per:
            raise SchemaError(f"point {idx} listed twice in one profile")
        mult = f.get("multiplicities")
        per[idx] = Fiber(to_int(f["fiber_size"]), None if mult is None else tuple(to_int(x) for x in mult))
    return RamificationProfile(to_int(obj["degree"]), per)


# ---------------------------------------------------------------------------
# payload helpers
# ---------------------------------------------------------------------------

def group_payload(G: FgAbelianGroup) -> dict:
    return {
        "free_rank": G.free_rank,
        "invariant_factors": list(G.invariant_factors),
        "order": G.order,
        "description": str(G),
    }


def _groups(doc: InputDocument, count: int) -> list[FgAbelianGroup]:
    groups = doc.section("group").get("groups", [])
    if len(groups) < count:
        raise SchemaError(f"group section needs at least {count} entries in 'groups'")
    return [decode_group(g) for g in groups[:count]]


def _maps(doc: InputDocument, count: int) -> list[IntegerMatrix]:
    maps = doc.section("group").get("maps", [])
    if len(maps) < count:
        raise SchemaError(f"group section needs at least {count} entries in 'maps'")
    return [decode_matrix(m) for m in maps[:count]]


def _hom_matrix(M: IntegerMatrix, source: FgAbelianGroup, target: FgAbelianGroup) -> IntegerMatrix:
    # an empty JSON list cannot carry a shape; read it as the zero map
    if M.shape == (0, 0):
        return IntegerMatrix.zeros(target.ambient_rank, source.ambient_rank)
    return M


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_group(sub: str, doc: InputDocument) -> tuple[dict, list[str]]:
    if sub == "snf":
        M = decode_matrix(doc.section("matrix"))
        snf = smith_normal_form(M)
        return {
            "diagonal": list(snf.diagonal),
            "D": snf.D.to_rows(),
            "U": snf.U.to_rows(),
            "V": snf.V.to_rows(),
            "shape": list(M.shape),
        }, []
    if sub == "coker":
        return group_payload(cokernel(decode_matrix(doc.section("matrix")))), []
    if sub == "hom":
        A, B = _groups(doc, 2)
        return {"source": group_payload(A), "target": group_payload(B), "hom": group_payload(hom_group(A, B))}, []
    if sub == "localize":
        (Cl,) = _groups(doc, 1)
        classes = [[to_int(x) for x in v] for v in doc.section("group").get("classes", [])]
        return {"group": group_payload(Cl), "localized": group_payload(localize(Cl, classes))}, [
            "localization-sequence"
        ]
    if sub == "exact":
        A, B, C = _groups(doc, 3)
        fm, gm = _maps(doc, 2)
        f = GroupHom(A, B, _hom_matrix(fm, A, B))
        g = GroupHom(B, C, _hom_matrix(gm, B, C))
        return exactness(f, g), []
    if sub == "forget":
        ClG, Ghat = _groups(doc, 2)
        (gm,) = _maps(doc, 1)
        gamma = GroupHom(Ghat, ClG, _hom_matrix(gm, Ghat, ClG))
        return {"ClG": group_payload(ClG), "Cl": group_payload(forget_grading(ClG, gamma))}, [
            "forgetful-sequence"
        ]
    raise SchemaError(f"unknown group subcommand {sub!r}")


def ring_payload(ring: RingData) -> dict:
    names = ring.variables
    r = ring.r
    return {
        "A": [list(p.coords) for p in ring.A],
        "r": r,
        "n": ring.exponents.n,
        "m": ring.exponents.m,
        "exponent_vectors": [list(v) for v in ring.exponents.vectors],
        "alpha": [[alpha(ring, i, j) for j in range(r + 1)] for i in range(r + 1)],
        "P0": ring.P0.to_rows(),
        "K0": group_payload(ring.K0),
        "variables": names,
        "degrees": {
            name: {"ambient": list(ring.degrees[name]), "class": list(ring.K0.coordinates(ring.degrees[name]))}
            for name in names
        },
        "trinomials": [
            {"triple": list(t.index), "polynomial": t.polynomial.render(names)} for t in trinomials(ring)
        ],
    }


def _selected_triples(ring: RingData, section: dict) -> list[tuple[int, int, int]]:
    if "triples" in section:
        return [tuple(t) for t in section["triples"]]
    return ring.triples()


def cmd_ring(sub: str, doc: InputDocument) -> tuple[dict, list[str]]:
    section = doc.section("ring")
    if sub == "presentation":
        data = decode_complexity_one(section)
        pres = presentation_u(data)
        flags = doc.section("flags", required=False)
        return {
            "generators": list(pres.generators),
            "relations": [
                {
                    "point": rel.point,
                    "coords": [rel.alpha, rel.beta],
                    "character": rel.character,
                    "exponents": list(rel.exponents),
                    "text": rel.render(),
                }
                for rel in pres.relations
            ],
            "grading": pres.grading,
            "caveat": pres.caveat,
            "star_condition": None if flags is None else star_condition_hint(decode_flags(flags)),
        }, ["trinomial-presentation"]
    ring = decode_ring(section)
    names = ring.variables
    if sub == "build":
        return ring_payload(ring), ["trinomial-presentation"]
    if sub == "trinomials":
        triples = _selected_triples(ring, section) if ring.r >= 2 else []
        return {
            "r": ring.r,
            "trinomials": [
                {"triple": list(I), "polynomial": trinomial(ring, I).polynomial.render(names)}
                for I in triples
            ],
        }, []
    if sub == "expand":
        out = []
        for I in (_selected_triples(ring, section) if ring.r >= 2 else []):
            combo = expand_in_generating_set(ring, I)
            ok = combination_polynomial(ring, combo) == trinomial(ring, I).polynomial
            out.append({
                "triple": list(I),
                "combination": {f"g(0,1,{t})": c for t, c in combo.items()},
                "verified": ok,
            })
        generators = [[0, 1, t] for t in range(2, ring.r + 1)]
        return {"r": ring.r, "generators": generators, "expansions": out}, []
    if sub == "check-homogeneous":
        return {"homogeneous": verify_homogeneous(ring), "r": ring.r}, []
    raise SchemaError(f"unknown ring subcommand {sub!r}")


def cmd_platonic(doc: InputDocument) -> tuple[dict, list[str]]:
    exps = decode_exponents(doc.section("ring"))
    v = is_platonic_ring(exps)
    return {
        "platonic": v.platonic,
        "witness": None if v.witness is None else list(v.witness),
        "r": exps.r,
    }, ["platonic-ring", "platonic-tuple"]


def cmd_logterm(doc: InputDocument) -> tuple[dict, list[str]]:
    flags = decode_flags(doc.section("flags"))
    ring = doc.section("ring", required=False)
    exps = None if flags.spherical or ring is None else decode_exponents(ring)
    rep = log_terminal(exps, flags)
    cites = [rep.clause]
    if rep.fano_type is not None:
        cites.append("fano-type")
    return {
        "verdict": rep.verdict,
        "basis": rep.basis,
        "fano_type": rep.fano_type,
        "witness": None if rep.witness is None else list(rep.witness),
    }, cites


def cmd_iterate(doc: InputDocument) -> tuple[dict, list[str], int]:
    it = doc.section("iteration")
    config = decode_config(doc)
    max_steps = it.get("max_steps")
    if it.get("heuristic_gcd"):
        trace = run_gcd_heuristic(config, max_steps)
    else:
        trace = run(config, [decode_profile(p) for p in it.get("profiles", [])], max_steps)
    payload = {
        "heuristic_gcd": bool(it.get("heuristic_gcd", False)),
        "u_sequence": trace.u_sequence,
        "status": trace.status,
        "error": trace.error,
        "configs": [
            [{"class": p.class_id, "vector": list(p.vector)} for p in c.points] for c in trace.configs
        ],
    }
    code = EXIT_PRECONDITION if trace.status is Status.INVALID_PROFILE else EXIT_OK
    return payload, ["pullback-formula", "u-descent"], code


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxcomb", description="Cox ring invariants of complexity-one varieties")
    p.add_argument("--version", action="version", version=f"coxcomb {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", required=True, help="input JSON document ('-' for stdin)")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("--cite", action="store_true", help="include clause statements in the report")
    common.add_argument("--meta", action="store_true", help="add a timestamp/version block outside the payload")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("group", parents=[common], help="abelian group computations")
    g.add_argument("sub", choices=["snf", "coker", "hom", "localize", "exact", "forget"])
    r = sub.add_parser("ring", parents=[common], help="the trinomial algebra R(A,P0)")
    r.add_argument("sub", choices=["build", "trinomials", "expand", "check-homogeneous", "presentation"])
    sub.add_parser("platonic", parents=[common], help="Platonic ring test")
    sub.add_parser("logterm", parents=[common], help="log-terminality verdict")
    sub.add_parser("iterate", parents=[common], help="exponent-vector iteration")
    return p


def _dispatch(args, doc: InputDocument) -> tuple[dict, list[str], int]:
    if args.command == "group":
        return (*cmd_group(args.sub, doc), EXIT_OK)
    if args.command == "ring":
        return (*cmd_ring(args.sub, doc), EXIT_OK)
    if args.command == "platonic":
        return (*cmd_platonic(doc), EXIT_OK)
    if args.command == "logterm":
        return (*cmd_logterm(doc), EXIT_OK)
    return cmd_iterate(doc)


def execute(args) -> tuple[Report, int]:
    command = args.command + (f" {args.sub}" if getattr(args, "sub", None) else "")
    report = Report(command=command)
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse_document(text)
        payload, cites, code = _dispatch(args, doc)
        report["result"] = payload
        report["citations"] = cites
    except OSError as exc:
        code = EXIT_SCHEMA
        report["error"] = {"type": "InputError", "message": str(exc)}
    except SchemaError as exc:
        code = EXIT_SCHEMA
        report["error"] = {"type": "SchemaError", "message": str(exc)}
    except HypothesesNotMet as exc:
        code = EXIT_HYPOTHESES
        report["error"] = {"type": "HypothesesNotMet", "message": str(exc)}
    except (CoxcombError, ValueError) as exc:
        code = EXIT_PRECONDITION
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
    if args.cite:
        report["anchors"] = {c: CLAUSES[c] for c in report.get("citations", [])}
    report["exit_code"] = code
    return report, code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    report, code = execute(args)
    out: dict = dict(report)
    if args.meta:
        out["meta"] = {
            "generated_at": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
            "version": __version__,
        }
    text = canonical_json(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def run_cli():  # pragma: no cover - console entry point
    sys.exit(main())
