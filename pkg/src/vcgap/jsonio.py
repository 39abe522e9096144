"""JSON (de)serialization. Rationals travel as strings, never floats."""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import InputError
from .fracchrom import DualWeights, FractionalColoring
from .gap import GapCertificate
from .graphs import Graph, vertex_set
from .vclp import HalfIntegralVC

SCHEMA_VERSION = 1
_RAT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def rat(q) -> str:
    return str(Fraction(q))


def parse_rat(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    m = _RAT.match(str(text)) if isinstance(text, str) else None
    if not m:
        raise InputError(f"malformed rational {text!r}; expected 'p/q' or an integer")
    if m.group(2) is not None and int(m.group(2)) == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


def cost_file_parse(text: str, n: int) -> tuple[Fraction, ...]:
    """One rational per non-blank line, exactly ``n`` of them, all nonnegative."""
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            values.append(parse_rat(line))
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    if len(values) != n:
        raise InputError(f"cost file has {len(values)} values for {n} vertices")
    for v, cv in enumerate(values):
        if cv < 0:
            raise InputError(f"negative cost {cv} for vertex {v}")
    return tuple(values)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj) -> Graph:
    try:
        return Graph.from_edges(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph object: {exc}") from None


def coloring_to_json(col: FractionalColoring) -> dict:
    return {
        "value": rat(col.value),
        "classes": [{"vertices": list(m), "weight": rat(w)} for m, w in col.classes],
    }


def coloring_from_json(obj) -> FractionalColoring:
    classes = tuple(
        (tuple(int(v) for v in c["vertices"]), parse_rat(c["weight"])) for c in obj["classes"]
    )
    return FractionalColoring(classes, parse_rat(obj["value"]))


def dual_to_json(dual: DualWeights) -> dict:
    return {"value": rat(dual.value), "z": [rat(v) for v in dual.z]}


def partition_to_json(x: HalfIntegralVC) -> dict:
    return {"v0": list(x.v0), "v_half": list(x.v_half), "v1": list(x.v1)}


def vc_to_json(x: HalfIntegralVC) -> dict:
    return {
        "x": [rat(v) for v in x.x],
        "objective": rat(x.objective),
        "partition": partition_to_json(x),
    }


def certificate_to_json(cert: GapCertificate, seed=None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "seed": seed,
        "graph": graph_to_json(cert.graph),
        "chi_f": rat(cert.chi_f),
        "rho": rat(cert.rho),
        "worst_cost": [rat(v) for v in cert.worst_cost],
        "lp_value": rat(cert.lp_value),
        "ip_value": rat(cert.ip_value),
        "ratio": rat(cert.achieved_ratio),
        "x_star": [rat(v) for v in cert.x_star.x],
        "partition": partition_to_json(cert.x_star),
        "h_coloring": coloring_to_json(cert.h_coloring),
        "covers": [{"vertices": list(m), "lambda": rat(lam)} for m, lam in cert.covers],
        "ip_cover": list(cert.ip_cover),
        "lp_dual": [rat(v) for v in cert.lp_dual],
    }


def certificate_from_json(obj) -> GapCertificate:
    """Rebuild a certificate as stated; nothing is re-derived or corrected here."""
    try:
        if obj.get("schema_version") != SCHEMA_VERSION:
            raise InputError(f"unsupported schema_version {obj.get('schema_version')!r}")
        g = graph_from_json(obj["graph"])

        def vs(items):
            members = [int(v) for v in items]
            out = vertex_set(members, g.n)
            if len(out) != len(members):
                raise InputError(f"repeated vertex in {members}")
            return out

        x = tuple(parse_rat(v) for v in obj["x_star"])
        p = obj["partition"]
        cost = tuple(parse_rat(v) for v in obj["worst_cost"])
        lp_value = parse_rat(obj["lp_value"])
        x_star = HalfIntegralVC(x, lp_value, vs(p["v0"]), vs(p["v_half"]), vs(p["v1"]))
        h = obj["h_coloring"]
        h_col = FractionalColoring(
            tuple((vs(c["vertices"]), parse_rat(c["weight"])) for c in h["classes"]),
            parse_rat(h["value"]),
        )
        covers = tuple((vs(c["vertices"]), parse_rat(c["lambda"])) for c in obj["covers"])
        return GapCertificate(
            graph=g,
            chi_f=parse_rat(obj["chi_f"]),
            rho=parse_rat(obj["rho"]),
            worst_cost=cost,
            lp_value=lp_value,
            ip_value=parse_rat(obj["ip_value"]),
            achieved_ratio=parse_rat(obj["ratio"]),
            x_star=x_star,
            h_coloring=h_col,
            covers=covers,
            ip_cover=vs(obj.get("ip_cover", [])),
            lp_dual=tuple(parse_rat(v) for v in obj.get("lp_dual", [])),
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise InputError(f"malformed certificate: missing or invalid field {exc}") from None
