"""Command-line entry point.

Exit codes: 0 success, 1 domain error (edgeless graph, size limit,
undefined ratio), 2 verification failure, 3 parse or configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import jsonio
from .corpus import standard_corpus
from .errors import DomainError, EdgelessGraphError, InputError, RatioUndefinedError
from .fracchrom import DEFAULT_ORACLE_LIMIT, chi_f_bruteforce, solve_chi_f
from .gap import (
    empirical_ratio,
    gap_from_chi_f,
    verify_certificate,
    worst_case_certificate,
)
from .graphs import FAMILIES, Graph, gen_family, parse_dimacs, to_dimacs
from .suite import run_suite
from .vclp import (
    DEFAULT_EXACT_LIMIT,
    check_costs,
    min_vc_exact,
    solve_vc_lp,
    solve_vc_lp_bipartite_double,
    unit_costs,
)

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_CONFIG = 0, 1, 2, 3
COMMANDS = ("chif", "vclp", "gap", "analyze", "verify", "generate", "proptest")


class ConfigError(InputError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    family: tuple[str, ...] | None = None
    mycielski: int = 0
    costs: str | None = None
    oracle: bool = False
    seed: int = 0
    limit_exact: int = DEFAULT_EXACT_LIMIT
    limit_oracle: int = DEFAULT_ORACLE_LIMIT
    output: str | None = None
    trials: int = 100
    jobs: int = 1

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.limit_exact <= 0 or self.limit_oracle <= 0:
            raise ConfigError("size limits must be positive")
        if self.input and self.family:
            raise ConfigError("give either --input or --family, not both")
        if self.trials < 0 or self.jobs < 1 or self.mycielski < 0:
            raise ConfigError("--trials, --jobs and --mycielski must be nonnegative (jobs >= 1)")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="DIMACS graph file (a certificate JSON for verify)")
    common.add_argument("--family", nargs="+", metavar="NAME P",
                        help=f"generate a graph: NAME in {', '.join(FAMILIES)} then parameters")
    common.add_argument("--mycielski", type=int, default=0,
                        help="apply the Mycielski construction this many times")
    common.add_argument("--costs", help="cost source: a file path, 'unit', or 'worst'")
    common.add_argument("--oracle", action="store_true",
                        help="add full-enumeration cross-checks")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--limit-exact", type=int, default=DEFAULT_EXACT_LIMIT)
    common.add_argument("--limit-oracle", type=int, default=DEFAULT_ORACLE_LIMIT)
    common.add_argument("--output", help="write the result here instead of stdout")

    parser = _Parser(prog="vcgap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("chif", parents=[common], help="fractional chromatic number")
    sub.add_parser("vclp", parents=[common], help="vertex cover LP (and IP) for one cost vector")
    sub.add_parser("gap", parents=[common], help="integrality gap 2 - 2/chi_f")
    sub.add_parser("analyze", parents=[common], help="emit the full gap certificate")
    sub.add_parser("verify", parents=[common], help="check a certificate")
    sub.add_parser("generate", parents=[common], help="write a generated graph as DIMACS")
    prop = sub.add_parser("proptest", parents=[common], help="seeded property sweep")
    prop.add_argument("--trials", type=int, default=100)
    prop.add_argument("--jobs", type=int, default=1)
    return parser


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        input=ns.input,
        family=tuple(ns.family) if ns.family else None,
        mycielski=ns.mycielski,
        costs=ns.costs,
        oracle=ns.oracle,
        seed=ns.seed,
        limit_exact=ns.limit_exact,
        limit_oracle=ns.limit_oracle,
        output=ns.output,
        trials=getattr(ns, "trials", 100),
        jobs=getattr(ns, "jobs", 1),
    )


# -- helpers ------------------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(cfg: RunConfig) -> tuple[str, Graph]:
    if cfg.family:
        name, *params = cfg.family
        try:
            g = gen_family(name, [int(p) for p in params])
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        label = " ".join(cfg.family)
    elif cfg.input:
        g = parse_dimacs(_read(cfg.input))
        label = os.path.basename(cfg.input)
    else:
        raise ConfigError("no graph given; use --input PATH or --family NAME P1 [P2]")
    if cfg.mycielski:
        g = gen_family("mycielskian_of", [cfg.mycielski], base=g)
        label = f"mycielskian^{cfg.mycielski}({label})"
    return label, g


def load_costs(cfg: RunConfig, g: Graph, default="unit"):
    source = cfg.costs or default
    if source == "unit":
        return unit_costs(g)
    if source == "worst":
        return solve_chi_f(g)[1].z
    return check_costs(g, jsonio.cost_file_parse(_read(source), g.n))


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(cfg: RunConfig, payload: dict) -> None:
    head = {"schema_version": jsonio.SCHEMA_VERSION, "command": cfg.command, "seed": cfg.seed}
    _emit(cfg, json.dumps({**head, **payload}, indent=2) + "\n")


# -- commands -----------------------------------------------------------------

def cmd_generate(cfg: RunConfig) -> int:
    label, g = load_graph(cfg)
    _emit(cfg, to_dimacs(g, comment=f"{label} (seed {cfg.seed})"))
    return EXIT_OK


def cmd_chif(cfg: RunConfig) -> int:
    label, g = load_graph(cfg)
    coloring, dual = solve_chi_f(g)
    payload = {
        "graph": label,
        "n": g.n,
        "m": g.m,
        "chi_f": jsonio.rat(coloring.value),
        "coloring": jsonio.coloring_to_json(coloring),
        "dual_weights": jsonio.dual_to_json(dual),
    }
    status = EXIT_OK
    if cfg.oracle:
        oracle_value = chi_f_bruteforce(g, limit=cfg.limit_oracle)[0].value
        payload["oracle_chi_f"] = jsonio.rat(oracle_value)
        if oracle_value != coloring.value:
            print(f"FAIL oracle_chi_f: enumeration gives {oracle_value}", file=sys.stderr)
            status = EXIT_VERIFY
    _emit_json(cfg, payload)
    return status


def cmd_vclp(cfg: RunConfig) -> int:
    label, g = load_graph(cfg)
    c = load_costs(cfg, g)
    x = solve_vc_lp(g, c)
    doubled = solve_vc_lp_bipartite_double(g, c)
    payload = {
        "graph": label,
        "costs": [jsonio.rat(v) for v in c],
        "lp": jsonio.vc_to_json(x),
        "min_cut_lp_objective": jsonio.rat(doubled.objective),
    }
    if g.n <= cfg.limit_exact:
        cover, ip = min_vc_exact(g, c, limit=cfg.limit_exact)
        payload["ip_value"] = jsonio.rat(ip)
        payload["ip_cover"] = list(cover)
    _emit_json(cfg, payload)
    if doubled.objective != x.objective:
        print(f"FAIL lp_paths_agree: simplex {x.objective}, min cut {doubled.objective}",
              file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gap(cfg: RunConfig) -> int:
    label, g = load_graph(cfg)
    if g.m == 0:
        raise EdgelessGraphError()
    chi_f = solve_chi_f(g)[0].value
    rho = gap_from_chi_f(chi_f)
    payload = {"graph": label, "chi_f": jsonio.rat(chi_f), "rho": jsonio.rat(rho)}
    if cfg.costs and cfg.costs != "worst":
        c = load_costs(cfg, g)
        try:
            payload["empirical_ratio"] = jsonio.rat(
                empirical_ratio(g, c, limit_exact=cfg.limit_exact))
        except RatioUndefinedError as exc:
            payload["empirical_ratio"] = None
            payload["ip_value"] = jsonio.rat(exc.ip_value)
    _emit_json(cfg, payload)
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    if cfg.costs not in (None, "worst"):
        raise ConfigError("analyze always uses the worst-case cost; drop --costs")
    _, g = load_graph(cfg)
    cert = worst_case_certificate(g, limit_exact=cfg.limit_exact)
    _emit(cfg, json.dumps(jsonio.certificate_to_json(cert, seed=cfg.seed), indent=2) + "\n")
    if cfg.oracle:
        report = verify_certificate(g, cert, oracle=True, oracle_limit=cfg.limit_oracle)
        for line in report.lines():
            print(line, file=sys.stderr)
        if not report.ok:
            return EXIT_VERIFY
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    if not cfg.input:
        raise ConfigError("verify needs --input CERTIFICATE.json")
    try:
        obj = json.loads(_read(cfg.input))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{cfg.input}: invalid JSON ({exc})") from None
    cert = jsonio.certificate_from_json(obj)
    report = verify_certificate(cert.graph, cert, oracle=cfg.oracle,
                                oracle_limit=cfg.limit_oracle)
    text = "\n".join(report.lines()) + "\n"
    if cfg.output:
        head = {"schema_version": jsonio.SCHEMA_VERSION, "command": "verify", "seed": cfg.seed}
        Path(cfg.output).write_text(json.dumps({**head, **report.to_json()}, indent=2) + "\n")
    sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_proptest(cfg: RunConfig) -> int:
    graphs = [load_graph(cfg)] if (cfg.input or cfg.family) else standard_corpus()
    results = run_suite(graphs, trials=cfg.trials, seed=cfg.seed,
                        limit_exact=cfg.limit_exact, limit_oracle=cfg.limit_oracle,
                        jobs=cfg.jobs)

    def opt(q: Fraction | None):
        return None if q is None else jsonio.rat(q)

    payload = {
        "trials_per_graph": cfg.trials,
        "graphs": [
            {
                "name": r.name, "n": r.n, "m": r.m,
                "chi_f": opt(r.chi_f), "rho": opt(r.rho),
                "trials": r.trials, "undefined_ratios": r.undefined_ratios,
                "max_ratio": opt(r.max_ratio), "violations": r.violations,
            }
            for r in results
        ],
        "violations": sum(len(r.violations) for r in results),
    }
    _emit_json(cfg, payload)
    return EXIT_VERIFY if payload["violations"] else EXIT_OK


HANDLERS = {
    "chif": cmd_chif,
    "vclp": cmd_vclp,
    "gap": cmd_gap,
    "analyze": cmd_analyze,
    "verify": cmd_verify,
    "generate": cmd_generate,
    "proptest": cmd_proptest,
}


def run(cfg: RunConfig) -> int:
    try:
        return HANDLERS[cfg.command](cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CONFIG
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
