"""Command-line interface: ``scan``, ``construct`` and ``analyze``.

Reports go to stdout, diagnostics to stderr.  Output is deterministic for a
given command line and seed; floats carry 12 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import drg, families, hamilton, spectral, srg_core
from .errors import SrgError
from .graph import EdgeListError, Graph, read_edge_list, write_edge_list
from .surd import Surd

EXIT_OK, EXIT_USAGE, EXIT_CONSTRUCTION = 0, 2, 3

SCAN_COLUMNS = (
    ["v", "k", "lambda", "mu", "r", "s", "f", "g", "class", "class_params", "primitive", "Lambda", "k_over_Lambda"]
    + list(srg_core.BOUND_NAMES)
)

CHECKS = ("spectrum", "bounds", "hamilton", "toughness", "drg", "merged", "ks")


@dataclass
class RunConfig:
    command: str
    format: str = "table"
    seed: int = 0
    threads: int = 1
    out: str | None = None
    args: dict = field(default_factory=dict)


def fmt_float(x: float) -> str:
    return format(float(x), ".12g")


def jnum(x):
    """JSON-ready value: exact numbers as strings, floats rounded to 12 digits."""
    if x is None or isinstance(x, bool):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, (Fraction, Surd)):
        if isinstance(x, Surd) and x.is_integer:
            return int(x)
        if isinstance(x, Fraction) and x.denominator == 1:
            return int(x)
        return str(x)
    x = float(x)
    if not math.isfinite(x):
        return None
    return float(fmt_float(x))


def _jsonify(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    if isinstance(obj, str):
        return obj
    return jnum(obj)


def dump_json(obj) -> str:
    return json.dumps(_jsonify(obj), sort_keys=True)


# -- scan ---------------------------------------------------------------------


def scan_row(rec: srg_core.ScanRecord) -> dict:
    p, spec, cls, bounds = rec
    lam = spec.Lambda
    tag_fields = getattr(cls.tag, "__dataclass_fields__", {})
    return {
        "v": p.v,
        "k": p.k,
        "lambda": p.lam,
        "mu": p.mu,
        "r": str(spec.r),
        "s": str(spec.s),
        "f": spec.f,
        "g": spec.g,
        "class": cls.name,
        "class_params": " ".join(f"{f}={getattr(cls.tag, f)}" for f in tag_fields),
        "primitive": cls.primitive,
        "Lambda": fmt_float(lam),
        "k_over_Lambda": fmt_float(p.k / lam) if lam != 0 else "inf",
        **bounds.statuses(),
    }


def cmd_scan(cfg: RunConfig, out) -> int:
    v_max = cfg.args["vmax"]
    rows = (scan_row(r) for r in srg_core.enumerate_feasible(v_max, workers=cfg.threads)) if v_max >= 3 else iter(())
    if cfg.format == "csv":
        w = csv.DictWriter(out, fieldnames=SCAN_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})
    elif cfg.format == "json":
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
    else:
        cols = ["v", "k", "lambda", "mu", "r", "s", "f", "g", "class", "Lambda", "k_over_Lambda"]
        out.write("  ".join(f"{c:>14}" if i >= 9 else f"{c:>6}" if i < 8 else f"{c:>20}" for i, c in enumerate(cols)) + "  violations\n")
        for row in rows:
            bad = [n for n in srg_core.BOUND_NAMES if row[n] == "fail"]
            cells = [f"{str(row[c]):>14}" if i >= 9 else f"{str(row[c]):>6}" if i < 8 else f"{row[c]:>20}"
                     for i, c in enumerate(cols)]
            out.write("  ".join(cells) + "  " + (",".join(bad) or "-") + "\n")
    return EXIT_OK


# -- construct ----------------------------------------------------------------


FAMILIES = {
    "multipartite": (2, lambda a: families.complete_multipartite(a[0], a[1])),
    "latin": (2, lambda a: families.latin_square_graph(a[0], a[1])),
    "steiner-triple": (1, lambda a: families.steiner_block_graph(families.steiner_triple_system(a[0]))),
    "affine": (1, lambda a: families.steiner_block_graph(families.affine_plane_system(a[0]))),
    "paley": (1, lambda a: families.paley(a[0])),
    "triangular": (1, lambda a: families.triangular(a[0])),
    "petersen": (0, lambda a: families.petersen()),
    "johnson": (2, lambda a: families.johnson(a[0], a[1])),
    "hamming": (2, lambda a: families.hamming(a[0], a[1])),
}


def describe_graph(g: Graph) -> dict:
    info = {"v": g.v, "edges": g.n_edges, "regular_degree": g.regular_degree(), "connected": g.is_connected()}
    try:
        p = families.srg_params_of(g)
    except SrgError as exc:
        info["srg"] = None
        info["srg_note"] = f"{type(exc).__name__}: {exc}"
    else:
        info["srg"] = list(p)
        info["class"] = str(srg_core.classify_params(p))
    if info["connected"]:
        try:
            cert = drg.is_distance_regular(g)
        except SrgError as exc:
            info["drg"] = None
            info["drg_note"] = f"{type(exc).__name__}: {exc}"
        else:
            b, c = cert.intersection_array
            info["drg"] = {"diameter": cert.diameter, "b": list(b), "c": list(c)}
    return info


def _print_mapping(info: dict, out, fmt: str) -> None:
    if fmt == "json":
        out.write(dump_json(info) + "\n")
        return
    for key, value in info.items():
        if isinstance(value, (dict, list)):
            value = dump_json(value)
        out.write(f"{key}: {value}\n")


def cmd_construct(cfg: RunConfig, out, err) -> int:
    family, raw = cfg.args["family"], cfg.args["params"]
    arity, build = FAMILIES[family]
    if len(raw) != arity:
        err.write(f"error: {family} takes {arity} integer argument(s), got {len(raw)}\n")
        return EXIT_USAGE
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            g = build(raw)
    except SrgError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_CONSTRUCTION
    for w in caught:
        err.write(f"warning: {w.message}\n")
    if cfg.out:
        write_edge_list(g, cfg.out)
    info = {"family": family, "args": list(raw), **describe_graph(g)}
    if caught:
        info["degenerate"] = True
    _print_mapping(info, out, cfg.format if cfg.format == "json" else "table")
    return EXIT_OK


# -- analyze ------------------------------------------------------------------


def _parse_checks(text: str) -> list[tuple[str, frozenset[int] | None]]:
    out = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        name, _, arg = item.partition(":")
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}")
        if name == "merged":
            if not arg:
                raise ValueError("merged needs a distance set, e.g. merged:2 or merged:1+3")
            out.append((name, frozenset(int(x) for x in arg.split("+"))))
        elif arg:
            raise ValueError(f"check {name!r} takes no argument")
        else:
            out.append((name, None))
    if not out:
        raise ValueError("no checks requested")
    return out


def _inapplicable(exc: Exception) -> dict:
    return {"status": "inapplicable", "note": f"{type(exc).__name__}: {exc}"}


def section_spectrum(g: Graph, ctx: dict) -> dict:
    spec = spectral.spectrum(g)
    snap = ()
    if ctx.get("srg_spectrum"):
        s = ctx["srg_spectrum"]
        snap = (float(s.k), float(s.r), float(s.s))
    clusters = spectral.eigen_multiplicities(spec, snap=snap)
    return {
        "status": "ok",
        "eigenvalues": list(spec.eigenvalues),
        "clusters": [{"value": x, "multiplicity": t} for x, t in clusters],
        "Lambda": spectral.second_eigenvalue(g, spec),
        "trace": spec.trace,
        "trace_of_square": spec.trace_of_square,
    }


def section_bounds(g: Graph, ctx: dict) -> dict:
    p = ctx.get("params")
    if p is None:
        return {"status": "inapplicable", "note": ctx.get("srg_note", "not strongly regular")}
    rep = srg_core.bound_suite(p, ctx["srg_spectrum"], ctx["class"])
    gap = spectral.multiplicity_gap_bound(g)
    return {
        "status": "ok",
        "params": list(p),
        "class": str(ctx["class"]),
        "entries": [
            {"name": e.name, "statement": e.statement, "lhs": e.lhs, "rhs": e.rhs, "status": e.status}
            for e in rep.entries
        ],
        "multiplicity_gap": {"t_min": gap.t_min, "bound": gap.bound, "Lambda": gap.Lambda, "holds": gap.holds},
    }


def section_hamilton(g: Graph, ctx: dict) -> dict:
    res = hamilton.find_hamiltonian(g, ctx["budget"])
    cert = list(res.certificate.order) if res.certificate else None
    return {
        "status": "ok",
        "verdict": res.verdict.value,
        "certificate": cert,
        "verified": hamilton.verify_cycle(g, res.certificate) if res.certificate else None,
        "nodes": res.nodes,
        "method": res.method,
    }


def section_toughness(g: Graph, ctx: dict) -> dict:
    lower = hamilton.toughness_lower_bound(g)
    out = {"status": "ok", "lower_bound": lower, "exact": None, "exact_float": None, "consistent": None}
    if g.v <= hamilton.TOUGHNESS_MAX_V:
        t = hamilton.toughness_exact(g)
        out.update(exact=str(t), exact_float=float(t), consistent=float(t) > lower - 1e-9)
    else:
        out["note"] = f"exact toughness only for v <= {hamilton.TOUGHNESS_MAX_V}"
    return out


def section_drg(g: Graph, ctx: dict) -> dict:
    cert = drg.is_distance_regular(g)
    b, c = cert.intersection_array
    out = {"status": "ok", "diameter": cert.diameter, "intersection_array": {"b": list(b), "c": list(c)},
           "valencies": list(cert.valencies)}
    try:
        out["godsil"] = {"status": "ok", **drg.godsil_bound_check(g, cert)}
    except SrgError as exc:
        out["godsil"] = _inapplicable(exc)
    return out


def section_merged(g: Graph, ctx: dict, R: frozenset[int]) -> dict:
    part = drg.distance_partition(g)
    if part.diameter == 2 and R in ({2}, {1, 2}):
        what = "the complement" if R == {2} else "the complete graph"
        return {"status": "inapplicable", "merge_set": sorted(R),
                "note": f"on a diameter-2 graph this merge is trivially {what}"}
    report = drg.merged_gap_bound_check(g, R)
    m = drg.merged_graph(g, R, part)
    report["commutes"] = drg.commutation_merge_check(g, m)
    report["coarsening"] = drg.eigenspace_refinement(g, m).coarsening
    return {"status": "ok", **report}


def section_ks(g: Graph, ctx: dict) -> dict:
    return {**hamilton.ks_verdict(g), "status": "ok"}


SECTIONS = {
    "spectrum": section_spectrum,
    "bounds": section_bounds,
    "hamilton": section_hamilton,
    "toughness": section_toughness,
    "drg": section_drg,
    "ks": section_ks,
}


def analyze_graph(g: Graph, checks, budget: hamilton.SearchBudget) -> dict:
    ctx: dict = {"budget": budget}
    info = describe_graph(g) if g.v <= 2000 else {"v": g.v, "edges": g.n_edges}
    if info.get("srg"):
        p = srg_core.SrgParams(*info["srg"])
        ctx["params"] = p
        ctx["srg_spectrum"] = srg_core.spectrum_from_params(p)
        ctx["class"] = srg_core.classify_params(p, ctx["srg_spectrum"])
    else:
        ctx["srg_note"] = info.get("srg_note", "not strongly regular")
    sections = {}
    for name, arg in checks:
        key = name if arg is None else f"{name}:{'+'.join(map(str, sorted(arg)))}"
        try:
            sections[key] = section_merged(g, ctx, arg) if name == "merged" else SECTIONS[name](g, ctx)
        except SrgError as exc:
            sections[key] = _inapplicable(exc)
        except ValueError as exc:
            sections[key] = {"status": "inapplicable", "note": str(exc)}
    return {"graph": info, "sections": sections}


def cmd_analyze(cfg: RunConfig, out, err) -> int:
    try:
        checks = _parse_checks(cfg.args["checks"])
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    try:
        g = read_edge_list(cfg.args["graph"])
    except (OSError, EdgeListError, UnicodeDecodeError) as exc:
        err.write(f"error: cannot read graph: {exc}\n")
        return EXIT_USAGE
    budget = hamilton.SearchBudget(cfg.args["node_limit"], cfg.args["time_limit"], cfg.seed)
    report = analyze_graph(g, checks, budget)
    out.write(dump_json(report) + "\n")
    return EXIT_OK


# -- entry point --------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _vmax(text: str) -> int:
    value = int(text)
    if not 0 <= value <= srg_core.MAX_SCAN:
        raise argparse.ArgumentTypeError(f"must lie in 0..{srg_core.MAX_SCAN}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srg-spectra", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=_positive_int, default=None,
                        help="worker processes for scans (default: $SRG_SPECTRA_THREADS or 1)")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("table", "csv", "json"), default="table")
    parser.add_argument("--out", default=None, help="output path (scan report or constructed edge list)")
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="enumerate feasible parameter sets")
    scan.add_argument("--vmax", type=_vmax, required=True)
    for p in (scan,):
        p.add_argument("--format", choices=("table", "csv", "json"), default=argparse.SUPPRESS)
        p.add_argument("--out", default=argparse.SUPPRESS)

    con = sub.add_parser("construct", help="build a family graph and verify its parameters")
    con.add_argument("family", choices=sorted(FAMILIES))
    con.add_argument("params", nargs="*", type=int)
    con.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    con.add_argument("--out", default=argparse.SUPPRESS)

    ana = sub.add_parser("analyze", help="spectral, hamiltonicity and DRG checks on an edge-list file")
    ana.add_argument("graph")
    ana.add_argument("--checks", default="spectrum,bounds")
    ana.add_argument("--node-limit", type=_positive_int, default=1_000_000)
    ana.add_argument("--time-limit", type=float, default=30.0)
    ana.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return parser


def _threads(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("SRG_SPECTRA_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(ns.command, ns.format, ns.seed, _threads(ns.threads), ns.out,
                    {k: v for k, v in vars(ns).items() if k not in {"command", "format", "seed", "threads", "out"}})
    if cfg.command == "scan":
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
                return cmd_scan(cfg, fh)
        return cmd_scan(cfg, stdout)
    if cfg.command == "construct":
        return cmd_construct(cfg, stdout, stderr)
    return cmd_analyze(cfg, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
