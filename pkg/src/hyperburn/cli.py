"""``burn``: solve, simulate, generate and audit hypergraph burning instances.

Exit status is 0 on success, 1 on a domain error (bad instance, guard
exceeded, failed verification) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bounds as bnd
from .burning import DEFAULT_BURN_GUARD, burning_number_exact, run_schedule
from .core import (
    Hypergraph,
    HypergraphError,
    connected_components,
    effective_edge_count,
    read_hypergraph,
    serialize_hypergraph,
)
from .families import FAMILIES, FamilySpec
from .lazy import DEFAULT_LAZY_GUARD, is_lazy_burning_set, lazy_burning_number_exact


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _csv_labels(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_argument_group("instance")
    src.add_argument("--file", metavar="PATH", help="instance in the canonical text format")
    src.add_argument("--family", choices=FAMILIES, help="generate the instance from a family")
    src.add_argument("--k", type=int)
    src.add_argument("--n", type=int)
    src.add_argument("--m", type=int)
    src.add_argument("--sizes", type=_csv_ints, metavar="a,b,c")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--max-vertices", type=int, default=None,
        help=f"solver vertex guard (burning {DEFAULT_BURN_GUARD}, lazy {DEFAULT_LAZY_GUARD})",
    )
    common.add_argument("--max-depth", type=int, default=None, help="give up past this schedule length")

    p = _Parser(prog="burn", description="Burning and lazy burning of hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("solve", parents=[common], help="exact burning number with a witness schedule")
    sub.add_parser("lazy", parents=[common], help="exact lazy burning number with a witness set")
    sim = sub.add_parser("simulate", parents=[common], help="play a source schedule round by round")
    sim.add_argument("--sources", type=_csv_labels, required=True, metavar="LABELS")
    sub.add_parser("generate", parents=[common], help="print the instance in canonical form")
    b = sub.add_parser("bounds", parents=[common], help="inequality report")
    b.add_argument("--subset", type=_csv_labels, metavar="LABELS",
                   help="also compare the strong and weak subhypergraphs on these vertices")
    sub.add_parser("components", parents=[common], help="connected components")
    v = sub.add_parser("verify", parents=[common], help="audit a claimed value and witness")
    v.add_argument("--claim", type=int, required=True)
    v.add_argument("--sources", type=_csv_labels, required=True, metavar="LABELS")
    v.add_argument("--lazy", action="store_true", help="the witness is a lazy burning set")
    v.add_argument("--optimal", action="store_true",
                   help="also re-solve to confirm that the claim is the minimum")
    return p


def load_instance(args) -> Hypergraph:
    if (args.file is None) == (args.family is None):
        raise UsageError("give exactly one of --file or --family")
    if args.file is not None:
        if any(getattr(args, f) is not None for f in ("k", "n", "m", "sizes")):
            raise UsageError("--k/--n/--m/--sizes only apply with --family")
        try:
            return read_hypergraph(args.file)
        except OSError as exc:
            raise HypergraphError(f"cannot read {args.file}: {exc.strerror}") from None
    return FamilySpec(args.family, args.k, args.n, args.m, args.sizes).build()


def _threads() -> int:
    raw = os.environ.get("BURN_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"BURN_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"BURN_THREADS must be a positive integer, got {raw!r}")
    return value


def _guards(args) -> dict:
    if args.max_vertices is not None and args.max_vertices < 1:
        raise UsageError("--max-vertices must be positive")
    if args.max_depth is not None and args.max_depth < 1:
        raise UsageError("--max-depth must be positive")
    return {
        "burn": args.max_vertices or DEFAULT_BURN_GUARD,
        "lazy": args.max_vertices or DEFAULT_LAZY_GUARD,
    }


def _emit(out, args, text: str, payload) -> None:
    if args.format == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text)


def cmd_solve(H, args, out):
    g = _guards(args)
    res = burning_number_exact(H, max_vertices=g["burn"], max_depth=args.max_depth)
    labels = H.names(res.witness.sources)
    text = f"b = {res.value}\nwitness: {', '.join(labels)}\n"
    _emit(out, args, text, {"b": res.value, "witness": labels, "bounds": list(res.bounds_used)})


def cmd_lazy(H, args, out):
    g = _guards(args)
    res = lazy_burning_number_exact(H, max_vertices=g["lazy"])
    labels = H.names(res.witness)
    text = f"b_L = {res.value}\nwitness: {{{', '.join(labels)}}}\n"
    _emit(out, args, text, {"b_lazy": res.value, "witness": labels})


def cmd_simulate(H, args, out):
    sched = run_schedule(H, args.sources)
    rows = []
    prev = 0
    for state in sched.trace:
        r = state.round
        src = H.labels[sched.sources[r - 1]]
        new = [v for v, t in sorted(state.burn_round.items()) if t == r]
        rows.append({
            "round": r,
            "source": src,
            "redundant": r in sched.redundant_rounds,
            "ignited": H.names(new),
            "burned": len(state.burned),
        })
        prev = len(state.burned)
    payload = {
        "rounds": rows,
        "verdict": sched.verdict.value,
        "invalid_round": sched.invalid_round,
        "burned": prev,
        "n": H.n,
    }
    lines = ["round\tsource\tburned\tignited"]
    for row in rows:
        mark = "*" if row["redundant"] else ""
        lines.append(f"{row['round']}\t{row['source']}{mark}\t{row['burned']}/{H.n}\t{' '.join(row['ignited'])}")
    if sched.invalid_round is not None:
        bad = H.labels[sched.sources[sched.invalid_round - 1]]
        lines.append(f"{sched.invalid_round}\t{bad}\t-\talready burned")
    lines.append(f"verdict: {sched.describe(H)}")
    _emit(out, args, "\n".join(lines) + "\n", payload)


def cmd_generate(H, args, out):
    payload = {"labels": list(H.labels), "edges": [H.names(e) for e in H.edges]}
    _emit(out, args, serialize_hypergraph(H), payload)


def _key_values(prefix: str, d: dict) -> str:
    lines = []
    for k, v in d.items():
        v = ",".join(map(str, v)) if isinstance(v, (tuple, list)) else bnd.format_value(v)
        lines.append(f"{prefix}.{k}={v}\n")
    return "".join(lines)


def cmd_bounds(H, args, out):
    g = _guards(args)
    rep = bnd.bounds_report(H, max_vertices=g["burn"], lazy_max_vertices=g["lazy"])
    payload = {"bounds": rep.to_dict()}
    text = rep.to_text()
    if not rep.connected:
        comp = bnd.disconnected_composition_check(H, max_vertices=g["burn"])
        payload["composition"] = comp.to_dict()
        text += _key_values("composition", comp.to_dict())
    if args.subset:
        mono = bnd.subhypergraph_monotonicity_check(H, args.subset, max_vertices=g["burn"])
        payload["subset"] = mono.to_dict()
        text += _key_values("subset", mono.to_dict())
    _emit(out, args, text, payload)


def cmd_components(H, args, out):
    comps = connected_components(H)
    rows = [
        {"vertices": list(G.labels), "n": G.n, "edges": len(G.edges), "effective_edges": effective_edge_count(G)}
        for G in comps
    ]
    lines = [f"components = {len(comps)}"]
    for i, row in enumerate(rows, start=1):
        lines.append(f"{i}: n={row['n']} edges={row['edges']} {{{', '.join(row['vertices'])}}}")
    _emit(out, args, "\n".join(lines) + "\n", {"components": rows})


def cmd_verify(H, args, out):
    g = _guards(args)
    problems = []
    if len(args.sources) != args.claim:
        problems.append(f"witness has {len(args.sources)} vertices but the claim is {args.claim}")
    if args.lazy:
        if len(set(args.sources)) != len(args.sources):
            problems.append("witness repeats a vertex")
        if not is_lazy_burning_set(H, args.sources):
            problems.append("witness is not a lazy burning set")
    else:
        sched = run_schedule(H, args.sources)
        if not sched.is_complete:
            problems.append(f"witness is {sched.describe(H)}")
    optimal = None
    if args.optimal:
        if args.lazy:
            best = lazy_burning_number_exact(H, max_vertices=g["lazy"]).value
        else:
            best = burning_number_exact(H, max_vertices=g["burn"]).value
        optimal = best == args.claim
        if not optimal:
            problems.append(f"claim {args.claim} differs from the optimum {best}")
    ok = not problems
    kind = "b_L" if args.lazy else "b"
    lines = [f"claim: {kind} = {args.claim}", f"witness: {', '.join(args.sources)}"]
    lines += [f"problem: {p}" for p in problems]
    lines.append("verdict: " + ("verified" if ok else "rejected"))
    if ok and not args.optimal:
        lines.append("note: witness shows an upper bound; pass --optimal to check minimality")
    payload = {"kind": kind, "claim": args.claim, "witness": args.sources,
               "verified": ok, "optimal_checked": args.optimal, "problems": problems}
    _emit(out, args, "\n".join(lines) + "\n", payload)
    return 0 if ok else 1


COMMANDS = {
    "solve": cmd_solve,
    "lazy": cmd_lazy,
    "simulate": cmd_simulate,
    "generate": cmd_generate,
    "bounds": cmd_bounds,
    "components": cmd_components,
    "verify": cmd_verify,
}


def run_cli(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _threads()  # validated; the solvers run sequentially
        H = load_instance(args)
        return COMMANDS[args.command](H, args, out) or 0
    except UsageError as exc:
        err.write(f"burn: usage error: {exc}\n")
        return 2
    except HypergraphError as exc:
        err.write(f"burn: error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
