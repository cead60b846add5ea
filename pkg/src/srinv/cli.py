"""Command line interface: invariants, Betti tables, homology, constructions, sweeps."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complexes import SimplicialComplex, complex_from_json_dict, complex_from_text
from .errors import DomainError, InputError, ResourceLimitError
from .graphs import Graph, graph_from_json_dict, graph_from_text, independence_complex
from .harness import (
    construct,
    sweep,
    verify_dimension_bound,
    verify_type_via_covers,
    verify_whiskered_multipartite,
)
from .homology import FieldSpec, reduced_homology_ranks
from .invariants import betti_table, invariant_report


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_complex(path: str) -> SimplicialComplex:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return complex_from_json_dict(json.loads(text))
    return complex_from_text(text)


def _load_graph(path: str) -> Graph:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return graph_from_json_dict(json.loads(text))
    return graph_from_text(text)


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="FILE", help="graph file (text or JSON)")
    group.add_argument("--complex", metavar="FILE", help="complex file (text or JSON)")
    parser.add_argument("--char", type=int, default=2, metavar="P", help="field characteristic (default 2)")


def _input_complex(args) -> SimplicialComplex:
    if args.graph:
        return independence_complex(_load_graph(args.graph))
    return _load_complex(args.complex)


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise InputError(f"bad {what} list {text!r}") from exc


def _cmd_invariants(args) -> int:
    cx = _input_complex(args)
    rep = invariant_report(cx, FieldSpec(args.char))
    if args.json:
        print(json.dumps(rep.to_json_dict(), indent=2))
        return 0
    print(f"vertices={cx.n} dim={rep.dim} krull_dim={rep.krull_dim} field=GF({rep.field_char})")
    print(f"cohen_macaulay: reisner={_yn(rep.is_cm_reisner)} betti={_yn(rep.is_cm_betti)}")
    print(f"reg={rep.reg} pd={rep.pd}")
    print(f"cm_type={_opt(rep.cm_type)} a_invariant={_opt(rep.a_invariant)} core={_yn(rep.is_core)}")
    return 0


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _opt(value) -> str:
    return "-" if value is None else str(value)


def _cmd_betti(args) -> int:
    cx = _input_complex(args)
    table = betti_table(cx, FieldSpec(args.char))
    if args.json:
        print(json.dumps(table.to_json_dict(), indent=2))
        return 0
    pd = table.projective_dimension
    shifts = sorted({j - i for i, j in table.entries})
    print(f"Betti table over GF({args.char}): n={table.n}, pd={pd}, reg={table.regularity}")
    header = "  shift \\ i |" + "".join(f"{i:>6}" for i in range(pd + 1))
    print(header)
    print("  " + "-" * (len(header) - 2))
    for s in shifts:
        cells = []
        for i in range(pd + 1):
            v = table.beta(i, i + s)
            cells.append(f"{v:>6}" if v else f"{'.':>6}")
        print(f"{s:>11} |" + "".join(cells))
    flat = " ".join(f"beta[{i},{j}]={v}" for (i, j), v in sorted(table.entries.items()))
    print(f"  (total-degree entries: {flat})")
    return 0


def _cmd_homology(args) -> int:
    cx = _input_complex(args)
    ranks = reduced_homology_ranks(cx, FieldSpec(args.char))
    payload = {
        "field_char": args.char,
        "ranks": {str(deg): r for deg, r in ranks.as_dict().items()},
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_construct(args) -> int:
    cert = construct(args.d, args.r, args.t, FieldSpec(args.char))
    rep = cert.invariants
    print(
        f"construct d={args.d} r={args.r} t={args.t}: base parts {cert.base_parts}, "
        f"{len(cert.suspensions)} suspension(s), graph on {cert.graph.n} vertices"
    )
    print(
        f"computed: dim={rep.dim} reg={rep.reg} type={_opt(rep.cm_type)} "
        f"cm={_yn(rep.is_cm)} over GF({rep.field_char})"
    )
    for note in cert.problems:
        print(f"problem: {note}", file=sys.stderr)
    print(f"claims met: {_yn(cert.claims_met)}")
    if args.out:
        Path(args.out).write_text(json.dumps(cert.to_json_dict(), indent=2) + "\n")
        print(f"certificate written to {args.out}")
    return 0 if cert.claims_met else 1


def _cmd_verify_prop41(args) -> int:
    parts = _parse_int_list(args.parts, "parts")
    report = verify_whiskered_multipartite(parts, FieldSpec(args.char))
    rep = report.computed
    print(
        f"whiskered multipartite {parts}: expected dim={report.expected_dim} "
        f"reg={report.expected_reg} type={report.expected_type}"
    )
    print(
        f"computed: dim={rep.dim} reg={rep.reg} type={_opt(rep.cm_type)} "
        f"induced_matching={report.induced_matching} cm={_yn(rep.is_cm)}"
    )
    print("OK" if report.ok else "FAILED")
    return 0 if report.ok else 1


def _cmd_verify_prop44(args) -> int:
    g = _load_graph(args.graph)
    cover = _parse_int_list(args.cover, "cover") if args.cover else None
    independent = _parse_int_list(args.independent, "independent") if args.independent else None
    report = verify_type_via_covers(g, cover, independent, FieldSpec(args.char))
    print(f"type from Betti table: {report.cm_type}")
    print(f"minimal covers of the folded graph on the cover side: {report.cover_count}")
    print("OK" if report.ok else "FAILED")
    return 0 if report.ok else 1


def _cmd_sweep(args) -> int:
    report = sweep(args.max_n, FieldSpec(args.char), seed=args.seed, samples_per_size=args.samples)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(
            f"sweep over GF({report.field_char}): exhaustive to n={report.exhaustive_limit},"
            f" max n={report.max_n}"
        )
        for key, value in report.counts.items():
            print(f"  {key}: {value}")
        for bad in report.counterexamples:
            print(f"counterexample: {bad}", file=sys.stderr)
        print("OK" if report.ok else "FAILED")
    if args.out:
        Path(args.out).write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srinv",
        description="Exact Stanley-Reisner invariants and the d <= reg * type verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="dimension, CM flags, reg, type, a-invariant")
    _add_input_options(p_inv)
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=_cmd_invariants)

    p_betti = sub.add_parser("betti", help="full graded Betti table")
    _add_input_options(p_betti)
    p_betti.add_argument("--json", action="store_true")
    p_betti.set_defaults(func=_cmd_betti)

    p_hom = sub.add_parser("homology", help="reduced homology ranks (JSON)")
    _add_input_options(p_hom)
    p_hom.set_defaults(func=_cmd_homology)

    p_con = sub.add_parser("construct", help="build a graph hitting (dim, reg, type) targets")
    p_con.add_argument("d", type=int)
    p_con.add_argument("r", type=int)
    p_con.add_argument("t", type=int)
    p_con.add_argument("--char", type=int, default=2, metavar="P")
    p_con.add_argument("--out", metavar="FILE", help="write the certificate as JSON")
    p_con.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="identity checks")
    ver_sub = p_ver.add_subparsers(dest="check", required=True)

    p_41 = ver_sub.add_parser("prop41", help="whiskered complete multipartite invariants")
    p_41.add_argument("--parts", required=True, help="comma-separated part sizes, e.g. 2,2")
    p_41.add_argument("--char", type=int, default=2, metavar="P")
    p_41.set_defaults(func=_cmd_verify_prop41)

    p_44 = ver_sub.add_parser("prop44", help="type vs minimal-cover count of the folded graph")
    p_44.add_argument("--graph", required=True, metavar="FILE")
    p_44.add_argument("--cover", help="comma-separated cover vertices (default: first half)")
    p_44.add_argument("--independent", help="comma-separated independent vertices (default: second half)")
    p_44.add_argument("--char", type=int, default=2, metavar="P")
    p_44.set_defaults(func=_cmd_verify_prop44)

    p_sweep = sub.add_parser("sweep", help="check all asserted properties over small graphs")
    p_sweep.add_argument("--max-n", type=int, default=6, dest="max_n")
    p_sweep.add_argument("--char", type=int, default=2, metavar="P")
    p_sweep.add_argument("--seed", type=int, default=None)
    p_sweep.add_argument("--samples", type=int, default=300, help="samples per size beyond the exhaustive limit")
    p_sweep.add_argument("--json", action="store_true")
    p_sweep.add_argument("--out", metavar="FILE", help="write the report as JSON")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError, ResourceLimitError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
