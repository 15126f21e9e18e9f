"""Command-line entry point for the verification pipeline.

Exit codes: 0 when every requested assertion holds, 1 with JSON
diagnostics when one fails, 2 for usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .generate import (
    CONNECTED_COUNTS,
    GenerationShard,
    count_connected,
    enumerate_connected,
)
from .graph6 import decode_graph6, encode_graph6, write_graph6
from .graphs import SmallGraph, parse_edge_list
from .lemmas import run_catalog
from .longest_path import longest_path_profile
from .separators import find_violating_pair, min_ell_statistics
from .verify import SweepReport, WitnessFailure, check_witness, verify_n


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _parse_shard(text: str) -> GenerationShard:
    try:
        sid, count = text.split("/")
        return GenerationShard(0, int(sid), int(count))
    except Exception:
        raise argparse.ArgumentTypeError(f"shard must look like 'i/of', got {text!r}")


def _analyze_payload(g: SmallGraph) -> dict:
    profile = longest_path_profile(g)
    stats = min_ell_statistics(g, profile)
    violation = find_violating_pair(g, profile)
    return {
        "n": g.n,
        "graph6": encode_graph6(g),
        "longest_path_vertices": profile.order,
        "longest_path_length": profile.length,
        "longest_path_sets": [[v + 1 for v in s] for s in profile.vertex_sets()],
        "ell_histogram": {str(k): v for k, v in sorted(stats.pair_counts.items())},
        "violation": violation.to_json_dict() if violation else None,
    }


def _load_graph(args) -> SmallGraph:
    if args.edges:
        return parse_edge_list(Path(args.edges).read_text())
    return decode_graph6(args.g6)


def _cmd_verify(args) -> int:
    ns = [args.n] if args.n is not None else list(range(1, args.n_max + 1))
    checkpoint = args.checkpoint
    source = None
    if args.source != "internal":
        if not args.source.startswith("g6:"):
            print("--source must be 'internal' or 'g6:<path>'", file=sys.stderr)
            return 2
        source = args.source[3:]
    reports: list[SweepReport] = []
    for n in ns:
        ckpt = checkpoint
        if ckpt is None and os.environ.get("LONGPATH_CHECKPOINT_DIR"):
            ckpt = str(Path(os.environ["LONGPATH_CHECKPOINT_DIR"]) / f"verify-n{n}.json")
        reports.append(
            verify_n(
                n,
                jobs=args.jobs,
                shard_count=args.shards,
                checkpoint=ckpt,
                source=source,
            )
        )
    payloads = [r.to_json_dict() for r in reports]
    failures = []
    for r in reports:
        if r.violations:
            failures.append({"n": r.n, "reason": "violations found", "violations": r.violations})
        expected = r.expected_total() if source is None else None
        if expected is not None and r.complete and r.graphs_total != expected:
            failures.append(
                {
                    "n": r.n,
                    "reason": "enumeration count mismatch",
                    "got": r.graphs_total,
                    "expected": expected,
                }
            )
    out = payloads[0] if len(payloads) == 1 else {"reports": payloads}
    if args.report:
        Path(args.report).write_text(json.dumps(out, sort_keys=True, indent=2) + "\n")
    for r in reports:
        human = (
            f"n={r.n}: {r.graphs_total} connected graphs, "
            f"{r.graphs_with_distinct_pairs} with distinct longest-path sets, "
            f"{len(r.violations)} violations"
        )
        _emit(r.to_json_dict(), args.json, human)
    if failures:
        print(json.dumps({"failures": failures}, sort_keys=True), file=sys.stderr)
        return 1
    return 0


def _cmd_witness(args) -> int:
    g = None
    if args.edges:
        g = parse_edge_list(Path(args.edges).read_text())
    try:
        record = check_witness(g)
    except WitnessFailure as exc:
        print(json.dumps({"witness": "failed", "reason": str(exc)}), file=sys.stderr)
        return 1
    d = record.to_json_dict()
    _emit(
        d,
        args.json,
        f"witness ok: n={d['n']}, ell={d['ell']}, graph6={d['graph6']}",
    )
    return 0


def _cmd_analyze(args) -> int:
    payload = _analyze_payload(_load_graph(args))
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_enumerate(args) -> int:
    shard: Optional[GenerationShard] = None
    if args.shard:
        shard = GenerationShard(args.n, args.shard.shard_id, args.shard.shard_count)
    stream = enumerate_connected(args.n, shard)
    if args.out_g6:
        with open(args.out_g6, "w", encoding="ascii") as fh:
            total = write_graph6(fh, stream)
    else:
        total = write_graph6(sys.stdout, stream)
    print(f"{total} graphs", file=sys.stderr)
    return 0


def _cmd_count(args) -> int:
    total = count_connected(args.n)
    expected = CONNECTED_COUNTS.get(args.n)
    print(total)
    if expected is not None and total != expected:
        print(
            json.dumps({"n": args.n, "got": total, "expected": expected}),
            file=sys.stderr,
        )
        return 1
    return 0


def _cmd_lemmas(args) -> int:
    families_requested = args.remark or args.lollipop or args.forbidden_pairs
    results = run_catalog(
        remark=args.remark or not families_requested,
        lollipop=args.lollipop or not families_requested,
        forbidden=args.forbidden_pairs or not families_requested,
    )
    failed = [r for r in results if not r.passed]
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "family": r.family,
                        "n": r.n,
                        "params": list(r.params),
                        "passed": r.passed,
                    }
                    for r in results
                ],
                default=list,
            )
        )
    else:
        for r in results:
            mark = "pass" if r.passed else "FAIL"
            print(f"{mark}  {r.family}  n={r.n}  {r.params}")
        print(f"{len(results) - len(failed)}/{len(results)} lemma checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="longpath",
        description="Exhaustively verify that intersections of two longest "
        "paths are separators in small connected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="sweep all connected graphs of an order")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--n-max", type=int, dest="n_max")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--shards", type=int, default=None)
    p.add_argument("--checkpoint", default=None)
    p.add_argument("--report", default=None)
    p.add_argument("--source", default="internal")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("witness", help="certify the 11-vertex witness graph")
    p.add_argument("--edges", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("analyze", help="profile a single graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--edges", default=None)
    group.add_argument("--g6", default=None)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("enumerate", help="stream connected graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shard", type=_parse_shard, default=None)
    p.add_argument("--out-g6", dest="out_g6", default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("count", help="count connected graphs of an order")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("lemmas", help="replay the configuration lemma catalog")
    p.add_argument("--remark", action="store_true")
    p.add_argument("--lollipop", action="store_true")
    p.add_argument("--forbidden-pairs", dest="forbidden_pairs", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_lemmas)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
