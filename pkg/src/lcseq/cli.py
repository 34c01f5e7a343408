"""Command-line interface: length, subseq, stats, verify, bench.

Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from .core import (
    DEFAULT_TRACE_CAP,
    ReconstructionCapError,
    dp_oracle,
    lcs_length,
    lcs_reconstruct,
    validate_common_subsequence,
)
from .matching import MODES, Sequence, SymbolTable, build_position_lists, count_matches, tokenize
from .shadow import DEFAULT_SHADOW_LIMIT, InvariantViolation, shadow_run

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_input(path: str, allow_stdin: bool) -> bytes:
    if path == "-":
        if not allow_stdin:
            raise OSError("'-' (standard input) is only allowed for the first input")
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_pair(args) -> tuple[Sequence, Sequence, SymbolTable | None]:
    table = SymbolTable() if args.mode == "lines" else None
    x = tokenize(_read_input(args.inputs[0], allow_stdin=True), args.mode, table)
    y = tokenize(_read_input(args.inputs[1], allow_stdin=False), args.mode, table)
    return x, y, table


def _pick_backend(backend: str, x: Sequence, y: Sequence) -> str:
    if backend != "auto":
        return backend
    # large alphabets keep L small relative to R/n; the linear scan wins there
    sigma = len(set(x.symbols) | set(y.symbols))
    return "array" if sigma > 16 else "veb"


def _emit(payload: dict, output: str, text_lines: list[str]) -> None:
    if output == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _render_tokens(tokens, mode: str, table: SymbolTable | None) -> str:
    if mode == "lines" and table is not None:
        return "\n".join(table.lines[t].decode("utf-8", "replace") for t in tokens)
    return bytes(tokens).decode("latin-1")


def cmd_length(args) -> int:
    x, y, _ = _load_pair(args)
    backend = _pick_backend(args.backend, x, y)
    result = lcs_length(x, y, backend=backend)
    payload = {
        "m": len(x),
        "n": len(y),
        "R": result.stats.r,
        "L": result.length,
        "backend": backend,
    }
    _emit(payload, args.output, [f"{k} = {v}" for k, v in payload.items()])
    return EXIT_OK


def cmd_subseq(args) -> int:
    x, y, table = _load_pair(args)
    result = lcs_reconstruct(x, y, memory_cap=args.memory_cap)
    if not validate_common_subsequence(result.subsequence, x, y, result.length):
        print("internal error: reconstructed subsequence failed validation", file=sys.stderr)
        return EXIT_MISMATCH
    rendered = _render_tokens(result.subsequence, args.mode, table)
    payload = {
        "m": len(x),
        "n": len(y),
        "R": result.stats.r,
        "L": result.length,
        "subsequence": rendered,
    }
    _emit(payload, args.output, [f"L = {result.length}", rendered])
    return EXIT_OK


def cmd_stats(args) -> int:
    x, y, _ = _load_pair(args)
    pl = build_position_lists(y)
    stats = count_matches(x, pl)
    payload = {
        "m": len(x),
        "n": len(y),
        "R": stats.r,
        "distinct_symbols": len(set(x.symbols) | set(y.symbols)),
    }
    _emit(payload, args.output, [f"{k} = {v}" for k, v in payload.items()])
    return EXIT_OK


def cmd_verify(args) -> int:
    x, y, _ = _load_pair(args)
    pl = build_position_lists(y)
    lengths: dict[str, int] = {}
    for backend in ("veb", "tree", "array"):
        lengths[backend] = lcs_length(
            x,
            y,
            backend=backend,
            position_lists=pl,
            literal_guard=(args.simulate_literal_guard and backend == "veb"),
        ).length
    table = dp_oracle(x, y)
    lengths["dp_oracle"] = int(table[len(x)][len(y)])
    recon = lcs_reconstruct(x, y, position_lists=pl)
    lengths["reconstruct"] = recon.length
    failures = []
    if len(set(lengths.values())) > 1:
        failures.append(f"length disagreement: {lengths}")
    if not validate_common_subsequence(recon.subsequence, x, y, lengths["dp_oracle"]):
        failures.append("reconstructed subsequence failed the structural check")
    if len(x) <= DEFAULT_SHADOW_LIMIT and len(y) <= DEFAULT_SHADOW_LIMIT:
        try:
            shadow_run(x, y, position_lists=pl)
        except InvariantViolation as exc:
            failures.append(f"shadow invariant violation: {exc}")
    if failures:
        for f in failures:
            print(f"FAIL: {f}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"ok: all backends agree, L = {lengths['dp_oracle']}")
    return EXIT_OK


def cmd_bench(args) -> int:
    backends = tuple(args.backend.split(","))
    cases = bench_mod.default_cases(
        n=args.n,
        sigma=args.sigma,
        seed=args.seed,
        structure=args.structure,
        backends=backends,
    )
    records = bench_mod.run_bench(cases, repeats=args.repeats)
    fmt = "json" if (args.json or args.output == "json") else "csv"
    sys.stdout.write(bench_mod.emit_report(records, fmt))
    if fmt == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcseq",
        description="Longest common subsequence via threshold sets.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, inputs=True):
        if inputs:
            p.add_argument("inputs", nargs=2, metavar="INPUT",
                           help="two file paths ('-' = stdin, first input only)")
        p.add_argument("--mode", choices=MODES, default="bytes")
        p.add_argument("--output", choices=("text", "json"), default="text")
        p.add_argument("--memory-cap", type=int, default=DEFAULT_TRACE_CAP,
                       dest="memory_cap")

    p = sub.add_parser("length", help="LCS length")
    add_common(p)
    p.add_argument("--backend", choices=("veb", "tree", "array", "auto"),
                   default="auto")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("subseq", help="print one LCS")
    add_common(p)
    p.set_defaults(func=cmd_subseq)

    p = sub.add_parser("stats", help="sequence and match statistics")
    add_common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="cross-check all backends and invariants")
    add_common(p)
    p.add_argument("--simulate-literal-guard", action="store_true",
                   help=argparse.SUPPRESS)  # test-only corrupted-build hook
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run the benchmark suite")
    add_common(p, inputs=False)
    p.add_argument("--n", type=int, default=128)
    p.add_argument("--sigma", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--structure", choices=bench_mod.STRUCTURES,
                   default="uniform_random")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--backend", default="veb,tree,array")
    p.add_argument("--json", action="store_true",
                   help="emit a JSON array instead of CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ReconstructionCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
