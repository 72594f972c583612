"""Command-line front end.

Exit codes: 0 success or equivalent, 1 domain-negative result, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import decomp, equiv, gen, seq
from .files import (
    DescriptorFile,
    DescriptorFileError,
    descriptor_to_dict,
    load_descriptor,
)
from .model import (
    CIRCULAR,
    LEVELS,
    LINEAR,
    NO_NODES,
    STRICT,
    CircularDescriptor,
    ClusterData,
    WordError,
    as_descriptor,
    validate,
)
from .render import render_dot

OK, NEGATIVE, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _load(path: str, strict_word: bool = True) -> DescriptorFile:
    try:
        return load_descriptor(path, strict_word=strict_word)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except DescriptorFileError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _need_word(df: DescriptorFile, command: str) -> None:
    if df.kind == NO_NODES:
        raise UsageError(f"{command} is undefined for circular snakes without nodal zones")


def _ints(xs) -> str:
    return " ".join(map(str, xs))


def cmd_validate(args) -> int:
    df = _load(args.path, strict_word=False)
    report = validate(df.descriptor, args.level)
    lines = [f"level {args.level}: {'PASS' if report.ok else 'FAIL'}"
             f" (achieved: {report.achieved or 'none'})"]
    lines += [f"  {v}" for v in report.violations]
    _emit(args, report.to_dict(), "\n".join(lines))
    return OK if report.ok else NEGATIVE


def cmd_minseq(args) -> int:
    df = _load(args.path)
    _need_word(df, "minseq")
    name = df.descriptor.name
    if name.kind == LINEAR:
        cs = seq.minimal_sequence_linear(name)
        text = _ints(cs.indices) + ("  (primitive word: not a snake)" if cs.primitive else "")
        _emit(args, cs.to_dict(), text)
        return OK
    try:
        a = seq.circular_sequences(name, df.start, df.orientation)
    except seq.NoRepeat as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    bound = seq.check_lap_bound(a)
    text = "\n".join([
        f"fundamental: {_ints(a.fundamental)}; minimal: {_ints(a.minimal)}; t={a.t}",
        f"k={a.k} p={a.p} q={a.q}",
        f"lap bound: p={a.p} >= t(q-1)+1={a.t * (a.q - 1) + 1} {'holds' if bound else 'VIOLATED'}",
    ])
    _emit(args, a.to_dict(), text)
    return OK


def _describe_blocks(dec) -> str:
    return " ".join("[" + " ".join(f"N_{x}" for x in b) + "]" for b in dec.blocks)


def cmd_decompose(args) -> int:
    df = _load(args.path)
    d = df.descriptor
    try:
        dec = decomp.decomposition_for(d, df.start, df.orientation)
    except seq.NoRepeat as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    data = {"decomposition": dec.to_dict()}
    if dec.kind == NO_NODES:
        m = dec.m
        lines = [f"{dec.count} pancakes: λ_0..λ_{m + 1} (λ_0 = λ_{m + 1} = γ)"]
    else:
        notes = decomp.annotate_cut_placement(d, dec)
        data["signature"] = list(dec.sizes)
        data["annotations"] = [n.to_dict() for n in notes]
        lines = [
            f"{dec.count} pancakes",
            f"blocks: {_describe_blocks(dec)}",
            "cuts: " + (" ".join(f"S_{c}" for c in dec.cuts) or "none"),
            f"signature: ({', '.join(map(str, dec.sizes))})",
        ]
        if notes:
            lines.append("one-sided: " + ", ".join(
                f"S_{n.segment} {'required' if n.one_sided else 'notRequired'}" for n in notes))
    status = OK
    if args.verify:
        best = decomp.oracle_count(d)
        passed = dec.count == best
        data["oracle"] = best
        data["verified"] = passed
        lines.append(f"oracle minimum: {best} {'PASS' if passed else 'FAIL'}")
        status = OK if passed else NEGATIVE
    _emit(args, data, "\n".join(lines))
    return status


def cmd_equiv(args) -> int:
    a, b = _load(args.path1), _load(args.path2)
    if a.kind != b.kind:
        raise UsageError(f"cannot compare {a.kind} with {b.kind}")
    d1, d2 = a.descriptor, b.descriptor
    if a.kind == NO_NODES:
        same = equiv.no_nodes_weak_equiv(d1, d2)
        reason = "same multiplicity" if same else \
            f"multiplicity {d1.multiplicity} vs {d2.multiplicity}"
        _emit(args, {"equivalent": same, "reason": reason},
              ("equivalent: " if same else "not equivalent: ") + reason)
        return OK if same else NEGATIVE
    w = equiv.weak_equiv(d1, d2)
    if w is not None:
        _emit(args, {"equivalent": True, "witness": w.to_dict()}, f"equivalent: {w.describe()}")
        return OK
    if len(d1.name) != len(d2.name):
        reason = "names have different lengths"
    else:
        bare1 = type(d1)(d1.name, ClusterData.singletons(d1.name))
        bare2 = type(d2)(d2.name, ClusterData.singletons(d2.name))
        # words match with trivial clusters, so the clusters are what differ
        names_match = any(True for _ in equiv.witnesses(bare1, bare2))
        reason = "cluster partition" if names_match else "snake names differ"
    _emit(args, {"equivalent": False, "reason": reason}, f"not equivalent: {reason}")
    return NEGATIVE


def cmd_reduce(args) -> int:
    df = _load(args.path)
    _need_word(df, "reduce")
    name = df.descriptor.name
    cuts = list(name.segments) if args.cuts is None else \
        [int(c) for c in args.cuts.split(",") if c.strip()]
    try:
        start = decomp.from_cuts(name, cuts)
        decomp.check_decomposition(name, start)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = decomp.reduce(name, start)
    minimal = decomp.verify_minimal(df.descriptor, out)
    lines = [
        f"{out.count} pancakes after {len(out.merges)} merges",
        f"blocks: {_describe_blocks(out)}",
        "merged cuts: " + (" ".join(f"S_{c}" for c in out.merges) or "none"),
        f"minimal: {'yes' if minimal else 'no'}",
    ]
    _emit(args, {"decomposition": out.to_dict(), "minimal": minimal}, "\n".join(lines))
    return OK


def cmd_lift(args) -> int:
    df = _load(args.path)
    if df.kind != CIRCULAR:
        raise UsageError("lift needs a circular descriptor")
    name = df.descriptor.name
    times = args.times
    if times is None:
        times = seq.circular_sequences(name, df.start, df.orientation).t
    lifted = decomp.lift(name, times)
    out = descriptor_to_dict(CircularDescriptor(lifted))
    _emit(args, out, f"{lifted}  (t={times}, m={lifted.m})")
    return OK


def cmd_render(args) -> int:
    df = _load(args.path)
    _need_word(df, "render")
    dec = decomp.decomposition_for(df.descriptor, df.start, df.orientation) \
        if args.decomposition else None
    sys.stdout.write(render_dot(df.descriptor, dec))
    return OK


def _gen_params(args) -> gen.GenParams:
    return gen.GenParams(
        length=(args.min_length, args.length),
        alphabet=(args.min_alphabet, args.alphabet),
        level=args.level,
        seed=args.seed,
    )


def cmd_gen(args) -> int:
    if args.seed is None:
        raise UsageError("gen needs an explicit --seed")
    rng = random.Random(args.seed)
    params = _gen_params(args)
    out = []
    try:
        for _ in range(args.count):
            if args.kind == "snake":
                name = gen.random_snake_name(params, rng)
            else:
                name = gen.random_circular_name(params, rng)
            desc = as_descriptor(name)
            if args.clusters:
                desc = type(desc)(name, gen.random_clusters(desc, rng))
            out.append(descriptor_to_dict(desc))
    except gen.GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    for item in out:
        print(json.dumps(item, sort_keys=True))
    return OK


def check_instance(job: tuple[str, int, gen.GenParams]) -> dict:
    """Greedy against oracle (and the lap bound) on one seeded random instance."""
    kind, index, params = job
    rng = random.Random(f"{params.seed}:{index}")
    if kind == "snake":
        name = gen.random_snake_name(params, rng)
        greedy = decomp.greedy_linear(name).count
        best = decomp.oracle_min_linear(name)[0]
        return {"index": index, "word": str(name), "ok": greedy == best,
                "greedy": greedy, "oracle": best}
    name = gen.random_circular_name(params, rng)
    best = decomp.oracle_min_circular(name)[0]
    counts = set()
    lap_ok = True
    for orientation in seq.ORIENTATIONS:
        for start in name.positions:
            a = seq.circular_sequences(name, start, orientation)
            counts.add(a.q)
            lap_ok &= seq.check_lap_bound(a)
    return {"index": index, "word": str(name), "ok": counts == {best} and lap_ok,
            "greedy": sorted(counts), "oracle": best}


def cmd_check(args) -> int:
    if args.seed is None:
        raise UsageError("check needs an explicit --seed")
    params = _gen_params(args)
    jobs = [(args.kind, i, params) for i in range(args.count)]
    try:
        if args.workers > 1:
            with ProcessPoolExecutor(args.workers) as pool:
                results = list(pool.map(check_instance, jobs, chunksize=64))
        else:
            results = [check_instance(j) for j in jobs]
    except gen.GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE
    results.sort(key=lambda r: r["index"])
    failures = [r for r in results if not r["ok"]]
    data = {"instances": len(results), "failures": failures}
    text = [f"{len(results)} {args.kind} instances, {len(failures)} failures"]
    text += [f"  #{r['index']} {r['word']}: greedy {r['greedy']} oracle {r['oracle']}"
             for r in failures]
    _emit(args, data, "\n".join(text))
    return OK if not failures else NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--level", choices=LEVELS, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="pancake", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized commands")
    parser.add_argument("--level", choices=LEVELS, default=STRICT,
                        help="validation level (default: strict)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a descriptor")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("minseq", parents=[common], help="print the minimal sequence")
    p.add_argument("path")
    p.set_defaults(func=cmd_minseq)

    p = sub.add_parser("decompose", parents=[common], help="greedy pancake decomposition")
    p.add_argument("path")
    p.add_argument("--verify", action="store_true", help="compare with the brute-force minimum")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("equiv", parents=[common], help="weak outer equivalence")
    p.add_argument("path1")
    p.add_argument("path2")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("reduce", parents=[common], help="merge adjacent pancakes")
    p.add_argument("path")
    p.add_argument("--cuts", help="comma-separated cut segments (default: every segment)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("lift", parents=[common], help="concatenate t copies of a circular name")
    p.add_argument("path")
    p.add_argument("--times", type=int, help="copies (default: lap count t)")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("render", parents=[common], help="DOT link diagram")
    p.add_argument("path")
    p.add_argument("--decomposition", action="store_true", help="colour the greedy pancakes")
    p.set_defaults(func=cmd_render)

    for cmd, helptext, func in (("gen", "random descriptors as JSON lines", cmd_gen),
                                ("check", "bulk greedy-versus-oracle verification", cmd_check)):
        p = sub.add_parser(cmd, parents=[common], help=helptext)
        p.add_argument("--kind", choices=("snake", "circular"), default="snake")
        p.add_argument("--length", type=int, default=12, help="maximum length")
        p.add_argument("--min-length", type=int, default=2)
        p.add_argument("--alphabet", type=int, default=4, help="maximum number of letters")
        p.add_argument("--min-alphabet", type=int, default=2)
        p.add_argument("--count", type=int, default=1 if cmd == "gen" else 1000)
        if cmd == "gen":
            p.add_argument("--clusters", action="store_true", help="random cluster partitions")
        else:
            p.add_argument("--workers", type=int, default=1)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except seq.NoRepeat as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
