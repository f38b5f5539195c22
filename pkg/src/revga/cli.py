"""Command-line surface: distance queries, sorting, the experiment runner
and oracle self-checks.

Exit codes: 0 success, 1 usage or parse error, 2 size cap exceeded,
3 verification mismatch.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from . import ga, hp, oracles, perms

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SIZE = 2
EXIT_MISMATCH = 3

CSV_HEADER = "n,run,method,distance,generations,wall_ms"
METHODS = ("ga", "trivial", "greedy", "exact")


def _fail(msg: str, code: int) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed & perms.MASK64
    seed = int.from_bytes(os.urandom(8), "little")
    print(f"seed: {seed}", file=sys.stderr)
    return seed


def _ga_config(args) -> ga.GaConfig:
    return ga.GaConfig(
        population_size=args.pop,
        crossover_rate=args.cx_rate,
        mutation_rate=args.mut_rate,
        stagnation_generations=args.stagnation,
        max_generations=args.max_gens,
        init=args.init,
    )


def _add_ga_flags(sub):
    sub.add_argument("--pop", type=int, default=None, help="population size (default n^2, capped)")
    sub.add_argument("--cx-rate", type=float, default=0.5)
    sub.add_argument("--mut-rate", type=float, default=0.3)
    sub.add_argument("--stagnation", type=int, default=3)
    sub.add_argument("--max-gens", type=int, default=None)
    sub.add_argument("--init", choices=("heuristic", "random"), default="heuristic")


def _add_input_flags(sub):
    sub.add_argument("perm", nargs="*", help="permutation elements (use -- before negative entries)")
    sub.add_argument("--file", help="read one permutation per line from a file")
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--verbose", action="store_true")


def _read_inputs(args):
    texts = []
    if args.file:
        with open(args.file) as fh:
            texts = [line.strip() for line in fh if line.strip()]
    elif args.perm:
        texts = [" ".join(args.perm)]
    if not texts:
        raise perms.ParseError("no permutation given (positional or --file)")
    return [perms.parse_permutation(t) for t in texts]


def cmd_distance(args) -> int:
    try:
        inputs = _read_inputs(args)
    except perms.ParseError as exc:
        return _fail(str(exc), EXIT_USAGE)
    seed = None
    for p, signed in inputs:
        if signed:
            breakdown = hp.signed_distance(p)
            print(breakdown.render() if args.verbose else f"d={breakdown.d}")
        elif args.exact:
            try:
                d, _ = oracles.exhaustive_embedding_min(p)
            except oracles.SizeTooLarge as exc:
                return _fail(str(exc), EXIT_SIZE)
            print(f"d={d}")
        else:
            if seed is None:
                seed = _resolve_seed(args)
            result = ga.run_ga(p, _ga_config(args), perms.Rng(seed))
            if args.verbose:
                print(f"d={result.best_distance} generations={result.generations_run}")
            else:
                print(f"d={result.best_distance}")
    return EXIT_OK


def cmd_sort(args) -> int:
    try:
        inputs = _read_inputs(args)
    except perms.ParseError as exc:
        return _fail(str(exc), EXIT_USAGE)
    seed = None
    for p, signed in inputs:
        if signed:
            seq = hp.extract_optimal_sequence(p)
        elif args.exact:
            try:
                _, genome = oracles.exhaustive_embedding_min(p)
            except oracles.SizeTooLarge as exc:
                return _fail(str(exc), EXIT_SIZE)
            seq = hp.extract_optimal_sequence(ga.embed(p, genome))
        else:
            if seed is None:
                seed = _resolve_seed(args)
            result = ga.run_ga(p, _ga_config(args), perms.Rng(seed))
            seq = result.sorting_sequence
        if args.verify:
            cur = p
            apply = perms.apply_reversal_signed if signed else perms.apply_reversal_unsigned
            for r in seq:
                cur = apply(cur, r)
            if not perms.is_identity(cur):
                return _fail(f"replay did not reach identity: {cur!r}", EXIT_MISMATCH)
        for r in seq:
            print(f"{r.i} {r.j}")
    return EXIT_OK


def _run_method(method, p, n, run, seed, config):
    t0 = time.perf_counter()
    generations = ""
    if method == "ga":
        result = ga.run_ga(p, config, perms.Rng(perms.derive_seed(seed, n, run, 1)))
        ga.deduce_unsigned_sequence(result, p)
        distance = result.best_distance
        generations = result.generations_run
    elif method == "trivial":
        distance = len(oracles.trivial_sort(p))
    elif method == "greedy":
        distance = len(oracles.greedy_breakpoint_sort(p))
    else:  # exact
        distance, _ = oracles.exhaustive_embedding_min(p)
    wall_ms = int((time.perf_counter() - t0) * 1000)
    return distance, generations, wall_ms


def cmd_experiment(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
        methods = [m for m in args.methods.split(",") if m]
    except ValueError:
        return _fail("bad --sizes / --methods", EXIT_USAGE)
    for m in methods:
        if m not in METHODS:
            return _fail(f"unknown method {m!r} (choose from {','.join(METHODS)})", EXIT_USAGE)
    if args.runs < 1 or not sizes or not methods:
        return _fail("need at least one size, one run and one method", EXIT_USAGE)
    if "exact" in methods and max(sizes) > oracles.EMBEDDING_MAX_N:
        return _fail(
            f"exact method capped at n={oracles.EMBEDDING_MAX_N}", EXIT_SIZE
        )
    seed = _resolve_seed(args)
    config = _ga_config(args)

    rows = []
    totals = {}
    for n in sizes:
        for run in range(args.runs):
            p = perms.random_permutation(n, perms.Rng(perms.derive_seed(seed, n, run)))
            for method in methods:
                distance, generations, wall_ms = _run_method(
                    method, p, n, run, seed, config
                )
                rows.append(f"{n},{run},{method},{distance},{generations},{wall_ms}")
                totals.setdefault((n, method), []).append(distance)

    lines = [CSV_HEADER] + rows
    for n in sizes:
        for method in methods:
            vals = totals[(n, method)]
            mean = sum(vals) / len(vals)
            lines.append(f"# mean n={n} method={method} distance={mean:.3f}")
    text = "\n".join(lines) + "\n"
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            return _fail(f"cannot write {args.out}: {exc}", EXIT_USAGE)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    from itertools import permutations as iter_perms

    cache_dir = oracles.default_cache_dir() if args.cache else None
    seed = _resolve_seed(args)
    rng = perms.Rng(seed)
    status = EXIT_OK

    try:
        table = oracles.bfs_signed_distances(args.signed_n, cache_dir=cache_dir)
    except oracles.SizeTooLarge as exc:
        return _fail(str(exc), EXIT_SIZE)
    ok = total = 0
    for mags in iter_perms(range(1, args.signed_n + 1)):
        for mask in range(1 << args.signed_n):
            sp = tuple(-v if (mask >> k) & 1 else v for k, v in enumerate(mags))
            total += 1
            if hp.signed_distance(sp).d == table.distance(sp):
                ok += 1
            else:
                print(f"signed mismatch: {perms.format_permutation(sp, signed=True)}")
                status = EXIT_MISMATCH
    print(f"signed n={args.signed_n}: {ok}/{total} ok")

    try:
        utable = oracles.bfs_unsigned_distances(args.unsigned_n, cache_dir=cache_dir)
    except oracles.SizeTooLarge as exc:
        return _fail(str(exc), EXIT_SIZE)
    ok = total = 0
    for _ in range(args.samples):
        p = perms.random_permutation(args.unsigned_n, rng.spawn(total))
        total += 1
        d_min, _ = oracles.exhaustive_embedding_min(p)
        if d_min == utable.distance(p):
            ok += 1
        else:
            print(f"embedding mismatch: {perms.format_permutation(p)}")
            status = EXIT_MISMATCH
    print(f"embedding n={args.unsigned_n}: {ok}/{total} ok")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revga",
        description="Reversal distances for signed/unsigned permutations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("distance", help="reversal distance of a permutation")
    _add_input_flags(p_dist)
    _add_ga_flags(p_dist)
    p_dist.add_argument("--exact", action="store_true",
                        help="exhaustive sign search instead of the GA (unsigned input)")
    p_dist.set_defaults(func=cmd_distance)

    p_sort = sub.add_parser("sort", help="emit a sorting sequence, one 'i j' per line")
    _add_input_flags(p_sort)
    _add_ga_flags(p_sort)
    p_sort.add_argument("--exact", action="store_true")
    p_sort.add_argument("--verify", action="store_true", help="replay and check identity")
    p_sort.set_defaults(func=cmd_sort)

    p_exp = sub.add_parser("experiment", help="run the method-comparison benchmark")
    p_exp.add_argument("--sizes", default="10,20,30,40,50")
    p_exp.add_argument("--runs", type=int, default=10)
    p_exp.add_argument("--methods", default="ga,trivial,greedy")
    p_exp.add_argument("--out", default=None, help="CSV output path (default stdout)")
    p_exp.add_argument("--seed", type=int, default=None)
    p_exp.add_argument("--verbose", action="store_true")
    _add_ga_flags(p_exp)
    p_exp.set_defaults(func=cmd_experiment)

    p_chk = sub.add_parser("oracle-check", help="cross-validate distances against BFS oracles")
    p_chk.add_argument("--signed-n", type=int, default=4)
    p_chk.add_argument("--unsigned-n", type=int, default=6)
    p_chk.add_argument("--samples", type=int, default=50)
    p_chk.add_argument("--seed", type=int, default=None)
    p_chk.add_argument("--no-cache", dest="cache", action="store_false")
    p_chk.set_defaults(func=cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
