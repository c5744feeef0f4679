"""Batch front end: JSON instances in, deterministic key-value lines out.

stdout carries machine-readable "key value" result lines only; digests and
timings go to stderr as comment lines.  Exit codes: 0 success, 1 invalid
input, 2 verification disagreement, 3 size/limit guard.
"""

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from . import metrics, oracles
from .allocation import (ResourceInstance, min_cost_backward,
                         min_cost_incomplete_dp, reconstruct_selection)
from .collector import (PileGame, max_collect, max_collect_no_decay,
                        max_collect_no_disappear, optimal_strategy)
from .errors import GuardError, InconsistentAnswerError, InvalidInstanceError
from .guessing import (AdversarialReferee, FixedReferee, GuessState,
                       answer_for_secret, apply_answer, choose_question, play)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2
EXIT_GUARD = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="combopt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_command(name, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--file", action="append",
                        help="JSON instance file (repeatable)")
        sp.add_argument("--verify", action="store_true",
                        help="cross-check against the brute-force oracle "
                             "when the instance is small enough")
        sp.add_argument("--jobs", type=int, default=1,
                        help="worker threads when several files are given")
        return sp

    sp = add_file_command("triples", "minimum-cost disjoint 3-tuples")
    sp.add_argument("--dp", choices=("backward", "forward"), default="backward",
                    help="which dynamic program computes the cost")
    sp.add_argument("--reconstruct", action="store_true",
                    help="also print one optimal selection")

    sp = add_file_command("collector", "multi-pile resource collection game")
    sp.add_argument("--strategy", action="store_true",
                    help="also print an optimal move sequence")
    sp.add_argument("--no-decay", dest="no_decay", action="store_true",
                    help="disable per-move decay")
    sp.add_argument("--no-disappear", dest="no_disappear", action="store_true",
                    help="keep empty recipients in their piles")

    sp = add_file_command("kth-distance", "k-th smallest pairwise distance")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--metric", choices=("linf", "l1"), default="linf")

    sp = add_file_command("count-pairs", "pairs within a distance or range")
    sp.add_argument("--dist", type=int, help="count pairs at distance <= dist")
    sp.add_argument("--lo", type=int, help="lower distance bound (inclusive)")
    sp.add_argument("--hi", type=int, help="upper distance bound (inclusive)")

    sp = add_file_command("diameter", "largest pairwise distance")
    sp.add_argument("--metric", choices=("linf", "l1"), default="linf")

    add_file_command("embed", "sign-tuple embedding turning L1 into Linf")
    add_file_command("packing", "largest factor with disjoint centred boxes")

    sp = sub.add_parser("guess", help="permutation guessing engine")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mode", choices=("fixed", "adversarial"), default="fixed")
    sp.add_argument("--secret", help='fixed-mode secret, e.g. "2 1 3"')
    sp.add_argument("--verify", action="store_true",
                    help="check the result against the recorded answers")
    sp.add_argument("--interactive", action="store_true",
                    help="bridge to an external referee on stdin/stdout")
    return parser


def _load_instance(path):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InvalidInstanceError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise InvalidInstanceError(f"{path} is not UTF-8 text: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInstanceError(
            f"malformed JSON in {path}: line {exc.lineno} "
            f"column {exc.colno}: {exc.msg}") from exc
    return data, hashlib.sha256(raw).hexdigest()


def _require_keys(data, keys, what):
    if not isinstance(data, dict) or not all(key in data for key in keys):
        raise InvalidInstanceError(
            f"{what} instance must be an object with keys {', '.join(keys)}")


def _resource_instance(data):
    _require_keys(data, ("amounts", "k", "p"), "triples")
    if not isinstance(data["amounts"], list):
        raise InvalidInstanceError("amounts must be an array of integers")
    return ResourceInstance(tuple(data["amounts"]), data["k"], data["p"])


def _pile_game(data, args):
    _require_keys(data, ("piles",), "collector")
    if not isinstance(data["piles"], list):
        raise InvalidInstanceError("piles must be an array of arrays")
    piles = []
    for pile in data["piles"]:
        if not isinstance(pile, list):
            raise InvalidInstanceError("each pile must be an array of recipients")
        rows = []
        for rec in pile:
            if not isinstance(rec, dict) or "z" not in rec or "c" not in rec:
                raise InvalidInstanceError(
                    'each recipient must be an object with keys "z" and "c"')
            rows.append((rec["z"], rec["c"]))
        piles.append(tuple(rows))
    decay = bool(data.get("decay", True)) and not args.no_decay
    disappear = bool(data.get("disappear", True)) and not args.no_disappear
    return PileGame(tuple(piles), decay, disappear)


def _point_set(data):
    _require_keys(data, ("points", "weights"), "point-set")
    if not isinstance(data["points"], list) or not isinstance(data["weights"], list):
        raise InvalidInstanceError("points and weights must be arrays")
    return metrics.PointSet(
        tuple(tuple(pt) for pt in data["points"]), tuple(data["weights"]))


def _naive_distances(ps, metric):
    if metric == "linf":
        def dist(a, b):
            return max(w * abs(x - y) for x, y, w in zip(a, b, ps.weights))
    else:
        def dist(a, b):
            return sum(w * abs(x - y) for x, y, w in zip(a, b, ps.weights))
    return [dist(a, b) for a, b in combinations(ps.points, 2)]


def _cmd_triples(args, data):
    inst = _resource_instance(data)
    if args.reconstruct:
        selection = reconstruct_selection(inst)
        result = selection.total_cost
        lines = [f"cost {result}"]
        lines += [f"triple {a} {b} {c}" for a, b, c in selection.triples]
    else:
        if args.dp == "forward":
            result = min_cost_incomplete_dp(inst)
        else:
            result = min_cost_backward(inst)
        lines = [f"cost {result}"]
    verify = None
    if args.verify:
        if inst.n <= oracles.ORACLE_TRIPLES_MAX_N:
            verify = "agree" if oracles.oracle_triples(inst) == result else "DISAGREE"
        else:
            verify = "not-run"
    return lines, verify


def _cmd_collector(args, data):
    game = _pile_game(data, args)
    if not game.decay_enabled:
        result = max_collect_no_decay(game)
    elif not game.disappear_enabled:
        result = max_collect_no_disappear(game)
    else:
        result = max_collect(game)
    lines = [f"collected {result}"]
    if args.strategy:
        moves = optimal_strategy(game)
        lines.append("strategy" + "".join(f" {m}" for m in moves))
    verify = None
    if args.verify:
        if game.num_recipients <= oracles.ORACLE_COLLECTOR_MAX_M:
            verify = "agree" if oracles.oracle_collector(game) == result else "DISAGREE"
        else:
            verify = "not-run"
    return lines, verify


def _cmd_kth_distance(args, data):
    ps = _point_set(data)
    result = metrics.kth_smallest_distance(ps, args.k, args.metric)
    verify = None
    if args.verify:
        if ps.n <= oracles.ORACLE_DISTANCE_MAX_N:
            expected = oracles.oracle_kth_distance(ps, args.k, args.metric)
            verify = "agree" if expected == result else "DISAGREE"
        else:
            verify = "not-run"
    return [f"distance {result}"], verify


def _cmd_count_pairs(args, data):
    ps = _point_set(data)
    if args.dist is not None:
        if args.lo is not None or args.hi is not None:
            raise InvalidInstanceError("use either --dist or --lo/--hi, not both")
        result = metrics.count_pairs_within(ps, args.dist)
        lo, hi = 0, args.dist
    elif args.lo is not None and args.hi is not None:
        result = metrics.count_pairs_in_range(ps, args.lo, args.hi)
        lo, hi = args.lo, args.hi
    else:
        raise InvalidInstanceError("count-pairs needs --dist or both --lo and --hi")
    verify = None
    if args.verify:
        if ps.n <= oracles.ORACLE_DISTANCE_MAX_N:
            expected = sum(1 for d in _naive_distances(ps, "linf") if lo <= d <= hi)
            verify = "agree" if expected == result else "DISAGREE"
        else:
            verify = "not-run"
    return [f"count {result}"], verify


def _cmd_diameter(args, data):
    ps = _point_set(data)
    if args.metric == "l1":
        result = metrics.diameter_l1(ps)
    else:
        result = metrics.diameter_linf(ps)
    verify = None
    if args.verify:
        if ps.n <= oracles.ORACLE_DISTANCE_MAX_N:
            expected = max(_naive_distances(ps, args.metric))
            verify = "agree" if expected == result else "DISAGREE"
        else:
            verify = "not-run"
    return [f"diameter {result}"], verify


def _cmd_embed(args, data):
    ps = _point_set(data)
    emb = metrics.l1_to_linf_embed(ps)
    lines = [f"dims {emb.dim}"]
    lines += ["point " + " ".join(str(c) for c in pt) for pt in emb.points]
    verify = None
    if args.verify:
        if ps.n <= oracles.ORACLE_DISTANCE_MAX_N:
            ok = all(
                max(abs(x - y) for x, y in zip(a, b)) ==
                sum(w * abs(x - y) for x, y, w in zip(p, q, ps.weights))
                for (a, p), (b, q) in combinations(zip(emb.points, ps.points), 2))
            verify = "agree" if ok else "DISAGREE"
        else:
            verify = "not-run"
    return lines, verify


def _cmd_packing(args, data):
    ps = _point_set(data)
    result = metrics.max_packing_factor(ps)
    verify = None
    if args.verify:
        if ps.n <= oracles.ORACLE_PACKING_MAX_N:
            verify = "agree" if oracles.oracle_packing(ps) == result else "DISAGREE"
        else:
            verify = "not-run"
    return [f"factor {result}"], verify


_FILE_HANDLERS = {
    "triples": _cmd_triples,
    "collector": _cmd_collector,
    "kth-distance": _cmd_kth_distance,
    "count-pairs": _cmd_count_pairs,
    "diameter": _cmd_diameter,
    "embed": _cmd_embed,
    "packing": _cmd_packing,
}


def _report(err, command, digest, elapsed, verify):
    print(f"# command {command}", file=err)
    print(f"# digest sha256:{digest}", file=err)
    print(f"# elapsed {elapsed:.6f}s", file=err)
    print(f"# verify {verify if verify else 'not-run'}", file=err)


def _exit_code_for(exc):
    return EXIT_GUARD if isinstance(exc, GuardError) else EXIT_INVALID


def _run_files(args, out, err):
    files = args.file or []
    if not files:
        print("error: at least one --file is required", file=err)
        return EXIT_INVALID
    handler = _FILE_HANDLERS[args.command]

    def one(path):
        started = time.perf_counter()
        data, digest = _load_instance(path)
        lines, verify = handler(args, data)
        return lines, verify, digest, time.perf_counter() - started

    outcomes = []
    if args.jobs > 1 and len(files) > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            futures = [pool.submit(one, path) for path in files]
            for path, fut in zip(files, futures):
                try:
                    outcomes.append((path, fut.result(), None))
                except (InvalidInstanceError, InconsistentAnswerError,
                        GuardError) as exc:
                    outcomes.append((path, None, exc))
    else:
        for path in files:
            try:
                outcomes.append((path, one(path), None))
            except (InvalidInstanceError, InconsistentAnswerError,
                    GuardError) as exc:
                outcomes.append((path, None, exc))

    code = EXIT_OK
    show_path = len(files) > 1
    for path, result, exc in outcomes:
        if exc is not None:
            print(f"error: {path}: {exc}", file=err)
            if code == EXIT_OK:
                code = _exit_code_for(exc)
            continue
        lines, verify, digest, elapsed = result
        if show_path:
            print(f"file {path}", file=out)
        for line in lines:
            print(line, file=out)
        if args.verify:
            print(f"verify {verify}", file=out)
        _report(err, args.command, digest, elapsed, verify)
        if verify == "DISAGREE" and code == EXIT_OK:
            code = EXIT_DISAGREE
    return code


def _interactive_guess(n, out, inp):
    state = GuessState.initial(n)
    while state.uncertainty > 0:
        p = choose_question(state)
        print(" ".join(map(str, p)), file=out, flush=True)
        line = inp.readline()
        if not line:
            raise InvalidInstanceError("referee reply stream ended early")
        parts = line.split()
        if len(parts) != n:
            raise InvalidInstanceError("reply must carry one sign per position")
        try:
            ans = [int(tok) for tok in parts]
        except ValueError as exc:
            raise InvalidInstanceError("reply signs must be -1, 0 or 1") from exc
        state = apply_answer(state, p, ans)
    print("FOUND " + " ".join(map(str, state.solved_permutation())),
          file=out, flush=True)


def _run_guess(args, out, err, inp):
    n = args.n
    if n < 1:
        raise InvalidInstanceError("n >= 1 required")
    started = time.perf_counter()
    if args.interactive:
        _interactive_guess(n, out, inp)
        digest = hashlib.sha256(f"interactive n={n}".encode()).hexdigest()
        _report(err, "guess", digest, time.perf_counter() - started, None)
        return EXIT_OK
    if args.mode == "fixed":
        if not args.secret:
            raise InvalidInstanceError("fixed mode requires --secret")
        try:
            secret = [int(tok) for tok in args.secret.split()]
        except ValueError as exc:
            raise InvalidInstanceError("--secret must hold integers") from exc
        if len(secret) != n:
            raise InvalidInstanceError("--secret must list n values")
        referee = FixedReferee(secret)
    else:
        referee = AdversarialReferee(n)
    found, questions = play(referee, n)
    print("permutation " + " ".join(map(str, found)), file=out)
    print(f"questions {questions}", file=out)
    verify = None
    if args.verify:
        ok = all(tuple(answer_for_secret(found, list(p))) == ans
                 for p, ans in referee.history)
        if args.mode == "fixed":
            ok = ok and found == referee.secret
        verify = "agree" if ok else "DISAGREE"
        print(f"verify {verify}", file=out)
    digest = hashlib.sha256(
        f"n={n} mode={args.mode} secret={args.secret}".encode()).hexdigest()
    _report(err, "guess", digest, time.perf_counter() - started, verify)
    return EXIT_DISAGREE if verify == "DISAGREE" else EXIT_OK


def run(argv, stdout=None, stderr=None, stdin=None) -> int:
    """Execute one command line; returns the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    inp = stdin if stdin is not None else sys.stdin
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    try:
        if args.command == "guess":
            return _run_guess(args, out, err, inp)
        return _run_files(args, out, err)
    except (InvalidInstanceError, InconsistentAnswerError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except GuardError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_GUARD


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
