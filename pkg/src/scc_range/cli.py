"""``scc-range`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 infeasible construction, 4 construction failed its own evaluation check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as C
from . import oracle as O
from . import rules as R
from .core import Profile, codec_emit, codec_parse, format_set, relabel_alternatives

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_SELFCHECK = 0, 1, 2, 3, 4

SET_BUILDERS = {
    "pareto": C.construct_pareto,
    "borda": C.construct_borda,
    "plurality": C.construct_plurality,
    "top_cycle": C.construct_top_cycle,
}
SIZE_BUILDERS = {
    "maximin": C.construct_maximin,
    "copeland": C.construct_copeland,
}


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scc-range", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    def target(sp):
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--set", type=_int_list, help="comma-separated alternative ids, e.g. 0,2,4")
        g.add_argument("--size", type=int, help="target choice-set cardinality")

    sp = sub.add_parser("eval", help="evaluate a rule on a profile file")
    sp.add_argument("--rule", required=True, choices=R.RULES)
    sp.add_argument("--profile", required=True, help="profile file, or - for standard input")
    sp.add_argument("--ballots", type=_int_list, help="approval counts b_1,...,b_n")
    fmt(sp)

    sp = sub.add_parser("construct", help="emit a witness profile")
    sp.add_argument("--rule", required=True, choices=sorted([*SET_BUILDERS, *SIZE_BUILDERS, "approval"]))
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    target(sp)
    fmt(sp)

    sp = sub.add_parser("range", help="enumerate the achievable choice sets of a rule")
    sp.add_argument("--rule", required=True, choices=O.RANGE_RULES)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--mode", choices=O.MODES, default="anonymous")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--override-guards", action="store_true")
    fmt(sp)

    sp = sub.add_parser("verify", help="run the range theorem checklist")
    sp.add_argument("--m-max", type=int, default=5)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--workers", type=int, default=1)
    fmt(sp)

    sp = sub.add_parser("min-gauge", help="smallest approval gauge realizing a set")
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--override-guards", action="store_true")
    target(sp)
    fmt(sp)
    return p


def _read_profile(path: str) -> Profile:
    if path == "-":
        return codec_parse(sys.stdin.read())
    with open(path) as fh:
        return codec_parse(fh.read())


def _target(args) -> list[int]:
    if args.set is not None:
        if not args.set:
            raise UsageError("--set: the target set must be non-empty")
        return sorted(set(args.set))
    if not 1 <= args.size <= args.m:
        raise UsageError(f"--size: expected 1 <= size <= m={args.m}, got {args.size}")
    return list(range(args.size))


def _emit(args, text: str, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    u = _read_profile(args.profile)
    if args.rule == "approval" and args.ballots is None:
        raise UsageError("--ballots is required for --rule approval")
    ballots = args.ballots if args.rule == "approval" else None
    try:
        choice = R.evaluate(args.rule, u, ballots)
        scores = R.scores(args.rule, u, ballots)
    except ValueError as exc:
        raise UsageError(f"--ballots: {exc}") from None
    text = f"rule: {args.rule}\nchoice: {format_set(choice)}\n"
    if scores is not None:
        text += "scores: " + " ".join(str(int(s)) for s in scores) + "\n"
    payload = {"rule": args.rule, "m": u.m, "n": u.n, "choice": sorted(choice),
               "scores": None if scores is None else [int(s) for s in scores]}
    _emit(args, text, payload)
    return EXIT_OK


def _build(rule: str, m: int, n: int, target: list[int], by_size: bool):
    """Witness profile (and ballots for approval) plus the set it must evaluate to."""
    if rule == "approval":
        u, b = C.construct_approval(m, n, target)
        return u, b, frozenset(target)
    if rule in SET_BUILDERS:
        return SET_BUILDERS[rule](m, n, target), None, frozenset(target)
    u = SIZE_BUILDERS[rule](m, n, len(target))
    if by_size:
        return u, None, None
    # relabel the builder's winners onto the requested set
    winners = sorted(R.evaluate(rule, u))
    rest = [x for x in range(m) if x not in winners]
    others = [x for x in range(m) if x not in target]
    perm = [0] * m
    for src, dst in zip(winners + rest, target + others):
        perm[src] = dst
    return relabel_alternatives(u, perm), None, frozenset(target)


def cmd_construct(args) -> int:
    target = _target(args)
    if target[-1] >= args.m or target[0] < 0:
        raise UsageError(f"--set: ids must lie in 0..{args.m - 1}")
    try:
        u, ballots, want = _build(args.rule, args.m, args.n, target, args.set is None)
    except C.Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    got = R.evaluate(args.rule, u, ballots)
    ok = len(got) == len(target) if want is None else got == want
    if not ok:
        print(f"self-check failed: {args.rule} selects {format_set(got)}", file=sys.stderr)
        return EXIT_SELFCHECK
    text = codec_emit(u)
    if ballots is not None:
        text += "ballots: " + ",".join(map(str, ballots)) + "\n"
    payload = {"rule": args.rule, "m": u.m, "n": u.n, "profile": codec_emit(u),
               "ballots": None if ballots is None else list(ballots), "choice": sorted(got)}
    _emit(args, text, payload)
    print(f"{args.rule} choice: {format_set(got)}", file=sys.stderr)
    return EXIT_OK


def cmd_range(args) -> int:
    rep = O.range_report(args.rule, args.m, args.n, args.mode,
                         workers=args.workers, override_guards=args.override_guards)
    lines = [f"rule: {rep.rule}  m={rep.m}  n={rep.n}  mode={rep.mode}",
             "sizes: " + format_set(rep.sizes)]
    for k, u in rep.achievable.items():
        rows = " | ".join(" ".join(map(str, o)) for o in u.orderings)
        lines.append(f"{format_set(O.set_of(k)):<14} {rows}")
    _emit(args, "\n".join(lines) + "\n", rep.to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = O.verify_claims(args.m_max, args.n_max, workers=args.workers)
    _emit(args, report.to_text(), report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_min_gauge(args) -> int:
    target = _target(args)
    g, u, b = O.min_gauge_witness(args.m, args.n, target, override_guards=args.override_guards)
    text = f"min gauge: {g}\n" + codec_emit(u) + "ballots: " + ",".join(map(str, b)) + "\n"
    _emit(args, text, {"m": args.m, "n": args.n, "set": target, "gauge": g,
                       "profile": codec_emit(u), "ballots": list(b)})
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "construct": cmd_construct, "range": cmd_range,
            "verify": cmd_verify, "min-gauge": cmd_min_gauge}


def execute(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError, OSError, O.GuardExceeded) as exc:
        print(f"scc-range {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(execute())


if __name__ == "__main__":
    main()
