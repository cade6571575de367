"""Command-line front end.

Exit status: 0 on success, 2 when a verification fails, 1 on usage or
resource errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from collections import Counter
from typing import Sequence

from .config import LimitExceeded, RunConfig, default_max_tuples, resolve_threads
from .duality import (branch_monomials, branch_tuples, dual_monomial, gap_tuple, halved_snake,
                      verify_branching, verify_corner_transport, verify_decomposition,
                      verify_dominance, verify_g_paths, verify_gap0, verify_gkr,
                      verify_tensor_square)
from .lattice import Character, fold_char
from .paths import enum_paths_A, enum_paths_B
from .segments import (MultiSegment, NopSetSpec, parse_segments, verify_ab, verify_determinant,
                       verify_identity)
from .snakes import (SnakeA, SnakeB, char_snake, format_snake, nop_tuples, parse_snake,
                     qchar_snake, twisted_char_snake, twisted_qchar_snake)
from .suite import CRITERIA, run_suite

EXIT_OK, EXIT_ERROR, EXIT_FAILED = 0, 1, 2

SNAKE_HELP = 'snake points "i:k,i:k,..." in increasing order'
SEGMENT_HELP = 'multisegment "l-r,l-r,..." (negative ends as "-2--1")'


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False)
    p.add_argument("--max-tuples", type=int, default=None,
                   help="cap on enumerated tuples (default 10^7 or $SNAKECHAR_MAX_TUPLES)")
    p.add_argument("--threads", default="1", help="worker threads, or 'auto'")
    p.add_argument("--output", choices=("json", "csv", "pretty"), default="json")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="snakechar", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    verbs = parser.add_subparsers(dest="verb", metavar="VERB", parser_class=_Parser)
    verbs.required = True

    p = verbs.add_parser("paths", parents=[common], help="list the paths of one index")
    p.add_argument("--type", choices=("A", "B"), required=True)
    p.add_argument("--m", type=int, help="columns (type A)")
    p.add_argument("--n", type=int, help="rank (type B)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    for verb, text in (("qchar", "q-character as a multiset of monomials"),
                       ("char", "usual character")):
        p = verbs.add_parser(verb, parents=[common], help=text)
        p.add_argument("--type", choices=("A", "B"), required=True)
        p.add_argument("--rank", type=int, required=True,
                       help="Lie rank: A_rank has rank+1 columns, B_rank has rank n")
        p.add_argument("--snake", required=True, help=SNAKE_HELP)

    p = verbs.add_parser("fold", parents=[common],
                         help="twisted q-character of an A_{2n-1} snake with indices <= n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--snake", required=True, help=SNAKE_HELP)

    for verb, text in (("dual", "dual monomial and its twisted character"),
                       ("gap", "NOP tuples of a B_n snake grouped by gap"),
                       ("branch", "branching shifts and monomials")):
        p = verbs.add_parser(verb, parents=[common], help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--snake", required=True, help=SNAKE_HELP)

    p = verbs.add_parser("verify", help="run one identity check or the whole suite")
    checks = p.add_subparsers(dest="theorem", metavar="CHECK", parser_class=_Parser)
    checks.required = True
    for name, text in (("branching", "folded B_n character equals the branched sum"),
                       ("dominance", "dual character dominated by the folded one"),
                       ("gap0", "gap-0 tuples are exactly the F-images"),
                       ("decomposition", "fibers over right branches match window sets"),
                       ("tensor-square", "B_n character below the squared dual")):
        c = checks.add_parser(name, parents=[common], help=text)
        c.add_argument("--n", type=int, required=True)
        c.add_argument("--snake", required=True, help=SNAKE_HELP)
    for name, text in (("identity", "left and right shifted sums agree"),
                       ("determinant", "determinant equals the path character")):
        c = checks.add_parser(name, parents=[common], help=text)
        c.add_argument("--n", type=int, required=True)
        c.add_argument("--segments", required=True, help=SEGMENT_HELP)
        if name == "identity":
            c.add_argument("--M", type=int, required=True)
    c = checks.add_parser("ab", parents=[common], help="A-set and B-set statistics agree")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--x0", type=_ints, required=True)
    c.add_argument("--xn", type=_ints, required=True)
    c.add_argument("--M", type=int, required=True)
    c = checks.add_parser("gweight", parents=[common], help="map G on one path set")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--i", type=int, required=True)
    c.add_argument("--k", type=int, required=True, help="paths of P^B_{i,2k}")
    c = checks.add_parser("gkr", parents=[common], help="KR dominance in the twisted direction")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--i", type=int, required=True)
    c.add_argument("--T", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c = checks.add_parser("corners", parents=[common], help="corner transport under F")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--kmax", type=int, default=10)
    c = checks.add_parser("suite", parents=[common], help="every acceptance check")
    c.add_argument("--only", type=_ints, default=None, help="criterion numbers, e.g. 1,4,5")

    p = verbs.add_parser("bench", parents=[common], help="time the suite criteria")
    p.add_argument("--only", type=_ints, default=None)
    return parser


# rendering

def _character_rows(c: Character) -> list[list]:
    header = [f"w{j}" for j in range(1, c.rank + 1)] + ["mult"]
    return [header] + [list(k) + [v] for k, v in c]


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _pretty_character(c: Character) -> str:
    lines = [f"{c.family.value}{c.rank} character, {len(c)} weights, mass {c.mass()}"]
    lines += [f"  {list(k)}  x{v}" for k, v in c]
    return "\n".join(lines) + "\n"


def _monomial_terms(monomials) -> list:
    counts = Counter(monomials)
    return sorted(counts.items(), key=lambda kv: kv[0].exps)


def _render(cfg: RunConfig, obj, rows=None, pretty: str | None = None) -> str:
    if cfg.output == "csv":
        if rows is None:
            raise UsageError("csv output is not available for this command")
        return _csv(rows)
    if cfg.output == "pretty":
        return pretty if pretty is not None else _json(obj)
    return _json(obj)


def _report_pretty(r) -> str:
    status = "OK" if r.ok else "FAILED"
    lines = [f"{r.theorem} {r.params}: {status}",
             f"  equal={r.equal} lhs_mass={r.lhs_mass} rhs_mass={r.rhs_mass}"]
    for k, v in r.extra.items():
        if not isinstance(v, list):
            lines.append(f"  {k}={v}")
    if r.difference:
        lines.append(f"  difference: {len(r.difference)} entries")
    return "\n".join(lines) + "\n"


def _report_rows(r) -> list[list]:
    rows = [["entry", "mult"]]
    for d in r.difference:
        rows.append([json.dumps(d[:-1], separators=(",", ":")), d[-1]] if isinstance(d, list)
                    else [json.dumps(d, separators=(",", ":")), ""])
    return rows


# commands

def _snake_a(rank: int, text: str) -> SnakeA:
    return SnakeA(rank + 1, parse_snake(text))


def _snake_b(n: int, text: str) -> SnakeB:
    return SnakeB(n, parse_snake(text))


def cmd_paths(args, cfg):
    if args.type == "A":
        if args.m is None:
            raise UsageError("paths --type A needs --m")
        paths = enum_paths_A(args.m, args.i, args.k)
        rows = [["ys"]] + [[" ".join(map(str, p.ys))] for p in paths]
    else:
        if args.n is None:
            raise UsageError("paths --type B needs --n")
        paths = enum_paths_B(args.n, args.i, args.k)
        rows = [["ys", "zs"]] + [[json.dumps(p.to_json()["ys"]), json.dumps(p.to_json()["zs"])]
                                 for p in paths]
    records = [p.to_json() for p in paths]
    pretty = "".join(f"{json.dumps(r)}\n" for r in records)
    return _render(cfg, {"count": len(records), "paths": records}, rows, pretty), EXIT_OK


def _snake_for(args):
    return _snake_a(args.rank, args.snake) if args.type == "A" else _snake_b(args.rank, args.snake)


def cmd_qchar(args, cfg):
    s = _snake_for(args)
    terms = _monomial_terms(qchar_snake(s, cfg.max_tuples))
    obj = {"snake": format_snake(s), "type": args.type, "rank": args.rank,
           "terms": [[m.to_json(), c] for m, c in terms]}
    rows = [["monomial", "mult"]] + [[str(m), c] for m, c in terms]
    pretty = "".join(f"{c} x {m}\n" for m, c in terms)
    return _render(cfg, obj, rows, pretty), EXIT_OK


def cmd_char(args, cfg):
    c = char_snake(_snake_for(args), cfg.max_tuples)
    return _render(cfg, c.to_json(), _character_rows(c), _pretty_character(c)), EXIT_OK


def cmd_fold(args, cfg):
    s = SnakeA(2 * args.n, parse_snake(args.snake))
    terms = _monomial_terms(twisted_qchar_snake(s, cfg.max_tuples))
    c = twisted_char_snake(s, cfg.max_tuples)
    obj = {"snake": format_snake(s), "n": args.n,
           "terms": [[m.to_json(), k] for m, k in terms], "character": c.to_json()}
    pretty = "".join(f"{k} x {m}\n" for m, k in terms) + _pretty_character(c)
    return _render(cfg, obj, _character_rows(c), pretty), EXIT_OK


def cmd_dual(args, cfg):
    s = _snake_b(args.n, args.snake)
    half = halved_snake(s)
    c = twisted_char_snake(half, cfg.max_tuples)
    m = dual_monomial(s)
    obj = {"snake": format_snake(s), "n": args.n, "dual_monomial": m.to_json(),
           "halved_snake": format_snake(half), "character": c.to_json(),
           "folded_character": fold_char(char_snake(half, cfg.max_tuples)).to_json()}
    pretty = f"dual monomial {m}\nhalved snake {format_snake(half)}\n" + _pretty_character(c)
    return _render(cfg, obj, _character_rows(c), pretty), EXIT_OK


def cmd_gap(args, cfg):
    s = _snake_b(args.n, args.snake)
    counts = Counter(gap_tuple(t) for t in nop_tuples(s, cfg.max_tuples))
    by_gap = sorted(counts.items())
    obj = {"snake": format_snake(s), "n": args.n, "tuples": sum(counts.values()),
           "by_gap": [[g, c] for g, c in by_gap]}
    rows = [["gap", "tuples"]] + [[g, c] for g, c in by_gap]
    pretty = "".join(f"gap {g}: {c}\n" for g, c in by_gap)
    return _render(cfg, obj, rows, pretty), EXIT_OK


def cmd_branch(args, cfg):
    s = _snake_b(args.n, args.snake)
    tuples = branch_tuples(s)
    monos = branch_monomials(s)
    obj = {"snake": format_snake(s), "n": args.n,
           "branches": [{"shifts": list(t), "monomial": m.to_json()} for t, m in zip(tuples, monos)]}
    rows = [["shifts", "monomial"]] + [[" ".join(map(str, t)), str(m)] for t, m in zip(tuples, monos)]
    pretty = "".join(f"{list(t)}  {m}\n" for t, m in zip(tuples, monos))
    return _render(cfg, obj, rows, pretty), EXIT_OK


def _verify_one(args, cfg):
    name = args.theorem
    if name in ("branching", "dominance", "gap0", "decomposition", "tensor-square"):
        s = _snake_b(args.n, args.snake)
        if name == "branching":
            return verify_branching(s, cfg.max_tuples, cfg.threads)
        fn = {"dominance": verify_dominance, "gap0": verify_gap0,
              "decomposition": verify_decomposition, "tensor-square": verify_tensor_square}[name]
        return fn(s, cfg.max_tuples)
    if name in ("identity", "determinant"):
        ms = MultiSegment(args.n, parse_segments(args.segments))
        if name == "identity":
            return verify_identity(ms, args.M, cfg.max_tuples, cfg.threads)
        return verify_determinant(ms, cfg.max_tuples)
    if name == "ab":
        return verify_ab(NopSetSpec(args.n, args.x0, args.xn, args.M), cfg.max_tuples)
    if name == "gweight":
        return verify_g_paths(args.n, args.i, args.k)
    if name == "gkr":
        return verify_gkr(args.n, args.i, args.T, args.k, cfg.max_tuples)
    if name == "corners":
        return verify_corner_transport(args.n, range(-args.kmax, args.kmax + 1))
    raise UsageError(f"unknown check {name!r}")


def cmd_verify(args, cfg):
    if args.theorem == "suite":
        return _suite(args, cfg)
    r = _verify_one(args, cfg)
    out = _render(cfg, r.to_json(), _report_rows(r), _report_pretty(r))
    return out, EXIT_OK if r.ok else EXIT_FAILED


def _suite(args, cfg):
    only = set(args.only) if args.only else None
    if only and not only <= set(CRITERIA):
        raise UsageError(f"unknown criteria {sorted(only - set(CRITERIA))}")
    results = run_suite(cfg.threads, cfg.seed, only)
    ok = all(r.ok for r in results)
    obj = {"seed": cfg.seed, "ok": ok, "criteria": [r.to_json() for r in results]}
    rows = [["criterion", "name", "ok", "checked", "digest"]] + [
        [r.number, r.name, r.ok, r.checked, r.digest] for r in results]
    pretty = "".join(f"[{'PASS' if r.ok else 'FAIL'}] {r.number}: {r.name} ({r.checked} checks)\n"
                     for r in results)
    return _render(cfg, obj, rows, pretty), EXIT_OK if ok else EXIT_FAILED


def cmd_bench(args, cfg):
    only = set(args.only) if args.only else None
    timings = []
    for number in CRITERIA:
        if only and number not in only:
            continue
        start = time.perf_counter()
        res = CRITERIA[number](cfg.threads, cfg.seed)
        timings.append({"criterion": number, "name": res.name, "checked": res.checked,
                        "seconds": round(time.perf_counter() - start, 3), "ok": res.ok})
    rows = [["criterion", "name", "checked", "seconds"]] + [
        [t["criterion"], t["name"], t["checked"], t["seconds"]] for t in timings]
    pretty = "".join(f"{t['criterion']}: {t['seconds']:.2f}s  {t['name']}\n" for t in timings)
    return _render(cfg, {"threads": cfg.threads, "timings": timings}, rows, pretty), EXIT_OK


COMMANDS = {"paths": cmd_paths, "qchar": cmd_qchar, "char": cmd_char, "fold": cmd_fold,
            "dual": cmd_dual, "gap": cmd_gap, "branch": cmd_branch, "verify": cmd_verify,
            "bench": cmd_bench}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(
            max_tuples=args.max_tuples if args.max_tuples is not None else default_max_tuples(),
            threads=resolve_threads(args.threads),
            output=args.output,
            seed=args.seed,
        )
        text, code = COMMANDS[args.verb](args, cfg)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except LimitExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_ERROR
    stdout.write(text)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:  # --help exits through argparse
        return int(exc.code or 0)
