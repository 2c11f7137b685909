"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

import numpy as np

from .engines import (Report, b_kk, b_via_mutation_path, b_word, verify_all_prefixes,
                      verify_chain, verify_path_independence, verify_stabilization)
from .errors import IBoxError, ParseError
from .exmatrix import ExchangeMatrix
from .ibox import color_shift, effective_end, frozen_indices
from .problem import Problem, load_problem
from .randomgen import random_instance
from .signedword import signed_word_of_chain


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, default=_jsonable) + "\n"


def _jsonable(x):
    if isinstance(x, float):  # +/-inf sentinels
        return None
    if isinstance(x, np.integer):
        return int(x)
    raise TypeError(f"not JSON serializable: {type(x).__name__}")


def _ext(x):
    return x if isinstance(x, int) else ("+inf" if x > 0 else "-inf")


def info_json(problem: Problem) -> dict:
    chain = problem.chain
    fr, ex = frozen_indices(chain)
    boxes = []
    for k, bx in enumerate(chain.boxes, start=1):
        entry = bx.to_json()
        entry.update({"k": k, "envelope": list(chain.envelopes[k - 1]),
                      "effective_end": effective_end(chain, k),
                      "shift": _ext(color_shift(chain, k))})
        boxes.append(entry)
    return {"word": problem.word.to_json(), "chain": chain.to_json(),
            "range": list(chain.range), "boxes": boxes, "frozen": list(fr),
            "exchangeable": list(ex), "signed_word": signed_word_of_chain(chain).to_json()}


def info_text(problem: Problem) -> str:
    chain = problem.chain
    word = problem.word
    fr, ex = frozen_indices(chain)
    lines = [f"word [{word.start},{word.stop}]: " + " ".join(str(x) for x in word.letters),
             f"chain root={chain.root} ops={chain.ops or '-'} range=[{chain.range[0]},{chain.range[1]}]",
             f"{'k':>3}  {'box':<12}{'order':>5}  {'envelope':<10}{'eff':>4}  E  k[1]"]
    for k, bx in enumerate(chain.boxes, start=1):
        lo, hi = chain.envelopes[k - 1]
        op = chain.ops[k - 2] if k > 1 else "-"
        lines.append(f"{k:>3}  {str(bx):<12}{bx.order:>5}  {f'[{lo},{hi}]':<10}"
                     f"{effective_end(chain, k):>4}  {op}  {_ext(color_shift(chain, k))}")
    lines.append("K_fr = {" + ",".join(map(str, fr)) + "}")
    lines.append("K_ex = {" + ",".join(map(str, ex)) + "}")
    lines.append(f"signed word: {signed_word_of_chain(chain)}")
    return "\n".join(lines) + "\n"


def cmd_info(args) -> int:
    problem = load_problem(_read(args.problem))
    sys.stdout.write(_dump(info_json(problem)) if args.json else info_text(problem))
    return 0


def cmd_signed_word(args) -> int:
    problem = load_problem(_read(args.problem))
    sw = signed_word_of_chain(problem.chain)
    sys.stdout.write(_dump(sw.to_json()) if args.json else f"{sw}\n")
    return 0


def compute_matrix(problem: Problem, method: str):
    if method == "path":
        return b_via_mutation_path(problem.chain)
    if method == "word":
        return b_word(problem.chain), None
    if method == "kk":
        return b_kk(problem.chain), None
    raise ParseError(f"unknown method {method!r}")


def format_matrix(m: ExchangeMatrix, fmt: str, trace=None) -> str:
    if fmt == "csv":
        return m.to_csv()
    if fmt == "dot":
        return m.to_dot()
    obj = m.to_json()
    if trace is not None:
        obj = {"matrix": obj, "trace": [t.to_json() for t in trace]}
    return _dump(obj)


def cmd_bmatrix(args) -> int:
    problem = load_problem(_read(args.problem))
    m, trace = compute_matrix(problem, args.method)
    if args.trace and args.method != "path":
        raise ParseError("--trace is only available with --method path")
    sys.stdout.write(format_matrix(m, args.format, trace if args.trace else None))
    return 0


def _tamper(m: ExchangeMatrix) -> ExchangeMatrix:
    if m.entries.size:
        e = m.entries.copy()
        e[0, 0] += 1
        return ExchangeMatrix(m.rows, m.cols, e, m.symmetrizer)
    return ExchangeMatrix(m.rows, m.cols, m.entries, (m.symmetrizer[0] * 2,) + m.symmetrizer[1:])


def verify_problem(problem: Problem, stabilize=None, trials: int = 20, seed: int = 0,
                   tamper: bool = False) -> Report:
    chain = problem.chain
    report = verify_chain(chain, _tamper if tamper else None)
    report.extend(verify_path_independence(chain, trials, seed))
    if stabilize is not None:
        report.extend(verify_stabilization(chain, *stabilize))
    elif len(chain) > 1:
        report.extend(verify_all_prefixes(chain))
    return report


def run_random(n: int, seed: int, trials: int = 2, tamper: bool = False) -> dict:
    counts: dict = {}
    for t in range(n):
        rng = random.Random(f"{seed}:{t}")
        chain = random_instance(rng)
        problem = Problem(chain.word.cartan, chain.word, chain)
        report = verify_problem(problem, trials=trials, seed=t, tamper=tamper)
        for c in report.checks:
            counts[c.name] = counts.get(c.name, 0) + 1
        if not report.passed:
            return {"trials": n, "seed": seed, "passed": False, "failed_trial": t,
                    "counterexample": {"cartan": problem.cartan.to_json(),
                                       "word": problem.word.to_json(),
                                       "chain": chain.to_json()},
                    **report.to_json()}
    return {"trials": n, "seed": seed, "passed": True, "counts": counts}


def cmd_verify(args) -> int:
    if args.random is not None:
        out = run_random(args.random, args.seed, tamper=args.tamper)
        sys.stdout.write(_dump(out))
        return 0 if out["passed"] else 1
    if args.problem is None:
        raise ParseError("verify needs a problem file or --random N")
    problem = load_problem(_read(args.problem))
    report = verify_problem(problem, args.stabilize, args.trials, args.seed, args.tamper)
    out = report.to_json()
    if not report.passed:
        out["counterexample"] = problem.to_json()
    sys.stdout.write(_dump(out))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iboxchain", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="boxes, envelopes, frozen indices, signed word")
    p.add_argument("problem", help="problem JSON file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("bmatrix", help="exchange matrix of the chain")
    p.add_argument("problem")
    p.add_argument("--method", choices=("path", "word", "kk"), default="word")
    p.add_argument("--format", choices=("json", "csv", "dot"), default="json")
    p.add_argument("--trace", action="store_true", help="emit the move trace (path method)")
    p.set_defaults(func=cmd_bmatrix)

    p = sub.add_parser("signed-word", help="signed word of the chain")
    p.add_argument("problem")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_signed_word)

    p = sub.add_parser("verify", help="cross-check the matrix constructions")
    p.add_argument("problem", nargs="?")
    p.add_argument("--random", type=int, metavar="N", help="check N random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20, help="random move sequences per chain")
    p.add_argument("--stabilize", type=int, nargs=2, metavar=("S", "T"))
    p.add_argument("--tamper", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except IBoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
