"""Command-line interface.

Reports are lines of the form ``key: value``.  Exit status: 0 when the
check or statement holds, 1 when it fails (a ``reason:`` line says why),
2 for malformed input or arguments, 3 when the enumerator hits its
candidate limit.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from circleweights import document
from circleweights.enumeration import SearchSpace, enumerate_consistent, question_failures
from circleweights.errors import (
    CircleWeightsError,
    InfeasiblePairingError,
    ParityError,
    SearchLimitExceeded,
)
from circleweights.generators import complex_projective, product, reverse_orientation, sphere
from circleweights.index import (
    closed_form_coefficient,
    coefficient_terms,
    contribution_series,
    default_order,
    exact_constancy,
    signature_series,
)
from circleweights.model import validate
from circleweights.theorems import (
    build_pairing,
    check_component_balance,
    check_min_weight_balance,
    check_parity,
    check_point_bound,
    pairing_violations,
)

OK, FAIL, BAD_INPUT, LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load_valid(path):
    d, parts = document.load(path)
    report = validate(d)
    if not report.ok:
        for v in report.violations:
            print(f"violation: {v.kind} {v.message}")
        raise UsageError("dataset is invalid")
    return d, parts, report


def cmd_check(args) -> int:
    d, _, report = _load_valid(args.file)
    print("valid: yes")
    print(f"points: {len(d)}")
    if report.gcd is not None:
        print(f"weight_gcd: {report.gcd}")
    print(f"degree_bound: {default_order(d)}")
    if args.trunc is not None:
        s = signature_series(d, args.trunc)
        nz = next((k for k in range(1, s.order + 1) if s[k]), None)
        print(f"series_order: {args.trunc}")
        print(f"series_first_nonzero: {nz if nz is not None else 'none'}")
    v = exact_constancy(d)
    print(f"verdict: {'constant' if v.is_constant else 'not-constant'}")
    if v.is_constant:
        print(f"constant: {v.constant_value}")
        print("first_failing_order: none")
        return OK
    print(f"first_failing_order: {v.first_failing_order}")
    print(f"reason: not-constant first_failing_order={v.first_failing_order}")
    return FAIL


def cmd_signature(args) -> int:
    d, _, _ = _load_valid(args.file)
    v = exact_constancy(d)
    if not v.is_constant:
        print(f"reason: not-constant first_failing_order={v.first_failing_order}")
        return FAIL
    print(f"signature: {v.constant_value}")
    return OK


def cmd_coeff(args) -> int:
    d, _, _ = _load_valid(args.file)
    try:
        p = d.point(args.point)
    except KeyError as e:
        raise UsageError(e.args[0])
    if args.w < 1:
        raise UsageError("--w must be positive")
    order = args.trunc if args.trunc is not None else max(default_order(d), args.w)
    if order < args.w:
        raise UsageError(f"--trunc {order} is below the requested order {args.w}")
    closed = closed_form_coefficient(p, args.w)
    series = contribution_series(p, order)[args.w]
    print(f"closed_form: {closed}")
    print(f"series: {series}")
    for js, term in coefficient_terms(p, args.w):
        print(f"term: j={','.join(map(str, js))} value={term}")
    if closed != series:
        print("reason: internal-inconsistency closed_form != series")
        return FAIL
    return OK


def cmd_pair(args) -> int:
    d, parts, _ = _load_valid(args.file)
    try:
        pairing = build_pairing(d, parts)
    except ParityError as e:
        print(f"reason: parity value={e.value}")
        return FAIL
    except InfeasiblePairingError as e:
        comp = "none" if e.component is None else e.component
        print(f"reason: infeasible value={e.value} component={comp}")
        return FAIL
    problems = pairing_violations(d, pairing, parts)
    for a, b in pairing.pairs:
        print(f"pair: {a.value} {a} {b}")
    for w in pairing.global_odd_values:
        print(f"scope: value={w} distinct-points-only")
    if problems:
        for msg in problems:
            print(f"problem: {msg}")
        print("reason: internal-inconsistency pairing failed validation")
        return FAIL
    print(f"pairs: {len(pairing)}")
    return OK


def cmd_balance(args) -> int:
    d, parts, _ = _load_valid(args.file)
    if not d.points:
        raise UsageError("minimum weight of an empty dataset is undefined")
    r = check_min_weight_balance(d)
    print(f"min_weight: {r.weight_value}")
    print(f"plus: {r.plus_count}")
    print(f"minus: {r.minus_count}")
    print(f"balanced: {_yn(r.balanced)}")
    failed = [] if r.balanced else [f"min-weight value={r.weight_value}"]
    for part in parts:
        for c in check_component_balance(d, part):
            print(f"component: value={c.weight_value} index={c.component} "
                  f"plus={c.plus_count} minus={c.minus_count} balanced={_yn(c.balanced)}")
            if not c.balanced:
                failed.append(f"component value={c.weight_value} index={c.component}")
    for w in d.weight_values():
        total, even = check_parity(d, w)
        print(f"parity: value={w} total={total} even={_yn(even)}")
        if not even:
            failed.append(f"parity value={w}")
    if failed:
        print(f"reason: unbalanced {'; '.join(failed)}")
        return FAIL
    return OK


def cmd_bound(args) -> int:
    d, _, _ = _load_valid(args.file)
    try:
        d.point(args.point)
    except KeyError as e:
        raise UsageError(e.args[0])
    b = check_point_bound(d, args.w, args.point)
    print(f"own: {b.own}")
    print(f"others: {b.others}")
    print(f"holds: {_yn(b.holds)}")
    if not b.holds:
        print(f"reason: bound-violated value={args.w} point={args.point}")
        return FAIL
    return OK


def cmd_gen(args) -> int:
    if args.kind == "sphere":
        d = sphere(args.weights)
    elif args.kind == "cpn":
        d = complex_projective(args.n, args.a if args.a is not None else range(args.n + 1))
    elif args.kind == "product":
        d1, _, _ = _load_valid(args.first)
        d2, _, _ = _load_valid(args.second)
        d = product(d1, d2)
    else:
        d, _, _ = _load_valid(args.file)
        d = reverse_orientation(d)
    print(document.dumps(d))
    return OK


def cmd_enum(args) -> int:
    space = SearchSpace(args.n, args.points, args.max_weight)
    count = 0
    candidates = 0
    try:
        for d in enumerate_consistent(space, workers=args.workers, max_candidates=args.limit):
            count += 1
            line = json.dumps(document.to_obj(d), separators=(",", ":"))
            if args.question_scan:
                failing = question_failures(d)
                if failing:
                    candidates += 1
                    print(f"candidate: {line} failing={','.join(map(str, failing))}")
            else:
                print(f"dataset: {line}")
    except SearchLimitExceeded as e:
        print(f"count: {count}")
        print(f"reason: limit examined={e.examined} partitions_done={e.partitions_done}")
        return LIMIT
    print(f"count: {count}")
    if args.question_scan:
        print(f"candidates: {candidates}")
        if candidates and space.n <= 2:
            print("note: candidates in dimension <= 4 cannot come from a manifold")
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="circleweights",
        description="Fixed-point data of circle actions on oriented manifolds.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate and decide constancy of the signature expression")
    p.add_argument("file")
    p.add_argument("--trunc", type=int, help="also report the series truncated at this order")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("signature", help="print the signature")
    p.add_argument("file")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("coeff", help="coefficient of t^w in one point's contribution")
    p.add_argument("file")
    p.add_argument("--point", required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--trunc", type=int)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("pair", help="pair up all weight occurrences")
    p.add_argument("file")
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("balance", help="minimal-weight, component and parity balance")
    p.add_argument("file")
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("bound", help="N_q(w) <= sum of N_p(w) over other points, odd w")
    p.add_argument("file")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--point", required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("gen", help="emit a generated dataset document")
    gsub = p.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("sphere")
    g.add_argument("--weights", type=_int_list, required=True)
    g = gsub.add_parser("cpn")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--a", type=_int_list, help="n+1 distinct exponents (default 0..n)")
    g = gsub.add_parser("product")
    g.add_argument("first")
    g.add_argument("second")
    g = gsub.add_parser("reverse")
    g.add_argument("file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enum", help="enumerate consistent datasets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--question-scan", action="store_true",
                   help="report datasets whose even weights need a same-point pair")
    p.add_argument("--limit", type=int, help="maximum number of candidates to examine")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enum)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = _show_warning
        try:
            return args.func(args)
        except UsageError as e:
            print(f"error: {e}", file=sys.stderr)
            return BAD_INPUT
        except (CircleWeightsError, ValueError) as e:
            print(f"error: {e}", file=sys.stderr)
            return BAD_INPUT


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
