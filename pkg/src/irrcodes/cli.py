"""Command line interface.

Exit codes: 0 success, 1 usage or parameter error, 2 verification mismatch.
"""

import argparse
import json
import sys

from .codes import analyze_code, weight_distribution_bruteforce, weight_distribution_trace
from .field import is_prime
from .predict import NotClassifiable, classify_dim2, classify_from_exponent
from .report import ReportRecord, coset_table, render_table, sweep

USAGE_ERROR = 1
MISMATCH = 2


class ParameterError(Exception):
    pass


def _check_pt(p, t):
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if t < 1:
        raise ParameterError(f"t={t} must be >= 1")
    return p**t


def cmd_predict(args):
    q = _check_pt(args.p, args.t)
    if (args.n is None) == (args.a is None):
        raise ParameterError("give exactly one of --n and --a")
    if args.n is not None:
        if args.k != 2:
            raise ParameterError("--n classifies dimension one or two codes; use --k 2")
        N = q * q - 1
        if args.n < 1 or N % args.n:
            raise ParameterError(f"n={args.n} does not divide q^2-1={N} (q={q})")
        pred = classify_dim2(q, args.n)
    else:
        pred = classify_from_exponent(args.p, args.t, args.k, args.a)

    checked = False
    if args.check:
        if pred.a is not None:
            a = pred.a
        else:
            # any exponent with gcd(q^2-1, a) = (q^2-1)/n gives a code of length n
            a = (q * q - 1) // pred.n
        spec = analyze_code(args.p, args.t, pred.k, a)
        found = weight_distribution_bruteforce(spec)
        if found != pred.distribution:
            print(f"mismatch: predicted {pred.enumerator}, enumerated {found.enumerator()}", file=sys.stderr)
            print(spec.describe(), file=sys.stderr)
            return MISMATCH
        checked = True
    _emit(ReportRecord.from_prediction(pred, checked), args.json)
    return 0


def cmd_enumerate(args):
    _check_pt(args.p, args.t)
    if args.k < 1:
        raise ParameterError(f"k={args.k} must be >= 1")
    spec = analyze_code(args.p, args.t, args.k, args.a)
    found = {}
    if args.method in ("generator", "both"):
        found["generator"] = weight_distribution_bruteforce(spec)
    if args.method in ("trace", "both"):
        found["trace"] = weight_distribution_trace(spec)
    dists = list(found.values())
    if any(d != dists[0] for d in dists):
        for name, d in found.items():
            print(f"{name}: {d.enumerator()}", file=sys.stderr)
        print(spec.describe(), file=sys.stderr)
        return MISMATCH
    try:
        case = classify_from_exponent(args.p, args.t, args.k, args.a).case
    except NotClassifiable:
        case = None
    rec = ReportRecord(spec.q, spec.p, spec.t, spec.k, spec.a, spec.n, spec.u, spec.dimension,
                       case, dists[0], True)
    _emit(rec, args.json)
    return 0


def cmd_verify(args):
    if args.max_q < 2:
        raise ParameterError(f"--max-q={args.max_q} must be >= 2")
    if args.k < 1:
        raise ParameterError(f"k={args.k} must be >= 1")
    res = sweep(args.max_q, args.k, jobs=args.jobs)
    if args.json:
        print(json.dumps(res.to_dict()))
    else:
        for q, st in res.per_q.items():
            extra = f" unclassified={st['unclassified']}" if st["unclassified"] else ""
            print(f"q={q:<4} codes={st['codes']:<6} A={st['A']:<5} B={st['B']:<5} C={st['C']:<5}{extra}")
        print(f"total codes={res.codes} A={res.cases['A']} B={res.cases['B']} C={res.cases['C']} "
              f"unclassified={res.unclassified} mismatches={len(res.mismatches)}")
        for m in res.mismatches:
            print("MISMATCH " + m)
    return MISMATCH if res.mismatches else 0


def cmd_table(args):
    _check_pt(args.p, args.t)
    rows = coset_table(args.p, args.t)
    if args.json:
        print(json.dumps([r.to_dict() for r in rows]))
    else:
        print(render_table(rows))
    return 0


def _emit(record, as_json):
    print(record.to_json() if as_json else record.to_text())


def build_parser():
    parser = argparse.ArgumentParser(
        prog="irrcodes",
        description="Weight distributions of irreducible cyclic codes of dimension one or two.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=int, required=True, help="characteristic")
        sp.add_argument("--t", type=int, required=True, help="q = p^t")

    sp = sub.add_parser("predict", help="closed-form distribution from the length n or exponent a")
    common(sp)
    sp.add_argument("--n", type=int, help="code length, a divisor of q^2-1")
    sp.add_argument("--a", type=int, help="exponent: h_a is the minimal polynomial of gamma^-a")
    sp.add_argument("--k", type=int, default=2, help="extension degree when --a is given")
    sp.add_argument("--check", action="store_true", help="also confirm by enumeration")
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("enumerate", help="exact distribution by enumerating codewords")
    common(sp)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--method", choices=("generator", "trace", "both"), default="both")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="compare predictions with enumeration for every q <= max-q")
    sp.add_argument("--max-q", type=int, required=True)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("table", help="coset table of every dimension one or two code over GF(q)")
    common(sp)
    sp.set_defaults(func=cmd_table)

    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, ValueError, NotClassifiable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
