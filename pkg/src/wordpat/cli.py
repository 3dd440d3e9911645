"""
Command line interface.

    wordpat dist --pattern 112 --k 2 --n 3
    wordpat series --avoid-strings 11,23 --k 3 --order 4 --y 0
    wordpat verify --pattern 212 --max-k 4 --max-n 8
    wordpat classify --length 3 --max-alphabet 3
    wordpat td --d 2

Output is canonical JSON (sorted keys, no whitespace) unless ``--format csv``.
Series always include the x^0 term, i.e. the empty word.

Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
3 resource guard exceeded.
"""
import argparse
import csv
import io
import json
import sys

from . import closedform, oracle, transfer, wilf
from .algebra import DEFAULT_ORDER
from .oracle import GuardExceeded
from .pattern import PatternSyntaxError, generate_td, parse_pattern, parse_patterns

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def dumps(record):
    return json.dumps(record, sort_keys=True, separators=(",", ":"))


def _patterns_arg(args):
    if args.pattern and args.patterns:
        raise UsageError("give --pattern or --patterns, not both")
    text = args.pattern or args.patterns
    if not text:
        raise UsageError("a pattern is required")
    return parse_patterns(text)


def _rows_csv(rows, header):
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    wr.writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_dist(args):
    ps = _patterns_arg(args)
    engine = args.engine
    if any(not p.is_subword for p in ps):
        engine = "oracle"
    if args.n < 0 or args.k < 1:
        raise UsageError("need n >= 0 and k >= 1")
    if engine == "oracle":
        dist = oracle.distribution(args.n, args.k, ps, workers=args.workers).as_list()
    else:
        dist = transfer.distribution(args.n, args.k, ps)
    params = {"patterns": [str(p) for p in ps], "k": args.k, "n": args.n}
    if args.format == "csv":
        return _rows_csv([(args.n, r, c) for r, c in enumerate(dist)], ["n", "r", "count"]), EXIT_OK
    return dumps({"command": "dist", "params": params, "engine": engine, "dist": dist}), EXIT_OK


def _family_series(args):
    fam = args.family
    if fam not in closedform.FAMILIES:
        raise UsageError(f"unknown family {fam!r}; choose from {', '.join(closedform.FAMILIES)}")
    if fam == "pattern123":
        return closedform.gf_123(args.k, args.order)
    if args.l is None:
        raise UsageError(f"family {fam} needs --l")
    if fam == "ones":
        return closedform.gf_ones(args.l, args.k, args.order)
    if fam == "ones-rise":
        return closedform.gf_ones_rise(args.l, args.k, args.order)
    if args.m is None:
        raise UsageError(f"family {fam} needs --m")
    if fam == "sandwich":
        return closedform.gf_sandwich(args.m, args.l, args.k, args.order)
    return closedform.gf_step(args.m, args.l, args.k, args.order)


def cmd_series(args):
    chosen = [a for a in (args.pattern, args.family, args.avoid_strings) if a]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --pattern, --family, --avoid-strings")
    params = {"k": args.k, "order": args.order}
    family = None
    if args.avoid_strings:
        strs = [s for s in args.avoid_strings.split(",") if s]
        params["avoid_strings"] = strs
        s = transfer.avoid_strings_series(args.k, strs, args.order)
        engine = "transfer"
    elif args.family:
        params.update(family=args.family, l=args.l, m=args.m)
        s = _family_series(args)
        engine = "closedform"
        family = args.family
    else:
        ps = parse_patterns(args.pattern)
        params["patterns"] = [str(p) for p in ps]
        spec = closedform.identify_family(ps[0]) if len(ps) == 1 else None
        if args.engine == "closedform" and spec is None:
            raise UsageError(f"no closed form covers {args.pattern}")
        if spec is not None and args.engine != "transfer":
            s = spec.series(args.k, args.order)
            engine = "closedform"
            family = spec.family
        else:
            s = transfer.distribution_series(args.k, ps, args.order)
            engine = "transfer"
    record = {"command": "series", "params": params, "engine": engine}
    if family:
        record["family"] = family
    if args.y is not None:
        values = s.at_y(args.y)
        record["y"] = args.y
        record["series"] = values
        if args.format == "csv":
            return _rows_csv([(n, v) for n, v in enumerate(values)], ["n", f"y={args.y}"]), EXIT_OK
    else:
        record["series"] = s.coefficient_lists()
        if args.format == "csv":
            rows = [(n, r, c) for n, cs in enumerate(record["series"]) for r, c in enumerate(cs)]
            return _rows_csv(rows, ["n", "r", "coefficient"]), EXIT_OK
    return dumps(record), EXIT_OK


def verify(pattern, max_k=4, max_n=8, min_k=1, variant="canonical", guard=None):
    """
    Cross-check oracle, automaton and closed form.  Returns a record whose
    ``agree`` field is False at the first divergence, which is reported.
    """
    p = parse_pattern(pattern)
    if not p.is_subword:
        raise UsageError("verify needs a subword pattern")
    spec = closedform.identify_family(p)
    if variant != "canonical":
        if spec is None or spec.family != "sandwich" or spec.m != 2:
            raise UsageError(f"formula variant {variant!r} applies to 211...12 patterns only")
    guard = oracle.enumeration_guard() if guard is None else guard
    checked = {"oracle": 0, "transfer": 0, "closedform": 0}
    skipped = []
    mismatch = None
    for k in range(min_k, max_k + 1):
        tr = transfer.distribution_series(k, p, max_n).coefficient_lists()
        cf = None
        if spec is not None:
            if variant == "canonical":
                cf = spec.series(k, max_n)
            else:
                cf = closedform.gf_twos_variant(variant, len(p), k, max_n)
            cf = cf.coefficient_lists()
        for n in range(max_n + 1):
            values = {"transfer": tr[n]}
            checked["transfer"] += 1
            if cf is not None:
                values["closedform"] = cf[n]
                checked["closedform"] += 1
            if k ** n <= guard:
                values["oracle"] = oracle.distribution(n, k, p, guard=guard).as_list()
                checked["oracle"] += 1
            else:
                skipped.append({"k": k, "n": n})
            distinct = {json.dumps(v) for v in values.values()}
            if len(distinct) > 1 and mismatch is None:
                mismatch = {"k": k, "n": n, "values": values}
                break
        if mismatch:
            break
    record = {
        "command": "verify",
        "params": {"pattern": str(p), "min_k": min_k, "max_k": max_k, "max_n": max_n,
                   "formula_variant": variant},
        "family": spec.family if spec else None,
        "engines": sorted(e for e, c in checked.items() if c),
        "checked": checked,
        "oracle_skipped": skipped,
        "agree": mismatch is None,
    }
    if mismatch:
        record["mismatch"] = mismatch
    return record


def cmd_verify(args):
    record = verify(args.pattern, args.max_k, args.max_n, args.min_k, args.formula_variant)
    return dumps(record), (EXIT_OK if record["agree"] else EXIT_MISMATCH)


def cmd_classify(args):
    c = wilf.classify(args.length, args.max_alphabet, args.max_n, args.max_k, workers=args.workers)
    record = {"command": "classify", "params": {"length": args.length,
                                                "max_alphabet": args.max_alphabet,
                                                "max_n": args.max_n, "max_k": args.max_k}}
    record.update(c.to_dict())
    return dumps(record), EXIT_OK


def cmd_td(args):
    ps = sorted(generate_td(args.d))
    return dumps({"command": "td", "params": {"d": args.d}, "td": [str(p) for p in ps]}), EXIT_OK


def build_parser():
    parser = _Parser(prog="wordpat", description="Count subword pattern occurrences in k-ary words.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    d = sub.add_parser("dist", help="occurrence distribution over [k]^n")
    d.add_argument("--pattern")
    d.add_argument("--patterns", help="comma-separated; occurrences are totalled")
    d.add_argument("--k", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--engine", choices=("transfer", "oracle"), default="transfer")
    d.add_argument("--workers", type=int, default=None)
    d.add_argument("--format", choices=("json", "csv"), default="json")
    d.set_defaults(func=cmd_dist)

    s = sub.add_parser("series", help="bivariate series coefficients up to x^order")
    s.add_argument("--pattern")
    s.add_argument("--family", help=f"one of {', '.join(closedform.FAMILIES)}")
    s.add_argument("--avoid-strings", help="comma-separated literal strings, e.g. 11,23")
    s.add_argument("--l", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--order", type=int, default=DEFAULT_ORDER)
    s.add_argument("--y", type=int, choices=(0, 1), default=None)
    s.add_argument("--engine", choices=("auto", "closedform", "transfer"), default="auto")
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="oracle vs automaton vs closed form")
    v.add_argument("--pattern", required=True)
    v.add_argument("--min-k", type=int, default=1)
    v.add_argument("--max-k", type=int, default=4)
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--formula-variant", choices=closedform.TWOS_VARIANTS, default="canonical")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="group patterns by equal distributions")
    c.add_argument("--length", type=int, required=True)
    c.add_argument("--max-alphabet", type=int, required=True)
    c.add_argument("--max-n", type=int, default=8)
    c.add_argument("--max-k", type=int, default=4)
    c.add_argument("--workers", type=int, default=None)
    c.set_defaults(func=cmd_classify)

    t = sub.add_parser("td", help="alternating pattern set T_d")
    t.add_argument("--d", type=int, required=True)
    t.set_defaults(func=cmd_td)
    return parser


def run(argv=None):
    """Parse and execute; returns (output text, exit code)."""
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        return f"wordpat: {exc}", EXIT_GUARD
    except (UsageError, PatternSyntaxError, ValueError) as exc:
        return f"wordpat: {exc}", EXIT_USAGE


def main(argv=None):
    out, code = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_MISMATCH) else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
