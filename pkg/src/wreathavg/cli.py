"""
Command-line front end.

    wreathavg avg S3
    wreathavg wreath-avg --a C2 --b C2 --method all --json
    wreathavg limits --b C2 --p 2 --nmax 10 --csv -

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 resource cap, 4 two methods disagree.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import exact, formulas, groups, oracle
from .errors import DisagreementError, PreconditionError, ResourceCapError, WreathError
from .grammar import Wreath, abelian_exponents, build_group, check_spec, parse_spec
from .spectra import average_order, max_order, p_of, r_distribution, spectrum

METHODS = ("theorem1", "theorem2", "oracle", "orbit")


class UsageError(WreathError):
    exit_code = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Context:
    def __init__(self, args):
        self.json = args.json
        self.digits = args.digits
        self.oracle_cap = 2**args.oracle_cap
        self.workers = args.workers

    def rat(self, x):
        return exact.to_json(x, self.digits)

    def text(self, x):
        return exact.fmt(x, self.digits)


def _node(text):
    return check_spec(parse_spec(text))


def _group(text):
    return build_group(_node(text))


def _spectrum(text):
    """Spectrum of a described group; a top-level wreath uses the orbit route."""
    node = _node(text)
    if isinstance(node, Wreath):
        return oracle.orbit_spectrum(build_group(node.a), build_group(node.b)), "orbit"
    return spectrum(build_group(node)), "enumeration"


def _payload(command, inputs, method, **result):
    return {"command": command, "inputs": inputs, "method": method, **result}


def cmd_avg(args, ctx):
    spec, method = _spectrum(args.spec)
    a = average_order(spec)
    return _payload("avg", {"spec": args.spec}, method, average=ctx.rat(a)), [ctx.text(a)]


def cmd_maxorder(args, ctx):
    spec, method = _spectrum(args.spec)
    m = max_order(spec)
    return _payload("maxorder", {"spec": args.spec}, method, max_order=m), [str(m)]


def cmd_spectrum(args, ctx):
    spec, method = _spectrum(args.spec)
    lines = [f"order {n}: {c}" for n, c in spec.counts.items()]
    lines.append(f"average {ctx.text(average_order(spec))}")
    payload = _payload(
        "spectrum", {"spec": args.spec}, method,
        group_size=spec.group_size, spectrum=spec.to_json(),
        average=ctx.rat(average_order(spec)), max_order=max_order(spec),
    )
    return payload, lines


def _same_prime(specA, specB):
    try:
        p = p_of(specA)
        return p if p_of(specB) == p else None
    except PreconditionError:
        return None


def cmd_wreath_avg(args, ctx):
    A, B = _group(args.a), _group(args.b)
    specA, specB = spectrum(A), spectrum(B)
    methods = METHODS if args.method == "all" else (args.method,)
    values, skipped = {}, {}
    for method in methods:
        try:
            if method == "theorem1":
                values[method] = formulas.theorem1_average(specA, specB)
            elif method == "theorem2":
                if _same_prime(specA, specB) is None:
                    raise PreconditionError("theorem2 needs p-groups for one prime")
                values[method] = formulas.theorem2_average(formulas.p_group_profile(specA), specB)
            elif method == "oracle":
                bf = oracle.brute_force_spectrum(A, B, cap=ctx.oracle_cap, workers=ctx.workers)
                values[method] = average_order(bf)
            else:
                values[method] = average_order(oracle.orbit_spectrum(A, B))
        except (PreconditionError, ResourceCapError) as exc:
            if args.method != "all":
                raise
            skipped[method] = str(exc)
    distinct = set(values.values())
    payload = _payload(
        "wreath-avg", {"a": args.a, "b": args.b}, args.method,
        results={m: ctx.rat(v) for m, v in values.items()},
        skipped=skipped,
        agree=len(distinct) == 1,
    )
    lines = [f"{m}: {ctx.text(v)}" for m, v in values.items()]
    lines += [f"{m}: skipped ({why})" for m, why in skipped.items()]
    if len(distinct) > 1:
        raise DisagreementError("methods disagree: " + "; ".join(lines), )
    payload["average"] = ctx.rat(distinct.pop())
    return payload, lines


def _p_pair(specA, specB):
    p = _same_prime(specA, specB)
    if p is None:
        raise PreconditionError("A and B must be p-groups for the same prime")
    return p


def cmd_dist(args, ctx):
    A, B = _group(args.a), _group(args.b)
    specA, specB = spectrum(A), spectrum(B)
    p = _p_pair(specA, specB)
    dist = formulas.theorem5_distribution(r_distribution(specA, p), r_distribution(specB, p))
    payload = _payload(
        "dist", {"a": args.a, "b": args.b}, "theorem5",
        distribution=dist.to_json(ctx.digits), max_order=p**dist.d,
    )
    lines = [f"r_{k} = {ctx.text(x)}" for k, x in enumerate(dist.r)]
    lines.append(f"max order {p}^{dist.d} = {p**dist.d}")
    if args.check_oracle:
        bf = oracle.brute_force_spectrum(A, B, cap=ctx.oracle_cap, workers=ctx.workers)
        agree = r_distribution(bf, p) == dist
        payload["oracle_agrees"] = agree
        lines.append(f"oracle agrees: {agree}")
        if not agree:
            raise DisagreementError("composed distribution differs from brute force")
    return payload, lines


def _trajectory_rows(values):
    rows = []
    for n, v in enumerate(values):
        num, den = Fraction(v).as_integer_ratio()
        rows.append((n, num, den, v))
    return rows


def _write_csv(path, rows, digits, start=0):
    fh = sys.stdout if path == "-" else open(path, "w", newline="")
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "value_num", "value_den", "decimal"])
        for n, num, den, v in rows:
            dec = exact.to_decimal(v, digits) if isinstance(v, Fraction) else repr(v)
            w.writerow([n + start, num, den, dec])
    finally:
        if fh is not sys.stdout:
            fh.close()


def cmd_tower(args, ctx):
    specA, specB = spectrum(_group(args.a)), spectrum(_group(args.b))
    p = _p_pair(specA, specB)
    rA = r_distribution(specA, p)
    dists = formulas.iterate_tower(rA, args.steps, args.mode)
    kc = formulas.k_coefficients(specB, p)
    psis = [formulas.psi_from_distribution(dist, kc) for dist in dists]
    show = ctx.rat if args.mode == "exact" else repr
    steps = [
        {"n": n, "log_p_order": dist.a, "log_p_max_order": dist.d,
         "r1": show(dist.at(1)), "psi": show(v)}
        for n, (dist, v) in enumerate(zip(dists, psis))
    ]
    payload = _payload("tower", {"a": args.a, "b": args.b, "steps": args.steps}, args.mode, steps=steps)
    fmt = ctx.text if args.mode == "exact" else repr
    lines = [f"n={n}: psi = {fmt(v)}" for n, v in enumerate(psis)]
    if args.csv:
        _write_csv(args.csv, _trajectory_rows(psis), ctx.digits)
        if args.csv == "-":
            return None, []
    return payload, lines


def cmd_psi(args, ctx):
    specA, specB = spectrum(_group(args.a)), spectrum(_group(args.b))
    aW = formulas.theorem1_average(specA, specB)
    mA, aB = max_order(specA), average_order(specB)
    value = formulas.psi(aW, mA, aB)
    payload = _payload(
        "psi", {"a": args.a, "b": args.b}, "theorem1",
        psi=ctx.rat(value), wreath_average=ctx.rat(aW), max_order_a=mA, average_b=ctx.rat(aB),
    )
    lines = [f"psi = {ctx.text(value)}"]
    p = _same_prime(specA, specB)
    if p is not None:
        d = formulas.p_group_profile(specA).d
        ok = formulas.theorem3_check(aB, aW, p, d)
        payload["bounds_hold"] = ok
        lines.append(f"a(B) <= a(A wr B) <= p^d a(B): {ok}")
        if not ok:
            raise DisagreementError("average order bounds violated")
    return payload, lines


def cmd_abelian_check(args, ctx):
    p, exps = abelian_exponents(_node(args.a))
    specA = spectrum(groups.abelian(p, exps))
    specB = spectrum(_group(args.b))
    rep = formulas.theorem6_check(exps, specB, p=p, specA=specA)
    fields = ("psi", "lower", "delta", "delta_bound", "top_ratio", "cyclic_estimate")
    payload = _payload(
        "abelian-check", {"a": args.a, "b": args.b}, "theorem6",
        p=rep.p, t=rep.t, d=rep.d, cyclic_b=rep.cyclic_b, holds=rep.holds,
        **{f: ctx.rat(getattr(rep, f)) for f in fields},
    )
    lines = [f"p={rep.p} t={rep.t} d={rep.d} cyclic B: {rep.cyclic_b}"]
    lines += [f"{f} = {ctx.text(getattr(rep, f))}" for f in fields]
    lines.append(f"bounds hold: {rep.holds}")
    if not rep.holds:
        raise DisagreementError("abelian bounds violated")
    return payload, lines


def _elementary_rank(spec, p):
    counts = spec.counts
    if set(counts) == {1, p}:
        return formulas._exponent_of(spec.group_size, p, "B")
    return None


def cmd_limits(args, ctx):
    specB = spectrum(_group(args.b))
    p = args.p
    if p_of(specB) != p:
        raise PreconditionError(f"B is not a {p}-group")
    seq = formulas.theorem7_sequence(specB, p, args.nmax)
    target = p * average_order(specB)
    entries = []
    for n, v in enumerate(seq, start=1):
        gap = target - v
        bound = formulas.theorem7_bound(specB, p, n)
        if not 0 <= gap <= bound:
            raise DisagreementError(f"n={n}: gap {gap} outside [0, {bound}]")
        entries.append({"n": n, "value": ctx.rat(v), "gap": ctx.rat(gap), "bound": ctx.rat(bound)})
    limits = [
        {"r": r, "value": ctx.rat(formulas.average_order_limit(specB, p, r))} for r in range(4)
    ]
    b = _elementary_rank(specB, p)
    if b is not None:
        # report the elementary closed form next to the computed value
        for item in limits:
            if 2 <= item["r"] <= b - 1:
                item["printed_closed_form"] = ctx.rat(formulas.elementary_limit_as_printed(p, b, item["r"]))
    payload = _payload(
        "limits", {"b": args.b, "p": p, "nmax": args.nmax}, "theorem7",
        sequence=entries, limit=ctx.rat(target), average_order_limits=limits,
        monotone=all(x < y for x, y in zip(seq, seq[1:])),
    )
    lines = [f"n={e['n']}: {ctx.text(v)}" for e, v in zip(entries, seq)]
    lines.append(f"limit p*a(B) = {ctx.text(target)}")
    if args.csv:
        _write_csv(args.csv, _trajectory_rows(seq), ctx.digits, start=1)
        if args.csv == "-":
            return None, []
    return payload, lines


def _add_globals(parser, suppress):
    def default(v):
        return argparse.SUPPRESS if suppress else v

    parser.add_argument("--json", action="store_true", default=default(False),
                        help="emit machine-readable JSON")
    parser.add_argument("--digits", type=int, default=default(8), help="decimal places (default 8)")
    parser.add_argument("--oracle-cap", type=int, default=default(21), metavar="BITS",
                        help="brute-force oracle refuses groups above 2**BITS elements")
    parser.add_argument("--bit-budget", type=int, default=default(exact.DEFAULT_BIT_BUDGET),
                        metavar="BITS", help="largest integer size exact arithmetic may build")
    parser.add_argument("--workers", type=int, default=default(1),
                        help="processes for the brute-force oracle")


def build_parser():
    parser = _Parser(prog="wreathavg", description=__doc__.split("\n\n")[0])
    _add_globals(parser, suppress=False)
    common = _Parser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, helptext in (
        ("avg", cmd_avg, "average element order"),
        ("maxorder", cmd_maxorder, "maximum element order"),
        ("spectrum", cmd_spectrum, "counts of elements of each order"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("spec")
        p.set_defaults(func=fn)

    p = sub.add_parser("wreath-avg", parents=[common], help="a(A wr B) by one or all methods")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--method", choices=METHODS + ("all",), default="theorem1")
    p.set_defaults(func=cmd_wreath_avg)

    p = sub.add_parser("dist", parents=[common], help="cumulative order distribution of A wr B")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--check-oracle", action="store_true")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("tower", parents=[common], help="psi along A_n = A_(n-1) wr C_p")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--mode", choices=("exact", "float"), default="exact")
    p.add_argument("--csv", metavar="FILE", help="write the psi trajectory as CSV ('-' for stdout)")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("psi", parents=[common], help="a(A wr B) / (m(A) a(B))")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("abelian-check", parents=[common], help="psi bounds for abelian A")
    p.add_argument("--a", required=True, help="abelian p-group, e.g. A(2;1,2) or C4 x C2")
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_abelian_check)

    p = sub.add_parser("limits", parents=[common], help="a((Z/p)^n wr B) for n = 1..nmax")
    p.add_argument("--b", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--csv", metavar="FILE", help="write the sequence as CSV ('-' for stdout)")
    p.set_defaults(func=cmd_limits)
    return parser


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
        ctx = Context(args)
        with exact.bit_budget(args.bit_budget):
            payload, lines = args.func(args, ctx)
    except WreathError as exc:
        if want_json:
            err = {"type": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
            if getattr(exc, "pos", None) is not None:
                err["position"] = exc.pos
            print(_dump({"error": err}))
        else:
            print(f"wreathavg: error: {exc}", file=sys.stderr)
        return exc.exit_code
    if payload is not None:
        if ctx.json:
            print(_dump(payload))
        else:
            print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
