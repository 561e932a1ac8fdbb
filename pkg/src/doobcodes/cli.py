"""Command line front end: ``doobcodes params|build|verify|decode|enumerate``.

Exit status: 0 pass, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import additive, formats, linear, params, product, verify
from .additive import CheckMatrixZ
from .linear import CheckMatrixE
from .product import ProductCodeSpec
from .space import doob_dist, format_mixed, format_vertex, mixed_dist, parse_mixed, parse_vertex

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# -- params -------------------------------------------------------------------

def params_table(mu: int) -> str:
    lines = [f"# 2m+n = {(4 ** mu - 1) // 3} (mu = {mu})", "m\tn\tconstructions"]
    for m, n in params.admissible_pairs(mu):
        tags = params.classify(m, n)
        lines.append(f"{m}\t{n}\t{' '.join(map(str, tags))}")
    return "\n".join(lines) + "\n"


def cmd_params(args) -> int:
    if args.mu is not None:
        if args.mu < 1:
            raise UsageError("--mu must be >= 1")
        _out(params_table(args.mu), args.output)
        return EXIT_OK
    if args.m is None:
        raise UsageError("give --mu, or -m with -n, or -m with --n2/--n4")
    if args.n2 is not None or args.n4 is not None:
        n2, n4 = args.n2 or 0, args.n4 or 0
        verdict = params.triple_verdict(args.m, n2, n4)
        _out(f"({args.m},{n2},{n4}): {verdict}\n", args.output)
        return EXIT_USAGE if verdict.startswith("rejected") else EXIT_OK
    if args.n is None:
        raise UsageError("-m needs -n or --n2/--n4")
    if params.mu_for(args.m, args.n) is None:
        _out(f"D({args.m},{args.n}): rejected, 2m+n={2 * args.m + args.n} "
             "is not an admissible diameter (4^mu-1)/3\n", args.output)
        return EXIT_USAGE
    tags = params.classify(args.m, args.n)
    _out(f"D({args.m},{args.n}): {' '.join(map(str, tags))}\n", args.output)
    return EXIT_OK


# -- build --------------------------------------------------------------------

def build_code(args):
    fam = args.family
    if fam == "linear":
        if args.gamma is None or args.delta is None:
            raise UsageError("linear needs --gamma and --delta")
        return linear.build_check_matrix(args.gamma, args.delta)
    if fam == "additive":
        if args.gamma is None or args.delta is None:
            raise UsageError("additive needs --gamma and --delta")
        A = linear.build_check_matrix(args.gamma, args.delta)
        n4 = args.n4 or 0
        sel = additive.select_lambdas(A, n4, args.lambdas)
        D = additive.build_D(A, sel)
        params.group_params(*D.shape)  # raises on inconsistent parameters
        return D
    if fam == "special-d77":
        return additive.special_d77()
    if fam == "product":
        if args.k is not None and args.r is not None:
            k, r = args.k, args.r
        elif args.mu is not None:
            k, r = params.product_kr(args.mu)
        else:
            raise UsageError("product needs --mu or --k/--r")
        return ProductCodeSpec.row_major(k, r, args.m or 0)
    raise UsageError(f"unknown family {fam}")


def cmd_build(args) -> int:
    code = build_code(args)
    _out(formats.dumps(code), args.output)
    return EXIT_OK


# -- verify / decode / enumerate --------------------------------------------------

def membership(code):
    if isinstance(code, CheckMatrixE):
        return lambda v: linear.is_codeword(code, v)
    if isinstance(code, CheckMatrixZ):
        return lambda v: additive.is_codeword_z(code, v)
    return lambda v: product.product_membership(code, v)


def cmd_verify(args) -> int:
    code = formats.load(args.code)
    mode = args.mode or ("sample" if isinstance(code, ProductCodeSpec) else "coverage")
    if mode == "coverage":
        if isinstance(code, ProductCodeSpec):
            raise UsageError("coverage mode needs a check matrix; use exhaustive or sample")
        report = verify.verify_coverage(code)
    elif mode == "exhaustive":
        report = verify.verify_exhaustive(membership(code), code.space, args.cap)
    else:
        report = verify.verify_sampled(membership(code), code.space, args.sample, args.seed)
    print(report.summary())
    if args.output:
        Path(args.output).write_text(report.to_json() + "\n")
    return EXIT_OK if report.verdict else EXIT_FAIL


def _format(code, v):
    if isinstance(code, CheckMatrixZ):
        return format_mixed(v)
    if isinstance(code, ProductCodeSpec):
        return product.format_product_word(code, v)
    return format_vertex(v)


def cmd_decode(args) -> int:
    code = formats.load(args.code)
    try:
        if isinstance(code, CheckMatrixE):
            v = parse_vertex(args.vertex, (code.m, code.n))
            c = linear.decode(code, v)
            d = doob_dist(v, c)
        elif isinstance(code, CheckMatrixZ):
            v = parse_mixed(args.vertex, code.shape)
            c = additive.decode_z(code, v)
            d = mixed_dist(v, c)
        else:
            v = product.parse_product_word(code, args.vertex)
            c = product.product_decode(code, v)
            d = doob_dist(v, c)
    except ValueError as exc:
        raise UsageError(f"cannot parse vertex: {exc}") from None
    print(f"{_format(code, c)}\tdistance={d}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    code = formats.load(args.code)
    if isinstance(code, ProductCodeSpec):
        size = product.product_cardinality(code)
        if size > args.cap:
            raise UsageError(f"code has {size} codewords, over the cap {args.cap}")
        words = list(product.product_codewords(code))
    else:
        try:
            words = verify.enumerate_kernel(code, args.cap)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    lines = sorted(_format(code, w) for w in words)
    _out("".join(line + "\n" for line in lines), args.output)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="doobcodes",
                                description="1-perfect codes in Doob graphs D(m,n)")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("params", help="classify admissible parameters")
    sp.add_argument("--mu", type=int)
    sp.add_argument("-m", type=int)
    sp.add_argument("-n", type=int)
    sp.add_argument("--n2", type=int, help="n' (Z2-pair coordinates)")
    sp.add_argument("--n4", type=int, help="n'' (Z4-single coordinates)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_params)

    sb = sub.add_parser("build", help="build a code description file")
    sb.add_argument("family", choices=["linear", "additive", "special-d77", "product"])
    sb.add_argument("--gamma", type=int)
    sb.add_argument("--delta", type=int)
    sb.add_argument("--n4", type=int, help="n'' for additive codes")
    sb.add_argument("--lambdas", type=int, nargs="*", help="explicit A' column indices")
    sb.add_argument("--mu", type=int)
    sb.add_argument("-m", type=int, help="number of doob13 blocks (product)")
    sb.add_argument("--k", type=int)
    sb.add_argument("--r", type=int)
    sb.add_argument("-o", "--output")
    sb.set_defaults(func=cmd_build)

    sv = sub.add_parser("verify", help="check perfectness")
    sv.add_argument("code")
    sv.add_argument("--mode", choices=["coverage", "exhaustive", "sample"])
    sv.add_argument("--sample", type=int, default=10_000)
    sv.add_argument("--seed", type=int, default=1)
    sv.add_argument("--cap", type=int, default=verify.DEFAULT_EXHAUSTIVE_CAP)
    sv.add_argument("-o", "--output", help="write the JSON report here")
    sv.set_defaults(func=cmd_verify)

    sd = sub.add_parser("decode", help="decode one vertex")
    sd.add_argument("code")
    sd.add_argument("vertex")
    sd.set_defaults(func=cmd_decode)

    se = sub.add_parser("enumerate", help="list all codewords of a small code")
    se.add_argument("code")
    se.add_argument("--cap", type=int, default=verify.DEFAULT_EXHAUSTIVE_CAP)
    se.add_argument("-o", "--output")
    se.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, params.ParameterError, formats.FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
