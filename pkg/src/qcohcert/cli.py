"""Command-line interface: certify, lines, charpoly, sweep, oracle.

Exit codes: 0 = a verdict was produced (any verdict, including refusals),
1 = invalid input, 2 = internal inconsistency (two exact routes disagreed;
must never happen in a correct build).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import certify as cert_mod
from . import operators as ops
from .certify import (DEFAULT_SAMPLES, DEFAULT_SEED, InternalInconsistencyError,
                      OracleRefusedError, Verdict, certificate_to_json, certify,
                      numeric_oracle, with_oracle)
from .operators import CompleteIntersection, enumerate_cases, normalize_degrees
from .schubert import line_invariant

CSV_HEADER = ["n", "degrees", "r", "d", "e", "delta", "l0", "det_linear_coeff", "verdict"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="qcohcert",
                description="Exact semi-simplicity certificates for the quantum "
                            "cohomology of Fano complete intersections.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_case_args(sp):
        sp.add_argument("-n", type=int, required=True, help="complex dimension")
        sp.add_argument("-d", "--degree", action="append", required=True,
                        metavar="D", help="hypersurface degree (repeat or comma-separate)")

    sp = sub.add_parser("certify", help="certify one complete intersection")
    add_case_args(sp)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("lines", help="line count meeting two general linear spaces")
    add_case_args(sp)
    sp.add_argument("-j", type=int, default=0, help="invariant index (default 0)")
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("charpoly", help="origin characteristic polynomial")
    add_case_args(sp)
    sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("sweep", help="certify every admissible case up to bounds")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--deg-max", type=int, default=5)
    sp.add_argument("--r-max", type=int, default=3)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    sp = sub.add_parser("oracle", help="randomized exact/numeric validation")
    add_case_args(sp)
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--json", action="store_true")

    return p


def _parse_case(args) -> CompleteIntersection:
    degrees = []
    for item in args.degree:
        for chunk in str(item).split(","):
            chunk = chunk.strip()
            if chunk:
                try:
                    degrees.append(int(chunk))
                except ValueError:
                    raise SystemExit(_fail(f"bad degree {chunk!r}"))
    try:
        ci, dropped = normalize_degrees(args.n, degrees)
    except ValueError as exc:
        raise SystemExit(_fail(str(exc)))
    if dropped:
        print(f"note: dropped {dropped} linear factor(s); "
              f"continuing with degrees {list(ci.degrees) or '[] (projective space)'}",
              file=sys.stderr)
    return ci


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def _frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _print_certificate(cert, as_json: bool):
    if as_json:
        print(json.dumps(certificate_to_json(cert), indent=2))
        return
    print(f"input:    n={cert.n} degrees={list(cert.degrees)}  "
          f"(r={len(cert.degrees)}, d={cert.d}, e={cert.e})")
    h = cert.hypotheses
    print(f"checks:   n>=3 {_yn(h.n_ok)} | fano {_yn(h.fano_ok)} | "
          f"degree bound {_yn(h.degree_ok)} | small e {_yn(h.small_e)} | "
          f"exception {_yn(h.exception_hit)} | l0>0 {_yn(h.l0_positive)}")
    if cert.delta is not None:
        print(f"delta:    {_frac_str(cert.delta)}")
    if cert.l0 is not None:
        print(f"l0:       {_frac_str(cert.l0)}  (raw count d*l0 = {cert.l0_count})")
    if cert.charpoly_origin is not None:
        from .polys import UniPoly
        print(f"origin:   {UniPoly(cert.charpoly_origin).__str__(var='x')}")
    if cert.root_structure is not None:
        rs = cert.root_structure
        print(f"roots:    0 with multiplicity {rs.zero_multiplicity}, "
              f"{rs.nonzero_simple} simple nonzero (gcd degree {rs.gcd_degree})")
    if cert.det_linear_coeff is not None:
        print(f"det (t):  {_frac_str(cert.det_linear_coeff)}   "
              f"[{cert.det_linear_formula}]")
    if cert.criterion is not None:
        print(f"criterion: {cert.criterion.value}")
    if cert.oracle is not None:
        o = cert.oracle
        print(f"oracle:   {o.successes}/{o.samples} samples with nonzero "
              f"discriminant (seed {o.seed})")
        for s in o.results:
            print(f"          t={_frac_str(s.t)}  disc!=0: {s.disc_nonzero}  "
                  f"min gap ~ {s.min_gap:.6g}")
    print(f"verdict:  {cert.verdict.value}")


def _yn(v) -> str:
    return "-" if v is None else ("yes" if v else "NO")


def _cmd_certify(args) -> int:
    ci = _parse_case(args)
    cert = certify(ci)
    _print_certificate(cert, args.json)
    return 0


def _cmd_lines(args) -> int:
    ci = _parse_case(args)
    try:
        count, value = line_invariant(ci.n, ci.degrees, args.j)
    except ValueError as exc:
        return _fail(str(exc))
    if args.json:
        print(json.dumps({"n": ci.n, "degrees": list(ci.degrees), "j": args.j,
                          "count": count,
                          "l_j": {"num": value.numerator, "den": value.denominator}}))
    else:
        print(f"lines meeting general linear spaces of codimension "
              f"{ci.n - args.j} and {ci.n + 1 - ci.e + args.j}: {count}")
        print(f"l_{args.j} = {count}/{ci.degree} = {_frac_str(value)}")
    return 0


def _cmd_charpoly(args) -> int:
    ci = _parse_case(args)
    if not ci.is_fano or ci.n < 3:
        return _fail(f"{ci}: origin charpoly identity needs a Fano case with n >= 3")
    c = ci.degree_power_product
    from .polys import UniPoly
    poly = UniPoly.monomial(ci.n + 1) - UniPoly.monomial(ci.e - 1, Fraction(c))
    if args.json:
        coeffs = [{"num": Fraction(x).numerator, "den": Fraction(x).denominator}
                  for x in poly.coeffs]
        print(json.dumps({"n": ci.n, "degrees": list(ci.degrees), "e": ci.e,
                          "coefficients_low_to_high": coeffs}))
    else:
        print(f"shape:       x^{ci.n + 1} - (b_1 + ... + b_{ci.e}) * x^{ci.e - 1}")
        print(f"specialized: {poly.__str__(var='x')}   "
              f"(sum of quantum coefficients = {c})")
    return 0


def _sweep_rows(args):
    for ci in enumerate_cases(args.n_max, args.deg_max, args.r_max):
        cert = certify(ci)
        yield ci, cert


def _cmd_sweep(args) -> int:
    if args.json:
        out = [certificate_to_json(cert) for _, cert in _sweep_rows(args)]
        print(json.dumps(out, indent=2))
        return 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for ci, cert in _sweep_rows(args):
        writer.writerow([
            ci.n,
            "+".join(map(str, ci.degrees)),
            ci.r,
            ci.degree,
            ci.e,
            _frac_str(cert.delta) if cert.delta is not None else "",
            _frac_str(cert.l0) if cert.l0 is not None else "",
            _frac_str(cert.det_linear_coeff) if cert.det_linear_coeff is not None else "",
            cert.verdict.value,
        ])
    text = buf.getvalue()
    if args.csv:
        sys.stdout.write(text)
    else:
        for line in text.splitlines():
            print("  ".join(f"{field:>14s}" for field in line.split(",")))
    return 0


def _cmd_oracle(args) -> int:
    ci = _parse_case(args)
    cert = certify(ci)
    try:
        report = numeric_oracle(ci, samples=args.samples, seed=args.seed)
    except OracleRefusedError as exc:
        if args.json:
            print(json.dumps({"refused": True, "reason": str(exc),
                              "certificate": certificate_to_json(cert)}))
        else:
            print(f"oracle refused: {exc}")
        return 0
    cert = with_oracle(cert, report)
    _print_certificate(cert, args.json)
    return 2 if report.contradiction else 0


_COMMANDS = {
    "certify": _cmd_certify,
    "lines": _cmd_lines,
    "charpoly": _cmd_charpoly,
    "sweep": _cmd_sweep,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
