"""Command-line front end.

Exit codes: 0 success, 1 bad spec or usage, 2 internal inconsistency
(including a failed ``verify-paper`` comparison).
"""

from __future__ import annotations

import argparse
import json
import sys

from cgoppa.analysis import analyze, codeword_weight
from cgoppa.errors import CodeError, InconsistencyError
from cgoppa.goppa import CodeSpec, encode, generator_matrix, load_spec, spec_from_dict, spec_to_dict
from cgoppa.polymat import canonical_form
from cgoppa.polyring import parse_poly
from cgoppa.reference import REFERENCE_CODES, corrupted, verify_all

EXIT_OK, EXIT_SPEC, EXIT_INCONSISTENT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SPEC, f"{self.prog}: error: {message}\n")


def _spec_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", help="JSON code specification file")
    p.add_argument("--field", help="field, e.g. GF(5) or 'GF(2^2; 1,1,1)'")
    p.add_argument("--a", help="geometric sections: alpha_i = a^(i-1)")
    p.add_argument("--b", help="geometric sections: beta_i = b^(i-1)")
    p.add_argument("--n", type=int, help="number of sections")
    p.add_argument("--s", type=int, help="lowest monomial degree")
    p.add_argument("--r", type=int, help="highest monomial degree")
    p.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cgoppa", description="Convolutional Goppa codes over the projective line.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="print the generator matrix")
    _spec_options(p)
    p = sub.add_parser("analyze", help="rate, degree, free distance and classification")
    _spec_options(p)
    p = sub.add_parser("encode", help="encode a polynomial message")
    _spec_options(p)
    p.add_argument("--message", required=True, help="message polynomials separated by ';'")
    p = sub.add_parser("verify-paper", help="check the five built-in example codes")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--corrupt", type=int, metavar="ROW", help=argparse.SUPPRESS)
    return parser


def _spec_from_args(args) -> CodeSpec:
    inline = [args.field, args.a, args.b, args.n, args.s, args.r]
    if args.spec:
        if any(v is not None for v in inline):
            raise CodeError("give either --spec or the inline flags, not both")
        return load_spec(args.spec)
    if any(v is None for v in inline):
        raise CodeError("a code needs --spec or all of --field --a --b --n --s --r")
    return spec_from_dict(
        {"field": args.field, "sections": {"a": args.a, "b": args.b, "n": args.n}, "s": args.s, "r": args.r}
    )


def cmd_construct(args) -> int:
    spec = _spec_from_args(args)
    G = generator_matrix(spec)
    C = canonical_form(G)
    if args.format == "json":
        out = spec_to_dict(spec)
        out["generator_matrix"] = G.to_text()
        if C != G:
            out["basic_generator_matrix"] = C.to_text()
        print(json.dumps(out, indent=2))
    else:
        print(G.to_text())
        if C != G:
            print(f"basic: {C.to_text()}")
    return EXIT_OK


def cmd_analyze(args) -> int:
    rep = analyze(_spec_from_args(args))
    if args.format == "json":
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        print(f"generator matrix: {rep.generator_matrix.to_text()}")
        print(f"rate k/n:         {rep.rate}")
        print(f"degree:           {rep.delta}")
        print(f"free distance:    {rep.d_free}")
        print(f"singleton bound:  {rep.singleton_bound}")
        print(f"reduced:          {rep.is_reduced}")
        print(f"basic:            {rep.is_basic}")
        print(f"canonical:        {rep.is_canonical}")
        print(f"MDS:              {rep.is_mds}")
    return EXIT_OK


def cmd_encode(args) -> int:
    spec = _spec_from_args(args)
    G = generator_matrix(spec)
    message = [parse_poly(spec.field, part) for part in args.message.split(";")]
    word = encode(G, message)
    if args.format == "json":
        print(json.dumps({"codeword": [str(c) for c in word], "weight": codeword_weight(word)}))
    else:
        print(", ".join(str(c) for c in word))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    codes = list(REFERENCE_CODES)
    if args.corrupt is not None:
        i = args.corrupt
        if not 0 <= i < len(codes):
            raise CodeError(f"--corrupt row must be in [0, {len(codes)})")
        codes[i] = corrupted(codes[i], d_free=codes[i].d_free + 1)
    verdicts = verify_all(codes)
    if args.format == "json":
        print(json.dumps([v.report.to_dict() for v in verdicts], indent=2))
    else:
        print(f"{'code':<13} {'k/n':>4} {'delta':>5} {'d':>3} {'MDS':>5}  result")
        for v in verdicts:
            r = v.report
            status = "pass" if v.ok else "FAIL: " + "; ".join(v.mismatches)
            print(f"{v.code.name:<13} {str(r.rate):>4} {r.delta:>5} {r.d_free:>3} {str(r.is_mds):>5}  {status}")
        print(f"{sum(v.ok for v in verdicts)}/{len(verdicts)} pass")
    failed = [v for v in verdicts if not v.ok]
    for v in failed:
        print(f"mismatch in {v.code.name}: {'; '.join(v.mismatches)}", file=sys.stderr)
    return EXIT_INCONSISTENT if failed else EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "encode": cmd_encode,
    "verify-paper": cmd_verify_paper,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CodeError as exc:
        print(f"cgoppa {args.command}: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except InconsistencyError as exc:
        print(f"cgoppa {args.command}: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except OSError as exc:
        print(f"cgoppa {args.command}: {exc}", file=sys.stderr)
        return EXIT_SPEC


if __name__ == "__main__":
    sys.exit(main())
