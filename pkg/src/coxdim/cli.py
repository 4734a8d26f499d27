"""Command-line front end.

Reads a Coxeter-matrix document, dispatches to the library, and writes one
JSON document with sorted keys (bit-stable for golden files).  Exit codes:
0 success, 1 input/validation error, 2 a theory-backed check failed (which
indicates an implementation bug, not a bad input).
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import nerve, octahedralize, subdivide
from .coxeter import CoxeterMatrix, parse_coxeter_matrix
from .errors import InputError, LemmaViolation
from .homology import integral_cohomology_top, reduced_betti_mod2
from .library import BUILTIN_EXAMPLES, generate_example
from .report import action_dimension_report
from .verify import run_verification
from .abelian import reflection_index

DEFAULT_MAX_GENERATORS = 16


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxdim",
                                     description="Action-dimension bounds for Artin groups from Coxeter data")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--input", required=True, help="path to a Coxeter matrix JSON document")
        p.add_argument("--output", help="write the result here instead of stdout")
        p.add_argument("--format", choices=["json"], default="json")
        p.add_argument("--max-generators", type=int, default=DEFAULT_MAX_GENERATORS)
        return p

    add("nerve", "the complex of spherical subsets")
    add("subdivide", "the nested-set subdivision of the nerve")
    oct_p = add("octahedralize", "vertex-doubled complex")
    oct_p.add_argument("--of", choices=["subdivision", "nerve"], default="subdivision")
    add("homology", "reduced mod-2 Betti numbers and top integral cohomology")
    add("roots", "positive roots of the irreducible spherical subsets")
    rep = add("report", "dimension bounds for the Artin group")
    rep.add_argument("--assume-kpi1", action="store_true",
                     help="record the K(pi,1) property as assumed when it is not proved")
    ver = add("verify", "run the structural verification suite")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--quick", action="store_true", help="fewer random matrices")
    ex = add("example", "emit a named builtin input document", needs_input=False)
    ex.add_argument("--name", required=True, help=f"one of {', '.join(BUILTIN_EXAMPLES)} or a family like a_5, i2_9")
    return parser


def _load_matrix(args) -> CoxeterMatrix:
    if args.max_generators < 1:
        raise InputError("--max-generators must be positive")
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    M = parse_coxeter_matrix(text)
    if M.n > args.max_generators:
        raise InputError(
            f"input has {M.n} generators, over the --max-generators guard of {args.max_generators}")
    return M


def _dispatch(args) -> tuple[int, dict]:
    if args.command == "example":
        return 0, generate_example(args.name)

    M = _load_matrix(args)
    if args.command == "nerve":
        return 0, nerve(M).to_dict()
    if args.command == "subdivide":
        return 0, subdivide(M).to_dict()
    if args.command == "octahedralize":
        base = subdivide(M) if args.of == "subdivision" else nerve(M)
        return 0, octahedralize(base).to_dict()
    if args.command == "homology":
        out = {}
        for key, K in (("nerve", nerve(M)), ("subdivision", subdivide(M))):
            cohom = integral_cohomology_top(K)
            out[key] = {
                "reduced_betti_mod2": reduced_betti_mod2(K),
                "top_integral_cohomology": {"rank": cohom.rank, "torsion": list(cohom.torsion)},
            }
        return 0, out
    if args.command == "roots":
        idx = reflection_index(M)
        return 0, {
            "reflections": [
                {
                    "coeffs": [round(c, 9) + 0.0 for c in root.coeffs],
                    "word": list(root.word),
                    "support": list(root.support),
                }
                for root in idx.roots
            ]
        }
    if args.command == "report":
        return 0, action_dimension_report(M, assume_kpi1=args.assume_kpi1).to_dict()
    if args.command == "verify":
        kwargs = {}
        if args.quick:
            kwargs = {"n_structure": 20, "n_lattice": 10, "n_betti": 10,
                      "oracle_samples": 40, "include_corpus": False}
        run = run_verification(M, seed=args.seed, **kwargs)
        for line in run.lines():
            print(line, file=sys.stderr)
        return (0 if run.passed else 2), run.to_dict()
    raise InputError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        code, doc = _dispatch(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LemmaViolation as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
