#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import argparse
import logging
import sys
from exceptions import InputError, SizeLimit, VerificationFailure
from families import FlagSpec, GTSpec, PSSpec, family_marked, ps_polynomial_in_y
from jsonio import (dumps, is_spec_document, marked_from_json, polynomial_to_json,
                    poset_from_json, read_document, skew_from_json, skew_to_json, spec_from_json,
                    spec_to_json)
from marked import (count_bruteforce, ehrhart_polynomial, gaps, labeling_values,
                    natural_labeling_for, product_formula_polynomial)
from oracleCheck import KINDS, check_family, check_marked, run_trials
from order_poly import omega
from poset import SkewShape, skew_shape_poset
from polynomial import is_coefficient_nonnegative

logger = logging.getLogger(__name__)

# Exit statuses
EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_SIZE = 3


def _int_list(text):
    """Parse a comma separated list of integers, e.g. "2,2,0,3,0"."""
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of integers.")


def load_marked(path):
    """
    Read a marked poset document or a family document.

    Parameters
    ----------
    path : string
        File name or "-" for the standard input.

    Returns
    -------
    M : MarkedPoset
        The marked poset.

    """
    document = read_document(path)
    if is_spec_document(document):
        return family_marked(*spec_from_json(document))
    return marked_from_json(document)


def load_poset(path):
    """Read a poset document or a skew shape document."""
    document = read_document(path)
    if isinstance(document, dict) and "lambda" in document:
        return skew_shape_poset(skew_from_json(document))
    return poset_from_json(document)


def cmd_order_poly(args):
    p = omega(load_poset(args.path))
    print(dumps(polynomial_to_json(p)) if args.json else p.to_text())
    return EXIT_OK


def cmd_marked_poly(args):
    M = load_marked(args.path)
    L = natural_labeling_for(M)
    f = product_formula_polynomial(M, L, method=args.method)

    labels = [M.poset.labels[a] for a in L.elements]
    values = labeling_values(M, L)

    if args.json:
        print(dumps({"labeling": labels, "values": values, "gaps": gaps(M, L),
                     "polynomial": polynomial_to_json(f)}))
    else:
        print("labeling: " + " ".join(f"a{i}={label}" for i, label in enumerate(labels)))
        print("region: " + " <= ".join(f"lambda(a{i})" for i in range(len(labels))))
        print("values: " + " <= ".join(str(v) for v in values))
        print(f"f = {f.to_text()}")
    return EXIT_OK


def cmd_ehrhart(args):
    M = load_marked(args.path)
    g = ehrhart_polynomial(M, verify=not args.no_verify)
    print(dumps(polynomial_to_json(g)) if args.json else g.to_text())
    return EXIT_OK


def cmd_count(args):
    M = load_marked(args.path)
    print(count_bruteforce(M))
    return EXIT_OK


def _report_positivity(name, p):
    """Print the sign check of one polynomial, True iff nonnegative."""
    nonnegative, offenders = is_coefficient_nonnegative(p)
    if nonnegative:
        print(f"{name}: all coefficients nonnegative")
    else:
        print(f"{name}: {len(offenders)} negative coefficients")
        for monomial, coefficient in offenders.items():
            print(f"  {monomial}: {coefficient}")
    return nonnegative


def cmd_check_positivity(args):
    document = read_document(args.path)

    # Plain posets and skew shapes: the order polynomial
    if not is_spec_document(document) and "marked" not in document:
        if "lambda" in document:
            P = skew_shape_poset(skew_from_json(document))
        else:
            P = poset_from_json(document)
        ok = _report_positivity("order polynomial", omega(P))
        return EXIT_OK if ok else EXIT_VERIFICATION

    if is_spec_document(document):
        spec, flags = spec_from_json(document)
        M = family_marked(spec, flags)
    else:
        spec, flags = None, None
        M = marked_from_json(document)

    L = natural_labeling_for(M)
    ok = _report_positivity("multivariate polynomial", product_formula_polynomial(M, L))
    ok &= _report_positivity("Ehrhart polynomial", ehrhart_polynomial(M, verify=False))

    # The y-polynomial is defined for the z = 0 Pitman-Stanley family
    if type(spec) is PSSpec and not any(spec.z):
        ok &= _report_positivity("y-polynomial", ps_polynomial_in_y(spec.k, spec.m))

    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_oracle_check(args):
    if args.source == "random":
        trials = 100 if args.trials is None else args.trials
        results = run_trials(args.kind, trials, args.seed, progress=args.progress)
    else:
        dilations = 3 if args.trials is None else args.trials
        document = read_document(args.source)
        if is_spec_document(document):
            spec, flags = spec_from_json(document)
            results = check_family(spec, flags, dilations)
        else:
            results = check_marked(marked_from_json(document), dilations)

    mismatches = results[~results["match"]] if not results.empty else results
    print(f"{len(results) - len(mismatches)}/{len(results)} trials match.")
    if not mismatches.empty:
        print(mismatches.to_string(index=False))
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_gen(args):
    if args.family == "skew":
        if args.lam is None:
            raise InputError("gen skew needs --lambda.")
        print(dumps(skew_to_json(SkewShape(args.lam, args.mu or ()))))
        return EXIT_OK

    if args.k is None or args.m is None or args.y is None:
        raise InputError(f"gen {args.family} needs --k, --m and --y.")

    z = args.z if args.z is not None else (0,) * args.k
    cls = PSSpec if args.family == "ps" else GTSpec
    spec = cls(args.k, args.m, args.y, z)

    flags = None
    if args.family == "flagged":
        if args.a is None or args.b is None:
            raise InputError("gen flagged needs --a and --b.")
        flags = FlagSpec(args.a, args.b)
        flags.validate(spec.k, spec.m)

    print(dumps(spec_to_json(spec, flags)))
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="marked-order",
                                description="Counting polynomials of marked order polytopes")
    p.add_argument("-v", "--verbose", action="store_true", help="Log debug messages on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    # Polynomials
    s = sub.add_parser("order-poly", help="Order polynomial of a poset or skew shape")
    s.add_argument("path", help="Poset or skew shape JSON, '-' for stdin")
    s.add_argument("--json", action="store_true", help="Print the polynomial as JSON")
    s.set_defaults(func=cmd_order_poly)

    s = sub.add_parser("marked-poly", help="Multivariate counting polynomial in the gap variables")
    s.add_argument("path", help="Marked poset or family JSON, '-' for stdin")
    s.add_argument("--json", action="store_true", help="Print labeling and polynomial as JSON")
    s.add_argument("--method", choices=("dp", "chains"), default="dp",
                   help="Chain sum engine (default: dp)")
    s.set_defaults(func=cmd_marked_poly)

    s = sub.add_parser("ehrhart", help="Ehrhart polynomial of a marked order polytope")
    s.add_argument("path", help="Marked poset or family JSON, '-' for stdin")
    s.add_argument("--json", action="store_true", help="Print the polynomial as JSON")
    s.add_argument("--no-verify", action="store_true", help="Skip the brute-force checks at n <= 3")
    s.set_defaults(func=cmd_ehrhart)

    # Counting and verification
    s = sub.add_parser("count", help="Brute-force lattice point count")
    s.add_argument("path", help="Marked poset or family JSON, '-' for stdin")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("check-positivity", help="Check that all coefficients are nonnegative")
    s.add_argument("path", help="Poset, skew shape, marked poset or family JSON, '-' for stdin")
    s.set_defaults(func=cmd_check_positivity)

    s = sub.add_parser("oracle-check", help="Compare the product formula with brute force")
    s.add_argument("source", help="'random' for seeded random trials, or a family/marked JSON")
    s.add_argument("--trials", type=int, default=None,
                   help="Random trials (default: 100) or largest dilation of a file (default: 3)")
    s.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    s.add_argument("--kind", choices=KINDS, default="random", help="Random trial kind (default: random)")
    s.add_argument("--progress", action="store_true", help="Show a progress bar on stderr")
    s.set_defaults(func=cmd_oracle_check)

    # Instance generation
    s = sub.add_parser("gen", help="Emit the JSON of a family instance")
    s.add_argument("family", choices=("ps", "gt", "flagged", "skew"))
    s.add_argument("--k", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--y", type=_int_list)
    s.add_argument("--z", type=_int_list)
    s.add_argument("--a", type=_int_list, help="Lower flags (flagged only)")
    s.add_argument("--b", type=_int_list, help="Upper flags (flagged only)")
    s.add_argument("--lambda", dest="lam", type=_int_list, help="Outer partition (skew only)")
    s.add_argument("--mu", type=_int_list, help="Inner partition (skew only)")
    s.set_defaults(func=cmd_gen)

    return p


def main(argv=None):
    """
    Run one command.

    Parameters
    ----------
    argv : list of strings, optional
        Arguments without the program name. The default is sys.argv[1:].

    Returns
    -------
    status : integer
        0 on success, 1 on a failed verification, 2 on an input error and 3
        when an engine limit is exceeded.

    """
    args = build_parser().parse_args(argv)

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except VerificationFailure as error:
        print(f"verification failed: {error}", file=sys.stderr)
        return EXIT_VERIFICATION
    except SizeLimit as error:
        print(f"size limit: {error}", file=sys.stderr)
        return EXIT_SIZE
    except (InputError, ValueError, TypeError, KeyError) as error:
        print(f"input error: {error}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
