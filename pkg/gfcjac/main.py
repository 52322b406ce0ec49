"""
GFC-Jac - Command Line Entry Point

Usage:
    python -m gfcjac decompose --p 2 --n 4 --lambda 2 --lambda 7
    python -m gfcjac --format json verify --example f4
    python -m gfcjac identities --q 3 --n-max 8
    python -m gfcjac genus4 --l11 "4+1*sqrt(11)" --l12="-3-1*sqrt(11)"

Exit codes:
    0: success
    1: internal consistency failure
    2: input error or resource guard
    3: certificate or identity check failed
"""

import argparse
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from gfcjac.core.curves import genus4_family, hyperelliptic_split_params
from gfcjac.core.decompose import (
    SUBGROUP_TABLES,
    KaniRosenInstance,
    branch_set_for,
    check_corollary,
    check_general,
    conjectural_enumeration,
    criterion_search,
    decompose_prime,
    decomposition_to_dict,
    family_sizes,
    format_decomposition_text,
    format_json,
    group_by_j,
    hyperelliptic_factors,
    subgroup_table,
    parse_subgroup,
    pentagonal_parameters,
    special_parameter_conditions,
)
from gfcjac.core.decompose.report import format_certificate_text, format_mapping_text
from gfcjac.core.errors import CertificateError, ConsistencyError, InputError, ResourceLimitError
from gfcjac.core.group import GroupType, enumerate_hyperplanes
from gfcjac.core.models import OutputFormat
from gfcjac.core.orbifold import (
    genus_sum_identity,
    hyperplane_count_with_positive_genus,
    hyperplane_signature,
    psi_bruteforce,
    psi_closed,
    quotient_signature,
    r_q,
    total_genus,
)
from gfcjac.core.scalars import format_scalar, parse_scalar
from gfcjac.utils.config import Config
from gfcjac.utils.logger import get_logger, setup_logger

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_CHECK = 3

log = get_logger(__name__)

# (report dict, text rendering, exit code)
Outcome = Tuple[Dict[str, Any], str, int]


def _scalars(values: Optional[Sequence[str]], precision: int) -> List:
    return [parse_scalar(v, precision) for v in values or []]


def cmd_decompose(args) -> Outcome:
    lambdas = _scalars(args.lambdas, args.precision)
    B = branch_set_for(args.n, lambdas)
    dec = decompose_prime(args.p, args.n, B, normalize=not args.no_normalize, progress=args.progress)
    classes = group_by_j(dec).to_dict() if args.group_by_j else None
    return decomposition_to_dict(dec, classes), format_decomposition_text(dec, classes), EXIT_OK


def _verify_subgroups(args):
    if args.example:
        gt, subgroups = subgroup_table(args.example)
        if (args.k, args.n) not in ((None, None), (gt.k, gt.n)):
            raise InputError(f"example {args.example} lives in type {gt}, not ({args.k},{args.n})")
        return gt, subgroups
    if args.k is None or args.n is None:
        raise InputError("verify needs --k and --n with --subgroup")
    if not args.subgroups:
        raise InputError("verify needs --subgroup or --example")
    gt = GroupType(args.k, args.n)
    gt.check_order()
    return gt, [parse_subgroup(text, gt, f"H{i}") for i, text in enumerate(args.subgroups, start=1)]


def cmd_verify(args) -> Outcome:
    gt, subgroups = _verify_subgroups(args)
    if args.weights:
        try:
            weights = [int(w) for w in args.weights.split(",")]
        except ValueError as e:
            raise InputError(f"weights must be integers, got {args.weights!r}") from e
        certificate = check_general(KaniRosenInstance(tuple(subgroups), tuple(weights)), progress=args.progress)
    else:
        certificate = check_corollary(subgroups, gt, progress=args.progress)
    signatures = {H.label: str(quotient_signature(H)) for H in subgroups}
    data = {
        "type": {"p": gt.k, "n": gt.n},
        "genus": total_genus(gt.k, gt.n),
        "subgroups": {H.label: str(H) for H in subgroups},
        "signatures": signatures,
        "certificate": certificate.to_dict(),
    }
    lines = [f"type {gt}, genus {total_genus(gt.k, gt.n)}"]
    lines += [f"  {H}  S/{H.label}: {signatures[H.label]}" for H in subgroups]
    lines += format_certificate_text(certificate)
    return data, "\n".join(lines) + "\n", EXIT_OK if certificate.passed else EXIT_CHECK


def cmd_enumerate(args) -> Outcome:
    gt = GroupType(args.p, args.n)
    rows = []
    for chi in enumerate_hyperplanes(gt):
        sig = hyperplane_signature(chi)
        rows.append({"label": chi.label, "branching": chi.branching, "signature": str(sig), "genus": sig.genus})
    positive = [r for r in rows if r["genus"] > 0]
    data: Dict[str, Any] = {
        "type": {"p": gt.k, "n": gt.n},
        "genus": total_genus(gt.k, gt.n),
        "hyperplanes": rows,
        "positive_genus": len(positive),
        "positive_genus_expected": hyperplane_count_with_positive_genus(gt.k, gt.n),
        "genus_sum": sum(r["genus"] for r in positive),
    }
    if gt.k == 2 and gt.n >= 6:
        data["family_sizes"] = {str(g): c for g, c in family_sizes(gt.n).items()}
    return data, format_mapping_text(f"hyperplanes of type {gt}", data), EXIT_OK


def cmd_hyperelliptic(args) -> Outcome:
    lambdas = _scalars(args.lambdas, args.precision)
    split = hyperelliptic_split_params(lambdas, precision=args.precision)
    data = split.to_dict()
    return data, format_mapping_text(f"genus-{split.genus} curve with an extra involution", data), EXIT_OK


def cmd_genus4(args) -> Outcome:
    l11, l12 = (parse_scalar(v, args.precision) for v in (args.l11, args.l12))
    family = genus4_family(l11, l12, precision=args.precision)
    data = family.to_dict()
    data["isogeny_classes"] = group_by_j(hyperelliptic_factors(family.factors)).to_dict()
    return data, format_mapping_text("genus-4 family", data), EXIT_OK


def cmd_identities(args) -> Outcome:
    qs = [args.q] if args.q else list(range(2, 8))
    rows = []
    ok = True
    for q in qs:
        for r in range(2, args.n_max + 2):
            closed, brute = psi_closed(q, r), psi_bruteforce(q, r)
            ok &= closed == brute
            rows.append({"check": f"psi_{q}({r})", "closed": closed, "count": brute,
                         "status": "OK" if closed == brute else "MISMATCH"})
        for n in range(max(2, r_q(q) - 1), args.n_max + 1):
            identity = genus_sum_identity(q, n)
            ok &= identity.holds
            rows.append({"check": f"genus({q},{n})", "closed": identity.lhs, "count": identity.rhs,
                         "status": "OK" if identity.holds else "MISMATCH"})
    data = {"checks": rows, "all_ok": ok}
    text = "\n".join(f"{r['check']:<16} {r['closed']:>12} {r['count']:>12}  {r['status']}" for r in rows)
    return data, text + "\n", EXIT_OK if ok else EXIT_CHECK


def cmd_conjecture(args) -> Outcome:
    lambdas = _scalars(args.lambdas, args.precision)
    B = branch_set_for(args.n, lambdas)
    report = conjectural_enumeration(args.k, args.n, B, reduce_by_symmetry=not args.no_symmetry)
    data = report.to_dict()
    if args.search:
        data["criterion"] = criterion_search(report.gfc_type, progress=args.progress).to_dict()
    return data, format_mapping_text(f"candidate factors of type {report.gfc_type}", data), EXIT_OK


def cmd_special(args) -> Outcome:
    l1 = parse_scalar(args.lambda1, args.precision)
    conditions = special_parameter_conditions(l1)
    dec = decompose_prime(2, 4, branch_set_for(4, [l1, 1 / l1]))
    data = {
        "lambda1": format_scalar(l1),
        "lambda2": format_scalar(1 / l1),
        "conditions": [c.to_dict() for c in conditions],
        "isogeny_classes": group_by_j(dec).to_dict(),
    }
    return data, format_mapping_text("lambda2 = 1/lambda1", data), EXIT_OK


def cmd_pentagonal(args) -> Outcome:
    data = pentagonal_parameters(args.precision).to_dict()
    return data, format_mapping_text("type (3,4) over the fifth roots of unity", data), EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], Outcome]] = {
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "hyperelliptic": cmd_hyperelliptic,
    "genus4": cmd_genus4,
    "identities": cmd_identities,
    "conjecture": cmd_conjecture,
    "special": cmd_special,
    "pentagonal": cmd_pentagonal,
}


def _global_options(parser: argparse.ArgumentParser, suppress: bool):
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    config = Config()
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=default("text"),
                        help="Report format (default: text)")
    parser.add_argument("--precision", type=int, default=default(int(config.get("PRECISION"))),
                        help="BigComplex precision in bits (default: 256)")
    parser.add_argument("--output", default=default(None), help="Write the report to this file")
    parser.add_argument("--log-level", default=default(config.get("LOG_LEVEL")), help="Logging level for stderr")
    parser.add_argument("--progress", action="store_true", default=default(False),
                        help="Show progress bars during certification")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gfcjac",
        allow_abbrev=False,
        description="Isogeny decompositions of Jacobians of generalized Fermat curves",
    )
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], allow_abbrev=False, help="Decompose JS for a prime exponent")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lambdas", action="append", default=[], help="Branch value (repeat)")
    p.add_argument("--group-by-j", action="store_true", help="Group elliptic factors by j-invariant")
    p.add_argument("--no-normalize", action="store_true", help="Keep factors on the original branch points")

    p = sub.add_parser("verify", parents=[common], allow_abbrev=False, help="Kani-Rosen check on explicit subgroups")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--subgroup", dest="subgroups", action="append", default=[],
                   help='Generators separated by ";", e.g. "a1*a2^2;a3" (repeat)')
    p.add_argument("--example", choices=sorted(SUBGROUP_TABLES), help="Named subgroup table")
    p.add_argument("--weights", help="Comma separated integer weights (general criterion)")

    p = sub.add_parser("enumerate", parents=[common], allow_abbrev=False,
                       help="List hyperplanes and quotient signatures")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("hyperelliptic", parents=[common], allow_abbrev=False,
                       help="Split a curve with an extra involution")
    p.add_argument("--lambda", dest="lambdas", action="append", default=[], required=True)

    p = sub.add_parser("genus4", parents=[common], allow_abbrev=False, help="Genus-4 curve with four elliptic factors")
    p.add_argument("--l11", required=True)
    p.add_argument("--l12", required=True)

    p = sub.add_parser("identities", parents=[common], allow_abbrev=False, help="Counting and genus identity checks")
    p.add_argument("--q", type=int)
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("conjecture", parents=[common], allow_abbrev=False, help="Candidate factors for any exponent")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lambdas", action="append", default=[])
    p.add_argument("--no-symmetry", action="store_true", help="Do not reduce point subsets by symmetry")
    p.add_argument("--search", action="store_true", help="Also search cyclic subgroups for a passing class")

    p = sub.add_parser("special", parents=[common], allow_abbrev=False, help="j coincidences on lambda2 = 1/lambda1")
    p.add_argument("--lambda1", required=True)

    sub.add_parser("pentagonal", parents=[common], allow_abbrev=False,
                   help="Branch values from the fifth roots of unity")
    return parser


def _emit(text: str, output: Optional[str]):
    if not output:
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as e:
        raise InputError(f"cannot write report to {output}: {e.strerror or e}") from e


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        setup_logger(level=str(args.log_level).upper(), log_file=Config().get("LOG_FILE"))
        log.debug(f"command {args.command}")
        data, text, code = COMMANDS[args.command](args)
        _emit(format_json(data) if args.format == OutputFormat.JSON.value else text, args.output)
    except CertificateError as e:
        log.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CHECK
    except (InputError, ResourceLimitError) as e:
        log.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as e:
        log.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return code


def main():
    """Main application entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
