"""
Command-line front end: python -m app <subcommand> ...

JSON goes to stdout (or --output), progress and errors to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
import argparse
import csv
import io
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from pydantic import ValidationError

from app.config import Settings, settings
from app.exceptions import ComputationError, RouteMismatchError
from app.models import CASE_KEYS, Partition, SignFamily, SymmetricSpaceCase, Twist
from app.schemas import (
    CrosscheckResult,
    IdentityResultSchema,
    InvolutionResponse,
    MultiplicityRequest,
    MultiplicityResponse,
    OrbitTableResponse,
    TableauResponse,
    UnipotentRow,
    UnipotentTableResponse,
)
from app.services.character_service import CharacterService
from app.services.identity_service import (
    CLOSED_FORM_FAMILIES,
    IDENTITIES,
    IdentityService,
    closed_form_enumeration,
)
from app.services.involution_service import INVOLUTION_FILTERS, InvolutionService
from app.services.multiplicity_service import MultiplicityService, random_instance
from app.services.orbit_service import OrbitService
from app.services.partition_service import generate_partitions
from app.services.tableau_service import TableauService
from app.utils.reporting import RunRecorder, timed

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

BOUND_FLAGS = (
    "partition_bound",
    "character_bound",
    "oracle_bound",
    "involution_bound",
    "brute_force_bound",
    "tableau_bound",
    "identity_plain_bound",
    "identity_signed_bound",
    "multiplicity_bound",
    "max_support",
    "max_q",
    "orbit_element_bound",
)

FAMILIES = {"plain": None, "plus": SignFamily.PLUS, "star": SignFamily.STAR}


def _common_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("json", "csv"), default="json", help="output format")
    parent.add_argument("--output", type=Path, default=None, help="write output to this file")
    parent.add_argument("--log-level", default=None, help="log level for the error stream")
    bounds = parent.add_argument_group("bounds")
    for name in BOUND_FLAGS:
        bounds.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=None)
    return parent


def _add_case_arguments(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--case", choices=tuple(CASE_KEYS), required=required)
    parser.add_argument("--n-plus", type=int, default=None)
    parser.add_argument("--n-minus", type=int, default=None)
    parser.add_argument("--epsilon", type=int, choices=(1, -1), default=None)
    parser.add_argument("--special", action="store_true", help="special orthogonal variant")


def build_parser() -> argparse.ArgumentParser:
    parent = _common_parser()
    parser = argparse.ArgumentParser(prog="symspace", description="Exact multiplicities for GL_n / U_n symmetric spaces")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[parent], help="check the symmetric-group identities")
    verify.add_argument("--identity", default="all", help=f"'all' or one of: {', '.join(IDENTITIES)}")
    verify.add_argument("--max-size", type=int, default=None)
    verify.add_argument("--closed-forms", action="store_true", help="also check the multiplicative closed forms")
    verify.add_argument("--json", action="store_true", help="JSON output (the default)")

    char = sub.add_parser("char", parents=[parent], help="character value chi^rho at nu")
    char.add_argument("--rho", type=Partition.parse, required=True)
    char.add_argument("--nu", type=Partition.parse, required=True)
    char.add_argument("--oracle", action="store_true", help="use the Kostka oracle")

    involutions = sub.add_parser("involutions", parents=[parent], help="involutions commuting with w_nu")
    involutions.add_argument("--nu", type=Partition.parse, required=True)
    involutions.add_argument("--family", choices=tuple(FAMILIES), default="plain")
    involutions.add_argument("--filter", choices=tuple(INVOLUTION_FILTERS), default="none")
    involutions.add_argument("--weight", default="one", help="named weight or weight expression")
    involutions.add_argument("--signature", type=int, default=None)

    tableaux = sub.add_parser("tableaux", parents=[parent], help="signed tableaux of shape mu")
    tableaux.add_argument("--mu", type=Partition.parse, required=True)
    tableaux.add_argument("--signature", type=int, default=None)
    tableaux.add_argument("--fixed-by", choices=("phi", "psi", "phipsi"), default=None)

    orbits = sub.add_parser("orbits", parents=[parent], help="Frobenius orbits for a concrete q")
    orbits.add_argument("--q", type=int, required=True)
    orbits.add_argument("--twist", type=Twist, choices=tuple(Twist), default=Twist.SPLIT)
    orbits.add_argument("--max-level", type=int, default=1)

    mult = sub.add_parser("mult", parents=[parent], help="multiplicity for a multipartition read from JSON")
    _add_case_arguments(mult, required=False)
    mult.add_argument("--input", type=Path, required=True)

    unipotent = sub.add_parser("unipotent-table", parents=[parent], help="unipotent multiplicities for all rho of n")
    _add_case_arguments(unipotent)
    unipotent.add_argument("--n", type=int, required=True)

    crosscheck = sub.add_parser("crosscheck", parents=[parent], help="basic-character multiplicity by both routes")
    _add_case_arguments(crosscheck, required=False)
    crosscheck.add_argument("--input", type=Path, default=None)
    crosscheck.add_argument("--random", type=int, default=None, metavar="N", help="N random abstract instances")
    crosscheck.add_argument("--seed", type=int, default=0)
    return parser


def _config(args: argparse.Namespace) -> Settings:
    updates = {name: getattr(args, name) for name in BOUND_FLAGS if getattr(args, name, None) is not None}
    return settings.model_copy(update=updates)


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)


def _emit(args: argparse.Namespace, payload: Any, rows: Optional[List[Dict[str, Any]]] = None) -> None:
    if args.format == "csv" and rows is not None:
        buffer = io.StringIO()
        columns = list(dict.fromkeys(key for row in rows for key in row))
        writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: json.dumps(v, separators=(",", ":")) if isinstance(v, (list, dict)) else v for k, v in row.items()})
        _write(args, buffer.getvalue())
    else:
        _write(args, json.dumps(payload, indent=2) + "\n")


def _load_request(args: argparse.Namespace) -> MultiplicityRequest:
    data = json.loads(args.input.read_text())
    for field in ("case", "n_plus", "n_minus", "epsilon"):
        value = getattr(args, field)
        if value is not None:
            data[field] = value
    if args.special:
        data["special"] = True
    return MultiplicityRequest.model_validate(data)


# Subcommands

@timed("verify")
def cmd_verify(args: argparse.Namespace, config: Settings) -> int:
    service = IdentityService(config)
    recorder = RunRecorder(args.argv)
    names = list(IDENTITIES) if args.identity == "all" else [args.identity]
    for case in service.cases(names, args.max_size):
        try:
            result = service.check_identity(case)
        except ComputationError as exc:
            recorder.record({"identity": case.name, "nu": case.nu.to_list(), "signature": case.signature}, True, str(exc))
            continue
        recorder.record(IdentityResultSchema.from_result(result).model_dump(), failed=not result.equal)
    if args.closed_forms:
        limit = args.max_size if args.max_size is not None else config.identity_plain_bound
        for family in CLOSED_FORM_FAMILIES:
            for size in range(limit + 1):
                for nu in generate_partitions(size):
                    value = service.multiplicative_closed_form(nu, family)
                    enumerated = list(closed_form_enumeration(nu, family))
                    item = {"identity": family, "nu": nu.to_list(), "closed_form": value, "enumerated": enumerated}
                    recorder.record(item, failed=enumerated != [value, value])
    report = recorder.report()
    _emit(args, report.model_dump(), report.items)
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_char(args: argparse.Namespace, config: Settings) -> int:
    service = CharacterService(config)
    evaluate = service.character_oracle if args.oracle else service.character
    value = evaluate(args.rho, args.nu)
    _emit(args, value, [{"rho": args.rho.to_list(), "nu": args.nu.to_list(), "value": value}])
    return EXIT_OK


def cmd_involutions(args: argparse.Namespace, config: Settings) -> int:
    service = InvolutionService(config)
    count, weighted = service.summarize(args.nu, FAMILIES[args.family], args.filter, args.weight, args.signature)
    response = InvolutionResponse(
        nu=args.nu.to_list(),
        family=args.family,
        filter=args.filter,
        weight=args.weight,
        signature=args.signature,
        count=count,
        weighted_sum=weighted,
    )
    _emit(args, response.model_dump(), [response.model_dump()])
    return EXIT_OK


def cmd_tableaux(args: argparse.Namespace, config: Settings) -> int:
    service = TableauService(config)
    count = service.count(args.mu, args.signature, args.fixed_by)
    distribution = {}
    if args.signature is None and args.fixed_by is None:
        distribution = service.signature_distribution(args.mu)
    response = TableauResponse(
        mu=args.mu.to_list(),
        signature=args.signature,
        fixed_by=args.fixed_by,
        count=count,
        signature_distribution=distribution,
    )
    rows = [{"signature": d, "count": c} for d, c in distribution.items()] or [response.model_dump()]
    _emit(args, response.model_dump(), rows)
    return EXIT_OK


def cmd_orbits(args: argparse.Namespace, config: Settings) -> int:
    table = OrbitService(config).enumerate_orbits(args.q, args.twist, args.max_level)
    response = OrbitTableResponse.from_table(table)
    _emit(args, response.model_dump(mode="json"), [o.model_dump() for o in response.orbits])
    return EXIT_OK


def cmd_mult(args: argparse.Namespace, config: Settings) -> int:
    request = _load_request(args)
    case, rho = request.build(OrbitService(config))
    service = MultiplicityService(config)
    if case.special:
        value = service.so_multiplicity(case, rho, request.k_zeta)
    else:
        value = service.multiplicity(case, rho)
    response = MultiplicityResponse(
        case=case.key,
        description=case.describe(),
        assignments=rho.to_dict(),
        multiplicity=value,
    )
    _emit(args, response.model_dump(), [response.model_dump()])
    return EXIT_OK


def cmd_unipotent_table(args: argparse.Namespace, config: Settings) -> int:
    case = SymmetricSpaceCase.from_key(args.case, args.n, args.n_plus, args.n_minus, args.epsilon, args.special)
    rows = [
        UnipotentRow(rho=rho.to_list(), multiplicity=value)
        for rho, value in MultiplicityService(config).unipotent_table(case)
    ]
    response = UnipotentTableResponse(case=case.key, description=case.describe(), rows=rows)
    _emit(args, response.model_dump(), [row.model_dump() for row in rows])
    return EXIT_OK


def _crosscheck_item(service: MultiplicityService, case: SymmetricSpaceCase, nu) -> CrosscheckResult:
    try:
        left, right = service.crosscheck(case, nu)
    except RouteMismatchError as exc:
        return CrosscheckResult(
            case=case.describe(), nu=nu.to_dict(),
            involution=exc.involution, character=exc.character, equal=False, error=str(exc),
        )
    except ComputationError as exc:
        return CrosscheckResult(case=case.describe(), nu=nu.to_dict(), equal=False, error=str(exc))
    return CrosscheckResult(case=case.describe(), nu=nu.to_dict(), involution=left, character=right, equal=True)


@timed("crosscheck")
def cmd_crosscheck(args: argparse.Namespace, config: Settings) -> int:
    service = MultiplicityService(config)
    recorder = RunRecorder(args.argv)
    if args.random is not None:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            case, nu = random_instance(rng, config.multiplicity_bound, config.max_support)
            result = _crosscheck_item(service, case, nu)
            recorder.record(result.model_dump(), failed=not result.equal, reason=result.error)
    elif args.input is not None:
        case, nu = _load_request(args).build(OrbitService(config))
        result = _crosscheck_item(service, case, nu)
        recorder.record(result.model_dump(), failed=not result.equal, reason=result.error)
    else:
        raise ComputationError("crosscheck needs --input or --random")
    report = recorder.report()
    _emit(args, report.model_dump(), report.items)
    return EXIT_OK if report.ok else EXIT_FAILURE


COMMANDS = {
    "verify": cmd_verify,
    "char": cmd_char,
    "involutions": cmd_involutions,
    "tableaux": cmd_tableaux,
    "orbits": cmd_orbits,
    "mult": cmd_mult,
    "unipotent-table": cmd_unipotent_table,
    "crosscheck": cmd_crosscheck,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    args.argv = list(argv) if argv is not None else sys.argv[1:]
    config = _config(args)
    logging.basicConfig(stream=sys.stderr, level=args.log_level or config.log_level)
    try:
        return COMMANDS[args.command](args, config)
    except (ValueError, ValidationError, OSError) as exc:
        logger.error(f"{args.command}: {exc}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
