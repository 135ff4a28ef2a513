"""
Command-line interface.

    python -m app.cli arq gamma --family D --rank 4 --arrows standard
    python -m app.cli crystal gen --family A --rank 2 --arrows "2>1" --hw "1,0" --format json
    python -m app.cli crystal verify --in graph.json
    python -m app.cli crystal compare-ssyt --rank 3 --j 2 --m 2
    python -m app.cli kr gen --rank 2 --j 1 --m 1
    python -m app.cli promote --in modclass.json --j 3 --m 3
    python -m app.cli eps-star --in modclass.json

Exit codes: 0 success, 1 failed verification, 2 bad input.
"""
import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from app.config import settings
from app.features.crystals.application.use_cases.compute_eps_star_use_case import ComputeEpsStarUseCase
from app.features.crystals.application.use_cases.generate_crystal_use_case import GenerateCrystalUseCase
from app.features.crystals.application.use_cases.verify_crystal_use_case import VerifyCrystalUseCase
from app.features.crystals.infrastructure.exporters.dot_exporter import CrystalDotExporter
from app.features.crystals.presentation.schemas import CrystalGraphSchema, ModClassSchema
from app.features.promotion.application.use_cases.build_kr_graph_use_case import BuildKRGraphUseCase
from app.features.promotion.application.use_cases.promote_use_case import PromoteUseCase
from app.features.promotion.presentation.schemas import ExtArraySchema, PromoteResponse
from app.features.quivers.application.use_cases.build_ar_quiver_use_case import BuildARQuiverUseCase
from app.features.quivers.domain.entities import QuiverSpec, dynkin_edges
from app.features.quivers.infrastructure.exporters.dot_exporter import ARQuiverDotExporter
from app.features.quivers.presentation.schemas import ARQuiverResponse
from app.features.tableaux.application.use_cases.compare_with_tableaux_use_case import (
    CompareWithTableauxUseCase,
)
from app.shared.exceptions import INPUT_ERRORS, ARCrystalError, NodeLimitExceeded, QuiverValidationError


logger = logging.getLogger("app.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class InputError(Exception):
    """Unreadable input file or malformed flag value."""


def parse_arrows(text: str, family: str, rank: int) -> tuple[tuple[int, int], ...]:
    """'standard' or a comma-separated list of 'a>b' arrows."""
    if text.strip() == "standard":
        return tuple(sorted((b, a) for a, b in dynkin_edges(family, rank)))
    arrows = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        src, sep, dst = part.partition(">")
        if not sep:
            raise QuiverValidationError(f"Arrow {part!r} is not of the form a>b")
        try:
            arrows.append((int(src), int(dst)))
        except ValueError:
            raise QuiverValidationError(f"Arrow {part!r} has a non-integer endpoint") from None
    return tuple(arrows)


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"Highest weight {text!r} is not a comma-separated list of integers") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}") from None


def _quiver_spec(args: argparse.Namespace) -> QuiverSpec:
    return QuiverSpec(args.family, args.rank, parse_arrows(args.arrows, args.family, args.rank))


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_arq_gamma(args: argparse.Namespace) -> int:
    ar = BuildARQuiverUseCase().execute(_quiver_spec(args))
    if args.out == "dot":
        _emit(ARQuiverDotExporter().export(ar))
    else:
        _emit(ARQuiverResponse.from_domain(ar).model_dump_json(indent=2))
    return EXIT_OK


def cmd_crystal_gen(args: argparse.Namespace) -> int:
    quiver = BuildARQuiverUseCase().execute(_quiver_spec(args)).quiver
    use_case = GenerateCrystalUseCase(max_nodes=args.max_nodes, threads=args.threads)
    graph = use_case.execute(quiver, parse_weight(args.hw))
    _emit(_format_graph(graph, args.format))
    return EXIT_OK


def _format_graph(graph, fmt: str) -> str:
    if fmt == "dot":
        return CrystalDotExporter().export(graph)
    return CrystalGraphSchema.from_domain(graph).dump()


def cmd_crystal_verify(args: argparse.Namespace) -> int:
    graph = CrystalGraphSchema.model_validate_json(_read(args.input)).to_domain()
    violations = VerifyCrystalUseCase().execute(graph)
    for line in violations:
        _emit(line)
    if violations:
        return EXIT_FAILED
    _emit(f"ok: {len(graph)} nodes, {len(graph.edges)} edges")
    return EXIT_OK


def cmd_crystal_compare(args: argparse.Namespace) -> int:
    use_case = CompareWithTableauxUseCase(max_nodes=args.max_nodes, threads=args.threads)
    result = use_case.execute(args.rank, args.j, args.m)
    if result.isomorphic:
        _emit(f"isomorphic: {len(result.modules)} nodes")
        return EXIT_OK
    _emit(f"not isomorphic: {len(result.modules)} modules, {len(result.tableaux)} tableaux")
    return EXIT_FAILED


def cmd_kr_gen(args: argparse.Namespace) -> int:
    use_case = BuildKRGraphUseCase(max_nodes=args.max_nodes, threads=args.threads)
    _emit(_format_graph(use_case.execute(args.rank, args.j, args.m), args.format))
    return EXIT_OK


def cmd_promote(args: argparse.Namespace) -> int:
    module = ModClassSchema.model_validate_json(_read(args.input)).to_domain()
    result, trace = PromoteUseCase().execute(module, args.j, args.m)
    if args.trace:
        response = PromoteResponse(
            result=ModClassSchema.from_domain(result),
            trace=[ExtArraySchema.from_domain(s) for s in trace],
        )
        _emit(response.model_dump_json(indent=2))
    else:
        _emit(ModClassSchema.from_domain(result).model_dump_json(indent=2))
    return EXIT_OK


def cmd_eps_star(args: argparse.Namespace) -> int:
    module = ModClassSchema.model_validate_json(_read(args.input)).to_domain()
    values = ComputeEpsStarUseCase().execute(module)
    _emit(json.dumps({"eps_star": list(values)}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arcrystal", description=settings.APP_NAME)
    parser.add_argument("--max-nodes", type=int, default=settings.MAX_NODES, help="crystal node cap")
    parser.add_argument("--threads", type=int, default=settings.THREADS, help="BFS worker threads")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="logging level (stderr)")
    commands = parser.add_subparsers(dest="command", required=True)

    def quiver_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", required=True, choices=["A", "D"])
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--arrows", required=True, help="'standard' or 'a>b,c>d,...'")

    arq = commands.add_parser("arq", help="Auslander-Reiten quivers").add_subparsers(dest="action", required=True)
    gamma = arq.add_parser("gamma", help="export the AR quiver")
    quiver_flags(gamma)
    gamma.add_argument("--out", choices=["dot", "json"], default="json")
    gamma.set_defaults(handler=cmd_arq_gamma)

    crystal = commands.add_parser("crystal", help="crystal graphs").add_subparsers(dest="action", required=True)
    gen = crystal.add_parser("gen", help="generate B(lambda)")
    quiver_flags(gen)
    gen.add_argument("--hw", required=True, help="highest weight 'c1,...,cn'")
    gen.add_argument("--format", choices=["dot", "json"], default="json")
    gen.set_defaults(handler=cmd_crystal_gen)
    verify = crystal.add_parser("verify", help="check the crystal axioms on a graph JSON")
    verify.add_argument("--in", dest="input", required=True)
    verify.set_defaults(handler=cmd_crystal_verify)
    compare = crystal.add_parser("compare-ssyt", help="compare B(m w_j) with the tableau crystal")
    for flag in ("--rank", "--j", "--m"):
        compare.add_argument(flag, required=True, type=int)
    compare.set_defaults(handler=cmd_crystal_compare)

    kr = commands.add_parser("kr", help="Kirillov-Reshetikhin crystals").add_subparsers(dest="action", required=True)
    kr_gen = kr.add_parser("gen", help="KR crystal graph of B(m w_j)")
    for flag in ("--rank", "--j", "--m"):
        kr_gen.add_argument(flag, required=True, type=int)
    kr_gen.add_argument("--format", choices=["dot", "json"], default="json")
    kr_gen.set_defaults(handler=cmd_kr_gen)

    promote = commands.add_parser("promote", help="apply promotion to a module class")
    promote.add_argument("--in", dest="input", required=True)
    promote.add_argument("--j", required=True, type=int)
    promote.add_argument("--m", required=True, type=int)
    promote.add_argument("--trace", action="store_true", help="include the extended-array states")
    promote.set_defaults(handler=cmd_promote)

    eps_star = commands.add_parser("eps-star", help="starred string lengths of a module class")
    eps_star.add_argument("--in", dest="input", required=True)
    eps_star.set_defaults(handler=cmd_eps_star)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        return args.handler(args)
    except (InputError, ValidationError, *INPUT_ERRORS) as e:
        logger.error(f"{type(e).__name__}: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except NodeLimitExceeded as e:
        logger.error(f"Node limit of {e.limit} exceeded")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except ARCrystalError as e:
        logger.exception(f"Computation failed: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
