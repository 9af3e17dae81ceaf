"""
Командная строка стенда.

Отчёты (JSON) печатаются в stdout, логи идут в stderr.
Коды выхода: 0 успех, 1 проверка или сертификат не прошли, 2 ошибка использования.
"""
import argparse
import shlex
import sys
import time
from typing import Callable, List, Optional

from ..config import get_config
from ..core.presentation import remove
from ..core.subgraph_spec import normalize
from ..core.vertex import format_vertex
from ..core.window import Connectivity, window
from ..families.bundle import FamilyBundle
from ..families.registry import get_registry
from ..morphisms.verification import verify_iso_window
from ..selfcontain.torsion import torsion
from ..selfcontain.well_mannered import verify_alternating
from ..services.errors import (
    CertificateInapplicableError,
    ContainmentError,
    DisjointnessError,
    EmbeddingError,
    GrammarError,
    LiftError,
    RestrictionError,
    UnknownNameError,
    WitnessVerificationError,
    WorkbenchError,
)
from ..services.logger_service import logger
from ..twins.certificates import certify_pairwise_distinct
from ..twins.embeddings import mutual_embeddings
from ..twins.survey import connectivity_survey
from ..twins.witness import TwinWitness, twin_family
from .export import window_to_dot, window_to_json
from .grammar import parse_morphism
from .report import RunReport
from .spec_args import parse_spec

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# Ошибки, означающие отрицательный результат проверки, а не ошибку использования
FAILURE_ERRORS = (
    CertificateInapplicableError,
    ContainmentError,
    DisjointnessError,
    EmbeddingError,
    LiftError,
    RestrictionError,
    WitnessVerificationError,
)

GRAMMAR_HELP = """\
Выражения отображений:
  f, std, fstar     именованные отображения семейства
  id                тождественное отображение
  beta(i,j)         чередующий автоморфизм, меняющий копии H_i и H_j
  inv(EXPR)         обратное отображение
  EXPR^k            степень (k может быть отрицательным), связывает сильнее '*'
  A*B               композиция: читается справа налево, сначала B, затем A

Подмножества (SPEC): имя из реестра семейства, union(SPEC,...) или image(EXPR,NAME).
"""


def _positive_int(text: str) -> int:
    """Тип argparse для размеров окон и границ перебора: целое >= 1"""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _bundle(args: argparse.Namespace, report: RunReport) -> FamilyBundle:
    report.family = args.family
    return get_registry().get(args.family)


def _twin(bundle: FamilyBundle) -> TwinWitness:
    if bundle.twin is None:
        raise WorkbenchError(f"family '{bundle.family_id}' has no twin data")
    return bundle.twin


def _spec_text(spec) -> str:
    nf = normalize(spec)
    if nf is not None and nf.is_finite:
        return "{" + ", ".join(sorted(format_vertex(v) for v in nf.points)) + "}"
    return repr(spec)


def cmd_families_list(args: argparse.Namespace, report: RunReport) -> int:
    report.data["families"] = get_registry().describe()
    return EXIT_OK


def cmd_window(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    graph = bundle.graph
    if args.remove:
        removed = parse_spec(args.remove, bundle)
        graph = remove(graph, removed, family_id=f"{graph.family_id} - {args.remove}")
    w = window(graph, args.size)
    text = window_to_dot(w) if args.format == "dot" else window_to_json(w)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.success(f"Окно записано в {args.output}", f"vertices={len(w.vertices)}, edges={len(w.edges)}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_check_iso(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    expr = parse_morphism(args.map, bundle.env.names.keys())
    m = bundle.env.evaluate(expr)
    target = bundle.graph
    if args.target_remove:
        target = remove(bundle.graph, parse_spec(args.target_remove, bundle),
                        family_id=f"{bundle.graph.family_id} - {args.target_remove}")
    result = verify_iso_window(m, bundle.graph, target, args.window, subject=args.map)
    report.add_verification(result)
    return EXIT_OK if result.passed else EXIT_FAILED


def cmd_check_alternating(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    result = verify_alternating(bundle.well_mannered_witness(args.witness), args.window)
    report.add_verification(result)
    return EXIT_OK if result.passed else EXIT_FAILED


def cmd_twins_build(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    tw = _twin(bundle)
    entry = twin_family(tw, args.index)
    report.data.update({
        "twin": entry.graph.family_id,
        "removed": _spec_text(entry.removed),
        "q_status": tw.q_status(),
    })
    embeddings = mutual_embeddings(tw, args.index, args.index + 1, args.window)
    report.add_verification(embeddings.there_report)
    report.add_verification(embeddings.back_report)
    return EXIT_OK


def cmd_twins_certify(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    certificates = certify_pairwise_distinct(_twin(bundle), args.max, args.scan)
    report.data["certificates"] = [c.model_dump(mode="json") for c in certificates]
    if any(c.verdict != "distinct" for c in certificates):
        report.verdict = "fail"
        return EXIT_FAILED
    return EXIT_OK


def cmd_twins_survey(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    entries = connectivity_survey(_twin(bundle), args.max, args.window)
    report.window_sizes.append(args.window)
    report.data["survey"] = [e.model_dump(mode="json") for e in entries]
    if any(e.verdict is Connectivity.DISCONNECTED for e in entries):
        report.verdict = "fail"
        return EXIT_FAILED
    return EXIT_OK


def cmd_torsion(args: argparse.Namespace, report: RunReport) -> int:
    bundle = _bundle(args, report)
    H = bundle.witness(args.witness)
    twisted = torsion(H, bundle.catalogue, args.scan)
    points = sorted(format_vertex(v) for v in twisted.vertices)
    report.data.update({"witness": H.name, "scan": args.scan, "twisted": points})
    if points:
        report.verdict = "fail"
        return EXIT_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    parser = argparse.ArgumentParser(
        prog="twinbench",
        description="Рабочий стенд для конечно заданных бесконечных графов",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--seed", type=int, default=None, help="записывается в отчёт выборочных проверок")
    sub = parser.add_subparsers(dest="command", required=True)

    families = sub.add_parser("families", help="встроенные семейства")
    families_sub = families.add_subparsers(dest="action", required=True)
    families_sub.add_parser("list", help="имена и заявленные аксиомы").set_defaults(handler=cmd_families_list)

    win = sub.add_parser("window", help="экспорт окна", epilog=GRAMMAR_HELP,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    win.add_argument("--family", required=True)
    win.add_argument("--size", type=_positive_int, required=True)
    win.add_argument("--format", choices=("dot", "json"), default="dot")
    win.add_argument("--remove", default=None, metavar="SPEC")
    win.add_argument("--output", default=None, metavar="PATH")
    win.set_defaults(handler=cmd_window)

    check = sub.add_parser("check", help="проверки на окне")
    check_sub = check.add_subparsers(dest="action", required=True)
    iso = check_sub.add_parser("iso", help="изоморфизм G -> G∖SPEC", epilog=GRAMMAR_HELP,
                               formatter_class=argparse.RawDescriptionHelpFormatter)
    iso.add_argument("--family", required=True)
    iso.add_argument("--map", required=True, metavar="EXPR")
    iso.add_argument("--target-remove", default=None, metavar="SPEC")
    iso.add_argument("--window", type=_positive_int, default=config.verify_window)
    iso.set_defaults(handler=cmd_check_iso)
    alternating = check_sub.add_parser("alternating", help="чередующий автоморфизм свидетеля")
    alternating.add_argument("--family", required=True)
    alternating.add_argument("--witness", required=True)
    alternating.add_argument("--window", type=_positive_int, default=config.verify_window)
    alternating.set_defaults(handler=cmd_check_alternating)

    twins = sub.add_parser("twins", help="сильные близнецы")
    twins_sub = twins.add_subparsers(dest="action", required=True)
    build = twins_sub.add_parser("build", help="построить G_I и вложения G_I <-> G_{I+1}")
    build.add_argument("--family", required=True)
    build.add_argument("--index", type=_positive_int, required=True)
    build.add_argument("--window", type=_positive_int, default=config.embedding_window)
    build.set_defaults(handler=cmd_twins_build)
    certify = twins_sub.add_parser("certify", help="сертификаты неизоморфности G_1..G_M")
    certify.add_argument("--family", required=True)
    certify.add_argument("--max", type=_positive_int, required=True)
    certify.add_argument("--scan", type=_positive_int, required=True)
    certify.set_defaults(handler=cmd_twins_certify)
    survey = twins_sub.add_parser("survey", help="связность окон G_1..G_M")
    survey.add_argument("--family", required=True)
    survey.add_argument("--max", type=_positive_int, required=True)
    survey.add_argument("--window", type=_positive_int, default=config.verify_window)
    survey.set_defaults(handler=cmd_twins_survey)

    tors = sub.add_parser("torsion", help="кручение свидетеля относительно каталога")
    tors.add_argument("--family", required=True)
    tors.add_argument("--witness", required=True)
    tors.add_argument("--scan", type=_positive_int, default=config.torsion_scan)
    tors.set_defaults(handler=cmd_torsion)
    return parser


def _emit(report: RunReport, started: float) -> None:
    report.elapsed_seconds = round(time.perf_counter() - started, 6)
    sys.stdout.write(report.to_text())


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа; возвращает код выхода"""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    report = RunReport(command=shlex.join(argv), seed=args.seed)
    handler: Callable[[argparse.Namespace, RunReport], int] = args.handler
    started = time.perf_counter()
    try:
        code = handler(args, report)
    except FAILURE_ERRORS as exc:
        logger.error(str(exc))
        nested = getattr(exc, "report", None)
        if nested is not None:
            report.add_verification(nested)
        report.verdict = "fail"
        report.notes.append(str(exc))
        code = EXIT_FAILED
    except GrammarError as exc:
        logger.error(str(exc), f"{exc.source}\n{' ' * (exc.column - 1)}^")
        report.verdict = "error"
        report.notes.append(str(exc))
        code = EXIT_USAGE
    except (UnknownNameError, WorkbenchError, ValueError) as exc:
        logger.error(str(exc))
        report.verdict = "error"
        report.notes.append(str(exc))
        code = EXIT_USAGE

    if args.handler is cmd_window and code == EXIT_OK:
        return code
    if code != EXIT_OK and report.verdict == "pass":
        report.verdict = "fail"
    _emit(report, started)
    return code

