"""
Команда selftest: прогон набора эталонных случаев
"""
import logging

from ..errors import ExitCode
from ..fixtures import run_fixtures
from ..schemas import Report, ReportStatus

logger = logging.getLogger(__name__)


def handle_selftest(args) -> Report:
    results = run_fixtures()
    failed = [case.name for case, passed, _ in results if not passed]
    report = Report(command="selftest")
    report.section(
        "fixtures",
        [f"{case.module}.{case.name}: {'OK' if passed else f'FAIL (got {actual})'}" for case, passed, actual in results],
    )
    report.record("total", len(results)).record("failed", len(failed))
    if failed:
        report.fail(ReportStatus.VIOLATION, ExitCode.VIOLATION)
    logger.info(f"Selftest: {len(results) - len(failed)}/{len(results)} fixtures passed")
    return report


def register(subparsers) -> None:
    parser = subparsers.add_parser("selftest", help="run the bundled fixture suite")
    parser.set_defaults(handler=handle_selftest)
