"""
Точка входа CLI chargekit
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from . import __version__
from .commands import register_all
from .config import settings
from .errors import ChargeKitError, ExitCode
from .schemas import Report, ReportStatus

logger = logging.getLogger(__name__)


def configure_logging() -> None:
    """Логи уходят в stderr, отчеты в stdout"""
    level = logging.DEBUG if settings.DEBUG else getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chargekit",
        description="Exact computations with finitely additive charges on the interval algebra of [0,1)",
    )
    parser.add_argument("--version", action="version", version=f"chargekit {__version__}")
    subparsers = parser.add_subparsers(dest="verb", required=True)
    register_all(subparsers)
    return parser


def _error_report(verb: str, detail: str, code: ExitCode) -> Report:
    report = Report(command=verb or "unknown", status=ReportStatus.ERROR, exit_code=code)
    return report.section("error", [detail]).record("error", detail)


def execute(argv: Optional[List[str]] = None) -> Report:
    """Разбор аргументов и выполнение одной команды; ошибки превращаются в отчет"""
    parser = build_parser()
    verb = None
    try:
        args = parser.parse_args(argv)
        verb = args.verb
        logger.info(f"Command: {verb}")
        report = args.handler(args)
    except ChargeKitError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        report = _error_report(verb, e.detail, e.exit_code)
        instance = getattr(e, "instance", "")
        if instance:
            report.section("instance", instance.splitlines())
        if e.exit_code == ExitCode.VIOLATION:
            report.status = ReportStatus.VIOLATION
    except ValidationError as e:
        detail = "; ".join(error["msg"] for error in e.errors())
        logger.error(f"Validation error: {detail}")
        report = _error_report(verb, detail, ExitCode.SEMANTIC_ERROR)
    logger.info(f"Result: {report.status.value} (exit {int(report.exit_code)})")
    return report


def run(argv: Optional[List[str]] = None) -> int:
    report = execute(argv)
    sys.stdout.write(report.render())
    return int(report.exit_code)


def main() -> None:
    configure_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
