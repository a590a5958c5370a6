"""
Общие помощники команд: чтение входных файлов и вывод зарядов в отчет
"""
import logging
from pathlib import Path
from typing import List

from ..charges import Charge
from ..errors import BadInput
from ..formats import format_charge, parse_charge_file, parse_rational

logger = logging.getLogger(__name__)


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise BadInput(f"cannot read {path}: {e.strerror or e}")


def load_charge(path: str) -> Charge:
    logger.debug(f"Loading charge file {path}")
    return parse_charge_file(read_text(path))


def charge_lines(mu: Charge) -> List[str]:
    return format_charge(mu).splitlines()


def rational_arg(token: str):
    """Тип аргумента argparse для p/q"""
    return parse_rational(token)
