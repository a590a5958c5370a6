"""
Регистрация команд CLI
"""
from . import complete, decompose, domination, measures, selftest, yan

COMMANDS = (measures, decompose, domination, complete, yan, selftest)


def register_all(subparsers) -> None:
    for module in COMMANDS:
        module.register(subparsers)


__all__ = ["COMMANDS", "register_all"]
