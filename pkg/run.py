#!/usr/bin/env python3
"""
Запуск CLI ChargeKit
"""
import logging
import sys

from dotenv import load_dotenv

load_dotenv()

from chargekit.main import configure_logging, run  # noqa: E402

if __name__ == "__main__":
    configure_logging()
    logging.getLogger(__name__).debug(f"🧮 Запуск ChargeKit: {' '.join(sys.argv[1:])}")
    sys.exit(run(sys.argv[1:]))
