#!/usr/bin/env python3
"""
Tripod QPG - command-line entry point
"""

import logging
import sys
from typing import List, Optional

from .constants import LOG_FORMAT
from .controllers.cli_controller import build_parser, dispatch, run_config
from .controllers.output import render, write_output
from .errors import TripodError

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code"""
    try:
        args = build_parser().parse_args(argv)
        setup_logging(args.verbose)
        config = run_config(args)
        payload = dispatch(config, args)
        write_output(render(payload, config.output_format), config.out, sys.stdout)
    except TripodError as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"tripod-qpg: error: {exc}\n")
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
