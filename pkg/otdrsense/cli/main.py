import argparse
import logging
import os
import sys
import typing as T

from ..base import force_level, get_logger
from ..base.errors import ValidationError
from ..loggers import TensorBoardLogger
from .params import load_config
from .runner import Runner, EXIT_VALIDATION

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "configs", "reference.json")

log = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=DEFAULT_CONFIG, help="scenario JSON file (default: the bundled reference scenario)")
    common.add_argument("--out", default=None, help="output directory, overrides the config")
    common.add_argument("--seed", type=int, default=None, help="master 64 bit seed, overrides mc.seed")
    common.add_argument("--workers", type=int, default=None, help="Monte Carlo worker processes, overrides mc.workers")
    common.add_argument("--quiet", action="store_true", help="only log errors")
    common.add_argument("--tensorboard", default=None, metavar="DIR",
                        help="write scalar summaries under DIR (also enabled by OTDR_TENSORBOARD_PATH)")

    parser = argparse.ArgumentParser(prog="otdrsense",
                                     description="Intrusion detection and data rates on an OTDR-monitored fiber")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, help_text in (("coeffs", "back-scatter coefficients and Gram symbol taps"),
                            ("spectrum", "finite-n eigenvalues and Szego limits"),
                            ("region", "achievable (R, D) region and its plot script"),
                            ("mc", "Monte Carlo oracles next to their analytic values"),
                            ("verify", "run every cross-check, exit 2 on failure")):
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: T.Optional[T.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.quiet:
        force_level(logging.ERROR)
    try:
        config = load_config(args.config).with_overrides(args.seed, args.workers, args.out)
    except ValidationError as e:
        log.error(str(e))
        return EXIT_VALIDATION
    except OSError as e:
        log.error(f"cannot read config: {e}")
        return EXIT_VALIDATION

    tensorboard = TensorBoardLogger(args.tensorboard, args.subcommand)
    try:
        return Runner(config, tensorboard if tensorboard.enabled else None).run(args.subcommand)
    except ValidationError as e:
        log.error(str(e))
        return EXIT_VALIDATION
    finally:
        tensorboard.close()


if __name__ == "__main__":
    sys.exit(main())
