"""Command-line front end.

Exit codes: 0 success, 1 usage or schema error, 2 no transversal line within
the retry budget, 3 no decomposition found.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence

from cli import commands
from cli.commands import UsageError
from cli.output import configure_logging
from errors import RetriesExhausted, SchemaError, WaringLabelsError
from resources.resources_manager import ResourcesManager

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_USAGE = 1
EXIT_RETRIES_EXHAUSTED = 2
EXIT_FAILURE = 3


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError("{}: {}".format(self.prog, message))


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--config', default=None, help="JSON file overriding the packaged settings.")
    parser.add_argument('--seed', type=int, default=None, help="Seed for every random stream of the run.")
    parser.add_argument('--verbose', action='store_true', help="Debug diagnostics on standard error.")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="waring-labels", description="Labeled Waring decompositions of real forms.")
    parser.add_argument('--version', action='version', version=str(ResourcesManager.settings["artifact_version"]))
    subparsers = parser.add_subparsers(dest="command", parser_class=_Parser)

    binary = subparsers.add_parser('decompose-binary', help="Sylvester decomposition of a binary form.")
    binary.add_argument('--form', required=True, help="Form JSON.")
    _common(binary)
    binary.set_defaults(handler=commands.decompose_binary)

    hypersurface = subparsers.add_parser('label-hypersurface', help="Weight-two label of a point against a hypersurface.")
    hypersurface.add_argument('--surface', required=True, help="Form JSON of the hypersurface.")
    hypersurface.add_argument('--point', required=True, help="Point JSON.")
    hypersurface.add_argument('--max-retries', type=int, default=None, help="Random lines tried before giving up.")
    hypersurface.add_argument('--prefer-pair', action='store_true', help="Return a conjugate pair when both kinds exist.")
    _common(hypersurface)
    hypersurface.set_defaults(handler=commands.label_hypersurface)

    veronese = subparsers.add_parser('decompose-veronese', help="Labeled decomposition by nonlinear least squares.")
    veronese.add_argument('--form', required=True, help="Form JSON.")
    veronese.add_argument('--weight', type=int, default=None, help="Weight of the label searched for.")
    veronese.add_argument('--template', default=None, help="Single label 'a,b' to try.")
    veronese.add_argument('--skip-all-real', action='store_true', help="Do not try the label (0, weight).")
    mode = veronese.add_mutually_exclusive_group()
    mode.add_argument('--conjugate-only', action='store_true', help="Only conjugate pairs, label (weight/2, 0).")
    mode.add_argument('--join', action='store_true', help="Grow the label from weight - 2 by one conjugate pair.")
    _common(veronese)
    veronese.set_defaults(handler=commands.decompose_veronese)

    rank = subparsers.add_parser('rank', help="Complex and real rank of a binary form.")
    rank.add_argument('--form', required=True, help="Form JSON.")
    rank.add_argument('--budget', type=int, default=None, help="Kernel samples per degree in the real-rank search.")
    _common(rank)
    rank.set_defaults(handler=commands.rank)

    survey = subparsers.add_parser('survey', help="Monte Carlo label histogram.")
    survey.add_argument('--spec', required=True, help="Ensemble JSON.")
    survey.add_argument('--threads', type=int, default=1, help="Worker threads; the result does not depend on it.")
    survey.add_argument('--csv', default=None, help="Also write the histogram as CSV to this path.")
    _common(survey)
    survey.set_defaults(handler=commands.survey)

    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write("{}\n".format(e))
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return EXIT_SUCCESS if e.code in (0, None) else EXIT_USAGE

    if getattr(args, "handler", None) is None:
        sys.stderr.write("waring-labels: a subcommand is required\n")
        return EXIT_USAGE

    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (UsageError, SchemaError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except RetriesExhausted as e:
        logger.error("%s", e)
        return EXIT_RETRIES_EXHAUSTED
    except ValueError as e:
        # invalid forms and points, out-of-range parameters
        logger.error("%s", e)
        return EXIT_USAGE
    except WaringLabelsError as e:
        logger.error("%s", e)
        return EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(dispatch(argv))
