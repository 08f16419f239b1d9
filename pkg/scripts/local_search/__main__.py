"""
Command line tool for ordering-based local search on weighted parent score
files.
"""
import os
import re
import sys
import logging
import argparse
from argparse import RawTextHelpFormatter
from typing import Any, Dict, List, Optional, Tuple

import yaml

from ordsearch.common.exception import (
    SolverConfigError, WorkBoundExceededError)
from ordsearch.data.readers import ScoreFileReader
from ordsearch.data.writers import ResultWriter, write_restart_csv
from ordsearch.pipeline import SearchPipeline
from ordsearch.solvers import (
    BaseSolver, BruteForceSolver, HillclimbSolver, InversionsSolver,
    InvWinSolver, OrderingScoreSolver, XPLocalSearchSolver)

logging.basicConfig(level=os.environ.get("LOGLEVEL", "INFO"))
log = logging.getLogger(__name__)

USAGE_ERROR = 1
INPUT_ERROR = 2


class UsageError(Exception):
    pass


class LocalSearchParser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write('Error: %s\n' % message)
        self.print_help(sys.stderr)
        sys.exit(USAGE_ERROR)


_NATURAL = re.compile(r"[0-9]+")
_INTEGER = re.compile(r"-?[0-9]+")


def integer(value: str) -> int:
    if not _INTEGER.fullmatch(value):
        raise argparse.ArgumentTypeError(
            f"expected a base-10 integer, got {value!r}")
    return int(value)


def encoding_name(value: str) -> str:
    if value == "bounded-arcs":
        return value
    name, _, bound = value.partition(":")
    if name == "bounded-indegree" and _NATURAL.fullmatch(bound):
        return value
    raise argparse.ArgumentTypeError(
        f"expected 'bounded-arcs' or 'bounded-indegree:<c>', got {value!r}")


def oracle_reps(value: str):
    if value == "guaranteed":
        return value
    reps = int(value) if _NATURAL.fullmatch(value) else 0
    if reps < 1:
        raise argparse.ArgumentTypeError(
            f"expected a positive integer or 'guaranteed', got {value!r}")
    return reps


def read_config(path: Optional[str]) -> Dict[str, Any]:
    if path is None:
        return {}
    try:
        with open(path) as f:
            configs = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as e:
        raise UsageError(f"cannot read the config file {path}: {e}") from e
    if not isinstance(configs, dict):
        raise UsageError(f"the config file {path} is not a mapping")
    return configs


def overrides(args_, names: Dict[str, str]) -> Dict[str, Any]:
    r"""The solver configs given by flags, which win over the config file.
    ``names`` maps argument names to config keys.
    """
    configs = {}
    for arg, key in names.items():
        value = getattr(args_, arg, None)
        if value is not None and value is not False:
            configs[key] = value
    return configs


_COMMON = {'k': 'k', 'seed': 'seed', 'threads': 'workers'}


def score_solver(args_) -> Tuple[BaseSolver, Dict[str, Any]]:
    return OrderingScoreSolver(), overrides(
        args_, {**_COMMON, 'superstructure_order': 'superstructure_order'})


def ls_solver(args_) -> Tuple[BaseSolver, Dict[str, Any]]:
    names = {**_COMMON, 'radius': 'radius'}
    solver: BaseSolver
    if args_.distance in ('insert', 'swap'):
        solver = XPLocalSearchSolver()
        names.update(work_bound='work_bound', force='force')
        configs = overrides(args_, names)
        configs['distance'] = args_.distance
        return solver, configs
    if args_.distance == 'inv':
        solver = InversionsSolver()
        names.update(repetitions='repetitions', exact='exact')
    else:
        solver = InvWinSolver()
        names.update(oracle_reps='oracle_reps', exact='exact')
    return solver, overrides(args_, names)


def hillclimb_solver(args_) -> Tuple[BaseSolver, Dict[str, Any]]:
    configs = overrides(args_, {
        'seed': 'seed', 'threads': 'workers', 'epsilon': 'epsilon',
        'max_iterations': 'max_iterations', 'restarts': 'restarts',
        'certify': 'certify'})
    if args_.radius is not None:
        configs['radius'] = args_.radius[0]
        configs['radii'] = list(args_.radius)
    return HillclimbSolver(), configs


def brute_solver(args_) -> Tuple[BaseSolver, Dict[str, Any]]:
    return BruteForceSolver(), overrides(
        args_, {**_COMMON, 'distance': 'distance', 'radius': 'radius'})


def build_pipeline(args_) -> SearchPipeline:
    solver, flag_configs = args_.solver_factory(args_)
    solver_configs = read_config(args_.config)
    solver_configs.update(flag_configs)

    reader_configs = {
        'weighted': args_.weighted,
        'assume_empty_score': args_.assume_empty_score,
        'encoding': args_.encode,
        'ordering_path': getattr(args_, 'ordering', None),
    }

    pipeline = SearchPipeline()
    try:
        pipeline.set_reader(ScoreFileReader(), reader_configs)
        pipeline.set_solver(solver, solver_configs)
        if args_.format != 'csv':
            pipeline.set_writer(ResultWriter(), {'format': args_.format})
        pipeline.initialize()
    except (SolverConfigError, ValueError) as e:
        raise UsageError(str(e)) from e
    return pipeline


def run(args_) -> str:
    r"""Runs the pipeline on the input and renders the output."""
    pipeline = build_pipeline(args_)
    pipeline.run(args_.input)

    if args_.format == 'csv':
        return write_restart_csv(pipeline.resource.get('restart_stats', []))
    writer = pipeline.writer
    assert writer is not None
    if not writer.outputs:
        raise ValueError(f"no score files found in {args_.input}")
    return "".join(writer.outputs)


def add_common_arguments(parser: argparse.ArgumentParser,
                         with_k: bool = True, with_ordering: bool = True,
                         formats: Tuple[str, ...] = ('text', 'json', 'dot'),
                         default_format: str = 'text'):
    parser.add_argument('input',
                        type=str,
                        help='A score file, or a directory of *.scores '
                             'files.')
    if with_k:
        parser.add_argument('-k',
                            type=integer,
                            default=None,
                            help='The weight budget (default: 0).')
    if with_ordering:
        parser.add_argument('--ordering',
                            type=str,
                            default=None,
                            help='A file with the start ordering, one '
                                 'variable name per line (default: file '
                                 'order).')
    parser.add_argument('--seed',
                        type=integer,
                        default=None,
                        help='The seed of all random choices (default: 0).')
    parser.add_argument('--threads',
                        type=integer,
                        default=None,
                        help='Number of worker processes (default: 1). The '
                             'output does not depend on it.')
    parser.add_argument('--format',
                        choices=formats,
                        default=default_format,
                        help=f'The output format (default: {default_format}).')
    parser.add_argument('--weighted',
                        default=False,
                        action='store_true',
                        help='Read the weighted score file grammar.')
    parser.add_argument('--assume-empty-score',
                        type=float,
                        default=None,
                        help='Add an empty parent set with this score to '
                             'variables that lack one, instead of failing.')
    parser.add_argument('--encode',
                        type=encoding_name,
                        default=None,
                        help="Set the weights with 'bounded-arcs' or "
                             "'bounded-indegree:<c>'.")
    parser.add_argument('--config',
                        type=str,
                        default=None,
                        help='A YAML file of solver configs; flags win over '
                             'it.')
    parser.add_argument('--output',
                        type=str,
                        default=None,
                        help='Write the output to this file instead of the '
                             'standard output.')


def create_parser() -> LocalSearchParser:
    file_description = '\n'.join([
        "Ordering-based local search for Bayesian network structure "
        "learning with weighted parent scores.",
        "\n*score*: Best network for one ordering.",
        "Example: ordsearch score asia.scores --ordering asia.order -k 2\n",
        "*ls*: Best network within a radius of the start ordering.",
        "Example: ordsearch ls asia.scores --distance inv -r 4 -k 1\n",
        "*hillclimb*: Hill climbing from random restarts, CSV of the "
        "final scores.",
        "Example: ordsearch hillclimb scores/ -r 3 5 7 --restarts 20"])

    parser = LocalSearchParser(description=file_description,
                               formatter_class=RawTextHelpFormatter)
    subs = parser.add_subparsers(parser_class=LocalSearchParser,
                                 metavar='{score,ls,hillclimb}')

    score_parser = subs.add_parser('score')
    add_common_arguments(score_parser)
    score_parser.add_argument('--superstructure-order',
                              default=False,
                              action='store_true',
                              help='Use a topological ordering of the '
                                   'superstructure, which must be acyclic.')
    score_parser.set_defaults(solver_factory=score_solver)

    ls_parser = subs.add_parser('ls')
    add_common_arguments(ls_parser)
    ls_parser.add_argument('--distance',
                           choices=('insert', 'swap', 'inv', 'invwin'),
                           required=True,
                           help='The neighborhood distance.')
    ls_parser.add_argument('-r', '--radius',
                           type=integer,
                           default=None,
                           help='The radius (default: 1).')
    ls_parser.add_argument('--repetitions',
                           type=integer,
                           default=None,
                           help='Colorings tried by inv (default: '
                                'ceil((2e)^sqrt(r/8))).')
    ls_parser.add_argument('--oracle-reps',
                           type=oracle_reps,
                           default=None,
                           help="Colorings per window for invwin, an integer "
                                "or 'guaranteed' "
                                "(default: ceil((2e)^sqrt(r/8))).")
    ls_parser.add_argument('--exact',
                           default=False,
                           action='store_true',
                           help='Use one color per variable in inv and '
                                'invwin, without randomness.')
    ls_parser.add_argument('--work-bound',
                           type=integer,
                           default=None,
                           help='Largest min(n^r, n!) run by insert and '
                                'swap without --force (default: 10^7).')
    ls_parser.add_argument('--force',
                           default=False,
                           action='store_true',
                           help='Run insert and swap above the work bound.')
    ls_parser.set_defaults(solver_factory=ls_solver)

    hc_parser = subs.add_parser('hillclimb')
    add_common_arguments(hc_parser, with_k=False, with_ordering=False,
                         formats=('csv', 'text', 'json', 'dot'),
                         default_format='csv')
    hc_parser.add_argument('-r', '--radius',
                           type=integer,
                           nargs='+',
                           default=None,
                           help='One or more window radii sharing the same '
                                'starts (default: 1).')
    hc_parser.add_argument('--restarts',
                           type=integer,
                           default=None,
                           help='Number of random starts (default: 20).')
    hc_parser.add_argument('--epsilon',
                           type=float,
                           default=None,
                           help='Smallest accepted improvement '
                                '(default: 1e-9).')
    hc_parser.add_argument('--max-iterations',
                           type=integer,
                           default=None,
                           help='Cap on accepted moves, 0 for none '
                                '(default: 0).')
    hc_parser.add_argument('--certify',
                           default=False,
                           action='store_true',
                           help='Log whether every final ordering is '
                                'r-optimal.')
    hc_parser.set_defaults(solver_factory=hillclimb_solver)

    # Brute force for debugging, left out of the help.
    brute_parser = subs.add_parser('brute')
    add_common_arguments(brute_parser)
    brute_parser.add_argument('--distance',
                              choices=('insert', 'swap', 'inv', 'invwin',
                                       'win'),
                              default=None,
                              help='Search within a radius of the start '
                                   'ordering instead of globally.')
    brute_parser.add_argument('-r', '--radius',
                              type=integer,
                              default=None,
                              help='The radius (default: 0).')
    brute_parser.set_defaults(solver_factory=brute_solver)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = create_parser()
    try:
        options = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_ERROR

    if getattr(options, "solver_factory", None) is None:
        sys.stderr.write('Error: %s\n' % "wrong usage of the script.")
        parser.print_help(sys.stderr)
        return USAGE_ERROR

    try:
        output = run(options)
    except (UsageError, WorkBoundExceededError) as e:
        sys.stderr.write('Error: %s\n' % e)
        return USAGE_ERROR
    except (ValueError, OSError, RuntimeError) as e:
        sys.stderr.write('Error: %s\n' % e)
        return INPUT_ERROR

    if options.output is not None:
        with open(options.output, "w") as f:
            f.write(output)
        log.info("Output written to %s.", options.output)
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
