import argparse
import logging
import os
import sys

import yaml

from run import EXIT_ERROR, run

DEFAULTS_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'defaults.yml')
LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def parse_args(argv=None):
    """
    parse the command line arguments
    :param argv: arguments to parse, sys.argv[1:] when not given
    :return: (dict) the arguments
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', help='increase output verbosity', action='count')
    common.add_argument('--json', help='Print JSON on stdout', dest='as_json', action='store_true', default=None)

    parser = argparse.ArgumentParser(prog='pg', description='Power graphs of finite groups: analysis and '
                                                            'verification of forbidden-subgraph theorems')
    commands = parser.add_subparsers(dest='command', required=True)

    analyze = commands.add_parser('analyze', parents=[common], help='Analyze one group and its power graph')
    analyze.add_argument('spec', help='Group spec, e.g. C12, D4, SD(7,3,2), E2^3xC9, PSL(2,7)', type=str)
    analyze.add_argument('--proper', help='Use P*(G), the power graph without the identity', action='store_true',
                         default=None)
    analyze.add_argument('--patterns', help='Comma-separated catalog patterns, e.g. P5,P5bar', type=str)
    analyze.add_argument('--export', help='Write the graph as dot or json', nargs=2, metavar=('FORMAT', 'PATH'))
    analyze.add_argument('--path', help='Elements separated by ";" or "~" to re-verify as an induced path',
                         type=str)
    analyze.add_argument('--twin_cap', '--twin-cap', help='Members kept per twin class', type=int)
    analyze.add_argument('--allow_large', '--allow-large', help='Raise the group-order cap', action='store_true',
                         default=None)

    verify = commands.add_parser('verify', parents=[common], help='Check theorems over a corpus')
    verify.add_argument('theorem', help='Theorem id, or "all"', type=str)
    verify.add_argument('--corpus', help='Corpus file: one spec per line, "#" comments', type=str)
    verify.add_argument('--allow_large', '--allow-large', help='Raise the group-order cap', action='store_true',
                        default=None)
    verify.add_argument('--min_hole_length', '--min-hole-length', help='Shortest even hole to look for', type=int)
    verify.add_argument('--twin_cap', '--twin-cap', help='Members kept per twin class', type=int)
    verify.add_argument('--product_order_limit', '--product-order-limit',
                        help='Largest |G|*|H| among the direct-product pairs', type=int)
    verify.add_argument('--jobs', help='Worker processes for "all"', type=int)
    verify.add_argument('--save', help='Save the reports into csv and json files', dest='save', action='store_true')
    verify.add_argument('--no-save', help='Do not save the reports', dest='save', action='store_false')
    verify.set_defaults(save=None)
    verify.add_argument('--save_dir', '--save-dir', help='Directory to save the reports', type=str)

    corpus = commands.add_parser('corpus', parents=[common], help='Show a corpus')
    corpus.add_argument('action', help='What to do with the corpus', choices=['list'])
    corpus.add_argument('--corpus', help='Corpus file instead of the default corpus', type=str)

    numbers = commands.add_parser('numbers', parents=[common], help='Number-theoretic side conditions only')
    numbers.add_argument('kind', help='psl2 or sz', choices=['psl2', 'sz'])
    numbers.add_argument('q', help='Field size q', type=int)

    args = parser.parse_args(argv)
    dict_args = vars(args)
    return dict_args


def fill_defaults(args, path: str = DEFAULTS_FILE):
    """
    Replaces unspecified options by the values in the block of the chosen sub-command; options the
    file does not name either are dropped, so the defaults in run.py apply
    :param args: parsed arguments, as returned by parse_args
    :param path: the defaults file
    :return: the filled arguments
    """
    defaults = {}
    if os.path.exists(path):
        with open(path) as f:
            defaults = yaml.safe_load(f) or {}
    block = defaults.get(args['command']) or {}
    for key, value in args.items():
        if value is None:
            args[key] = block.get(key)
    return {key: value for key, value in args.items() if value is not None}


def configure_logging(verbose):
    level = LOG_LEVELS[min(verbose or 0, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, stream=sys.stderr, format='%(asctime)s %(name)s %(levelname)s: %(message)s')


def main(argv=None) -> int:
    # Parse the arguments
    args = fill_defaults(parse_args(argv))
    configure_logging(args.get('verbose'))

    # Run the actual command
    try:
        return run(**args)
    except (ValueError, OSError) as e:
        print(f'pg: error: {e}', file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
