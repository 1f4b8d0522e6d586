import argparse
import logging
import sys

from config import Config
from frob import configure_logging
from frob.cli.config import Limits
from frob.cli.output import FORMATS, OutputRecord, render
from frob.cli.utils import Stopwatch, console, print_banner, print_error
from frob.cli.verify import SUITES, coprime_pairs, print_summary, run_verification
from frob.denumerant import Method, count, dp_table, q_count, resolve_method
from frob.errors import FrobError, InvalidInputError, MethodMismatchError
from frob.frobenius import g_k_closed, g_k_search, list_k_rep
from frob.numth import DenominationSet
from frob.oracle import enumerate_reps

logger = logging.getLogger(__name__)

GK_METHODS = ('auto', 'closed', 'search')
COUNT_METHODS = tuple(m.value for m in Method)


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="frob", description="Frobenius numbers, denumerants and k-representable integers")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=FORMATS, default="text", help="Output format")
    shared.add_argument("--max-table-cells", type=_positive, help="Largest DP table allowed")
    shared.add_argument("--max-reps-out", type=_positive, help="Most representations listed")
    shared.add_argument("--horizon", type=_positive, help="Starting horizon for searches")

    subparsers = parser.add_subparsers(dest="command")

    gk = subparsers.add_parser("gk", parents=[shared], help="k-Frobenius number g_k")
    gk.add_argument("--denoms", required=True, help="Comma-separated denominations")
    gk.add_argument("--k", type=_nonnegative, default=0)
    gk.add_argument("--method", choices=GK_METHODS, default="auto")

    cnt = subparsers.add_parser("count", parents=[shared], help="Number of representations of n")
    cnt.add_argument("--denoms", required=True, help="Comma-separated denominations")
    cnt.add_argument("--n", type=int, required=True)
    cnt.add_argument("--method", choices=COUNT_METHODS, default="auto")
    cnt.add_argument("--all-parts", action="store_true",
                     help="Only count representations using every denomination")

    lst = subparsers.add_parser("list", parents=[shared], help="Integers with exactly k representations")
    lst.add_argument("--denoms", required=True, help="Comma-separated denominations")
    lst.add_argument("--k", type=_nonnegative, required=True)

    reps = subparsers.add_parser("reps", parents=[shared], help="Enumerate every representation of n")
    reps.add_argument("--denoms", required=True, help="Comma-separated denominations")
    reps.add_argument("--n", type=_nonnegative, required=True)

    table = subparsers.add_parser("table", parents=[shared], help="Dump p_A(0..N)")
    table.add_argument("--denoms", required=True, help="Comma-separated denominations")
    table.add_argument("--max", dest="limit", type=_nonnegative, required=True)
    table.add_argument("--cap", type=_positive, help="Saturate counts at this value")

    verify = subparsers.add_parser("verify", parents=[shared], help="Run the self-verification suites")
    verify.add_argument("--denoms", help="Verify one set instead of the grid")
    verify.add_argument("--grid", type=_positive, default=20,
                        help="Use all coprime pairs a < b <= GRID")
    verify.add_argument("--suite", choices=SUITES + ('all',), default="all")
    verify.add_argument("--max-k", type=_nonnegative, default=8)
    verify.add_argument("--workers", type=_positive, default=Config.VERIFY_WORKERS)
    return parser


def cmd_gk(args, limits):
    denoms = DenominationSet.parse(args.denoms)
    method = args.method
    if method == 'auto':
        method = 'closed' if denoms.d == 2 else 'search'
    if method == 'closed':
        if denoms.d != 2:
            raise MethodMismatchError(
                f"the closed form needs exactly two denominations, got {denoms.d}")
        value = g_k_closed(*denoms.pair, args.k)
    else:
        value = g_k_search(denoms, args.k, horizon=limits.horizon,
                           max_cells=limits.max_table_cells)
    query = {'denoms': list(denoms), 'k': args.k, 'method': args.method}
    return query, value, method


def cmd_count(args, limits):
    denoms = DenominationSet.parse(args.denoms)
    backend = resolve_method(denoms, args.method)
    counter = q_count if args.all_parts else count
    value = counter(denoms, args.n, backend, max_cells=limits.max_table_cells)
    query = {'denoms': list(denoms), 'n': args.n, 'method': args.method,
             'all_parts': args.all_parts}
    return query, int(value), backend.value


def cmd_list(args, limits):
    denoms = DenominationSet.parse(args.denoms)
    values = list_k_rep(denoms, args.k, horizon=limits.horizon, max_cells=limits.max_table_cells)
    backend = 'closed+dp' if denoms.d == 2 else 'search+dp'
    return {'denoms': list(denoms), 'k': args.k, 'method': backend}, values, backend


def cmd_reps(args, limits):
    denoms = DenominationSet.parse(args.denoms)
    found = enumerate_reps(denoms, args.n, max_out=limits.max_reps_out)
    vectors = [list(rep.multiplicities) for rep in found]
    return {'denoms': list(denoms), 'n': args.n, 'method': 'oracle'}, vectors, 'oracle'


def cmd_table(args, limits):
    denoms = DenominationSet.parse(args.denoms)
    built = dp_table(denoms, args.limit, cap=args.cap, max_cells=limits.max_table_cells)
    rows = [[n, c] for n, c in built.rows()]
    query = {'denoms': list(denoms), 'max': args.limit, 'cap': args.cap, 'method': 'dp'}
    return query, rows, 'dp'


def cmd_verify(args, limits):
    if args.denoms:
        sets = [DenominationSet.parse(args.denoms)]
    else:
        sets = [DenominationSet.of(a, b) for a, b in coprime_pairs(args.grid)]
    suites = SUITES if args.suite == 'all' else (args.suite,)
    results = run_verification(sets, suites, args.max_k, limits, workers=args.workers)
    if args.format == 'text':
        print_banner("Self-verification")
        print_summary(results)
    query = {'denoms': args.denoms, 'grid': None if args.denoms else args.grid,
             'suite': args.suite, 'max_k': args.max_k}
    return query, {name: outcome.as_dict() for name, outcome in results.items()}, 'suites'


COMMANDS = {
    'gk': cmd_gk,
    'count': cmd_count,
    'list': cmd_list,
    'reps': cmd_reps,
    'table': cmd_table,
    'verify': cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        configure_logging(Config, console=console)
    except FrobError as e:
        print_error(str(e))
        return e.exit_code
    if args.verbose:
        logging.getLogger('frob').setLevel(logging.DEBUG)
        for handler in logging.getLogger('frob').handlers:
            handler.setLevel(logging.DEBUG)

    if args.command is None:
        parser.print_help()
        return 0

    try:
        try:
            limits = Limits.from_args(args)
        except ValueError as e:
            raise InvalidInputError(str(e))
        stopwatch = Stopwatch()
        with stopwatch.running():
            query, result, backend = COMMANDS[args.command](args, limits)
        query = {'command': args.command, **query}
        record = OutputRecord(query=query, result=result, backend=backend,
                              elapsed_ms=round(stopwatch.elapsed_ms, 3))
        sys.stdout.write(render(record, args.format))
    except FrobError as e:
        print_error(str(e))
        return e.exit_code

    if args.command == 'verify' and any(r['failed'] for r in record.result.values()):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
