import argparse

from config import DEFAULT_SEED, SCAN_WORKERS
from omega_engine.scaling import DEFAULT_TS

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default='text',
                        help='output format (default: text)')
    common.add_argument('--seed', type=int, default=DEFAULT_SEED,
                        help=f'seed for randomized helpers (default: {DEFAULT_SEED})')
    common.add_argument('--verbose', action='store_true', help='log at DEBUG level')
    return common

def _int_list(text: str):
    try:
        return [int(token) for token in text.split(',') if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma-separated integers, got {text!r}')

def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='kindep',
        description='Worst-case bounds for the greedy MAX algorithm on multigraphs')
    commands = parser.add_subparsers(dest='command', required=True)

    def sequence_command(name, help_text):
        sub = commands.add_parser(name, help=help_text, parents=[common])
        sub.add_argument('--k', type=int, required=True)
        sub.add_argument('--degrees', required=True,
                         help='degree sequence, "1,2,2,4" or a JSON array')
        return sub

    sequence_command('bound', 'compute b_k(D) and its Omega chain')
    omega = sequence_command('omega', 'apply Omega once')
    omega.add_argument('--ferrers', action='store_true', help='draw Ferrers diagrams of D and Omega(D)')
    sequence_command('trace', 'full decrement sequence of D')
    sequence_command('construct', 'build a multigraph on which MAX can return exactly b_k(D) vertices')

    verify = commands.add_parser('verify', help='run MAX on a graph file', parents=[common])
    verify.add_argument('--k', type=int, required=True)
    verify.add_argument('--graph', required=True, help='graph JSON file')
    mode = verify.add_mutually_exclusive_group()
    mode.add_argument('--script', help='deletion script JSON file to replay')
    mode.add_argument('--exhaustive', action='store_true', help='search every MAX run for the smallest output')
    mode.add_argument('--random', action='store_true', help='break ties at random (uses --seed)')

    lab = commands.add_parser('lab', help='order-theoretic tools for small sequences')
    lab_commands = lab.add_subparsers(dest='lab_command', required=True)
    precedes = lab_commands.add_parser('precedes', help='decide whether LOWER is reachable from UPPER',
                                       parents=[common])
    precedes.add_argument('--k', type=int, required=True)
    precedes.add_argument('--lower', required=True)
    precedes.add_argument('--upper', required=True)
    for name, help_text in (('pseudo', 'list pseudo-reductions'), ('steps', 'list elementary steps')):
        sub = lab_commands.add_parser(name, help=help_text, parents=[common])
        sub.add_argument('--k', type=int, required=True)
        sub.add_argument('--degrees', required=True)
    check = lab_commands.add_parser('check', help='run the exhaustive lemma suite', parents=[common])
    check.add_argument('--max-order', type=int, default=6)
    check.add_argument('--max-sum', type=int, default=14)
    check.add_argument('--ks', type=_int_list, default=[1, 2, 3])

    covering = commands.add_parser('covering', help='lower bound on a pair-covering number', parents=[common])
    covering.add_argument('--v', type=int, required=True)
    covering.add_argument('--kappa', type=int, required=True)
    covering.add_argument('--lambda', dest='lam', type=int, default=1)
    covering.add_argument('--start', type=int, default=None, help='starting bound (default: Schonheim)')

    scan = commands.add_parser('covering-scan', help='scan (kappa, v) cells for improved bounds',
                               parents=[common])
    scan.add_argument('--kappa-min', type=int, required=True)
    scan.add_argument('--kappa-max', type=int, required=True)
    scan.add_argument('--lambda', dest='lam', type=int, default=1)
    scan.add_argument('--priors', default=None, help='csv with kappa,v,lambda,bound,source')
    scan.add_argument('--workers', type=int, default=SCAN_WORKERS)
    scan.add_argument('--csv', dest='csv_out', default=None, help='also write the table to this csv file')

    loops = sequence_command('loops', 'minimum k-independence number over loop multigraphs')
    loops.add_argument('--construct', action='store_true',
                       help='also build the extremal loop multigraph and check it by brute force')

    scaling = commands.add_parser('scaling', help='time b on {t copies of t}', parents=[common])
    scaling.add_argument('--k', type=int, default=3)
    scaling.add_argument('--ts', type=_int_list, default=list(DEFAULT_TS))
    scaling.add_argument('--repeats', type=int, default=5)

    return parser
