import sys

from dotenv import load_dotenv

from covering_bounds.bounds import covering_lower_bound, schonheim
from covering_bounds.covering_types import CoveringParams
from graph_engine.max_algorithm import max_worst_case, replay_script
from graph_engine.worst_case import construct_worst_case
from loop_variant.alpha import alpha_k_bruteforce, alpha_k_min_loops
from loop_variant.loop_multigraph import construct_extremal_loop_multigraph
from multiset_core.helpers import make_degree_sequence, print_sequences
from omega_engine.omega import b, decrement_sequence
from order_lab.elementary_steps import addition_step, transfer_step
from order_lab.lemma_suite import LemmaSuite

load_dotenv()

K = 3
D = make_degree_sequence([1, 2, 2, 4, 4, 5, 6])

def demo_omega_chain():
    """
    Decrement sequence, Omega chain and b for the running example.
    """

    trace = decrement_sequence(D, K)
    print('=' * 80)
    print(f'decrement sequence of {D} with k={K}:')
    print(tuple(trace.a))
    print('=' * 80 + '\n')

    chain = b(D, K)
    print_sequences(f'Omega chain (b = {chain.b}, p = {chain.p})',
                    [(f'Omega^{i}(D)', term) for i, term in enumerate(chain.chain)], K)

def demo_elementary_steps():
    E = D
    E_prime = make_degree_sequence([0, 1, 2, 3, 3, 3])
    added = addition_step(E, 3, 7)
    transferred = transfer_step(E_prime, 1, 3, K)
    print_sequences('elementary steps', [
        ('E', E),
        ('(3,7)-addition on E', added),
        ("E'", E_prime),
        ("(1,3)-transfer on E'", transferred),
    ], K)

def demo_worst_case():
    """
    Build the witness multigraph, replay its script, and confirm no MAX run does worse.
    """

    witness = construct_worst_case(D, K)
    run = replay_script(witness.graph, K, witness.script)
    worst = max_worst_case(witness.graph, K)

    result = '=' * 80 + '\n'
    result += f'worst-case multigraph for {D}, k={K}:\n'
    result += f'\tedges: {dict(sorted(witness.graph.edges.items()))}\n'
    result += f'\tscripted deletions: {witness.script}\n'
    result += f'\tscripted survivors: {run.survivors} (size {run.size})\n'
    result += f'\tsmallest output over every MAX run: {worst.size}\n'
    result += '=' * 80 + '\n'
    print(result)

def demo_covering():
    params = CoveringParams(50, 14, 1)
    bound, reports = covering_lower_bound(params, 16)

    result = '=' * 80 + '\n'
    result += f'covering bound for {params!r}:\n'
    result += f'\tSchonheim: {schonheim(50, 14, 1)}\n'
    for report in reports:
        result += (f'\tz={report.z}: r={report.r}, d={report.d}, ell={report.ell}, '
                   f'b_{report.k}(D)={report.b}, contradiction={report.contradiction}\n')
    result += f'\tC_1(50,14) >= {bound}\n'
    result += '=' * 80 + '\n'
    print(result)

def demo_loops():
    result = '=' * 80 + '\n'
    result += 'loop multigraphs:\n'
    for values, k in (([1, 1], 1), ([2, 2, 2], 2), ([3, 3, 3, 3], 3), ([1, 1, 4], 2)):
        degrees = make_degree_sequence(values)
        G = construct_extremal_loop_multigraph(degrees, k)
        result += (f'\t{degrees}, k={k}: closed form {alpha_k_min_loops(degrees, k)}, '
                   f'extremal graph {dict(sorted(G.edges.items()))} has alpha {alpha_k_bruteforce(G, k)}\n')
    result += '=' * 80 + '\n'
    print(result)

if __name__ == '__main__':
    demo_omega_chain()
    demo_elementary_steps()
    demo_worst_case()
    demo_covering()
    demo_loops()

    if '--lemmas' in sys.argv:
        suite = LemmaSuite()
        suite.evaluate()
        suite.print_report()
