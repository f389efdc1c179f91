import json
from typing import Tuple

from covering_bounds.bounds import covering_lower_bound, schonheim
from covering_bounds.covering_types import CoveringParams
from covering_bounds.csv_helpers import read_priors
from covering_bounds.table_scan import format_table, scan_table
from graph_engine.max_algorithm import RandomChooser, lowest_index_chooser, max_run, max_worst_case, replay_script
from graph_engine.multigraph import degree_sequence_of, read_graph, read_script
from graph_engine.worst_case import construct_worst_case
from loop_variant.alpha import alpha_k_bruteforce, alpha_k_min_loops
from loop_variant.loop_multigraph import construct_extremal_loop_multigraph
from multiset_core.helpers import parse_degree_sequence, render_ferrers
from omega_engine.omega import b, decrement_sequence, trace_omega
from omega_engine.scaling import measure_scaling
from order_lab.elementary_steps import enumerate_steps
from order_lab.lemma_suite import LemmaSuite
from order_lab.partial_order import precedes
from order_lab.pseudo_reductions import pseudo_reductions

BANNER = '=' * 80

Output = Tuple[object, str]

def _banner(title: str, body: str) -> str:
    return f'{BANNER}\n{title}:\n{body}\n{BANNER}'

def cmd_bound(args) -> Output:
    D = parse_degree_sequence(args.degrees)
    trace = b(D, args.k)
    lines = [f'Omega^{i}(D) = {term}' for i, term in enumerate(trace.chain)]
    lines.append(f'p = {trace.p}, b_{args.k}(D) = {trace.b}')
    return trace.to_json(), _banner(f'b_{args.k}({D})', '\n'.join(lines))

def cmd_omega(args) -> Output:
    D = parse_degree_sequence(args.degrees)
    trace = trace_omega(D, args.k)
    result, degenerate = trace.omega, trace.degenerate
    payload = {'k': args.k, 'degrees': D.to_json(), 'omega': result.to_json(), 'degenerate': degenerate}

    body = f'Omega({D}) = {result}' + (' (all reductions trivial)' if degenerate else '')
    if args.ferrers:
        body += f'\n\nD:\n{render_ferrers(D, args.k)}\n\nOmega(D):\n{render_ferrers(result, args.k)}'
    return payload, _banner(f'Omega with k={args.k}', body)

def cmd_trace(args) -> Output:
    D = parse_degree_sequence(args.degrees)
    trace = decrement_sequence(D, args.k)
    if trace.degenerate:
        body = f'degenerate: sum(A0) = {trace.s} < max(D) + 2k or max(A0) < k, Omega(D) = {trace.omega}'
    else:
        body = (f'm = {trace.m}, A0 = {trace.A0}, s = {trace.s}\n'
                f'a = {tuple(trace.a)}\n'
                f'Omega(D) = A_{trace.m} = {trace.omega}')
    return trace.to_json(), _banner(f'decrement sequence of {D} with k={args.k}', body)

def cmd_construct(args) -> Output:
    D = parse_degree_sequence(args.degrees)
    witness = construct_worst_case(D, args.k)
    edges = '\n'.join(f'  {u} - {v} x{multiplicity}' for (u, v), multiplicity in sorted(witness.graph.edges.items()))
    body = (f'n = {witness.graph.n}\nedges:\n{edges or "  (none)"}\n'
            f'deletions = {witness.script}\nsurvivors = {witness.b}')
    return witness.to_json(), _banner(f'worst-case multigraph for {D} with k={args.k}', body)

def cmd_verify(args) -> Output:
    G = read_graph(args.graph)
    D = degree_sequence_of(G)

    if args.exhaustive:
        result = max_worst_case(G, args.k)
        payload = {'k': args.k, 'degrees': D.to_json(), **result.to_json()}
        body = f'smallest MAX output = {result.size}\ndeletions = {result.script}\nstates = {result.states}'
        return payload, _banner(f'exhaustive MAX on a graph with degrees {D}', body)

    if args.script:
        result = replay_script(G, args.k, read_script(args.script))
    elif args.random:
        result = max_run(G, args.k, RandomChooser(args.seed))
    else:
        result = max_run(G, args.k, lowest_index_chooser)

    payload = {'k': args.k, 'degrees': D.to_json(), **result.to_json()}
    log = '\n'.join(f'  delete {vertex} (degree {degree})' for vertex, degree in result.log)
    body = f'{log or "  (no deletions)"}\nsurvivors = {result.survivors}\nsize = {result.size}'
    return payload, _banner(f'MAX on a graph with degrees {D}', body)

def cmd_lab(args) -> Output:
    if args.lab_command == 'precedes':
        lower = parse_degree_sequence(args.lower)
        upper = parse_degree_sequence(args.upper)
        answer = precedes(lower, upper, args.k)
        payload = {'k': args.k, 'lower': lower.to_json(), 'upper': upper.to_json(), 'precedes': answer}
        relation = 'is' if answer else 'is not'
        return payload, _banner('precedes', f'{lower} {relation} reachable from {upper} by elementary steps')

    if args.lab_command == 'pseudo':
        E = parse_degree_sequence(args.degrees)
        reductions = pseudo_reductions(E, args.k)
        payload = {'k': args.k, 'degrees': E.to_json(), 'pseudo_reductions': [R.to_json() for R in reductions]}
        body = '\n'.join(str(R) for R in reductions) or '(none)'
        return payload, _banner(f'pseudo-reductions of {E} with k={args.k}', body)

    if args.lab_command == 'steps':
        E = parse_degree_sequence(args.degrees)
        steps = enumerate_steps(E, args.k)
        payload = {'k': args.k, 'degrees': E.to_json(),
                   'steps': [{**step.to_json(), 'result': D.to_json()} for step, D in steps]}
        body = '\n'.join(f'{step}: {D}' for step, D in steps) or '(none)'
        return payload, _banner(f'elementary steps from {E} with k={args.k}', body)

    suite = LemmaSuite(args.max_order, args.max_sum, args.ks)
    results = suite.evaluate()
    payload = {category: {'checked': checked, 'violations': [[str(item) for item in witness] for witness in violations]}
               for category, (checked, violations) in results.items()}
    lines = [f'{category}: {checked} checks, {len(violations)} violations'
             for category, (checked, violations) in results.items()]
    return payload, _banner('lemma suite', '\n'.join(lines))

def cmd_covering(args) -> Output:
    params = CoveringParams(args.v, args.kappa, args.lam)
    baseline = schonheim(args.v, args.kappa, args.lam)
    start = args.start if args.start is not None else baseline
    bound, reports = covering_lower_bound(params, start)

    payload = {**params.to_json(), 'schonheim': baseline, 'start': start, 'bound': bound,
               'reports': [report.to_json() for report in reports]}
    lines = [f'Schonheim bound = {baseline}, start = {start}']
    for report in reports:
        verdict = 'contradiction' if report.contradiction else 'no contradiction'
        lines.append(f'z={report.z}: r={report.r} d={report.d} s={report.s} ell={report.ell} '
                     f'b_{report.k}(D)={report.b} -> {verdict}')
    lines.append(f'C_{args.lam}({args.v},{args.kappa}) >= {bound}')
    return payload, _banner(f'covering bound for {params!r}', '\n'.join(lines))

def cmd_covering_scan(args) -> Output:
    priors = read_priors(args.priors) if args.priors else None
    rows = scan_table(args.kappa_min, args.kappa_max, args.lam, priors, args.workers)
    if args.csv_out:
        with open(args.csv_out, 'w', encoding='utf-8', newline='') as f:
            f.write(format_table(rows, 'csv'))
    return json.loads(rows.to_json(orient='records')), _banner('improved covering bounds', format_table(rows, 'text'))

def cmd_loops(args) -> Output:
    D = parse_degree_sequence(args.degrees)
    value = alpha_k_min_loops(D, args.k)
    payload = {'k': args.k, 'degrees': D.to_json(), 'min_alpha': value}
    body = f'min alpha_{args.k} over loop multigraphs = {value}'

    if args.construct:
        G = construct_extremal_loop_multigraph(D, args.k)
        attained = alpha_k_bruteforce(G, args.k)
        payload.update({'graph': G.to_json(), 'alpha': attained})
        edges = ', '.join(f'{u}-{v}x{multiplicity}' for (u, v), multiplicity in sorted(G.edges.items()))
        body += f'\nextremal graph: {edges}\nbrute-force alpha_{args.k} = {attained}'
    return payload, _banner(f'loop multigraphs with degrees {D}', body)

def cmd_scaling(args) -> Output:
    result = measure_scaling(args.ts, args.k, args.repeats)
    table = result['table']
    # first ratio is NaN; to_json writes it as null
    payload = {'exponent': result['exponent'], 'rows': json.loads(table.to_json(orient='records'))}
    body = f'{table.to_string(index=False)}\nfitted exponent = {result["exponent"]:.3f}'
    return payload, _banner(f'runtime of b on {{t copies of t}} with k={args.k}', body)

COMMANDS = {
    'bound': cmd_bound,
    'omega': cmd_omega,
    'trace': cmd_trace,
    'construct': cmd_construct,
    'verify': cmd_verify,
    'lab': cmd_lab,
    'covering': cmd_covering,
    'covering-scan': cmd_covering_scan,
    'loops': cmd_loops,
    'scaling': cmd_scaling,
}
