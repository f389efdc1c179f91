import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import GraphFormatError, InputError, InvalidScriptError, NotGraphicalError, ResourceLimitError
from graph_engine.graph_types import Multigraph
from graph_engine.max_algorithm import (
    RandomChooser, lowest_index_chooser, max_run, max_worst_case, replay_script,
)
from graph_engine.multigraph import degree_sequence_of, delete_vertex, perturb, read_graph, read_script, realize
from graph_engine.worst_case import construct_worst_case
from multiset_core.helpers import is_trivial, make_degree_sequence
from omega_engine.omega import b
from order_lab.lemma_suite import graphical_sequences as every_graphical_sequence
from strategies import graphical_sequences

K = 3
RUNNING = make_degree_sequence([1, 2, 2, 4, 4, 5, 6])

def _induced_max_degree(G, vertices):
    if not vertices:
        return 0
    adjacency = G.adjacency()
    return int(adjacency[np.ix_(vertices, vertices)].sum(axis=1).max())

def test_degree_sequence_of():
    assert degree_sequence_of(Multigraph(2, {(0, 1): 1})) == make_degree_sequence([1, 1])
    assert degree_sequence_of(Multigraph(2, {(1, 0): 3})) == make_degree_sequence([3, 3])
    assert degree_sequence_of(Multigraph(0)) == make_degree_sequence([])

def test_multigraph_rejects_loops_and_bad_endpoints():
    with pytest.raises(GraphFormatError):
        Multigraph(2, {(1, 1): 1})
    with pytest.raises(GraphFormatError):
        Multigraph(2, {(0, 2): 1})
    with pytest.raises(GraphFormatError):
        Multigraph(-1)

def test_adjacency_is_symmetric():
    G = Multigraph(3, {(0, 1): 2, (1, 2): 1})
    adjacency = G.adjacency()
    assert (adjacency == adjacency.T).all()
    assert list(G.degrees()) == [2, 3, 1]
    assert G.degree(1) == 3
    assert G.edge_count() == 3

def test_realize_examples():
    assert realize(make_degree_sequence([1, 1])) == Multigraph(2, {(0, 1): 1})
    assert realize(make_degree_sequence([2, 2])) == Multigraph(2, {(0, 1): 2})
    assert realize(make_degree_sequence([0, 0, 0])) == Multigraph(3)

def test_realize_puts_maximum_last():
    G = realize(RUNNING)
    assert list(G.degrees()) == RUNNING.values()

def test_realize_rejects_non_graphical():
    with pytest.raises(NotGraphicalError):
        realize(make_degree_sequence([5, 1]))

@settings(max_examples=300)
@given(graphical_sequences(max_value=9, max_order=9))
def test_realize_has_requested_degrees(D):
    assert degree_sequence_of(realize(D)) == D

def test_delete_vertex():
    G = Multigraph(3, {(0, 1): 2})
    assert list(delete_vertex(G, 2).degrees()) == [2, 2]
    assert list(delete_vertex(G, 0).degrees()) == [0, 0]
    H = delete_vertex(realize(RUNNING), 6)
    assert H.n == 6
    assert int(H.degrees().sum()) == RUNNING.total - 2 * RUNNING.max_value

def test_delete_vertex_relabels():
    G = Multigraph(3, {(0, 2): 1, (1, 2): 1})
    assert delete_vertex(G, 1) == Multigraph(2, {(0, 1): 1})
    with pytest.raises(InputError):
        delete_vertex(G, 3)

@settings(max_examples=100, deadline=None)
@given(graphical_sequences(max_value=6, max_order=7), st.integers(0, 2**32 - 1))
def test_perturb_preserves_vertex_degrees(D, seed):
    G = realize(D)
    H = perturb(G, 25, seed)
    assert np.array_equal(G.degrees(), H.degrees())
    assert all(u != v for u, v in H.edges)

def test_perturb_is_reproducible():
    G = realize(RUNNING)
    assert perturb(G, 30, 7) == perturb(G, 30, 7)

def test_max_run_trivial_graph():
    result = max_run(realize(make_degree_sequence([1, 1])), 2)
    assert result.survivors == [0, 1]
    assert result.log == []

def test_max_run_triple_edge():
    result = max_run(Multigraph(2, {(0, 1): 3}), 1)
    assert result.size == 1
    assert result.log == [(0, 3)]
    assert result.to_json()['deletions'] == [{'vertex': 0, 'degree': 3}]

def test_max_run_can_stop_short_of_maximal():
    G = Multigraph(5, {(0, 1): 1, (0, 2): 1, (1, 3): 1, (2, 4): 1})
    result = max_run(G, 1)
    assert result.deletions == [0, 1, 2]
    assert result.survivors == [3, 4]
    # vertex 0 could join, but the last deleted vertex cannot
    assert _induced_max_degree(G, [0, 3, 4]) == 0
    assert _induced_max_degree(G, [2, 3, 4]) >= 1

def test_random_chooser_is_seeded():
    G = realize(RUNNING)
    first = max_run(G, K, RandomChooser(11))
    second = max_run(G, K, RandomChooser(11))
    assert first.log == second.log

@settings(max_examples=200, deadline=None)
@given(graphical_sequences(max_value=7, max_order=8), st.integers(1, 4), st.integers(0, 1000))
def test_max_run_invariants(D, k, seed):
    G = perturb(realize(D), 10, seed)
    for chooser in (lowest_index_chooser, RandomChooser(seed)):
        result = max_run(G, k, chooser)
        assert _induced_max_degree(G, result.survivors) < k
        alive = list(range(G.n))
        for vertex, degree in result.log:
            assert degree >= k
            assert degree == _induced_max_degree(G, alive)
            assert int(G.adjacency()[vertex, alive].sum()) == degree
            alive.remove(vertex)
        if result.log:
            last = result.log[-1][0]
            assert _induced_max_degree(G, sorted(result.survivors + [last])) >= k

def test_replay_script_checks_legality():
    witness = construct_worst_case(RUNNING, K)
    with pytest.raises(InvalidScriptError):
        replay_script(witness.graph, K, [0])
    with pytest.raises(InvalidScriptError):
        replay_script(witness.graph, K, witness.script[:1])
    with pytest.raises(InvalidScriptError):
        replay_script(witness.graph, K, witness.script + [0])

def test_construct_worst_case_running_example():
    witness = construct_worst_case(RUNNING, K)
    G, script = witness
    assert G.n == 7
    assert degree_sequence_of(G) == RUNNING
    assert script == [6, 5, 4]
    assert witness.b == 4
    run = replay_script(G, K, script)
    assert run.size == 4
    assert run.survivors == [0, 1, 2, 3]

def test_construct_worst_case_chain_levels():
    G = construct_worst_case(RUNNING, K).graph
    first = delete_vertex(G, 6)
    second = delete_vertex(first, 5)
    assert degree_sequence_of(first) == make_degree_sequence([0, 1, 2, 3, 3, 3])
    assert degree_sequence_of(second) == make_degree_sequence([0, 0, 0, 3, 3])

def test_construct_worst_case_trivial():
    D = make_degree_sequence([1, 1, 2])
    witness = construct_worst_case(D, 3)
    assert witness.script == []
    assert witness.b == 3
    assert degree_sequence_of(witness.graph) == D

def test_construct_worst_case_rejects_non_graphical():
    with pytest.raises(NotGraphicalError):
        construct_worst_case(make_degree_sequence([3]), K)

def test_witness_json():
    payload = construct_worst_case(RUNNING, K).to_json()
    assert payload['deletions'] == [6, 5, 4]
    assert payload['b'] == 4
    assert Multigraph.from_json(payload['graph']) == construct_worst_case(RUNNING, K).graph

@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4), graphical_sequences(max_value=7, max_order=8))
def test_witness_script_attains_b(k, D):
    witness = construct_worst_case(D, k)
    assert degree_sequence_of(witness.graph) == D
    assert replay_script(witness.graph, k, witness.script).size == b(D, k).b

def test_max_worst_case_examples():
    assert max_worst_case(realize(make_degree_sequence([1, 1])), 2).size == 2
    witness = construct_worst_case(RUNNING, K)
    worst = max_worst_case(witness.graph, K)
    assert worst.size == 4
    assert replay_script(witness.graph, K, worst.script).size == 4
    assert max_worst_case(realize(RUNNING), K).size >= 4

def test_max_worst_case_explores_ties():
    G = Multigraph(5, {(0, 1): 1, (0, 2): 1, (1, 3): 1, (2, 4): 1})
    assert replay_script(G, 1, [1, 2]).size == 3
    result = max_worst_case(G, 1)
    assert result.size == 2
    assert replay_script(G, 1, result.script).size == 2
    assert result.states >= 1

def test_max_worst_case_guard():
    with pytest.raises(ResourceLimitError):
        max_worst_case(Multigraph(11), 1)

def test_graph_json_errors():
    with pytest.raises(GraphFormatError):
        Multigraph.from_json({'n': 2})
    with pytest.raises(GraphFormatError):
        Multigraph.from_json({'n': 2, 'edges': {}})
    with pytest.raises(GraphFormatError):
        Multigraph.from_json({'n': 2, 'edges': [[0, 1]]})
    with pytest.raises(GraphFormatError):
        Multigraph.from_json({'n': 2, 'edges': [[0, 1, 0]]})
    with pytest.raises(GraphFormatError):
        Multigraph.from_json({'n': 2, 'edges': [[0, 0, 1]]})

def test_read_graph_and_script(tmp_path):
    witness = construct_worst_case(RUNNING, K)
    path = tmp_path / 'witness.json'
    path.write_text(json.dumps(witness.to_json()))
    assert read_graph(str(path)) == witness.graph
    assert read_script(str(path)) == witness.script

    bare = tmp_path / 'graph.json'
    bare.write_text(json.dumps(witness.graph.to_json()))
    assert read_graph(str(bare)) == witness.graph

def test_read_graph_errors(tmp_path):
    broken = tmp_path / 'broken.json'
    broken.write_text('{"n": 2, "edges": [')
    with pytest.raises(GraphFormatError):
        read_graph(str(broken))
    with pytest.raises(GraphFormatError):
        read_graph(str(tmp_path / 'missing.json'))
    with pytest.raises(InvalidScriptError):
        read_script(str(broken))
    script = tmp_path / 'script.json'
    script.write_text(json.dumps({'deletions': [1, 'a']}))
    with pytest.raises(InvalidScriptError):
        read_script(str(script))

def _sweep_cases(size=600, seed=2024):
    """
    Deterministic sample of nontrivial (k, D) pairs with n <= 7, sum <= 18
    and k in {1, 2, 3}, drawn from the full enumeration.
    """

    cases = [(k, D) for k in (1, 2, 3) for D in every_graphical_sequence(7, 18) if not is_trivial(D, k)]
    rng = np.random.default_rng(seed)
    picked = sorted(rng.choice(len(cases), size=min(size, len(cases)), replace=False))
    return [cases[i] for i in picked]

SWEEP = _sweep_cases()

def test_sweep_has_enough_distinct_cases():
    assert len(set(SWEEP)) >= 500
    assert all(D.order <= 7 and D.total <= 18 and D.max_value >= k for k, D in SWEEP)
    assert {k for k, _ in SWEEP} == {1, 2, 3}

@pytest.mark.slow
@pytest.mark.parametrize('index, k, D', [(i, k, D) for i, (k, D) in enumerate(SWEEP)],
                         ids=[f'k{k}-{D.to_text()}' for k, D in SWEEP])
def test_b_is_sound_and_tight(index, k, D):
    bound = b(D, k).b
    witness = construct_worst_case(D, k)
    assert max_worst_case(witness.graph, k).size == bound

    rng = np.random.default_rng([index, k])
    G = realize(D)
    for _ in range(5):
        G = perturb(G, 10, rng)
        assert max_worst_case(G, k).size >= bound
