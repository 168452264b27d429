import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcoremap import (
    Circuit,
    Gate,
    INFINITE,
    build_interaction_graph,
    lookahead_matrix,
    lookahead_weight,
    timeslice,
)

from conftest import circuits


def cx(a, b):
    return Gate("cx", (a, b))


def chain(n, pairs):
    """Circuit whose slice m contains exactly pairs[m], padded so every qubit
    acts in every slice and the layering is forced."""
    gates = []
    for slice_pairs in pairs:
        busy = set()
        for a, b in slice_pairs:
            gates.append(cx(a, b))
            busy.update((a, b))
        for q in range(n):
            if q not in busy:
                gates.append(Gate("h", (q,)))
    return timeslice(Circuit(n, tuple(gates)))


class TestLookaheadWeight:
    def test_single_interaction_next_slice(self):
        sliced = chain(4, [[], [(0, 1)]])
        assert lookahead_weight(sliced, 0, 0, 1) == 0.5

    def test_two_interactions(self):
        sliced = chain(4, [[], [(0, 1)], [], [(0, 1)]])
        assert lookahead_weight(sliced, 0, 0, 1) == 0.625

    def test_no_future_interaction(self):
        sliced = chain(4, [[], [(2, 3)]])
        assert lookahead_weight(sliced, 0, 0, 1) == 0.0

    def test_horizon_truncates(self):
        sliced = chain(2, [[]] + [[]] * 5 + [[(0, 1)]])
        assert lookahead_weight(sliced, 0, 0, 1, horizon=3) == 0.0
        assert lookahead_weight(sliced, 0, 0, 1, horizon=6) == 2.0**-6

    def test_same_qubit_rejected(self):
        sliced = chain(2, [[]])
        with pytest.raises(ValueError):
            lookahead_weight(sliced, 0, 1, 1)


class TestInteractionGraph:
    def test_current_slice_pair_is_infinite(self):
        sliced = chain(4, [[(0, 1)]])
        graph = build_interaction_graph(sliced, 0)
        assert graph.weight(0, 1) == INFINITE
        assert graph.edges() == {(0, 1): INFINITE}

    def test_future_pair_quarter_weight(self):
        sliced = chain(4, [[], [], [(2, 3)]])
        graph = build_interaction_graph(sliced, 0)
        assert graph.edges() == {(2, 3): 0.25}

    def test_last_slice_has_no_finite_edges(self):
        sliced = chain(4, [[(0, 1)]])
        graph = build_interaction_graph(sliced, 0)
        assert graph.infinite_pairs() == {(0, 1)}
        assert all(w == INFINITE for w in graph.edges().values())

    def test_infinite_overrides_future_weight(self):
        sliced = chain(4, [[(0, 1)], [(0, 1)]])
        graph = build_interaction_graph(sliced, 0)
        assert graph.weight(0, 1) == INFINITE

    def test_out_of_range_slice(self):
        sliced = chain(2, [[]])
        with pytest.raises(ValueError):
            build_interaction_graph(sliced, 5)


class TestProperties:
    @given(circuits(max_qubits=6, max_gates=20), st.integers(min_value=0, max_value=5))
    def test_finite_weights_below_one(self, circuit, t):
        sliced = timeslice(circuit)
        if sliced.num_slices == 0:
            return
        t = t % sliced.num_slices
        weights = lookahead_matrix(sliced, t)
        assert (weights < 1.0).all()
        assert (weights >= 0.0).all()

    @given(circuits(max_qubits=6, max_gates=20))
    def test_matrix_matches_scalar_contract(self, circuit):
        sliced = timeslice(circuit)
        if sliced.num_slices == 0:
            return
        weights = lookahead_matrix(sliced, 0)
        for qi in range(circuit.num_qubits):
            for qj in range(qi + 1, circuit.num_qubits):
                assert weights[qi, qj] == lookahead_weight(sliced, 0, qi, qj)
                assert weights[qi, qj] == weights[qj, qi]

    def test_monotone_in_added_interactions(self):
        base = chain(4, [[], [(0, 1)], []])
        more = chain(4, [[], [(0, 1)], [(0, 1)]])
        assert lookahead_weight(more, 0, 0, 1) > lookahead_weight(base, 0, 0, 1)

    @given(
        st.lists(st.booleans(), min_size=1, max_size=12),
        st.integers(min_value=0, max_value=11),
    )
    def test_monotone_property(self, pattern, extra_slice):
        # Adding one future interaction never decreases the pair's weight.
        base_pairs = [[(0, 1)] if hit else [] for hit in pattern]
        more_pairs = [list(s) for s in base_pairs]
        if extra_slice < len(more_pairs):
            more_pairs[extra_slice] = [(0, 1)]
        base = chain(2, [[]] + base_pairs)
        more = chain(2, [[]] + more_pairs)
        assert lookahead_weight(more, 0, 0, 1) >= lookahead_weight(base, 0, 0, 1)

    def test_truncation_error_bounded(self):
        # All interactions beyond the horizon sum to less than 2**-horizon.
        sliced = chain(2, [[]] + [[(0, 1)]] * 40)
        for horizon in (4, 8, 16):
            full = lookahead_weight(sliced, 0, 0, 1, horizon=60)
            cut = lookahead_weight(sliced, 0, 0, 1, horizon=horizon)
            assert 0 <= full - cut < 2.0**-horizon

    def test_weights_are_exact_dyadics(self):
        sliced = chain(4, [[], [(0, 1)], [(0, 1)], [(0, 1)]])
        w = lookahead_weight(sliced, 0, 0, 1)
        assert w == 0.5 + 0.25 + 0.125  # exact float arithmetic on dyadics

    def test_default_horizon_reproduces_unbounded_mapper_decisions(self):
        # Truncation at the default horizon is below every decision threshold:
        # both mappers produce identical paths with an effectively unbounded one.
        from qcoremap import (
            Architecture,
            FgpConfig,
            HqaConfig,
            fgp_map_circuit,
            gen_qft,
            gen_random,
            map_circuit,
        )

        arch = Architecture(2, 8)
        for circuit in (gen_qft(16), gen_random(16, cycles=16, p=0.5, seed=2)):
            bounded = map_circuit(circuit, arch, HqaConfig(horizon=32))
            unbounded = map_circuit(circuit, arch, HqaConfig(horizon=10_000))
            assert bounded == unbounded
            assert fgp_map_circuit(circuit, arch, FgpConfig(horizon=32)) == fgp_map_circuit(
                circuit, arch, FgpConfig(horizon=10_000)
            )
