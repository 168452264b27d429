import pytest

from qcoremap import (
    Architecture,
    Circuit,
    Gate,
    OracleInfeasibleError,
    count_communications,
    fgp_map_circuit,
    gen_ghz,
    gen_random,
    map_circuit,
    minimum_communications,
)


def cx(a, b):
    return Gate("cx", (a, b))


class TestMinimumCommunications:
    def test_single_slice_is_free(self):
        circuit = Circuit(4, (cx(0, 2),))
        assert minimum_communications(circuit, Architecture(2, 2)) == 0

    def test_forced_merge_costs_two(self):
        # Slice 0 needs (0,1) together, slice 1 needs (0,2): full cores swap.
        circuit = Circuit(4, (cx(0, 1), cx(0, 2)))
        assert minimum_communications(circuit, Architecture(2, 2)) == 2

    def test_ghz4_optimum(self):
        # Each of the two successive partner changes costs a full swap.
        assert minimum_communications(gen_ghz(4), Architecture(2, 2)) == 4

    def test_no_two_qubit_gates(self):
        circuit = Circuit(4, (Gate("h", (0,)), Gate("h", (1,))))
        assert minimum_communications(circuit, Architecture(2, 2)) == 0

    def test_empty_circuit(self):
        assert minimum_communications(Circuit(3, ()), Architecture(2, 2)) == 0

    def test_slack_allows_single_moves(self):
        # Slice 0 pins (0,1) and (2,3) into different cores; the free slot
        # then lets qubit 2 join core 0 with a single relocation.
        circuit = Circuit(4, (cx(0, 1), cx(2, 3), cx(0, 2)))
        assert minimum_communications(circuit, Architecture(2, 3)) == 1

    def test_infeasible_slice_detected(self):
        circuit = Circuit(6, (cx(0, 1), cx(2, 3), cx(4, 5)))
        with pytest.raises(OracleInfeasibleError):
            minimum_communications(circuit, Architecture(2, 3))

    def test_budget_guard(self):
        with pytest.raises(ValueError, match="budget"):
            minimum_communications(gen_ghz(16), Architecture(4, 4), max_states=10)


class TestMappersNeverBeatOracle:
    @pytest.mark.parametrize("seed", range(8))
    def test_random_tiny_instances(self, seed):
        circuit = gen_random(6, cycles=5, p=0.5, seed=seed)
        arch = Architecture(2, 3)
        optimum = minimum_communications(circuit, arch)
        hqa = count_communications(map_circuit(circuit, arch))
        fgp = count_communications(fgp_map_circuit(circuit, arch))
        assert hqa >= optimum
        assert fgp >= optimum
