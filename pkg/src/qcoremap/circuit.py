"""Quantum circuit IR: gates, circuits, and parallel timeslices.

Only the interaction structure matters to the mapping passes: gate labels and
angles are opaque payload kept for serialization fidelity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

ONE_QUBIT = "one-qubit"
TWO_QUBIT = "two-qubit"


@dataclass(frozen=True)
class Gate:
    """A one- or two-qubit gate acting on distinct logical qubit indices."""

    label: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(self.qubits))
        object.__setattr__(self, "params", tuple(self.params))
        if len(self.qubits) not in (1, 2):
            raise ValueError(f"gate '{self.label}' must act on 1 or 2 qubits, got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"gate '{self.label}' repeats a qubit: {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"gate '{self.label}' has a negative qubit index: {self.qubits}")

    @property
    def kind(self) -> str:
        return TWO_QUBIT if len(self.qubits) == 2 else ONE_QUBIT

    @property
    def is_two_qubit(self) -> bool:
        return len(self.qubits) == 2


@dataclass(frozen=True)
class Circuit:
    """An ordered gate list over ``num_qubits`` logical qubits."""

    num_qubits: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be positive, got {self.num_qubits}")
        for g in self.gates:
            if max(g.qubits) >= self.num_qubits:
                raise ValueError(f"gate '{g.label}' on {g.qubits} exceeds {self.num_qubits} qubits")

    @property
    def two_qubit_count(self) -> int:
        return sum(1 for g in self.gates if g.is_two_qubit)


@dataclass(frozen=True)
class TimeslicedCircuit:
    """Gates layered into slices whose members act on pairwise-disjoint qubits."""

    num_qubits: int
    slices: tuple[tuple[Gate, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))

    @property
    def num_slices(self) -> int:
        return len(self.slices)


def timeslice(circuit: Circuit) -> TimeslicedCircuit:
    """Layer gates greedily as-soon-as-possible.

    Each gate lands in the earliest slice after the last slice that touched any
    of its qubits, so slices are disjoint, per-qubit order is preserved, and no
    gate could be hoisted one slice earlier.
    """
    last = [-1] * circuit.num_qubits
    slices: list[list[Gate]] = []
    for g in circuit.gates:
        s = 1 + max(last[q] for q in g.qubits)
        if s == len(slices):
            slices.append([])
        slices[s].append(g)
        for q in g.qubits:
            last[q] = s
    return TimeslicedCircuit(circuit.num_qubits, tuple(tuple(s) for s in slices))


def interacting_pairs(gates) -> set[tuple[int, int]]:
    """Unordered qubit pairs touched by two-qubit gates, as (low, high) tuples."""
    pairs = set()
    for g in gates:
        if g.is_two_qubit:
            a, b = g.qubits
            pairs.add((a, b) if a < b else (b, a))
    return pairs
