"""
Split a circuit at its cut markers into independently runnable fragments.
"""
# Gate DAG convention: nodes are gate indices plus ("start", w) / ("end", w)
# terminals per wire; every edge is one wire segment keyed by its wire.

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Optional, Tuple

import networkx as nx

from circuits import Circuit, Gate
from core.exceptions import CuttingError

logger = logging.getLogger(__name__)

START = "start"
END = "end"


@dataclass(frozen=True)
class CutEdge:
    """
    A cut wire segment joining two fragments.

    Attributes:
        index: Cut id, also the label of its axis in fragment tensors.
        wire: Wire of the original circuit.
        source: Fragment that measures the wire.
        sink: Fragment that re-prepares it.
        source_wire: Local wire index inside the source fragment.
        sink_wire: Local wire index inside the sink fragment.
    """
    index: int
    wire: int
    source: int
    sink: int
    source_wire: int
    sink_wire: int

    @property
    def label(self) -> str:
        return f"cut{self.index}"


@dataclass
class Fragment:
    """
    Subcircuit left after removing the cut segments.

    Attributes:
        index: Fragment id.
        wires: Original wires, position = local wire index.
        body: Gates on local wires, in original order.
        gate_indices: Original indices of the body gates.
        in_cuts: Cut ids entering the fragment.
        in_wires: Local wire of each incoming cut.
        out_cuts: Cut ids leaving the fragment.
        out_wires: Local wire of each outgoing cut.
        terminal_wire: Local wire carrying the circuit's Z observable, if any.
    """
    index: int
    wires: List[int]
    body: List[Gate] = field(default_factory=list)
    gate_indices: List[int] = field(default_factory=list)
    in_cuts: List[int] = field(default_factory=list)
    in_wires: List[int] = field(default_factory=list)
    out_cuts: List[int] = field(default_factory=list)
    out_wires: List[int] = field(default_factory=list)
    terminal_wire: Optional[int] = None

    @property
    def n_qubits(self) -> int:
        return len(self.wires)

    @property
    def n_configs(self) -> int:
        """Preparation/measurement settings this fragment runs with."""
        return 4 ** len(self.in_cuts) * 3 ** len(self.out_cuts)

    def body_circuit(self) -> Circuit:
        return Circuit(self.n_qubits, list(self.body), measured_wire=self.terminal_wire)


@dataclass
class FragmentSet:
    """
    Result of partitioning a circuit.

    Attributes:
        fragments: Fragments ordered by their first gate.
        cut_edges: Effective cuts, indexed by ``CutEdge.index``.
        dag: MultiDiGraph over fragment ids, one edge per cut (keyed by cut id).
        n_qubits: Width of the original circuit.
        measured_wire: Measured wire of the original circuit.
    """
    fragments: List[Fragment]
    cut_edges: List[CutEdge]
    dag: nx.MultiDiGraph
    n_qubits: int
    measured_wire: Optional[int] = None

    @property
    def k(self) -> int:
        return len(self.fragments)

    @property
    def d_max(self) -> int:
        """Largest number of cuts between any two fragments."""
        pairs = Counter(tuple(sorted((c.source, c.sink))) for c in self.cut_edges)
        return max(pairs.values(), default=0)

    @property
    def n_configs(self) -> int:
        return sum(f.n_configs for f in self.fragments)

    @property
    def terminal_fragment(self) -> Optional[int]:
        for f in self.fragments:
            if f.terminal_wire is not None:
                return f.index
        return None

    def topological_order(self) -> List[int]:
        return list(nx.lexicographical_topological_sort(self.dag))


def gate_dag(circuit: Circuit) -> nx.MultiDiGraph:
    """
    Wire-dependency DAG of a circuit.

    Returns:
        nx.MultiDiGraph: Gate and terminal nodes; edge keys are wires.
    """
    graph = nx.MultiDiGraph()
    last: Dict[int, Hashable] = {}
    for wire in range(circuit.n_qubits):
        graph.add_node((START, wire))
        last[wire] = (START, wire)
    for index, gate in enumerate(circuit.gates):
        graph.add_node(index)
        for wire in gate.wires:
            graph.add_edge(last[wire], index, key=wire)
            last[wire] = index
    for wire in range(circuit.n_qubits):
        graph.add_node((END, wire))
        graph.add_edge(last[wire], (END, wire), key=wire)
    return graph


def _segment_for_marker(circuit: Circuit, wire: int, position: int) -> Tuple[Hashable, Hashable]:
    ops = [(START, wire)] + [i for i, g in enumerate(circuit.gates) if wire in g.wires] + [(END, wire)]
    before = [j for j, op in enumerate(ops[1:-1], start=1) if op <= position]
    j = before[-1] if before else 0
    return ops[j], ops[j + 1]


def _node_wires(node: Hashable, circuit: Circuit) -> Tuple[int, ...]:
    if isinstance(node, tuple):
        return (node[1],)
    return circuit.gates[node].wires


def _component_key(nodes) -> Tuple[int, int]:
    gates = [n for n in nodes if not isinstance(n, tuple)]
    wires = [n[1] for n in nodes if isinstance(n, tuple)]
    return (min(gates) if gates else float("inf"), min(wires) if wires else -1)


def partition(circuit: Circuit) -> FragmentSet:
    """
    Cut a circuit at its markers and collect the connected fragments.

    Markers that do not separate their two sides are ignored with a
    warning. Components holding neither gates, cuts nor the measured wire
    (idle wires) are dropped.

    Args:
        circuit: Circuit with cut markers and bound angles.

    Returns:
        FragmentSet: Fragments, cut edges and the fragment DAG.

    Raises:
        CuttingError: If there are no markers, no marker disconnects the
            circuit, or the fragment graph has a cycle.
    """
    if not circuit.cut_markers:
        raise CuttingError("Circuit has no cut markers to partition on")

    graph = gate_dag(circuit)
    segments: List[Tuple[Hashable, Hashable, int]] = []
    for wire, position in circuit.cut_markers:
        segment = _segment_for_marker(circuit, wire, position) + (wire,)
        if segment not in segments:
            segments.append(segment)

    cut_graph = graph.copy()
    for u, v, wire in segments:
        cut_graph.remove_edge(u, v, key=wire)

    components = sorted(nx.weakly_connected_components(cut_graph), key=_component_key)
    owner = {node: i for i, nodes in enumerate(components) for node in nodes}

    effective = [(u, v, w) for u, v, w in segments if owner[u] != owner[v]]
    ignored = len(segments) - len(effective)
    if ignored:
        logger.warning("Ignoring %d cut marker(s) that do not separate the circuit", ignored)
    if not effective:
        raise CuttingError(
            "Cut markers do not disconnect the circuit; the only fragment is the whole circuit",
            details={"markers": len(circuit.cut_markers)},
        )

    touched = {owner[u] for u, v, _ in effective} | {owner[v] for u, v, _ in effective}
    measured_end = None if circuit.measured_wire is None else (END, circuit.measured_wire)
    kept = [
        i for i, nodes in enumerate(components)
        if i in touched or measured_end in nodes or any(not isinstance(n, tuple) for n in nodes)
    ]
    renumber = {old: new for new, old in enumerate(kept)}

    fragments = []
    for old in kept:
        nodes = components[old]
        wires = sorted({w for node in nodes for w in _node_wires(node, circuit)})
        local = {w: i for i, w in enumerate(wires)}
        gate_ids = sorted(n for n in nodes if not isinstance(n, tuple))
        fragment = Fragment(
            index=renumber[old],
            wires=wires,
            body=[circuit.gates[i].with_wires([local[w] for w in circuit.gates[i].wires]) for i in gate_ids],
            gate_indices=gate_ids,
        )
        if measured_end in nodes:
            fragment.terminal_wire = local[circuit.measured_wire]
        fragments.append(fragment)

    dag = nx.MultiDiGraph()
    dag.add_nodes_from(range(len(fragments)))
    cut_edges = []
    for index, (u, v, wire) in enumerate(effective):
        source, sink = fragments[renumber[owner[u]]], fragments[renumber[owner[v]]]
        cut = CutEdge(index, wire, source.index, sink.index,
                      source.wires.index(wire), sink.wires.index(wire))
        cut_edges.append(cut)
        source.out_cuts.append(index)
        source.out_wires.append(cut.source_wire)
        sink.in_cuts.append(index)
        sink.in_wires.append(cut.sink_wire)
        dag.add_edge(source.index, sink.index, key=index, wire=wire)

    if not nx.is_directed_acyclic_graph(dag):
        raise CuttingError("Fragment graph is cyclic; a wire re-enters a fragment it left")

    fs = FragmentSet(fragments, cut_edges, dag, circuit.n_qubits, circuit.measured_wire)
    logger.debug("Partitioned into %d fragments with %d cuts", fs.k, len(cut_edges))
    return fs
