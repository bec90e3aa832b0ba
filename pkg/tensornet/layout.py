"""
Turn a tensor-network graph into the block layout of a quantum circuit.

The conversion runs four steps:

1. every open edge is declared a circuit input or output,
2. vertices get integer labels in breadth-first order, starting at the
   vertex with the most open inputs,
3. internal edges are oriented from the lower to the higher label,
4. each vertex is balanced with extra inputs or outputs so that it has as
   many incoming as outgoing wires.

An edge of dimension d carries ceil(log2 d) qubit wires.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from core.exceptions import FormatError, TensorNetworkError
from .network import IN, OPEN, OUT, TensorNetworkGraph
from .tensor import DenseTensor

logger = logging.getLogger(__name__)


def wires_for_dim(dim: int) -> int:
    """Number of qubit wires needed for an index of dimension ``dim``."""
    if dim < 1:
        raise TensorNetworkError(f"Edge dimension must be >= 1, got {dim}")
    return (int(dim) - 1).bit_length()


@dataclass(frozen=True)
class LayoutPort:
    """
    Circuit input or output attached to one block.

    Attributes:
        block: Block label.
        wires: Number of qubit wires.
        label: Edge label, or ``balance<block>`` for ports added in step 4.
        balance: True for ports added to balance a block.
    """
    block: int
    wires: int
    label: str
    balance: bool = False


@dataclass
class CircuitLayout:
    """
    Directed acyclic block graph of a circuit.

    Attributes:
        graph: MultiDiGraph over block labels 0..k-1. Node attribute
            ``vertex`` holds the originating network vertex id (``merged``
            lists all of them); edge attributes are ``wires``, ``dim``, and
            the edge key is the network edge label.
        inputs: Circuit inputs in label order.
        outputs: Circuit outputs in label order.
        network: Copy of the network with bond dimensions padded to powers
            of two, when every vertex carried a tensor.
    """
    graph: nx.MultiDiGraph
    inputs: List[LayoutPort] = field(default_factory=list)
    outputs: List[LayoutPort] = field(default_factory=list)
    network: Optional[TensorNetworkGraph] = None

    @property
    def n_blocks(self) -> int:
        return self.graph.number_of_nodes()

    @property
    def n_wires(self) -> int:
        return sum(port.wires for port in self.inputs)

    def vertex_id(self, block: int) -> Hashable:
        return self.graph.nodes[block]["vertex"]

    def block_wires(self, block: int) -> Tuple[int, int]:
        """(incoming, outgoing) wire totals of a block, ports included."""
        n_in = sum(d["wires"] for _, _, d in self.graph.in_edges(block, data=True))
        n_out = sum(d["wires"] for _, _, d in self.graph.out_edges(block, data=True))
        n_in += sum(p.wires for p in self.inputs if p.block == block)
        n_out += sum(p.wires for p in self.outputs if p.block == block)
        return n_in, n_out

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    def is_balanced(self) -> bool:
        return all(n_in == n_out for n_in, n_out in map(self.block_wires, self.graph.nodes))

    def topological_order(self) -> List[int]:
        return list(nx.lexicographical_topological_sort(self.graph))


def layout_wire_count(layout: CircuitLayout) -> int:
    return layout.n_wires


def _open_edge_directions(tn: TensorNetworkGraph,
                          directions: Optional[Mapping[str, str]]) -> Dict[str, str]:
    merged = dict(tn.directions)
    merged.update(directions or {})
    resolved = {}
    for edge in tn.open_edges():
        direction = merged.get(edge.label)
        if direction not in (IN, OUT):
            raise TensorNetworkError(
                f"Open edge {edge.label!r} needs an 'in' or 'out' direction",
                details={"edge": edge.label},
            )
        resolved[edge.label] = direction
    return resolved


def _label_vertices(tn: TensorNetworkGraph, directions: Dict[str, str]) -> Dict[Hashable, int]:
    open_inputs = {vertex: 0 for vertex in tn.vertices}
    for edge in tn.open_edges():
        if directions[edge.label] == IN:
            open_inputs[edge.u] += 1

    position = {vertex: i for i, vertex in enumerate(tn.vertices)}
    graph = tn.to_networkx()
    labels: Dict[Hashable, int] = {}
    while len(labels) < len(tn.vertices):
        unlabeled = [v for v in tn.vertices if v not in labels]
        start = max(unlabeled, key=lambda v: (open_inputs[v], -position[v]))
        for vertex in nx.bfs_tree(graph, start).nodes:
            labels[vertex] = len(labels)
    return labels


def pad_to_qubit_dims(tn: TensorNetworkGraph) -> TensorNetworkGraph:
    """
    Copy of a network with every edge dimension raised to 2^ceil(log2 d).

    Tensors are zero-padded along the grown axes, which leaves the full
    contraction unchanged.
    """
    padded_dims = {e.label: max(1, 2 ** wires_for_dim(e.dim)) for e in tn.edges}
    out = TensorNetworkGraph()
    for vertex, tensor in tn.vertices.items():
        if tensor is not None:
            widths = [(0, padded_dims[l] - tensor.dim(l)) for l in tensor.labels]
            tensor = DenseTensor(np.pad(tensor.data, widths), tensor.labels)
        out.add_vertex(vertex, tensor)
    for e in tn.edges:
        out.add_edge(e.u, e.v, padded_dims[e.label], e.label)
    out.directions = dict(tn.directions)
    return out


def tn_to_circuit_layout(tn: TensorNetworkGraph,
                         open_edge_directions: Optional[Mapping[str, str]] = None) -> CircuitLayout:
    """
    Convert a tensor network into a balanced block layout.

    Args:
        tn: Network graph; tensors are optional.
        open_edge_directions: "in"/"out" per open-edge label. Falls back to
            the directions stored on the graph.

    Returns:
        CircuitLayout: DAG over the relabeled vertices.

    Raises:
        TensorNetworkError: If an open edge has no direction.
    """
    if not tn.vertices:
        raise TensorNetworkError("Cannot lay out an empty network")
    tn.validate()
    directions = _open_edge_directions(tn, open_edge_directions)
    labels = _label_vertices(tn, directions)

    graph = nx.MultiDiGraph()
    for vertex, label in sorted(labels.items(), key=lambda item: item[1]):
        graph.add_node(label, vertex=vertex, merged=[vertex])

    inputs: List[LayoutPort] = []
    outputs: List[LayoutPort] = []
    for edge in tn.edges:
        wires = wires_for_dim(edge.dim)
        if edge.is_open:
            port = LayoutPort(labels[edge.u], wires, edge.label)
            (inputs if directions[edge.label] == IN else outputs).append(port)
            continue
        src, dst = sorted((labels[edge.u], labels[edge.v]))
        graph.add_edge(src, dst, key=edge.label, wires=wires, dim=edge.dim)

    layout = CircuitLayout(graph, inputs, outputs)
    for block in sorted(graph.nodes):
        n_in, n_out = layout.block_wires(block)
        if n_in < n_out:
            inputs.append(LayoutPort(block, n_out - n_in, f"balance{block}", balance=True))
        elif n_out < n_in:
            outputs.append(LayoutPort(block, n_in - n_out, f"balance{block}", balance=True))

    inputs.sort(key=lambda p: p.block)
    outputs.sort(key=lambda p: p.block)
    if all(tensor is not None for tensor in tn.vertices.values()):
        layout.network = pad_to_qubit_dims(tn)

    logger.debug("Layout with %d blocks on %d wires", layout.n_blocks, layout.n_wires)
    return layout


def _relabel(layout: CircuitLayout) -> CircuitLayout:
    mapping = {old: new for new, old in enumerate(sorted(layout.graph.nodes))}
    graph = nx.relabel_nodes(layout.graph, mapping, copy=True)

    def move(ports):
        return sorted(
            (LayoutPort(mapping[p.block], p.wires, p.label, p.balance) for p in ports),
            key=lambda p: p.block,
        )

    return CircuitLayout(graph, move(layout.inputs), move(layout.outputs), layout.network)


def merge_leading_blocks(layout: CircuitLayout) -> CircuitLayout:
    """
    Fold source blocks into their single successor.

    A block qualifies when all its inputs are circuit inputs, it has no
    circuit outputs, and all of its outgoing edges go to one block. Folding
    never widens the successor, so repeated merging stops at the first
    block that genuinely mixes wires from several sources.

    Returns:
        CircuitLayout: New layout with blocks relabeled 0..k-1.
    """
    graph = layout.graph.copy()
    inputs = list(layout.inputs)
    outputs = list(layout.outputs)

    changed = True
    while changed:
        changed = False
        for block in sorted(graph.nodes):
            successors = set(graph.successors(block))
            if (graph.in_degree(block) or len(successors) != 1
                    or any(p.block == block for p in outputs)):
                continue
            (target,) = successors
            inputs = [LayoutPort(target, p.wires, p.label, p.balance) if p.block == block else p
                      for p in inputs]
            graph.nodes[target]["merged"] = graph.nodes[block]["merged"] + graph.nodes[target]["merged"]
            graph.remove_node(block)
            changed = True
            break

    return _relabel(CircuitLayout(graph, inputs, outputs, layout.network))


def format_layout_text(layout: CircuitLayout) -> str:
    """
    Plain-text adjacency list of a layout.

    One ``src dst wires`` triple per line; circuit inputs use ``in`` as the
    source and outputs use ``out`` as the destination.
    """
    lines = [
        f"# blocks {layout.n_blocks}",
        f"# wires {layout.n_wires}",
    ]
    lines.extend(f"in {p.block} {p.wires}" for p in layout.inputs)
    for src, dst, data in sorted(layout.graph.edges(data=True), key=lambda e: (e[0], e[1])):
        lines.append(f"{src} {dst} {data['wires']}")
    lines.extend(f"{p.block} out {p.wires}" for p in layout.outputs)
    return "\n".join(lines) + "\n"


def _vertex_token(token: str) -> Hashable:
    return int(token) if token.lstrip("-").isdigit() else token


def parse_graph_text(text: str, source: str = "<string>") -> TensorNetworkGraph:
    """
    Read a layout-only network from text.

    Each non-comment line is ``u v dim [label]`` for an internal edge or
    ``u * dim [label] [in|out]`` for an open edge. ``vertex u`` declares a
    vertex without edges. Vertex tokens made of digits become ints.

    Args:
        text: File contents.
        source: Name used in error messages.

    Returns:
        TensorNetworkGraph: Graph without tensors, directions attached.

    Raises:
        FormatError: On malformed lines.
    """
    tn = TensorNetworkGraph()
    open_count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()

        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise FormatError(source, "expected 'vertex <id>'", line=lineno)
            tn.add_vertex(_vertex_token(tokens[1]))
            continue

        if len(tokens) < 3:
            raise FormatError(source, f"expected 'u v dim [label]', got {line!r}", line=lineno)
        u = _vertex_token(tokens[0])
        is_open = tokens[1] == "*"
        v = OPEN if is_open else _vertex_token(tokens[1])
        try:
            dim = int(tokens[2])
        except ValueError:
            raise FormatError(source, f"dimension {tokens[2]!r} is not an integer", line=lineno)

        extra = tokens[3:]
        direction = None
        if is_open and extra and extra[-1] in (IN, OUT):
            direction = extra.pop()
        if len(extra) > 1:
            raise FormatError(source, f"unexpected tokens {extra[1:]}", line=lineno)
        label = extra[0] if extra else None
        if label is None and is_open:
            label = f"open{open_count}"
        open_count += int(is_open)

        for vertex in (u, v):
            if vertex is not OPEN and vertex not in tn.vertices:
                tn.add_vertex(vertex)
        try:
            tn.add_edge(u, v, dim, label, direction)
        except TensorNetworkError as e:
            raise FormatError(source, e.message, line=lineno)

    if not tn.vertices:
        raise FormatError(source, "graph has no vertices")
    return tn


def peps_graph(rows: int, cols: int, bond_dim: int = 2, physical_dim: int = 2,
               direction: str = IN) -> TensorNetworkGraph:
    """
    Layout-only PEPS grid with one open physical edge per site.

    Vertices are (row, col) tuples in row-major order; open edges are
    labeled ``p<row>_<col>``.
    """
    if rows < 1 or cols < 1:
        raise TensorNetworkError(f"PEPS grid needs positive size, got {rows}x{cols}")
    tn = TensorNetworkGraph()
    for r in range(rows):
        for c in range(cols):
            tn.add_vertex((r, c))
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                tn.add_edge((r, c), (r, c + 1), bond_dim, f"h{r}_{c}")
            if r + 1 < rows:
                tn.add_edge((r, c), (r + 1, c), bond_dim, f"v{r}_{c}")
    for r in range(rows):
        for c in range(cols):
            tn.add_edge((r, c), OPEN, physical_dim, f"p{r}_{c}", direction)
    return tn


def mps_graph(n_sites: int, bond_dim: int = 2, physical_dim: int = 2,
              direction: str = IN) -> TensorNetworkGraph:
    """Layout-only MPS chain over sites 0..n-1 with open edges ``p<site>``."""
    if n_sites < 1:
        raise TensorNetworkError(f"MPS needs at least one site, got {n_sites}")
    tn = TensorNetworkGraph()
    for site in range(n_sites):
        tn.add_vertex(site)
    for site in range(n_sites - 1):
        tn.add_edge(site, site + 1, bond_dim, f"bond{site}")
    for site in range(n_sites):
        tn.add_edge(site, OPEN, physical_dim, f"p{site}", direction)
    return tn
