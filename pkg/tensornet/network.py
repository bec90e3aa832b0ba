"""
Tensor-network graphs and full network contraction.

A network is a set of vertices (optionally carrying a DenseTensor) joined by
labeled edges. An edge with one endpoint equal to ``OPEN`` is an open index
of the network. A vertex tensor carries exactly the labels of its incident
edges.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from core.exceptions import TensorNetworkError
from .tensor import DenseTensor, contract_pair

logger = logging.getLogger(__name__)

OPEN = None

IN = "in"
OUT = "out"

VertexId = Hashable
ContractionPath = Union[str, Sequence[Tuple[VertexId, VertexId]]]


@dataclass(frozen=True)
class Edge:
    """
    One index of the network.

    Attributes:
        u: First endpoint (a vertex id).
        v: Second endpoint, or OPEN for an open index.
        dim: Index dimension, at least 1.
        label: Unique edge label; also the tensor label of this index.
    """
    u: VertexId
    v: Optional[VertexId]
    dim: int
    label: str

    @property
    def is_open(self) -> bool:
        return self.u is OPEN or self.v is OPEN

    @property
    def endpoints(self) -> Tuple[VertexId, ...]:
        return tuple(x for x in (self.u, self.v) if x is not OPEN)

    def other(self, vertex: VertexId) -> Optional[VertexId]:
        return self.v if self.u == vertex else self.u


class TensorNetworkGraph:
    """
    Undirected multigraph of tensors.

    Tensors are optional so layout-only graphs can be described by their
    edge dimensions alone.
    """

    def __init__(self):
        self.vertices: Dict[VertexId, Optional[DenseTensor]] = {}
        self.edges: List[Edge] = []
        self.directions: Dict[str, str] = {}

    def add_vertex(self, vertex: VertexId, tensor: Optional[DenseTensor] = None) -> "TensorNetworkGraph":
        if vertex is OPEN:
            raise TensorNetworkError("OPEN cannot be used as a vertex id")
        self.vertices[vertex] = tensor
        return self

    def add_edge(self, u: VertexId, v: Optional[VertexId], dim: int,
                 label: Optional[str] = None, direction: Optional[str] = None) -> Edge:
        """
        Connect two vertices, or attach an open index when ``v`` is OPEN.

        Args:
            u: Endpoint vertex id.
            v: Endpoint vertex id or OPEN.
            dim: Index dimension.
            label: Edge label; defaults to ``e<index>``.
            direction: Optional "in"/"out" orientation of an open edge.

        Returns:
            Edge: The new edge.

        Raises:
            TensorNetworkError: On unknown endpoints, dim < 1, a duplicate
                label or a self-loop.
        """
        if u is OPEN and v is not OPEN:
            u, v = v, u
        for endpoint in (u, v):
            if endpoint is not OPEN and endpoint not in self.vertices:
                raise TensorNetworkError(f"Edge endpoint {endpoint!r} is not a vertex")
        if u is OPEN:
            raise TensorNetworkError("An edge needs at least one vertex endpoint")
        if u == v:
            raise TensorNetworkError(f"Self-loop on {u!r}; trace the tensor with DenseTensor.trace instead")
        if int(dim) < 1:
            raise TensorNetworkError(f"Edge dimension must be >= 1, got {dim}")
        if direction is not None and direction not in (IN, OUT):
            raise TensorNetworkError(f"Direction must be 'in' or 'out', got {direction!r}")

        label = label if label is not None else self._fresh_label()
        if any(e.label == label for e in self.edges):
            raise TensorNetworkError(f"Duplicate edge label {label!r}")
        edge = Edge(u, v, int(dim), str(label))
        self.edges.append(edge)
        if direction is not None:
            self.set_direction(edge.label, direction)
        return edge

    def _fresh_label(self) -> str:
        taken = {e.label for e in self.edges}
        for index in itertools.count(len(self.edges)):
            if f"e{index}" not in taken:
                return f"e{index}"

    def set_direction(self, label: str, direction: str) -> None:
        if direction not in (IN, OUT):
            raise TensorNetworkError(f"Direction must be 'in' or 'out', got {direction!r}")
        self.directions[label] = direction

    def edge(self, label: str) -> Edge:
        for e in self.edges:
            if e.label == label:
                return e
        raise TensorNetworkError(f"No edge labeled {label!r}")

    def open_edges(self) -> List[Edge]:
        return [e for e in self.edges if e.is_open]

    def internal_edges(self) -> List[Edge]:
        return [e for e in self.edges if not e.is_open]

    def incident_edges(self, vertex: VertexId) -> List[Edge]:
        return [e for e in self.edges if vertex in e.endpoints]

    def neighbors(self, vertex: VertexId) -> List[VertexId]:
        """Adjacent vertices in edge order, without repeats."""
        seen = []
        for e in self.incident_edges(vertex):
            other = e.other(vertex)
            if other is not OPEN and other not in seen:
                seen.append(other)
        return seen

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for e in self.internal_edges():
            graph.add_edge(e.u, e.v, key=e.label, dim=e.dim)
        return graph

    def is_connected(self) -> bool:
        return len(self.vertices) > 0 and nx.is_connected(self.to_networkx())

    def validate(self, require_tensors: bool = False) -> None:
        """
        Check that tensors agree with the edges attached to them.

        Args:
            require_tensors: Also require every vertex to carry a tensor.

        Raises:
            TensorNetworkError: On a missing tensor, a label mismatch or an
                inconsistent edge dimension.
        """
        for vertex, tensor in self.vertices.items():
            if tensor is None:
                if require_tensors:
                    raise TensorNetworkError(f"Vertex {vertex!r} carries no tensor")
                continue
            incident = self.incident_edges(vertex)
            expected = sorted(e.label for e in incident)
            if sorted(tensor.labels) != expected:
                raise TensorNetworkError(
                    f"Vertex {vertex!r} has labels {sorted(tensor.labels)}, edges {expected}",
                    details={"vertex": repr(vertex)},
                )
            for e in incident:
                if tensor.dim(e.label) != e.dim:
                    raise TensorNetworkError(
                        f"Edge {e.label!r} has dimension {e.dim} but vertex {vertex!r} "
                        f"has {tensor.dim(e.label)}",
                        details={"edge": e.label},
                    )

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return (f"TensorNetworkGraph(vertices={len(self.vertices)}, "
                f"edges={len(self.internal_edges())}, open={len(self.open_edges())})")


def _pair_cost(a: DenseTensor, b: DenseTensor) -> int:
    shared = set(a.labels) & set(b.labels)
    shared_size = 1
    for label in shared:
        shared_size *= a.dim(label)
    return (a.size // shared_size) * (b.size // shared_size)


def _greedy_pair(tensors: Dict[VertexId, DenseTensor]) -> Tuple[VertexId, VertexId]:
    """Pair with the smallest intermediate, preferring pairs that share an index."""
    owners: Dict[str, List[VertexId]] = {}
    for vertex, tensor in tensors.items():
        for label in tensor.labels:
            owners.setdefault(label, []).append(vertex)

    order = {vertex: i for i, vertex in enumerate(tensors)}
    best = None
    for pair in owners.values():
        if len(pair) != 2:
            continue
        u, v = sorted(pair, key=order.get)
        key = (_pair_cost(tensors[u], tensors[v]), order[u], order[v])
        if best is None or key < best[0]:
            best = (key, (u, v))
    if best is not None:
        return best[1]

    # Disconnected remainder: outer product of the two smallest tensors
    smallest = sorted(tensors, key=lambda vertex: (tensors[vertex].size, order[vertex]))
    u, v = sorted(smallest[:2], key=order.get)
    return u, v


def contract_network(tn: TensorNetworkGraph, path: ContractionPath = "greedy") -> DenseTensor:
    """
    Contract every internal edge of a network.

    Args:
        tn: Network whose vertices all carry tensors.
        path: "greedy", or an ordered list of vertex-id pairs. Contracting
            (u, v) stores the result under u; pairs sharing no index take an
            outer product.

    Returns:
        DenseTensor: Tensor over the open edges in network edge order (rank 0
            when there are none).

    Raises:
        TensorNetworkError: On inconsistent tensors, an unknown vertex in the
            path, or a path that leaves more than one tensor.
    """
    tn.validate(require_tensors=True)
    if not tn.vertices:
        raise TensorNetworkError("Cannot contract an empty network")

    tensors: Dict[VertexId, DenseTensor] = dict(tn.vertices)

    def merge(u: VertexId, v: VertexId) -> None:
        if u not in tensors or v not in tensors or u == v:
            raise TensorNetworkError(f"Invalid contraction step ({u!r}, {v!r})")
        tensors[u] = contract_pair(tensors[u], tensors.pop(v))

    if isinstance(path, str):
        if path != "greedy":
            raise TensorNetworkError(f"Unknown contraction path {path!r}")
        while len(tensors) > 1:
            merge(*_greedy_pair(tensors))
    else:
        for u, v in path:
            merge(u, v)
        if len(tensors) != 1:
            raise TensorNetworkError(f"Contraction path leaves {len(tensors)} tensors")

    (result,) = tensors.values()
    open_labels = [e.label for e in tn.open_edges()]
    logger.debug("Contracted %d tensors down to rank %d", len(tn.vertices), result.rank)
    return result.transpose(open_labels)


def network_from_tensors(tensors: Iterable[Tuple[VertexId, DenseTensor]]) -> TensorNetworkGraph:
    """
    Build a network by matching tensor labels.

    A label shared by two tensors becomes an internal edge, a label owned by
    one tensor becomes an open edge.

    Raises:
        TensorNetworkError: If a label appears on more than two tensors.
    """
    tn = TensorNetworkGraph()
    owners: Dict[str, List[VertexId]] = {}
    for vertex, tensor in tensors:
        tn.add_vertex(vertex, tensor)
        for label in tensor.labels:
            owners.setdefault(label, []).append(vertex)

    for label, pair in owners.items():
        if len(pair) > 2:
            raise TensorNetworkError(f"Label {label!r} appears on {len(pair)} tensors")
        dim = tn.vertices[pair[0]].dim(label)
        tn.add_edge(pair[0], pair[1] if len(pair) == 2 else OPEN, dim, label)
    tn.validate()
    return tn
