"""
MPS and TTN meta-ansatz layouts and their parameter vectors.

A layout fixes which wires every block touches, where the bond wires are
cut and which wire is measured; the builders turn it into a circuit.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from core.exceptions import AnsatzError
from .blocks import BlockSpec


class AnsatzKind(Enum):
    MPS = "MPS"
    TTN = "TTN"


@dataclass(frozen=True)
class BondCut:
    """Bond wires handed from one block to a later one."""
    block: int
    wires: Tuple[int, ...]


@dataclass
class AnsatzLayout:
    """
    Block placement of a meta-ansatz.

    Use the ``mps`` and ``ttn`` constructors, which check the size
    constraints and compute the wire map.

    Attributes:
        kind: MPS or TTN.
        n_qubits: Circuit width (n).
        n_bond_qubits: Wires shared between connected blocks (n_V).
        block: Block shape (b, L, entangling range).
        block_wire_map: Ordered wires of every block, in build order.
        measured_wire: Wire carrying the terminal Z observable.
        bond_cuts: Bond wires passed on after each non-final block.
        share_weights: All blocks reuse one (L, b, 3) weight tensor.
    """
    kind: AnsatzKind
    n_qubits: int
    n_bond_qubits: int
    block: BlockSpec
    block_wire_map: List[List[int]]
    measured_wire: int
    bond_cuts: List[BondCut] = field(default_factory=list)
    share_weights: bool = False

    @property
    def n_blocks(self) -> int:
        return len(self.block_wire_map)

    @property
    def bond_dimension(self) -> int:
        return 2 ** self.n_bond_qubits

    @property
    def n_weight_sets(self) -> int:
        return 1 if self.share_weights else self.n_blocks

    @property
    def n_params(self) -> int:
        return self.n_weight_sets * self.block.n_params

    def param_offset(self, block_index: int) -> int:
        """Start of a block's angles in the flat parameter vector."""
        return (0 if self.share_weights else block_index) * self.block.n_params

    @classmethod
    def mps(cls, n_qubits: int, block_qubits: int = 2, n_bond_qubits: int = 1, n_layers: int = 1,
            entangling_range: int = 1, share_weights: bool = False) -> "AnsatzLayout":
        """
        Cascade of blocks, consecutive blocks sharing ``n_bond_qubits`` wires.

        Block j acts on wires [j*s, j*s + b) with stride s = b - n_V.

        Raises:
            AnsatzError: Unless 1 <= n_V < b <= n and (n - n_V) is divisible
                by (b - n_V).
        """
        spec = BlockSpec(block_qubits, n_layers, entangling_range)
        b, n_v = block_qubits, n_bond_qubits
        if not 1 <= n_v < b:
            raise AnsatzError(f"MPS needs 1 <= n_V < b, got n_V={n_v}, b={b}")
        if n_qubits < b or (n_qubits - n_v) % (b - n_v):
            raise AnsatzError(
                f"MPS with b={b}, n_V={n_v} cannot cover n={n_qubits} qubits; "
                f"nearest valid n is {nearest_valid_mps_qubits(n_qubits, b, n_v)}",
                details={"n": n_qubits, "b": b, "n_V": n_v},
            )

        stride = b - n_v
        k = (n_qubits - n_v) // stride
        wire_map = [list(range(j * stride, j * stride + b)) for j in range(k)]
        cuts = [BondCut(j, tuple(wire_map[j][-n_v:])) for j in range(k - 1)]
        return cls(AnsatzKind.MPS, n_qubits, n_v, spec, wire_map, n_qubits - 1, cuts, share_weights)

    @classmethod
    def ttn(cls, n_qubits: int, block_qubits: int = 2, n_layers: int = 1,
            entangling_range: int = 1, share_weights: bool = False) -> "AnsatzLayout":
        """
        Binary tree of blocks with n_V = b/2.

        Level 0 blocks act on consecutive b-wire groups. Every block passes
        its lower-indexed n_V wires on; a block at the next level joins the
        passed groups of two neighbouring blocks.

        Raises:
            AnsatzError: Unless b is even and n = b * 2^m with m >= 1.
        """
        spec = BlockSpec(block_qubits, n_layers, entangling_range)
        b = block_qubits
        if b % 2:
            raise AnsatzError(f"TTN blocks need an even width, got b={b}")
        groups = n_qubits // b if n_qubits % b == 0 else 0
        if groups < 2 or groups & (groups - 1):
            raise AnsatzError(
                f"TTN needs n = b * 2^m with m >= 1, got n={n_qubits}, b={b}",
                details={"n": n_qubits, "b": b},
            )

        n_v = b // 2
        wire_map: List[List[int]] = []
        cuts: List[BondCut] = []
        level = [list(range(g * b, (g + 1) * b)) for g in range(groups)]
        while True:
            passed = []
            for wires in level:
                wire_map.append(wires)
                if len(level) > 1:
                    cuts.append(BondCut(len(wire_map) - 1, tuple(wires[:n_v])))
                passed.append(wires[:n_v])
            if len(level) == 1:
                break
            level = [passed[i] + passed[i + 1] for i in range(0, len(passed), 2)]

        return cls(AnsatzKind.TTN, n_qubits, n_v, spec, wire_map, wire_map[-1][-1], cuts, share_weights)

    @property
    def n_levels(self) -> int:
        """Tree depth of a TTN (m + 1), or the block count of an MPS."""
        if self.kind is AnsatzKind.MPS:
            return self.n_blocks
        return int(np.log2(self.n_blocks + 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "n_qubits": self.n_qubits,
            "n_bond_qubits": self.n_bond_qubits,
            "block_qubits": self.block.n_block_qubits,
            "n_layers": self.block.n_layers,
            "entangling_range": self.block.entangling_range,
            "share_weights": self.share_weights,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AnsatzLayout":
        """
        Rebuild a layout from ``to_dict`` output.

        Raises:
            AnsatzError: On an unknown kind or invalid sizes.
        """
        try:
            kind = AnsatzKind(data["kind"])
        except (KeyError, ValueError):
            raise AnsatzError(f"Unknown ansatz kind {data.get('kind')!r}")
        common = dict(
            block_qubits=int(data["block_qubits"]),
            n_layers=int(data.get("n_layers", 1)),
            entangling_range=int(data.get("entangling_range", 1)),
            share_weights=bool(data.get("share_weights", False)),
        )
        if kind is AnsatzKind.MPS:
            return cls.mps(int(data["n_qubits"]), n_bond_qubits=int(data["n_bond_qubits"]), **common)
        return cls.ttn(int(data["n_qubits"]), **common)

    def __str__(self):
        return (f"{self.kind.value}(n={self.n_qubits}, b={self.block.n_block_qubits}, "
                f"n_V={self.n_bond_qubits}, L={self.block.n_layers}, blocks={self.n_blocks})")


@dataclass
class ParamVector:
    """
    Flat parameter array with its block structure.

    Attributes:
        values: Real array of length n_weight_sets * L * b * 3.
        n_weight_sets: Number of independent (L, b, 3) weight tensors.
        block: Block shape.
    """
    values: np.ndarray
    n_weight_sets: int
    block: BlockSpec

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float).ravel()
        if self.values.size != self.n_weight_sets * self.block.n_params:
            raise AnsatzError(
                f"Parameter vector has {self.values.size} entries, layout needs "
                f"{self.n_weight_sets * self.block.n_params}"
            )

    @classmethod
    def for_layout(cls, layout: AnsatzLayout, values=None) -> "ParamVector":
        """Wrap ``values`` (zeros when None) for a layout."""
        if values is None:
            values = np.zeros(layout.n_params)
        return cls(values, layout.n_weight_sets, layout.block)

    @property
    def shape(self) -> Tuple[int, int, int, int]:
        return (self.n_weight_sets,) + self.block.weight_shape

    def block_weights(self, index: int) -> np.ndarray:
        """(L, b, 3) view of one weight set."""
        return self.values.reshape(self.shape)[index]

    def __len__(self):
        return self.values.size


def as_values(params, layout: AnsatzLayout) -> Optional[np.ndarray]:
    """Flat float array from a ParamVector, array-like or None."""
    if params is None:
        return None
    if isinstance(params, ParamVector):
        if params.shape != ParamVector.for_layout(layout).shape:
            raise AnsatzError(f"Parameter shape {params.shape} does not fit {layout}")
        return params.values
    return ParamVector.for_layout(layout, params).values


def random_params(layout: AnsatzLayout, seed: Optional[int] = None) -> ParamVector:
    """Angles drawn uniformly from [0, 2*pi)."""
    rng = np.random.default_rng(seed)
    return ParamVector.for_layout(layout, rng.uniform(0.0, 2.0 * np.pi, layout.n_params))


def nearest_valid_mps_qubits(n_qubits: int, block_qubits: int, n_bond_qubits: int) -> int:
    """Smallest n' >= n that an MPS with these blocks covers exactly."""
    stride = block_qubits - n_bond_qubits
    if stride < 1:
        raise AnsatzError(f"MPS needs n_V < b, got n_V={n_bond_qubits}, b={block_qubits}")
    n = max(n_qubits, block_qubits)
    return n + (-(n - n_bond_qubits)) % stride
