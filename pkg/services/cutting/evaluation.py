"""
Preparation/measurement settings of fragments and their simulation.
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from circuits import Basis, Circuit, Gate, PrepState, marginal_probabilities, run
from core.exceptions import CuttingError
from .fragments import Fragment, FragmentSet

logger = logging.getLogger(__name__)


class Pauli(Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"


# Axis orders of fragment tensors
PREP_ORDER = (PrepState.Z0, PrepState.Z1, PrepState.XPLUS, PrepState.YPLUS)
BASIS_ORDER = (Basis.X, Basis.Y, Basis.Z)
PAULI_ORDER = (Pauli.I, Pauli.X, Pauli.Y, Pauli.Z)

# Row P, column s: weight of preparation s in the expansion of Pauli P
CHANGE_OF_BASIS = np.array(
    [[1.0, 1.0, 0.0, 0.0],
     [-1.0, -1.0, 2.0, 0.0],
     [-1.0, -1.0, 0.0, 2.0],
     [1.0, -1.0, 0.0, 0.0]]
)

_Z_SIGNS = np.array([1.0, -1.0])
_I_SIGNS = np.array([1.0, 1.0])

EntryKey = Tuple[Tuple[PrepState, ...], Tuple[Pauli, ...]]


@dataclass(frozen=True)
class FragmentConfig:
    """
    One setting of a fragment's cut wires.

    Attributes:
        fragment: Fragment id.
        preps: State prepared on each incoming cut, in ``in_cuts`` order.
        bases: Basis measured on each outgoing cut, in ``out_cuts`` order.
    """
    fragment: int
    preps: Tuple[PrepState, ...] = ()
    bases: Tuple[Basis, ...] = ()

    def matches(self, fragment: Fragment) -> bool:
        return (fragment.index == self.fragment
                and len(self.preps) == len(fragment.in_cuts)
                and len(self.bases) == len(fragment.out_cuts))


@dataclass
class FragmentResult:
    """
    Measured values of one fragment.

    ``values`` maps (preparations, Paulis on outgoing cuts) to the joint
    expectation value of the Pauli products together with the terminal Z
    observable when the fragment holds the measured wire.
    """
    fragment: int
    values: Dict[EntryKey, float] = field(default_factory=dict)

    def update(self, entries: Dict[EntryKey, float]) -> None:
        self.values.update(entries)

    def to_tensor(self, fragment: Fragment) -> np.ndarray:
        """
        Fragment tensor over Pauli indices, incoming axes first.

        Incoming axes are converted from the preparation basis to the
        Pauli basis with ``CHANGE_OF_BASIS``.

        Raises:
            CuttingError: If any setting is missing.
        """
        n_in, n_out = len(fragment.in_cuts), len(fragment.out_cuts)
        raw = np.empty((4,) * (n_in + n_out))
        for preps in itertools.product(range(4), repeat=n_in):
            for paulis in itertools.product(range(4), repeat=n_out):
                key = (tuple(PREP_ORDER[i] for i in preps), tuple(PAULI_ORDER[i] for i in paulis))
                try:
                    raw[preps + paulis] = self.values[key]
                except KeyError:
                    raise CuttingError(
                        f"Fragment {fragment.index} is missing the result for {_describe(key)}",
                        details={"fragment": fragment.index},
                    )
        tensor = raw
        for axis in range(n_in):
            tensor = np.moveaxis(np.tensordot(CHANGE_OF_BASIS, tensor, axes=([1], [axis])), 0, axis)
        return tensor


def _describe(key: EntryKey) -> str:
    preps, paulis = key
    return f"preps={[p.value for p in preps]} paulis={[p.value for p in paulis]}"


def fragment_configs(fragment: Fragment) -> List[FragmentConfig]:
    """All settings of one fragment: 4 preparations per incoming cut, 3 bases per outgoing cut."""
    return [
        FragmentConfig(fragment.index, preps, bases)
        for preps in itertools.product(PREP_ORDER, repeat=len(fragment.in_cuts))
        for bases in itertools.product(BASIS_ORDER, repeat=len(fragment.out_cuts))
    ]


def enumerate_configs(fs: FragmentSet) -> List[FragmentConfig]:
    """
    Every setting of every fragment.

    The total equals the closed-form counts for fully cut MPS and TTN
    circuits.
    """
    configs = [config for fragment in fs.fragments for config in fragment_configs(fragment)]
    logger.debug("Enumerated %d fragment settings", len(configs))
    return configs


def fragment_circuit(fragment: Fragment, config: FragmentConfig) -> Circuit:
    """Fragment body with preparations in front and basis changes behind."""
    if not config.matches(fragment):
        raise CuttingError(
            f"Setting for fragment {config.fragment} does not match fragment {fragment.index} "
            f"({len(fragment.in_cuts)} in, {len(fragment.out_cuts)} out)"
        )
    gates = [Gate.prep_state(p, w) for p, w in zip(config.preps, fragment.in_wires)]
    gates.extend(fragment.body)
    gates.extend(Gate.basis_change(b, w) for b, w in zip(config.bases, fragment.out_wires))
    return Circuit(fragment.n_qubits, gates, measured_wire=fragment.terminal_wire)


def _sign_tensor(identity_mask: Iterable[bool], with_terminal: bool) -> np.ndarray:
    vectors = [_I_SIGNS if is_identity else _Z_SIGNS for is_identity in identity_mask]
    if with_terminal:
        vectors.append(_Z_SIGNS)
    return functools.reduce(np.multiply.outer, vectors, np.ones(()))


def evaluate_fragment(fragment: Fragment, config: FragmentConfig, shots: Optional[int] = None,
                      seed: Optional[int] = None) -> Dict[EntryKey, float]:
    """
    Run one fragment setting and read out its Pauli expectation values.

    Wires measured in Z also yield their identity variants (the outcome
    ignored), so the three bases cover all four Paulis. Wires that are
    neither cut nor measured are summed over.

    Args:
        fragment: Fragment to run.
        config: Its setting.
        shots: Estimate from this many samples instead of exact
            probabilities.
        seed: Seed of the sampling generator.

    Returns:
        Dict: (preparations, Paulis) -> value in [-1, 1].

    Raises:
        CuttingError: If the setting does not fit the fragment or shots < 1.
    """
    state = run(fragment_circuit(fragment, config))
    readout = list(fragment.out_wires)
    with_terminal = fragment.terminal_wire is not None
    if with_terminal:
        readout.append(fragment.terminal_wire)
    probs = marginal_probabilities(state, readout) if readout else np.ones(())

    if shots is not None:
        if shots < 1:
            raise CuttingError(f"shots must be at least 1, got {shots}")
        rng = np.random.default_rng(seed)
        counts = rng.multinomial(shots, probs.ravel() / probs.sum())
        probs = (counts / shots).reshape(probs.shape)

    z_positions = [i for i, b in enumerate(config.bases) if b is Basis.Z]
    entries = {}
    for dropped in itertools.product((False, True), repeat=len(z_positions)):
        identity = [False] * len(config.bases)
        for position, is_dropped in zip(z_positions, dropped):
            identity[position] = is_dropped
        paulis = tuple(Pauli.I if is_identity else Pauli(b.value)
                       for b, is_identity in zip(config.bases, identity))
        value = float(np.sum(probs * _sign_tensor(identity, with_terminal)))
        entries[(config.preps, paulis)] = value
    return entries
