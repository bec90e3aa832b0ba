"""
Gate definitions and their unitary matrices.

Conventions:
    * ``Rot(omega, theta, phi)`` applies RZ(omega), then RY(theta), then
      RX(phi), i.e. its matrix is RX(phi) @ RY(theta) @ RZ(omega).
    * Multi-qubit matrices use the first listed wire as the most
      significant bit, the same ordering as statevector amplitudes.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from core.exceptions import CircuitError

UNITARY_ATOL = 1e-12
MAX_FIXED_UNITARY_QUBITS = 6

_SQRT1_2 = 1.0 / np.sqrt(2.0)

IDENTITY = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
HADAMARD = _SQRT1_2 * np.array([[1, 1], [1, -1]], dtype=complex)
S_GATE = np.array([[1, 0], [0, 1j]], dtype=complex)
CNOT_MATRIX = np.array(
    [[1, 0, 0, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1],
     [0, 0, 1, 0]],
    dtype=complex,
)


class GateKind(Enum):
    ROT = "Rot"
    CNOT = "CNOT"
    FIXED_UNITARY = "FixedUnitary"
    PREP_STATE = "PrepState"
    BASIS_CHANGE = "BasisChange"


class PrepState(Enum):
    """Single-qubit states prepared on an incoming cut wire."""
    Z0 = "Z0"
    Z1 = "Z1"
    XPLUS = "Xplus"
    YPLUS = "Yplus"


class Basis(Enum):
    """Measurement basis of an outgoing cut wire."""
    X = "X"
    Y = "Y"
    Z = "Z"


# Unitaries taking |0> to the prepared state
PREP_UNITARIES = {
    PrepState.Z0: IDENTITY,
    PrepState.Z1: PAULI_X,
    PrepState.XPLUS: HADAMARD,
    PrepState.YPLUS: S_GATE @ HADAMARD,
}

# Rotations after which a Z measurement reads out the given basis
BASIS_CHANGE_UNITARIES = {
    Basis.X: HADAMARD,
    Basis.Y: HADAMARD @ S_GATE.conj().T,
    Basis.Z: IDENTITY,
}


def _rx(alpha: float) -> np.ndarray:
    c, s = np.cos(alpha / 2), np.sin(alpha / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def _ry(alpha: float) -> np.ndarray:
    c, s = np.cos(alpha / 2), np.sin(alpha / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _rz(alpha: float) -> np.ndarray:
    return np.array([[np.exp(-0.5j * alpha), 0], [0, np.exp(0.5j * alpha)]], dtype=complex)


def rot_unitary(omega: float, theta: float, phi: float) -> np.ndarray:
    """
    Matrix of the general Bloch rotation Rot(omega, theta, phi).

    Args:
        omega: Angle about Z, applied first.
        theta: Angle about Y, applied second.
        phi: Angle about X, applied last.

    Returns:
        np.ndarray: 2x2 unitary RX(phi) @ RY(theta) @ RZ(omega).
    """
    return _rx(phi) @ _ry(theta) @ _rz(omega)


def rot_unitaries(angles: np.ndarray) -> np.ndarray:
    """
    Vectorized ``rot_unitary`` over an array of (omega, theta, phi) rows.

    Args:
        angles: Array of shape (..., 3).

    Returns:
        np.ndarray: Array of shape (..., 2, 2).
    """
    angles = np.asarray(angles, dtype=float)
    omega, theta, phi = angles[..., 0], angles[..., 1], angles[..., 2]

    # RY(theta) @ RZ(omega)
    ct, st = np.cos(theta / 2), np.sin(theta / 2)
    ez_minus, ez_plus = np.exp(-0.5j * omega), np.exp(0.5j * omega)
    yz = np.empty(angles.shape[:-1] + (2, 2), dtype=complex)
    yz[..., 0, 0] = ct * ez_minus
    yz[..., 0, 1] = -st * ez_plus
    yz[..., 1, 0] = st * ez_minus
    yz[..., 1, 1] = ct * ez_plus

    cp, sp = np.cos(phi / 2), np.sin(phi / 2)
    rx = np.empty_like(yz)
    rx[..., 0, 0] = cp
    rx[..., 0, 1] = -1j * sp
    rx[..., 1, 0] = -1j * sp
    rx[..., 1, 1] = cp
    return rx @ yz


def is_unitary(matrix: np.ndarray, atol: float = UNITARY_ATOL) -> bool:
    """Check ``max|U^dagger U - I| <= atol``."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        return False
    deviation = matrix.conj().T @ matrix - np.eye(matrix.shape[0])
    return float(np.max(np.abs(deviation))) <= atol


@dataclass(frozen=True)
class Gate:
    """
    One circuit operation.

    Build gates with the ``rot``, ``cnot``, ``unitary``, ``prep`` and
    ``basis_change`` constructors rather than directly.

    Attributes:
        kind: Gate family.
        wires: Ordered qubit indices; for CNOT (control, target).
        params: (omega, theta, phi) for Rot gates, empty otherwise.
        param_index: Offset of this gate's three angles in a flat parameter
            vector, or None for a gate whose angles are fixed.
        matrix: Dense matrix of a FixedUnitary gate.
        prep: Prepared state of a PrepState gate.
        basis: Target basis of a BasisChange gate.
    """
    kind: GateKind
    wires: Tuple[int, ...]
    params: Tuple[float, ...] = ()
    param_index: Optional[int] = None
    matrix: Optional[np.ndarray] = field(default=None, compare=False, repr=False)
    prep: Optional[PrepState] = None
    basis: Optional[Basis] = None

    def __post_init__(self):
        wires = tuple(int(w) for w in self.wires)
        object.__setattr__(self, 'wires', wires)

        if len(set(wires)) != len(wires):
            raise CircuitError(f"{self.kind.value} gate has repeated wires {wires}")
        if any(w < 0 for w in wires):
            raise CircuitError(f"{self.kind.value} gate has negative wire in {wires}")

        expected = {
            GateKind.ROT: 1,
            GateKind.CNOT: 2,
            GateKind.PREP_STATE: 1,
            GateKind.BASIS_CHANGE: 1,
        }.get(self.kind)
        if expected is not None and len(wires) != expected:
            raise CircuitError(f"{self.kind.value} gate acts on {expected} wire(s), got {len(wires)}")

        if self.kind is GateKind.ROT:
            if len(self.params) != 3:
                raise CircuitError(f"Rot gate needs 3 angles, got {len(self.params)}")
            object.__setattr__(self, 'params', tuple(float(p) for p in self.params))
        elif self.kind is GateKind.FIXED_UNITARY:
            self._check_fixed_unitary()
        elif self.kind is GateKind.PREP_STATE and not isinstance(self.prep, PrepState):
            raise CircuitError("PrepState gate needs a PrepState value")
        elif self.kind is GateKind.BASIS_CHANGE and not isinstance(self.basis, Basis):
            raise CircuitError("BasisChange gate needs a Basis value")

    def _check_fixed_unitary(self):
        k = len(self.wires)
        if k < 1 or k > MAX_FIXED_UNITARY_QUBITS:
            raise CircuitError(
                f"FixedUnitary supports 1 to {MAX_FIXED_UNITARY_QUBITS} qubits, got {k}"
            )
        matrix = np.asarray(self.matrix, dtype=complex)
        if matrix.shape != (2 ** k, 2 ** k):
            raise CircuitError(f"FixedUnitary on {k} wires needs a {2 ** k}x{2 ** k} matrix, got {matrix.shape}")
        if not is_unitary(matrix):
            raise CircuitError("FixedUnitary matrix is not unitary within 1e-12")
        matrix = matrix.copy()
        matrix.setflags(write=False)
        object.__setattr__(self, 'matrix', matrix)

    @classmethod
    def rot(cls, wire: int, omega: float = 0.0, theta: float = 0.0, phi: float = 0.0,
            param_index: Optional[int] = None) -> "Gate":
        return cls(GateKind.ROT, (wire,), (omega, theta, phi), param_index=param_index)

    @classmethod
    def cnot(cls, control: int, target: int) -> "Gate":
        return cls(GateKind.CNOT, (control, target))

    @classmethod
    def unitary(cls, matrix: np.ndarray, wires) -> "Gate":
        return cls(GateKind.FIXED_UNITARY, tuple(wires), matrix=matrix)

    @classmethod
    def prep_state(cls, which: PrepState, wire: int) -> "Gate":
        return cls(GateKind.PREP_STATE, (wire,), prep=which)

    @classmethod
    def basis_change(cls, basis: Basis, wire: int) -> "Gate":
        return cls(GateKind.BASIS_CHANGE, (wire,), basis=basis)

    def with_params(self, params) -> "Gate":
        """Copy of a Rot gate carrying new angles."""
        return Gate(GateKind.ROT, self.wires, tuple(params), param_index=self.param_index)

    def with_wires(self, wires) -> "Gate":
        """Copy of this gate acting on different wires."""
        return Gate(self.kind, tuple(wires), self.params, self.param_index, self.matrix, self.prep, self.basis)

    def unitary_matrix(self) -> np.ndarray:
        """
        Dense matrix of this gate.

        Returns:
            np.ndarray: 2^k x 2^k complex matrix.
        """
        if self.kind is GateKind.ROT:
            return rot_unitary(*self.params)
        if self.kind is GateKind.CNOT:
            return CNOT_MATRIX
        if self.kind is GateKind.FIXED_UNITARY:
            return self.matrix
        if self.kind is GateKind.PREP_STATE:
            return PREP_UNITARIES[self.prep]
        return BASIS_CHANGE_UNITARIES[self.basis]

    def __str__(self):
        wires = ",".join(str(w) for w in self.wires)
        if self.kind is GateKind.ROT:
            angles = ",".join(f"{p:.4g}" for p in self.params)
            return f"Rot({angles})[{wires}]"
        if self.kind is GateKind.PREP_STATE:
            return f"PrepState({self.prep.value})[{wires}]"
        if self.kind is GateKind.BASIS_CHANGE:
            return f"BasisChange({self.basis.value})[{wires}]"
        return f"{self.kind.value}[{wires}]"
