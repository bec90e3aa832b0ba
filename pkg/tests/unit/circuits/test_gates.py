import numpy as np
import pytest


class TestGates:
    """Test suite for gate definitions and matrices."""

    def test_rot_applies_z_then_y_then_x(self):
        """Rot(omega, theta, phi) equals RX(phi) @ RY(theta) @ RZ(omega)."""
        from circuits.gates import _rx, _ry, _rz, rot_unitary

        omega, theta, phi = 0.3, 1.1, -0.7
        expected = _rx(phi) @ _ry(theta) @ _rz(omega)
        assert np.allclose(rot_unitary(omega, theta, phi), expected)

    def test_rot_pi_over_two_makes_plus_state(self):
        """RY(pi/2) maps |0> to (|0> + |1>)/sqrt(2)."""
        from circuits import rot_unitary

        state = rot_unitary(0.0, np.pi / 2, 0.0) @ np.array([1, 0])
        assert np.allclose(state, np.array([1, 1]) / np.sqrt(2))

    def test_vectorized_rot_matches_scalar(self):
        """rot_unitaries agrees with rot_unitary row by row."""
        from circuits import rot_unitaries, rot_unitary

        angles = np.random.default_rng(3).uniform(-np.pi, np.pi, size=(5, 3))
        batch = rot_unitaries(angles)
        for row, matrix in zip(angles, batch):
            assert np.allclose(matrix, rot_unitary(*row))

    def test_is_unitary(self):
        """Unitarity check accepts gates and rejects scaled matrices."""
        from circuits import is_unitary
        from circuits.gates import CNOT_MATRIX, HADAMARD

        assert is_unitary(HADAMARD)
        assert is_unitary(CNOT_MATRIX)
        assert not is_unitary(2 * HADAMARD)
        assert not is_unitary(np.ones((2, 3)))

    def test_gate_wire_checks(self):
        """Repeated, negative and miscounted wires are rejected."""
        from circuits import Gate, GateKind
        from core.exceptions import CircuitError

        with pytest.raises(CircuitError):
            Gate.cnot(1, 1)
        with pytest.raises(CircuitError):
            Gate.rot(-1)
        with pytest.raises(CircuitError):
            Gate(GateKind.CNOT, (0,))
        with pytest.raises(CircuitError):
            Gate(GateKind.ROT, (0,), (1.0, 2.0))

    def test_fixed_unitary_checks(self):
        """FixedUnitary validates its shape, unitarity and width."""
        from circuits import Gate
        from core.exceptions import CircuitError

        with pytest.raises(CircuitError):
            Gate.unitary(np.eye(2), [0, 1])
        with pytest.raises(CircuitError):
            Gate.unitary(np.array([[1, 1], [0, 1]]), [0])
        with pytest.raises(CircuitError):
            Gate.unitary(np.eye(2 ** 7), list(range(7)))

        gate = Gate.unitary(np.eye(4), [2, 0])
        assert gate.wires == (2, 0)
        assert not gate.matrix.flags.writeable

    def test_prep_states(self):
        """Preparation unitaries produce the four cut-wire input states."""
        from circuits import Gate, PrepState

        zero = np.array([1, 0])
        expected = {
            PrepState.Z0: [1, 0],
            PrepState.Z1: [0, 1],
            PrepState.XPLUS: [1 / np.sqrt(2), 1 / np.sqrt(2)],
            PrepState.YPLUS: [1 / np.sqrt(2), 1j / np.sqrt(2)],
        }
        for which, amplitudes in expected.items():
            state = Gate.prep_state(which, 0).unitary_matrix() @ zero
            assert np.allclose(state, amplitudes), which

    def test_basis_change_rotates_eigenstates_to_zero(self):
        """The +1 eigenstate of each basis is read out as |0>."""
        from circuits import Basis, Gate

        plus_states = {
            Basis.X: np.array([1, 1]) / np.sqrt(2),
            Basis.Y: np.array([1, 1j]) / np.sqrt(2),
            Basis.Z: np.array([1, 0]),
        }
        for basis, state in plus_states.items():
            out = Gate.basis_change(basis, 0).unitary_matrix() @ state
            assert abs(out[0]) == pytest.approx(1.0), basis

    def test_with_params_keeps_index(self):
        """with_params swaps angles and keeps the parameter offset."""
        from circuits import Gate

        gate = Gate.rot(2, param_index=6).with_params([0.1, 0.2, 0.3])
        assert gate.params == (0.1, 0.2, 0.3)
        assert gate.param_index == 6
        assert str(gate).startswith("Rot(")
