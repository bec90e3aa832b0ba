import numpy as np
import pytest


class TestFragmentEvaluation:
    """Test suite for fragment settings and their measured values."""

    @pytest.fixture
    def bell_fragments(self):
        """Partition of the cut Bell circuit."""
        from circuits import Circuit, Gate
        from services.cutting import partition

        circuit = Circuit(2, [Gate.rot(0, theta=np.pi / 2), Gate.cnot(0, 1)], [(0, 0)], measured_wire=1)
        return partition(circuit)

    def test_settings_per_fragment(self, bell_fragments):
        """Outgoing cuts get 3 bases and incoming cuts 4 preparations."""
        from services.cutting import BASIS_ORDER, PREP_ORDER, enumerate_configs, fragment_configs

        source, sink = bell_fragments.fragments
        assert [c.bases for c in fragment_configs(source)] == [(b,) for b in BASIS_ORDER]
        assert [c.preps for c in fragment_configs(sink)] == [(p,) for p in PREP_ORDER]
        assert len(enumerate_configs(bell_fragments)) == 7

    def test_fragment_circuit_wraps_body(self, bell_fragments):
        """Preparations come first and basis changes last."""
        from circuits import Basis, GateKind, PrepState
        from services.cutting import FragmentConfig, fragment_circuit

        source, sink = bell_fragments.fragments
        circuit = fragment_circuit(source, FragmentConfig(0, (), (Basis.X,)))
        assert circuit.gates[-1].kind is GateKind.BASIS_CHANGE

        circuit = fragment_circuit(sink, FragmentConfig(1, (PrepState.XPLUS,), ()))
        assert circuit.gates[0].kind is GateKind.PREP_STATE
        assert circuit.measured_wire == 1

    def test_mismatched_setting(self, bell_fragments):
        """A setting for another fragment shape raises CuttingError."""
        from core.exceptions import CuttingError
        from services.cutting import FragmentConfig, fragment_circuit

        with pytest.raises(CuttingError):
            fragment_circuit(bell_fragments.fragments[0], FragmentConfig(0))

    def test_z_basis_yields_identity_entry(self, bell_fragments):
        """Measuring in Z also gives the identity entry, which is 1."""
        from circuits import Basis
        from services.cutting import FragmentConfig, Pauli, evaluate_fragment

        source = bell_fragments.fragments[0]
        entries = evaluate_fragment(source, FragmentConfig(0, (), (Basis.Z,)))
        assert entries[((), (Pauli.I,))] == pytest.approx(1.0)
        assert entries[((), (Pauli.Z,))] == pytest.approx(0.0, abs=1e-12)

        entries = evaluate_fragment(source, FragmentConfig(0, (), (Basis.X,)))
        assert entries[((), (Pauli.X,))] == pytest.approx(1.0)

    def test_sampled_values_are_seeded(self, bell_fragments):
        """Shot estimates repeat for the same seed."""
        from circuits import Basis
        from core.exceptions import CuttingError
        from services.cutting import FragmentConfig, evaluate_fragment

        source = bell_fragments.fragments[0]
        config = FragmentConfig(0, (), (Basis.Z,))
        assert evaluate_fragment(source, config, 100, 5) == evaluate_fragment(source, config, 100, 5)
        with pytest.raises(CuttingError):
            evaluate_fragment(source, config, 0)

    def test_missing_result(self, bell_fragments):
        """Building a tensor with a missing setting raises CuttingError."""
        from core.exceptions import CuttingError
        from services.cutting import FragmentResult

        with pytest.raises(CuttingError):
            FragmentResult(0).to_tensor(bell_fragments.fragments[0])

    def test_change_of_basis(self):
        """Preparation rows map onto the Pauli basis I, X, Y, Z."""
        from services.cutting import CHANGE_OF_BASIS

        # a fragment that ignores its input has only an identity component
        assert CHANGE_OF_BASIS.shape == (4, 4)
        assert CHANGE_OF_BASIS @ np.ones(4) == pytest.approx(np.array([2.0, 0.0, 0.0, 0.0]))
