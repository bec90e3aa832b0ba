import numpy as np
import pytest


class TestBuilders:
    """Test suite for meta-ansatz circuit builders."""

    def test_mps_circuit(self):
        """The MPS circuit carries one cut per bond wire."""
        from ansatz import AnsatzLayout, build_mps
        from circuits import GateKind

        layout = AnsatzLayout.mps(4)
        circuit = build_mps(layout)
        assert circuit.n_qubits == 4
        assert circuit.measured_wire == 3
        assert circuit.cut_count == 2
        assert circuit.n_params == layout.n_params
        assert circuit.count(GateKind.CNOT) == 3 * 2

    def test_ttn_circuit(self):
        """A 4-qubit TTN cuts both passed wires and measures wire 2."""
        from ansatz import AnsatzLayout, build_ttn

        circuit = build_ttn(AnsatzLayout.ttn(4))
        assert circuit.measured_wire == 2
        assert sorted(w for w, _ in circuit.cut_markers) == [0, 2]

    def test_cut_positions_follow_blocks(self):
        """Bond cuts sit right after the block that passes them on."""
        from ansatz import AnsatzLayout, build_circuit

        circuit = build_circuit(AnsatzLayout.mps(4))
        # each block is 2 Rot + 2 CNOT gates
        assert circuit.cut_markers == [(1, 3), (2, 7)]

    def test_kind_mismatch(self):
        """Builders refuse layouts of the other kind."""
        from ansatz import AnsatzLayout, build_mps, build_ttn
        from core.exceptions import AnsatzError

        with pytest.raises(AnsatzError):
            build_mps(AnsatzLayout.ttn(4))
        with pytest.raises(AnsatzError):
            build_ttn(AnsatzLayout.mps(4))

    def test_params_are_bound(self):
        """Angles given to the builder land in the Rot gates."""
        from ansatz import AnsatzLayout, build_circuit
        from circuits import GateKind

        layout = AnsatzLayout.mps(3)
        values = np.arange(layout.n_params, dtype=float)
        circuit = build_circuit(layout, values)
        first = next(g for g in circuit.gates if g.kind is GateKind.ROT)
        assert first.params == (0.0, 1.0, 2.0)

    def test_shared_weights(self):
        """With shared weights every block uses the same angles."""
        from ansatz import AnsatzLayout, build_circuit, random_params
        from circuits import GateKind

        layout = AnsatzLayout.mps(4, share_weights=True)
        circuit = build_circuit(layout, random_params(layout, seed=3))
        rots = [g for g in circuit.gates if g.kind is GateKind.ROT]
        assert rots[0].params == rots[2].params == rots[4].params
        assert {g.param_index for g in rots} == {0, 3}

    def test_bound_circuit_matches_trainable_binding(self):
        """Building with angles equals binding them into the template."""
        from ansatz import AnsatzLayout, build_circuit, random_params
        from circuits import expval_z, run

        layout = AnsatzLayout.ttn(4, n_layers=2)
        params = random_params(layout, seed=9)
        direct = run(build_circuit(layout, params), ignore_cuts=True)
        template = run(build_circuit(layout), params.values, ignore_cuts=True)
        assert expval_z(direct, 2) == pytest.approx(expval_z(template, 2), abs=1e-12)
