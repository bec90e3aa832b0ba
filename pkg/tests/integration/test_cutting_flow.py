import numpy as np
import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

MPS_SHAPES = st.sampled_from([(3, 2, 1), (4, 2, 1), (6, 2, 1), (8, 2, 1), (5, 3, 1), (7, 3, 1),
                              (6, 4, 2), (8, 4, 2)])
# (n, n_V) with b = 2 n_V, n in {4, 6, 8, 12}
ACCEPTANCE_MPS = st.sampled_from([(4, 1), (6, 1), (8, 1), (12, 1), (6, 2), (8, 2), (12, 2)])
ACCEPTANCE_TTN = st.sampled_from([(4, 1), (8, 1), (8, 2)])


class TestCuttingFlow:
    """Cut evaluation against uncut simulation on random ansatz circuits."""

    @settings(max_examples=12, deadline=None)
    @given(shape=MPS_SHAPES, n_layers=st.integers(1, 2), seed=st.integers(0, 10_000))
    def test_mps_matches_uncut(self, shape, n_layers, seed):
        """Reconstructed <Z> equals the uncut value for random MPS circuits."""
        from ansatz import AnsatzLayout, random_params
        from services.cutting import CuttingService, count_configs_mps

        n, b, n_v = shape
        layout = AnsatzLayout.mps(n, block_qubits=b, n_bond_qubits=n_v, n_layers=n_layers)
        report = CuttingService({"cutting": {"max_workers": 2}}).run_layout(
            layout, random_params(layout, seed=seed))
        assert report.max_abs_error < 1e-8
        assert report.n_configs == count_configs_mps(n, n_v, b)

    @settings(max_examples=50, deadline=None)
    @given(shape=ACCEPTANCE_MPS, seed=st.integers(0, 10_000))
    @example(shape=(12, 2), seed=0)
    def test_two_layer_mps_matches_uncut(self, shape, seed):
        """Two-layer MPS circuits with one or two bond qubits reconstruct to 1e-8."""
        from ansatz import AnsatzLayout, random_params
        from services.cutting import CuttingService, count_configs_mps

        n, n_v = shape
        layout = AnsatzLayout.mps(n, block_qubits=2 * n_v, n_bond_qubits=n_v, n_layers=2)
        report = CuttingService({"cutting": {"max_workers": 2}}).run_layout(
            layout, random_params(layout, seed=seed))
        assert abs(report.expval_cut - report.expval_uncut) <= 1e-8
        assert report.n_configs == count_configs_mps(n, n_v)

    @settings(max_examples=50, deadline=None)
    @given(shape=ACCEPTANCE_TTN, seed=st.integers(0, 10_000))
    @example(shape=(8, 2), seed=0)
    def test_two_layer_ttn_matches_uncut(self, shape, seed):
        """Two-layer TTN circuits, including 4-qubit blocks, reconstruct to 1e-8."""
        from ansatz import AnsatzLayout, random_params
        from services.cutting import CuttingService, count_configs_ttn

        n, n_v = shape
        layout = AnsatzLayout.ttn(n, block_qubits=2 * n_v, n_layers=2)
        report = CuttingService({"cutting": {"max_workers": 2}}).run_layout(
            layout, random_params(layout, seed=seed))
        assert abs(report.expval_cut - report.expval_uncut) <= 1e-8
        assert report.n_configs == count_configs_ttn(n, n_v)

    def test_shared_weights(self):
        """Weight sharing changes the parameter count but not the cut result."""
        from ansatz import AnsatzLayout, random_params
        from services.cutting import CuttingService

        layout = AnsatzLayout.mps(6, share_weights=True)
        report = CuttingService({"cutting": {"max_workers": 1}}).run_layout(
            layout, random_params(layout, seed=1))
        assert layout.n_weight_sets == 1
        assert report.max_abs_error < 1e-8

    @pytest.mark.slow
    def test_bond_sweep_timing(self):
        """Timed bond sweeps agree with the closed-form counts and slow down with n_V."""
        from services.cutting import CuttingService, count_configs_mps, run_benchmark, sweep_points

        service = CuttingService({"cutting": {"max_workers": 1}})
        rows = run_benchmark(sweep_points("bond", n=10, b=4, n_v_values=(1, 2, 3)), service)
        assert [r.n for r in rows] == [10, 10, 10]
        assert [r.n_configs for r in rows] == [count_configs_mps(r.n, r.n_V, r.b) for r in rows]
        times = [r.ms for r in rows]
        assert all(t > 0.0 for t in times)
        assert np.all(np.diff(times) > 0.0), times
