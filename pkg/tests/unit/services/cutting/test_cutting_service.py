import pytest


class TestCuttingService:
    """Test suite for CuttingService."""

    @pytest.fixture
    def layout(self):
        """Small MPS layout."""
        from ansatz import AnsatzLayout

        return AnsatzLayout.mps(4, n_layers=2)

    def test_reads_config(self):
        """Settings come from the cutting section."""
        from services.cutting import CuttingService

        service = CuttingService({"cutting": {"max_workers": 3, "shots": 500, "seed": 7,
                                              "uncut_qubit_limit": 12}})
        assert service.max_workers == 3
        assert service.shots == 500
        assert service.seed == 7
        assert service.uncut_qubit_limit == 12
        assert service.service_name == "cutting_service"

    def test_parallel_matches_serial(self, layout):
        """The worker pool gives the same value as a single worker."""
        from ansatz import random_params
        from services.cutting import CuttingService

        params = random_params(layout, seed=2)
        serial = CuttingService({"cutting": {"max_workers": 1}}).run_layout(layout, params)
        parallel = CuttingService({"cutting": {"max_workers": 4}}).run_layout(layout, params)
        assert parallel.expval_cut == pytest.approx(serial.expval_cut, abs=1e-12)

    def test_report_fields(self, layout):
        """Reports echo the layout and compare against the uncut value."""
        from ansatz import random_params
        from services.cutting import CuttingService

        report = CuttingService({"cutting": {"max_workers": 1}}).run_layout(
            layout, random_params(layout, seed=5))
        assert (report.n, report.n_V, report.b, report.kind) == (4, 1, 2, "MPS")
        assert report.n_fragments == 3
        assert report.n_configs == 19
        assert report.d_max == 1
        assert report.max_abs_error < 1e-8
        assert report.wall_time_ms >= 0.0
        assert report.shots is None
        assert set(report.to_dict()) >= {"expval_cut", "expval_uncut", "max_abs_error"}

    def test_skips_uncut_above_limit(self, layout):
        """No uncut reference is simulated above the qubit limit."""
        from services.cutting import CuttingService

        service = CuttingService({"cutting": {"max_workers": 1, "uncut_qubit_limit": 3}})
        report = service.run_layout(layout)
        assert report.expval_uncut is None
        assert report.max_abs_error is None

    def test_requires_measured_wire(self):
        """Circuits without a measured wire are rejected."""
        from circuits import Circuit, Gate
        from core.exceptions import CuttingError
        from services.cutting import CuttingService

        circuit = Circuit(2, [Gate.rot(0), Gate.cnot(0, 1)], [(0, 0)])
        with pytest.raises(CuttingError):
            CuttingService({"cutting": {"max_workers": 1}}).cut_and_run(circuit)

    def test_template_params(self, layout):
        """Parameters passed separately are bound before cutting."""
        from ansatz import build_circuit, random_params
        from services.cutting import CuttingService

        params = random_params(layout, seed=11)
        service = CuttingService({"cutting": {"max_workers": 1}})
        bound, _ = service.cut_and_run(build_circuit(layout, params))
        template, _ = service.cut_and_run(build_circuit(layout), params.values)
        assert template == pytest.approx(bound, abs=1e-12)

    def test_shots_are_deterministic(self, layout):
        """Sampled runs repeat with the seed and land near the exact value."""
        from ansatz import random_params
        from services.cutting import CuttingService

        params = random_params(layout, seed=3)
        exact = CuttingService({"cutting": {"max_workers": 1}}).run_layout(layout, params)
        sampled = CuttingService({"cutting": {"max_workers": 2, "shots": 20000, "seed": 1}})
        first = sampled.run_layout(layout, params)
        second = sampled.run_layout(layout, params)
        assert first.expval_cut == second.expval_cut
        assert first.shots == 20000
        assert first.expval_cut == pytest.approx(exact.expval_cut, abs=0.15)

    def test_fragment_width_limit(self, layout):
        """Fragments wider than the simulator limit are refused."""
        from core.exceptions import CuttingError
        from services.cutting import CuttingService

        service = CuttingService({"cutting": {"max_workers": 1}, "simulator": {"max_qubits": 1}})
        with pytest.raises(CuttingError) as excinfo:
            service.run_layout(layout)
        assert excinfo.value.details == {"fragment_qubits": 2, "max_qubits": 1}
