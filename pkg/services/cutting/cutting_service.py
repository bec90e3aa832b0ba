"""
Cutting service: partition, evaluate fragments concurrently and reconstruct.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Tuple

from ansatz import AnsatzLayout, build_circuit
from circuits import Circuit, expval_z, run
from core.base.base_service import BaseService
from core.decorators import log_execution, performance_monitor
from core.exceptions import CuttingError
from core.interfaces.configurable import Configurable
from core.interfaces.loggable import Loggable
from .evaluation import FragmentConfig, FragmentResult, enumerate_configs, evaluate_fragment
from .fragments import FragmentSet, partition
from .reconstruction import reconstruct

_module_logger = logging.getLogger(__name__)


@dataclass
class CutRunReport:
    """Outcome of one cut-and-reconstruct run."""
    n: int
    n_V: Optional[int]
    b: Optional[int]
    kind: Optional[str]
    n_fragments: int
    n_configs: int
    d_max: int
    expval_cut: float
    expval_uncut: Optional[float]
    max_abs_error: Optional[float]
    wall_time_ms: float
    shots: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)


class CuttingService(BaseService, Configurable, Loggable):
    """
    Runs circuits through the cut-evaluate-reconstruct pipeline.

    Configuration keys (section ``cutting``): ``max_workers`` for the
    fragment worker pool, ``shots`` (None for exact values), ``seed`` for
    sampling and ``uncut_qubit_limit`` above which no uncut reference is
    simulated. Fragments wider than ``simulator.max_qubits`` are refused.
    """

    service_name = "cutting_service"

    def __init__(self, config=None):
        """
        Initialize the CuttingService.

        Args:
            config: Configuration for the service.
        """
        super().__init__(config)
        self.max_workers = int(self.config.get("cutting.max_workers", 4) or 1)
        self.shots = self.config.get("cutting.shots")
        self.seed = int(self.config.get("cutting.seed", 0) or 0)
        self.uncut_qubit_limit = int(self.config.get("cutting.uncut_qubit_limit", 20))
        self.max_fragment_qubits = int(self.config.get("simulator.max_qubits", 26))
        self.logger.info(
            f"Initialized cutting service (workers={self.max_workers}, shots={self.shots})"
        )

    def _evaluate_one(self, fs: FragmentSet, ordinal: int, config: FragmentConfig):
        fragment = fs.fragments[config.fragment]
        seed = None if self.shots is None else [self.seed, config.fragment, ordinal]
        return config.fragment, evaluate_fragment(fragment, config, self.shots, seed)

    def evaluate_all(self, fs: FragmentSet,
                     configs: Optional[List[FragmentConfig]] = None) -> Dict[int, FragmentResult]:
        """
        Evaluate every fragment setting, in parallel when workers > 1.

        Results are merged in enumeration order, so the outcome does not
        depend on completion order.

        Args:
            fs: Partitioned circuit.
            configs: Settings to run; all of them by default.

        Returns:
            Dict[int, FragmentResult]: Results per fragment id.
        """
        configs = enumerate_configs(fs) if configs is None else configs
        jobs = list(enumerate(configs))

        if self.max_workers > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
                outputs = list(pool.map(lambda job: self._evaluate_one(fs, *job), jobs))
        else:
            outputs = [self._evaluate_one(fs, *job) for job in jobs]

        results = {f.index: FragmentResult(f.index) for f in fs.fragments}
        for fragment_id, entries in outputs:
            results[fragment_id].update(entries)
        self.logger.debug(f"Evaluated {len(jobs)} fragment settings")
        return results

    @log_execution(_module_logger)
    @performance_monitor(_module_logger)
    def cut_and_run(self, circuit: Circuit, params=None) -> Tuple[float, FragmentSet]:
        """
        Reconstruct <Z> of a cut circuit from its fragments.

        Args:
            circuit: Circuit with cut markers and a measured wire.
            params: Optional flat parameter vector.

        Returns:
            Tuple[float, FragmentSet]: Reconstructed value and the partition.

        Raises:
            CuttingError: If the circuit has no measured wire or cannot be cut.
        """
        if circuit.measured_wire is None:
            raise CuttingError("Cut circuits need a measured wire")
        fs = partition(circuit.bind(params))
        widest = max(f.n_qubits for f in fs.fragments)
        if widest > self.max_fragment_qubits:
            raise CuttingError(
                f"Fragment of {widest} qubits exceeds the simulator limit of {self.max_fragment_qubits}",
                details={"fragment_qubits": widest, "max_qubits": self.max_fragment_qubits},
            )
        results = self.evaluate_all(fs)
        return reconstruct(fs, results), fs

    def run_report(self, circuit: Circuit, params=None,
                   layout: Optional[AnsatzLayout] = None) -> CutRunReport:
        """
        Cut-and-run with timing and, for small circuits, an uncut reference.

        Args:
            circuit: Circuit with cut markers.
            params: Optional flat parameter vector.
            layout: Layout the circuit was built from, echoed in the report.

        Returns:
            CutRunReport: Report matching the ``cut-run`` JSON document.
        """
        start = time.perf_counter()
        value, fs = self.cut_and_run(circuit, params)
        wall_ms = (time.perf_counter() - start) * 1000.0

        uncut = None
        if circuit.n_qubits <= self.uncut_qubit_limit:
            uncut = expval_z(run(circuit, params, ignore_cuts=True), circuit.measured_wire)
        else:
            self.logger.info(f"Skipping uncut reference for {circuit.n_qubits} qubits")

        report = CutRunReport(
            n=circuit.n_qubits,
            n_V=layout.n_bond_qubits if layout else None,
            b=layout.block.n_block_qubits if layout else None,
            kind=layout.kind.value if layout else None,
            n_fragments=fs.k,
            n_configs=fs.n_configs,
            d_max=fs.d_max,
            expval_cut=value,
            expval_uncut=uncut,
            max_abs_error=None if uncut is None else abs(value - uncut),
            wall_time_ms=wall_ms,
            shots=self.shots,
        )
        self.logger.info(
            f"Cut run: {report.n_fragments} fragments, {report.n_configs} settings, "
            f"value {value:.6f} in {wall_ms:.1f} ms"
        )
        return report

    def run_layout(self, layout: AnsatzLayout, params=None) -> CutRunReport:
        """Build the circuit of a layout and report on its cut run."""
        return self.run_report(build_circuit(layout, params), None, layout)
