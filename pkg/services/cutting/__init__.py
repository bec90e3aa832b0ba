"""
Wire cutting: fragments, fragment settings, reconstruction and cost formulas.
"""

from .fragments import CutEdge, Fragment, FragmentSet, gate_dag, partition
from .evaluation import (
    BASIS_ORDER,
    CHANGE_OF_BASIS,
    PAULI_ORDER,
    PREP_ORDER,
    FragmentConfig,
    FragmentResult,
    Pauli,
    enumerate_configs,
    evaluate_fragment,
    fragment_circuit,
    fragment_configs
)
from .reconstruction import (
    count_configs_mps,
    count_configs_ttn,
    estimate_cost,
    fragment_tensors,
    reconstruct,
    summarize
)
from .cutting_service import CutRunReport, CuttingService
from .benchmark import CSV_COLUMNS, SWEEPS, BenchPoint, run_benchmark, sweep_points, write_csv

__all__ = [
    'CutEdge', 'Fragment', 'FragmentSet', 'gate_dag', 'partition',
    'BASIS_ORDER', 'CHANGE_OF_BASIS', 'PAULI_ORDER', 'PREP_ORDER', 'FragmentConfig', 'FragmentResult',
    'Pauli', 'enumerate_configs', 'evaluate_fragment', 'fragment_circuit', 'fragment_configs',
    'count_configs_mps', 'count_configs_ttn', 'estimate_cost', 'fragment_tensors', 'reconstruct',
    'summarize',
    'CutRunReport', 'CuttingService',
    'CSV_COLUMNS', 'SWEEPS', 'BenchPoint', 'run_benchmark', 'sweep_points', 'write_csv'
]
