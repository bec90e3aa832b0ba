"""
Benchmark sweeps of cut MPS circuits over bond width, qubit count and
block size.
"""

import csv
import logging
import time
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from ansatz import AnsatzLayout, build_circuit, nearest_valid_mps_qubits, random_params
from core.exceptions import CuttingError, FileError
from .reconstruction import count_configs_mps

logger = logging.getLogger(__name__)

SWEEPS = ("bond", "qubits", "block")
# Block width of each sweep when none is given
DEFAULT_BLOCK_QUBITS = {"bond": 4, "qubits": 5}
CSV_COLUMNS = ("n", "n_V", "b", "n_configs", "ms")


@dataclass
class BenchPoint:
    """One benchmark row; ``requested_n`` is the size asked for before snapping."""
    n: int
    n_V: int
    b: int
    requested_n: int
    n_configs: int = 0
    ms: Optional[float] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _point(n: int, n_v: int, b: int) -> BenchPoint:
    # at least two blocks so every circuit has a cut
    snapped = nearest_valid_mps_qubits(max(n, 2 * b - n_v), b, n_v)
    return BenchPoint(n=snapped, n_V=n_v, b=b, requested_n=n,
                      n_configs=count_configs_mps(snapped, n_v, b))


def sweep_points(sweep: str, n: int = 10, n_v: int = 1, b: Optional[int] = None,
                 n_v_values: Sequence[int] = (1, 2, 3),
                 n_values: Sequence[int] = (9, 13, 17, 21, 25),
                 b_values: Sequence[int] = (2, 3, 4, 5, 6)) -> List[BenchPoint]:
    """
    Points of a sweep; sizes an MPS cannot cover are snapped upwards.

    Args:
        sweep: "bond" varies n_V at fixed n and b, "qubits" varies n at
            fixed n_V and b, "block" varies b at fixed n and n_V.
        b: Block width of bond and qubit sweeps; 4 for bond sweeps and 5
            for qubit sweeps when None, so n = 9, 13, ..., 25 tile exactly
            at n_V = 1.

    Raises:
        CuttingError: On an unknown sweep or impossible sizes.
    """
    if b is None:
        b = DEFAULT_BLOCK_QUBITS.get(sweep, 4)
    if sweep == "bond":
        return [_point(n, v, b) for v in n_v_values]
    if sweep == "qubits":
        return [_point(size, n_v, b) for size in n_values]
    if sweep == "block":
        return [_point(n, n_v, size) for size in b_values]
    raise CuttingError(f"Unknown sweep {sweep!r}; choose from {SWEEPS}")


def run_benchmark(points: Iterable[BenchPoint], service=None, seed: int = 0,
                  timed: bool = True) -> List[BenchPoint]:
    """
    Time a cut-and-reconstruct run per point.

    Args:
        points: Sweep points.
        service: CuttingService executing the runs; required when timed.
        seed: Seed of the random parameters.
        timed: When False only the counts are filled in.

    Raises:
        CuttingError: If an enumerated count disagrees with the formula.
    """
    rows = []
    for point in points:
        if timed:
            layout = AnsatzLayout.mps(point.n, block_qubits=point.b, n_bond_qubits=point.n_V)
            circuit = build_circuit(layout, random_params(layout, seed))
            start = time.perf_counter()
            _, fs = service.cut_and_run(circuit)
            point.ms = (time.perf_counter() - start) * 1000.0
            if fs.n_configs != point.n_configs:
                raise CuttingError(
                    f"Enumerated {fs.n_configs} settings, formula gives {point.n_configs}",
                    details=point.to_dict(),
                )
        logger.debug("Bench point %s", point)
        rows.append(point)
    return rows


def write_csv(rows: Sequence[BenchPoint], path: Union[str, Path]) -> Path:
    """Write rows with columns n, n_V, b, n_configs, ms (blank when untimed)."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for row in rows:
                ms = "" if row.ms is None else f"{row.ms:.3f}"
                writer.writerow((row.n, row.n_V, row.b, row.n_configs, ms))
    except OSError as e:
        raise FileError(path, f"cannot write benchmark CSV: {e}")
    return path
