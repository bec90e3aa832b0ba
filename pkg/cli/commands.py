"""
Subcommand implementations. Each returns the JSON document it reports.
"""

import argparse
import json
from pathlib import Path
from typing import Any, Dict, Optional

from ansatz import AnsatzLayout, random_params
from core.config import ConfigManager
from core.exceptions import FileError, ValidationError
from services.cutting import CuttingService, run_benchmark, sweep_points, write_csv
from services.detection import DetectionService, generate_bas, read_image_dir, report_to_dict, write_image_dir
from services.training import TrainingService
from tensornet import IN, OUT, format_layout_text, merge_leading_blocks, parse_graph_text, tn_to_circuit_layout
from utils.console import ConsoleService


def int_list(text: str):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def layout_from_args(args: argparse.Namespace) -> AnsatzLayout:
    """
    MPS or TTN layout from --layout, --n, --nv, --block-qubits, --layers.

    Blocks default to b = 2 n_V.

    Raises:
        AnsatzError: On sizes the layout cannot cover.
    """
    b = args.block_qubits or 2 * args.nv
    common = dict(block_qubits=b, n_layers=args.layers, entangling_range=args.entangling_range,
                  share_weights=args.share_weights)
    if args.layout == "ttn":
        return AnsatzLayout.ttn(args.n, **common)
    return AnsatzLayout.mps(args.n, n_bond_qubits=args.nv, **common)


def cmd_bas_gen(args, config: ConfigManager, console: ConsoleService) -> Dict[str, Any]:
    dataset = generate_bas(args.size, args.seed)
    manifest = write_image_dir(dataset, args.size, args.out, binary=not args.ascii)
    console.print(f"Wrote {len(dataset)} images to {args.out}", style="green")
    return {
        "size": args.size,
        "seed": args.seed,
        "n_images": len(dataset),
        "n_train": len(dataset.train),
        "n_test": len(dataset.test),
        "manifest": str(manifest),
    }


def cmd_train(args, config: ConfigManager, console: ConsoleService) -> Dict[str, Any]:
    layout = layout_from_args(args)
    if args.data:
        dataset = read_image_dir(args.data, seed=args.seed)
    else:
        dataset = generate_bas(args.bas_size, args.seed)

    service = TrainingService(config)
    cfg = service.training_config(
        max_iters=args.iters, seed=args.seed, shots=args.shots, loss_kind=args.loss,
        stop_at_accuracy=args.stop_at, bias=args.bias,
    )
    cfg.validate_or_raise()
    metrics = Path(args.metrics) if args.metrics else Path(args.out).with_suffix(".metrics.jsonl")

    with console.training_progress(cfg.max_iters, f"Training {layout.kind.value}") as progress:
        model = service.fit(layout, dataset, cfg, metrics_path=metrics, callback=progress)
    service.save(model, args.out)

    summary = service.summarize(model, dataset)
    summary.update({"seed": cfg.seed, "checkpoint": str(args.out), "metrics": str(metrics)})
    return summary


def cmd_cut_run(args, config: ConfigManager, console: ConsoleService) -> Dict[str, Any]:
    layout = layout_from_args(args)
    if args.shots is not None:
        config.set("cutting.shots", args.shots)
    config.set("cutting.seed", args.seed)
    if args.workers is not None:
        config.set("cutting.max_workers", args.workers)

    service = CuttingService(config)
    report = service.run_layout(layout, random_params(layout, args.seed)).to_dict()
    if args.out:
        _write_json(report, args.out)
    console.print_mapping(report, title="Cut run")
    return report


def cmd_bench(args, config: ConfigManager, console: ConsoleService) -> Dict[str, Any]:
    if args.workers is not None:
        config.set("cutting.max_workers", args.workers)
    points = sweep_points(args.sweep, n=args.n, n_v=args.nv, b=args.block_qubits,
                          n_v_values=args.nv_values, n_values=args.n_values, b_values=args.b_values)
    service = None if args.count_only else CuttingService(config)
    rows = run_benchmark(points, service, seed=args.seed, timed=not args.count_only)
    write_csv(rows, args.out)

    console.print_table(
        [(r.n, r.n_V, r.b, r.n_configs, "-" if r.ms is None else f"{r.ms:.1f}") for r in rows],
        headers=["n", "n_V", "b", "n_configs", "ms"],
        title=f"{args.sweep} sweep",
    )
    return {"sweep": args.sweep, "csv": str(args.out), "rows": [r.to_dict() for r in rows]}


def cmd_detect(args, config: ConfigManager, console: ConsoleService) -> Dict[str, Any]:
    for key in ("coarse_side", "window", "fine_window", "window_stride", "fine_stride"):
        value = getattr(args, key)
        if value is not None:
            config.set(f"detection.{key}", value)

    models = [p for p in args.models.split(",") if p]
    outputs = [p for p in (args.out or "").split(",") if p]
    report_path = outputs[0] if outputs else None
    highlight_path = outputs[1] if len(outputs) > 1 else None

    service = DetectionService(config)
    report = service.detect_file(args.image, models, report_path, highlight_path, args.threshold)

    document = report_to_dict(report)
    console.print(
        f"stage 1: {document['stage1']}, {len(report.stage2_boxes)} coarse boxes, "
        f"{len(report.stage3_boxes)} fine boxes"
    )
    return document


def parse_direction_spec(spec: Optional[str]) -> Dict[str, str]:
    """
    Open-edge directions from ``label=in,label=out`` text.

    The label ``*`` sets the direction of every open edge not listed.

    Raises:
        ValidationError: On malformed entries.
    """
    directions: Dict[str, str] = {}
    for entry in (spec or "").split(","):
        entry = entry.strip()
        if not entry:
            continue
        label, sep, direction = entry.replace(":", "=").partition("=")
        if not sep or direction not in (IN, OUT):
            raise ValidationError(f"Bad direction entry {entry!r}; use label=in or label=out", field="directions")
        directions[label.strip()] = direction
    return directions


def cmd_tn2circ(args, config: ConfigManager, console: ConsoleService) -> Dict[str, Any]:
    path = Path(args.graph)
    try:
        text = path.read_text()
    except OSError as e:
        raise FileError(path, f"cannot read graph: {e}")
    tn = parse_graph_text(text, str(path))

    directions = parse_direction_spec(args.directions)
    default = directions.pop("*", None)
    if default is not None:
        for edge in tn.open_edges():
            if edge.label not in directions and edge.label not in tn.directions:
                directions[edge.label] = default

    layout = tn_to_circuit_layout(tn, directions)
    if args.merge:
        layout = merge_leading_blocks(layout)

    rendered = format_layout_text(layout)
    if args.out:
        out = Path(args.out)
        try:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(rendered)
        except OSError as e:
            raise FileError(out, f"cannot write layout: {e}")
    else:
        console.print(rendered.rstrip())

    return {
        "blocks": layout.n_blocks,
        "wires": layout.n_wires,
        "acyclic": layout.is_acyclic(),
        "balanced": layout.is_balanced(),
        "out": args.out,
    }


def _write_json(document: Dict[str, Any], path) -> None:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(document, indent=2, sort_keys=True))
    except OSError as e:
        raise FileError(path, f"cannot write report: {e}")


COMMANDS = {
    "bas-gen": cmd_bas_gen,
    "train": cmd_train,
    "cut-run": cmd_cut_run,
    "bench": cmd_bench,
    "detect": cmd_detect,
    "tn2circ": cmd_tn2circ,
}
