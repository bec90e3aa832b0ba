"""
Training service: configured SPSA runs with metrics and checkpoints.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ansatz import AnsatzLayout
from core.base.base_service import BaseService
from core.decorators import log_execution, performance_monitor
from core.interfaces.configurable import Configurable
from core.interfaces.loggable import Loggable
from .checkpoint import MetricsWriter, load_checkpoint, save_checkpoint
from .dataset import LabeledDataset
from .model import TrainedModel, TrainingConfig, evaluate_accuracy
from .spsa import SPSAConfig
from .trainer import IterationCallback, train

_module_logger = logging.getLogger(__name__)


class TrainingService(BaseService, Configurable, Loggable):
    """
    Trains meta-ansatz classifiers from the ``training`` config section.

    Keys: ``max_iters``, ``seed``, ``shots``, ``loss_kind``,
    ``stop_at_accuracy``, ``bias``, ``pixel_encoding``, ``init``,
    ``init_scale``, ``orient_readout`` and the ``spsa`` gain settings.
    """

    service_name = "training_service"

    def __init__(self, config=None):
        """
        Initialize the TrainingService.

        Args:
            config: Configuration for the service.
        """
        super().__init__(config)
        self.logger.info(f"Initialized training service ({self.training_config()})")

    def training_config(self, **overrides) -> TrainingConfig:
        """
        Build a TrainingConfig from the configuration, then apply overrides.

        Overrides with value None are ignored. A null ``training.spsa.a``
        leaves the gain to calibration.
        """
        defaults = SPSAConfig()
        gain = self.config.get("training.spsa.a")
        spsa = SPSAConfig(
            a=None if gain is None else float(gain),
            c=float(self.config.get("training.spsa.c", defaults.c)),
            A=self.config.get("training.spsa.A"),
            alpha=float(self.config.get("training.spsa.alpha", defaults.alpha)),
            gamma=float(self.config.get("training.spsa.gamma", defaults.gamma)),
            target_step=float(self.config.get("training.spsa.target_step", defaults.target_step)),
            calibration_samples=int(self.config.get("training.spsa.calibration_samples",
                                                    defaults.calibration_samples)),
        )
        settings: Dict[str, Any] = {
            "max_iters": int(self.config.get("training.max_iters", 400)),
            "seed": int(self.config.get("training.seed", 0) or 0),
            "shots": self.config.get("training.shots"),
            "loss_kind": self.config.get("training.loss_kind", "logistic"),
            "stop_at_accuracy": self.config.get("training.stop_at_accuracy"),
            "bias": self.config.get("training.bias"),
            "pixel_encoding": self.config.get("training.pixel_encoding", "signed"),
            "init": self.config.get("training.init", "uniform"),
            "init_scale": float(self.config.get("training.init_scale", 0.01)),
            "orient_readout": bool(self.config.get("training.orient_readout", False)),
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return TrainingConfig(spsa=spsa, **settings)

    @log_execution(_module_logger)
    @performance_monitor(_module_logger)
    def fit(self, layout: AnsatzLayout, dataset: LabeledDataset,
            cfg: Optional[TrainingConfig] = None,
            metrics_path: Optional[Union[str, Path]] = None,
            callback: Optional[IterationCallback] = None) -> TrainedModel:
        """
        Train a classifier and optionally stream per-iteration metrics.

        Args:
            layout: Meta-ansatz to train.
            dataset: Labeled images with a train/test split.
            cfg: Settings; built from the configuration when None.
            metrics_path: JSONL file receiving one line per iteration.
            callback: Extra per-iteration hook (e.g. a progress bar).

        Returns:
            TrainedModel: The trained model.

        Raises:
            ValidationError: On invalid settings.
            TrainingError: On dataset or layout mismatches.
        """
        cfg = cfg or self.training_config()
        self.logger.info(f"Training {layout} on {len(dataset.train)} images for up to {cfg.max_iters} iterations")

        with MetricsWriter(metrics_path) as writer:
            def on_iteration(record):
                writer(record)
                if callback is not None:
                    callback(record)

            model = train(layout, dataset, cfg, callback=on_iteration)

        summary = self.summarize(model, dataset)
        self.logger.info(
            f"Finished after {summary['iterations']} iterations: "
            f"train_acc={summary['train_acc']}, test_acc={summary['test_acc']}"
        )
        return model

    def summarize(self, model: TrainedModel, dataset: LabeledDataset) -> Dict[str, Any]:
        """Accuracy of the final parameters on each non-empty split."""
        return {
            "layout": str(model.layout),
            "iterations": len(model.history),
            "final_loss": model.history[-1]["loss"] if model.history else None,
            "train_acc": evaluate_accuracy(model, dataset, "train") if dataset.train else None,
            "test_acc": evaluate_accuracy(model, dataset, "test") if dataset.test else None,
        }

    def save(self, model: TrainedModel, path: Union[str, Path]) -> Path:
        path = save_checkpoint(model, path)
        self.logger.info(f"Saved checkpoint to {path}")
        return path

    def load(self, path: Union[str, Path]) -> TrainedModel:
        model = load_checkpoint(path)
        self.logger.debug(f"Loaded {model.layout} from {path}")
        return model
