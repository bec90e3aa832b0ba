"""
Variational training: encoding, losses, SPSA, training loop and checkpoints.
"""

from .encoding import PIXEL_ENCODINGS, amplitude_encode, encode_batch, qubits_for_pixels, transform_pixels
from .objective import (
    BARS,
    LOSS_FUNCTIONS,
    STRIPES,
    cross_entropy_loss,
    get_loss,
    label_from_expval,
    loss,
    prob_correct
)
from .spsa import SPSAConfig, calibrate_gain, spsa_gains, spsa_step
from .dataset import SPLITS, LabeledDataset
from .model import (
    INIT_STRATEGIES,
    TrainedModel,
    TrainingConfig,
    circuit_expvals,
    evaluate_accuracy,
    predict_from_circuit,
    predict_label,
    sampled_expval
)
from .trainer import initial_angles, train
from .checkpoint import (
    CHECKPOINT_SCHEMA,
    FORMAT_VERSION,
    MetricsWriter,
    load_checkpoint,
    model_from_dict,
    model_to_dict,
    save_checkpoint
)
from .training_service import TrainingService

__all__ = [
    'PIXEL_ENCODINGS', 'amplitude_encode', 'encode_batch', 'qubits_for_pixels', 'transform_pixels',
    'BARS', 'LOSS_FUNCTIONS', 'STRIPES', 'cross_entropy_loss', 'get_loss', 'label_from_expval', 'loss',
    'prob_correct',
    'SPSAConfig', 'calibrate_gain', 'spsa_gains', 'spsa_step',
    'SPLITS', 'LabeledDataset',
    'INIT_STRATEGIES', 'TrainedModel', 'TrainingConfig', 'circuit_expvals', 'evaluate_accuracy',
    'predict_from_circuit', 'predict_label', 'sampled_expval',
    'initial_angles', 'train',
    'CHECKPOINT_SCHEMA', 'FORMAT_VERSION', 'MetricsWriter', 'load_checkpoint', 'model_from_dict',
    'model_to_dict', 'save_checkpoint',
    'TrainingService'
]
