from .base_exceptions import (
    LibraryError,
    ConfigurationError,
    ValidationError,
    FileError,
    FormatError,
    CircuitError,
    TensorNetworkError,
    AnsatzError,
    CuttingError,
    TrainingError,
    DetectionError
)

__all__ = [
    'LibraryError',
    'ConfigurationError',
    'ValidationError',
    'FileError',
    'FormatError',
    'CircuitError',
    'TensorNetworkError',
    'AnsatzError',
    'CuttingError',
    'TrainingError',
    'DetectionError'
]
