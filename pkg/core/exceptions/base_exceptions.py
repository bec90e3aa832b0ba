class LibraryError(Exception):
    """
    Root of every tnqc error.

    ``str(error)`` reads ``[CODE] message``. Subclasses set ``default_code``;
    ``details`` carries machine-readable context for reports and the CLI.
    """

    default_code = None

    def __init__(self, message, error_code=None, details=None):
        self.message = message
        self.error_code = error_code or self.default_code
        self.details = dict(details or {})
        super().__init__(f"[{self.error_code}] {message}" if self.error_code else message)


class ConfigurationError(LibraryError):
    """Unreadable or malformed settings."""

    default_code = "CONFIG-001"


class ValidationError(LibraryError):
    """A user-supplied value breaks a documented constraint."""

    default_code = "VALID-001"

    def __init__(self, message, field=None, error_code=None, details=None):
        self.field = field
        details = dict(details or {})
        if field:
            details["field"] = field
            message = f"{field}: {message}"
        super().__init__(message, error_code, details)


class FileError(LibraryError):
    """A path could not be read or written."""

    default_code = "FILE-001"

    def __init__(self, file_path, message, error_code=None, details=None):
        self.file_path = file_path
        details = dict(details or {})
        details["file_path"] = str(file_path)
        super().__init__(f"{file_path}: {message}", error_code, details)


class FormatError(FileError):
    """Malformed content in a PGM/PPM image or a graph/layout text file."""

    default_code = "FORMAT-001"

    def __init__(self, file_path, message, line=None, error_code=None, details=None):
        self.line = line
        details = dict(details or {})
        if line is not None:
            details["line"] = line
            message = f"line {line}: {message}"
        super().__init__(file_path, message, error_code, details)


class CircuitError(LibraryError):
    """Invalid gate, circuit or simulator request."""

    default_code = "CIRCUIT-001"


class TensorNetworkError(LibraryError):
    """Inconsistent tensors or tensor-network graphs."""

    default_code = "TN-001"


class AnsatzError(LibraryError):
    """Layout constraints of an MPS/TTN meta-ansatz are violated."""

    default_code = "ANSATZ-001"


class CuttingError(LibraryError):
    """Error while partitioning, evaluating or reconstructing a cut circuit."""

    default_code = "CUT-001"


class TrainingError(LibraryError):
    """Error in encoding, label arithmetic or the training loop."""

    default_code = "TRAIN-001"


class DetectionError(LibraryError):
    """Error in the sliding-window detection pipeline."""

    default_code = "DETECT-001"
