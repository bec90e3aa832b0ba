import pytest


class TestExceptions:
    """Test suite for the error hierarchy."""

    @pytest.mark.parametrize("name,code", [
        ("ConfigurationError", "CONFIG-001"),
        ("CircuitError", "CIRCUIT-001"),
        ("TensorNetworkError", "TN-001"),
        ("AnsatzError", "ANSATZ-001"),
        ("CuttingError", "CUT-001"),
        ("TrainingError", "TRAIN-001"),
        ("DetectionError", "DETECT-001"),
    ])
    def test_default_codes(self, name, code):
        """Each domain error carries its own code in the message."""
        import core.exceptions as exceptions

        error = getattr(exceptions, name)("went wrong", details={"n": 3})
        assert isinstance(error, exceptions.LibraryError)
        assert error.error_code == code
        assert str(error) == f"[{code}] went wrong"
        assert error.details == {"n": 3}

    def test_explicit_code_wins(self):
        """A passed code replaces the default."""
        from core.exceptions import ConfigurationError

        assert str(ConfigurationError("bad", "CONFIG-010")) == "[CONFIG-010] bad"

    def test_plain_library_error(self):
        """Without a code the message is unchanged."""
        from core.exceptions import LibraryError

        error = LibraryError("plain")
        assert str(error) == "plain"
        assert error.details == {}

    def test_validation_field(self):
        """The field prefixes the message and lands in details."""
        from core.exceptions import ValidationError

        error = ValidationError("must be positive", field="shots")
        assert str(error) == "[VALID-001] shots: must be positive"
        assert error.details == {"field": "shots"}

    def test_file_and_format_errors(self):
        """Paths and line numbers are part of file errors."""
        from core.exceptions import FileError, FormatError

        missing = FileError("a.pgm", "not found")
        assert str(missing) == "[FILE-001] a.pgm: not found"
        assert missing.details == {"file_path": "a.pgm"}

        bad = FormatError("g.txt", "expected two labels", line=4)
        assert isinstance(bad, FileError)
        assert str(bad) == "[FORMAT-001] g.txt: line 4: expected two labels"
        assert bad.details == {"line": 4, "file_path": "g.txt"}

    def test_caller_details_not_mutated(self):
        """Details passed in are copied."""
        from core.exceptions import ValidationError

        supplied = {"limit": 1}
        ValidationError("too big", field="n", details=supplied)
        assert supplied == {"limit": 1}
