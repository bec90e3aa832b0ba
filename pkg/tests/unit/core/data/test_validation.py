from dataclasses import dataclass
from typing import ClassVar, List, Optional

import pytest


class TestValidation:
    """Test suite for validators and ValidatableMixin."""

    @pytest.fixture
    def settings_class(self):
        """Small settings dataclass with every validator kind."""
        from core.data import ChoiceValidator, RangeValidator, RequiredValidator, ValidatableMixin, Validator

        @dataclass
        class Settings(ValidatableMixin):
            side: Optional[int] = 4
            rate: Optional[float] = 0.5
            mode: str = "exact"

            _validators: ClassVar[List[Validator]] = [
                RequiredValidator("side"),
                RangeValidator("side", min_value=1, message="must be positive"),
                RangeValidator("rate", min_value=0, max_value=1, exclusive_min=True),
                ChoiceValidator("mode", choices=("exact", "shots")),
            ]

        return Settings

    def test_valid(self, settings_class):
        """Valid settings produce no errors."""
        assert settings_class().validate() == []
        settings_class(rate=None).validate_or_raise()

    def test_range(self, settings_class):
        """Range bounds, strict minimums and non-numbers fail."""
        assert settings_class(side=0).validate() == ["side: must be positive (got 0)"]
        assert len(settings_class(rate=0).validate()) == 1
        assert len(settings_class(rate=1.5).validate()) == 1
        assert len(settings_class(side=True).validate()) == 1
        assert len(settings_class(rate="high").validate()) == 1

    def test_required_and_choice(self, settings_class):
        """Missing values and unknown choices fail."""
        errors = settings_class(side=None, mode="noisy").validate()
        assert errors == ["side: This field is required (got None)",
                          "mode: Value is not an allowed choice (got 'noisy')"]

    def test_validate_or_raise(self, settings_class):
        """All violations are reported in one ValidationError."""
        from core.exceptions import ValidationError

        with pytest.raises(ValidationError) as excinfo:
            settings_class(side=-1, mode="noisy").validate_or_raise()
        assert excinfo.value.error_code == "VALID-001"
        assert len(excinfo.value.details["errors"]) == 2
        assert str(excinfo.value).startswith("[VALID-001] Settings: ")
