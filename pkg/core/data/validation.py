from dataclasses import dataclass, field
from typing import Any, ClassVar, Iterator, List, Optional, Sequence

from ..exceptions import ValidationError


@dataclass
class Validator:
    """One rule on one named field of a settings dataclass."""
    field_name: str
    message: str = "Validation failed"

    def validate(self, value: Any) -> bool:
        return True


@dataclass
class RequiredValidator(Validator):
    message: str = "This field is required"

    def validate(self, value: Any) -> bool:
        return value is not None


@dataclass
class RangeValidator(Validator):
    """Numeric bounds; booleans and strings fail, None passes.

    ``exclusive_min`` makes the lower bound strict, as needed for step
    sizes and amplitudes that must be positive.
    """
    min_value: Optional[float] = None
    max_value: Optional[float] = None
    exclusive_min: bool = False
    message: str = "Value is out of range"

    def validate(self, value: Any) -> bool:
        if value is None:
            return True
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            return False
        low, high = self.min_value, self.max_value
        if low is not None and (value < low or (self.exclusive_min and value == low)):
            return False
        return high is None or value <= high


@dataclass
class ChoiceValidator(Validator):
    choices: Sequence[Any] = field(default_factory=tuple)
    message: str = "Value is not an allowed choice"

    def validate(self, value: Any) -> bool:
        return value in self.choices


class ValidatableMixin:
    """Checks a dataclass against the rules listed in its ``_validators``."""

    _validators: ClassVar[List[Validator]] = []

    def _failures(self) -> Iterator[str]:
        for rule in getattr(type(self), '_validators', []):
            value = getattr(self, rule.field_name, None)
            if not rule.validate(value):
                yield f"{rule.field_name}: {rule.message} (got {value!r})"

    def validate(self) -> List[str]:
        """Messages for every broken rule, in declaration order."""
        return list(self._failures())

    def validate_or_raise(self) -> None:
        """Raise one ValidationError naming the class and all broken rules."""
        errors = self.validate()
        if errors:
            raise ValidationError("; ".join(errors), field=type(self).__name__,
                                  details={"errors": errors})
