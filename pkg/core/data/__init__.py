"""
Data helpers shared by configuration dataclasses.
"""
from .validation import (
    Validator,
    RequiredValidator,
    RangeValidator,
    ChoiceValidator,
    ValidatableMixin
)

__all__ = ['Validator', 'RequiredValidator', 'RangeValidator', 'ChoiceValidator', 'ValidatableMixin']
