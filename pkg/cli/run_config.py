"""
Flat ``key = value`` run configuration files for the command line.
"""

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Union

from dotenv import dotenv_values

from core.exceptions import ConfigurationError

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


def _normalize(key: str) -> str:
    return key.strip().lower().replace("-", "_")


@dataclass
class RunConfig:
    """
    Command settings read from a file; command-line flags take precedence.

    Keys are option names with dashes or underscores (``block-qubits`` or
    ``block_qubits``).
    """
    values: Dict[str, str] = field(default_factory=dict)
    source: str = "<none>"

    @classmethod
    def load(cls, path: Union[str, Path]) -> "RunConfig":
        """
        Read a run configuration file.

        Raises:
            ConfigurationError: If the file does not exist or cannot be read.
        """
        path = Path(path)
        if not path.is_file():
            raise ConfigurationError(f"Run config file not found: {path}", "CONFIG-003", {"file": str(path)})
        try:
            raw = dotenv_values(path)
        except Exception as e:
            raise ConfigurationError(f"Cannot parse run config: {e}", "CONFIG-004", {"file": str(path)})
        return cls({_normalize(k): v for k, v in raw.items() if v is not None}, str(path))

    def defaults_for(self, parser: argparse.ArgumentParser) -> Dict[str, Any]:
        """
        Typed defaults for a subcommand parser.

        Raises:
            ConfigurationError: On keys the command does not accept (CONFIG-010)
                or values that do not convert.
        """
        actions = {a.dest: a for a in parser._actions if a.dest not in ("help", argparse.SUPPRESS)}
        unknown = sorted(set(self.values) - set(actions))
        if unknown:
            raise ConfigurationError(
                f"Unknown keys in {self.source}: {', '.join(unknown)}",
                "CONFIG-010",
                {"file": self.source, "keys": unknown, "allowed": sorted(actions)},
            )

        defaults = {}
        for key, text in self.values.items():
            action = actions[key]
            try:
                defaults[key] = self._convert(action, text)
            except (TypeError, ValueError, argparse.ArgumentTypeError) as e:
                raise ConfigurationError(
                    f"Invalid value {text!r} for {key} in {self.source}: {e}",
                    "CONFIG-011",
                    {"file": self.source, "key": key},
                )
        return defaults

    @staticmethod
    def _convert(action: argparse.Action, text: str) -> Any:
        if isinstance(action, (argparse._StoreTrueAction, argparse._StoreFalseAction)):
            lowered = text.strip().lower()
            if lowered in _TRUE:
                return True
            if lowered in _FALSE:
                return False
            raise ValueError("expected a boolean")
        value = action.type(text) if action.type else text
        if action.choices is not None and value not in action.choices:
            raise ValueError(f"choose from {sorted(action.choices)}")
        return value
