import copy
import json
import os
from pathlib import Path
from typing import Any, Dict, Iterator, Tuple, Union

from dotenv import dotenv_values

from ..exceptions import ConfigurationError

DEFAULTS_FILE = Path(__file__).with_name('base.json')

ENV_PREFIX = 'TNQC_'
ENV_SELECTOR = 'TNQC_ENV'

_TRUE_WORDS = frozenset({'true', 'yes'})
_FALSE_WORDS = frozenset({'false', 'no'})
_NULL_WORDS = frozenset({'null', 'none'})


def _layer_files(environment: str) -> Tuple[str, ...]:
    """File names read from a config directory, weakest first."""
    return (
        'base.json',
        f'{environment}.json',
        f'.env.{environment}',
        'local.json',
        '.env.local',
    )


class ConfigManager:
    """
    Layered settings for the toolkit.

    The packaged ``base.json`` is the bottom layer. A config directory adds
    ``base.json``, ``<env>.json``, ``.env.<env>``, ``local.json`` and
    ``.env.local`` in that order, and ``TNQC_*`` process variables come last.
    Keys are addressed with dots, e.g. ``training.spsa.alpha``.
    """

    def __init__(self, config_dir=None, environment=None, load_defaults=True):
        """
        Args:
            config_dir: Directory holding the optional layer files.
            environment: Layer name such as 'test' or 'prod'. Falls back to
                ``TNQC_ENV``, then 'prod'.
            load_defaults: Seed the settings with the packaged ``base.json``.
        """
        self._settings: Dict[str, Any] = {}
        self._directory = Path(config_dir) if config_dir else None
        self._env_name = environment or os.environ.get(ENV_SELECTOR, 'prod')

        if load_defaults:
            self.load_from_file(DEFAULTS_FILE)

        if self._directory is not None and self._directory.exists():
            for name in _layer_files(self._env_name):
                self._load_layer(self._directory / name)
            self.load_from_env()

    def _load_layer(self, path: Path) -> None:
        if not path.exists():
            return
        if path.suffix == '.json':
            self.load_from_file(path)
        else:
            self.load_from_dotenv(path)

    def load_from_file(self, file_path: Union[str, Path]) -> bool:
        """
        Merge a JSON document into the settings.

        Returns False when the file does not exist. Malformed JSON raises
        CONFIG-002, any other read failure CONFIG-003.
        """
        path = Path(file_path)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return False
        except OSError as e:
            raise ConfigurationError(
                f"Error loading config file: {e}", "CONFIG-003", {"file": str(path)}
            )

        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigurationError(
                f"Invalid JSON in config file: {e}",
                "CONFIG-002",
                {"file": str(path), "position": f"line {e.lineno}, column {e.colno}"},
            )
        if not isinstance(document, dict):
            raise ConfigurationError(
                "Config file must hold a JSON object", "CONFIG-003", {"file": str(path)}
            )

        _deep_merge(self._settings, document)
        return True

    def load_from_dotenv(self, file_path: Union[str, Path]) -> bool:
        """
        Apply ``SECTION__KEY=value`` lines from a dotenv file.

        A leading ``TNQC_`` is optional. Returns False for a missing file;
        unreadable files raise CONFIG-004.
        """
        path = Path(file_path)
        if not path.exists():
            return False
        try:
            entries = dotenv_values(path)
        except Exception as e:
            raise ConfigurationError(
                f"Error loading .env file: {e}", "CONFIG-004", {"file": str(path)}
            )

        self._apply_pairs((k, v) for k, v in entries.items() if v is not None)
        return True

    def load_from_env(self, prefix=ENV_PREFIX):
        """Apply process variables named ``<prefix>SECTION__KEY``."""
        self._apply_pairs(
            (k, v) for k, v in os.environ.items()
            if k.startswith(prefix) and k != ENV_SELECTOR
        )

    def _apply_pairs(self, pairs: Iterator[Tuple[str, str]]) -> None:
        for name, raw in pairs:
            self.set(self._env_key_to_config_key(name), self._parse_value(raw))

    @staticmethod
    def _env_key_to_config_key(key: str) -> str:
        # TNQC_CUTTING__MAX_WORKERS -> cutting.max_workers
        if key.startswith(ENV_PREFIX):
            key = key[len(ENV_PREFIX):]
        return key.lower().replace('__', '.')

    @staticmethod
    def _parse_value(value: str) -> Any:
        """Turn an environment string into a bool, None, int or float when it reads as one."""
        word = value.strip().lower()
        if word in _TRUE_WORDS:
            return True
        if word in _FALSE_WORDS:
            return False
        if word in _NULL_WORDS:
            return None
        for number in (int, float):
            try:
                return number(value)
            except ValueError:
                continue
        return value

    def get(self, key: str, default: Any = None) -> Any:
        """Look up a dotted key, returning ``default`` when any step is missing."""
        node: Any = self._settings
        for step in key.split('.'):
            if not isinstance(node, dict) or step not in node:
                return default
            node = node[step]
        return node

    def set(self, key: str, value: Any) -> None:
        """Store ``value`` under a dotted key, replacing non-dict steps on the way."""
        *parents, leaf = key.split('.')
        node = self._settings
        for step in parents:
            child = node.get(step)
            if not isinstance(child, dict):
                child = node[step] = {}
            node = child
        node[leaf] = value

    def section(self, key: str) -> Dict[str, Any]:
        """Copy of the subtree under ``key``; empty when absent or not a table."""
        value = self.get(key)
        return copy.deepcopy(value) if isinstance(value, dict) else {}

    def as_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._settings)

    def is_test_environment(self) -> bool:
        return self._env_name == 'test'

    def get_environment(self) -> str:
        return self._env_name


def _deep_merge(target: Dict[str, Any], incoming: Dict[str, Any]) -> None:
    # Tables merge key by key; everything else replaces.
    for key, value in incoming.items():
        current = target.get(key)
        if isinstance(value, dict) and isinstance(current, dict):
            _deep_merge(current, value)
        else:
            target[key] = copy.deepcopy(value)
