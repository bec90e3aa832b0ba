from typing import Any, Iterator, Mapping, Tuple

from ..config.config_manager import ConfigManager


def iter_dotted(tree: Mapping[str, Any], prefix: str = "") -> Iterator[Tuple[str, Any]]:
    """Yield ``(dotted.key, leaf)`` pairs for a nested mapping."""
    for name, value in tree.items():
        dotted = f"{prefix}.{name}" if prefix else name
        if isinstance(value, Mapping):
            yield from iter_dotted(value, dotted)
        else:
            yield dotted, value


class Configurable:
    """Mixin giving a component a ``config`` attribute backed by ConfigManager."""

    def configure(self, config=None):
        """
        Attach settings to the component.

        A ConfigManager is used as is. A dict, nested or with dotted keys,
        overrides the packaged defaults. None means defaults only.
        """
        if isinstance(config, ConfigManager):
            self.config = config
            return
        self.config = ConfigManager()
        for key, value in iter_dotted(config or {}):
            self.config.set(key, value)
