import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

Level = Union[int, str, None]


class LogManager:
    """
    Process-wide registry of the toolkit's named loggers.

    Each logger is built once with a stderr handler and, optionally, a file
    handler; later lookups by the same name return the cached instance.
    """

    _loggers: Dict[str, logging.Logger] = {}

    DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    @staticmethod
    def resolve_level(level: Level) -> int:
        """Map "debug", "ERROR", 30 or None onto a logging level; unknown names give INFO."""
        if isinstance(level, int):
            return level
        if level is None:
            return logging.INFO
        number = logging.getLevelName(str(level).upper())
        return number if isinstance(number, int) else logging.INFO

    @staticmethod
    def _handlers(log_file: Optional[str], formatter: logging.Formatter) -> List[logging.Handler]:
        handlers: List[logging.Handler] = [logging.StreamHandler()]
        if log_file:
            path = Path(log_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(path))
        for handler in handlers:
            handler.setFormatter(formatter)
        return handlers

    @classmethod
    def get_logger(cls, name: str, log_file: Optional[str] = None, level: Level = logging.INFO,
                   format_str: Optional[str] = None) -> logging.Logger:
        """
        Return the logger called ``name``, creating it on first use.

        Args:
            name: Logger name, usually a service name.
            log_file: Extra file destination; parent directories are created.
            level: Level name or number.
            format_str: Record format, ``DEFAULT_FORMAT`` when omitted.
        """
        cached = cls._loggers.get(name)
        if cached is not None:
            return cached

        logger = logging.getLogger(name)
        logger.setLevel(cls.resolve_level(level))
        logger.propagate = False
        # Drop handlers left over from an earlier registry.
        logger.handlers.clear()
        formatter = logging.Formatter(format_str or cls.DEFAULT_FORMAT)
        for handler in cls._handlers(log_file, formatter):
            logger.addHandler(handler)

        cls._loggers[name] = logger
        return logger

    @classmethod
    def set_level(cls, level: Level) -> None:
        """Apply one level to every registered logger."""
        number = cls.resolve_level(level)
        for logger in cls._loggers.values():
            logger.setLevel(number)
