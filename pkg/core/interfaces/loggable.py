from ..logging.log_manager import LogManager


class Loggable:
    """Mixin that attaches a managed ``logger`` to a component."""

    def initialize_logger(self, name, log_file=None, level=None, format_str=None):
        """
        Bind ``self.logger`` to the managed logger ``name``.

        Arguments left as None are taken from the component's
        ``logging.level``, ``logging.format`` and ``logging.file`` settings
        when it carries a ``config``.
        """
        settings = getattr(self, 'config', None)
        if settings is not None:
            log_file = log_file or settings.get('logging.file')
            level = level or settings.get('logging.level')
            format_str = format_str or settings.get('logging.format')

        self.logger = LogManager.get_logger(
            name, log_file, LogManager.resolve_level(level), format_str
        )
