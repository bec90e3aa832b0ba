import json
import sys
from contextlib import contextmanager
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

from core.base.base_service import BaseService
from core.interfaces.configurable import Configurable
from core.interfaces.loggable import Loggable


class ConsoleService(BaseService, Configurable, Loggable):
    """
    Terminal output of the command-line tool using the Rich library.

    Machine mode (``json_only``) prints bare JSON documents on stdout and
    suppresses tables and progress bars. Without Rich everything falls back
    to plain text.
    """

    service_name = "console_service"

    def __init__(self, config=None, json_only: bool = False):
        super().__init__(config)
        self.json_only = json_only

        try:
            from rich.console import Console
            from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn
            from rich.table import Table

            self._rich_available = True
            self._console = Console()
            self._err_console = Console(stderr=True)
            self._rich_modules = {
                "Progress": Progress,
                "BarColumn": BarColumn,
                "TextColumn": TextColumn,
                "TimeElapsedColumn": TimeElapsedColumn,
                "Table": Table,
            }
        except ImportError:
            self._rich_available = False
            self._console = None
            self._err_console = None
            self.logger.warning("rich is not installed; console output falls back to plain text")

    def print(self, *args, style: Optional[str] = None) -> None:
        """Print styled text unless in JSON-only mode."""
        if self.json_only:
            return
        if self._rich_available:
            self._console.print(*args, style=style)
        else:
            print(*args)

    def error(self, message: str) -> None:
        """Print an error message on stderr."""
        if self._rich_available:
            self._err_console.print(f"error: {message}", style="bold red", markup=False, soft_wrap=True)
        else:
            print(f"error: {message}", file=sys.stderr)

    def print_json(self, data: Any) -> None:
        """
        Print a JSON document on stdout.

        Keys are sorted so repeated runs print identical text.
        """
        text = json.dumps(data, indent=2, sort_keys=True)
        if self._rich_available and not self.json_only:
            self._console.print_json(text, sort_keys=True)
        else:
            sys.stdout.write(text + "\n")

    def print_table(self, rows: Sequence[Sequence[Any]], headers: Optional[List[str]] = None,
                    title: Optional[str] = None) -> None:
        """Print rows as a table; skipped in JSON-only mode."""
        if self.json_only:
            return
        if not self._rich_available:
            if title:
                print(f"=== {title} ===")
            if headers:
                print("\t".join(headers))
            for row in rows:
                print("\t".join(str(cell) for cell in row))
            return

        table = self._rich_modules["Table"](title=title)
        for header in headers or []:
            table.add_column(header)
        for row in rows:
            table.add_row(*[str(cell) for cell in row])
        self._console.print(table)

    def print_mapping(self, data: Dict[str, Any], title: Optional[str] = None) -> None:
        """Two-column key/value table of a flat report."""
        self.print_table([(key, _format_value(value)) for key, value in data.items()],
                         headers=["field", "value"], title=title)

    @contextmanager
    def training_progress(self, total: int, description: str = "Training") -> Iterator[Callable[[Dict[str, Any]], None]]:
        """
        Progress bar driven by training history records.

        Yields:
            Callback taking one record per iteration.
        """
        if self.json_only or not self._rich_available:
            yield lambda record: None
            return

        Progress = self._rich_modules["Progress"]
        with Progress(
            self._rich_modules["TextColumn"]("[bold blue]{task.description}"),
            self._rich_modules["BarColumn"](),
            self._rich_modules["TextColumn"]("{task.completed}/{task.total}"),
            self._rich_modules["TextColumn"]("{task.fields[status]}"),
            self._rich_modules["TimeElapsedColumn"](),
            console=self._console,
        ) as progress:
            task_id = progress.add_task(description, total=total, status="")

            def advance(record: Dict[str, Any]) -> None:
                status = f"loss {record['loss']:.4g} acc {record['train_acc']:.2f}"
                progress.update(task_id, advance=1, status=status)

            yield advance


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return "-" if value is None else str(value)
