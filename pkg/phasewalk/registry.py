"""
Command registry for the phasewalk CLI.

Each module in ``phasewalk/commands/`` registers one function with the
``@command`` decorator::

    @command("simulate", help="exact amplitudes and probabilities")
    def simulate(config):
        ...
        return table

A command receives the validated RunConfig and returns an output Table.

If a second function registers under a name that is already taken, the first
registration wins and a warning is logged. Use ``override=True`` to replace
the earlier one silently.
"""

import importlib
import logging
import pkgutil
from dataclasses import dataclass
from typing import Callable, Dict, List

from .errors import ConfigError

log = logging.getLogger(__name__)


@dataclass
class RegisteredCommand:
    name: str
    function: Callable
    help: str = ""


class CommandRegistry:
    """Maps command names to the functions that produce their tables."""

    def __init__(self):
        self._commands: Dict[str, RegisteredCommand] = {}
        self._discovered = False

    # ------------------------------------------------------------------
    # Registration
    # ------------------------------------------------------------------

    def register(self, name: str, fn: Callable, *, help: str = "", override: bool = False) -> None:
        if name in self._commands and not override:
            log.warning(
                "Command '%s' already registered by %s, ignoring duplicate from %s "
                "(use override=True to replace)",
                name, self._commands[name].function.__module__ or "?", fn.__module__ or "?",
            )
            return
        self._commands[name] = RegisteredCommand(name=name, function=fn, help=help)

    def command(self, name: str, *, help: str = "", override: bool = False) -> Callable:
        """Decorator registering ``fn`` as the CLI command ``name``."""
        def decorator(fn: Callable) -> Callable:
            self.register(name, fn, help=help, override=override)
            return fn
        return decorator

    # ------------------------------------------------------------------
    # Lookup
    # ------------------------------------------------------------------

    def get(self, name: str) -> RegisteredCommand:
        self.discover()
        try:
            return self._commands[name]
        except KeyError:
            raise ConfigError(f"unknown command {name!r}; choose from {', '.join(self.names())}")

    def names(self) -> List[str]:
        return sorted(self._commands)

    def describe(self) -> List[RegisteredCommand]:
        self.discover()
        return [self._commands[name] for name in self.names()]

    # ------------------------------------------------------------------
    # Discovery
    # ------------------------------------------------------------------

    def discover(self) -> None:
        """Import every module of ``phasewalk.commands``. Idempotent."""
        if self._discovered:
            return
        from . import commands

        for info in pkgutil.iter_modules(commands.__path__):
            if not info.name.startswith("_"):
                importlib.import_module(f"{commands.__name__}.{info.name}")
        self._discovered = True

    def clear(self) -> None:
        """Reset the registry.  Useful for testing."""
        self._commands.clear()
        self._discovered = False


# ------------------------------------------------------------------
# Module-level singleton + public API
# ------------------------------------------------------------------

_registry = CommandRegistry()

command = _registry.command
get_command = _registry.get
discover_commands = _registry.discover
get_registry = lambda: _registry  # noqa: E731
