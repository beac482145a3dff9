"""Tests for the command registry"""

import unittest

from phasewalk.config import COMMANDS
from phasewalk.errors import ConfigError
from phasewalk.registry import CommandRegistry, get_registry


class TestCommandRegistry(unittest.TestCase):
    """Unit tests for the CommandRegistry class."""

    def setUp(self):
        self.registry = CommandRegistry()
        # keep discover() from importing the real commands into the singleton
        self.registry._discovered = True

    def test_register_and_get(self):
        @self.registry.command("simulate", help="exact")
        def simulate(config):
            return "table"

        registered = self.registry.get("simulate")
        self.assertIs(registered.function, simulate)
        self.assertEqual(registered.help, "exact")
        self.assertEqual(registered.function(None), "table")

    def test_first_registration_wins(self):
        @self.registry.command("density")
        def first(config):
            return "first"

        with self.assertLogs("phasewalk.registry", level="WARNING") as logs:
            @self.registry.command("density")
            def second(config):
                return "second"

        self.assertIn("already registered", logs.output[0])
        self.assertIs(self.registry.get("density").function, first)

    def test_override_replaces(self):
        @self.registry.command("spectrum")
        def first(config):
            pass

        @self.registry.command("spectrum", override=True)
        def second(config):
            pass

        self.assertIs(self.registry.get("spectrum").function, second)

    def test_unknown_command(self):
        with self.assertRaises(ConfigError):
            self.registry.get("plot")

    def test_clear(self):
        self.registry.register("moments", lambda config: None)
        self.registry.clear()
        self.assertEqual(self.registry.names(), [])


class TestBuiltinCommands(unittest.TestCase):

    def test_discovery_finds_every_command(self):
        registry = get_registry()
        registry.discover()
        self.assertEqual(registry.names(), sorted(COMMANDS))
        for registered in registry.describe():
            self.assertTrue(registered.help)


if __name__ == "__main__":
    unittest.main()
