"""Tests that every package imports and exports what it declares."""

import importlib

import pytest


class TestImportSafety:
    """Each subpackage must import on its own and export every name in __all__."""

    @pytest.mark.parametrize("name", [
        "patternmap.base",
        "patternmap.weyl",
        "patternmap.gkm",
        "patternmap.pattern",
        "patternmap.borel",
        "patternmap.cli",
    ])
    def test_subpackage_exports(self, name):
        mod = importlib.import_module(name)
        missing = [attr for attr in mod.__all__ if not hasattr(mod, attr)]
        assert missing == []

    def test_version(self):
        import patternmap
        assert patternmap.__version__ == "0.1.0"

    def test_cli_entry_point(self):
        mod = importlib.import_module("patternmap.cli.main")
        assert callable(mod.main)
        assert set(mod.COMMANDS) == {
            "localize", "mult", "pattern", "flatten", "cosets", "skeleton", "reproduce-paper",
        }
        assert (mod.EXIT_OK, mod.EXIT_INPUT, mod.EXIT_MISMATCH) == (0, 2, 3)

    def test_fixtures_shipped(self):
        from patternmap.cli.fixtures import DEFAULT_FIXTURES
        assert DEFAULT_FIXTURES.name == "paper.yml"
        assert DEFAULT_FIXTURES.exists()
