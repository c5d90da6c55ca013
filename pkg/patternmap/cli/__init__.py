"""Command-line entry point and the worked-example reproduction."""

from patternmap.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
