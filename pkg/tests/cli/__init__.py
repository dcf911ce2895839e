"""CLI tests for the name-game command line interface."""
