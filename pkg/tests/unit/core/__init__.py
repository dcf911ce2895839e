"""Core unit tests for name-game."""
