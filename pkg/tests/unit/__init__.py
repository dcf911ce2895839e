"""Unit tests for name-game."""
