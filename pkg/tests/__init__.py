"""Test suite for name-game."""
