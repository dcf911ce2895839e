"""Unit tests for the dynamics package."""
