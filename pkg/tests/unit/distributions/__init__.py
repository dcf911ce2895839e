"""Unit tests for the distributions package."""
