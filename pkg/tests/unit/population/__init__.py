"""Unit tests for the population package."""
