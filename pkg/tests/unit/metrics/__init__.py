"""Unit tests for the metrics package."""
