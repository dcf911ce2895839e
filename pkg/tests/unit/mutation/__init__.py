"""Unit tests for the mutation package."""
