"""Unit tests for the ingestion package."""
