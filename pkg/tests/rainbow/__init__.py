"""Tests for the rainbow package."""
