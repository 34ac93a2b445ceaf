"""Test suite for the rainbow point-set tools."""
