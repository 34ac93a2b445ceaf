"""Deterministic SVG rendering of colored point sets."""
