"""Shared utilities and configurations for the mono-repository."""
