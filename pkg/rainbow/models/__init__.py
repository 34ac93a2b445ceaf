"""Pydantic schemas for files and reports."""
