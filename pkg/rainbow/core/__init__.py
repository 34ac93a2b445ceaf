"""Core package with exact geometry, Horton sets, enumeration and shared plumbing."""

__all__ = [
    "geometry",
    "horton",
    "enumeration",
    "errors",
    "config",
]
