"""Rainbow holes: exact enumeration and constructions for colored point sets.

Submodules:
    - core: Exact geometry, Horton sets, enumeration, errors and configuration
    - constructions: Lower bound, clustered Horton sets, quadrilateral-free sets
    - io: JSON and CSV point-set files, witness files
    - plotting: SVG rendering
    - cli: The ``rainbow`` command with its sub-commands
"""

__version__ = "1.0.0"
