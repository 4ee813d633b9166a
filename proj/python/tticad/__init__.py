"""Truth-table invariant cylindrical algebraic decomposition."""

from ._core import (
    InvariantError,
    ParseError,
    ResourceLimitError,
    combdiag,
    decompose,
    discriminant,
    isolate_roots,
    resultant,
)

__all__ = [
    "InvariantError",
    "ParseError",
    "ResourceLimitError",
    "combdiag",
    "decompose",
    "discriminant",
    "isolate_roots",
    "resultant",
]
