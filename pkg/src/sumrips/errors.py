"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: InputError -> 2, CapExceeded -> 3.
Theorem-level assertion failures are not exceptions; they travel in reports.
"""


class SumripsError(Exception):
    """Base class for all package errors."""


class InputError(SumripsError):
    """Malformed or invalid user-supplied data (matrices, files, arguments)."""


class CapExceeded(SumripsError):
    """A configured resource guard (point or cell cap) would be exceeded."""
