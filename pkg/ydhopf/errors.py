"""
Exception hierarchy for ydhopf.

Every error raised by the engine derives from YDHopfError and belongs to one of
three categories, each carrying the process exit code used by the CLI.
"""


class YDHopfError(Exception):
    """Base exception for ydhopf operations."""

    exit_code = 1


class VerificationFailure(YDHopfError):
    """A structure failed an axiom or identity check."""

    exit_code = 1


class InputError(YDHopfError):
    """Malformed or inconsistent input data."""

    exit_code = 2


class ConstructionError(YDHopfError):
    """Input data violates a condition required by a construction."""

    exit_code = 3
