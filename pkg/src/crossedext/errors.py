"""Structured check failures with a machine-readable code and first witness."""
from __future__ import annotations


class CheckFailure(Exception):
    """Raised when a validator finds a violated axiom or contract.

    code is a short ALL_CAPS tag (e.g. JACOBI_FAIL); witness is the first
    offending index tuple, when one exists.
    """

    def __init__(self, code: str, witness=None, detail: str = ""):
        self.code = code
        self.witness = witness
        self.detail = detail
        msg = code
        if witness is not None:
            msg += f"{tuple(witness)!r}" if isinstance(witness, (tuple, list)) else f"({witness!r})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
