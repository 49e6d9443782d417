#Exact chain-level topology functions.
#
#License: MIT

"""
General features of the topochains package.

The module implements auxiliary functions shared by the subpackages: the
report type returned by the validity checks, canonical JSON and input hashing
for verdict transcripts, coefficient-ring parsing and the FormatError class.
"""
import hashlib
import json
from dataclasses import dataclass
from typing import Any, List, Tuple

__all__ = (
    'Issue',
    'ValidationReport',
    'canonical_json',
    'inputs_hash',
    'parse_coefficients',
    'COEFFS_Z',
    'COEFFS_Q',
    'COEFFS_ZMOD',
    'FormatError'
)

COEFFS_Z: int = 0x01  #integers
COEFFS_Q: int = 0x02  #rationals
COEFFS_ZMOD: int = 0x03  #integers modulo m


@dataclass(frozen=True)
class Issue:
    """
    One violated condition found by a validity check.

    Attributes
    - kind: short name of the violated condition.
    - where: the object (simplex, degree, tridegree) at which it fails.
    - detail: human-readable description.
    """

    kind: str
    where: str
    detail: str = ''


class ValidationReport(list):
    """
    The list of issues returned by report-carrying checks.

    An empty report means the checked object is valid.
    """

    @property
    def ok(self) -> bool:
        """Return True if no issue was found."""
        return not self

    def add(self, kind: str, where: Any, detail: str = '') -> None:
        """Append an issue to the report."""
        self.append(Issue(kind, str(where), detail))

    def kinds(self) -> List[str]:
        """Return the kinds of all issues in order."""
        return [issue.kind for issue in self]


def canonical_json(value: Any) -> str:
    """
    Return the canonical JSON text of a value.

    Keys are sorted and no whitespace is emitted, so equal values always give
    equal text.
    """
    return json.dumps(value, sort_keys=True, separators=(',', ':'))


def inputs_hash(value: Any) -> str:
    """Return the SHA-256 hex digest of the canonical JSON of a value."""
    return hashlib.sha256(canonical_json(value).encode('utf-8')).hexdigest()


def parse_coefficients(text: str) -> Tuple[int, int]:
    """
    Parse a coefficient ring selector.

    Parameters
    - text: 'z', 'q' or 'zmod:<m>' with m >= 2.

    Return: pair (mode, modulus); the modulus is 0 unless mode is COEFFS_ZMOD.

    Exception
    - FormatError('unsupported coefficients'): in case of an unknown selector.
    """
    text = text.strip().lower()
    if text == 'z':
        return COEFFS_Z, 0
    if text == 'q':
        return COEFFS_Q, 0
    if text.startswith('zmod:'):
        try:
            modulus = int(text[5:])
        except ValueError:
            raise FormatError('unsupported coefficients: ' + text) from None
        if modulus >= 2:
            return COEFFS_ZMOD, modulus
    raise FormatError('unsupported coefficients: ' + text)


class FormatError(Exception):
    """
    The class that implements exceptions for malformed input.

    Exceptions
    - unsupported schema.
    - malformed JSON value.
    - unsupported coefficients.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
