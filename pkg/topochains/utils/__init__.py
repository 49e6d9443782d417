"""General features of the topochains package."""

__title__ = 'utils'
__license__ = 'MIT'

from .utils import (
    Issue,
    ValidationReport,
    canonical_json,
    inputs_hash,
    parse_coefficients,
    COEFFS_Z,
    COEFFS_Q,
    COEFFS_ZMOD,
    FormatError
)
from .conventions import (
    CONVENTIONS,
    conventions_json
)
