"""The cobar construction and degree 0 group rings of topochains."""

__title__ = 'cobar'
__license__ = 'MIT'

from .cobar import (
    Monomial,
    Polynomial,
    CobarPresentation,
    TruncatedDgAlgebra,
    RingPresentation,
    cobar,
    cobar_chain_map,
    h0_relations,
    pi1_presentation,
    h0_coproduct,
    h0_counit,
    format_polynomial,
    DEFAULT_MAX_DEG,
    DEFAULT_MAX_LEN,
    CobarError
)
from .group_ring import (
    GroupRingElement,
    FiniteGroup,
    GroupRing,
    psi,
    psi_polynomial,
    group_ring,
    group_likes
)
