"""The finite simplicial sets of topochains."""

__title__ = 'simplicial'
__license__ = 'MIT'

from .simplicial_set import (
    DegenerateRef,
    normal_form,
    SimplicialSetData,
    ReducedSimplicialSet,
    SimplicialMap,
    validate,
    new,
    build_standard,
    delta_quotient,
    wedge_of,
    point,
    build_presentation_complex,
    collapse,
    MODEL_DELTA_QUOTIENT,
    MODEL_WEDGE,
    MODEL_POINT,
    SCHEMA,
    SimplicialError
)
from .covering import (
    covering_space,
    deck_transformations,
    lift_id
)
