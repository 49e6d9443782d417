"""The finitely presented group computations of topochains."""

__title__ = 'groups'
__license__ = 'MIT'

from .presentation import (
    Letter,
    Word,
    parse_word,
    format_word,
    free_reduce,
    invert_word,
    GroupPresentation,
    abelianization,
    GroupError
)
from .coset_enumeration import (
    CosetTable,
    Exhausted,
    todd_coxeter,
    word_reduce,
    DEFAULT_TC_BUDGET
)
from .pi_module import (
    PiModule,
    regular_module,
    trivial_module
)
