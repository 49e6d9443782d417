"""The exact integer linear algebra of topochains."""

__title__ = 'linear'
__license__ = 'MIT'

from .int_matrix import (
    IntMatrix,
    LinearError
)
from .smith import (
    SmithForm,
    smith_normal_form,
    elementary_divisors,
    invariant_factors
)
from .homology import (
    FGAbelianGroup,
    ChainComplex,
    ChainMap,
    HomologyMap,
    HomologyPresentation,
    homology,
    homology_groups,
    induced_map_on_homology
)
