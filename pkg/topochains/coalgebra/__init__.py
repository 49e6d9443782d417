"""The normalized chains dg coalgebras of topochains."""

__title__ = 'coalgebra'
__license__ = 'MIT'

from topochains.linear import ChainMap

from .chains import (
    DgCoalgebra,
    normalized_chains,
    induced_chain_map,
    coalgebra_axioms_check,
    coalgebra_map_check,
    CoalgebraError
)
