"""The twisted tensor products and bar constructions of topochains."""

__title__ = 'twisted'
__license__ = 'MIT'

from .twisted_tensor import (
    TwistingCochain,
    twisted_tensor,
    local_homology,
    edge_words,
    restrict_module,
    twisted_chain_map,
    TwistedError
)
from .bar import (
    FiniteDgAlgebra,
    exterior_algebra,
    ground_ring,
    BarCoalgebra,
    TruncatedComplex,
    PiModuleAction,
    AugmentationAction,
    bar,
    one_sided_bar,
    rho
)
