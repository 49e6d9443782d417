#Exact chain-level topology functions.
#
#License: MIT

"""
Twisted tensor products and homology with local coefficients.

For a reduced simplicial set X and a left Z[pi_1 X]-module M of finite rank
the complex C(X) (x)_tau M has C_n (x) M in degree n (basis index
i * rank M + k) and the boundary

    d_tau(x (x) m) = dx (x) m + (-1)^n d_n x (x) (g_b(x) - 1) m

where b(x) is the back edge of x.  Only the (n-1, 1) component of the
coproduct reaches a module concentrated in degree 0, and a 1-simplex acts
through psi, that is by its group element minus the identity.
"""
import logging
from typing import Dict, List, Mapping

from topochains.cobar import CobarPresentation, Polynomial
from topochains.cobar import format_polynomial, pi1_presentation
from topochains.coalgebra import DgCoalgebra, induced_chain_map, normalized_chains
from topochains.groups import GroupPresentation, PiModule, Word
from topochains.linear import ChainComplex, ChainMap, FGAbelianGroup, IntMatrix, homology
from topochains.simplicial import ReducedSimplicialSet, SimplicialMap
from topochains.utils import ValidationReport

__all__ = (
    'TwistingCochain',
    'twisted_tensor',
    'local_homology',
    'edge_words',
    'restrict_module',
    'twisted_chain_map',
    'TwistedError'
)

_LOGGER = logging.getLogger(__name__)


class TwistingCochain:
    """
    Class that implements the universal twisting cochain C -> Omega C.

    A basis simplex of dimension n >= 1 goes to its one-letter cobar
    generator, vertices go to 0.

    Methods
    - value(): tau on a basis label.
    - maurer_cartan_check(): D tau + tau d = mu (tau (x) tau) Delta per simplex.
    """

    def __init__(self, coalgebra: DgCoalgebra, max_dim: int = 4) -> None:
        self.coalgebra = coalgebra
        self.max_dim = min(max_dim, coalgebra.top)
        self.presentation = CobarPresentation(coalgebra, self.max_dim - 1)

    def value(self, label: str) -> Polynomial:
        """Return tau(x) for a basis simplex x."""
        if label in self.coalgebra.basis(0):
            return {}
        return {(label,): 1}

    def maurer_cartan_check(self) -> ValidationReport:
        """
        Return the simplices where the Maurer-Cartan equation fails.

        The equation is checked in the form D tau(x) + tau(dx) =
        sum_{p,q>=1} (-1)^p tau(x'_p) tau(x''_q), the convolution form
        d(tau) + tau * tau = 0.
        """
        report = ValidationReport()
        coalgebra = self.coalgebra
        for n in range(1, self.max_dim + 1):
            lower = coalgebra.basis(n - 1)
            boundary = coalgebra.boundary(n).transpose()
            for column, label in enumerate(coalgebra.basis(n)):
                total: Polynomial = dict(self.presentation.differential(self.value(label)))
                for row, value in boundary.row(column).items():
                    for monomial, coefficient in self.value(lower[row]).items():
                        total[monomial] = total.get(monomial, 0) + value * coefficient
                for p in range(1, n):
                    q = n - p
                    left, right = coalgebra.basis(p), coalgebra.basis(q)
                    for row, value in coalgebra.coproduct(p, q).transpose().row(column).items():
                        i, j = divmod(row, len(right))
                        monomial = (left[i], right[j])
                        total[monomial] = total.get(monomial, 0) - (-1) ** p * value
                total = {m: c for m, c in total.items() if c}
                if total:
                    report.add('maurer-cartan', label, format_polynomial(total))
        return report


def _check_module(module: PiModule, presentation: GroupPresentation) -> None:
    report = module.check(presentation)
    if not report.ok:
        raise TwistedError('module action fails relation check: {0} at {1}'.format(
            report[0].kind, report[0].where))


def twisted_tensor(coalgebra: DgCoalgebra, module: PiModule,
                   presentation: GroupPresentation = None) -> ChainComplex:
    """
    Return the twisted tensor product of the chains and a module.

    Parameters
    - coalgebra: the normalized chains of a reduced simplicial set.
    - module: the module over the edge-path group.
    - presentation: the group the action is checked against; by default the
    edge-path presentation of the space.

    Return: ChainComplex with C_n (x) M in degree n.

    Exception
    - TwistedError('coalgebra has no simplicial set'): if the chains do not
    come from a simplicial set.
    - TwistedError('module action fails relation check'): if a relator does not
    act as the identity or a generator has no action.
    """
    space = coalgebra.space
    if space is None:
        raise TwistedError('coalgebra has no simplicial set')
    if presentation is None:
        presentation = pi1_presentation(space)
    _check_module(module, presentation)
    rank = module.rank
    identity = IntMatrix.identity(rank)
    ranks = [coalgebra.rank(n) * rank for n in range(coalgebra.top + 1)]
    boundaries = {}
    for n in range(1, coalgebra.top + 1):
        entries = []
        for col, simplex in enumerate(space.simplices(n)):
            for i, face in enumerate(space.faces_of(simplex)):
                if face.is_degenerate:
                    continue
                row = space.index(face.target)
                for k in range(rank):
                    entries.append((row * rank + k, col * rank + k, (-1) ** i))
            last = space.faces_of(simplex)[n]
            back = space.back_face(simplex, 1)
            if last.is_degenerate or back.is_degenerate:
                continue
            twist = module.matrix(back.target) - identity
            row = space.index(last.target)
            for i, j, value in twist.entries():
                entries.append((row * rank + i, col * rank + j, (-1) ** n * value))
        boundaries[n] = IntMatrix.from_entries(ranks[n - 1], ranks[n], entries)
    complex_ = ChainComplex(ranks, boundaries)
    failed = complex_.check()
    if failed:
        raise TwistedError('twisted boundary squares to nonzero: degree {0}'.format(failed[0]))
    _LOGGER.debug('twisted tensor product with module %s, ranks %s', module.name, ranks)
    return complex_


def local_homology(space: ReducedSimplicialSet, module: PiModule, up_to: int,
                   presentation: GroupPresentation = None,
                   coalgebra: DgCoalgebra = None) -> List[FGAbelianGroup]:
    """
    Return the homology with local coefficients in degrees 0 .. up_to.

    Parameters
    - space: the reduced simplicial set X.
    - module: the module M over pi_1 X.
    - up_to: the highest degree.
    - presentation, coalgebra: precomputed edge-path group and chains.

    Return: list of FGAbelianGroup, the homology of C(X) (x)_tau M.
    """
    if coalgebra is None:
        coalgebra = normalized_chains(space)
    complex_ = twisted_tensor(coalgebra, module, presentation)
    return [homology(complex_, n) for n in range(up_to + 1)]


def edge_words(simplicial_map: SimplicialMap) -> Dict[str, Word]:
    """Return for each source edge the word of its image, empty if degenerate."""
    result = {}
    for edge in simplicial_map.source.simplices(1):
        image = simplicial_map.image(edge)
        result[edge] = () if image.is_degenerate else ((image.target, 1),)
    return result


def restrict_module(module: PiModule, generator_map: Mapping[str, Word],
                    name: str = None) -> PiModule:
    """
    Return the module pulled back along a map of groups.

    Parameters
    - module: the module over the target group.
    - generator_map: the word of the image of every source generator.
    """
    return module.restrict(generator_map, name or module.name + '*')


def twisted_chain_map(simplicial_map: SimplicialMap, module: PiModule,
                      source: DgCoalgebra = None, target: DgCoalgebra = None) -> ChainMap:
    """
    Return the chain map x (x) m -> f(x) (x) m of twisted tensor products.

    Parameters
    - simplicial_map: the map f: X -> Y.
    - module: the module M over pi_1 Y; the source carries its restriction.
    - source, target: precomputed chains of X and Y.

    Return: ChainMap C(X) (x)_tau f*M -> C(Y) (x)_tau M.

    Exception
    - TwistedError('module action fails relation check'): as twisted_tensor.
    """
    if source is None:
        source = normalized_chains(simplicial_map.source)
    if target is None:
        target = source if simplicial_map.target is simplicial_map.source \
            else normalized_chains(simplicial_map.target)
    chains = induced_chain_map(simplicial_map, source, target)
    restricted = restrict_module(module, edge_words(simplicial_map))
    source_complex = twisted_tensor(source, restricted)
    target_complex = twisted_tensor(target, module)
    identity = IntMatrix.identity(module.rank)
    matrices = {n: chains.matrix(n).kron(identity) for n in range(source.top + 1)}
    return ChainMap(source_complex, target_complex, matrices)


class TwistedError(Exception):
    """
    The class that implements exceptions of the twisted constructions.

    Exceptions
    - coalgebra has no simplicial set.
    - module action fails relation check.
    - twisted boundary squares to nonzero.
    - algebra is not augmented.
    - invalid truncation.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
