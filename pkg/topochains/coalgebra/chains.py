#Exact chain-level topology functions.
#
#License: MIT

"""
Normalized chains with the Alexander-Whitney coproduct.

The module implements the normalized chains functor from finite simplicial
sets to dg coalgebras over the integers.  The basis of C_n is the list of
nondegenerate n-simplices; degenerate simplices are zero.  The coproduct
component Delta_{p,q} sends a simplex to its front p-face tensor its back
q-face, with rows indexed i * rank(C_q) + j (left factor major).
"""
import logging
from typing import Dict, List, Mapping, Tuple

from topochains.linear import ChainComplex, ChainMap, IntMatrix
from topochains.simplicial import SimplicialMap, SimplicialSetData, validate
from topochains.utils import ValidationReport

__all__ = (
    'DgCoalgebra',
    'normalized_chains',
    'induced_chain_map',
    'coalgebra_axioms_check',
    'coalgebra_map_check',
    'CoalgebraError'
)

_LOGGER = logging.getLogger(__name__)


class DgCoalgebra:
    """
    Class that implements a dg coalgebra on free modules of finite rank.

    Methods
    - basis(): the basis labels in a degree.
    - rank(): the rank in a degree.
    - boundary(): the boundary matrix.
    - coproduct(): the component Delta_{p,q}.
    - counit(): the counit on C_0.

    Attributes
    - complex: the underlying chain complex.
    - space: the simplicial set the chains come from, if any.
    - top: the highest degree.
    """

    def __init__(self, complex_: ChainComplex, coproducts: Mapping[Tuple[int, int], IntMatrix],
                 bases: Mapping[int, List[str]] = None,
                 space: SimplicialSetData = None) -> None:
        """
        Initialize the coalgebra.

        Parameters
        - complex_: the chain complex.
        - coproducts: the matrices Delta_{p,q}; missing components are zero.
        - bases: optional basis labels per degree.
        - space: the simplicial set, for coalgebras of chains.
        """
        self.complex = complex_
        self.space = space
        self._coproducts: Dict[Tuple[int, int], IntMatrix] = dict(coproducts)
        self._bases = {n: list(labels) for n, labels in (bases or {}).items()}

    @property
    def top(self) -> int:
        """Return the highest degree."""
        return self.complex.top

    def rank(self, n: int) -> int:
        """Return the rank of C_n."""
        return self.complex.rank(n)

    def basis(self, n: int) -> List[str]:
        """Return the basis labels of C_n."""
        if n in self._bases:
            return list(self._bases[n])
        return ['{0}_{1}'.format(n, i) for i in range(self.rank(n))]

    def boundary(self, n: int) -> IntMatrix:
        """Return the boundary matrix C_n -> C_{n-1}."""
        return self.complex.boundary(n)

    def coproduct(self, p: int, q: int) -> IntMatrix:
        """Return the matrix of Delta_{p,q}: C_{p+q} -> C_p (x) C_q."""
        matrix = self._coproducts.get((p, q))
        if matrix is None:
            return IntMatrix.zeros(self.rank(p) * self.rank(q), self.rank(p + q))
        return matrix

    def counit(self) -> IntMatrix:
        """Return the counit C_0 -> Z, every vertex mapped to 1."""
        return IntMatrix.from_dense([[1] * self.rank(0)], self.rank(0))

    @property
    def is_connected(self) -> bool:
        """Return True if C_0 has rank 1."""
        return self.rank(0) == 1

    def with_coproduct(self, p: int, q: int, matrix: IntMatrix) -> 'DgCoalgebra':
        """Return a copy with one coproduct component replaced."""
        coproducts = dict(self._coproducts)
        coproducts[(p, q)] = matrix
        return DgCoalgebra(self.complex, coproducts, self._bases, self.space)


def _chain_complex(space: SimplicialSetData) -> ChainComplex:
    ranks = [space.count(n) for n in range(space.top_dim + 1)]
    boundaries = {}
    for n in range(1, space.top_dim + 1):
        entries = []
        for col, simplex in enumerate(space.simplices(n)):
            for i, face in enumerate(space.faces_of(simplex)):
                if not face.is_degenerate:
                    entries.append((space.index(face.target), col, (-1) ** i))
        boundaries[n] = IntMatrix.from_entries(ranks[n - 1], ranks[n], entries)
    return ChainComplex(ranks, boundaries)


def normalized_chains(space: SimplicialSetData) -> DgCoalgebra:
    """
    Return the normalized chains of a simplicial set.

    Parameters
    - space: a valid simplicial set.

    Return: DgCoalgebra with the boundary sum (-1)^i d_i (degenerate faces
    dropped) and the Alexander-Whitney components
    Delta_{p,q}(x) = front_p(x) (x) back_q(x), dropped when a factor is
    degenerate.

    Exception
    - CoalgebraError('invalid simplicial set'): if validation fails.
    """
    report = validate(space)
    if not report.ok:
        raise CoalgebraError('invalid simplicial set: ' + report[0].kind)
    complex_ = _chain_complex(space)
    coproducts = {}
    for n in range(space.top_dim + 1):
        for p in range(n + 1):
            q = n - p
            rank_q = space.count(q)
            entries = []
            for col, simplex in enumerate(space.simplices(n)):
                front = space.front_face(simplex, p)
                back = space.back_face(simplex, q)
                if front.is_degenerate or back.is_degenerate:
                    continue
                row = space.index(front.target) * rank_q + space.index(back.target)
                entries.append((row, col, 1))
            coproducts[(p, q)] = IntMatrix.from_entries(
                space.count(p) * rank_q, space.count(n), entries)
    bases = {n: list(space.simplices(n)) for n in range(space.top_dim + 1)}
    _LOGGER.debug('normalized chains with ranks %s', list(complex_.ranks))
    return DgCoalgebra(complex_, coproducts, bases, space)


def induced_chain_map(simplicial_map: SimplicialMap, source: DgCoalgebra = None,
                      target: DgCoalgebra = None) -> ChainMap:
    """
    Return the chain map induced by a simplicial map.

    Parameters
    - simplicial_map: the map f.
    - source, target: the chains of the source and target, computed when
    not given.

    Return: ChainMap sending x to f(x) when f(x) is nondegenerate and to 0
    otherwise.

    Exception
    - CoalgebraError('invalid simplicial map'): if the map check fails.
    """
    report = simplicial_map.check()
    if not report.ok:
        raise CoalgebraError('invalid simplicial map: ' + report[0].kind
                             + ' at ' + report[0].where)
    if source is None:
        source = normalized_chains(simplicial_map.source)
    if target is None:
        target = source if simplicial_map.target is simplicial_map.source \
            else normalized_chains(simplicial_map.target)
    matrices = {}
    for n in range(source.top + 1):
        entries = []
        for col, simplex in enumerate(simplicial_map.source.simplices(n)):
            image = simplicial_map.image(simplex)
            if not image.is_degenerate:
                entries.append((simplicial_map.target.index(image.target), col, 1))
        matrices[n] = IntMatrix.from_entries(target.rank(n), source.rank(n), entries)
    return ChainMap(source.complex, target.complex, matrices)


def coalgebra_axioms_check(coalgebra: DgCoalgebra) -> ValidationReport:
    """
    Check the dg coalgebra axioms.

    Parameters
    - coalgebra: the coalgebra C.

    Return: the report of every failed connectedness, boundary, counit,
    coassociativity (per tridegree) and Leibniz (per degree and bidegree)
    condition; empty iff all hold.
    """
    report = ValidationReport()
    top = coalgebra.top
    rank = coalgebra.rank
    if not coalgebra.is_connected:
        report.add('connectedness', 'degree 0', 'rank {0}'.format(rank(0)))
    for n in coalgebra.complex.check():
        report.add('boundary', 'degree {0}'.format(n))
    counit = coalgebra.counit()
    for n in range(top + 1):
        identity = IntMatrix.identity(rank(n))
        if counit.kron(identity) @ coalgebra.coproduct(0, n) != identity:
            report.add('counit', 'degree {0}'.format(n), 'left')
        if identity.kron(counit) @ coalgebra.coproduct(n, 0) != identity:
            report.add('counit', 'degree {0}'.format(n), 'right')
    for n in range(top + 1):
        for p in range(n + 1):
            for q in range(n - p + 1):
                r = n - p - q
                left = coalgebra.coproduct(p, q).kron(IntMatrix.identity(rank(r))) \
                    @ coalgebra.coproduct(p + q, r)
                right = IntMatrix.identity(rank(p)).kron(coalgebra.coproduct(q, r)) \
                    @ coalgebra.coproduct(p, q + r)
                if left != right:
                    report.add('coassociativity', '({0},{1},{2})'.format(p, q, r))
    for n in range(1, top + 1):
        for p in range(n):
            q = n - 1 - p
            left = coalgebra.coproduct(p, q) @ coalgebra.boundary(n)
            first = coalgebra.boundary(p + 1).kron(IntMatrix.identity(rank(q))) \
                @ coalgebra.coproduct(p + 1, q)
            second = IntMatrix.identity(rank(p)).kron(coalgebra.boundary(q + 1)) \
                @ coalgebra.coproduct(p, q + 1)
            if left != first + second.scale((-1) ** p):
                report.add('leibniz', 'degree {0} ({1},{2})'.format(n, p, q))
    return report


def coalgebra_map_check(chain_map: ChainMap, source: DgCoalgebra,
                        target: DgCoalgebra) -> ValidationReport:
    """Return the bidegrees where (f (x) f) Delta != Delta f, and the boundary failures."""
    report = ValidationReport()
    for n in chain_map.check():
        report.add('boundary', 'degree {0}'.format(n))
    for n in range(source.top + 1):
        for p in range(n + 1):
            q = n - p
            left = chain_map.matrix(p).kron(chain_map.matrix(q)) @ source.coproduct(p, q)
            right = target.coproduct(p, q) @ chain_map.matrix(n)
            if left != right:
                report.add('coproduct', '({0},{1})'.format(p, q))
    return report


class CoalgebraError(Exception):
    """
    The class that implements exceptions of the chains functor.

    Exceptions
    - invalid simplicial set.
    - invalid simplicial map.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
