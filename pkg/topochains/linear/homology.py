#Exact chain-level topology functions.
#
#License: MIT

"""
Homology of finite free chain complexes over the integers.

The module implements finitely generated abelian groups, chain complexes and
chain maps given by integer matrices, homology with integer, rational and
modular coefficients, and the matrix of the map induced on homology together
with the isomorphism test.
"""
import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Sequence, Tuple

from sympy import factorint

from topochains.utils import COEFFS_Q, COEFFS_Z, COEFFS_ZMOD
from topochains.utils import FormatError
from .int_matrix import IntMatrix, LinearError
from .smith import elementary_divisors, smith_normal_form

__all__ = (
    'FGAbelianGroup',
    'ChainComplex',
    'ChainMap',
    'HomologyMap',
    'HomologyPresentation',
    'homology',
    'homology_groups',
    'induced_map_on_homology'
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FGAbelianGroup:
    """
    A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k.

    Attributes
    - free_rank: the rank r of the free part.
    - torsion: invariant factors d_1 | d_2 | ... | d_k, each at least 2.
    """

    free_rank: int = 0
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        torsion = tuple(int(value) for value in self.torsion)
        object.__setattr__(self, 'torsion', torsion)
        if self.free_rank < 0:
            raise LinearError('negative free rank')
        if any(value < 2 for value in torsion):
            raise LinearError('torsion coefficient below 2')
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise LinearError('torsion is not a divisibility chain')

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> 'FGAbelianGroup':
        """
        Return the direct sum of cyclic groups of the given orders.

        Parameters
        - orders: cyclic orders; 0 means infinite cyclic and 1 is dropped.

        Return: the group in invariant factor form.
        """
        free_rank = sum(1 for order in orders if order == 0)
        powers: Dict[int, List[int]] = {}
        for order in orders:
            if abs(order) > 1:
                for prime, exponent in factorint(abs(order)).items():
                    powers.setdefault(prime, []).append(prime ** exponent)
        length = max((len(values) for values in powers.values()), default=0)
        factors = [1] * length
        for values in powers.values():
            values.sort(reverse=True)
            for k, value in enumerate(values):
                factors[k] *= value
        return cls(free_rank, tuple(sorted(factors)))

    @property
    def is_trivial(self) -> bool:
        """Return True for the zero group."""
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int:
        """Return the order, 0 for infinite groups."""
        if self.free_rank:
            return 0
        result = 1
        for value in self.torsion:
            result *= value
        return result

    def __str__(self) -> str:
        parts = ['Z/{0}'.format(value) for value in self.torsion]
        if self.free_rank == 1:
            parts.insert(0, 'Z')
        elif self.free_rank > 1:
            parts.insert(0, 'Z^{0}'.format(self.free_rank))
        return ' + '.join(parts) if parts else '0'

    def to_json(self) -> dict:
        """Return the JSON form {"free_rank", "torsion"}."""
        return {'free_rank': self.free_rank, 'torsion': list(self.torsion)}

    @classmethod
    def from_json(cls, value: dict) -> 'FGAbelianGroup':
        """Build a group from its JSON form."""
        try:
            return cls(int(value['free_rank']), tuple(int(v) for v in value['torsion']))
        except (KeyError, TypeError, ValueError, LinearError):
            raise FormatError('malformed abelian group') from None


class ChainComplex:
    """
    Class that implements a bounded free chain complex over the integers.

    Methods
    - rank(): rank of the module in a degree.
    - boundary(): the matrix of the boundary from degree n to degree n - 1.
    - check(): degrees where the boundary does not square to zero.
    - divisors(): cached invariant factors of a boundary.

    Attributes
    - ranks: ranks in degrees 0 .. top.
    - top: the highest degree.
    """

    def __init__(self, ranks: Sequence[int],
                 boundaries: Dict[int, IntMatrix] = None) -> None:
        """Initialize the complex; missing boundaries are zero."""
        self._ranks = tuple(int(rank) for rank in ranks)
        self._boundaries: Dict[int, IntMatrix] = {}
        self._divisors: Dict[int, List[int]] = {}
        for n, matrix in (boundaries or {}).items():
            if matrix.shape != (self.rank(n - 1), self.rank(n)):
                raise LinearError('boundary shape mismatch: degree ' + str(n))
            if not matrix.is_zero():
                self._boundaries[n] = matrix

    @property
    def ranks(self) -> Tuple[int, ...]:
        """Return the ranks in degrees 0 .. top."""
        return self._ranks

    @property
    def top(self) -> int:
        """Return the highest degree."""
        return len(self._ranks) - 1

    def rank(self, n: int) -> int:
        """Return the rank of the chain module in degree n."""
        if 0 <= n < len(self._ranks):
            return self._ranks[n]
        return 0

    def boundary(self, n: int) -> IntMatrix:
        """Return the boundary matrix from degree n to degree n - 1."""
        matrix = self._boundaries.get(n)
        if matrix is None:
            return IntMatrix.zeros(self.rank(n - 1), self.rank(n))
        return matrix

    def check(self) -> List[int]:
        """Return the degrees n where the boundary composite into n - 2 is nonzero."""
        return [n for n in range(2, self.top + 1)
                if not (self.boundary(n - 1) @ self.boundary(n)).is_zero()]

    def divisors(self, n: int) -> List[int]:
        """Return the cached invariant factors of the boundary in degree n."""
        if n not in self._divisors:
            self._divisors[n] = elementary_divisors(self.boundary(n))
        return self._divisors[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return self._ranks == other._ranks and self._boundaries == other._boundaries

    def __hash__(self) -> int:
        return hash(self._ranks)

    def to_json(self) -> dict:
        """Return the JSON form {"ranks", "boundaries"}."""
        return {
            'ranks': list(self._ranks),
            'boundaries': {str(n): matrix.to_json()
                           for n, matrix in sorted(self._boundaries.items())},
        }


class ChainMap:
    """
    Class that implements a chain map between free chain complexes.

    Methods
    - matrix(): the component in a degree.
    - check(): degrees where the map does not commute with the boundaries.
    - is_identity(): True for the identity of a complex.
    - compose(): composite with a map into the source.
    - identity(): the identity chain map of a complex.
    """

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 matrices: Dict[int, IntMatrix] = None) -> None:
        """Initialize the chain map; missing components are zero."""
        self.source = source
        self.target = target
        self._matrices: Dict[int, IntMatrix] = {}
        for n, matrix in (matrices or {}).items():
            if matrix.shape != (target.rank(n), source.rank(n)):
                raise LinearError('chain map shape mismatch: degree ' + str(n))
            self._matrices[n] = matrix

    @classmethod
    def identity(cls, complex_: ChainComplex) -> 'ChainMap':
        """Return the identity chain map of a complex."""
        return cls(complex_, complex_, {
            n: IntMatrix.identity(rank) for n, rank in enumerate(complex_.ranks)})

    def matrix(self, n: int) -> IntMatrix:
        """Return the component of the map in degree n."""
        matrix = self._matrices.get(n)
        if matrix is None:
            return IntMatrix.zeros(self.target.rank(n), self.source.rank(n))
        return matrix

    def commutes_in(self, n: int) -> bool:
        """Return True if the square from degree n to degree n - 1 commutes."""
        if n <= 0:
            return True
        return (self.target.boundary(n) @ self.matrix(n)
                == self.matrix(n - 1) @ self.source.boundary(n))

    def check(self) -> List[int]:
        """Return the degrees n where the map fails to commute with the boundary."""
        top = max(self.source.top, self.target.top)
        return [n for n in range(1, top + 1) if not self.commutes_in(n)]

    def is_identity(self) -> bool:
        """Return True if the map is the identity of its source."""
        if self.source is not self.target and self.source != self.target:
            return False
        return all(self.matrix(n) == IntMatrix.identity(rank)
                   for n, rank in enumerate(self.source.ranks))

    def compose(self, other: 'ChainMap') -> 'ChainMap':
        """Return self after other."""
        top = max(other.source.top, self.target.top)
        return ChainMap(other.source, self.target, {
            n: self.matrix(n) @ other.matrix(n) for n in range(top + 1)})


class HomologyPresentation:
    """
    Smith-presented homology in one degree.

    The group is presented on generators g_i of orders d_i (0 for infinite
    order).  'coordinates' sends a cycle to its class and 'representative'
    returns a cycle for a generator.
    """

    def __init__(self, complex_: ChainComplex, n: int) -> None:
        rank_n = complex_.rank(n)
        outgoing = smith_normal_form(complex_.boundary(n))
        self._offset = outgoing.rank
        self._v_inv = outgoing.V_inv
        self._kernel = outgoing.V.select(cols=range(self._offset, rank_n))
        incoming = (outgoing.V_inv @ complex_.boundary(n + 1)).select(
            rows=range(self._offset, rank_n))
        reduced = smith_normal_form(incoming)
        self._u = reduced.U
        self._u_inv = reduced.U_inv
        size = rank_n - self._offset
        self._gens: List[int] = []
        self.orders: List[int] = []
        for i in range(size):
            order = reduced.D[i, i] if i < reduced.D.cols else 0
            if order != 1:
                self._gens.append(i)
                self.orders.append(order)
        self.group = FGAbelianGroup(
            sum(1 for order in self.orders if order == 0),
            tuple(order for order in self.orders if order))

    def coordinates(self, cycle: Sequence[int]) -> List[int]:
        """Return the coordinates of the class of a cycle."""
        local = self._v_inv.apply(cycle)[self._offset:]
        coords = self._u.apply(local)
        return [coords[i] % order if order else coords[i]
                for i, order in zip(self._gens, self.orders)]

    def representative(self, index: int) -> List[int]:
        """Return a cycle representing the generator 'index'."""
        column = [row[self._gens[index]] for row in self._u_inv.to_dense()]
        return self._kernel.apply(column)


@dataclass(frozen=True)
class HomologyMap:
    """
    The map induced on homology in one degree.

    Attributes
    - degree: the degree n.
    - source, target: the homology groups.
    - matrix: the map between the Smith-presented groups.
    - is_iso: True if the map is an isomorphism.
    """

    degree: int
    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntMatrix
    is_iso: bool

    def to_json(self) -> dict:
        """Return the JSON form of the induced map."""
        return {
            'degree': self.degree,
            'source': self.source.to_json(),
            'target': self.target.to_json(),
            'matrix': self.matrix.to_json(),
            'is_iso': self.is_iso,
        }


def _integral_homology(complex_: ChainComplex, n: int) -> FGAbelianGroup:
    if n < 0:
        return FGAbelianGroup()
    if not (complex_.boundary(n) @ complex_.boundary(n + 1)).is_zero():
        raise LinearError('boundary squares to nonzero: degree ' + str(n + 1))
    outgoing = complex_.divisors(n)
    incoming = complex_.divisors(n + 1)
    free_rank = complex_.rank(n) - len(outgoing) - len(incoming)
    return FGAbelianGroup(free_rank, tuple(d for d in incoming if d > 1))


def homology(complex_: ChainComplex, n: int, coeffs: int = COEFFS_Z,
             modulus: int = 0) -> FGAbelianGroup:
    """
    Return the homology of a chain complex in degree n.

    Parameters
    - complex_: the chain complex.
    - n: the degree.
    - coeffs: COEFFS_Z, COEFFS_Q or COEFFS_ZMOD.
    - modulus: the modulus m for COEFFS_ZMOD.

    Return: the group ker / im as FGAbelianGroup.  Over Q only the rank is
    meaningful; over Z/m the group is obtained by the universal coefficient
    theorem from the integral groups in degrees n and n - 1.

    Exception
    - LinearError('boundary squares to nonzero'): if the boundary composite
    through degree n is not zero.
    - LinearError('unsupported coefficients'): in case of an unknown ring.
    """
    integral = _integral_homology(complex_, n)
    if coeffs == COEFFS_Z:
        return integral
    if coeffs == COEFFS_Q:
        return FGAbelianGroup(integral.free_rank)
    if coeffs == COEFFS_ZMOD and modulus >= 2:
        lower = _integral_homology(complex_, n - 1)
        orders = [modulus] * integral.free_rank
        orders += [gcd(d, modulus) for d in integral.torsion + lower.torsion]
        return FGAbelianGroup.from_cyclic_orders([order for order in orders if order > 1])
    raise LinearError('unsupported coefficients')


def homology_groups(complex_: ChainComplex, up_to: int, coeffs: int = COEFFS_Z,
                    modulus: int = 0) -> List[FGAbelianGroup]:
    """Return the homology groups in degrees 0 .. up_to."""
    return [homology(complex_, n, coeffs, modulus) for n in range(up_to + 1)]


def induced_map_on_homology(chain_map: ChainMap, n: int) -> HomologyMap:
    """
    Return the map induced by a chain map on homology in degree n.

    Parameters
    - chain_map: the chain map f.
    - n: the degree.

    Return: HomologyMap with the matrix between Smith-presented groups and the
    isomorphism flag (groups isomorphic and the map onto).

    Exception
    - LinearError('not a chain map'): if f does not commute with the boundaries
    around degree n.
    """
    for degree in (n, n + 1):
        if not chain_map.commutes_in(degree):
            raise LinearError('not a chain map: degree ' + str(degree))
    if chain_map.is_identity():
        group = homology(chain_map.source, n)
        size = group.free_rank + len(group.torsion)
        return HomologyMap(n, group, group, IntMatrix.identity(size), True)
    source = HomologyPresentation(chain_map.source, n)
    target = HomologyPresentation(chain_map.target, n)
    component = chain_map.matrix(n)
    columns = [target.coordinates(component.apply(source.representative(index)))
               for index in range(len(source.orders))]
    matrix = IntMatrix.from_dense(columns, len(target.orders)).transpose() \
        if columns else IntMatrix.zeros(len(target.orders), 0)
    is_iso = False
    if source.group == target.group:
        relations = IntMatrix.diagonal(target.orders)
        onto = elementary_divisors(matrix.hstack(relations))
        is_iso = len(onto) == len(target.orders) and all(d == 1 for d in onto)
    _LOGGER.debug('induced map degree %d: %s -> %s iso=%s',
                  n, source.group, target.group, is_iso)
    return HomologyMap(n, source.group, target.group, matrix, is_iso)
