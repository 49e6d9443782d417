#Exact chain-level topology functions.
#
#License: MIT

"""
Group rings and the map from degree 0 cobar elements to them.

GroupRingElement lives in the integral group ring of a free group, with
freely reduced words as support; GroupRing is the explicit Hopf algebra Z[G]
of a finite group given by a complete coset table.
"""
import logging
from typing import Dict, Iterable, List, Mapping, Tuple, Union

from topochains.groups import CosetTable, Exhausted, GroupPresentation, Word
from topochains.groups import DEFAULT_TC_BUDGET, format_word, free_reduce, todd_coxeter
from topochains.utils import ValidationReport
from .cobar import CobarError, Monomial

__all__ = (
    'GroupRingElement',
    'FiniteGroup',
    'GroupRing',
    'psi',
    'psi_polynomial',
    'group_ring',
    'group_likes'
)

_LOGGER = logging.getLogger(__name__)


class GroupRingElement:
    """
    Class that implements an element of the integral group ring of a free group.

    Methods
    - identity(), generator(): the elements e and g.
    - evaluate(): the image in Z[G] for a complete coset table.
    - is_zero(): True for the zero element.

    Attributes
    - terms: the map from reduced words to nonzero coefficients.
    """

    def __init__(self, terms: Mapping[Iterable, int] = None) -> None:
        self.terms: Dict[Word, int] = {}
        for word, coefficient in (terms or {}).items():
            self._add(free_reduce(word), coefficient)

    def _add(self, word: Word, coefficient: int) -> None:
        value = self.terms.get(word, 0) + coefficient
        if value:
            self.terms[word] = value
        else:
            self.terms.pop(word, None)

    @classmethod
    def identity(cls) -> 'GroupRingElement':
        """Return the unit e."""
        return cls({(): 1})

    @classmethod
    def generator(cls, name: str, exp: int = 1) -> 'GroupRingElement':
        """Return the group element of a letter."""
        return cls({((name, exp),): 1})

    def is_zero(self) -> bool:
        """Return True if every coefficient vanishes."""
        return not self.terms

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        result = GroupRingElement(self.terms)
        for word, coefficient in other.terms.items():
            result._add(word, coefficient)
        return result

    def __neg__(self) -> 'GroupRingElement':
        return GroupRingElement({word: -value for word, value in self.terms.items()})

    def __sub__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        return self + (-other)

    def __mul__(self, other: Union['GroupRingElement', int]) -> 'GroupRingElement':
        if isinstance(other, int):
            return GroupRingElement({word: other * value for word, value in self.terms.items()})
        result = GroupRingElement()
        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._add(free_reduce(left + right), a * b)
        return result

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join('{0}*{1}'.format(value, format_word(word) or 'e')
                          for word, value in sorted(self.terms.items()))

    def evaluate(self, table: CosetTable) -> 'GroupRingElement':
        """
        Return the image in Z[G] for the group enumerated by a table.

        Each word is replaced by the shortest representative of its coset, so
        two elements are equal in Z[G] iff their images are equal.

        Exception
        - GroupError('incomplete coset table'): if the table is not complete.
        """
        result = GroupRingElement()
        for word, coefficient in self.terms.items():
            result._add(table.representative(table.evaluate(word)), coefficient)
        return result

    def to_json(self) -> list:
        """Return the JSON form as (coefficient, word) pairs."""
        return [[value, format_word(word)] for word, value in sorted(self.terms.items())]


def psi(monomial: Monomial, presentation: GroupPresentation = None) -> GroupRingElement:
    """
    Return the image of a degree 0 monomial in the group ring.

    Parameters
    - monomial: the letters, 1-simplex labels.
    - presentation: the edge-path presentation the letters belong to.

    Return: the product of g_x - e over the letters; the empty monomial goes
    to e.

    Exception
    - CobarError('unknown letter'): if a letter is not a generator.
    """
    result = GroupRingElement.identity()
    unit = GroupRingElement.identity()
    for label in monomial:
        if presentation is not None and label not in presentation.generators:
            raise CobarError('unknown letter: ' + label)
        result = result * (GroupRingElement.generator(label) - unit)
    return result


def psi_polynomial(element: Mapping[Monomial, int],
                   presentation: GroupPresentation = None) -> GroupRingElement:
    """Return the image of a degree 0 element, extended linearly."""
    result = GroupRingElement()
    for monomial, coefficient in element.items():
        result = result + psi(monomial, presentation) * coefficient
    return result


class FiniteGroup:
    """
    Class that implements a finite group by its multiplication table.

    The elements are the cosets 0 .. n-1 of a complete coset table over the
    trivial subgroup, 0 being the identity.

    Methods
    - multiply(), inverse(): the group operations.
    - word(): a shortest word for an element.
    """

    def __init__(self, table: CosetTable) -> None:
        """
        Initialize the group.

        Exception
        - GroupError('incomplete coset table'): if the table is not complete.
        """
        self.table = table
        self.order = table.size
        self._words = [table.representative(c) for c in range(self.order)]
        self._product = [[table.evaluate(self._words[b], a) for b in range(self.order)]
                         for a in range(self.order)]
        self._inverse = [row.index(0) for row in self._product]

    identity: int = 0

    def multiply(self, a: int, b: int) -> int:
        """Return the product a * b."""
        return self._product[a][b]

    def inverse(self, a: int) -> int:
        """Return the inverse of a."""
        return self._inverse[a]

    def word(self, a: int) -> Word:
        """Return a shortest word for a."""
        return self._words[a]


RingElement = Dict[int, int]


def _clean(element: Mapping) -> dict:
    return {key: value for key, value in element.items() if value}


class GroupRing:
    """
    Class that implements the Hopf algebra Z[G] of a finite group.

    Elements are dictionaries from group elements to coefficients.

    Methods
    - multiply(), unit(): the algebra structure.
    - coproduct(), counit(): g -> g (x) g and g -> 1.
    - antipode(): g -> g^-1.
    - check(): the Hopf algebra axioms on the basis.
    - is_group_like(): counit 1 and coproduct x (x) x.
    - group_likes(): the group-like elements.
    """

    def __init__(self, group: FiniteGroup) -> None:
        self.group = group

    @property
    def order(self) -> int:
        """Return the order of G."""
        return self.group.order

    def basis_element(self, g: int) -> RingElement:
        """Return the basis element of g."""
        return {g: 1}

    def unit(self) -> RingElement:
        """Return the unit e."""
        return {self.group.identity: 1}

    def multiply(self, x: Mapping[int, int], y: Mapping[int, int]) -> RingElement:
        """Return the product x * y."""
        result: Dict[int, int] = {}
        for a, u in x.items():
            for b, v in y.items():
                c = self.group.multiply(a, b)
                result[c] = result.get(c, 0) + u * v
        return _clean(result)

    def coproduct(self, x: Mapping[int, int]) -> Dict[Tuple[int, int], int]:
        """Return the coproduct, g -> g (x) g extended linearly."""
        return _clean({(g, g): value for g, value in x.items()})

    def counit(self, x: Mapping[int, int]) -> int:
        """Return the counit, the sum of the coefficients."""
        return sum(x.values())

    def antipode(self, x: Mapping[int, int]) -> RingElement:
        """Return the antipode, g -> g^-1 extended linearly."""
        return _clean({self.group.inverse(g): value for g, value in x.items()})

    def tensor_square(self, x: Mapping[int, int]) -> Dict[Tuple[int, int], int]:
        """Return x (x) x."""
        return _clean({(g, h): u * v for g, u in x.items() for h, v in x.items()})

    def check(self) -> ValidationReport:
        """
        Check the Hopf algebra axioms on the basis.

        Return: the report of failed counit, coassociativity and antipode
        conditions (mu(s (x) id)D = eta eps = mu(id (x) s)D); empty iff all hold.
        """
        report = ValidationReport()
        unit = self.unit()
        for g in range(self.order):
            element = self.basis_element(g)
            coproduct = self.coproduct(element)
            left = _clean({a: v * self.counit({b: 1}) for (a, b), v in coproduct.items()})
            right = _clean({b: v * self.counit({a: 1}) for (a, b), v in coproduct.items()})
            if left != element or right != element:
                report.add('counit', 'element {0}'.format(g))
            first = _clean({(a, b, c): v for (a, bc), v in coproduct.items()
                            for (b, c), _ in self.coproduct({bc: 1}).items()})
            second = _clean({(a, b, c): v for (ab, c), v in coproduct.items()
                             for (a, b), _ in self.coproduct({ab: 1}).items()})
            if first != second:
                report.add('coassociativity', 'element {0}'.format(g))
            expected = {k: self.counit(element) * v for k, v in unit.items()}
            for side in ('left', 'right'):
                total: Dict[int, int] = {}
                for (a, b), v in coproduct.items():
                    if side == 'left':
                        term = self.multiply(self.antipode({a: v}), {b: 1})
                    else:
                        term = self.multiply({a: v}, self.antipode({b: 1}))
                    for k, w in term.items():
                        total[k] = total.get(k, 0) + w
                if _clean(total) != expected:
                    report.add('antipode', 'element {0}'.format(g), side)
        return report

    def is_group_like(self, x: Mapping[int, int]) -> bool:
        """Return True if counit(x) = 1 and D(x) = x (x) x."""
        x = _clean(x)
        return self.counit(x) == 1 and self.coproduct(x) == self.tensor_square(x)

    def group_likes(self) -> List[RingElement]:
        """
        Return the group-like elements, solving counit(x) = 1 and D(x) = x (x) x.

        Writing x = sum a_g g, the coproduct condition reads a_g a_g = a_g on
        the diagonal and a_g a_h = 0 off it, so each a_g lies in {0, 1} and
        the support has at most one element; the counit fixes it to exactly
        one.
        """
        solutions = []
        for g in range(self.order):
            x = self.basis_element(g)
            if self.is_group_like(x):
                solutions.append(x)
        return solutions


def group_ring(presentation: GroupPresentation,
               max_cosets: int = DEFAULT_TC_BUDGET) -> GroupRing:
    """
    Return the group ring of a presented group certified finite.

    Exception
    - CobarError('group is not certified finite'): if coset enumeration
    exhausts its bound.
    """
    table = todd_coxeter(presentation, max_cosets)
    if isinstance(table, Exhausted):
        raise CobarError('group is not certified finite: coset bound {0}'.format(max_cosets))
    _LOGGER.debug('group ring of order %d', table.size)
    return GroupRing(FiniteGroup(table))


def group_likes(ring: Union[GroupRing, GroupPresentation],
                max_cosets: int = DEFAULT_TC_BUDGET) -> List[RingElement]:
    """
    Return the group-like elements of Z[G].

    Parameters
    - ring: a GroupRing, or a presentation of a finite group.

    Return: list of elements, exactly the basis G for a group ring.

    Exception
    - CobarError('group is not certified finite'): if G is not certified finite.
    """
    if isinstance(ring, GroupPresentation):
        ring = group_ring(ring, max_cosets)
    return ring.group_likes()
