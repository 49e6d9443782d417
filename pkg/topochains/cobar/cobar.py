#Exact chain-level topology functions.
#
#License: MIT

"""
The cobar construction of a connected dg coalgebra.

The cobar construction is the tensor algebra on the desuspended positive part
of a connected coalgebra.  A simplex x of dimension n >= 1 gives a generator
[x] of degree n - 1 and the differential is the derivation

    D[x] = -[dx] + sum_{p+q=n, p,q>=1} (-1)^p [x'_p | x''_q]

where x'_p (x) x''_q is the (p, q) component of the coproduct.  Monomials are
tuples of generator labels, elements are dictionaries from monomials to
integer coefficients.  The module also extracts the degree 0 ring
presentation and the fundamental group presentation of a reduced simplicial
set.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from topochains.coalgebra import DgCoalgebra
from topochains.groups import GroupPresentation, free_reduce
from topochains.linear import ChainComplex, ChainMap, FGAbelianGroup, IntMatrix, homology
from topochains.simplicial import ReducedSimplicialSet
from topochains.utils import ValidationReport

__all__ = (
    'Monomial',
    'Polynomial',
    'CobarPresentation',
    'TruncatedDgAlgebra',
    'RingPresentation',
    'cobar',
    'cobar_chain_map',
    'h0_relations',
    'pi1_presentation',
    'h0_coproduct',
    'h0_counit',
    'format_polynomial',
    'DEFAULT_MAX_DEG',
    'DEFAULT_MAX_LEN',
    'CobarError'
)

_LOGGER = logging.getLogger(__name__)

DEFAULT_MAX_DEG: int = 4
DEFAULT_MAX_LEN: int = 6

_WINDOW_LIMIT: int = 200000

Monomial = Tuple[str, ...]
Polynomial = Dict[Monomial, int]


def _add_into(target: Polynomial, monomial: Monomial, coefficient: int) -> None:
    value = target.get(monomial, 0) + coefficient
    if value:
        target[monomial] = value
    else:
        target.pop(monomial, None)


def format_polynomial(poly: Polynomial) -> str:
    """Return a readable form such as '-2[a] - [a|a]'."""
    if not poly:
        return '0'
    parts = []
    for monomial in sorted(poly, key=lambda m: (len(m), m)):
        coefficient = poly[monomial]
        body = '[' + '|'.join(monomial) + ']' if monomial else '1'
        magnitude = abs(coefficient)
        text = body if magnitude == 1 and monomial else '{0}{1}'.format(
            magnitude, body if monomial else '')
        sign = '-' if coefficient < 0 else '+'
        parts.append((sign, text))
    first_sign, first_text = parts[0]
    result = ('-' if first_sign == '-' else '') + first_text
    for sign, text in parts[1:]:
        result += ' {0} {1}'.format(sign, text)
    return result


class CobarPresentation:
    """
    Class that implements the generators and generator differentials of the
    cobar construction.

    Methods
    - degree(): the degree of a generator or monomial.
    - generator_differential(): D on a generator.
    - differential(): D on any element (derivation extension).
    - check(): D^2 = 0 on every generator.

    Attributes
    - coalgebra: the coalgebra C.
    - generators: generator labels in order (by dimension, then basis order).
    - max_deg: generators of degree above this bound are not formed.
    """

    def __init__(self, coalgebra: DgCoalgebra, max_deg: int = DEFAULT_MAX_DEG) -> None:
        """
        Initialize the presentation.

        Exception
        - CobarError('coalgebra is not connected'): if rank C_0 != 1.
        """
        if not coalgebra.is_connected:
            raise CobarError('coalgebra is not connected')
        self.coalgebra = coalgebra
        self.max_deg = max_deg
        self._degree: Dict[str, int] = {}
        self.generators: List[str] = []
        for n in range(1, min(coalgebra.top, max_deg + 1) + 1):
            for label in coalgebra.basis(n):
                self._degree[label] = n - 1
                self.generators.append(label)
        self._order = {label: pos for pos, label in enumerate(self.generators)}
        self._cache: Dict[str, Polynomial] = {}

    def degree(self, item) -> int:
        """Return the degree of a generator label or of a monomial."""
        if isinstance(item, str):
            return self._degree[item]
        return sum(self._degree[label] for label in item)

    def sort_key(self, monomial: Monomial) -> Tuple[int, Tuple[int, ...]]:
        """Return the key ordering monomials by length, then by generator order."""
        return len(monomial), tuple(self._order[label] for label in monomial)

    def generator_differential(self, label: str) -> Polynomial:
        """
        Return D[x] for a generator x.

        Exception
        - CobarError('unknown generator'): if x is not a generator.
        """
        if label not in self._degree:
            raise CobarError('unknown generator: ' + label)
        if label in self._cache:
            return self._cache[label]
        coalgebra = self.coalgebra
        n = self._degree[label] + 1
        column = coalgebra.basis(n).index(label)
        result: Polynomial = {}
        if n >= 2:
            lower = coalgebra.basis(n - 1)
            for row, value in coalgebra.boundary(n).transpose().row(column).items():
                _add_into(result, (lower[row],), -value)
        for p in range(1, n):
            q = n - p
            left, right = coalgebra.basis(p), coalgebra.basis(q)
            sign = (-1) ** p
            for row, value in coalgebra.coproduct(p, q).transpose().row(column).items():
                i, j = divmod(row, len(right))
                _add_into(result, (left[i], right[j]), sign * value)
        self._cache[label] = result
        return result

    def differential(self, element: Mapping[Monomial, int]) -> Polynomial:
        """Return D applied to an element, with the Koszul sign of the letters passed."""
        result: Polynomial = {}
        for monomial, coefficient in element.items():
            passed = 0
            for pos, label in enumerate(monomial):
                sign = -1 if passed % 2 else 1
                prefix, suffix = monomial[:pos], monomial[pos + 1:]
                for inner, value in self.generator_differential(label).items():
                    _add_into(result, prefix + inner + suffix, sign * coefficient * value)
                passed += self._degree[label]
        return result

    def check(self) -> ValidationReport:
        """Return the generators x with D(D[x]) != 0; empty iff D^2 = 0."""
        report = ValidationReport()
        for label in self.generators:
            square = self.differential(self.generator_differential(label))
            if square:
                report.add('d-squared', label, format_polynomial(square))
        return report


class TruncatedDgAlgebra:
    """
    Class that implements a finite window of the cobar construction.

    The window in degree d holds the monomials of degree d and length at most
    max_len.  D may leave the window by raising the length; such terms are
    dropped from the matrices and the degree is flagged.

    Methods
    - basis(), basis_size(): monomial basis of a degree.
    - product(): concatenation of monomials.
    - differential(): D on elements (not truncated).
    - matrix(): the truncated differential in a degree.
    - leaks(): True if D leaves the window from a degree.
    - is_closed(): True if the window homology in a degree is exact.
    - check(): D^2 = 0 inside the window.
    - chain_complex(): the window as a ChainComplex.
    - homology(), window_homology(): homology in a degree.

    Attributes
    - presentation: the CobarPresentation.
    - max_deg, max_len: the window bounds.
    """

    def __init__(self, presentation: CobarPresentation, max_len: int = DEFAULT_MAX_LEN) -> None:
        """Initialize the window."""
        self.presentation = presentation
        self.max_deg = presentation.max_deg
        self.max_len = max_len
        self._bases: Dict[int, List[Monomial]] = {}
        self._matrices: Dict[int, Tuple[IntMatrix, bool]] = {}

    @property
    def generators(self) -> List[str]:
        """Return the generator labels."""
        return self.presentation.generators

    def degree(self, item) -> int:
        """Return the degree of a generator or monomial."""
        return self.presentation.degree(item)

    def product(self, left: Monomial, right: Monomial) -> Monomial:
        """Return the product of two monomials."""
        return tuple(left) + tuple(right)

    def differential(self, element: Mapping[Monomial, int]) -> Polynomial:
        """Return D applied to an element."""
        return self.presentation.differential(element)

    def basis_size(self, d: int) -> int:
        """Return the number of monomials of degree d and length at most max_len."""
        if d < 0 or d > self.max_deg:
            return 0
        counts = {}
        for label in self.generators:
            degree = self.degree(label)
            counts[degree] = counts.get(degree, 0) + 1

        @lru_cache(maxsize=None)
        def ways(remaining: int, length: int) -> int:
            total = 1 if remaining == 0 else 0
            if length == 0:
                return total
            for degree, count in counts.items():
                if degree <= remaining:
                    total += count * ways(remaining - degree, length - 1)
            return total

        return ways(d, self.max_len)

    def _enumerate(self, remaining: int, length: int) -> Iterator[Monomial]:
        if remaining == 0:
            yield ()
        if length == 0:
            return
        for label in self.generators:
            degree = self.degree(label)
            if degree <= remaining:
                for tail in self._enumerate(remaining - degree, length - 1):
                    yield (label,) + tail

    def basis(self, d: int) -> List[Monomial]:
        """
        Return the monomial basis in degree d, ordered by length then letters.

        Exception
        - CobarError('truncation window too large'): if the basis exceeds the
        enumeration limit.
        """
        if d not in self._bases:
            if d < 0 or d > self.max_deg:
                self._bases[d] = []
            else:
                size = self.basis_size(d)
                if size > _WINDOW_LIMIT:
                    raise CobarError('truncation window too large: degree {0} has {1} '
                                     'monomials'.format(d, size))
                monomials = set(self._enumerate(d, self.max_len))
                self._bases[d] = sorted(monomials, key=self.presentation.sort_key)
        return self._bases[d]

    def index(self, d: int) -> Dict[Monomial, int]:
        """Return the positions of the basis monomials of degree d."""
        return {monomial: pos for pos, monomial in enumerate(self.basis(d))}

    def _build(self, d: int) -> Tuple[IntMatrix, bool]:
        if d not in self._matrices:
            source = self.basis(d)
            target = self.index(d - 1)
            entries = []
            leaked = False
            for col, monomial in enumerate(source):
                for image, value in self.differential({monomial: 1}).items():
                    row = target.get(image)
                    if row is None:
                        leaked = True
                    else:
                        entries.append((row, col, value))
            matrix = IntMatrix.from_entries(len(target), len(source), entries)
            self._matrices[d] = (matrix, leaked)
        return self._matrices[d]

    def matrix(self, d: int) -> IntMatrix:
        """Return the truncated differential from degree d to degree d - 1."""
        return self._build(d)[0]

    def leaks(self, d: int) -> bool:
        """Return True if D sends a window monomial of degree d outside the window."""
        return self._build(d)[1]

    def is_closed(self, d: int) -> bool:
        """
        Return True if the window homology in degree d is the true homology.

        This holds when every generator has positive degree, d + 1 <= max_deg
        and max_deg <= max_len: then the window contains every monomial of
        degree at most max_deg.
        """
        positive = all(self.degree(label) > 0 for label in self.generators)
        return (positive and 0 <= d and d + 1 <= self.max_deg
                and self.max_deg <= self.max_len)

    def check(self, d: int) -> ValidationReport:
        """Return the window monomials of degree d with D^2 != 0 while D stays inside."""
        report = ValidationReport()
        lower = self.index(d - 1)
        for monomial in self.basis(d):
            image = self.differential({monomial: 1})
            if any(term not in lower for term in image):
                continue
            square = self.differential(image)
            if square:
                report.add('d-squared', '|'.join(monomial), format_polynomial(square))
        return report

    def chain_complex(self, top: int = None) -> ChainComplex:
        """Return the window as a chain complex in degrees 0 .. top."""
        top = self.max_deg if top is None else min(top, self.max_deg)
        ranks = [len(self.basis(d)) for d in range(top + 1)]
        return ChainComplex(ranks, {d: self.matrix(d) for d in range(1, top + 1)})

    def window_homology(self, d: int) -> FGAbelianGroup:
        """Return the homology of the window complex in degree d."""
        return homology(self.chain_complex(min(d + 1, self.max_deg)), d)

    def homology(self, d: int) -> FGAbelianGroup:
        """
        Return the homology of the cobar construction in degree d.

        Exception
        - CobarError('truncation window not closed'): if the window does not
        determine the homology in degree d.
        """
        if not self.is_closed(d):
            raise CobarError('truncation window not closed: degree ' + str(d))
        return self.window_homology(d)


def cobar(coalgebra: DgCoalgebra, max_deg: int = DEFAULT_MAX_DEG,
          max_len: int = DEFAULT_MAX_LEN) -> TruncatedDgAlgebra:
    """
    Return the truncated cobar construction of a connected coalgebra.

    Parameters
    - coalgebra: the connected dg coalgebra C.
    - max_deg: the degree bound N.
    - max_len: the word length bound L.

    Return: TruncatedDgAlgebra with the monomial bases and differentials.

    Exception
    - CobarError('coalgebra is not connected'): if rank C_0 != 1.
    - CobarError('invalid truncation'): if a bound is negative.
    """
    if max_deg < 0 or max_len < 0:
        raise CobarError('invalid truncation')
    algebra = TruncatedDgAlgebra(CobarPresentation(coalgebra, max_deg), max_len)
    _LOGGER.debug('cobar window with %d generators, degree <= %d, length <= %d',
                  len(algebra.generators), max_deg, max_len)
    return algebra


def cobar_chain_map(chain_map: ChainMap, source: TruncatedDgAlgebra,
                    target: TruncatedDgAlgebra, top: int = None) -> ChainMap:
    """
    Return the map induced by a coalgebra map on the cobar windows.

    A generator [x] goes to the sum of [y] over the terms of f(x); monomials
    go to products.  The map preserves word length, so windows map to windows.
    """
    top = min(source.max_deg, target.max_deg) if top is None else top
    source_coalgebra = source.presentation.coalgebra
    target_coalgebra = target.presentation.coalgebra
    images: Dict[str, Polynomial] = {}
    for label in source.generators:
        n = source.degree(label) + 1
        column = source_coalgebra.basis(n).index(label)
        labels = target_coalgebra.basis(n)
        images[label] = {(labels[row],): value for row, value in
                         chain_map.matrix(n).transpose().row(column).items()}
    matrices = {}
    for d in range(top + 1):
        target_index = target.index(d)
        entries = []
        for col, monomial in enumerate(source.basis(d)):
            image: Polynomial = {(): 1}
            for label in monomial:
                step: Polynomial = {}
                for left, a in image.items():
                    for right, b in images[label].items():
                        _add_into(step, left + right, a * b)
                image = step
            for term, value in image.items():
                if term in target_index:
                    entries.append((target_index[term], col, value))
        matrices[d] = IntMatrix.from_entries(len(target_index), len(source.basis(d)), entries)
    return ChainMap(source.chain_complex(top), target.chain_complex(top), matrices)


class RingPresentation:
    """
    The degree 0 part of the cobar homology, by generators and relations.

    Attributes
    - generators: degree 0 generators, one per nondegenerate 1-simplex.
    - relations: one polynomial per nondegenerate 2-simplex.
    - sources: the 2-simplex of each relation.
    """

    def __init__(self, generators: Sequence[str], relations: Sequence[Polynomial],
                 sources: Sequence[str] = ()) -> None:
        self.generators = tuple(generators)
        self.relations = [dict(relation) for relation in relations]
        self.sources = tuple(sources)

    def to_json(self) -> dict:
        """Return the JSON form with relations as (coefficient, word) pairs."""
        return {
            'generators': list(self.generators),
            'relations': [[[coefficient, list(monomial)]
                           for monomial, coefficient in sorted(relation.items())]
                          for relation in self.relations],
        }


def h0_relations(coalgebra: DgCoalgebra) -> RingPresentation:
    """
    Return the presentation of the degree 0 cobar homology.

    Parameters
    - coalgebra: chains of a reduced simplicial set.

    Return: generators x_e per 1-simplex e and per 2-simplex t the relation
    D[t] = x_{d1 t} - x_{d0 t} - x_{d2 t} - x_{d2 t} x_{d0 t}, degenerate faces
    contributing 0.
    """
    presentation = CobarPresentation(coalgebra, 1)
    generators = coalgebra.basis(1)
    triangles = coalgebra.basis(2) if coalgebra.top >= 2 else []
    relations = [presentation.generator_differential(label) for label in triangles]
    return RingPresentation(generators, relations, triangles)


def pi1_presentation(space: ReducedSimplicialSet) -> GroupPresentation:
    """
    Return the edge-path presentation of the fundamental group.

    Parameters
    - space: the reduced simplicial set.

    Return: generators the nondegenerate 1-simplices and for each
    nondegenerate 2-simplex t the relator g_{d2 t} g_{d0 t} g_{d1 t}^-1,
    degenerate faces omitted; relators reducing to the empty word are dropped.
    """
    relators = []
    for triangle in space.simplices(2):
        face0, face1, face2 = space.faces_of(triangle)
        word = []
        if not face2.is_degenerate:
            word.append((face2.target, 1))
        if not face0.is_degenerate:
            word.append((face0.target, 1))
        if not face1.is_degenerate:
            word.append((face1.target, -1))
        word = free_reduce(word)
        if word:
            relators.append(word)
    return GroupPresentation(space.simplices(1), relators)


TensorElement = Dict[Tuple[Monomial, Monomial], int]


def h0_coproduct(element: Mapping[Monomial, int]) -> TensorElement:
    """
    Return the coproduct of a degree 0 element.

    The coproduct is multiplicative with
    D([x]) = [x] (x) [x] + [x] (x) 1 + 1 (x) [x] on generators and 1 (x) 1 on 1.
    """
    result: TensorElement = {}
    for monomial, coefficient in element.items():
        current: TensorElement = {((), ()): coefficient}
        for label in monomial:
            step: TensorElement = {}
            for (left, right), value in current.items():
                for new_left, new_right in (((label,), (label,)), ((label,), ()),
                                            ((), (label,))):
                    key = (left + new_left, right + new_right)
                    step[key] = step.get(key, 0) + value
            current = step
        for key, value in current.items():
            result[key] = result.get(key, 0) + value
    return {key: value for key, value in result.items() if value}


def h0_counit(element: Mapping[Monomial, int]) -> int:
    """Return the counit: 1 on the unit, 0 on every nonempty monomial."""
    return element.get((), 0)


class CobarError(Exception):
    """
    The class that implements exceptions of the cobar construction.

    Exceptions
    - coalgebra is not connected.
    - unknown generator.
    - unknown letter.
    - truncation window not closed.
    - truncation window too large.
    - group is not certified finite.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
