#Exact chain-level topology functions.
#
#License: MIT

"""
Bar constructions and the comparison map rho.

The bar construction of an augmented dg algebra A has the words
{a_1|...|a_k} of augmentation ideal elements, of degree sum (|a_i| + 1), and
the differential D = -d_1 + d_2 with

    d_1{a_1|...|a_n} = sum_i (-1)^e_(i-1) {a_1|...|d a_i|...|a_n}
    d_2{a_1|...|a_n} = sum_i (-1)^e_i {a_1|...|a_i a_(i+1)|...|a_n}

where e_i = sum_(j<=i) (|a_j| + 1).  Windows bound the word length and the
degree; degrees where the window misses words or where the differential
leaves it are reported as not closed.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, Hashable, Iterator, List, Mapping, Sequence, Set, Tuple, Union

from topochains.cobar import DEFAULT_MAX_LEN, TruncatedDgAlgebra, cobar
from topochains.coalgebra import DgCoalgebra
from topochains.groups import PiModule
from topochains.linear import ChainComplex, ChainMap, FGAbelianGroup, IntMatrix, homology
from topochains.simplicial import DegenerateRef
from topochains.utils import ValidationReport
from .twisted_tensor import TwistedError, twisted_tensor

__all__ = (
    'FiniteDgAlgebra',
    'exterior_algebra',
    'ground_ring',
    'BarCoalgebra',
    'TruncatedComplex',
    'PiModuleAction',
    'AugmentationAction',
    'bar',
    'one_sided_bar',
    'rho'
)

_LOGGER = logging.getLogger(__name__)

_WINDOW_LIMIT: int = 200000

Key = Hashable
BarWord = Tuple[Key, ...]
Element = Dict[Key, int]


def _add_into(target: dict, key, value: int) -> None:
    total = target.get(key, 0) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class FiniteDgAlgebra:
    """
    Class that implements an augmented dg algebra given by explicit tables.

    The augmentation sends the unit to 1 and every other basis element to 0,
    so the other basis elements span the augmentation ideal.

    Methods
    - reduced_basis(): augmentation ideal basis in a degree.
    - product(), differential(): the structure maps on basis elements.
    - check(): associativity, Leibniz rule and d^2 = 0.
    """

    def __init__(self, basis: Mapping[int, Sequence[str]], unit: str,
                 products: Mapping[Tuple[str, str], Mapping[str, int]] = None,
                 differential: Mapping[str, Mapping[str, int]] = None) -> None:
        """
        Initialize the algebra.

        Parameters
        - basis: basis names per degree.
        - unit: the name of the unit, of degree 0.
        - products: x * y for pairs of non-unit basis elements; missing pairs
        multiply to 0.
        - differential: d x for basis elements; missing entries are 0.

        Exception
        - TwistedError('unknown basis element'): if a table mentions an unknown name.
        - TwistedError('algebra is not augmented'): if the unit is missing or a
        product or differential of ideal elements has a unit component.
        """
        self._degree: Dict[str, int] = {}
        for degree, names in basis.items():
            for name in names:
                self._degree[name] = degree
        if self._degree.get(unit) != 0:
            raise TwistedError('algebra is not augmented: no unit in degree 0')
        self.unit = unit
        self._basis = {degree: [name for name in names if name != unit]
                       for degree, names in basis.items()}
        self._products = {key: dict(value) for key, value in (products or {}).items()}
        self._differential = {key: dict(value) for key, value in (differential or {}).items()}
        for (x, y), value in self._products.items():
            self._known(x, y, *value)
            if unit in (x, y):
                raise TwistedError('algebra is not augmented: product with the unit is implied')
            if value.get(unit):
                raise TwistedError('algebra is not augmented: product has a unit component')
        for x, value in self._differential.items():
            self._known(x, *value)
            if value.get(unit) or (x == unit and value):
                raise TwistedError('algebra is not augmented: differential meets the unit')

    def _known(self, *names: str) -> None:
        for name in names:
            if name not in self._degree:
                raise TwistedError('unknown basis element: ' + str(name))

    def degree(self, key: str) -> int:
        """Return the degree of a basis element."""
        return self._degree[key]

    def reduced_basis(self, d: int) -> List[str]:
        """Return the augmentation ideal basis in degree d."""
        return list(self._basis.get(d, []))

    def product(self, x: str, y: str) -> Element:
        """Return x * y for ideal elements."""
        return dict(self._products.get((x, y), {}))

    def differential(self, x: str) -> Element:
        """Return d x."""
        return dict(self._differential.get(x, {}))

    def is_complete(self, d: int) -> bool:
        """Return True: the basis is given in full."""
        return True

    def min_degree(self) -> int:
        """Return the lowest degree of the augmentation ideal."""
        degrees = [d for d, names in self._basis.items() if names]
        return min(degrees) if degrees else 0

    def check(self) -> ValidationReport:
        """Return the failures of associativity, the Leibniz rule and d^2 = 0."""
        report = ValidationReport()
        names = [name for names in self._basis.values() for name in names]

        def multiply(left: Element, right: Element) -> Element:
            result: Element = {}
            for x, a in left.items():
                for y, b in right.items():
                    for z, c in self.product(x, y).items():
                        _add_into(result, z, a * b * c)
            return result

        def differentiate(element: Element) -> Element:
            result: Element = {}
            for x, a in element.items():
                for y, b in self.differential(x).items():
                    _add_into(result, y, a * b)
            return result

        for x in names:
            if differentiate(self.differential(x)):
                report.add('d-squared', x)
            for y in names:
                product = self.product(x, y)
                left = differentiate(product)
                right = multiply(self.differential(x), {y: 1})
                sign = (-1) ** self.degree(x)
                for z, c in multiply({x: 1}, self.differential(y)).items():
                    _add_into(right, z, sign * c)
                if left != right:
                    report.add('leibniz', '{0} {1}'.format(x, y))
                for z in names:
                    if multiply(product, {z: 1}) != multiply({x: 1}, self.product(y, z)):
                        report.add('associativity', '{0} {1} {2}'.format(x, y, z))
        return report


def exterior_algebra(name: str = 'x', degree: int = 1) -> FiniteDgAlgebra:
    """Return the exterior algebra on one generator with zero differential."""
    return FiniteDgAlgebra({0: ['1'], degree: [name]}, '1')


def ground_ring() -> FiniteDgAlgebra:
    """Return Z as an augmented algebra with zero augmentation ideal."""
    return FiniteDgAlgebra({0: ['1']}, '1')


class _CobarView:
    """Augmentation ideal of a cobar window: the nonempty monomials."""

    def __init__(self, algebra: TruncatedDgAlgebra) -> None:
        self.algebra = algebra

    def degree(self, key) -> int:
        return self.algebra.degree(key)

    def reduced_basis(self, d: int) -> list:
        return [monomial for monomial in self.algebra.basis(d) if monomial]

    def product(self, x, y) -> Element:
        return {self.algebra.product(x, y): 1}

    def differential(self, x) -> Element:
        return self.algebra.differential({x: 1})

    def is_complete(self, d: int) -> bool:
        algebra = self.algebra
        positive = all(algebra.degree(label) > 0 for label in algebra.generators)
        return positive and d <= algebra.max_deg and d <= algebra.max_len

    def min_degree(self) -> int:
        degrees = [self.algebra.degree(label) for label in self.algebra.generators]
        return min(degrees) if degrees else 0


def _view(algebra):
    if isinstance(algebra, TruncatedDgAlgebra):
        return _CobarView(algebra)
    if isinstance(algebra, FiniteDgAlgebra):
        return algebra
    raise TwistedError('algebra is not augmented: ' + type(algebra).__name__)


class TruncatedComplex:
    """
    Class that implements a finite window of an infinite chain complex.

    Methods
    - window_homology(): homology of the window complex.
    - is_closed(): True if the window homology is the true homology.
    - homology(): the homology in a closed degree.

    Attributes
    - complex: the window as a ChainComplex.
    - leaks: degrees from which the differential leaves the window.
    - complete: degrees where the window holds every basis element.
    """

    def __init__(self, complex_: ChainComplex, leaks: Set[int], complete: Set[int]) -> None:
        self.complex = complex_
        self.leaks = set(leaks)
        self.complete = set(complete)

    def window_homology(self, n: int) -> FGAbelianGroup:
        """Return the homology of the window complex in degree n."""
        return homology(self.complex, n)

    def is_closed(self, n: int) -> bool:
        """Return True if degrees n - 1, n and n + 1 are complete and nothing leaks."""
        degrees = [d for d in (n - 1, n, n + 1) if d >= 0]
        return (all(d in self.complete for d in degrees)
                and not any(d in self.leaks for d in degrees))

    def homology(self, n: int) -> FGAbelianGroup:
        """
        Return the homology in degree n.

        Exception
        - TwistedError('truncation window not closed'): if the degree is not closed.
        """
        if not self.is_closed(n):
            raise TwistedError('truncation window not closed: degree ' + str(n))
        return self.window_homology(n)


class BarCoalgebra:
    """
    Class that implements a window of the bar construction.

    Methods
    - basis(): the words of a degree.
    - differential(): D = -d_1 + d_2 on a word.
    - coproduct(): the splitting of a word.
    - matrix(): the differential restricted to the window.
    - complex(): the window as a TruncatedComplex.
    - check(): D^2 = 0 and coassociativity inside the window.

    Attributes
    - algebra: the augmented algebra.
    - max_words, max_deg: the window bounds.
    """

    def __init__(self, algebra, max_words: int, max_deg: int) -> None:
        self.algebra = algebra
        self._view = _view(algebra)
        self.max_words = max_words
        self.max_deg = max_deg
        self._bases: Dict[int, List[BarWord]] = {}

    def letter_degree(self, key: Key) -> int:
        """Return the shifted degree |a| + 1 of a letter."""
        return self._view.degree(key) + 1

    def degree(self, word: BarWord) -> int:
        """Return the degree of a word."""
        return sum(self.letter_degree(key) for key in word)

    def _words(self, remaining: int, length: int) -> Iterator[BarWord]:
        if remaining == 0:
            yield ()
        if length == 0:
            return
        for d in range(remaining):
            for key in self._view.reduced_basis(d):
                for tail in self._words(remaining - d - 1, length - 1):
                    yield (key,) + tail

    def basis_size(self, n: int) -> int:
        """Return the number of words of degree n in the window."""
        if n < 0 or n > self.max_deg:
            return 0
        counts = {d + 1: len(self._view.reduced_basis(d)) for d in range(n)}

        @lru_cache(maxsize=None)
        def ways(remaining: int, length: int) -> int:
            total = 1 if remaining == 0 else 0
            if length == 0:
                return total
            for degree, count in counts.items():
                if count and degree <= remaining:
                    total += count * ways(remaining - degree, length - 1)
            return total

        return ways(n, self.max_words)

    def basis(self, n: int) -> List[BarWord]:
        """
        Return the words of degree n in the window, shortest first.

        Exception
        - TwistedError('truncation window too large'): if the words exceed the
        enumeration limit.
        """
        if n not in self._bases:
            if n < 0 or n > self.max_deg:
                self._bases[n] = []
            else:
                size = self.basis_size(n)
                if size > _WINDOW_LIMIT:
                    raise TwistedError('truncation window too large: degree {0} has {1} '
                                       'words'.format(n, size))
                words = list(dict.fromkeys(self._words(n, self.max_words)))
                self._bases[n] = sorted(words, key=len)
        return self._bases[n]

    def index(self, n: int) -> Dict[BarWord, int]:
        """Return the positions of the words of degree n."""
        return {word: pos for pos, word in enumerate(self.basis(n))}

    def _eps(self, word: BarWord) -> List[int]:
        eps = [0]
        for key in word:
            eps.append(eps[-1] + self.letter_degree(key))
        return eps

    def differential(self, word: BarWord) -> Dict[BarWord, int]:
        """Return D{a_1|...|a_n} = -d_1 + d_2."""
        result: Dict[BarWord, int] = {}
        eps = self._eps(word)
        for i, key in enumerate(word):
            sign = -(-1) ** eps[i]
            for image, value in self._view.differential(key).items():
                _add_into(result, word[:i] + (image,) + word[i + 1:], sign * value)
        for i in range(len(word) - 1):
            sign = (-1) ** eps[i + 1]
            for image, value in self._view.product(word[i], word[i + 1]).items():
                _add_into(result, word[:i] + (image,) + word[i + 2:], sign * value)
        return result

    def coproduct(self, word: BarWord) -> Dict[Tuple[BarWord, BarWord], int]:
        """Return the sum of {a_1|...|a_i} (x) {a_(i+1)|...|a_n} over all splittings."""
        return {(word[:i], word[i:]): 1 for i in range(len(word) + 1)}

    def is_complete(self, n: int) -> bool:
        """Return True if the window holds every word of degree n."""
        if n < 0:
            return True
        if n > self.max_deg:
            return False
        longest = n // (self._view.min_degree() + 1)
        return longest <= self.max_words and all(
            self._view.is_complete(d) for d in range(n))

    def matrix(self, n: int) -> Tuple[IntMatrix, bool]:
        """Return the window differential from degree n and whether it leaks."""
        target = self.index(n - 1)
        entries = []
        leaked = False
        for col, word in enumerate(self.basis(n)):
            for image, value in self.differential(word).items():
                if image in target:
                    entries.append((target[image], col, value))
                else:
                    leaked = True
        return IntMatrix.from_entries(len(target), len(self.basis(n)), entries), leaked

    def complex(self) -> TruncatedComplex:
        """Return the window complex in degrees 0 .. max_deg."""
        ranks = [len(self.basis(n)) for n in range(self.max_deg + 1)]
        boundaries, leaks = {}, set()
        for n in range(1, self.max_deg + 1):
            boundaries[n], leaked = self.matrix(n)
            if leaked:
                leaks.add(n)
        complete = {n for n in range(self.max_deg + 1) if self.is_complete(n)}
        return TruncatedComplex(ChainComplex(ranks, boundaries), leaks, complete)

    def check(self) -> ValidationReport:
        """Return the window words where D^2 != 0 or the coproduct is not coassociative."""
        report = ValidationReport()
        for n in range(self.max_deg + 1):
            for word in self.basis(n):
                square: Dict[BarWord, int] = {}
                for image, value in self.differential(word).items():
                    for inner, coefficient in self.differential(image).items():
                        _add_into(square, inner, value * coefficient)
                if square:
                    report.add('d-squared', 'degree {0}'.format(n), repr(word))
                left = {(a, b, c) for (ab, c) in self.coproduct(word)
                        for (a, b) in self.coproduct(ab)}
                right = {(a, b, c) for (a, bc) in self.coproduct(word)
                         for (b, c) in self.coproduct(bc)}
                if left != right:
                    report.add('coassociativity', 'degree {0}'.format(n), repr(word))
        return report


def bar(algebra: Union[TruncatedDgAlgebra, FiniteDgAlgebra],
        max_words: int = DEFAULT_MAX_LEN, max_deg: int = None) -> BarCoalgebra:
    """
    Return the bar construction of an augmented algebra.

    Parameters
    - algebra: a cobar window or a FiniteDgAlgebra.
    - max_words: the word length bound.
    - max_deg: the degree bound, max_words by default.

    Exception
    - TwistedError('algebra is not augmented'): for any other algebra.
    - TwistedError('invalid truncation'): if a bound is negative.
    """
    max_deg = max_words if max_deg is None else max_deg
    if max_words < 0 or max_deg < 0:
        raise TwistedError('invalid truncation')
    return BarCoalgebra(algebra, max_words, max_deg)


class PiModuleAction:
    """
    Action of a cobar window on a module over the edge-path group.

    A degree 0 monomial [x_1|...|x_k] acts by psi, the product of
    g_(x_i) - 1; monomials of positive degree act by 0.
    """

    def __init__(self, module: PiModule) -> None:
        self.module = module
        self.rank = module.rank

    def act(self, key, degree: int) -> IntMatrix:
        """Return the matrix of a basis element of the algebra."""
        if degree > 0:
            return IntMatrix.zeros(self.rank, self.rank)
        identity = IntMatrix.identity(self.rank)
        result = identity
        for label in key:
            result = result @ (self.module.matrix(label) - identity)
        return result


class AugmentationAction:
    """Action of an augmented algebra on Z through the augmentation: the ideal acts by 0."""

    rank: int = 1

    def act(self, key, degree: int) -> IntMatrix:
        """Return the zero matrix."""
        return IntMatrix.zeros(1, 1)


def one_sided_bar(algebra: Union[TruncatedDgAlgebra, FiniteDgAlgebra],
                  module: Union[PiModule, PiModuleAction, AugmentationAction] = None,
                  max_words: int = DEFAULT_MAX_LEN, max_deg: int = None) -> TruncatedComplex:
    """
    Return the one-sided bar construction B(A, M).

    Parameters
    - algebra: a cobar window or a FiniteDgAlgebra.
    - module: a PiModule (acting through psi), an action object, or None for
    Z through the augmentation.
    - max_words, max_deg: the window bounds.

    Return: TruncatedComplex with basis word-major (word index * rank + k) and
    D = D_BA (x) 1 + d, d({a_1|...|a_n} (x) x) = (-1)^e_n {a_1|...|a_(n-1)} (x) a_n x.

    Exception
    - TwistedError('algebra is not augmented'): as bar.
    """
    if module is None:
        module = AugmentationAction()
    elif isinstance(module, PiModule):
        module = PiModuleAction(module)
    window = bar(algebra, max_words, max_deg)
    rank = module.rank
    ranks = [len(window.basis(n)) * rank for n in range(window.max_deg + 1)]
    boundaries, leaks = {}, set()
    for n in range(1, window.max_deg + 1):
        bar_matrix, leaked = window.matrix(n)
        if leaked:
            leaks.add(n)
        target = window.index(n - 1)
        entries = [(i * rank + k, j * rank + k, value)
                   for i, j, value in bar_matrix.entries() for k in range(rank)]
        for col, word in enumerate(window.basis(n)):
            if not word:
                continue
            last = word[-1]
            if window.letter_degree(last) > 1:
                continue  #positive degrees act by 0 on a module in degree 0
            sign = (-1) ** window.degree(word)
            row = target[word[:-1]]
            action = module.act(last, 0)
            for i, j, value in action.entries():
                entries.append((row * rank + i, col * rank + j, sign * value))
        boundaries[n] = IntMatrix.from_entries(ranks[n - 1], ranks[n], entries)
    complete = {n for n in range(window.max_deg + 1) if window.is_complete(n)}
    _LOGGER.debug('one-sided bar with ranks %s, leaks %s', ranks, sorted(leaks))
    return TruncatedComplex(ChainComplex(ranks, boundaries), leaks, complete)


def _subdivisions(n: int) -> Iterator[Tuple[int, ...]]:
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            yield (0,) + cuts + (n,)


def _interval(space, simplex: str, start: int, end: int) -> DegenerateRef:
    ref = DegenerateRef.of(simplex)
    n = space.dim(simplex)
    for _ in range(n - end):
        ref = space.face(ref, space.dim(ref))
    for _ in range(start):
        ref = space.face(ref, 0)
    return ref


def rho(coalgebra: DgCoalgebra, window: BarCoalgebra = None,
        module: PiModule = None) -> ChainMap:
    """
    Return the comparison map C -> B(Omega C) on a window.

    A vertex goes to the empty word.  A simplex x of dimension n goes to the
    sum over 0 = s_0 < s_1 < ... < s_k = n of {[x_1]|...|[x_k]}, where x_j is
    the face of x on the vertices s_(j-1) .. s_j; terms with a degenerate face
    vanish, terms outside the window are dropped.

    Parameters
    - coalgebra: the chains of a connected reduced simplicial set.
    - window: a bar window over the cobar window of the same chains; built
    with the default bounds when not given.
    - module: when given, return rho (x) 1 from the twisted tensor product
    C (x)_tau M to the one-sided bar construction B(Omega C, M).

    Exception
    - TwistedError('coalgebra has no simplicial set'): if the chains do not
    come from a simplicial set.
    """
    space = coalgebra.space
    if space is None:
        raise TwistedError('coalgebra has no simplicial set')
    if window is None:
        window = bar(cobar(coalgebra))
    top = min(coalgebra.top, window.max_deg)
    matrices = {}
    for n in range(top + 1):
        target = window.index(n)
        entries = []
        for col, simplex in enumerate(space.simplices(n)):
            if n == 0:
                entries.append((target[()], col, 1))
                continue
            for points in _subdivisions(n):
                faces = [_interval(space, simplex, points[j], points[j + 1])
                         for j in range(len(points) - 1)]
                if any(face.is_degenerate for face in faces):
                    continue
                word = tuple((face.target,) for face in faces)
                if word in target:
                    entries.append((target[word], col, 1))
        matrices[n] = IntMatrix.from_entries(len(target), coalgebra.rank(n), entries)
    if module is None:
        ranks = [coalgebra.rank(n) for n in range(top + 1)]
        source = ChainComplex(ranks, {n: coalgebra.boundary(n) for n in range(1, top + 1)})
        return ChainMap(source, window.complex().complex, matrices)
    twisted = twisted_tensor(coalgebra, module)
    source = ChainComplex(twisted.ranks[:top + 1],
                          {n: twisted.boundary(n) for n in range(1, top + 1)})
    target_complex = one_sided_bar(window.algebra, module, window.max_words,
                                   window.max_deg).complex
    identity = IntMatrix.identity(module.rank)
    return ChainMap(source, target_complex,
                    {n: matrix.kron(identity) for n, matrix in matrices.items()})
