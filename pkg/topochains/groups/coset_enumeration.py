#Exact chain-level topology functions.
#
#License: MIT

"""
Todd-Coxeter coset enumeration.

The module enumerates the cosets of the trivial subgroup of a finitely
presented group with the relator-based (HLT) strategy of
'sympy.combinatorics'.  A completed enumeration certifies the order of the
group and yields the permutation action used for universal covers and
regular modules.  Cosets are numbered from 0; coset 0 is the subgroup.
"""
import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from topochains.utils import FormatError, ValidationReport
from .presentation import GroupError, GroupPresentation, Letter, Word
from .presentation import free_reduce

__all__ = (
    'CosetTable',
    'Exhausted',
    'todd_coxeter',
    'word_reduce',
    'DEFAULT_TC_BUDGET'
)

_LOGGER = logging.getLogger(__name__)

DEFAULT_TC_BUDGET: int = 10000


@dataclass(frozen=True)
class Exhausted:
    """
    Outcome of an enumeration that hit its coset bound.

    Attributes
    - bound: the coset bound that was reached.
    """

    bound: int

    def to_json(self) -> dict:
        """Return the JSON form of the outcome."""
        return {'exhausted': self.bound}


class CosetTable:
    """
    Class that implements a coset table.

    Methods
    - act(): image of a coset under a letter.
    - evaluate(): image of a coset under a word.
    - representative(): a shortest word leading from coset 0 to a coset.
    - is_complete(): True if every entry is defined.
    - check(): relator and transitivity checks.
    - to_json(), from_json(): serialization.

    Attributes
    - generators: the generator names.
    - size: the number of cosets.
    - relators: relators the table was enumerated for.
    """

    def __init__(self, generators: Sequence[str],
                 action: Dict[str, Sequence[Optional[int]]],
                 relators: Sequence[Word] = (), size: int = None) -> None:
        """
        Initialize the table.

        Parameters
        - generators: generator names.
        - action: for each generator, the list of images c * g of the cosets c
        (None for an undefined entry).
        - relators: the relators of the presentation.
        - size: the number of cosets (needed when there are no generators).
        """
        self.generators = tuple(generators)
        self.relators = tuple(relators)
        if size is None:
            size = len(next(iter(action.values()))) if action else 1
        self.size = size
        self._action: Dict[str, List[Optional[int]]] = {}
        self._inverse: Dict[str, List[Optional[int]]] = {}
        for name in self.generators:
            images = list(action.get(name, [None] * size))
            if len(images) != size:
                raise GroupError('coset table row length mismatch: ' + name)
            self._action[name] = images
            inverse: List[Optional[int]] = [None] * size
            for coset, image in enumerate(images):
                if image is not None:
                    if not 0 <= image < size:
                        raise GroupError('coset index out of range: ' + name)
                    inverse[image] = coset
            self._inverse[name] = inverse
        self._reps: Optional[List[Word]] = None

    def is_complete(self) -> bool:
        """Return True if every generator defines a permutation of the cosets."""
        return all(None not in images and len(set(images)) == self.size
                   for images in self._action.values())

    def act(self, coset: int, letter: Letter) -> int:
        """
        Return the coset c * x for a letter x.

        Exception
        - GroupError('unknown letter'): if x is not a generator.
        - GroupError('incomplete coset table'): if the entry is undefined.
        """
        name, exp = letter
        table = self._action if exp > 0 else self._inverse
        if name not in table:
            raise GroupError('unknown letter: ' + str(name))
        image = table[name][coset]
        if image is None:
            raise GroupError('incomplete coset table')
        return image

    def evaluate(self, word: Word, start: int = 0) -> int:
        """Return the coset start * w."""
        coset = start
        for letter in word:
            coset = self.act(coset, letter)
        return coset

    def permutation(self, name: str) -> List[int]:
        """Return the images of all cosets under a generator."""
        if not self.is_complete():
            raise GroupError('incomplete coset table')
        return list(self._action[name])

    def representative(self, coset: int) -> Word:
        """Return a shortest word w with 0 * w = coset (breadth-first, letters in order)."""
        if self._reps is None:
            reps: List[Optional[Word]] = [None] * self.size
            reps[0] = ()
            queue = deque([0])
            while queue:
                current = queue.popleft()
                for name in self.generators:
                    for exp in (1, -1):
                        image = (self._action if exp > 0 else self._inverse)[name][current]
                        if image is not None and reps[image] is None:
                            reps[image] = reps[current] + ((name, exp),)
                            queue.append(image)
            if any(rep is None for rep in reps):
                raise GroupError('coset table is not transitive')
            self._reps = reps
        return self._reps[coset]

    def check(self) -> ValidationReport:
        """Return the issues: incompleteness, relators moving a coset, intransitivity."""
        report = ValidationReport()
        if not self.is_complete():
            report.add('incomplete', 'table', 'undefined or repeated entries')
            return report
        for index, relator in enumerate(self.relators):
            for coset in range(self.size):
                if self.evaluate(relator, coset) != coset:
                    report.add('relator-action', 'relator {0}'.format(index),
                               'moves coset {0}'.format(coset))
                    break
        try:
            self.representative(0)
        except GroupError:
            report.add('not-transitive', 'table')
        return report

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CosetTable):
            return NotImplemented
        return (self.generators == other.generators and self.size == other.size
                and self._action == other._action)

    def __hash__(self) -> int:
        return hash((self.generators, self.size))

    def to_json(self) -> dict:
        """Return the JSON form {"gens", "cosets", "action"}."""
        return {
            'gens': list(self.generators),
            'cosets': self.size,
            'action': {name: list(images) for name, images in self._action.items()},
        }

    @classmethod
    def from_json(cls, value: dict,
                  presentation: GroupPresentation = None) -> 'CosetTable':
        """
        Build a table from its JSON form.

        Tables over any subgroup are accepted.

        Exception
        - FormatError('malformed coset table'): in case of a malformed value.
        """
        try:
            generators = [str(name) for name in value['gens']]
            size = int(value['cosets'])
            action = {str(name): [None if image is None else int(image) for image in images]
                      for name, images in value['action'].items()}
        except (KeyError, TypeError, ValueError, AttributeError):
            raise FormatError('malformed coset table') from None
        relators = presentation.relators if presentation is not None else ()
        return cls(generators, action, relators, size)


def todd_coxeter(presentation: GroupPresentation,
                 max_cosets: int = DEFAULT_TC_BUDGET) -> Union[CosetTable, Exhausted]:
    """
    Enumerate the cosets of the trivial subgroup.

    Parameters
    - presentation: the group presentation.
    - max_cosets: the bound on the number of defined cosets.

    Return: a complete standardized CosetTable whose size is the order of the
    group, or Exhausted(max_cosets) if the bound was hit.

    Exception
    - GroupError('invalid coset bound'): if max_cosets < 1.
    """
    if max_cosets < 1:
        raise GroupError('invalid coset bound')
    generators = presentation.generators
    if not generators:
        return CosetTable((), {}, presentation.relators, 1)
    free, *symbols = free_group(', '.join('x{0}'.format(i) for i in range(len(generators))))
    index = {name: symbols[i] for i, name in enumerate(generators)}
    relators = []
    for word in presentation.relators:
        element = free.identity
        for name, exp in word:
            element = element * index[name] ** exp
        relators.append(element)
    try:
        table = coset_enumeration_r(FpGroup(free, relators), [], max_cosets=max_cosets)
    except ValueError:
        _LOGGER.debug('coset enumeration exhausted at %d cosets', max_cosets)
        return Exhausted(max_cosets)
    table.compress()
    table.standardize()
    action = {name: [row[2 * i] for row in table.table]
              for i, name in enumerate(generators)}
    result = CosetTable(generators, action, presentation.relators)
    _LOGGER.debug('coset enumeration finished with %d cosets', result.size)
    return result


def word_reduce(word: Word, table: CosetTable = None) -> Union[Word, int]:
    """
    Reduce a word.

    Parameters
    - word: the word.
    - table: optional complete coset table.

    Return: the freely reduced word, or with a table the coset 0 * w, which
    solves the word problem in the enumerated group.

    Exception
    - GroupError('unknown letter'): if a letter is not a generator of the table.
    """
    if table is None:
        return free_reduce(word)
    return table.evaluate(word, 0)
