#Exact chain-level topology functions.
#
#License: MIT

"""
Modules over the group ring of a presented group.

A module is a free abelian group of finite rank in degree 0 on which every
generator acts by an invertible integer matrix.  The action is a left action:
a word x_1 ... x_k acts by the product of the matrices in the same order.
"""
from typing import Dict, Mapping, Sequence

from topochains.linear import IntMatrix, LinearError
from topochains.utils import FormatError, ValidationReport
from .coset_enumeration import CosetTable
from .presentation import GroupError, GroupPresentation, Word

__all__ = (
    'PiModule',
    'regular_module',
    'trivial_module'
)


class PiModule:
    """
    Class that implements a left module over a presented group.

    Methods
    - matrix(): the matrix of a letter.
    - act(): the matrix of a word.
    - check(): relation and invertibility checks against a presentation.
    - restrict(): the module pulled back along a map of generators.
    - to_json(), from_json(): serialization.

    Attributes
    - rank: rank over the integers.
    - name: label used in reports.
    """

    def __init__(self, rank: int, action: Mapping[str, IntMatrix],
                 name: str = 'module') -> None:
        """
        Initialize the module.

        Exception
        - GroupError('invalid module action'): if a matrix has the wrong shape
        or is not invertible over the integers.
        """
        self.rank = rank
        self.name = name
        self._action: Dict[str, IntMatrix] = {}
        self._inverse: Dict[str, IntMatrix] = {}
        for generator, matrix in action.items():
            if matrix.shape != (rank, rank):
                raise GroupError('invalid module action: shape of ' + generator)
            try:
                self._inverse[generator] = matrix.inverse()
            except LinearError:
                raise GroupError('invalid module action: ' + generator
                                 + ' is not invertible') from None
            self._action[generator] = matrix

    @property
    def generators(self) -> Sequence[str]:
        """Return the generators with an explicit action."""
        return tuple(self._action)

    def matrix(self, generator: str, exp: int = 1) -> IntMatrix:
        """
        Return the matrix of a letter.

        Exception
        - GroupError('unknown letter'): if the generator has no action.
        """
        table = self._action if exp > 0 else self._inverse
        if generator not in table:
            raise GroupError('unknown letter: ' + generator)
        return table[generator]

    def act(self, word: Word) -> IntMatrix:
        """Return the matrix by which a word acts."""
        result = IntMatrix.identity(self.rank)
        for generator, exp in word:
            result = result @ self.matrix(generator, exp)
        return result

    def check(self, presentation: GroupPresentation) -> ValidationReport:
        """Return the issues: missing generators and relators acting nontrivially."""
        report = ValidationReport()
        for generator in presentation.generators:
            if generator not in self._action:
                report.add('missing-generator', generator)
        if not report.ok:
            return report
        identity = IntMatrix.identity(self.rank)
        for index, relator in enumerate(presentation.relators):
            if self.act(relator) != identity:
                report.add('relator-action', 'relator {0}'.format(index),
                           'acts nontrivially')
        return report

    def restrict(self, generator_map: Mapping[str, Word],
                 name: str = None) -> 'PiModule':
        """
        Return the module restricted along a map of generators.

        Parameters
        - generator_map: for each source generator, the word of its image.
        The empty word acts as the identity.
        """
        action = {generator: self.act(word) for generator, word in generator_map.items()}
        return PiModule(self.rank, action, name or self.name)

    def to_json(self) -> dict:
        """Return the JSON form {"rank", "action"}."""
        return {
            'rank': self.rank,
            'action': {name: matrix.to_json() for name, matrix in sorted(self._action.items())},
        }

    @classmethod
    def from_json(cls, value: dict, name: str = 'module') -> 'PiModule':
        """
        Build a module from its JSON form.

        Exception
        - FormatError('malformed module'): in case of a malformed value.
        """
        try:
            rank = int(value['rank'])
            action = {str(generator): IntMatrix.from_json(matrix)
                      for generator, matrix in value['action'].items()}
        except (KeyError, TypeError, ValueError, AttributeError):
            raise FormatError('malformed module') from None
        return cls(rank, action, name)


def trivial_module(generators: Sequence[str]) -> PiModule:
    """Return Z with the trivial action of every generator."""
    return PiModule(1, {generator: IntMatrix.identity(1) for generator in generators},
                    'trivial')


def regular_module(table: CosetTable) -> PiModule:
    """
    Return the permutation module of a complete coset table.

    Parameters
    - table: a complete coset table; over the trivial subgroup the result is
    the regular module Z[G].

    Return: module of rank |cosets| where a generator x sends e_c to
    e_{c * x^-1}.

    Exception
    - GroupError('incomplete coset table'): if the table is not complete.
    """
    if not table.is_complete():
        raise GroupError('incomplete coset table')
    action = {}
    for generator in table.generators:
        entries = [(table.act(coset, (generator, -1)), coset, 1)
                   for coset in range(table.size)]
        action[generator] = IntMatrix.from_entries(table.size, table.size, entries)
    return PiModule(table.size, action, 'regular')
