#Exact chain-level topology functions.
#
#License: MIT

"""
Finitely presented groups.

The module implements words over generators and formal inverses, their
parsing and free reduction, group presentations and the abelianization of a
presentation through the Smith form of its exponent-sum matrix.
"""
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from topochains.linear import FGAbelianGroup, IntMatrix, elementary_divisors
from topochains.utils import FormatError

__all__ = (
    'Letter',
    'Word',
    'parse_word',
    'format_word',
    'free_reduce',
    'invert_word',
    'GroupPresentation',
    'abelianization',
    'GroupError'
)

Letter = Tuple[str, int]
Word = Tuple[Letter, ...]


def _expand_token(token: str) -> List[Letter]:
    if '^' not in token:
        return [(token, 1)]
    base, _, exponent = token.partition('^')
    if not base or not exponent:
        raise GroupError('malformed token: ' + token)
    try:
        power = int(exponent)
    except ValueError:
        # x^y is the conjugate y^-1 x y
        return [(exponent, -1), (base, 1), (exponent, 1)]
    if power == 0:
        return []
    return [(base, 1 if power > 0 else -1)] * abs(power)


def parse_word(text: str, generators: Sequence[str] = None) -> Word:
    """
    Parse a word in the whitespace separated token syntax.

    Parameters
    - text: tokens 'x', 'x^-1', 'x^k' (power) or 'x^y' (conjugate y^-1 x y).
    - generators: if given, every letter must be one of these names.

    Return: the word as a tuple of (generator, +1 or -1) letters.

    Exception
    - GroupError('unknown letter'): if a letter is not a generator.
    - GroupError('malformed token'): in case of an unparsable token.
    """
    word: List[Letter] = []
    for token in text.split():
        word.extend(_expand_token(token))
    if generators is not None:
        known = set(generators)
        for name, _ in word:
            if name not in known:
                raise GroupError('unknown letter: ' + name)
    return tuple(word)


def format_word(word: Word) -> str:
    """Return the token form of a word."""
    return ' '.join(name if exp > 0 else name + '^-1' for name, exp in word)


def free_reduce(word: Iterable[Letter]) -> Word:
    """Return the freely reduced form of a word."""
    stack: List[Letter] = []
    for name, exp in word:
        if stack and stack[-1] == (name, -exp):
            stack.pop()
        else:
            stack.append((name, exp))
    return tuple(stack)


def invert_word(word: Word) -> Word:
    """Return the inverse of a word."""
    return tuple((name, -exp) for name, exp in reversed(word))


class GroupPresentation:
    """
    Class that implements a finite presentation of a group.

    Methods
    - relation_matrix(): exponent sums of the relators.
    - to_json(), from_json(): serialization.

    Attributes
    - generators: tuple of generator names.
    - relators: tuple of nonempty freely reduced words.
    """

    def __init__(self, generators: Sequence[str],
                 relators: Sequence[Union[str, Word]] = ()) -> None:
        """
        Initialize the presentation.

        Exception
        - GroupError('duplicate generator'): if a name is repeated.
        - GroupError('unknown letter'): if a relator uses an unknown letter.
        - GroupError('empty relator'): if a relator reduces to the empty word.
        """
        self.generators: Tuple[str, ...] = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise GroupError('duplicate generator')
        known = set(self.generators)
        words = []
        for relator in relators:
            if isinstance(relator, str):
                relator = parse_word(relator)
            for name, exp in relator:
                if name not in known:
                    raise GroupError('unknown letter: ' + str(name))
                if exp not in (1, -1):
                    raise GroupError('malformed letter: ' + str(name))
            reduced = free_reduce(relator)
            if not reduced:
                raise GroupError('empty relator')
            words.append(reduced)
        self.relators: Tuple[Word, ...] = tuple(words)

    def relation_matrix(self) -> IntMatrix:
        """Return the matrix of exponent sums, one row per relator."""
        index: Dict[str, int] = {name: i for i, name in enumerate(self.generators)}
        entries = [(row, index[name], exp)
                   for row, word in enumerate(self.relators) for name, exp in word]
        return IntMatrix.from_entries(len(self.relators), len(self.generators), entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupPresentation):
            return NotImplemented
        return self.generators == other.generators and self.relators == other.relators

    def __hash__(self) -> int:
        return hash((self.generators, self.relators))

    def __repr__(self) -> str:
        return 'GroupPresentation({0}, {1})'.format(
            list(self.generators), [format_word(word) for word in self.relators])

    def to_json(self) -> dict:
        """Return the JSON form {"gens", "relators"}."""
        return {
            'gens': list(self.generators),
            'relators': [format_word(word) for word in self.relators],
        }

    @classmethod
    def from_json(cls, value: dict) -> 'GroupPresentation':
        """
        Build a presentation from its JSON form.

        Exception
        - FormatError('malformed presentation'): in case of a malformed value.
        """
        try:
            generators = [str(name) for name in value['gens']]
            relators = [parse_word(text, generators) for text in value['relators']]
        except (KeyError, TypeError, AttributeError):
            raise FormatError('malformed presentation') from None
        return cls(generators, relators)


def abelianization(presentation: GroupPresentation) -> FGAbelianGroup:
    """
    Return the abelianization of a presented group.

    Parameters
    - presentation: the group presentation.

    Return: Z^gens modulo the exponent-sum rows, in invariant factor form.
    """
    divisors = elementary_divisors(presentation.relation_matrix())
    free_rank = len(presentation.generators) - len(divisors)
    return FGAbelianGroup(free_rank, tuple(d for d in divisors if d > 1))


class GroupError(Exception):
    """
    The class that implements exceptions of the group computations.

    Exceptions
    - unknown letter.
    - empty relator.
    - duplicate generator.
    - incomplete coset table.
    - invalid module action.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
