#Exact chain-level topology functions.
#
#License: MIT

"""
The builtin corpus of reduced simplicial sets.

Each entry names a recipe, either a standard model or the presentation
complex of a group presentation, and the integral homology the space must
have.
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

from topochains.groups import GroupPresentation
from topochains.simplicial import MODEL_DELTA_QUOTIENT, ReducedSimplicialSet
from topochains.simplicial import build_presentation_complex, new

__all__ = (
    'CorpusEntry',
    'CORPUS',
    'corpus_names',
    'corpus_space'
)


@dataclass(frozen=True)
class CorpusEntry:
    """
    A named space of the corpus.

    Attributes
    - name: the corpus name.
    - recipe: readable description of the construction.
    - build: the constructor.
    - homology: the expected integral homology in degrees 0, 1, 2.
    - order: the expected order of the fundamental group, None if infinite.
    """

    name: str
    recipe: str
    build: Callable[[], ReducedSimplicialSet] = field(compare=False)
    homology: Tuple[str, ...] = ()
    order: Optional[int] = None


def _presented(name: str, generators, relators) -> Callable[[], ReducedSimplicialSet]:
    def build() -> ReducedSimplicialSet:
        return build_presentation_complex(GroupPresentation(generators, relators), name)
    return build


def _quotient(name: str, n: int) -> Callable[[], ReducedSimplicialSet]:
    def build() -> ReducedSimplicialSet:
        space = new(MODEL_DELTA_QUOTIENT, n)
        space.name = name
        return space
    return build


_HIGMAN = ('a^b a^-2', 'b^c b^-2', 'c^d c^-2', 'd^a d^-2')

CORPUS: Dict[str, CorpusEntry] = {entry.name: entry for entry in (
    CorpusEntry('delta1', 'delta_quotient(1)', _quotient('delta1', 1),
                ('Z', 'Z', '0'), None),
    CorpusEntry('s2', 'delta_quotient(2)', _quotient('s2', 2), ('Z', '0', 'Z'), 1),
    CorpusEntry('rp2', '<a | a a>', _presented('rp2', ['a'], ['a a']),
                ('Z', 'Z/2', '0'), 2),
    CorpusEntry('p3', '<a | a a a>', _presented('p3', ['a'], ['a a a']),
                ('Z', 'Z/3', '0'), 3),
    CorpusEntry('torus', '<a, b | a b a^-1 b^-1>',
                _presented('torus', ['a', 'b'], ['a b a^-1 b^-1']),
                ('Z', 'Z^2', 'Z'), None),
    CorpusEntry('binary-icosahedral', '<s, t | s t s t s^-3, s t s t t^-5>',
                _presented('binary-icosahedral', ['s', 't'],
                           ['s t s t s^-3', 's t s t t^-5']),
                ('Z', '0', '0'), 120),
    CorpusEntry('higman', '<a, b, c, d | ' + ', '.join(_HIGMAN) + '>',
                _presented('higman', ['a', 'b', 'c', 'd'], list(_HIGMAN)),
                ('Z', '0', '0'), None),
)}


def corpus_names() -> Tuple[str, ...]:
    """Return the corpus names in a fixed order."""
    return tuple(CORPUS)


def corpus_space(name: str) -> ReducedSimplicialSet:
    """
    Build a corpus space.

    Exception
    - KeyError: if the name is not in the corpus.
    """
    return CORPUS[name].build()
