#Exact chain-level topology functions.
#
#License: MIT

"""
Covering spaces of reduced simplicial sets.

The cover attached to a complete coset table of the edge-path group has the
simplices (x, c) for x a nondegenerate simplex and c a coset.  Vertex 0 of
(x, c) lies over coset c, so d_0 moves along the front edge of x while the
other faces keep the coset.
"""
import logging
from typing import Dict, List, Tuple

from topochains.groups import CosetTable
from .simplicial_set import DegenerateRef, ReducedSimplicialSet
from .simplicial_set import SimplicialError, SimplicialSetData

__all__ = (
    'covering_space',
    'deck_transformations',
    'lift_id'
)

_LOGGER = logging.getLogger(__name__)


def lift_id(simplex: str, coset: int) -> str:
    """Return the identifier of the lift of a simplex to a coset."""
    return '{0}@{1}'.format(simplex, coset)


def _check_table(space: ReducedSimplicialSet, table: CosetTable) -> None:
    if not table.is_complete():
        raise SimplicialError('incomplete coset table')
    missing = [edge for edge in space.simplices(1) if edge not in table.generators]
    if missing:
        raise SimplicialError('coset table does not match: ' + ', '.join(missing))


def _front_shift(space: ReducedSimplicialSet, table: CosetTable,
                 simplex: str, coset: int) -> int:
    edge = space.front_face(simplex, 1)
    if edge.is_degenerate:
        return coset
    return table.act(coset, (edge.target, 1))


def covering_space(space: ReducedSimplicialSet, table: CosetTable) -> SimplicialSetData:
    """
    Return the covering space attached to a coset table.

    Parameters
    - space: the reduced simplicial set X.
    - table: a complete coset table for the edge-path presentation of X
    (over the trivial subgroup the cover is universal).

    Return: the simplicial set with simplices '<id>@<coset>'; the i-th face of
    (x, c) is (d_i x, c) for i >= 1 and (d_0 x, c * g) for i = 0, with g the
    group element of the front edge of x.

    Exception
    - SimplicialError('incomplete coset table'): if the table is not complete.
    - SimplicialError('coset table does not match'): if an edge of X is not a
    generator of the table.
    """
    _check_table(space, table)
    by_dim: List[List[str]] = []
    faces: Dict[str, List[DegenerateRef]] = {}
    for n in range(space.top_dim + 1):
        by_dim.append([])
        for simplex in space.simplices(n):
            for coset in range(table.size):
                lifted = lift_id(simplex, coset)
                by_dim[n].append(lifted)
                if n == 0:
                    continue
                shifted = _front_shift(space, table, simplex, coset)
                refs = []
                for i, ref in enumerate(space.faces_of(simplex)):
                    target_coset = shifted if i == 0 else coset
                    refs.append(DegenerateRef(ref.degens, lift_id(ref.target, target_coset)))
                faces[lifted] = refs
    cover = SimplicialSetData(by_dim, faces)
    _LOGGER.debug('cover with %d sheets, euler characteristic %d',
                  table.size, cover.euler_characteristic())
    return cover


def deck_transformations(space: ReducedSimplicialSet,
                         table: CosetTable) -> List[Tuple[int, ...]]:
    """
    Return the deck transformations of the cover as coset permutations.

    A coset c gives a deck transformation when phi(0) = c extends to a map
    with phi(d * x) = phi(d) * x for every coset d and generator x; the
    transformation sends (x, d) to (x, phi(d)).  Over the trivial subgroup
    there is one for every coset.

    Exception
    - SimplicialError('incomplete coset table'): if the table is not complete.
    """
    _check_table(space, table)
    result = []
    for start in range(table.size):
        phi = [table.evaluate(table.representative(d), start) for d in range(table.size)]
        consistent = all(
            phi[table.act(d, (name, 1))] == table.act(phi[d], (name, 1))
            for d in range(table.size) for name in table.generators)
        if consistent:
            result.append(tuple(phi))
    return result
