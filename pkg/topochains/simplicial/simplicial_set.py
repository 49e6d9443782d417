#Exact chain-level topology functions.
#
#License: MIT

"""
Finite simplicial sets.

The module implements finite simplicial sets stored through their
nondegenerate simplices, with faces given as degeneracies of nondegenerate
simplices in Eilenberg-Zilber normal form, reduced simplicial sets, simplicial
maps, the standard models and the presentation complex of a group.
"""
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from topochains.groups import GroupPresentation
from topochains.utils import FormatError, ValidationReport

__all__ = (
    'DegenerateRef',
    'normal_form',
    'SimplicialSetData',
    'ReducedSimplicialSet',
    'SimplicialMap',
    'validate',
    'new',
    'build_standard',
    'delta_quotient',
    'wedge_of',
    'point',
    'build_presentation_complex',
    'collapse',
    'MODEL_DELTA_QUOTIENT',
    'MODEL_WEDGE',
    'MODEL_POINT',
    'SCHEMA',
    'SimplicialError'
)

MODEL_DELTA_QUOTIENT: int = 0x01  #the n-simplex modulo its boundary
MODEL_WEDGE: int = 0x02  #wedge of reduced models at the base vertex
MODEL_POINT: int = 0x03  #the one-vertex simplicial set

SCHEMA: str = 'ssetv1'

_VERTEX: str = 'v'


def normal_form(degens: Iterable[int]) -> Tuple[int, ...]:
    """
    Return the Eilenberg-Zilber normal form of a degeneracy word.

    The word s_{j_1} ... s_{j_k} is rewritten with s_a s_b = s_{b+1} s_a
    (a <= b) until the indices are strictly decreasing.
    """
    word = list(degens)
    changed = True
    while changed:
        changed = False
        for pos in range(len(word) - 1):
            first, second = word[pos], word[pos + 1]
            if first <= second:
                word[pos], word[pos + 1] = second + 1, first
                changed = True
    return tuple(word)


@dataclass(frozen=True)
class DegenerateRef:
    """
    A simplex s_{j_1} ... s_{j_k} x with x nondegenerate.

    Attributes
    - degens: strictly decreasing degeneracy indices, empty for x itself.
    - target: identifier of the nondegenerate simplex x.
    """

    degens: Tuple[int, ...]
    target: str

    def __post_init__(self) -> None:
        degens = tuple(int(j) for j in self.degens)
        object.__setattr__(self, 'degens', degens)
        if any(j < 0 for j in degens) or any(a <= b for a, b in zip(degens, degens[1:])):
            raise SimplicialError('degeneracy word not in normal form: ' + str(degens))

    @classmethod
    def of(cls, target: str) -> 'DegenerateRef':
        """Return the reference to a nondegenerate simplex."""
        return cls((), target)

    @property
    def is_degenerate(self) -> bool:
        """Return True if the referenced simplex is degenerate."""
        return bool(self.degens)

    def degenerate(self, degens: Sequence[int]) -> 'DegenerateRef':
        """Return s_{degens} applied to this simplex."""
        return DegenerateRef(normal_form(tuple(degens) + self.degens), self.target)

    def rename(self, mapping: Mapping[str, str]) -> 'DegenerateRef':
        """Return the reference with the target renamed."""
        return DegenerateRef(self.degens, mapping.get(self.target, self.target))

    def to_json(self) -> dict:
        """Return the JSON form {"degens", "target"}."""
        return {'degens': list(self.degens), 'target': self.target}

    @classmethod
    def from_json(cls, value: dict) -> 'DegenerateRef':
        """Build a reference from its JSON form."""
        return cls(tuple(value['degens']), str(value['target']))


class SimplicialSetData:
    """
    Class that implements a finite simplicial set.

    Methods
    - simplices(): nondegenerate simplices of a dimension.
    - dim(): dimension of a nondegenerate simplex or reference.
    - faces_of(): the faces of a nondegenerate simplex.
    - face(): the i-th face of any reference, in normal form.
    - front_face(), back_face(): Alexander-Whitney faces.
    - euler_characteristic(): alternating count of nondegenerate simplices.
    - to_json(), from_json(): serialization.

    Attributes
    - top_dim: the maximal nonempty dimension.
    - ids: all nondegenerate simplex identifiers.
    """

    def __init__(self, simplices_by_dim: Sequence[Sequence[str]],
                 faces: Mapping[str, Sequence[DegenerateRef]]) -> None:
        """
        Initialize the simplicial set.

        Parameters
        - simplices_by_dim: for each dimension n >= 0 the list of nondegenerate
        n-simplex identifiers.
        - faces: for each nondegenerate n-simplex with n >= 1 its faces
        d_0 .. d_n.
        """
        by_dim = [list(ids) for ids in simplices_by_dim]
        while by_dim and not by_dim[-1]:
            by_dim.pop()
        self._by_dim: Tuple[Tuple[str, ...], ...] = tuple(tuple(ids) for ids in by_dim)
        self._dims: Dict[str, int] = {}
        for n, ids in enumerate(self._by_dim):
            for simplex in ids:
                self._dims.setdefault(simplex, n)
        self._faces: Dict[str, Tuple[DegenerateRef, ...]] = {
            simplex: tuple(refs) for simplex, refs in faces.items() if refs}
        self._index: Dict[str, int] = {}
        for ids in self._by_dim:
            for pos, simplex in enumerate(ids):
                self._index.setdefault(simplex, pos)

    @property
    def top_dim(self) -> int:
        """Return the maximal nonempty dimension."""
        return len(self._by_dim) - 1

    @property
    def described(self) -> List[str]:
        """Return the simplices with a face list."""
        return list(self._faces)

    @property
    def ids(self) -> List[str]:
        """Return all nondegenerate simplices, by dimension."""
        return [simplex for ids in self._by_dim for simplex in ids]

    def simplices(self, n: int) -> Tuple[str, ...]:
        """Return the nondegenerate n-simplices."""
        if 0 <= n < len(self._by_dim):
            return self._by_dim[n]
        return ()

    def count(self, n: int) -> int:
        """Return the number of nondegenerate n-simplices."""
        return len(self.simplices(n))

    def index(self, simplex: str) -> int:
        """Return the position of a simplex within its dimension."""
        return self._index[simplex]

    def __contains__(self, simplex: str) -> bool:
        return simplex in self._dims

    def dim(self, simplex) -> int:
        """Return the dimension of a simplex identifier or reference."""
        if isinstance(simplex, DegenerateRef):
            return self._dims[simplex.target] + len(simplex.degens)
        return self._dims[simplex]

    def faces_of(self, simplex: str) -> Tuple[DegenerateRef, ...]:
        """Return the faces d_0 .. d_n of a nondegenerate simplex."""
        return self._faces.get(simplex, ())

    def face(self, ref: DegenerateRef, i: int) -> DegenerateRef:
        """
        Return d_i of a simplex in normal form.

        The face is pushed through the degeneracies with the simplicial
        identities: d_i s_j = s_{j-1} d_i for i < j, d_i s_j = id for
        i = j, j + 1 and d_i s_j = s_j d_{i-1} for i > j + 1.

        Exception
        - SimplicialError('face index out of range'): if i > dim.
        """
        if not 0 <= i <= self.dim(ref) or self.dim(ref) == 0:
            raise SimplicialError('face index out of range: ' + str(i))
        out: List[int] = []
        index = i
        for j in ref.degens:
            if index is None:
                out.append(j)
            elif index < j:
                out.append(j - 1)
            elif index in (j, j + 1):
                index = None
            else:
                out.append(j)
                index -= 1
        if index is None:
            return DegenerateRef(normal_form(out), ref.target)
        inner = self._faces[ref.target][index]
        return DegenerateRef(normal_form(out + list(inner.degens)), inner.target)

    def front_face(self, simplex: str, p: int) -> DegenerateRef:
        """Return the front p-face d_{p+1} ... d_n of an n-simplex."""
        ref = DegenerateRef.of(simplex)
        for i in range(self.dim(simplex), p, -1):
            ref = self.face(ref, i)
        return ref

    def back_face(self, simplex: str, q: int) -> DegenerateRef:
        """Return the back q-face (d_0)^(n-q) of an n-simplex."""
        ref = DegenerateRef.of(simplex)
        for _ in range(self.dim(simplex) - q):
            ref = self.face(ref, 0)
        return ref

    def euler_characteristic(self) -> int:
        """Return the alternating sum of the nondegenerate simplex counts."""
        return sum((-1) ** n * len(ids) for n, ids in enumerate(self._by_dim))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialSetData):
            return NotImplemented
        return self._by_dim == other._by_dim and self._faces == other._faces

    def __hash__(self) -> int:
        return hash(self._by_dim)

    def to_json(self) -> dict:
        """Return the JSON form with schema field 'ssetv1'."""
        return {
            'schema': SCHEMA,
            'dims': {str(n): list(ids) for n, ids in enumerate(self._by_dim)},
            'faces': {simplex: [ref.to_json() for ref in refs]
                      for simplex, refs in self._faces.items()},
        }

    @classmethod
    def from_json(cls, value: dict) -> 'SimplicialSetData':
        """
        Build a simplicial set from its JSON form.

        Exception
        - FormatError('unsupported schema'): if the schema field is not 'ssetv1'.
        - FormatError('malformed simplicial set'): in case of a malformed value.
        """
        if not isinstance(value, dict) or value.get('schema') != SCHEMA:
            raise FormatError('unsupported schema')
        try:
            dims = value['dims']
            size = max((int(n) for n in dims), default=-1) + 1
            by_dim = [[str(simplex) for simplex in dims.get(str(n), [])] for n in range(size)]
            faces = {str(simplex): [DegenerateRef.from_json(ref) for ref in refs]
                     for simplex, refs in value.get('faces', {}).items()}
        except (KeyError, TypeError, ValueError, AttributeError, SimplicialError):
            raise FormatError('malformed simplicial set') from None
        return cls(by_dim, faces)


def validate(data: SimplicialSetData) -> ValidationReport:
    """
    Check a simplicial set.

    Parameters
    - data: the simplicial set.

    Return: the report of every duplicate identifier, unknown face target,
    wrong face count or dimension, out of range degeneracy and violated
    identity d_i d_j = d_{j-1} d_i (i < j); empty iff the set is valid.
    """
    report = ValidationReport()
    seen = set()
    for simplex in data.ids:
        if simplex in seen:
            report.add('duplicate-id', simplex)
        seen.add(simplex)
    structural = True
    for n in range(data.top_dim + 1):
        for simplex in data.simplices(n):
            refs = data.faces_of(simplex)
            if len(refs) != (n + 1 if n else 0):
                report.add('face-count', simplex,
                           'expected {0} faces, got {1}'.format(n + 1 if n else 0, len(refs)))
                structural = False
                continue
            for i, ref in enumerate(refs):
                where = '{0} d{1}'.format(simplex, i)
                if ref.target not in data:
                    report.add('unknown-target', where, ref.target)
                    structural = False
                    continue
                if data.dim(ref) != n - 1:
                    report.add('face-dimension', where,
                               'dimension {0}, expected {1}'.format(data.dim(ref), n - 1))
                    structural = False
                base = data.dim(ref.target)
                if any(j > base + len(ref.degens) - 1 - pos
                       for pos, j in enumerate(ref.degens)):
                    report.add('degeneracy-range', where, str(ref.degens))
                    structural = False
    for simplex in data.described:
        if simplex not in data:
            report.add('unknown-simplex', simplex, 'faces given for an unlisted simplex')
    if not structural:
        return report
    for n in range(2, data.top_dim + 1):
        for simplex in data.simplices(n):
            ref = DegenerateRef.of(simplex)
            for j in range(1, n + 1):
                for i in range(j):
                    left = data.face(data.face(ref, j), i)
                    right = data.face(data.face(ref, i), j - 1)
                    if left != right:
                        report.add('simplicial-identity', simplex,
                                   'd{0} d{1} != d{2} d{0}'.format(i, j, j - 1))
    return report


class ReducedSimplicialSet(SimplicialSetData):
    """
    Class that implements a valid simplicial set with a single 0-simplex.

    Attributes
    - vertex: the identifier of the 0-simplex.
    - name: label used in reports.
    """

    def __init__(self, simplices_by_dim: Sequence[Sequence[str]],
                 faces: Mapping[str, Sequence[DegenerateRef]],
                 name: str = '') -> None:
        """
        Initialize the reduced simplicial set.

        Exception
        - SimplicialError('not reduced'): unless there is exactly one 0-simplex.
        - SimplicialError('invalid simplicial set'): if validation fails.
        """
        super().__init__(simplices_by_dim, faces)
        if self.count(0) != 1:
            raise SimplicialError('not reduced: {0} vertices'.format(self.count(0)))
        report = validate(self)
        if not report.ok:
            raise SimplicialError('invalid simplicial set: ' + '; '.join(
                '{0} at {1}'.format(issue.kind, issue.where) for issue in report))
        self.name = name

    @classmethod
    def from_data(cls, data: SimplicialSetData, name: str = '') -> 'ReducedSimplicialSet':
        """Return the reduced simplicial set with the same simplices and faces."""
        return cls([data.simplices(n) for n in range(data.top_dim + 1)],
                   {simplex: data.faces_of(simplex) for simplex in data.ids}, name)

    @property
    def vertex(self) -> str:
        """Return the base vertex."""
        return self.simplices(0)[0]

    def degenerate_vertex(self, n: int) -> DegenerateRef:
        """Return the fully degenerate n-simplex on the base vertex."""
        return DegenerateRef(tuple(range(n - 1, -1, -1)), self.vertex)


class SimplicialMap:
    """
    Class that implements a map of finite simplicial sets.

    Methods
    - image(): image of a nondegenerate simplex.
    - apply(): image of any reference.
    - check(): dimension and face compatibility report.
    - compose(): composite with a map into the source.
    - identity(): the identity map.
    - to_json(), from_json(): serialization.
    """

    def __init__(self, source: SimplicialSetData, target: SimplicialSetData,
                 assignment: Mapping[str, DegenerateRef]) -> None:
        """Initialize the map from the images of the nondegenerate simplices."""
        self.source = source
        self.target = target
        self.assignment: Dict[str, DegenerateRef] = dict(assignment)

    @classmethod
    def identity(cls, space: SimplicialSetData) -> 'SimplicialMap':
        """Return the identity map of a simplicial set."""
        return cls(space, space, {simplex: DegenerateRef.of(simplex) for simplex in space.ids})

    def image(self, simplex: str) -> DegenerateRef:
        """
        Return the image of a nondegenerate simplex.

        Exception
        - SimplicialError('unassigned simplex'): if the simplex has no image.
        """
        if simplex not in self.assignment:
            raise SimplicialError('unassigned simplex: ' + simplex)
        return self.assignment[simplex]

    def apply(self, ref: DegenerateRef) -> DegenerateRef:
        """Return f(s_J x) = s_J f(x)."""
        return self.image(ref.target).degenerate(ref.degens)

    def is_identity(self) -> bool:
        """Return True if the map is the identity of its source."""
        return (self.source == self.target and all(
            self.assignment.get(simplex) == DegenerateRef.of(simplex)
            for simplex in self.source.ids))

    def check(self) -> ValidationReport:
        """Return every unassigned simplex, dimension mismatch and face violation."""
        report = ValidationReport()
        for simplex in self.source.ids:
            ref = self.assignment.get(simplex)
            if ref is None:
                report.add('unassigned', simplex)
                continue
            if ref.target not in self.target:
                report.add('unknown-target', simplex, ref.target)
                continue
            n = self.source.dim(simplex)
            if self.target.dim(ref) != n:
                report.add('dimension', simplex,
                           'image has dimension {0}'.format(self.target.dim(ref)))
        if not report.ok:
            return report
        for simplex in self.source.ids:
            n = self.source.dim(simplex)
            if n == 0:
                continue
            image = self.assignment[simplex]
            for i, face in enumerate(self.source.faces_of(simplex)):
                if self.apply(face) != self.target.face(image, i):
                    report.add('face', simplex, 'f d{0} != d{0} f'.format(i))
        return report

    def compose(self, other: 'SimplicialMap') -> 'SimplicialMap':
        """Return self after other."""
        return SimplicialMap(other.source, self.target, {
            simplex: self.apply(ref) for simplex, ref in other.assignment.items()})

    def to_json(self) -> dict:
        """Return the JSON form {"schema", "assign"}."""
        return {
            'schema': SCHEMA,
            'assign': {simplex: ref.to_json() for simplex, ref in self.assignment.items()},
        }

    @classmethod
    def from_json(cls, value: dict, source: SimplicialSetData,
                  target: SimplicialSetData) -> 'SimplicialMap':
        """
        Build a map from its JSON form.

        Exception
        - FormatError('unsupported schema'): if the schema field is not 'ssetv1'.
        - FormatError('malformed map'): in case of a malformed value.
        """
        if not isinstance(value, dict) or value.get('schema') != SCHEMA:
            raise FormatError('unsupported schema')
        try:
            assignment = {str(simplex): DegenerateRef.from_json(ref)
                          for simplex, ref in value['assign'].items()}
        except (KeyError, TypeError, ValueError, AttributeError, SimplicialError):
            raise FormatError('malformed map') from None
        return cls(source, target, assignment)


def delta_quotient(n: int) -> ReducedSimplicialSet:
    """
    Return the n-simplex modulo its boundary.

    Parameters
    - n: the dimension, at least 1.

    Return: one vertex 'v' and one nondegenerate n-simplex 'e<n>' whose faces
    are all the fully degenerate (n - 1)-simplex on 'v'.

    Exception
    - SimplicialError('dimension must be positive'): if n < 1.
    """
    if n < 1:
        raise SimplicialError('dimension must be positive')
    top = 'e{0}'.format(n)
    face = DegenerateRef(tuple(range(n - 2, -1, -1)), _VERTEX)
    by_dim: List[List[str]] = [[_VERTEX]] + [[] for _ in range(n)]
    by_dim[n] = [top]
    return ReducedSimplicialSet(by_dim, {top: [face] * (n + 1)},
                                'delta_quotient({0})'.format(n))


def wedge_of(summands: Sequence[ReducedSimplicialSet]) -> ReducedSimplicialSet:
    """
    Return the wedge of reduced simplicial sets at their base vertices.

    The simplices of summand k are renamed 'w<k>_<id>'; the base vertices are
    identified with 'v'.  The wedge of no summands is the point.
    """
    by_dim: List[List[str]] = [[_VERTEX]]
    faces: Dict[str, List[DegenerateRef]] = {}
    for k, summand in enumerate(summands):
        mapping = {simplex: 'w{0}_{1}'.format(k, simplex) for simplex in summand.ids}
        mapping[summand.vertex] = _VERTEX
        for n in range(1, summand.top_dim + 1):
            while len(by_dim) <= n:
                by_dim.append([])
            for simplex in summand.simplices(n):
                by_dim[n].append(mapping[simplex])
                faces[mapping[simplex]] = [ref.rename(mapping)
                                           for ref in summand.faces_of(simplex)]
    name = 'wedge({0})'.format(', '.join(summand.name for summand in summands))
    return ReducedSimplicialSet(by_dim, faces, name if summands else 'point')


def point() -> ReducedSimplicialSet:
    """Return the one-vertex simplicial set."""
    return wedge_of([])


def build_standard(model: int, *params) -> ReducedSimplicialSet:
    """
    Build a standard model.

    Parameters
    - model: MODEL_DELTA_QUOTIENT (param n), MODEL_WEDGE (param list of
    reduced sets) or MODEL_POINT.

    Exception
    - SimplicialError('unsupported model'): in case of an unknown model.
    """
    if model == MODEL_DELTA_QUOTIENT:
        return delta_quotient(*params)
    if model == MODEL_WEDGE:
        return wedge_of(*params)
    if model == MODEL_POINT:
        return point()
    raise SimplicialError('unsupported model')


def new(model: int, *params) -> ReducedSimplicialSet:
    """
    Create a standard model and return it.

    Parameters
    - model: one of MODEL_DELTA_QUOTIENT, MODEL_WEDGE, MODEL_POINT.
    - params: the model parameters.

    Return: new reduced simplicial set.

    Exception
    - SimplicialError('unsupported model'): in case of an unknown model.
    - SimplicialError('dimension must be positive'): for delta_quotient(0).
    """
    return build_standard(model, *params)


def build_presentation_complex(presentation: GroupPresentation,
                               name: str = '') -> ReducedSimplicialSet:
    """
    Return the presentation 2-complex of a group presentation.

    One vertex 'v', one edge per generator named after it and, for relator k
    with letters x_1 .. x_l, prefix diagonals 'r<k>_p<i>' and triangles
    'r<k>_t<i>' encoding p_{i+1} = p_i x_{i+1}.  p_0 and p_l are the
    degenerate edge.  p_1 is the edge of x_1 when x_1 is positive and l >= 2;
    otherwise an extra triangle encodes p_1 = p_0 x_1.  A positive letter x
    gives faces (d_0, d_1, d_2) = (x, p_{i+1}, p_i) and an inverse letter gives
    (x, p_i, p_{i+1}).

    Exception
    - SimplicialError('reserved simplex name'): if a generator is named 'v'.
    - SimplicialError('empty relator'): if a relator is empty.
    """
    if _VERTEX in presentation.generators:
        raise SimplicialError('reserved simplex name: ' + _VERTEX)
    degenerate_edge = DegenerateRef((0,), _VERTEX)
    vertex = DegenerateRef.of(_VERTEX)
    edges = list(presentation.generators)
    triangles: List[str] = []
    faces: Dict[str, List[DegenerateRef]] = {edge: [vertex, vertex] for edge in edges}
    for k, word in enumerate(presentation.relators):
        length = len(word)
        if not length:
            raise SimplicialError('empty relator')
        prefixes: List[DegenerateRef] = [degenerate_edge] * (length + 1)
        first_name, first_exp = word[0]
        start = 0
        if first_exp > 0 and length >= 2:
            prefixes[1] = DegenerateRef.of(first_name)
            start = 1
        for i in range(1 if start == 0 else 2, length):
            diagonal = 'r{0}_p{1}'.format(k, i)
            edges.append(diagonal)
            faces[diagonal] = [vertex, vertex]
            prefixes[i] = DegenerateRef.of(diagonal)
        for i in range(start, length):
            letter_name, letter_exp = word[i]
            triangle = 'r{0}_t{1}'.format(k, i)
            triangles.append(triangle)
            edge = DegenerateRef.of(letter_name)
            if letter_exp > 0:
                faces[triangle] = [edge, prefixes[i + 1], prefixes[i]]
            else:
                faces[triangle] = [edge, prefixes[i], prefixes[i + 1]]
    by_dim = [[_VERTEX], edges, triangles]
    return ReducedSimplicialSet(by_dim, faces, name or 'presentation complex')


def collapse(space: ReducedSimplicialSet) -> SimplicialMap:
    """Return the map of a reduced simplicial set to the point."""
    target = point()
    return SimplicialMap(space, target, {
        simplex: target.degenerate_vertex(space.dim(simplex)) for simplex in space.ids})


class SimplicialError(Exception):
    """
    The class that implements exceptions of the simplicial sets.

    Exceptions
    - dimension must be positive.
    - not reduced.
    - invalid simplicial set.
    - empty relator.
    - incomplete coset table.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
