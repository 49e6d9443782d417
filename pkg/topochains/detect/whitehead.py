#Exact chain-level topology functions.
#
#License: MIT

"""
Certificates that a simplicial map is not a weak homotopy equivalence.

A weak equivalence induces isomorphisms on ordinary homology, on the
fundamental group, on the homology of universal covers and on homology with
every local coefficient system pulled back from the target; between simply
connected spaces it also induces an isomorphism on the homology of the cobar
construction.  Each check below computes one of these invariants on both
sides.  A difference is a witness; agreement everywhere only says that the map
is consistent with being an equivalence up to the checked degree.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from topochains.cobar import DEFAULT_MAX_DEG, DEFAULT_MAX_LEN, cobar, cobar_chain_map
from topochains.cobar import pi1_presentation
from topochains.coalgebra import DgCoalgebra, induced_chain_map, normalized_chains
from topochains.groups import DEFAULT_TC_BUDGET, CosetTable, Exhausted, PiModule
from topochains.groups import abelianization, regular_module, todd_coxeter
from topochains.linear import ChainComplex, ChainMap, FGAbelianGroup, homology
from topochains.linear import induced_map_on_homology
from topochains.simplicial import SimplicialMap
from topochains.twisted import edge_words, twisted_chain_map, twisted_tensor
from topochains.utils import inputs_hash

__all__ = (
    'OrdinaryHomology',
    'Pi1Invariant',
    'LocalHomology',
    'CobarHomology',
    'Distinguished',
    'Inconclusive',
    'Verdict',
    'DetectConfig',
    'ordinary_quasi_iso',
    'compare_pi1',
    'compare_local_homology',
    'compare_universal_covers',
    'compare_cobar',
    'whitehead_verdict',
    'replay_witness',
    'NOT_WEAK_EQUIVALENCE',
    'CONSISTENT_UP_TO',
    'DEFAULT_UP_TO',
    'DetectError'
)

_LOGGER = logging.getLogger(__name__)

DEFAULT_UP_TO: int = 2

#Verdict outcomes.
NOT_WEAK_EQUIVALENCE: str = 'NotWeakEquivalence'
CONSISTENT_UP_TO: str = 'ConsistentUpTo'


@dataclass(frozen=True)
class OrdinaryHomology:
    """Integral homology differs, or the induced map is not an isomorphism."""

    degree: int
    source: str
    target: str
    detail: str = 'groups differ'

    kind = 'OrdinaryHomology'

    def to_json(self) -> dict:
        return {'kind': self.kind, 'degree': self.degree, 'source': self.source,
                'target': self.target, 'detail': self.detail}


@dataclass(frozen=True)
class Pi1Invariant:
    """A fundamental group invariant differs: abelianization, order or surjectivity."""

    name: str
    source: str
    target: str

    kind = 'Pi1Invariant'

    def to_json(self) -> dict:
        return {'kind': self.kind, 'name': self.name, 'source': self.source,
                'target': self.target}


@dataclass(frozen=True)
class LocalHomology:
    """
    Homology with local coefficients differs.

    Attributes
    - module: the module name.
    - degree: the degree.
    - source, target: the homology groups.
    - mode: 'universal-cover' when each side uses its own regular module,
    'restricted' when the source carries the restriction of a target module.
    """

    module: str
    degree: int
    source: str
    target: str
    mode: str = 'restricted'
    detail: str = 'groups differ'

    kind = 'LocalHomology'

    def to_json(self) -> dict:
        return {'kind': self.kind, 'module': self.module, 'degree': self.degree,
                'source': self.source, 'target': self.target, 'mode': self.mode,
                'detail': self.detail}


@dataclass(frozen=True)
class CobarHomology:
    """Homology of the cobar construction differs in a closed window degree."""

    degree: int
    source: str
    target: str
    detail: str = 'groups differ'

    kind = 'CobarHomology'

    def to_json(self) -> dict:
        return {'kind': self.kind, 'degree': self.degree, 'source': self.source,
                'target': self.target, 'detail': self.detail}


Witness = Union[OrdinaryHomology, Pi1Invariant, LocalHomology, CobarHomology]


@dataclass(frozen=True)
class Distinguished:
    """Outcome of a check that found witnesses."""

    witnesses: Tuple[Witness, ...]
    evidence: Tuple[Dict[str, Any], ...] = ()

    distinguished = True

    def to_json(self) -> dict:
        return {'outcome': 'Distinguished',
                'witnesses': [witness.to_json() for witness in self.witnesses],
                'evidence': list(self.evidence)}


@dataclass(frozen=True)
class Inconclusive:
    """Outcome of a check whose invariants agree."""

    evidence: Tuple[Dict[str, Any], ...] = ()

    distinguished = False
    witnesses: Tuple[Witness, ...] = ()

    def to_json(self) -> dict:
        return {'outcome': 'Inconclusive', 'evidence': list(self.evidence)}


PartialVerdict = Union[Distinguished, Inconclusive]


def _partial(witnesses: List[Witness], evidence: List[Dict[str, Any]]) -> PartialVerdict:
    if witnesses:
        return Distinguished(tuple(witnesses), tuple(evidence))
    return Inconclusive(tuple(evidence))


@dataclass
class DetectConfig:
    """
    Parameters of the verdict.

    Attributes
    - up_to: the highest homology degree checked (at least 1).
    - tc_budget: the coset bound of every enumeration.
    - modules: modules over the fundamental group of the target.
    - max_deg, max_len: the cobar window.
    """

    up_to: int = DEFAULT_UP_TO
    tc_budget: int = DEFAULT_TC_BUDGET
    modules: Sequence[PiModule] = ()
    max_deg: int = DEFAULT_MAX_DEG
    max_len: int = DEFAULT_MAX_LEN

    def __post_init__(self) -> None:
        if self.up_to < 1:
            raise DetectError('config degrees must be at least 1')
        if self.tc_budget < 1:
            raise DetectError('invalid coset bound')

    def to_json(self) -> dict:
        return {'up_to': self.up_to, 'tc_budget': self.tc_budget,
                'modules': [module.name for module in self.modules],
                'max_deg': self.max_deg, 'max_len': self.max_len}


@dataclass
class Verdict:
    """
    Outcome of the full procedure.

    Attributes
    - outcome: NOT_WEAK_EQUIVALENCE or CONSISTENT_UP_TO.
    - depth: the degree up to which the checks ran.
    - witnesses: every distinguishing witness, in check order.
    - transcript: the checks performed, as {check, inputs_hash, result}.
    """

    outcome: str
    depth: int
    witnesses: List[Witness] = field(default_factory=list)
    transcript: List[Dict[str, Any]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {'outcome': self.outcome, 'depth': self.depth,
                'witnesses': [witness.to_json() for witness in self.witnesses],
                'transcript': list(self.transcript)}


class _MapContext:
    """Chains, groups and twisted homology of both sides of a map, computed once."""

    def __init__(self, simplicial_map: SimplicialMap) -> None:
        report = simplicial_map.check()
        if not report.ok:
            raise DetectError('invalid simplicial map: {0} at {1}'.format(
                report[0].kind, report[0].where))
        self.map = simplicial_map
        self.same = simplicial_map.source is simplicial_map.target
        self.identity = simplicial_map.is_identity()
        self._chains: Optional[Tuple[DgCoalgebra, DgCoalgebra]] = None
        self._chain_map: Optional[ChainMap] = None
        self._presentations = None
        self._tables: Dict[Tuple[str, int], Union[CosetTable, Exhausted]] = {}
        self._homology: Dict[Tuple[str, int, int], FGAbelianGroup] = {}
        self._twisted: Dict[Tuple[str, int], ChainComplex] = {}

    @property
    def chains(self) -> Tuple[DgCoalgebra, DgCoalgebra]:
        if self._chains is None:
            source = normalized_chains(self.map.source)
            target = source if self.same else normalized_chains(self.map.target)
            self._chains = (source, target)
        return self._chains

    @property
    def chain_map(self) -> ChainMap:
        if self._chain_map is None:
            source, target = self.chains
            self._chain_map = induced_chain_map(self.map, source, target)
        return self._chain_map

    @property
    def presentations(self):
        if self._presentations is None:
            source = pi1_presentation(self.map.source)
            target = source if self.same else pi1_presentation(self.map.target)
            self._presentations = (source, target)
        return self._presentations

    def table(self, side: str, budget: int) -> Union[CosetTable, Exhausted]:
        key = ('target' if self.same else side, budget)
        if key not in self._tables:
            presentation = self.presentations[0 if key[0] == 'source' else 1]
            self._tables[key] = todd_coxeter(presentation, budget)
        return self._tables[key]

    def own_regular_homology(self, side: str, n: int, budget: int) -> FGAbelianGroup:
        side = 'target' if self.same else side
        key = (side, n, budget)
        if key not in self._homology:
            index = 0 if side == 'source' else 1
            complex_key = (side, budget)
            if complex_key not in self._twisted:
                table = self.table(side, budget)
                self._twisted[complex_key] = twisted_tensor(
                    self.chains[index], regular_module(table), self.presentations[index])
            self._homology[key] = homology(self._twisted[complex_key], n)
        return self._homology[key]

    def hash(self, check: str, params: Dict[str, Any]) -> str:
        return inputs_hash({
            'check': check,
            'map': self.map.to_json(),
            'source': self.map.source.to_json(),
            'target': self.map.target.to_json(),
            'params': params,
        })


def _context(simplicial_map: SimplicialMap, context: Optional[_MapContext]) -> _MapContext:
    if context is not None and context.map is simplicial_map:
        return context
    return _MapContext(simplicial_map)


def _ordinary(context: _MapContext, up_to: int) -> Tuple[bool, List[Dict[str, Any]], PartialVerdict]:
    source, target = context.chains
    report = []
    witnesses: List[Witness] = []
    for n in range(up_to + 1):
        left = homology(source.complex, n)
        right = homology(target.complex, n)
        if left != right:
            is_iso = False
            witnesses.append(OrdinaryHomology(n, str(left), str(right)))
        elif context.identity:
            is_iso = True
        else:
            is_iso = induced_map_on_homology(context.chain_map, n).is_iso
            if not is_iso:
                witnesses.append(OrdinaryHomology(n, str(left), str(right), 'map not iso'))
        report.append({'degree': n, 'source': str(left), 'target': str(right), 'iso': is_iso})
    return not witnesses, report, _partial(witnesses, report)


def ordinary_quasi_iso(simplicial_map: SimplicialMap, up_to: int = DEFAULT_UP_TO,
                       context: _MapContext = None) -> Tuple[bool, List[Dict[str, Any]]]:
    """
    Decide whether a map induces isomorphisms on integral homology.

    Parameters
    - simplicial_map: the map f.
    - up_to: the highest degree.

    Return: pair (True iff every degree <= up_to is an isomorphism, the
    per-degree report {degree, source, target, iso}).
    """
    ok, report, _ = _ordinary(_context(simplicial_map, context), up_to)
    return ok, report


def _subgroup_size(table: CosetTable, words: Sequence) -> int:
    seen = {0}
    frontier = [0]
    while frontier:
        coset = frontier.pop()
        for word in words:
            for image in (table.evaluate(word, coset), _evaluate_inverse(table, word, coset)):
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)
    return len(seen)


def _evaluate_inverse(table: CosetTable, word, coset: int) -> int:
    for name, exp in reversed(tuple(word)):
        coset = table.act(coset, (name, -exp))
    return coset


def compare_pi1(simplicial_map: SimplicialMap, budget: int = DEFAULT_TC_BUDGET,
                context: _MapContext = None) -> PartialVerdict:
    """
    Compare the fundamental groups of source and target.

    Parameters
    - simplicial_map: the map f.
    - budget: the coset bound of both enumerations.

    Return: Distinguished when the abelianizations differ, when both groups
    are enumerated with different orders, or when the target is enumerated
    and the image of pi_1(f) is a proper subgroup; Inconclusive otherwise.
    """
    context = _context(simplicial_map, context)
    source, target = context.presentations
    witnesses: List[Witness] = []
    evidence: List[Dict[str, Any]] = []
    left, right = abelianization(source), abelianization(target)
    evidence.append({'invariant': 'abelianization', 'source': str(left), 'target': str(right)})
    if left != right:
        witnesses.append(Pi1Invariant('abelianization', str(left), str(right)))
    source_table = context.table('source', budget)
    target_table = context.table('target', budget)
    orders = [None if isinstance(table, Exhausted) else table.size
              for table in (source_table, target_table)]
    evidence.append({'invariant': 'order',
                     'source': 'exhausted' if orders[0] is None else orders[0],
                     'target': 'exhausted' if orders[1] is None else orders[1]})
    if None not in orders and orders[0] != orders[1]:
        witnesses.append(Pi1Invariant('order', str(orders[0]), str(orders[1])))
    if orders[1] is not None:
        if context.identity:
            image = orders[1]
        else:
            images = [word for word in edge_words(simplicial_map).values() if word]
            image = _subgroup_size(target_table, images)
        evidence.append({'invariant': 'image', 'size': image, 'order': orders[1]})
        if image != orders[1]:
            witnesses.append(Pi1Invariant('surjectivity', str(image), str(orders[1])))
    return _partial(witnesses, evidence)


def _compare_twisted(context: _MapContext, module: PiModule, up_to: int) -> PartialVerdict:
    source, target = context.chains
    chain_map = twisted_chain_map(context.map, module, source, target)
    witnesses: List[Witness] = []
    evidence: List[Dict[str, Any]] = []
    for n in range(up_to + 1):
        left = homology(chain_map.source, n)
        right = homology(chain_map.target, n)
        if left != right:
            witnesses.append(LocalHomology(module.name, n, str(left), str(right)))
        elif not context.identity and not induced_map_on_homology(chain_map, n).is_iso:
            witnesses.append(LocalHomology(module.name, n, str(left), str(right),
                                           detail='map not iso'))
        evidence.append({'module': module.name, 'degree': n,
                         'source': str(left), 'target': str(right)})
    return _partial(witnesses, evidence)


def compare_local_homology(simplicial_map: SimplicialMap, module: PiModule,
                           up_to: int = DEFAULT_UP_TO,
                           context: _MapContext = None) -> PartialVerdict:
    """
    Compare homology with local coefficients along a map.

    Parameters
    - simplicial_map: the map f: X -> Y.
    - module: a module over pi_1 Y; X carries its restriction along f, a
    source edge with degenerate image acting as the identity.
    - up_to: the highest degree.

    Return: Distinguished when some degree has different groups or a
    non-isomorphic induced map; Inconclusive with the table otherwise.
    """
    return _compare_twisted(_context(simplicial_map, context), module, up_to)


def compare_universal_covers(simplicial_map: SimplicialMap, up_to: int = DEFAULT_UP_TO,
                             budget: int = DEFAULT_TC_BUDGET,
                             context: _MapContext = None) -> PartialVerdict:
    """
    Compare the homology of the universal covers.

    When both groups are enumerated, H_n(X; Z[pi_X]) and H_n(Y; Z[pi_Y]) are
    compared.  When the groups agree in order, or only the target is
    enumerated, the regular module of the target is restricted along f and
    compared through the twisted chain map.

    Return: Distinguished or Inconclusive; Inconclusive with the bound when
    the target group is not enumerated within the budget.
    """
    context = _context(simplicial_map, context)
    source_table = context.table('source', budget)
    target_table = context.table('target', budget)
    if isinstance(target_table, Exhausted):
        return Inconclusive(({'reason': 'target group not enumerated', 'bound': budget},))
    witnesses: List[Witness] = []
    evidence: List[Dict[str, Any]] = []
    if not isinstance(source_table, Exhausted):
        for n in range(up_to + 1):
            left = context.own_regular_homology('source', n, budget)
            right = context.own_regular_homology('target', n, budget)
            evidence.append({'module': 'regular', 'mode': 'universal-cover', 'degree': n,
                             'source': str(left), 'target': str(right)})
            if left != right:
                witnesses.append(LocalHomology('regular', n, str(left), str(right),
                                               'universal-cover'))
        if source_table.size != target_table.size:
            return _partial(witnesses, evidence)
    regular = regular_module(target_table)
    restricted = _compare_twisted(context, regular, up_to)
    return _partial(witnesses + list(restricted.witnesses), evidence + list(restricted.evidence))


def compare_cobar(simplicial_map: SimplicialMap, up_to: int = DEFAULT_UP_TO,
                  max_deg: int = DEFAULT_MAX_DEG, max_len: int = DEFAULT_MAX_LEN,
                  context: _MapContext = None) -> PartialVerdict:
    """
    Compare the cobar homology of simply connected chains on closed windows.

    Return: Distinguished when a closed degree <= up_to has different groups
    or a non-isomorphic induced map; Inconclusive otherwise, and without
    evidence when a side has nondegenerate 1-simplices.
    """
    context = _context(simplicial_map, context)
    source, target = context.chains
    if source.rank(1) or target.rank(1):
        return Inconclusive(({'reason': 'not simply connected chains'},))
    left_window = cobar(source, max_deg, max_len)
    right_window = left_window if context.same else cobar(target, max_deg, max_len)
    chain_map = None
    witnesses: List[Witness] = []
    evidence: List[Dict[str, Any]] = []
    for d in range(up_to + 1):
        if not (left_window.is_closed(d) and right_window.is_closed(d)):
            evidence.append({'degree': d, 'closed': False})
            continue
        left, right = left_window.homology(d), right_window.homology(d)
        evidence.append({'degree': d, 'closed': True, 'source': str(left), 'target': str(right)})
        if left != right:
            witnesses.append(CobarHomology(d, str(left), str(right)))
        elif not context.identity:
            if chain_map is None:
                chain_map = cobar_chain_map(context.chain_map, left_window, right_window,
                                            min(max_deg, up_to + 1))
            if not induced_map_on_homology(chain_map, d).is_iso:
                witnesses.append(CobarHomology(d, str(left), str(right), 'map not iso'))
    return _partial(witnesses, evidence)


def _record(verdict: Verdict, context: _MapContext, check: str, params: Dict[str, Any],
            result: PartialVerdict) -> None:
    verdict.transcript.append({
        'check': check,
        'inputs_hash': context.hash(check, params),
        'result': result.to_json(),
    })
    verdict.witnesses.extend(result.witnesses)
    _LOGGER.info('check %s: %s', check, 'distinguished' if result.distinguished
                 else 'inconclusive')


def whitehead_verdict(simplicial_map: SimplicialMap, config: DetectConfig = None) -> Verdict:
    """
    Run every check on a map.

    Parameters
    - simplicial_map: the map f between reduced simplicial sets.
    - config: the DetectConfig; defaults apply when omitted.

    Return: Verdict NotWeakEquivalence with every witness when some check
    distinguishes, ConsistentUpTo(up_to) otherwise.  The checks run in the
    order ordinary homology, fundamental group, universal covers, user
    modules, cobar homology.

    Exception
    - DetectError('config degrees must be at least 1'): if up_to < 1.
    - DetectError('invalid simplicial map'): if the map check fails.
    """
    config = config or DetectConfig()
    context = _MapContext(simplicial_map)
    verdict = Verdict(CONSISTENT_UP_TO, config.up_to)
    _record(verdict, context, 'ordinary_homology', {'up_to': config.up_to},
            _ordinary(context, config.up_to)[2])
    _record(verdict, context, 'pi1', {'tc_budget': config.tc_budget},
            compare_pi1(simplicial_map, config.tc_budget, context))
    _record(verdict, context, 'universal_cover',
            {'up_to': config.up_to, 'tc_budget': config.tc_budget},
            compare_universal_covers(simplicial_map, config.up_to, config.tc_budget, context))
    for module in config.modules:
        _record(verdict, context, 'local_homology',
                {'up_to': config.up_to, 'module': module.to_json()},
                compare_local_homology(simplicial_map, module, config.up_to, context))
    _record(verdict, context, 'cobar_homology',
            {'up_to': config.up_to, 'max_deg': config.max_deg, 'max_len': config.max_len},
            compare_cobar(simplicial_map, config.up_to, config.max_deg, config.max_len, context))
    if verdict.witnesses:
        verdict.outcome = NOT_WEAK_EQUIVALENCE
    _LOGGER.info('verdict %s with %d witnesses', verdict.outcome, len(verdict.witnesses))
    return verdict


def replay_witness(witness: Witness, simplicial_map: SimplicialMap,
                   config: DetectConfig = None) -> bool:
    """
    Re-execute the check that produced a witness.

    Return: True if the fresh check reproduces the same witness.

    Exception
    - DetectError('unknown witness'): for any other value.
    - DetectError('unknown module'): if a restricted module is not in the config.
    """
    config = config or DetectConfig()
    if isinstance(witness, OrdinaryHomology):
        result = _ordinary(_MapContext(simplicial_map), max(config.up_to, witness.degree))[2]
    elif isinstance(witness, Pi1Invariant):
        result = compare_pi1(simplicial_map, config.tc_budget)
    elif isinstance(witness, LocalHomology):
        up_to = max(config.up_to, witness.degree)
        modules = {module.name: module for module in config.modules}
        if witness.mode == 'universal-cover' or witness.module not in modules:
            if witness.module != 'regular':
                raise DetectError('unknown module: ' + witness.module)
            result = compare_universal_covers(simplicial_map, up_to, config.tc_budget)
        else:
            result = compare_local_homology(simplicial_map, modules[witness.module], up_to)
    elif isinstance(witness, CobarHomology):
        result = compare_cobar(simplicial_map, max(config.up_to, witness.degree),
                               config.max_deg, config.max_len)
    else:
        raise DetectError('unknown witness')
    return witness in result.witnesses


class DetectError(Exception):
    """
    The class that implements exceptions of the verdict procedure.

    Exceptions
    - config degrees must be at least 1.
    - invalid coset bound.
    - invalid simplicial map.
    - unknown witness.
    - unknown module.
    """

    def __init__(self, msg: str) -> None:
        """
        Initialize exception.

        Parameters
        - msg: message to output when an exception occurs.
        """
        super().__init__(msg)
        self.msg = msg
