import unittest
from unittest import mock
import pytest

from topochains.detect import (
    OrdinaryHomology,
    Pi1Invariant,
    LocalHomology,
    CobarHomology,
    Distinguished,
    Inconclusive,
    DetectConfig,
    ordinary_quasi_iso,
    compare_pi1,
    compare_local_homology,
    compare_universal_covers,
    compare_cobar,
    whitehead_verdict,
    replay_witness,
    NOT_WEAK_EQUIVALENCE,
    CONSISTENT_UP_TO,
    DetectError
)
from topochains.groups import Exhausted, GroupPresentation, PiModule
from topochains.linear import IntMatrix
from topochains.simplicial import SimplicialMap, build_presentation_complex, collapse
from topochains.simplicial import delta_quotient

RP2 = build_presentation_complex(GroupPresentation(['a'], ['a a']), 'rp2')
TORUS = build_presentation_complex(GroupPresentation(['a', 'b'], ['a b a^-1 b^-1']), 'torus')
BINARY_ICOSAHEDRAL = build_presentation_complex(
    GroupPresentation(['s', 't'], ['s t s t s^-3', 's t s t t^-5']), 'binary-icosahedral')
SIGN = PiModule(1, {'a': IntMatrix.from_dense([[-1]])}, 'sign')
SMALL = DetectConfig(tc_budget=200)


@pytest.mark.detect
class TestChecks(unittest.TestCase):

    def test_ordinary_quasi_iso(self):
        ok, report = ordinary_quasi_iso(collapse(BINARY_ICOSAHEDRAL))
        self.assertTrue(ok)
        self.assertEqual([entry['target'] for entry in report], ['Z', '0', '0'])
        ok, report = ordinary_quasi_iso(collapse(TORUS), 1)
        self.assertFalse(ok)
        self.assertEqual(report[1], {'degree': 1, 'source': 'Z^2', 'target': '0', 'iso': False})

    def test_pi1_order(self):
        result = compare_pi1(collapse(BINARY_ICOSAHEDRAL))
        self.assertIsInstance(result, Distinguished)
        self.assertEqual(result.witnesses, (Pi1Invariant('order', '120', '1'),))

    def test_pi1_exhausted(self):
        result = compare_pi1(collapse(TORUS), 50)
        self.assertEqual(result.witnesses, (Pi1Invariant('abelianization', 'Z^2', '0'),))
        self.assertIn({'invariant': 'order', 'source': 'exhausted', 'target': 1},
                      result.evidence)

    def test_local_homology(self):
        result = compare_local_homology(SimplicialMap.identity(RP2), SIGN)
        self.assertIsInstance(result, Inconclusive)
        self.assertEqual([entry['source'] for entry in result.evidence], ['Z/2', '0', 'Z'])

    def test_universal_covers(self):
        result = compare_universal_covers(SimplicialMap.identity(RP2))
        self.assertFalse(result.distinguished)
        result = compare_universal_covers(collapse(TORUS), budget=50)
        self.assertIn(LocalHomology('regular', 1, 'Z^2', '0'), result.witnesses)

    @mock.patch('topochains.detect.whitehead.todd_coxeter', return_value=Exhausted(5))
    def test_universal_covers_exhausted(self, enumerate_mock):
        result = compare_universal_covers(SimplicialMap.identity(RP2), budget=5)
        self.assertIsInstance(result, Inconclusive)
        self.assertEqual(result.evidence, ({'reason': 'target group not enumerated', 'bound': 5},))
        self.assertTrue(enumerate_mock.called)

    def test_cobar(self):
        result = compare_cobar(collapse(delta_quotient(2)))
        self.assertEqual(result.witnesses,
                         (CobarHomology(1, 'Z', '0'), CobarHomology(2, 'Z', '0')))
        skipped = compare_cobar(SimplicialMap.identity(RP2))
        self.assertEqual(skipped.evidence, ({'reason': 'not simply connected chains'},))

    def test_cobar_identity(self):
        result = compare_cobar(SimplicialMap.identity(delta_quotient(3)))
        self.assertIsInstance(result, Inconclusive)
        self.assertEqual(result.evidence[2], {'degree': 2, 'closed': True,
                                              'source': 'Z', 'target': 'Z'})


@pytest.mark.detect
class TestVerdict(unittest.TestCase):

    @pytest.mark.slow
    def test_homology_isomorphism_is_not_weak_equivalence(self):
        to_point = collapse(BINARY_ICOSAHEDRAL)
        self.assertTrue(ordinary_quasi_iso(to_point)[0])
        verdict = whitehead_verdict(to_point)
        self.assertEqual(verdict.outcome, NOT_WEAK_EQUIVALENCE)
        self.assertEqual(verdict.witnesses, [
            Pi1Invariant('order', '120', '1'),
            LocalHomology('regular', 2, 'Z^119', '0', 'universal-cover')])
        ordinary = verdict.transcript[0]
        self.assertEqual(ordinary['check'], 'ordinary_homology')
        self.assertEqual(ordinary['result']['outcome'], 'Inconclusive')

    def test_raising_the_depth_keeps_witnesses(self):
        maps = (collapse(TORUS), collapse(RP2), collapse(delta_quotient(2)),
                SimplicialMap.identity(RP2))
        for simplicial_map in maps:
            low = whitehead_verdict(simplicial_map, DetectConfig(up_to=1, tc_budget=200))
            high = whitehead_verdict(simplicial_map, DetectConfig(up_to=2, tc_budget=200))
            if low.outcome == NOT_WEAK_EQUIVALENCE:
                self.assertEqual(high.outcome, NOT_WEAK_EQUIVALENCE)
                self.assertTrue(all(witness in high.witnesses for witness in low.witnesses))
            else:
                self.assertEqual((low.depth, high.depth), (1, 2))
        self.assertEqual(whitehead_verdict(SimplicialMap.identity(RP2),
                                           DetectConfig(up_to=1, tc_budget=200)).outcome,
                         CONSISTENT_UP_TO)

    def test_torus(self):
        verdict = whitehead_verdict(collapse(TORUS), SMALL)
        self.assertEqual(verdict.outcome, NOT_WEAK_EQUIVALENCE)
        self.assertEqual(verdict.witnesses[0], OrdinaryHomology(1, 'Z^2', '0'))
        self.assertIn(Pi1Invariant('abelianization', 'Z^2', '0'), verdict.witnesses)

    def test_s2(self):
        verdict = whitehead_verdict(collapse(delta_quotient(2)), SMALL)
        self.assertEqual(verdict.outcome, NOT_WEAK_EQUIVALENCE)
        self.assertIn(CobarHomology(1, 'Z', '0'), verdict.witnesses)

    def test_identity(self):
        config = DetectConfig(tc_budget=200, modules=(SIGN,))
        verdict = whitehead_verdict(SimplicialMap.identity(RP2), config)
        self.assertEqual(verdict.outcome, CONSISTENT_UP_TO)
        self.assertEqual(verdict.depth, 2)
        self.assertEqual(verdict.witnesses, [])
        self.assertEqual([entry['check'] for entry in verdict.transcript],
                         ['ordinary_homology', 'pi1', 'universal_cover', 'local_homology',
                          'cobar_homology'])
        self.assertTrue(all(len(entry['inputs_hash']) == 64 for entry in verdict.transcript))

    def test_transcript_is_reproducible(self):
        first = whitehead_verdict(collapse(delta_quotient(2)), SMALL)
        second = whitehead_verdict(collapse(delta_quotient(2)), SMALL)
        self.assertEqual(first.to_json(), second.to_json())

    def test_invalid_map_raises(self):
        space = delta_quotient(1)
        with self.assertRaises(DetectError) as context:
            whitehead_verdict(SimplicialMap(space, space, {'v': space.degenerate_vertex(0)}))
        self.assertTrue('invalid simplicial map' in str(context.exception))

    def test_config_raises(self):
        with self.assertRaises(DetectError) as context:
            DetectConfig(up_to=0)
        self.assertTrue('config degrees must be at least 1' in str(context.exception))
        with self.assertRaises(DetectError) as context:
            DetectConfig(tc_budget=0)
        self.assertTrue('invalid coset bound' in str(context.exception))


@pytest.mark.detect
class TestReplay(unittest.TestCase):

    def test_replay(self):
        to_point = collapse(TORUS)
        self.assertTrue(replay_witness(OrdinaryHomology(1, 'Z^2', '0'), to_point, SMALL))
        self.assertTrue(replay_witness(Pi1Invariant('abelianization', 'Z^2', '0'),
                                       to_point, SMALL))
        self.assertFalse(replay_witness(OrdinaryHomology(0, 'Z', '0'), to_point, SMALL))
        self.assertTrue(replay_witness(CobarHomology(1, 'Z', '0'),
                                       collapse(delta_quotient(2)), SMALL))

    def test_replay_raises(self):
        to_point = collapse(TORUS)
        with self.assertRaises(DetectError) as context:
            replay_witness('witness', to_point)
        self.assertTrue('unknown witness' in str(context.exception))
        with self.assertRaises(DetectError) as context:
            replay_witness(LocalHomology('sign', 1, 'Z', '0'), to_point, SMALL)
        self.assertTrue('unknown module' in str(context.exception))
