import unittest
import pytest

from topochains.coalgebra import normalized_chains
from topochains.groups import GroupPresentation, todd_coxeter
from topochains.linear import FGAbelianGroup, homology
from topochains.simplicial import (
    DegenerateRef,
    normal_form,
    SimplicialSetData,
    ReducedSimplicialSet,
    SimplicialMap,
    validate,
    new,
    build_standard,
    delta_quotient,
    wedge_of,
    point,
    build_presentation_complex,
    collapse,
    covering_space,
    deck_transformations,
    lift_id,
    MODEL_DELTA_QUOTIENT,
    MODEL_POINT,
    MODEL_WEDGE,
    SimplicialError
)
from topochains.utils import FormatError

RP2 = GroupPresentation(['a'], ['a a'])


@pytest.mark.simplicial
class TestDegeneracies(unittest.TestCase):

    def test_normal_form(self):
        self.assertEqual(normal_form([0, 0]), (1, 0))
        self.assertEqual(normal_form([0, 1]), (2, 0))
        self.assertEqual(normal_form([2, 0]), (2, 0))

    def test_ref_raises(self):
        with self.assertRaises(SimplicialError) as context:
            DegenerateRef((0, 1), 'v')
        self.assertTrue('normal form' in str(context.exception))

    def test_face_of_degenerate(self):
        space = delta_quotient(2)
        self.assertEqual(space.face(DegenerateRef((0,), 'v'), 0), DegenerateRef.of('v'))
        self.assertEqual(space.face(DegenerateRef((1, 0), 'v'), 2), DegenerateRef((0,), 'v'))

    def test_face_raises(self):
        space = delta_quotient(2)
        with self.assertRaises(SimplicialError) as context:
            space.face(DegenerateRef.of('v'), 0)
        self.assertTrue('face index out of range' in str(context.exception))


@pytest.mark.simplicial
class TestModels(unittest.TestCase):

    def test_delta_quotient(self):
        for n in (1, 2, 3):
            space = new(MODEL_DELTA_QUOTIENT, n)
            self.assertEqual(space.top_dim, n)
            self.assertEqual(space.euler_characteristic(), 1 + (-1) ** n)
            self.assertTrue(validate(space).ok)

    def test_delta_quotient_raises(self):
        with self.assertRaises(SimplicialError) as context:
            delta_quotient(0)
        self.assertTrue('dimension must be positive' in str(context.exception))

    def test_point_and_wedge(self):
        self.assertEqual(new(MODEL_POINT).ids, ['v'])
        self.assertEqual(point().name, 'point')
        wedge = wedge_of([delta_quotient(1), delta_quotient(1)])
        self.assertEqual(wedge.simplices(1), ('w0_e1', 'w1_e1'))
        self.assertEqual(wedge.euler_characteristic(), -1)
        built = build_standard(MODEL_WEDGE, [delta_quotient(1), delta_quotient(2)])
        self.assertEqual(built.simplices(2), ('w1_e2',))
        self.assertTrue(validate(built).ok)

    def test_unsupported_model(self):
        with self.assertRaises(SimplicialError) as context:
            new(0x7f)
        self.assertTrue('unsupported model' in str(context.exception))

    def test_presentation_complex(self):
        space = build_presentation_complex(GroupPresentation(['a'], ['a a a']), 'p3')
        self.assertEqual(space.name, 'p3')
        self.assertEqual(space.simplices(1), ('a', 'r0_p2'))
        self.assertEqual(space.simplices(2), ('r0_t1', 'r0_t2'))
        self.assertEqual(space.euler_characteristic(), 1)
        self.assertEqual(space.back_face('r0_t1', 1), DegenerateRef.of('a'))
        self.assertEqual(space.front_face('r0_t1', 1), DegenerateRef.of('a'))

    def test_presentation_complex_inverse_letters(self):
        torus = build_presentation_complex(GroupPresentation(['a', 'b'], ['a b a^-1 b^-1']))
        self.assertTrue(validate(torus).ok)
        self.assertEqual(torus.euler_characteristic(), 0)

    def test_reserved_name_raises(self):
        with self.assertRaises(SimplicialError) as context:
            build_presentation_complex(GroupPresentation(['v'], ['v v']))
        self.assertTrue('reserved simplex name' in str(context.exception))


@pytest.mark.simplicial
class TestValidation(unittest.TestCase):

    def test_simplicial_identity(self):
        data = SimplicialSetData(
            [['x', 'y'], ['e'], ['t']],
            {'e': [DegenerateRef.of('y'), DegenerateRef.of('x')],
             't': [DegenerateRef.of('e')] * 3})
        self.assertIn('simplicial-identity', validate(data).kinds())

    def test_face_count(self):
        data = SimplicialSetData([['v'], ['e']], {'e': [DegenerateRef.of('v')]})
        self.assertEqual(validate(data).kinds(), ['face-count'])

    def test_not_reduced_raises(self):
        with self.assertRaises(SimplicialError) as context:
            ReducedSimplicialSet([['x', 'y']], {})
        self.assertTrue('not reduced' in str(context.exception))

    def test_invalid_raises(self):
        with self.assertRaises(SimplicialError) as context:
            ReducedSimplicialSet([['v'], ['e']],
                                 {'e': [DegenerateRef.of('v'), DegenerateRef.of('w')]})
        self.assertTrue('invalid simplicial set' in str(context.exception))
        self.assertTrue('unknown-target' in str(context.exception))


@pytest.mark.simplicial
class TestJson(unittest.TestCase):

    def test_round_trip(self):
        space = build_presentation_complex(RP2)
        data = SimplicialSetData.from_json(space.to_json())
        self.assertEqual(data, space)
        self.assertEqual(space.to_json()['schema'], 'ssetv1')

    def test_schema_raises(self):
        with self.assertRaises(FormatError) as context:
            SimplicialSetData.from_json({'schema': 'other'})
        self.assertTrue('unsupported schema' in str(context.exception))
        with self.assertRaises(FormatError) as context:
            SimplicialSetData.from_json({'schema': 'ssetv1'})
        self.assertTrue('malformed simplicial set' in str(context.exception))


@pytest.mark.simplicial
class TestMaps(unittest.TestCase):

    def test_identity(self):
        space = build_presentation_complex(RP2)
        identity = SimplicialMap.identity(space)
        self.assertTrue(identity.is_identity())
        self.assertTrue(identity.check().ok)

    def test_collapse(self):
        space = build_presentation_complex(RP2)
        to_point = collapse(space)
        self.assertTrue(to_point.check().ok)
        self.assertFalse(to_point.is_identity())
        self.assertEqual(to_point.image('r0_t1'), DegenerateRef((1, 0), 'v'))

    def test_check_reports(self):
        space = delta_quotient(2)
        wrong = SimplicialMap(space, space, {'v': DegenerateRef.of('v'),
                                             'e2': DegenerateRef((0,), 'v')})
        self.assertEqual(wrong.check().kinds(), ['dimension'])
        partial = SimplicialMap(space, space, {'v': DegenerateRef.of('v')})
        self.assertEqual(partial.check().kinds(), ['unassigned'])

    def test_compose_and_json(self):
        space = build_presentation_complex(RP2)
        to_point = collapse(space)
        composite = to_point.compose(SimplicialMap.identity(space))
        self.assertEqual(composite.assignment, to_point.assignment)
        restored = SimplicialMap.from_json(to_point.to_json(), space, to_point.target)
        self.assertEqual(restored.assignment, to_point.assignment)

    def test_image_raises(self):
        space = delta_quotient(1)
        with self.assertRaises(SimplicialError) as context:
            SimplicialMap(space, space, {}).image('e1')
        self.assertTrue('unassigned simplex' in str(context.exception))


@pytest.mark.simplicial
class TestCovering(unittest.TestCase):

    def test_universal_cover_of_rp2(self):
        space = build_presentation_complex(RP2)
        table = todd_coxeter(RP2)
        cover = covering_space(space, table)
        self.assertTrue(validate(cover).ok)
        self.assertEqual(cover.simplices(0), (lift_id('v', 0), lift_id('v', 1)))
        self.assertEqual(cover.euler_characteristic(), 2)
        complex_ = normalized_chains(cover).complex
        self.assertEqual([homology(complex_, n) for n in range(3)],
                         [FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup(1)])

    def test_universal_cover_of_p3(self):
        presentation = GroupPresentation(['a'], ['a a a'])
        space = build_presentation_complex(presentation)
        # the edge path group adds the diagonal edge as a generator
        table = todd_coxeter(GroupPresentation(['a', 'r0_p2'],
                                               ['a a r0_p2^-1', 'r0_p2 a']))
        cover = covering_space(space, table)
        self.assertEqual(table.size, 3)
        self.assertTrue(validate(cover).ok)
        complex_ = normalized_chains(cover).complex
        self.assertEqual(homology(complex_, 1), FGAbelianGroup())
        self.assertEqual(homology(complex_, 2), FGAbelianGroup(2))

    def test_deck_transformations(self):
        space = build_presentation_complex(RP2)
        self.assertEqual(len(deck_transformations(space, todd_coxeter(RP2))), 2)

    def test_table_mismatch_raises(self):
        space = build_presentation_complex(RP2)
        table = todd_coxeter(GroupPresentation(['b'], ['b b']))
        with self.assertRaises(SimplicialError) as context:
            covering_space(space, table)
        self.assertTrue('coset table does not match' in str(context.exception))
