import unittest
import pytest

from topochains.groups import (
    parse_word,
    format_word,
    free_reduce,
    invert_word,
    GroupPresentation,
    abelianization,
    CosetTable,
    Exhausted,
    todd_coxeter,
    word_reduce,
    PiModule,
    regular_module,
    trivial_module,
    GroupError
)
from topochains.linear import FGAbelianGroup, IntMatrix
from topochains.utils import FormatError

BINARY_ICOSAHEDRAL = GroupPresentation(['s', 't'], ['s t s t s^-3', 's t s t t^-5'])
S3 = GroupPresentation(['a', 'b'], ['a a', 'b b b', 'a b a b'])
TORUS = GroupPresentation(['a', 'b'], ['a b a^-1 b^-1'])


@pytest.mark.groups
class TestWords(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_word('a b^-1'), (('a', 1), ('b', -1)))
        self.assertEqual(parse_word('a^3'), (('a', 1),) * 3)
        self.assertEqual(parse_word('a^-2'), (('a', -1),) * 2)
        self.assertEqual(parse_word('a^0'), ())

    def test_parse_conjugate(self):
        self.assertEqual(parse_word('a^b'), (('b', -1), ('a', 1), ('b', 1)))

    def test_parse_raises(self):
        with self.assertRaises(GroupError) as context:
            parse_word('a c', ['a', 'b'])
        self.assertTrue('unknown letter' in str(context.exception))
        with self.assertRaises(GroupError) as context:
            parse_word('a^')
        self.assertTrue('malformed token' in str(context.exception))

    def test_reduce_and_invert(self):
        word = parse_word('a b b^-1 a^-1 a')
        self.assertEqual(free_reduce(word), (('a', 1),))
        self.assertEqual(invert_word(parse_word('a b^-1')), parse_word('b a^-1'))
        self.assertEqual(format_word(parse_word('a b^-1')), 'a b^-1')


@pytest.mark.groups
class TestPresentation(unittest.TestCase):

    def test_relators_reduced(self):
        presentation = GroupPresentation(['a'], ['a a a^-1 a'])
        self.assertEqual(presentation.relators, ((('a', 1), ('a', 1)),))

    def test_raises(self):
        with self.assertRaises(GroupError) as context:
            GroupPresentation(['a', 'a'])
        self.assertTrue('duplicate generator' in str(context.exception))
        with self.assertRaises(GroupError) as context:
            GroupPresentation(['a'], ['a b'])
        self.assertTrue('unknown letter' in str(context.exception))
        with self.assertRaises(GroupError) as context:
            GroupPresentation(['a'], ['a a^-1'])
        self.assertTrue('empty relator' in str(context.exception))

    def test_json(self):
        self.assertEqual(GroupPresentation.from_json(S3.to_json()), S3)
        with self.assertRaises(FormatError) as context:
            GroupPresentation.from_json({'gens': ['a']})
        self.assertTrue('malformed presentation' in str(context.exception))

    def test_abelianization(self):
        self.assertEqual(abelianization(TORUS), FGAbelianGroup(2))
        self.assertEqual(abelianization(S3), FGAbelianGroup(0, (2,)))
        self.assertEqual(abelianization(BINARY_ICOSAHEDRAL), FGAbelianGroup())
        self.assertEqual(abelianization(GroupPresentation(['a'], ['a a a'])),
                         FGAbelianGroup(0, (3,)))


@pytest.mark.groups
class TestToddCoxeter(unittest.TestCase):

    def test_orders(self):
        self.assertEqual(todd_coxeter(GroupPresentation(['a'], ['a a'])).size, 2)
        self.assertEqual(todd_coxeter(S3).size, 6)
        self.assertEqual(todd_coxeter(BINARY_ICOSAHEDRAL).size, 120)

    def test_trivial(self):
        self.assertEqual(todd_coxeter(GroupPresentation([])).size, 1)
        self.assertEqual(todd_coxeter(GroupPresentation(['a'], ['a'])).size, 1)

    def test_exhausted(self):
        self.assertEqual(todd_coxeter(TORUS, 50), Exhausted(50))
        self.assertEqual(Exhausted(50).to_json(), {'exhausted': 50})

    def test_table_is_valid(self):
        table = todd_coxeter(S3)
        self.assertTrue(table.is_complete())
        self.assertTrue(table.check().ok)
        for coset in range(table.size):
            self.assertEqual(table.evaluate(table.representative(coset)), coset)

    def test_word_problem(self):
        table = todd_coxeter(S3)
        self.assertEqual(word_reduce(parse_word('a b a b'), table), 0)
        self.assertEqual(word_reduce(parse_word('b b b b'), table), table.evaluate(
            parse_word('b')))
        self.assertEqual(word_reduce(parse_word('a b b^-1')), (('a', 1),))

    def test_json(self):
        table = todd_coxeter(S3)
        self.assertEqual(CosetTable.from_json(table.to_json(), S3), table)
        with self.assertRaises(FormatError) as context:
            CosetTable.from_json({'gens': ['a']})
        self.assertTrue('malformed coset table' in str(context.exception))

    def test_bound_raises(self):
        with self.assertRaises(GroupError) as context:
            todd_coxeter(S3, 0)
        self.assertTrue('invalid coset bound' in str(context.exception))

    def test_incomplete_raises(self):
        table = CosetTable(['a'], {'a': [1, None]})
        self.assertFalse(table.is_complete())
        with self.assertRaises(GroupError) as context:
            table.act(1, ('a', 1))
        self.assertTrue('incomplete coset table' in str(context.exception))


@pytest.mark.groups
class TestPiModule(unittest.TestCase):

    def test_regular_module(self):
        table = todd_coxeter(S3)
        module = regular_module(table)
        self.assertEqual(module.rank, 6)
        self.assertTrue(module.check(S3).ok)
        # e_0 goes to the coset 0 * x^-1
        image = module.matrix('b').apply([1, 0, 0, 0, 0, 0])
        self.assertEqual(image.index(1), table.act(0, ('b', -1)))

    def test_regular_action_is_left(self):
        module = regular_module(todd_coxeter(S3))
        ab = parse_word('a b')
        self.assertEqual(module.act(ab), module.matrix('a') @ module.matrix('b'))

    def test_sign_module(self):
        sign = PiModule(1, {'a': IntMatrix.from_dense([[-1]]),
                            'b': IntMatrix.identity(1)}, 'sign')
        self.assertTrue(sign.check(S3).ok)
        self.assertEqual(sign.act(parse_word('a a^-1 a')), IntMatrix.from_dense([[-1]]))

    def test_check_reports(self):
        wrong = PiModule(1, {'a': IntMatrix.from_dense([[-1]])}, 'wrong')
        self.assertEqual(wrong.check(S3).kinds(), ['missing-generator'])
        bad = PiModule(1, {'a': IntMatrix.identity(1), 'b': IntMatrix.from_dense([[-1]])})
        self.assertEqual(bad.check(S3).kinds(), ['relator-action'])

    def test_restrict(self):
        module = trivial_module(['a', 'b'])
        restricted = module.restrict({'x': parse_word('a b'), 'y': ()}, 'pulled')
        self.assertEqual(restricted.name, 'pulled')
        self.assertEqual(restricted.matrix('y'), IntMatrix.identity(1))

    def test_json(self):
        module = regular_module(todd_coxeter(GroupPresentation(['a'], ['a a a'])))
        restored = PiModule.from_json(module.to_json())
        self.assertEqual(restored.matrix('a'), module.matrix('a'))
        with self.assertRaises(FormatError) as context:
            PiModule.from_json({'rank': 1})
        self.assertTrue('malformed module' in str(context.exception))

    def test_invertible_raises(self):
        with self.assertRaises(GroupError) as context:
            PiModule(1, {'a': IntMatrix.from_dense([[2]])})
        self.assertTrue('invalid module action' in str(context.exception))
