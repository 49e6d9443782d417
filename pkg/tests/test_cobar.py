import unittest
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topochains.cobar import (
    CobarPresentation,
    cobar,
    cobar_chain_map,
    h0_relations,
    pi1_presentation,
    h0_coproduct,
    h0_counit,
    format_polynomial,
    GroupRingElement,
    FiniteGroup,
    psi,
    psi_polynomial,
    group_ring,
    group_likes,
    CobarError
)
from topochains.cli import corpus_names, corpus_space
from topochains.coalgebra import normalized_chains
from topochains.groups import GroupPresentation, todd_coxeter
from topochains.linear import ChainMap, FGAbelianGroup
from topochains.simplicial import build_presentation_complex, covering_space, delta_quotient

RP2 = build_presentation_complex(GroupPresentation(['a'], ['a a']), 'rp2')
P3 = build_presentation_complex(GroupPresentation(['a'], ['a a a']), 'p3')
TORUS = build_presentation_complex(GroupPresentation(['a', 'b'], ['a b a^-1 b^-1']), 'torus')
BINARY_ICOSAHEDRAL = build_presentation_complex(
    GroupPresentation(['s', 't'], ['s t s t s^-3', 's t s t t^-5']), 'binary-icosahedral')
S3 = GroupPresentation(['a', 'b'], ['a a', 'b b b', 'a b a b'])
Z3 = GroupPresentation(['a'], ['a a a'])
MONOMIALS = st.lists(st.sampled_from(['a', 'b']), max_size=4).map(tuple)


@pytest.mark.cobar
class TestCobarPresentation(unittest.TestCase):

    def test_degree_zero_relation(self):
        presentation = CobarPresentation(normalized_chains(RP2))
        self.assertEqual(presentation.generators, ['a', 'r0_t1'])
        self.assertEqual(presentation.degree('r0_t1'), 1)
        self.assertEqual(presentation.generator_differential('r0_t1'),
                         {('a',): -2, ('a', 'a'): -1})

    def test_torus_relation(self):
        presentation = CobarPresentation(normalized_chains(TORUS))
        # faces (b, r0_p2, a): x_{d1} - x_{d0} - x_{d2} - x_{d2} x_{d0}
        self.assertEqual(presentation.generator_differential('r0_t1'),
                         {('r0_p2',): 1, ('b',): -1, ('a',): -1, ('a', 'b'): -1})

    def test_d_squared(self):
        for name in corpus_names():
            chains = normalized_chains(corpus_space(name))
            self.assertTrue(CobarPresentation(chains).check().ok, name)
        self.assertTrue(CobarPresentation(normalized_chains(delta_quotient(3))).check().ok)

    def test_koszul_sign(self):
        presentation = CobarPresentation(normalized_chains(RP2))
        # D[t|t] = D[t] t - t D[t], t of degree 1
        element = presentation.differential({('r0_t1', 'r0_t1'): 1})
        self.assertEqual(element, {('a', 'r0_t1'): -2, ('a', 'a', 'r0_t1'): -1,
                                   ('r0_t1', 'a'): 2, ('r0_t1', 'a', 'a'): 1})

    def test_unknown_generator_raises(self):
        presentation = CobarPresentation(normalized_chains(RP2))
        with self.assertRaises(CobarError) as context:
            presentation.generator_differential('b')
        self.assertTrue('unknown generator' in str(context.exception))

    def test_not_connected_raises(self):
        cover = covering_space(RP2, todd_coxeter(GroupPresentation(['a'], ['a a'])))
        with self.assertRaises(CobarError) as context:
            CobarPresentation(normalized_chains(cover))
        self.assertTrue('coalgebra is not connected' in str(context.exception))

    def test_format(self):
        self.assertEqual(format_polynomial({('a',): -2, ('a', 'a'): -1}), '-2[a] - [a|a]')
        self.assertEqual(format_polynomial({(): 3, ('b',): 1}), '3 + [b]')
        self.assertEqual(format_polynomial({}), '0')


@pytest.mark.cobar
class TestTruncatedWindow(unittest.TestCase):

    def test_loops_on_s2(self):
        window = cobar(normalized_chains(delta_quotient(2)))
        self.assertEqual([window.basis_size(d) for d in range(5)], [1, 1, 1, 1, 1])
        for d in range(4):
            self.assertTrue(window.is_closed(d))
            self.assertEqual(window.homology(d), FGAbelianGroup(1))

    def test_loops_on_s3(self):
        window = cobar(normalized_chains(delta_quotient(3)))
        self.assertEqual([window.homology(d) for d in range(4)],
                         [FGAbelianGroup(1), FGAbelianGroup(), FGAbelianGroup(1),
                          FGAbelianGroup()])

    def test_not_closed_raises(self):
        window = cobar(normalized_chains(delta_quotient(2)))
        with self.assertRaises(CobarError) as context:
            window.homology(4)
        self.assertTrue('truncation window not closed' in str(context.exception))
        rp2 = cobar(normalized_chains(RP2))
        self.assertFalse(rp2.is_closed(0))

    def test_basis_and_leaks(self):
        window = cobar(normalized_chains(RP2), 1, 2)
        self.assertEqual(window.basis(0), [(), ('a',), ('a', 'a')])
        self.assertEqual(window.basis_size(1), 3)
        self.assertEqual(window.basis(1), [('r0_t1',), ('a', 'r0_t1'), ('r0_t1', 'a')])
        self.assertTrue(window.leaks(1))
        self.assertEqual(window.matrix(1).shape, (3, 3))
        self.assertTrue(window.check(1).ok)

    def test_product(self):
        window = cobar(normalized_chains(RP2))
        self.assertEqual(window.product(('a',), ('r0_t1',)), ('a', 'r0_t1'))
        self.assertEqual(window.degree(('a', 'r0_t1')), 1)

    def test_window_too_large_raises(self):
        window = cobar(normalized_chains(TORUS), 1, 10)
        with self.assertRaises(CobarError) as context:
            window.basis(0)
        self.assertTrue('truncation window too large' in str(context.exception))

    def test_invalid_truncation_raises(self):
        with self.assertRaises(CobarError) as context:
            cobar(normalized_chains(RP2), -1)
        self.assertTrue('invalid truncation' in str(context.exception))

    def test_identity_chain_map(self):
        chains = normalized_chains(delta_quotient(2))
        window = cobar(chains)
        chain_map = cobar_chain_map(ChainMap.identity(chains.complex), window, window)
        self.assertTrue(chain_map.is_identity())
        self.assertEqual(chain_map.check(), [])


@pytest.mark.cobar
class TestDegreeZero(unittest.TestCase):

    def test_h0_relations(self):
        ring = h0_relations(normalized_chains(RP2))
        self.assertEqual(ring.generators, ('a',))
        self.assertEqual(ring.sources, ('r0_t1',))
        self.assertEqual(ring.to_json(), {'generators': ['a'],
                                          'relations': [[[-2, ['a']], [-1, ['a', 'a']]]]})

    def test_pi1_presentation(self):
        presentation = pi1_presentation(P3)
        self.assertEqual(presentation.generators, ('a', 'r0_p2'))
        self.assertEqual(len(presentation.relators), 2)
        self.assertEqual(todd_coxeter(presentation).size, 3)
        self.assertEqual(todd_coxeter(pi1_presentation(delta_quotient(2))).size, 1)

    def test_psi_kills_relations(self):
        for space, order in ((RP2, 2), (P3, 3), (BINARY_ICOSAHEDRAL, 120)):
            presentation = pi1_presentation(space)
            table = todd_coxeter(presentation)
            self.assertEqual(table.size, order)
            for relation in h0_relations(normalized_chains(space)).relations:
                image = psi_polynomial(relation, presentation)
                self.assertTrue(image.evaluate(table).is_zero(), space.name)

    def test_psi(self):
        a = GroupRingElement.generator('a')
        b = GroupRingElement.generator('b')
        e = GroupRingElement.identity()
        self.assertEqual(psi(('a', 'b')), a * b - a - b + e)
        self.assertEqual(psi(()), e)
        self.assertEqual(psi_polynomial({('a',): 2, (): 1}), 2 * a - e)

    @settings(max_examples=50, deadline=None)
    @given(MONOMIALS, MONOMIALS)
    def test_psi_is_multiplicative(self, left, right):
        self.assertEqual(psi(left + right), psi(left) * psi(right))

    def test_psi_raises(self):
        with self.assertRaises(CobarError) as context:
            psi(('c',), GroupPresentation(['a']))
        self.assertTrue('unknown letter' in str(context.exception))

    def test_group_ring_element(self):
        a = GroupRingElement.generator('a')
        inverse = GroupRingElement.generator('a', -1)
        self.assertEqual(a * inverse, GroupRingElement.identity())
        self.assertTrue((a - a).is_zero())
        self.assertEqual((a + a).to_json(), [[2, 'a']])

    def test_coproduct_and_counit(self):
        self.assertEqual(h0_coproduct({('a',): 1}),
                         {(('a',), ('a',)): 1, (('a',), ()): 1, ((), ('a',)): 1})
        self.assertEqual(h0_coproduct({(): 1}), {((), ()): 1})
        self.assertEqual(h0_counit({(): 2, ('a',): 5}), 2)

    @settings(max_examples=50, deadline=None)
    @given(MONOMIALS)
    def test_coproduct_is_coassociative(self, monomial):
        left, right = {}, {}
        for (x, y), value in h0_coproduct({monomial: 1}).items():
            for (xx, xy), inner in h0_coproduct({x: 1}).items():
                key = (xx, xy, y)
                left[key] = left.get(key, 0) + value * inner
            for (yx, yy), inner in h0_coproduct({y: 1}).items():
                key = (x, yx, yy)
                right[key] = right.get(key, 0) + value * inner
        self.assertEqual(left, right)

    @settings(max_examples=50, deadline=None)
    @given(MONOMIALS, MONOMIALS)
    def test_coproduct_is_multiplicative(self, left, right):
        product = {}
        for (a, b), u in h0_coproduct({left: 1}).items():
            for (c, d), v in h0_coproduct({right: 1}).items():
                product[(a + c, b + d)] = product.get((a + c, b + d), 0) + u * v
        self.assertEqual(h0_coproduct({left + right: 1}), product)


@pytest.mark.cobar
class TestGroupRing(unittest.TestCase):

    def test_finite_group(self):
        group = FiniteGroup(todd_coxeter(S3))
        self.assertEqual(group.order, 6)
        for a in range(6):
            self.assertEqual(group.multiply(a, group.inverse(a)), group.identity)
            self.assertEqual(group.multiply(group.identity, a), a)

    def test_hopf_axioms(self):
        ring = group_ring(S3)
        self.assertTrue(ring.check().ok)
        self.assertEqual(ring.counit({0: 2, 1: 3}), 5)
        self.assertEqual(ring.coproduct({1: 2}), {(1, 1): 2})

    def test_antipode_of_cyclic_group(self):
        ring = group_ring(Z3)
        self.assertTrue(ring.check().ok)
        generator = ring.basis_element(1)
        self.assertNotEqual(ring.antipode(generator), generator)
        for g in range(3):
            element = ring.basis_element(g)
            self.assertEqual(ring.multiply(ring.antipode(element), element), ring.unit())
            self.assertEqual(ring.antipode(ring.antipode(element)), element)

    def test_group_likes(self):
        likes = group_likes(S3)
        self.assertEqual(len(likes), 6)
        self.assertEqual(sorted(next(iter(x)) for x in likes), list(range(6)))
        self.assertEqual(len(group_likes(group_ring(GroupPresentation(['a'], ['a a'])))), 2)
        self.assertEqual(group_likes(Z3), [{0: 1}, {1: 1}, {2: 1}])

    def test_sums_are_not_group_like(self):
        ring = group_ring(Z3)
        self.assertTrue(ring.is_group_like({1: 1}))
        self.assertFalse(ring.is_group_like({0: 1, 1: 1}))
        self.assertFalse(ring.is_group_like({0: -1, 1: 2}))
        self.assertFalse(ring.is_group_like({}))

    def test_infinite_raises(self):
        with self.assertRaises(CobarError) as context:
            group_likes(GroupPresentation(['a', 'b'], ['a b a^-1 b^-1']), 50)
        self.assertTrue('group is not certified finite' in str(context.exception))
