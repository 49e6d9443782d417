import unittest
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from topochains.linear import (
    IntMatrix,
    smith_normal_form,
    elementary_divisors,
    invariant_factors,
    FGAbelianGroup,
    ChainComplex,
    ChainMap,
    homology,
    homology_groups,
    induced_map_on_homology,
    LinearError
)
from topochains.utils import COEFFS_Q, COEFFS_ZMOD, FormatError

SMALL_MATRICES = st.integers(min_value=1, max_value=4).flatmap(
    lambda rows: st.integers(min_value=1, max_value=4).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(min_value=-6, max_value=6), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows)))


def rp2_complex():
    # one cell per degree, boundary of the 2-cell twice the 1-cell
    return ChainComplex([1, 1, 1], {2: IntMatrix.from_dense([[2]])})


@pytest.mark.linear
class TestIntMatrix(unittest.TestCase):

    def test_dense_round_trip(self):
        rows = [[1, 0, 2], [0, -3, 0]]
        matrix = IntMatrix.from_dense(rows)
        self.assertEqual(matrix.shape, (2, 3))
        self.assertEqual(matrix.nnz, 3)
        self.assertEqual(matrix.to_dense(), rows)

    def test_from_entries_adds(self):
        matrix = IntMatrix.from_entries(2, 2, [(0, 1, 2), (0, 1, -2), (1, 0, 5)])
        self.assertEqual(matrix.to_dense(), [[0, 0], [5, 0]])

    def test_product(self):
        a = IntMatrix.from_dense([[1, 2], [3, 4]])
        b = IntMatrix.from_dense([[0, 1], [1, 0]])
        self.assertEqual((a @ b).to_dense(), [[2, 1], [4, 3]])
        self.assertEqual(a.apply([1, -1]), [-1, -1])

    def test_kron(self):
        a = IntMatrix.from_dense([[1, 2]])
        b = IntMatrix.identity(2)
        self.assertEqual(a.kron(b).to_dense(), [[1, 0, 2, 0], [0, 1, 0, 2]])

    def test_stack_and_select(self):
        a = IntMatrix.identity(2)
        self.assertEqual(a.hstack(a).shape, (2, 4))
        self.assertEqual(a.vstack(a).shape, (4, 2))
        self.assertEqual(a.select(rows=[1]).to_dense(), [[0, 1]])

    def test_determinant_and_inverse(self):
        matrix = IntMatrix.from_dense([[2, 1], [1, 1]])
        self.assertEqual(matrix.determinant(), 1)
        self.assertEqual(matrix @ matrix.inverse(), IntMatrix.identity(2))

    def test_inverse_raises(self):
        with self.assertRaises(LinearError) as context:
            IntMatrix.from_dense([[2, 0], [0, 1]]).inverse()
        self.assertTrue('matrix is not unimodular' in str(context.exception))

    def test_shape_raises(self):
        with self.assertRaises(LinearError) as context:
            IntMatrix.identity(2) @ IntMatrix.identity(3)
        self.assertTrue('shape mismatch' in str(context.exception))

    def test_json(self):
        matrix = IntMatrix.from_dense([[0, 7], [-1, 0]])
        self.assertEqual(IntMatrix.from_json(matrix.to_json()), matrix)

    def test_json_raises(self):
        with self.assertRaises(FormatError) as context:
            IntMatrix.from_json({'rows': 1})
        self.assertTrue('malformed matrix' in str(context.exception))


@pytest.mark.linear
class TestSmith(unittest.TestCase):

    def test_diagonal(self):
        matrix = IntMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        self.assertEqual(smith_normal_form(matrix).diagonal, [2, 6, 12])
        self.assertEqual(elementary_divisors(matrix), [2, 6, 12])

    def test_invariant_factors(self):
        self.assertEqual(invariant_factors([4, 6]), [2, 12])
        self.assertEqual(invariant_factors([-3]), [3])

    def test_zero(self):
        self.assertEqual(elementary_divisors(IntMatrix.zeros(3, 2)), [])

    @settings(max_examples=60, deadline=None)
    @given(SMALL_MATRICES)
    def test_transforms(self, rows):
        matrix = IntMatrix.from_dense(rows)
        form = smith_normal_form(matrix)
        self.assertEqual(form.U @ matrix @ form.V, form.D)
        self.assertEqual(form.U @ form.U_inv, IntMatrix.identity(matrix.rows))
        self.assertEqual(form.V @ form.V_inv, IntMatrix.identity(matrix.cols))
        diagonal = form.diagonal
        self.assertTrue(all(value > 0 for value in diagonal))
        self.assertTrue(all(b % a == 0 for a, b in zip(diagonal, diagonal[1:])))
        self.assertEqual(elementary_divisors(matrix), diagonal)


@pytest.mark.linear
class TestFGAbelianGroup(unittest.TestCase):

    def test_str(self):
        self.assertEqual(str(FGAbelianGroup()), '0')
        self.assertEqual(str(FGAbelianGroup(1)), 'Z')
        self.assertEqual(str(FGAbelianGroup(2, (2,))), 'Z^2 + Z/2')

    def test_cyclic_orders(self):
        self.assertEqual(FGAbelianGroup.from_cyclic_orders([2, 3]), FGAbelianGroup(0, (6,)))
        self.assertEqual(FGAbelianGroup.from_cyclic_orders([0, 4, 2, 1]),
                         FGAbelianGroup(1, (2, 4)))

    def test_order(self):
        self.assertEqual(FGAbelianGroup(0, (2, 4)).order, 8)
        self.assertEqual(FGAbelianGroup(1).order, 0)
        self.assertTrue(FGAbelianGroup().is_trivial)

    def test_chain_raises(self):
        with self.assertRaises(LinearError) as context:
            FGAbelianGroup(0, (4, 6))
        self.assertTrue('divisibility chain' in str(context.exception))


@pytest.mark.linear
class TestHomology(unittest.TestCase):

    def test_rp2(self):
        groups = homology_groups(rp2_complex(), 2)
        self.assertEqual([str(group) for group in groups], ['Z', 'Z/2', '0'])

    def test_coefficients(self):
        complex_ = rp2_complex()
        self.assertEqual(homology(complex_, 1, COEFFS_Q), FGAbelianGroup())
        self.assertEqual(homology(complex_, 1, COEFFS_ZMOD, 2), FGAbelianGroup(0, (2,)))
        self.assertEqual(homology(complex_, 2, COEFFS_ZMOD, 2), FGAbelianGroup(0, (2,)))
        self.assertEqual(homology(complex_, 2, COEFFS_ZMOD, 3), FGAbelianGroup())

    def test_d_squared_raises(self):
        one = IntMatrix.from_dense([[1]])
        complex_ = ChainComplex([1, 1, 1], {1: one, 2: one})
        self.assertEqual(complex_.check(), [2])
        with self.assertRaises(LinearError) as context:
            homology(complex_, 1)
        self.assertTrue('boundary squares to nonzero' in str(context.exception))

    def test_shape_raises(self):
        with self.assertRaises(LinearError) as context:
            ChainComplex([1, 2], {1: IntMatrix.identity(2)})
        self.assertTrue('boundary shape mismatch' in str(context.exception))


@pytest.mark.linear
class TestInducedMap(unittest.TestCase):

    def test_identity(self):
        complex_ = rp2_complex()
        induced = induced_map_on_homology(ChainMap.identity(complex_), 1)
        self.assertTrue(induced.is_iso)
        self.assertEqual(induced.source, FGAbelianGroup(0, (2,)))

    def test_multiplication_by_three_on_z2(self):
        complex_ = rp2_complex()
        three = IntMatrix.from_dense([[3]])
        chain_map = ChainMap(complex_, complex_, {0: three, 1: three, 2: three})
        self.assertEqual(chain_map.check(), [])
        self.assertTrue(induced_map_on_homology(chain_map, 1).is_iso)

    def test_multiplication_by_two_on_z(self):
        complex_ = ChainComplex([1, 1])
        two = IntMatrix.from_dense([[2]])
        chain_map = ChainMap(complex_, complex_, {0: two, 1: two})
        induced = induced_map_on_homology(chain_map, 1)
        self.assertEqual(induced.source, FGAbelianGroup(1))
        self.assertFalse(induced.is_iso)

    def test_compose(self):
        complex_ = rp2_complex()
        identity = ChainMap.identity(complex_)
        self.assertTrue(identity.compose(identity).is_identity())

    def test_not_chain_map_raises(self):
        source = ChainComplex([1, 1])
        target = ChainComplex([1, 1], {1: IntMatrix.from_dense([[1]])})
        chain_map = ChainMap(source, target, {1: IntMatrix.from_dense([[1]])})
        with self.assertRaises(LinearError) as context:
            induced_map_on_homology(chain_map, 0)
        self.assertTrue('not a chain map' in str(context.exception))
