from fractions import Fraction

import pytest

from triality import SquareMatrix
from triality.automorphisms import (ORDER3_BLOCK, FixedSubalgebra, TrialityMap,
                                    fixed_subalgebra, g2_fixed_subalgebra,
                                    identify_fixed_algebra, intersection_basis,
                                    killing_form, outer_involution, sigma,
                                    so7_fixed_subalgebra,
                                    span_intersection_dimension,
                                    verify_bracket_preservation)
from triality.exact import ConsistencyError
from triality.so8 import GENERATORS, Generator, So8Element, bracket, random_element

HALF = Fraction(1, 2)


class TestBlock:
    def test_square_is_transpose(self):
        assert ORDER3_BLOCK * ORDER3_BLOCK == ORDER3_BLOCK.transpose()

    def test_cube_is_identity(self):
        assert ORDER3_BLOCK.power(3) == SquareMatrix.identity(4)

    def test_entries(self):
        assert ORDER3_BLOCK[0] == (-HALF, -HALF, -HALF, -HALF)
        assert ORDER3_BLOCK[3] == (HALF, -HALF, -HALF, HALF)


class TestSigma:
    def test_zero(self):
        assert sigma(So8Element.zero()).is_zero()

    def test_order_three_on_basis(self):
        for g in GENERATORS:
            e = So8Element.from_generator(g)
            assert sigma(sigma(sigma(e))) == e

    def test_not_identity(self):
        assert TrialityMap.standard().full != SquareMatrix.identity(28)

    def test_image_of_first_generator(self):
        image = sigma(So8Element.from_generator(Generator(0, 1)))
        expected = {(0, 1): -HALF, (2, 4): HALF, (3, 7): HALF, (5, 6): HALF}
        for g in GENERATORS:
            assert image.coefficient(g) == expected.get((g.i, g.j), Fraction(0))

    def test_matrix_first_column_forms(self):
        # the image matrix column X[i][0] expands blockwise over the quadruples,
        # picking up the recorded normalization signs
        m = random_element(57)
        x = sigma(m).matrix
        a = m.matrix
        assert x[1][0] == HALF * (a[0][1] + a[2][4] + a[3][7] + a[5][6])
        assert x[2][0] == HALF * (a[0][2] + a[3][5] + a[6][7] - a[1][4])
        assert x[3][0] == HALF * (a[0][3] + a[4][6] - a[1][7] - a[2][5])
        assert x[4][0] == HALF * (a[0][4] + a[1][2] + a[5][7] - a[3][6])
        assert x[5][0] == HALF * (a[0][5] + a[2][3] - a[1][6] - a[4][7])
        assert x[6][0] == HALF * (a[0][6] + a[1][5] + a[3][4] - a[2][7])
        assert x[7][0] == HALF * (a[0][7] + a[1][3] + a[2][6] + a[4][5])

    def test_linear(self):
        x = random_element(70)
        y = random_element(71)
        assert sigma(x + y) == sigma(x) + sigma(y)
        assert sigma(x.scale(Fraction(3, 5))) == sigma(x).scale(Fraction(3, 5))

    def test_power_application(self):
        tmap = TrialityMap.standard()
        x = random_element(72)
        assert tmap.apply_power(x, 0) == x
        assert tmap.apply_power(x, 3) == x
        assert tmap.apply_power(x, 4) == tmap.apply(x)
        with pytest.raises(ValueError):
            tmap.apply_power(x, -1)

    def test_bracket_of_element_with_itself_maps_to_zero(self):
        x = random_element(73)
        assert sigma(bracket(x, x)).is_zero()


class TestBracketPreservation:
    def test_clean_map_has_no_violations(self):
        report = verify_bracket_preservation(samples=25, seed=42)
        assert report["status"] == "pass"
        assert report["violations"] == 0
        assert report["pairs_checked"] == 28 * 28 + 25

    def test_corrupted_block_fails(self):
        report = verify_bracket_preservation(samples=5, seed=42,
                                             tmap=TrialityMap.corrupted())
        assert report["status"] == "fail"
        assert report["violations"] > 0
        assert "counterexample" in report

    def test_trace_form_preserved(self):
        elems = [So8Element.from_generator(g) for g in GENERATORS]
        for a in range(28):
            for b in range(28):
                before = (elems[a].matrix * elems[b].matrix).trace()
                after = (sigma(elems[a]).matrix * sigma(elems[b]).matrix).trace()
                assert before == after


class TestOuterInvolution:
    def test_involution(self):
        x = random_element(80)
        assert outer_involution(outer_involution(x)) == x

    def test_generator_images(self):
        g07 = So8Element.from_generator(Generator(0, 7))
        assert outer_involution(g07) == -g07
        g12 = So8Element.from_generator(Generator(1, 2))
        assert outer_involution(g12) == g12


class TestFixedSubalgebras:
    def test_g2_dimension_and_fixedness(self):
        sub = g2_fixed_subalgebra()
        assert sub.dim == 14
        for b in sub.basis:
            assert sigma(b) == b

    def test_g2_bracket_closure_coordinates(self):
        sub = g2_fixed_subalgebra()
        coords = sub.coords(bracket(sub.basis[0], sub.basis[1]))
        assert coords is not None
        rebuilt = So8Element.zero()
        for c, b in zip(coords, sub.basis):
            rebuilt = rebuilt + b.scale(c)
        assert rebuilt == bracket(sub.basis[0], sub.basis[1])

    def test_so7_dimension_and_shape(self):
        sub = so7_fixed_subalgebra()
        assert sub.dim == 21
        for b in sub.basis:
            assert outer_involution(b) == b
            # the embedded so(7) leaves the last coordinate direction untouched
            assert all(b.matrix[i][7] == 0 for i in range(8))

    def test_so7_span_is_small_generators(self):
        sub = so7_fixed_subalgebra()
        for g in GENERATORS:
            elem = So8Element.from_generator(g)
            assert sub.contains(elem) == (g.j <= 6)

    def test_locus_membership_probe(self):
        sub = g2_fixed_subalgebra()
        assert sub.contains(sub.random_element(5))
        assert not sub.contains(So8Element.from_generator(Generator(0, 1)))

    def test_dim_check_fires_for_corrupted_map(self):
        with pytest.raises(ConsistencyError):
            fixed_subalgebra(TrialityMap.corrupted(), expected_dim=14, tag="bad")

    def test_fixed_locus_of_square_equals_fixed_locus(self):
        tmap = TrialityMap.standard()
        square = TrialityMap.standard()
        sub = fixed_subalgebra(tmap, tag="g2")
        squared_full = tmap.full * tmap.full
        for b in sub.basis:
            assert So8Element(squared_full.apply(b.coeffs)) == b
        delta = squared_full - SquareMatrix.identity(28)
        assert len(delta.kernel_basis()) == sub.dim


class TestIdentification:
    def test_g2_structure(self):
        report = identify_fixed_algebra(g2_fixed_subalgebra())
        assert report == {"dim": 14, "killing_nondegenerate": True, "rank": 2}

    def test_so7_structure(self):
        report = identify_fixed_algebra(so7_fixed_subalgebra())
        assert report == {"dim": 21, "killing_nondegenerate": True, "rank": 3}

    def test_abelian_subalgebra_is_degenerate(self):
        sub = FixedSubalgebra([So8Element.from_generator(Generator(0, 1)),
                               So8Element.from_generator(Generator(2, 3))],
                              tag="abelian")
        report = identify_fixed_algebra(sub)
        assert report["killing_nondegenerate"] is False
        assert killing_form(sub) == SquareMatrix.zero(2)

    def test_non_closed_span_raises(self):
        sub = FixedSubalgebra([So8Element.from_generator(Generator(0, 1)),
                               So8Element.from_generator(Generator(1, 2))],
                              tag="open")
        with pytest.raises(ConsistencyError):
            sub.structure_constants()


class TestIntersection:
    def test_dimension_and_common_fixedness(self):
        g2 = g2_fixed_subalgebra()
        so7 = so7_fixed_subalgebra()
        dim = span_intersection_dimension(g2, so7)
        assert dim >= 1
        common = intersection_basis(g2, so7)
        assert len(common) == dim
        for x in common:
            assert sigma(x) == x
            assert outer_involution(x) == x
