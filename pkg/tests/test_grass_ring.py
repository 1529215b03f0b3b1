import pytest
from hypothesis import given, settings

from detlinks.errors import DomainError
from detlinks.grass_ring import (
    GrassClass,
    GrassSpec,
    PresentationPoly,
    chern_quot,
    chern_sub,
    chern_list_quot,
    chern_list_sub,
    dual_pairing,
    grassmann_relations,
    integrate,
    mul,
    oracle_quotient_ring,
    poincare,
    presentation_h,
    schubert_to_presentation,
)
from detlinks.partitions import box_complement, gaussian_binomial, weight

from conftest import spec_with_classes


def sigma(spec, *parts):
    return GrassClass.schubert(spec, parts)


class TestMul:
    def test_single_row_box_kills_column(self):
        spec = GrassSpec(1, 3)
        assert mul(sigma(spec, 1), sigma(spec, 1)).coords == {(2,): 1}

    def test_square_box_splits(self):
        spec = GrassSpec(2, 4)
        got = mul(sigma(spec, 1), sigma(spec, 1)).coords
        assert got == {(2,): 1, (1, 1): 1}

    def test_top_times_positive_degree_vanishes(self):
        spec = GrassSpec(2, 4)
        assert mul(GrassClass.schubert(spec, spec.box), sigma(spec, 1)).is_zero()

    def test_unit_is_identity(self):
        spec = GrassSpec(2, 5)
        cls = sigma(spec, 2, 1)
        assert mul(GrassClass.unit(spec), cls) == cls

    def test_mismatched_specs_raise(self):
        with pytest.raises(ValueError):
            mul(sigma(GrassSpec(1, 3), 1), sigma(GrassSpec(1, 4), 1))

    @settings(deadline=None, max_examples=40)
    @given(spec_with_classes(count=2))
    def test_commutative(self, data):
        _, (a, b) = data
        assert mul(a, b) == mul(b, a)

    @settings(deadline=None, max_examples=25)
    @given(spec_with_classes(count=3, max_m=6))
    def test_associative(self, data):
        _, (a, b, c) = data
        assert mul(mul(a, b), c) == mul(a, mul(b, c))


class TestChern:
    def test_sub_on_projective_space(self):
        for m in range(2, 6):
            spec = GrassSpec(1, m)
            assert chern_sub(spec, 1).coords == {(1,): -1}

    def test_quot_single_row(self):
        assert chern_quot(GrassSpec(1, 3), 2).coords == {(2,): 1}

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            chern_sub(GrassSpec(2, 4), 3)
        with pytest.raises(DomainError):
            chern_quot(GrassSpec(2, 4), 0)

    def test_whitney_degree_two_example(self):
        spec = GrassSpec(2, 4)
        total = (
            chern_sub(spec, 2)
            + mul(chern_sub(spec, 1), chern_quot(spec, 1))
            + chern_quot(spec, 2)
        )
        assert total.is_zero()

    @pytest.mark.parametrize("m", range(1, 8))
    def test_whitney_all_degrees(self, m):
        for r in range(m + 1):
            spec = GrassSpec(r, m)
            cs = chern_list_sub(spec)
            cq = chern_list_quot(spec)
            for k in range(1, m + 1):
                acc = GrassClass.zero(spec)
                for i in range(k + 1):
                    j = k - i
                    if i < len(cs) and j < len(cq):
                        acc = acc + mul(cs[i], cq[j])
                assert acc.is_zero(), (spec, k)


class TestIntegrate:
    def test_box_normalization(self):
        spec = GrassSpec(2, 5)
        assert integrate(GrassClass.schubert(spec, spec.box)) == 1

    def test_projective_plane_top_power(self):
        spec = GrassSpec(1, 3)
        h = sigma(spec, 1)
        assert integrate(mul(h, h)) == 1
        # one degree above the dimension the class itself vanishes
        assert integrate(mul(mul(h, h), h)) == 0

    def test_degree_of_grass_2_4(self):
        spec = GrassSpec(2, 4)
        h = sigma(spec, 1)
        assert integrate(mul(mul(h, h), mul(h, h))) == 2

    def test_non_top_class_integrates_to_zero(self):
        spec = GrassSpec(2, 4)
        assert integrate(sigma(spec, 1)) == 0

    @settings(deadline=None, max_examples=40)
    @given(spec_with_classes(count=2))
    def test_dual_pairing_matches_integral(self, data):
        _, (a, b) = data
        assert dual_pairing(a, b) == integrate(mul(a, b))


class TestPoincarePairing:
    @pytest.mark.parametrize("m", range(1, 7))
    def test_pairing_is_permutation(self, m):
        for r in range(m + 1):
            spec = GrassSpec(r, m)
            basis = spec.basis()
            for lam in basis:
                comp = box_complement(lam, spec.r, spec.cols)
                for mu in basis:
                    if weight(mu) != spec.dim - weight(lam):
                        continue
                    expected = 1 if mu == comp else 0
                    got = integrate(mul(sigma(spec, *lam), sigma(spec, *mu)))
                    assert got == expected, (spec, lam, mu)


class TestPresentation:
    def test_base_case(self):
        steps = presentation_h(3, 0)
        assert steps[0][1] == [PresentationPoly.variable(3, i) for i in (1, 2, 3)]

    def test_rank_one_sign_pattern(self):
        steps = presentation_h(1, 5)
        x = PresentationPoly.variable(1, 1)
        power = x
        for n, (step, polys) in enumerate(steps):
            assert step == n
            assert polys[0] == ((-1) ** n) * power
            power = power * x

    def test_rank_two_single_step(self):
        (_, h1), = presentation_h(2, 1)[1:]
        x1 = PresentationPoly.variable(2, 1)
        x2 = PresentationPoly.variable(2, 2)
        assert h1[0] == x2 - x1 * x1
        assert h1[1] == -(x1 * x2)

    def test_weighted_degrees(self):
        for n, polys in presentation_h(3, 4):
            for k, poly in enumerate(polys, start=1):
                assert poly.weighted_degree() == n + k

    def test_recursion_matrix_witnesses_containment(self):
        # one application of the companion matrix maps step 4 to step 5
        steps = dict(presentation_h(2, 5))
        x1 = PresentationPoly.variable(2, 1)
        x2 = PresentationPoly.variable(2, 2)
        h4, h5 = steps[4], steps[5]
        assert h5[0] == h4[1] - x1 * h4[0]
        assert h5[1] == -(x2 * h4[0])

    def test_larger_ambient_relations_die_in_smaller_ring(self):
        # the relations for ambient dimension 7 reduce to zero modulo those
        # for ambient dimension 6, matching the restriction of rings
        oracle = oracle_quotient_ring(GrassSpec(2, 6))
        for g in grassmann_relations(GrassSpec(2, 7)):
            assert oracle.reduce_poly(g) == {}


class TestOracle:
    def test_projective_plane(self):
        oracle = oracle_quotient_ring(GrassSpec(1, 3))
        assert oracle.graded_ranks == (1, 1, 1)
        x_cubed = PresentationPoly(1, {(3,): 1})
        assert oracle.reduce_poly(x_cubed) == {}

    def test_grass_2_4_ranks(self):
        assert oracle_quotient_ring(GrassSpec(2, 4)).graded_ranks == (1, 1, 2, 1, 1)

    def test_grass_2_5_total_rank(self):
        assert sum(oracle_quotient_ring(GrassSpec(2, 5)).graded_ranks) == 10

    def test_scale_limit(self):
        with pytest.raises(DomainError):
            oracle_quotient_ring(GrassSpec(5, 12))

    @pytest.mark.parametrize("m", range(1, 6))
    def test_ranks_match_gaussian_binomial(self, m):
        for r in range(m + 1):
            spec = GrassSpec(r, m)
            oracle = oracle_quotient_ring(spec)
            expected = tuple(
                gaussian_binomial(m, r).coefficient(d) for d in range(spec.dim + 1)
            )
            assert oracle.graded_ranks == expected

    @pytest.mark.parametrize("m", range(1, 6))
    def test_structure_constants_match_schubert_mul(self, m):
        for r in range(m + 1):
            spec = GrassSpec(r, m)
            oracle = oracle_quotient_ring(spec)
            polys = {lam: schubert_to_presentation(spec, lam) for lam in spec.basis()}
            for lam in spec.basis():
                for mu in spec.basis():
                    product = mul(sigma(spec, *lam), sigma(spec, *mu))
                    direct = oracle.reduce_poly(polys[lam] * polys[mu])
                    via_schubert = {}
                    for nu, c in product.coords.items():
                        for e, ce in oracle.reduce_poly(polys[nu]).items():
                            via_schubert[e] = via_schubert.get(e, 0) + c * ce
                    via_schubert = {e: c for e, c in via_schubert.items() if c}
                    assert direct == via_schubert, (spec, lam, mu)


class TestPoincare:
    def test_examples(self):
        assert poincare(GrassSpec(1, 3)).coefficients_list() == [1, 0, 1, 0, 1]
        assert poincare(GrassSpec(2, 4)).coefficients_list() == [1, 0, 1, 0, 2, 0, 1, 0, 1]
        assert poincare(GrassSpec(3, 3)).coefficients_list() == [1]
