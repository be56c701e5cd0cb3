import pytest
from hypothesis import given, strategies as st

from gf2to1.field import make_field
from gf2to1.lowdeg import (
    FactorPattern,
    cubic_has_unique_root,
    cubic_pattern,
    lemma_cubic_agreement,
    lemma_quadratic_agreement,
    lemma_quartic_agreement,
    quadratic_solutions,
    quartic_pattern,
    quartic_pattern_scan,
    roots_by_scan,
    solve_artin_schreier,
)
from gf2to1.poly import DensePoly

F4 = make_field(2)
F8 = make_field(3, 0b1011)
F16 = make_field(4)


class TestQuadratic:
    def test_no_solutions_odd_n(self):
        assert quadratic_solutions(F8, 1, 1) == set()

    def test_split_case(self):
        assert quadratic_solutions(F8, 1, 0) == {0, 1}

    def test_gf16_against_scan(self):
        sols = quadratic_solutions(F16, 1, 1)
        scan = {x for x in F16.elements() if F16.sqr(x) ^ x ^ 1 == 0}
        assert sols == scan and len(sols) == 2

    def test_degenerate_u_rejected(self):
        with pytest.raises(ValueError, match="sqrt"):
            quadratic_solutions(F8, 0, 5)

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_artin_schreier_even_n_exhaustive(self, n):
        ctx = make_field(n)
        for c in ctx.elements():
            if ctx.trace_abs(c) == 0:
                z = solve_artin_schreier(ctx, c)
                assert ctx.sqr(z) ^ z == c
            else:
                with pytest.raises(ValueError):
                    solve_artin_schreier(ctx, c)


class TestCubic:
    def test_power_map_bijective(self):
        assert cubic_has_unique_root(F8, 0, 1) is True

    def test_three_roots_in_gf4(self):
        scan = {x for x in F4.elements() if F4.mul(F4.sqr(x), x) ^ 1 == 0}
        assert len(scan) == 3
        assert cubic_has_unique_root(F4, 0, 1) is False

    def test_criterion_value_zero(self):
        # a = b = 1 over GF(8): trace(1 + 1) = 0
        assert cubic_has_unique_root(F8, 1, 1) is False

    def test_b_zero_rejected(self):
        with pytest.raises(ValueError):
            cubic_has_unique_root(F8, 1, 0)

    def test_pattern_matches_root_count(self):
        for a in F8.elements():
            for b in F8.nonzero():
                pat = cubic_pattern(F8, a, b)
                f = DensePoly.make(F8, (b, a, 0, 1))
                assert pat.root_count == len(roots_by_scan(f))


class TestQuartic:
    def test_gf4_split_resolvent(self):
        w = F4.generator
        assert quartic_pattern(F4, 0, 1, w) is quartic_pattern_scan(F4, 0, 1, w)

    def test_root_count_semantics(self):
        for a2 in F8.elements():
            for a1 in F8.nonzero():
                for a0 in F8.nonzero():
                    pat = quartic_pattern(F8, a2, a1, a0)
                    f = DensePoly.make(F8, (a0, a1, a2, 0, 1))
                    assert pat.root_count == len(roots_by_scan(f))

    def test_degenerate_coefficients_rejected(self):
        with pytest.raises(ValueError):
            quartic_pattern(F8, 1, 0, 1)
        with pytest.raises(ValueError):
            quartic_pattern(F8, 1, 1, 0)
        with pytest.raises(ValueError):
            quartic_pattern_scan(F8, 1, 0, 1)

    @given(st.integers(0, 15), st.integers(1, 15), st.integers(1, 15))
    def test_criterion_matches_scan_oracle_gf16(self, a2, a1, a0):
        assert quartic_pattern(F16, a2, a1, a0) is quartic_pattern_scan(F16, a2, a1, a0)

    @given(st.integers(0, 63), st.integers(1, 63), st.integers(1, 63))
    def test_criterion_matches_scan_oracle_gf64(self, a2, a1, a0):
        ctx = make_field(6)
        assert quartic_pattern(ctx, a2, a1, a0) is quartic_pattern_scan(ctx, a2, a1, a0)


class TestRootScan:
    def test_kernel_of_artin_schreier(self):
        f = DensePoly.make(F8, (0, 1, 1))
        assert roots_by_scan(f) == {0, 1}

    def test_all_nonzero(self):
        f = DensePoly.make(F8, tuple([1] + [0] * 6 + [1]))  # x^7 + 1
        assert roots_by_scan(f) == set(F8.nonzero())

    def test_modulus_splits_in_its_own_field(self):
        f = DensePoly.make(F8, (1, 1, 0, 1))  # x^3 + x + 1
        g = F8.generator
        assert roots_by_scan(f) == {g, F8.sqr(g), F8.pow(g, 4)} == {2, 4, 6}

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            roots_by_scan(DensePoly.zero(F8))


class TestAgreementEngines:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_quadratic(self, n):
        rep = lemma_quadratic_agreement(make_field(n))
        assert rep.ok and rep.checked == (2**n - 1) * 2**n

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_cubic(self, n):
        rep = lemma_cubic_agreement(make_field(n))
        assert rep.ok and rep.checked == (2**n - 1) * 2**n

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_quartic(self, n):
        rep = lemma_quartic_agreement(make_field(n))
        assert rep.ok and rep.checked == (2**n - 1) ** 2 * 2**n

    def test_quartic_grouped_oracle_matches_single_triple_oracle(self):
        # the grouped divisor sweep inside the engine must agree with the
        # one-triple-at-a-time scan oracle
        ctx = make_field(4)
        for a2 in ctx.elements():
            for a1 in ctx.nonzero():
                for a0 in ctx.nonzero():
                    assert quartic_pattern(ctx, a2, a1, a0) is quartic_pattern_scan(
                        ctx, a2, a1, a0
                    )
