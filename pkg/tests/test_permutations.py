import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkfact.factorizations import Factorization, parse_factorization
from parkfact.permutations import (
    FactorKind,
    FullCycle,
    Permutation,
    Transposition,
    classify_factor,
    compose,
    format_permutation,
    full_cycles,
    is_sigma_contiguous,
    is_unimodal,
    parse_full_cycle,
    parse_permutation,
    reflect_conjugate,
    reflect_reverse,
    unimodal_cycles,
)


def perm(text, n):
    return parse_permutation(text, n)


perms_of_4 = st.permutations(list(range(5))).map(lambda xs: Permutation(tuple(xs)))


class TestCompose:
    def test_left_to_right_examples(self):
        sigma2 = FullCycle.canonical(2).to_permutation()
        assert compose(perm("(0 1)", 2), perm("(0 2)", 2)) == sigma2
        assert compose(perm("(1 2)", 2), perm("(0 1)", 2)) == sigma2

    def test_identity(self):
        pi = perm("(0 3 1)", 4)
        assert compose(Permutation.identity(4), pi) == pi
        assert compose(pi, Permutation.identity(4)) == pi

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            compose(Permutation.identity(2), Permutation.identity(3))

    @given(perms_of_4, perms_of_4, perms_of_4)
    def test_associativity(self, a, b, c):
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(perms_of_4)
    def test_inverse(self, a):
        assert compose(a, a.inverse()) == Permutation.identity(4)

    def test_operator_is_left_to_right(self):
        a, b = perm("(0 1)", 2), perm("(0 2)", 2)
        assert (a * b)(1) == b(a(1))


class TestCycleForm:
    def test_normal_form(self):
        pi = Permutation((1, 0, 3, 4, 2))
        assert format_permutation(pi) == "(0 1)(2 3 4)"
        assert format_permutation(Permutation.identity(3)) == "()"

    def test_parse_round_trip(self):
        pi = perm("( 2 4 )( 0 1 3 )", 5)
        assert parse_permutation(format_permutation(pi), 5) == pi

    def test_rejects_repeats(self):
        with pytest.raises(ValueError):
            perm("(0 1)(1 2)", 3)

    def test_num_cycles_counts_fixed_points(self):
        assert perm("(0 1)", 4).num_cycles() == 4


class TestTransposition:
    def test_normalization_required(self):
        with pytest.raises(ValueError):
            Transposition(2, 1)
        assert Transposition.of(2, 1) == Transposition(1, 2)

    def test_apply(self):
        t = Transposition(1, 4)
        assert (t.apply(1), t.apply(4), t.apply(2)) == (4, 1, 2)


class TestFullCycle:
    def test_word_must_start_at_zero(self):
        with pytest.raises(ValueError):
            FullCycle((1, 0, 2))

    def test_round_trip_with_permutation(self):
        sigma = FullCycle((0, 2, 3, 5, 6, 4, 1))
        assert FullCycle.from_permutation(sigma.to_permutation()) == sigma

    def test_rejects_non_full_cycle(self):
        with pytest.raises(ValueError):
            FullCycle.from_permutation(perm("(0 1)(2 3)", 3))

    def test_parse(self):
        assert parse_full_cycle("0 2 3 5 6 4 1").word == (0, 2, 3, 5, 6, 4, 1)
        assert parse_full_cycle("(0 2 1)").word == (0, 2, 1)
        with pytest.raises(ValueError):
            parse_full_cycle("2 0 1")


class TestUnimodal:
    def test_examples(self):
        assert is_unimodal(parse_full_cycle("0 2 3 5 4 1"))
        assert not is_unimodal(parse_full_cycle("0 1 4 3 5 2"))
        assert is_unimodal(parse_full_cycle("0 1"))

    def test_stream_n1(self):
        assert [s.word for s in unimodal_cycles(1)] == [(0, 1)]

    def test_stream_counts(self):
        for n in range(1, 11):
            seen = list(unimodal_cycles(n))
            assert len(seen) == 2 ** (n - 1)
            assert len({s.word for s in seen}) == len(seen)
            assert all(is_unimodal(s) for s in seen)

    def test_stream_contains_example(self):
        assert (0, 2, 3, 5, 4, 1) in {s.word for s in unimodal_cycles(5)}

    def test_matches_filtering_all_cycles(self):
        for n in range(1, 6):
            expected = {s.word for s in full_cycles(n) if is_unimodal(s)}
            assert {s.word for s in unimodal_cycles(n)} == expected


class TestSigmaContiguous:
    SIGMA = parse_full_cycle("0 2 3 5 6 4 1")

    def test_identity_always(self):
        assert is_sigma_contiguous(Permutation.identity(6), self.SIGMA)

    def test_worked_examples(self):
        assert is_sigma_contiguous(perm("(0 2)(5 6 4)", 6), self.SIGMA)
        assert is_sigma_contiguous(perm("(6 4)", 6), self.SIGMA)
        assert not is_sigma_contiguous(perm("(2 3 4)(5 6)", 6), self.SIGMA)

    def test_window_traversal_order_matters(self):
        # support {0, 2} is a window, but only one traversal fits the word
        assert is_sigma_contiguous(perm("(0 2)", 6), self.SIGMA)
        assert not is_sigma_contiguous(perm("(0 2 3 5)", 6).inverse(), self.SIGMA)


class TestClassifyFactor:
    def test_examples(self):
        assert classify_factor(Permutation.identity(1), Transposition(0, 1)) == FactorKind.JOIN
        assert classify_factor(perm("(0 1 2)", 2), Transposition(0, 2)) == FactorKind.CUT
        assert classify_factor(perm("(0 1)", 3), Transposition(2, 3)) == FactorKind.JOIN

    def test_join_means_one_fewer_cycle(self):
        for n in range(1, 6):
            transpositions = [
                Transposition(a, b) for a in range(n) for b in range(a + 1, n + 1)
            ]
            for images in itertools.permutations(range(n + 1)):
                rho = Permutation(tuple(images))
                for t in transpositions:
                    product = compose(rho, t.to_permutation(n))
                    joined = classify_factor(rho, t) == FactorKind.JOIN
                    assert joined == (product.num_cycles() == rho.num_cycles() - 1)


class TestReflect:
    def test_conjugate_transposition(self):
        assert reflect_conjugate(Transposition(0, 2), 3) == Transposition(1, 3)
        with pytest.raises(ValueError):
            reflect_conjugate(Transposition(0, 2))

    def test_conjugate_canonical_cycle(self):
        assert reflect_conjugate(FullCycle.canonical(4)).word == (0, 4, 3, 2, 1)

    def test_conjugate_is_involution(self):
        for n in range(1, 7):
            for t in [Transposition(a, b) for a in range(n) for b in range(a + 1, n + 1)]:
                assert reflect_conjugate(reflect_conjugate(t, n), n) == t
            for sigma in full_cycles(min(n, 4)):
                assert reflect_conjugate(reflect_conjugate(sigma)) == sigma

    def test_conjugate_preserves_unimodality(self):
        for n in range(1, 9):
            for sigma in unimodal_cycles(n):
                assert is_unimodal(reflect_conjugate(sigma))

    def test_conjugate_matches_group_conjugation(self):
        for n in range(1, 6):
            gamma = Permutation(tuple(n - i for i in range(n + 1)))
            for sigma in full_cycles(n):
                direct = reflect_conjugate(sigma).to_permutation()
                assert direct == compose(compose(gamma, sigma.to_permutation()), gamma)

    def test_reverse_worked_example(self):
        f = parse_factorization("(0 1)(0 2)", 2)
        assert str(reflect_reverse(f)) == "(0 2)(1 2)"

    def test_reverse_is_involution_fixing_the_product(self):
        sigma2 = FullCycle.canonical(2).to_permutation()
        f = parse_factorization("(1 2)(0 1)", 2)
        g = reflect_reverse(f)
        assert g.product() == sigma2
        assert reflect_reverse(g) == f

    def test_conjugate_factorization(self):
        f = parse_factorization("(0 1)(0 2)", 2)
        g = reflect_conjugate(f)
        assert isinstance(g, Factorization)
        assert str(g) == "(1 2)(0 2)"
