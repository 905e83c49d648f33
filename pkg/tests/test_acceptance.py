"""Acceptance gate: one test per verification suite, at full desk scale.

Every criterion is exact (integer arithmetic throughout, no tolerances).
Each test prints its own PASS/FAIL line so a -s run reads as a checklist;
the heavy sweeps (all full cycles at n = 5, trees through n = 7) are
intentionally kept in this module rather than the unit tests.
"""

from parkfact import verify


def _run(name: str, **kwargs) -> None:
    result = verify.SUITES[name](**kwargs)
    print(result.line())
    assert result.ok, result.detail


def test_criterion_01_cardinalities():
    # |T_n| = |P_n| = |F_n| = |A_n| = (n+1)^(n-1) for n = 0..6
    _run("cardinalities", n_max=6)


def test_criterion_02_polynomial_pins():
    # I_0..I_3 and D_0..D_4 equal their published expansions exactly
    _run("polynomial-pins")


def test_criterion_03_trees_match_factorizations():
    # inversion enumerator = factorization enumerator, n = 0..6
    _run("tree-factorization", n_max=6)


def test_criterion_04_bounce_refinement():
    # B_n = I_n = F_n and pinv + copinv = bounce pointwise, n = 0..6
    _run("bounce", n_max=6)


def test_criterion_05_area_and_parking_process():
    # I_n(q,1) is the area enumerator; jump/cojump enumerator = I_n(q,t)
    _run("area-jump", n_max=6)


def test_criterion_06_unimodal_characterization():
    # over all n! full cycles, n = 3..5: L and U bijective iff unimodal,
    # with witnesses certifying every failure; 2^(n-1) unimodal cycles
    _run("unimodal", n_max=5)


def test_criterion_07_inverse_algorithm():
    # exhaustive reconstruction with loop invariants checked, n <= 5,
    # plus the two byte-exact worked runs
    _run("l-inverse", n_max=5)


def test_criterion_08_arch_criterion():
    # membership in F_sigma <=> valid diagram, all transposition words,
    # n <= 4, canonical plus two non-canonical unimodal cycles
    _run("arch-criterion", n_max=4)


def test_criterion_09_simple_decomposition():
    # simple-family product identity, decompose/recompose round trip,
    # area additivity, and the rotation area shifts, n <= 6
    _run("simple-decomposition", n_max=6)


def test_criterion_10_special_families():
    # max-difference, increasing, decreasing, permutation-lower families
    _run("special-families", n_max=6)


def test_criterion_11_worked_examples():
    # the length-9 factorization, its bounce table, and the (0 1 3 2) terms
    _run("worked-examples")


def test_criterion_12_pushing_reconstruction():
    # pushed lower-path labels reproduce the upper path, n <= 5 and n = 9
    _run("pushing", n_max=5)


def test_criterion_13_symmetry():
    # t^(-n) I_n(q,t) is q,t-symmetric through n = 7
    _run("symmetry", n_max=7)
