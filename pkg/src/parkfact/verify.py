"""Named verification suites: every theorem-level claim as a desk-scale
exhaustive check.

Each suite returns a CheckResult carrying pass/fail plus either a short
summary or a serialized counterexample.  The CLI 'verify' subcommand and
the acceptance test module both run these; the suite names (and their
1-based numbers) are the addressable surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from itertools import product as _cartesian
from typing import Callable

from . import arch as _arch
from . import factorizations as _fact
from . import inverse_maps as _inv
from . import parking as _park
from . import polynomials as _poly
from . import trees as _trees
from .parking import MajorSequence, ParkingFunction
from .permutations import FullCycle, Transposition, full_cycles, is_unimodal, unimodal_cycles
from .polynomials import BivariatePoly


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.detail}"


def _ok(name: str, detail: str) -> CheckResult:
    return CheckResult(name, True, detail)


def _fail(name: str, detail: str) -> CheckResult:
    return CheckResult(name, False, detail)


# --------------------------------------------------- 1: cardinalities


def check_cardinalities(n_max: int = 6) -> CheckResult:
    name = "cardinalities"
    for n in range(n_max + 1):
        expected = _trees.tree_count(n)
        got_trees = sum(1 for _ in _trees.enumerate_trees(n))
        if got_trees != expected:
            return _fail(name, f"|T_{n}| = {got_trees}, expected {expected}")
        got_parking = sum(1 for _ in _park.enumerate_parking(n))
        if got_parking != expected:
            return _fail(name, f"|P_{n}| = {got_parking}, expected {expected}")
        sigma = FullCycle.canonical(n)
        diagrams = set()
        got_fact = 0
        for f in _fact.enumerate_factorizations(sigma):
            got_fact += 1
            diagrams.add(_arch.sigma_diagram(f, sigma))
        if got_fact != expected:
            return _fail(name, f"|F_{n}| = {got_fact}, expected {expected}")
        if len(diagrams) != expected:
            return _fail(name, f"|A_{n}| = {len(diagrams)}, expected {expected}")
    return _ok(name, f"four families all have (n+1)^(n-1) members for n <= {n_max}")


# ------------------------------------------------ 2: polynomial pins


_I_PINS = {
    0: {(0, 0): 1},
    1: {(0, 1): 1},
    2: {(0, 2): 1, (0, 3): 1, (1, 2): 1},
    3: {
        (0, 6): 1, (1, 5): 2, (2, 4): 2, (3, 3): 1,
        (0, 5): 1, (1, 4): 1, (2, 3): 1,
        (0, 4): 3, (1, 3): 3, (0, 3): 1,
    },
}

_D_PINS = {
    0: {(0, 0): 1},
    1: {(1, 0): 1},
    2: {(2, 0): 1, (3, 0): 2},
    3: {(3, 0): 1, (4, 0): 6, (5, 0): 3, (6, 0): 6},
    4: {
        (4, 0): 1, (5, 0): 12, (6, 0): 24, (7, 0): 28,
        (8, 0): 24, (9, 0): 12, (10, 0): 24,
    },
}


def check_polynomial_pins(n_max: int | None = None) -> CheckResult:
    name = "polynomial-pins"
    for n, terms in _I_PINS.items():
        got = _trees.inversion_enumerator(n)
        if got != BivariatePoly(terms):
            return _fail(name, f"I_{n} = {got}, expected {BivariatePoly(terms)}")
    for n, terms in _D_PINS.items():
        got = _trees.depth_enumerator(n)
        if got != BivariatePoly(terms):
            return _fail(name, f"D_{n} = {got}, expected {BivariatePoly(terms)}")
    return _ok(name, "I_0..I_3 and D_0..D_4 match their published values exactly")


# --------------------------------------- 3: trees match factorizations


def check_tree_factorization(n_max: int = 6) -> CheckResult:
    name = "tree-factorization"
    for n in range(n_max + 1):
        lhs = _trees.inversion_enumerator(n)
        rhs = _fact.factorization_enumerator(FullCycle.canonical(n))
        if lhs != rhs:
            return _fail(name, f"n={n}: I_n = {lhs} but F_n = {rhs}")
    return _ok(name, f"I_n(q,t) = F_n(q,t) exactly for n <= {n_max}")


# --------------------------------------------------------- 4: bounce


def check_bounce(n_max: int = 6) -> CheckResult:
    name = "bounce"
    for n in range(n_max + 1):
        b_poly = _park.parking_enumerators(n).pinv_copinv
        i_poly = _trees.inversion_enumerator(n)
        f_poly = _fact.factorization_enumerator(FullCycle.canonical(n))
        if not (b_poly == i_poly == f_poly):
            return _fail(name, f"n={n}: B_n = {b_poly}, I_n = {i_poly}, F_n = {f_poly}")
        for p in _park.enumerate_parking(n):
            data, value = _park.bounce(p)
            binv = sum(
                sum(1 for x in data.D[v] if x < v) for v in range(n + 1)
            )
            cobinv = sum(len(data.D[v]) for v in range(n + 1)) - binv
            if binv + cobinv != value:
                return _fail(name, f"pinv+copinv != bounce for p={p}")
    return _ok(name, f"B_n = I_n = F_n and pinv+copinv = bounce for n <= {n_max}")


# ----------------------------------------------- 5: area and the lot


def check_area_jump(n_max: int = 6) -> CheckResult:
    name = "area-jump"
    for n in range(n_max + 1):
        enums = _park.parking_enumerators(n)
        i_poly = _trees.inversion_enumerator(n)
        if i_poly.at_t(1) != enums.area:
            return _fail(name, f"n={n}: I_n(q,1) != area enumerator {enums.area}")
        if enums.jump_cojump != i_poly:
            return _fail(name, f"n={n}: jump/cojump enumerator != I_n(q,t)")
    return _ok(name, f"area and jump/cojump enumerators match I_n for n <= {n_max}")


# ------------------------------------- 6: unimodal characterization


def check_unimodal(n_max: int = 5, n_min: int = 3) -> CheckResult:
    name = "unimodal"
    for n in range(n_min, n_max + 1):
        expected = _fact.factorization_count(n)
        unimodal_seen = 0
        for sigma in full_cycles(n):
            lowers = []
            uppers = []
            for pairs in _fact.iter_factor_pairs(sigma):
                lowers.append(tuple(a for a, _ in pairs))
                uppers.append(tuple(b for _, b in pairs))
            if len(lowers) != expected:
                return _fail(name, f"|F_sigma| = {len(lowers)} for sigma={sigma}")
            if not all(_park.is_parking(seq) for seq in lowers):
                return _fail(name, f"a lower sequence escapes P_n for sigma={sigma}")
            if not all(_park.is_major(seq) for seq in uppers):
                return _fail(name, f"an upper sequence escapes M_n for sigma={sigma}")
            uni = is_unimodal(sigma)
            unimodal_seen += uni
            if (len(set(lowers)) == expected) != uni:
                return _fail(
                    name, f"L bijective != unimodal for sigma={sigma} (n={n})"
                )
            if (len(set(uppers)) == expected) != uni:
                return _fail(
                    name, f"U bijective != unimodal for sigma={sigma} (n={n})"
                )
            if not uni:
                _inv.non_unimodal_witness(sigma)  # validates internally
        if unimodal_seen != 2 ** (n - 1):
            return _fail(name, f"{unimodal_seen} unimodal cycles at n={n}")
    return _ok(
        name,
        f"L and U are bijections exactly on unimodal cycles, n = {n_min}..{n_max}",
    )


# -------------------------------------------- 7: the inverse algorithm


_TABLE_SIGMA = FullCycle((0, 2, 3, 5, 6, 4, 1))
_TABLE_P = ParkingFunction((2, 4, 0, 1, 4, 0))
_TABLE_CANONICAL_RESULT = "(2 3)(4 5)(0 2)(1 2)(4 6)(0 4)"
_TABLE_UNIMODAL_RESULT = "(2 3)(4 5)(0 2)(1 5)(4 6)(0 5)"


def check_l_inverse(n_max: int = 5) -> CheckResult:
    name = "l-inverse"
    got = str(_inv.l_inverse(_TABLE_P, FullCycle.canonical(6), check=True))
    if got != _TABLE_CANONICAL_RESULT:
        return _fail(name, f"canonical worked example gave {got}")
    got = str(_inv.l_inverse(_TABLE_P, _TABLE_SIGMA, check=True))
    if got != _TABLE_UNIMODAL_RESULT:
        return _fail(name, f"unimodal worked example gave {got}")
    sigma0 = FullCycle.canonical(0)
    if _inv.l_inverse(ParkingFunction(()), sigma0).factors != ():
        return _fail(name, "n=0 reconstruction should be empty")
    for n in range(1, n_max + 1):
        target_count = _fact.factorization_count(n)
        for sigma in unimodal_cycles(n):
            seen = set()
            for p in _park.enumerate_parking(n):
                f = _inv.l_inverse(p, sigma, check=True)
                if _fact.lower(f) != p.entries:
                    return _fail(name, f"lower(l_inverse({p}, {sigma})) != {p}")
                seen.add(f.factors)
            if len(seen) != target_count:
                return _fail(name, f"l_inverse not injective over P_{n} for {sigma}")
    return _ok(
        name,
        f"reconstruction inverts L on every unimodal cycle for n <= {n_max}, "
        "worked examples byte-exact",
    )


# ------------------------------------------------- 8: arch criterion


def _product_images(pairs, n: int) -> tuple[int, ...]:
    images = list(range(n + 1))
    for a, b in reversed(pairs):
        images[a], images[b] = images[b], images[a]
    return tuple(images)


def check_arch_criterion(n_max: int = 4) -> CheckResult:
    name = "arch-criterion"
    for n in range(1, n_max + 1):
        sigmas = [FullCycle.canonical(n)]
        non_canonical = [
            s for s in unimodal_cycles(n) if s.word != FullCycle.canonical(n).word
        ]
        sigmas.extend(non_canonical[:2])
        all_pairs = list(combinations(range(n + 1), 2))
        for sigma in sigmas:
            target = sigma.to_permutation().images
            for pairs in _cartesian(all_pairs, repeat=n):
                member = _product_images(pairs, n) == target
                f = _fact.Factorization(
                    tuple(Transposition(a, b) for a, b in pairs), n
                )
                valid = _arch.is_valid_arch(_arch.sigma_diagram(f, sigma))
                if member != valid:
                    return _fail(
                        name,
                        f"f={f}, sigma={sigma}: member={member}, diagram valid={valid}",
                    )
    return _ok(
        name,
        f"membership in F_sigma matches diagram validity for n <= {n_max} "
        "(canonical plus two unimodal cycles each)",
    )


# ----------------------------------- 9: simple diagrams and rotation


def check_simple_decomposition(n_max: int = 6) -> CheckResult:
    name = "simple-decomposition"
    t = BivariatePoly.var_t()
    for n in range(1, n_max + 1):
        lhs = _fact.restricted_enumerators(n).simple
        rhs = (
            t
            * _poly.qt_bracket(n)
            * _fact.factorization_enumerator(FullCycle.canonical(n - 1))
        )
        if lhs != rhs:
            return _fail(name, f"n={n}: simple enumerator {lhs} != t(qt n)F_(n-1) {rhs}")

    for n in range(1, n_max + 1):
        sigma = FullCycle.canonical(n)
        binom = math.comb(n, 2)
        for f in _fact.enumerate_factorizations(sigma):
            diagram = _arch.sigma_diagram(f, sigma)
            parts = _arch.decompose_simple(diagram)
            merged: list[int] = []
            area_l_sum = area_u_sum = 0
            for part, index_set in parts:
                merged.extend(index_set)
                g = _arch.arch_to_factorization(part, FullCycle.canonical(part.n))
                area_l_sum += _fact.area_lower(g)
                area_u_sum += _fact.area_upper(g)
            if sorted(merged) != list(range(1, n + 1)):
                return _fail(name, f"index sets do not partition [1,{n}] for f={f}")
            if _arch.recompose(parts) != diagram:
                return _fail(name, f"recompose(decompose) != id for f={f}")
            a_l = binom - sum(_fact.lower(f))
            a_u = sum(_fact.upper(f)) - binom
            if (area_l_sum, area_u_sum) != (a_l, a_u):
                return _fail(name, f"area additivity fails for f={f}")

            if _fact.is_simple(f):
                k = _fact.simple_index(f)
                g = _fact.phi_k(f, k)
                if _fact.area_lower(f) != _fact.area_lower(g) + k - 1:
                    return _fail(name, f"lower-area shift fails for f={f}, k={k}")
                if _fact.area_upper(f) != _fact.area_upper(g) + n - k + 1:
                    return _fail(name, f"upper-area shift fails for f={f}, k={k}")
                if _fact.phi_k_inverse(g, k, n) != f:
                    return _fail(name, f"phi_k round trip fails for f={f}, k={k}")
    return _ok(
        name,
        f"simple-family identity, decomposition round trip, area additivity "
        f"and rotation shifts hold for n <= {n_max}",
    )


# ------------------------------------------- 10: restricted families


def check_special_families(n_max: int = 6) -> CheckResult:
    name = "special-families"
    for n in range(1, n_max + 1):
        r = _fact.restricted_enumerators(n)
        if r.max_diff != _poly.qt_factorial_product(n):
            return _fail(name, f"n={n}: max-diff enumerator is {r.max_diff}")
        top = math.comb(n + 1, 2)
        if any(eq + et != top for (eq, et), _ in r.max_diff.terms()):
            return _fail(name, f"n={n}: max total difference is not binom(n+1,2)")
        if r.increasing != BivariatePoly.monomial(1, 0, n) * _poly.catalan_qt(n):
            return _fail(name, f"n={n}: increasing enumerator is {r.increasing}")
        if r.decreasing != _poly.catalan_qt(n).at_t(1).shift_t(n):
            return _fail(name, f"n={n}: decreasing enumerator is {r.decreasing}")
        if any(et != n for (_, et), _ in r.decreasing.terms()):
            return _fail(name, f"n={n}: a decreasing factorization has upper area != n")
        f_poly = _fact.factorization_enumerator(FullCycle.canonical(n))
        i_poly = _trees.inversion_enumerator(n)
        if not (r.perm_lower == f_poly.at_q(0) == i_poly.at_q(0)):
            return _fail(name, f"n={n}: permutation-lower enumerator mismatch")
    return _ok(
        name,
        f"max-diff, increasing, decreasing and permutation-lower identities "
        f"hold for n <= {n_max}",
    )


# ------------------------------------------------ 11: worked examples


_F9_TEXT = "(1 2)(3 5)(1 3)(7 8)(0 6)(7 9)(0 7)(1 6)(4 5)"
_F9_LOWER = (1, 3, 1, 7, 0, 7, 0, 1, 4)
_F9_UPPER = (2, 5, 3, 8, 6, 9, 7, 6, 5)

_TABLE3_C = {
    0: {5, 7}, 7: {1, 3, 8}, 8: {2}, 3: {9}, 9: {4, 6},
    1: set(), 2: set(), 4: set(), 5: set(), 6: set(),
}
_TABLE3_D = {
    0: set(range(1, 10)),
    7: set(range(1, 10)) - {5, 7},
    8: {2}, 3: {4, 6, 9}, 9: {4, 6},
    1: set(), 2: set(), 4: set(), 5: set(), 6: set(),
}


def check_worked_examples(n_max: int | None = None) -> CheckResult:
    name = "worked-examples"
    f9 = _fact.parse_factorization(_F9_TEXT, 9)
    if _fact.lower(f9) != _F9_LOWER:
        return _fail(name, f"lower(f9) = {_fact.lower(f9)}")
    if _fact.upper(f9) != _F9_UPPER:
        return _fail(name, f"upper(f9) = {_fact.upper(f9)}")
    if _fact.area_lower(f9) != 12 or _fact.area_upper(f9) != 15:
        return _fail(name, "areas of the length-9 example are off")

    p = ParkingFunction(_F9_LOWER)
    data, value = _park.bounce(p)
    if data.contacts != (0, 2, 5, 7, 9) or value != 22:
        return _fail(name, f"bounce gave contacts {data.contacts}, value {value}")
    if data.w != (0, 7, 5, 8, 3, 1, 2, 9, 6, 4):
        return _fail(name, f"label word w = {data.w}")
    for v, expected in _TABLE3_C.items():
        if set(data.C[v]) != expected:
            return _fail(name, f"C[{v}] = {set(data.C[v])}, expected {expected}")
    for v, expected in _TABLE3_D.items():
        if set(data.D[v]) != expected:
            return _fail(name, f"D[{v}] = {set(data.D[v])}, expected {expected}")
    if _park.pinv(p) != 8 or _park.copinv(p) != 14:
        return _fail(name, f"pinv/copinv = {_park.pinv(p)}/{_park.copinv(p)}")

    tree = _park.theta(p)
    children = tree.children()
    if set(children[0]) != {5, 7} or set(children[7]) != {1, 3, 8}:
        return _fail(name, "theta tree has wrong children at 0 or 7")

    poly = _fact.factorization_enumerator(FullCycle((0, 1, 3, 2)))
    if poly.coefficient(2, 5) < 1 or poly.coefficient(0, 3) < 1:
        return _fail(name, "enumerator of (0 1 3 2) is missing q^2 t^5 or t^3")
    return _ok(name, "every worked-example pin (length-9 run, bounce table, "
                     "(0 1 3 2) terms) is exact")


# --------------------------------------------- 12: pushing to the top


def check_pushing(n_max: int = 5) -> CheckResult:
    name = "pushing"
    p9 = ParkingFunction(_F9_LOWER)
    if _inv.push_upper_path(_park.to_path(p9)) != _park.to_path(
        MajorSequence(_F9_UPPER)
    ):
        return _fail(name, "length-9 pushing example does not reproduce the upper path")
    for n in range(n_max + 1):
        sigma = FullCycle.canonical(n)
        for p in _park.enumerate_parking(n):
            pushed = _inv.push_upper_path(_park.to_path(p))
            expected = _park.to_path(
                MajorSequence(_fact.upper(_inv.l_inverse(p, sigma)))
            )
            if pushed != expected:
                return _fail(name, f"pushing misses the upper path for p={p}")
    return _ok(name, f"pushed labels reproduce the upper path for all p, n <= {n_max}")


# ------------------------------------------------------- 13: symmetry


def check_symmetry(n_max: int = 7) -> CheckResult:
    name = "symmetry"
    for n in range(n_max + 1):
        reduced = _trees.inversion_enumerator(n).divide_t(n)
        if reduced != reduced.swap_qt():
            return _fail(name, f"t^(-{n}) I_{n} is not q,t-symmetric")
    return _ok(name, f"t^(-n) I_n(q,t) is symmetric under q <-> t for n <= {n_max}")


# ------------------------------------------------------------ registry


SUITES: dict[str, Callable[..., CheckResult]] = {
    "cardinalities": check_cardinalities,
    "polynomial-pins": check_polynomial_pins,
    "tree-factorization": check_tree_factorization,
    "bounce": check_bounce,
    "area-jump": check_area_jump,
    "unimodal": check_unimodal,
    "l-inverse": check_l_inverse,
    "arch-criterion": check_arch_criterion,
    "simple-decomposition": check_simple_decomposition,
    "special-families": check_special_families,
    "worked-examples": check_worked_examples,
    "pushing": check_pushing,
    "symmetry": check_symmetry,
}

_BY_NUMBER = {str(i): name for i, name in enumerate(SUITES, start=1)}


def resolve_suites(selector: str) -> list[str]:
    """Map a suite selector (name, 1-based number, or 'all') to names."""
    if selector == "all":
        return list(SUITES)
    if selector in SUITES:
        return [selector]
    if selector in _BY_NUMBER:
        return [_BY_NUMBER[selector]]
    raise ValueError(
        f"unknown suite {selector!r}; choose from "
        + ", ".join(list(SUITES) + ["all"])
    )


def run_suite(name: str, n_max: int | None = None) -> CheckResult:
    func = SUITES[name]
    if n_max is None:
        return func()
    return func(n_max=n_max)
