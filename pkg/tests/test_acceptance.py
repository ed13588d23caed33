"""Acceptance criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import json
import random
import sys
import tempfile
import time
from itertools import combinations, combinations_with_replacement, product
from math import prod
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from coxcomb.abelian import (  # noqa: E402
    FgAbelianGroup,
    GroupHom,
    check_exact,
    element_eq,
    forget_grading,
    hom_group,
    localize,
)
from coxcomb.cli import main  # noqa: E402
from coxcomb.intmatrix import IntegerMatrix, smith_normal_form  # noqa: E402
from coxcomb.iteration import (  # noqa: E402
    ExponentConfig,
    Fiber,
    RamificationProfile,
    Status,
    pullback_vector,
    run,
    step,
    u_count,
)
from coxcomb.platonic import GeometryFlags, is_platonic_ring, is_platonic_tuple, log_terminal  # noqa: E402
from coxcomb.polynomial import Polynomial  # noqa: E402
from coxcomb.ring import (  # noqa: E402
    ExponentData,
    ProjectivePoint,
    alpha,
    build,
    combination_polynomial,
    expand_in_generating_set,
    trinomial,
)
from generators import random_config, random_ring, random_valid_profile  # noqa: E402
from oracles import (  # noqa: E402
    brute_force_hom_count,
    exhaustive_platonic_ring,
    invariant_factor_lists,
    leibniz_det,
    literal_platonic_set,
    minor_gcds,
    vector_gcd,
)

HERE = Path(__file__).parent


def timed(bound):
    """Run the check and fail if it exceeds ``bound`` seconds."""

    def deco(fn):
        def wrapper():
            t0 = time.perf_counter()
            fn()
            elapsed = time.perf_counter() - t0
            assert elapsed < bound, f"took {elapsed:.2f}s, bound {bound}s"

        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        return wrapper

    return deco


@timed(5)
def test_criterion_1_smith_normal_form():
    """SNF vs minor gcds, U*M*V = D, unimodular transforms (500 matrices)"""
    rng = random.Random(1001)
    for _ in range(500):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        M = IntegerMatrix.from_rows(rows)
        S = smith_normal_form(M)
        assert S.U @ M @ S.V == S.D
        assert abs(leibniz_det(S.U.to_rows())) == 1
        assert abs(leibniz_det(S.V.to_rows())) == 1
        d = S.diagonal
        assert all(S.D[i, j] == 0 for i in range(r) for j in range(c) if i != j)
        for k, g in enumerate(minor_gcds(rows, c), start=1):
            assert prod(d[:k]) == g


@timed(10)
def test_criterion_2_hom_group_counts():
    """|Hom(A, B)| equals a brute-force count for all groups of order <= 24"""
    groups = [t for n in range(1, 25) for t in invariant_factor_lists(n)]
    assert len(groups) == 37
    for src, dst in product(groups, repeat=2):
        H = hom_group(FgAbelianGroup.from_invariants(0, src), FgAbelianGroup.from_invariants(0, dst))
        assert H.order == brute_force_hom_count(src, dst)


@timed(10)
def test_criterion_3_homogeneity():
    """every trinomial is K0-homogeneous on 200 random rings"""
    rng = random.Random(3003)
    checked = 0
    for _ in range(200):
        R = random_ring(rng, r_max=4, len_max=3, entry_max=5)
        for I in R.triples():
            g = trinomial(R, I).polynomial
            degs = []
            for term in g.terms:
                # degree of a monomial: sum of exponent times the unit degree vector
                deg = [0] * R.K0.ambient_rank
                for name, e in zip(R.variables, term.exponents):
                    for k, x in enumerate(R.degrees[name]):
                        deg[k] += e * x
                degs.append(deg)
            assert len(degs) == 3
            assert all(element_eq(R.K0, degs[0], d) for d in degs[1:])
            checked += 1
    assert checked > 0


def _combination(R, coeffs: dict) -> Polynomial:
    total = Polynomial.zero(R.nvars)
    for I, c in coeffs.items():
        total = total + trinomial(R, I).polynomial.scale(c)
    return total


@timed(10)
def test_criterion_4_recurrence_and_expansion():
    """alpha_jl g_ijk - alpha_ij g_jkl - g_ijl = 0 for all quadruples; expand reproduces g_I"""
    rng = random.Random(4004)
    rings = [random_ring(rng, r_max=5) for _ in range(100)]

    expansion_failures = 0
    for R in rings:
        for I in R.triples():
            if combination_polynomial(R, expand_in_generating_set(R, I)) != trinomial(R, I).polynomial:
                expansion_failures += 1

    quadruples = nonzero = 0
    for R in rings:
        for i, j, k, l in combinations(range(R.r + 1), 4):
            quadruples += 1
            expr = _combination(
                R, {(i, j, k): alpha(R, j, l), (j, k, l): -alpha(R, i, j), (i, j, l): -1}
            )
            nonzero += not expr.is_zero()

    assert expansion_failures == 0
    assert quadruples > 0
    assert nonzero == 0, f"identity fails on {nonzero} of {quadruples} quadruples"


@timed(30)
def test_criterion_5_platonic_classification():
    """tuple test vs literal patterns, downward closedness, ring test vs exhaustive choice"""
    literal = literal_platonic_set(5, 10)
    for L in range(1, 6):
        for t in product(range(1, 11), repeat=L):
            ok = is_platonic_tuple(t)
            assert ok == (tuple(sorted(t, reverse=True)) in literal), t
            if ok:
                for pos in range(L):
                    if t[pos] > 1:
                        smaller = t[:pos] + (t[pos] - 1,) + t[pos + 1 :]
                        assert tuple(sorted(smaller, reverse=True)) in literal, (t, smaller)

    lit4 = literal_platonic_set(4, 6)

    def literal_test(choice):
        return tuple(sorted(choice, reverse=True)) in lit4

    # Only the set of entries of a vector matters for the choice tuples, and
    # the order of the vectors only permutes them.
    entry_sets = [s for k in (1, 2, 3) for s in combinations(range(1, 7), k)]
    for r in range(0, 4):
        for combo in combinations_with_replacement(entry_sets, r + 1):
            expected, _ = exhaustive_platonic_ring(combo, literal_test)
            got = is_platonic_ring(ExponentData(combo))
            assert got.platonic == expected, combo
            if not expected:
                assert not literal_test(got.witness)


@timed(1)
def test_criterion_6_threes_configuration():
    """points 0, 1, infinity with vectors (3,3) x 3, m = 0: not Platonic, not log terminal"""
    A = [ProjectivePoint(0, 1), ProjectivePoint(1, 1), ProjectivePoint(1, 0)]
    exps = ExponentData(((3, 3), (3, 3), (3, 3)), 0)
    build(A, exps)
    verdict = is_platonic_ring(exps)
    assert verdict.platonic is False
    assert verdict.witness == (3, 3, 3)
    flags = GeometryFlags(almost_homogeneous=True, complexity_one=True, units_constant=True)
    assert log_terminal(exps, flags).verdict is False


@timed(10)
def test_criterion_7_iteration_dynamics():
    """u never increases, gcd law on every pullback, (3,3) x 3 trace [3, 0]"""
    rng = random.Random(7007)
    for _ in range(1000):
        cfg = random_config(rng)
        us = [u_count(cfg)]
        for _ in range(rng.randint(1, 4)):
            prof = random_valid_profile(cfg, rng)
            for idx, p in enumerate(cfg.points):
                fib = prof.fiber(idx)
                e = prof.degree // fib.fiber_size
                for w in pullback_vector(p.vector, prof.degree, fib.fiber_size, fib.multiplicities):
                    assert vector_gcd(w) == vector_gcd(p.vector) // e
            cfg = step(cfg, prof)
            us.append(u_count(cfg))
            if len(cfg) > 300:
                break
        assert all(a >= b for a, b in zip(us, us[1:])), us

    threes = ExponentConfig.from_vectors([(3, 3)] * 3)
    total = RamificationProfile(3, {i: Fiber(1, (1, 1)) for i in range(3)})
    trace = run(threes, [total])
    assert trace.u_sequence == [3, 0]
    assert trace.status is Status.ALL_PRIMITIVE


@timed(1)
def test_criterion_8_exact_sequences():
    """localization on P^1, doubling sequence rejected, forgetful map gives Z/3"""
    Z = FgAbelianGroup.from_invariants(1)
    # Z^1 --[point]--> Cl(P^1) = Z --> Cl(P^1 minus point) --> 0
    quotient = localize(Z, [[1]])
    assert quotient.is_trivial
    f = GroupHom(Z, Z, IntegerMatrix.from_rows([[1]]))
    g = GroupHom(Z, quotient, IntegerMatrix.identity(quotient.ambient_rank))
    assert check_exact(f, g)
    double = GroupHom(Z, Z, IntegerMatrix.from_rows([[2]]))
    assert not check_exact(double, double)
    gamma = GroupHom(Z, Z, IntegerMatrix.from_rows([[3]]))
    assert forget_grading(Z, gamma) == FgAbelianGroup.from_invariants(0, [3])


GOLDEN_CASES = [
    ("group_coker", ["group", "coker"], "coker.json"),
    ("group_hom", ["group", "hom"], "hom.json"),
    ("ring_trinomials", ["ring", "trinomials"], "r4.json"),
    ("platonic_threes", ["platonic"], "threes_surface.json"),
    ("logterm_threes", ["logterm"], "threes_surface.json"),
    ("iterate_threes", ["iterate"], "threes_surface.json"),
]


@timed(5)
def test_criterion_9_cli_determinism():
    """golden output for all five commands, byte-identical on rerun"""
    commands = set()
    with tempfile.TemporaryDirectory() as tmp:
        for name, argv, src in GOLDEN_CASES:
            outs = []
            for k in range(2):
                out = Path(tmp) / f"{name}.{k}.json"
                main(argv + ["-i", str(HERE / "data" / src), "-o", str(out)])
                outs.append(out.read_bytes())
            assert outs[0] == outs[1], name
            assert outs[0] == (HERE / "golden" / f"{name}.json").read_bytes(), name
            commands.add(json.loads(outs[0])["command"].split()[0])
    assert commands == {"group", "ring", "platonic", "logterm", "iterate"}


CRITERIA = [
    test_criterion_1_smith_normal_form,
    test_criterion_2_hom_group_counts,
    test_criterion_3_homogeneity,
    test_criterion_4_recurrence_and_expansion,
    test_criterion_5_platonic_classification,
    test_criterion_6_threes_configuration,
    test_criterion_7_iteration_dynamics,
    test_criterion_8_exact_sequences,
    test_criterion_9_cli_determinism,
]


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        try:
            check()
            status, why = "PASS", ""
        except AssertionError as exc:
            status, why = "FAIL", f"  ({exc})" if str(exc) else ""
            failed += 1
        print(f"{status}  {check.__name__}: {check.__doc__}{why}")
    sys.exit(1 if failed else 0)
