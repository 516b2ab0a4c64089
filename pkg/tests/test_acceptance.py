"""Acceptance gate: one test per criterion, each printing a PASS line with
its elapsed time and asserting the stated budget.  Run with -v for the
per-criterion verdict lines."""

import itertools
import random
import time
from fractions import Fraction
from math import comb, factorial

from vflie.exact import MPoly
from vflie.homology import (
    TensorCoefficients,
    TrivialCoefficients,
    boundary_matrix,
    chain_basis,
    homology_table,
)
from vflie.liealg import (
    AlgebraDescriptor,
    LieElement,
    basis_up_to_weight,
    e_basis,
    jacobi_defect,
)
from vflie.pbw_hilbert import (
    associated_graded_presentation,
    groebner_self_test,
    hilbert_series,
    module_groebner,
    partial_sum_polynomial,
)
from vflie.spanning import (
    dilated_generators,
    shift_determinant,
    spanning_generators,
    verify_graded_basis,
    verify_spanning,
    verify_spanning_dilated,
)
from vflie.specht import closure_basis, homogeneous_split, substitute, tspace_series
from vflie.tensormod import (
    ModuleDescriptor,
    ModuleElement,
    act_e,
    decompose_coinduced,
    graded_dimension,
    module_axiom_check,
    monomial,
    weight_support,
)


def _report(name, t0, budget):
    elapsed = time.perf_counter() - t0
    assert elapsed < budget, "%s exceeded budget: %.1fs >= %.1fs" % (name, elapsed, budget)
    print("%s: PASS (%.1fs)" % (name, elapsed))


def _rand_rat(rng, span=3):
    return Fraction(rng.randint(-span, span), rng.randint(1, 3))


def test_criterion_01_jacobi_identity():
    t0 = time.perf_counter()
    w2 = AlgebraDescriptor(2, d=0, flavor="W")
    pool = basis_up_to_weight(w2, 4)
    assert len(pool) == 42
    for a, b, c in itertools.combinations(pool, 3):
        u = LieElement(2, {a: Fraction(1)})
        v = LieElement(2, {b: Fraction(1)})
        w = LieElement(2, {c: Fraction(1)})
        assert jacobi_defect(u, v, w).terms == {}
    rng = random.Random(20240)
    w3 = AlgebraDescriptor(3, d=0, flavor="W")
    pool3 = basis_up_to_weight(w3, 2)
    for _ in range(100):
        u, v, w = (
            LieElement(
                3, {rng.choice(pool3): Fraction(rng.randint(-3, 3)) for _ in range(2)}
            )
            for _ in range(3)
        )
        assert jacobi_defect(u, v, w).terms == {}
    _report("criterion 01 jacobi identity", t0, 10.0)


def test_criterion_02_module_axiom():
    t0 = time.perf_counter()
    rng = random.Random(20241)
    for _ in range(50):
        r = rng.randint(1, 3)
        lam = tuple(_rand_rat(rng) for _ in range(r))
        mu = tuple(_rand_rat(rng) for _ in range(r))
        desc = ModuleDescriptor(r, lam, mu)
        expo = tuple(rng.randint(0, 8 // r) for _ in range(r))
        m = monomial(desc, expo)
        for _pair in range(3):
            k = rng.randint(1, 6)
            km = rng.randint(1, 6)
            u = LieElement(1, {e_basis(k): Fraction(1)})
            v = LieElement(1, {e_basis(km): Fraction(1)})
            assert module_axiom_check(u, v, m), (r, lam, mu, k, km)
    _report("criterion 02 module axiom", t0, 30.0)


def test_criterion_03_shift_determinant():
    t0 = time.perf_counter()
    rng = random.Random(20242)
    N = MPoly.variable(("N",), "N")
    for _ in range(10):
        lam, mu = _rand_rat(rng), _rand_rat(rng)
        assert shift_determinant(1, (lam,), (mu,)) == N + MPoly.constant(
            ("N",), mu + 2 * lam
        )
    for _ in range(10):
        r = rng.randint(1, 3)
        lam = tuple(_rand_rat(rng) for _ in range(r))
        mu = tuple(_rand_rat(rng) for _ in range(r))
        _expo, lead = shift_determinant(r, lam, mu).leading()
        assert lead == 1 or lead == -1
    _report("criterion 03 shift determinant", t0, 60.0)


def test_criterion_04_graded_basis_certificates():
    t0 = time.perf_counter()
    for r in (1, 2, 3):
        lam = (Fraction(0),) * r
        for t in (1, 2, 3):
            assert verify_graded_basis(r, lam, lam, (t,) * r, r + 4), (r, t)
    for r in (4, 5):
        lam = (Fraction(0),) * r
        assert verify_graded_basis(r, lam, lam, (1,) * r, r + 4), r
    _report("criterion 04 graded basis certificates", t0, 120.0)


def test_criterion_05_spanning_certificates():
    t0 = time.perf_counter()
    rng = random.Random(20243)
    for _ in range(10):
        r = rng.randint(1, 3)
        lam = tuple(_rand_rat(rng) for _ in range(r))
        mu = tuple(_rand_rat(rng) for _ in range(r))
        S = spanning_generators(r, lam, mu)
        assert verify_spanning(S, r, lam, mu, 10), (r, lam, mu)
    for r in (1, 2):
        lam = (Fraction(0),) * r
        S = dilated_generators(r, lam, lam, 2)
        assert verify_spanning_dilated(S, r, lam, lam, 2, 10), r
    _report("criterion 05 spanning certificates", t0, 300.0)


def test_criterion_06_hilbert_series():
    t0 = time.perf_counter()
    # dimensions against the closed-form count, harvest window 12
    for r in (1, 2):
        lam = (Fraction(0),) * r
        desc = ModuleDescriptor(r, lam, lam)
        S = [tuple(s) for s in spanning_generators(r, lam, lam)]
        gb = module_groebner(associated_graded_presentation(desc, S, 12))
        assert groebner_self_test(gb)
        series = hilbert_series(gb)
        dims = [int(c) for c in series.expand(12)]
        assert dims == [comb(w + r - 1, r - 1) for w in range(13)]
    # a certified-free module: no relations, series collapses to (1-t)^(-r)
    lam2, mu2 = (Fraction(1), Fraction(1)), (Fraction(0), Fraction(0))
    desc = ModuleDescriptor(2, lam2, mu2)
    S = [tuple(s) for s in spanning_generators(2, lam2, mu2)]
    pres = associated_graded_presentation(desc, S, 12)
    assert not pres.relations
    series = hilbert_series(module_groebner(pres))
    assert series.to_dict() == {"num": [1], "den": [1, -2, 1]}
    # partial sums of binom(w+1, 1) form a degree-2 polynomial with
    # normalized leading coefficient 2! * 1/2! = 1, an integer
    coeffs, degree, lead = partial_sum_polynomial(series, 12)
    assert degree == 2
    assert lead == 1 and isinstance(lead, int)
    assert coeffs[-1] * factorial(degree) == lead
    _report("criterion 06 hilbert series", t0, 120.0)


def test_criterion_07_low_degree_homology_window():
    t0 = time.perf_counter()
    alg = AlgebraDescriptor(1, d=1, flavor="L")
    triv = TrivialCoefficients()
    for p in (1, 2):
        for w in range(0, 11):
            prod = boundary_matrix(alg, triv, p, w) * boundary_matrix(alg, triv, p + 1, w)
            assert all(v == 0 for v in prod.entries.values()), (p, w)
    table = homology_table(alg, triv, 2, 10)
    nonzero = sorted((p, w) for (p, w), v in table.items() if v)
    assert nonzero == [(0, 0), (1, 1), (1, 2), (2, 5), (2, 7)]
    assert all(table[key] == 1 for key in nonzero)
    _report("criterion 07 low degree homology window", t0, 120.0)


def test_criterion_08_homology_with_coefficients():
    t0 = time.perf_counter()
    cases = (
        (AlgebraDescriptor(1, d=2, flavor="L"), TrivialCoefficients()),
        (
            AlgebraDescriptor(1, d=1, flavor="L"),
            TensorCoefficients(ModuleDescriptor(1, (Fraction(1),), (Fraction(0),))),
        ),
    )
    for alg, coeffs in cases:
        table = homology_table(alg, coeffs, 2, 8)
        assert all(isinstance(v, int) and v >= 0 for v in table.values())
        # Euler characteristic per weight over every p with nonzero chains
        for w in range(0, 9):
            dims = []
            p = 0
            while True:
                c = len(chain_basis(alg, coeffs, p, w))
                dims.append(c)
                if c == 0 and p * alg.min_weight + (p * (p - 1)) // 2 > w:
                    break
                p += 1
            p_top = len(dims) - 1
            full = homology_table(alg, coeffs, p_top, w)
            chi_chain = sum((-1) ** q * c for q, c in enumerate(dims))
            chi_hom = sum((-1) ** q * full[(q, w)] for q in range(p_top + 1))
            assert chi_chain == chi_hom, (alg.label(), w)
    _report("criterion 08 homology with coefficients", t0, 180.0)


def test_criterion_09_substitution_closure():
    t0 = time.perf_counter()
    # single variable: dims 1 in every positive weight, series t/(1 - t)
    ts = closure_basis([MPoly.variable(("x1",), "x1")], 12)
    assert ts.dimensions() == [0] + [1] * 12
    fit = tspace_series(ts)
    assert not fit["inconclusive"]
    assert fit["num"] == [0, 1] and fit["den"] == [1, -1]
    # agreement with the diagonal tensor-module route on random generators
    rng = random.Random(20244)
    for _ in range(5):
        n = rng.randint(1, 3)
        variables = tuple("x%d" % (i + 1) for i in range(n))
        gens = []
        for _g in range(rng.randint(1, 2)):
            terms = {}
            for _t in range(rng.randint(1, 3)):
                expo = tuple(rng.randint(0, 2) for _ in range(n))
                if sum(expo):
                    terms[expo] = Fraction(rng.randint(-3, 3))
            if terms:
                gens.append(MPoly(variables, terms))
        if not gens:
            continue
        ts_n = closure_basis(gens, 8)
        assert ts_n.dimensions() == _module_route_dims(gens, n, 8)
    # sampled substitutions stay inside the computed closure
    variables = ("x1", "x2")
    ts2 = closure_basis([MPoly(variables, {(1, 1): Fraction(1)})], 10)
    for _ in range(20):
        p = MPoly(("t",), {(k,): Fraction(rng.randint(-3, 3)) for k in range(1, 4)})
        p = MPoly(("t",), {e: c for e, c in p.terms.items() if c})
        if p.is_zero():
            continue
        w = rng.choice([w for w in range(2, 6) if ts2.graded_basis.get(w)])
        g = rng.choice(ts2.graded_basis[w])
        for d, comp in homogeneous_split(substitute(g, p)).items():
            if d <= ts2.cutoff:
                assert ts2.contains(comp), (str(p), w, d)
    _report("criterion 09 substitution closure", t0, 120.0)


def _module_route_dims(gens, n, cutoff):
    from vflie.exact import Echelon

    desc = ModuleDescriptor(n, (Fraction(0),) * n, (Fraction(0),) * n)
    seeds = {}
    for g in gens:
        for d, comp in homogeneous_split(g).items():
            if d <= cutoff:
                seeds.setdefault(d, []).append(ModuleElement(desc, dict(comp.terms)))
    basis, ech, idx = {}, {}, {}

    def admit(w, m):
        if not m.terms:
            return False
        e = ech.setdefault(w, Echelon())
        ix = idx.setdefault(w, {})
        vec = {ix.setdefault(t, len(ix)): c for t, c in m.terms.items()}
        if e.insert(vec) is not None:
            return False
        basis.setdefault(w, []).append(m)
        return True

    for w in range(cutoff + 1):
        for m in seeds.get(w, ()):
            admit(w, m)
        for k in range(1, w + 1):
            for m in basis.get(w - k, []):
                admit(w, act_e(k, m))
    return [len(basis.get(w, ())) for w in range(cutoff + 1)]


def test_criterion_10_weight_supports():
    t0 = time.perf_counter()

    def weyl_dim(lam):
        n = len(lam)
        num, den = 1, 1
        for i in range(n):
            for j in range(i + 1, n):
                num *= lam[i] - lam[j] + j - i
                den *= j - i
        return num // den

    lams2 = [(a, b) for a in range(4) for b in range(a + 1)]
    lams3 = [(a, b, c) for a in range(4) for b in range(a + 1) for c in range(b + 1)]
    for lam in lams2 + lams3:
        n = len(lam)
        support = weight_support(lam, n)
        assert sum(wv.multiplicity for wv in support) == weyl_dim(lam), lam
        modules = decompose_coinduced(lam, n)
        assert sum(m for _d, m in modules) == weyl_dim(lam), lam
        for w in range(7):
            total = sum(m * graded_dimension(d, w) for d, m in modules)
            assert total == weyl_dim(lam) * comb(w + n - 1, n - 1), (lam, w)
    _report("criterion 10 weight supports", t0, 60.0)
