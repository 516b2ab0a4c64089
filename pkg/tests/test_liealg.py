"""Lie algebra structure: brackets, gradings, flavors, dilation embeddings."""

import random
from fractions import Fraction

import pytest

from vflie.liealg import (
    AlgebraDescriptor,
    LieElement,
    VFBasis,
    basis_of_weight,
    basis_up_to_weight,
    bracket,
    bracket_basis,
    coordinate_e,
    dilation_embedding,
    e_basis,
    jacobi_defect,
)


def _lie(n, pairs):
    return LieElement(n, {b: Fraction(c) for b, c in pairs})


def test_one_variable_bracket():
    # [e_k, e_m] = (m - k) e_(k+m)
    for k in range(-1, 5):
        for m in range(-1, 5):
            out = bracket_basis(e_basis(k), e_basis(m))
            expect = [] if m == k else [(e_basis(k + m), Fraction(m - k))]
            assert list(out) == expect


def test_basis_weights():
    assert e_basis(3).weight == 3
    b = VFBasis((2, 1), 0)
    assert b.weight == 2
    assert coordinate_e(2, 1, 2).weight == 2


def test_bracket_weight_additive():
    rng = random.Random(31)
    for _ in range(30):
        wa = rng.randint(-1, 3)
        wb = rng.randint(-1, 3)
        alg = AlgebraDescriptor(2, d=0, flavor="W")
        for u in basis_of_weight(alg, wa):
            for v in basis_of_weight(alg, wb):
                for basis, _coeff in bracket_basis(u, v):
                    assert basis.weight == wa + wb


def test_bracket_antisymmetry():
    rng = random.Random(17)
    alg = AlgebraDescriptor(2, d=0, flavor="W")
    pool = basis_up_to_weight(alg, 3)
    for _ in range(40):
        u = _lie(2, [(rng.choice(pool), rng.randint(-3, 3)) for _ in range(2)])
        v = _lie(2, [(rng.choice(pool), rng.randint(-3, 3)) for _ in range(2)])
        assert (bracket(u, v) + bracket(v, u)).terms == {}


def test_jacobi_random_w3():
    rng = random.Random(53)
    alg = AlgebraDescriptor(3, d=0, flavor="W")
    pool = basis_up_to_weight(alg, 2)
    for _ in range(25):
        u, v, w = (
            _lie(3, [(rng.choice(pool), rng.randint(-2, 2)) for _ in range(2)])
            for _ in range(3)
        )
        assert jacobi_defect(u, v, w).terms == {}


def test_dilation_embedding_is_a_morphism():
    # The images f_k = e_(dk)/d satisfy [f_k, f_m] = (m - k) f_(k+m).
    for d in range(1, 5):
        for k in range(1, 7):
            for m in range(1, 7):
                lhs = bracket(dilation_embedding(k, d), dilation_embedding(m, d))
                rhs = dilation_embedding(k + m, d) * Fraction(m - k)
                assert lhs.terms == rhs.terms, (k, m, d)


def test_dilation_embedding_validation():
    with pytest.raises(ValueError):
        dilation_embedding(0, 2)
    with pytest.raises(ValueError):
        dilation_embedding(1, 0)


def test_algebra_descriptor_flavors():
    w = AlgebraDescriptor(2, d=0, flavor="W")
    assert w.min_weight == -1 and w.label() == "W:2"
    l3 = AlgebraDescriptor(1, d=3, flavor="L")
    assert l3.min_weight == 3 and l3.label() == "L3:1"
    ls = AlgebraDescriptor(2, d=1, flavor="Lsum")
    assert ls.min_weight == 1 and ls.label() == "Lsum:2"
    with pytest.raises(ValueError):
        AlgebraDescriptor(1, d=0, flavor="L")
    with pytest.raises(ValueError):
        AlgebraDescriptor(1, d=2, flavor="W")
    with pytest.raises(ValueError):
        AlgebraDescriptor(2, d=2, flavor="Lsum")


def test_basis_of_weight_dimensions():
    w2 = AlgebraDescriptor(2, d=0, flavor="W")
    # weight w fields are (degree w+1 monomials) x (2 directions)
    for w in range(-1, 5):
        assert len(basis_of_weight(w2, w)) == 2 * (w + 2)
    l2 = AlgebraDescriptor(1, d=2, flavor="L")
    assert [len(basis_of_weight(l2, w)) for w in range(0, 5)] == [0, 0, 1, 1, 1]
    ls = AlgebraDescriptor(2, d=1, flavor="Lsum")
    # coordinate-sum flavor: one field per coordinate per weight k >= 1
    assert [len(basis_of_weight(ls, w)) for w in range(0, 4)] == [0, 2, 2, 2]


def test_contains_and_membership():
    l1 = AlgebraDescriptor(1, d=1, flavor="L")
    assert l1.contains(e_basis(1))
    assert not l1.contains(e_basis(0))
    assert not l1.contains(e_basis(-1))


def test_lie_element_arithmetic():
    u = _lie(1, [(e_basis(1), 2)])
    v = _lie(1, [(e_basis(2), 1)])
    s = u + v
    assert s.terms[e_basis(1)] == 2 and s.terms[e_basis(2)] == 1
    assert (s - s).terms == {}
    assert (u * Fraction(1, 2)).terms[e_basis(1)] == 1
