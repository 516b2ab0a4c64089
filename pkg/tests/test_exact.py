"""Exact arithmetic layer: polynomials, echelon forms, sparse matrices."""

import itertools
import random
from fractions import Fraction

import pytest

from vflie.exact import (
    Echelon,
    MPoly,
    SparseMat,
    det_symbolic,
    format_rat,
    kernel_basis,
    parse_rat,
    rank_of_vectors,
)


def test_parse_format_roundtrip():
    for text in ["0", "5", "-3", "7/2", "-11/6"]:
        assert format_rat(parse_rat(text)) == text
    assert parse_rat(" 3 / 4 ") == Fraction(3, 4)
    with pytest.raises(ValueError):
        parse_rat("1.5")


def test_mpoly_arithmetic():
    N = MPoly.variable(("N",), "N")
    one = MPoly.constant(("N",), 1)
    cube = (N + one) ** 3
    assert str(cube) == "N^3 + 3*N^2 + 3*N + 1"
    assert cube.evaluate({"N": Fraction(2)}) == 27
    assert (cube - cube).is_zero()
    assert cube.partial("N") == 3 * (N + one) ** 2


def test_mpoly_two_variables():
    x = MPoly.variable(("x", "y"), "x")
    y = MPoly.variable(("x", "y"), "y")
    f = (x + y) * (x - y)
    assert f == x * x - y * y
    assert f.coefficient((2, 0)) == 1
    assert f.coefficient((1, 1)) == 0
    assert f.total_degree() == 2


def test_mpoly_divexact():
    x = MPoly.variable(("x",), "x")
    one = MPoly.constant(("x",), 1)
    product = (x ** 2 + one) * (x - one)
    assert product.divexact(x - one) == x ** 2 + one
    with pytest.raises(ValueError):
        (x ** 2 + one).divexact(x - one)


def test_mpoly_subs_polys_composition():
    t = MPoly.variable(("t",), "t")
    p = t ** 2 + t
    x = MPoly.variable(("x", "y"), "x")
    y = MPoly.variable(("x", "y"), "y")
    f = MPoly(("t",), {(3,): Fraction(1)})
    image = f.subs_polys({"t": x + y})
    assert image == (x + y) ** 3


def test_echelon_rank_and_dependency():
    ech = Echelon(track=True)
    vectors = [
        {0: Fraction(1), 1: Fraction(2)},
        {1: Fraction(1), 2: Fraction(1)},
        {0: Fraction(1), 1: Fraction(3), 2: Fraction(1)},  # = v0 + v1
    ]
    assert ech.insert(vectors[0]) is None
    assert ech.insert(vectors[1]) is None
    combo = ech.insert(vectors[2])
    assert combo is not None and 2 in combo
    # the reported combination really sums to zero
    total = {}
    for idx, coeff in combo.items():
        for key, val in vectors[idx].items():
            total[key] = total.get(key, Fraction(0)) + coeff * val
    assert all(v == 0 for v in total.values())
    assert ech.rank == 2


def test_echelon_reduce_membership():
    ech = Echelon()
    ech.insert({0: Fraction(1), 1: Fraction(1)})
    ech.insert({1: Fraction(1)})
    assert ech.reduce({0: Fraction(5), 1: Fraction(-2)}) == {}
    assert ech.reduce({2: Fraction(1)}) != {}


def _random_sparse(rng, rows, cols, density=0.3):
    m = SparseMat(rows, cols)
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                m[i, j] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return m


def test_rank_transpose_invariance():
    rng = random.Random(2024)
    for _ in range(8):
        rows = rng.randint(1, 40)
        cols = rng.randint(1, 40)
        m = _random_sparse(rng, rows, cols)
        assert m.rank() == m.transpose().rank()


def test_rank_nullity_and_kernel():
    rng = random.Random(99)
    for _ in range(8):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 12)
        m = _random_sparse(rng, rows, cols, density=0.5)
        ker = kernel_basis(m)
        assert m.rank() + len(ker) == cols
        for vec in ker:
            assert len(vec) == cols
            for i in range(rows):
                total = sum(m[i, j] * vec[j] for j in range(cols))
                assert total == 0


def _det_permutation(dense):
    """Permutation-expansion determinant, the slow reference."""
    n = len(dense)
    total = None
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = dense[0][perm[0]]
        for i in range(1, n):
            term = term * dense[i][perm[i]]
        if sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def test_det_fraction_against_permutation_expansion():
    rng = random.Random(7)
    for n in (2, 3, 4):
        for _ in range(5):
            m = SparseMat(n, n)
            for i in range(n):
                for j in range(n):
                    m[i, j] = Fraction(rng.randint(-4, 4), rng.randint(1, 2))
            assert m.det() == _det_permutation(m.to_dense())


def test_det_symbolic_against_permutation_expansion():
    rng = random.Random(11)
    variables = ("a", "b")
    for _ in range(4):
        m = SparseMat(3, 3)
        for i in range(3):
            for j in range(3):
                terms = {}
                for _k in range(rng.randint(1, 2)):
                    expo = (rng.randint(0, 1), rng.randint(0, 1))
                    terms[expo] = terms.get(expo, Fraction(0)) + rng.randint(-2, 2)
                m[i, j] = MPoly(variables, {e: c for e, c in terms.items() if c})
        assert det_symbolic(m) == _det_permutation(m.to_dense())


def test_det_multiplicative():
    rng = random.Random(5)
    for _ in range(5):
        a = SparseMat(3, 3)
        b = SparseMat(3, 3)
        for i in range(3):
            for j in range(3):
                a[i, j] = Fraction(rng.randint(-3, 3))
                b[i, j] = Fraction(rng.randint(-3, 3))
        assert (a * b).det() == a.det() * b.det()


def test_rank_of_vectors():
    vecs = [
        {0: Fraction(2)},
        {0: Fraction(1), 1: Fraction(1)},
        {1: Fraction(2)},  # dependent on the first two
    ]
    assert rank_of_vectors(vecs) == 2
