"""Spanning sets and graded-basis certificates for tensor modules.

The degree-r slice of T^r carries two distinguished families: the monomials
z^b, and the vectors obtained by applying left-normalized words
e_1^(rho_1) ... e_r^(rho_r) to tail monomials z^a with a_i < i.  Because the
polynomial ring in r variables is a free module over the symmetric functions
with basis {z^a : a_i < i}, the two families have equal cardinality in every
degree; whether the word family is a basis is controlled by a determinant
that is monic in a diagonal shift N of the mu parameters.

This module computes those determinants exactly, searches constructively for
shifts that make every verified slice a basis, and builds finite generating
sets by peeling one coordinate at a time.  Every positive answer is backed
by an exact rank certificate; nothing is inferred from genericity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._enum import binom, bounded_tails, monomials_of_degree, weighted_vectors
from .exact import MPoly, SparseMat, Echelon, format_rat
from .tensormod import ModuleDescriptor, act_e, act_word, monomial

__all__ = [
    "PartitionVector",
    "GeneratorSet",
    "SearchExhaustedError",
    "ResourceLimitError",
    "newton_matrix",
    "power_basis_matrix",
    "shift_determinant",
    "shift_determinant_value",
    "graded_basis_certificate",
    "verify_graded_basis",
    "find_good_shift",
    "spanning_generators",
    "spanning_certificate",
    "verify_spanning",
    "dilated_generators",
    "verify_spanning_dilated",
]

DEFAULT_CUTOFF = 8
DEFAULT_BOUND = 12
MAX_SYMBOLIC_R = 5


class SearchExhaustedError(RuntimeError):
    """Shift search ran out of budget; carries the blocking evaluations."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class ResourceLimitError(RuntimeError):
    """A configured size bound was exceeded."""


@dataclass(frozen=True)
class PartitionVector:
    """Exponent vector rho of a word e_1^(rho_1) ... e_r^(rho_r)."""

    rho: tuple

    def __post_init__(self):
        if any(x < 0 for x in self.rho):
            raise ValueError("negative word exponent")
        object.__setattr__(self, "rho", tuple(int(x) for x in self.rho))

    @property
    def weight(self) -> int:
        return sum((i + 1) * b for i, b in enumerate(self.rho))

    @property
    def length(self) -> int:
        return sum(self.rho)


@dataclass(frozen=True)
class GeneratorSet:
    """A finite set of monomial exponents, kept sorted for determinism."""

    exponents: tuple

    def __post_init__(self):
        expos = tuple(sorted(tuple(int(a) for a in e) for e in self.exponents))
        object.__setattr__(self, "exponents", expos)

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def to_list(self):
        return [list(e) for e in self.exponents]


def _column_index(r: int, degree: int):
    """All pairs (rho, a) with a_i < i and weight(rho) + |a| == degree,
    sorted for determinism."""
    pairs = []
    for j in range(degree + 1):
        for a in bounded_tails(r, j):
            for rho in weighted_vectors(r, degree - j):
                pairs.append((rho, a))
    pairs.sort()
    return pairs


def newton_matrix(r: int, lam, mu) -> SparseMat:
    """Monomial-expansion matrix of the degree-r word family.

    Rows are indexed by the monomials of degree r (lex increasing), columns
    by the pairs (rho, a); column (rho, a) holds act_word(rho, z^a) in
    T^r_(lam, mu) expanded over the monomial basis.  Rows and columns have
    equal count in every degree (the free-module count identity), asserted
    here before returning.
    """
    mat, _, _ = _newton_data(r, lam, mu)
    return mat


def _newton_data(r, lam, mu):
    desc = ModuleDescriptor(r, tuple(lam), tuple(mu))
    rows = monomials_of_degree(r, r)
    row_of = {expo: i for i, expo in enumerate(rows)}
    cols = _column_index(r, r)
    assert len(cols) == len(rows), "count identity violated"
    mat = SparseMat(len(rows), len(cols))
    for j, (rho, a) in enumerate(cols):
        vec = act_word(rho, monomial(desc, a))
        for expo, coeff in vec.terms.items():
            mat[row_of[expo], j] = coeff
    return mat, rows, cols


@lru_cache(maxsize=16)
def power_basis_matrix(r: int) -> SparseMat:
    """Expansion of the products p_rho z^a over the degree-r monomials,
    same row/column ordering as newton_matrix.  Always nonsingular: the
    polynomial ring is free over the symmetric functions with basis
    {z^a : a_i < i}."""
    rows = monomials_of_degree(r, r)
    row_of = {expo: i for i, expo in enumerate(rows)}
    cols = _column_index(r, r)
    mat = SparseMat(len(rows), len(cols))
    for j, (rho, a) in enumerate(cols):
        terms = {a: Fraction(1)}
        for k in range(1, r + 1):
            for _ in range(rho[k - 1]):
                nxt = {}
                for expo, c in terms.items():
                    for i in range(r):
                        up = list(expo)
                        up[i] += k
                        key = tuple(up)
                        nxt[key] = nxt.get(key, Fraction(0)) + c
                terms = nxt
        for expo, coeff in terms.items():
            mat[row_of[expo], j] = coeff
    return mat


@lru_cache(maxsize=16)
def _power_basis_det(r: int) -> Fraction:
    return power_basis_matrix(r).det()


def shift_determinant_value(r: int, lam, mu) -> Fraction:
    """The degree-r slice determinant at numeric parameters: determinant of
    the endomorphism p_rho z^a -> act_word(rho, z^a) of the degree-r slice,
    i.e. det(newton matrix) / det(power basis matrix)."""
    if r == 0:
        return Fraction(1)
    mat, _, _ = _newton_data(r, lam, mu)
    return mat.det() / _power_basis_det(r)


def shift_determinant(r: int, lam, mu, max_r: int = MAX_SYMBOLIC_R) -> MPoly:
    """The slice determinant along the diagonal ray: the univariate
    polynomial N -> det at parameters (lam, mu + N*(1,...,1)).

    Monic of degree sum(length(rho)) over the columns: the top N-order of a
    word column is N^length * p_rho z^a, and the power-basis normalization
    makes the top coefficient exactly 1.  Computed by exact interpolation at
    N = 0..degree.
    """
    if r > max_r:
        raise ResourceLimitError(
            "symbolic slice determinant capped at r <= %d (got r = %d)" % (max_r, r)
        )
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    if r == 0:
        return MPoly.constant(("N",), 1)
    degree = sum(sum(rho) for rho, _ in _column_index(r, r))
    values = []
    for t in range(degree + 1):
        shifted = tuple(m + t for m in mu)
        values.append(shift_determinant_value(r, lam, shifted))
    coeffs = _interpolate(values)
    return MPoly(("N",), {(i,): c for i, c in enumerate(coeffs)})


def _interpolate(values):
    """Coefficients of the unique polynomial through (i, values[i])."""
    n = len(values)
    table = [list(values)]
    for k in range(1, n):
        prev = table[-1]
        table.append(
            [(prev[i + 1] - prev[i]) / k for i in range(len(prev) - 1)]
        )
    # Newton forward form sum_k dd_k * x(x-1)...(x-k+1)/1 with dd_k = table[k][0]
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # falling-factorial product, dense coefficients
    for k in range(n):
        dd = table[k][0]
        for i, b in enumerate(basis):
            coeffs[i] += dd * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):  # multiply by (x - k)
            nxt[i + 1] += b
            nxt[i] -= b * k
        basis = nxt
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


# ---------------------------------------------------------------------------
# graded-basis certificates


def _slice_vectors(desc: ModuleDescriptor, w: int, d: int = 1, generators=None):
    """Deterministic list of (label, expansion dict) for the weight-w word
    family: words in e_d, e_2d, ..., e_rd applied either to the tail
    monomials z^a, a_i < i (generators=None) or to given generator
    exponents."""
    r = desc.r
    out = []
    if generators is None:
        sources = [(a, sum(a)) for j in range(w + 1) for a in bounded_tails(r, j)]
    else:
        sources = [(tuple(s), sum(s)) for s in generators]
    for a, wa in sources:
        rem = w - wa
        if rem < 0 or rem % d:
            continue
        for b in weighted_vectors(r, rem // d):
            vec = monomial(desc, a)
            for k in range(r, 0, -1):
                for _ in range(b[k - 1]):
                    vec = act_e(k * d, vec)
                    if vec.is_zero():
                        break
            out.append(((a, b), vec.terms))
    return out


def _slice_rank(vectors):
    """Rank of a list of (label, dict) expansion vectors; sparse first."""
    ordered = sorted(vectors, key=lambda lv: (len(lv[1]), lv[0]))
    ech = Echelon()
    for _, terms in ordered:
        if terms:
            ech.insert(terms)
    return ech.rank


def graded_basis_certificate(r: int, lam, mu, N, cutoff: int) -> dict:
    """Per-weight rank certificate for the shifted word family.

    For each weight w <= cutoff, the candidate vectors are
    act_word(b, z^a) in T^r_(lam, mu + N) over all (b, a) with
    weight(b) + |a| = w and a_i < i; the slice passes when the candidate
    count equals binom(w+r-1, r-1) and the vectors are linearly
    independent.
    """
    if cutoff < r:
        raise ValueError("cutoff must be at least r")
    N = tuple(int(x) for x in N)
    if len(N) != r or any(x < 0 for x in N):
        raise ValueError("shift must be a nonnegative integer r-vector")
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    shifted = ModuleDescriptor(r, lam, tuple(m + s for m, s in zip(mu, N)))
    weights = []
    verdict = True
    for w in range(cutoff + 1):
        dim = binom(w + r - 1, r - 1) if r > 0 else (1 if w == 0 else 0)
        vectors = _slice_vectors(shifted, w)
        rank = _slice_rank(vectors)
        ok = len(vectors) == dim and rank == dim
        verdict = verdict and ok
        weights.append(
            {
                "weight": w,
                "dimension": dim,
                "candidates": len(vectors),
                "rank": rank,
                "ok": ok,
            }
        )
    return {
        "r": r,
        "lambda": [format_rat(x) for x in lam],
        "mu": [format_rat(x) for x in mu],
        "N": list(N),
        "cutoff": cutoff,
        "weights": weights,
        "verdict": verdict,
    }


def verify_graded_basis(r: int, lam, mu, N, cutoff: int) -> bool:
    """True iff the shifted word family is a graded basis up to the cutoff."""
    return graded_basis_certificate(r, lam, mu, N, cutoff)["verdict"]


# ---------------------------------------------------------------------------
# shift search


def _ray_obstruction(r, lam, mu, N, window):
    """First (s, k) with vanishing slice determinant along the coordinate
    rays of the shifted prefix parameters, or None if all checks pass."""
    lam = tuple(Fraction(x) for x in lam)
    shifted = tuple(Fraction(m) + n for m, n in zip(mu, N))
    for s in range(1, r + 1):
        lam_p = lam[:s]
        mu_p = list(shifted[:s])
        base = mu_p[s - 1]
        for k in range(window + 1):
            mu_p[s - 1] = base + k
            if shift_determinant_value(s, lam_p, tuple(mu_p)) == 0:
                return {"s": s, "k": k, "mu": [format_rat(x) for x in mu_p]}
    return None


def find_good_shift(
    r: int,
    lam,
    mu,
    bound: int = DEFAULT_BOUND,
    cutoff: int = DEFAULT_CUTOFF,
) -> tuple:
    """Search for a shift N making the word family a verified graded basis.

    Strategy: diagonal shifts (t, ..., t) for t = 0..bound first, then greedy
    per-coordinate increments driven by the first vanishing determinant along
    the prefix coordinate rays.  Every returned shift is certified by
    verify_graded_basis at the cutoff; determinant ray checks run over the
    window k = 0..cutoff, the only range that can touch verified weights.
    Raises SearchExhaustedError with the blocking report when the budget runs
    out.
    """
    if r == 0:
        return ()
    window = cutoff
    failures = []
    for t in range(bound + 1):
        N = (t,) * r
        obstruction = _ray_obstruction(r, lam, mu, N, window)
        if obstruction is not None:
            failures.append({"N": list(N), "vanishing": obstruction})
            continue
        if verify_graded_basis(r, lam, mu, N, cutoff):
            return N
        failures.append({"N": list(N), "vanishing": None, "rank_failure": True})
    N = [0] * r
    budget = bound * r + r
    for _ in range(budget):
        obstruction = _ray_obstruction(r, lam, mu, tuple(N), window)
        if obstruction is None:
            if verify_graded_basis(r, lam, mu, tuple(N), cutoff):
                return tuple(N)
            failures.append({"N": list(N), "vanishing": None, "rank_failure": True})
            i = min(range(r), key=lambda j: N[j])
            N[i] += 1
        else:
            failures.append({"N": list(N), "vanishing": obstruction})
            N[obstruction["s"] - 1] += 1
        if max(N) > 2 * bound:
            break
    raise SearchExhaustedError(
        "no certified shift within bound %d for r=%d" % (bound, r),
        report={"r": r, "bound": bound, "failures": failures[-10:]},
    )


# ---------------------------------------------------------------------------
# spanning generators by coordinate peeling


def spanning_generators(
    r: int,
    lam,
    mu,
    cutoff: int = DEFAULT_CUTOFF,
    bound: int = DEFAULT_BOUND,
) -> GeneratorSet:
    """Finite monomial set S such that words e_1^(b_1) ... e_r^(b_r) applied
    to S span T^r_(lam, mu), certified up to the cutoff by verify_spanning.

    Induction: a certified shift N embeds a copy with a graded word basis;
    the quotient is filtered by peeling coordinates one at a time, each layer
    being a rank r-1 module (coordinate i deleted, earlier mu's already
    shifted), handled recursively; the layer generators are lifted back and
    the box {N + a : a_i < i} covers the embedded copy.
    """
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    if r == 0:
        return GeneratorSet(((),))
    N = find_good_shift(r, lam, mu, bound=bound, cutoff=cutoff)
    gens = set()
    for i in range(r):
        lam_layer = lam[:i] + lam[i + 1 :]
        mu_layer = tuple(
            mu[j] + N[j] for j in range(i)
        ) + tuple(mu[j] for j in range(i + 1, r))
        if N[i] == 0:
            continue
        sub = spanning_generators(r - 1, lam_layer, mu_layer, cutoff, bound)
        for k in range(N[i]):
            for s in sub:
                lifted = (
                    tuple(N[j] + s[j] for j in range(i))
                    + (k,)
                    + tuple(s[j - 1] for j in range(i + 1, r))
                )
                gens.add(lifted)
    for tail in itertools.product(*(range(i + 1) for i in range(r))):
        gens.add(tuple(n + a for n, a in zip(N, tail)))
    return GeneratorSet(tuple(gens))


def spanning_certificate(
    S, r: int, lam, mu, cutoff: int, d: int = 1
) -> dict:
    """Per-weight rank certificate that words on S span every slice.

    Words use e_d, e_2d, ..., e_rd (d = 1 is the plain case); slice w passes
    when the vectors act_word(b, z^s), s in S, reach full rank
    binom(w+r-1, r-1).
    """
    if d < 1:
        raise ValueError("dilation degree must be >= 1")
    desc = ModuleDescriptor(r, tuple(lam), tuple(mu))
    exponents = list(GeneratorSet(tuple(tuple(s) for s in S)))
    weights = []
    verdict = True
    for w in range(cutoff + 1):
        dim = binom(w + r - 1, r - 1) if r > 0 else (1 if w == 0 else 0)
        vectors = _slice_vectors(desc, w, d=d, generators=exponents)
        rank = _slice_rank(vectors)
        ok = rank == dim
        verdict = verdict and ok
        weights.append(
            {
                "weight": w,
                "dimension": dim,
                "candidates": len(vectors),
                "rank": rank,
                "ok": ok,
            }
        )
    return {
        "r": r,
        "lambda": [format_rat(Fraction(x)) for x in lam],
        "mu": [format_rat(Fraction(x)) for x in mu],
        "d": d,
        "generators": [list(e) for e in exponents],
        "cutoff": cutoff,
        "weights": weights,
        "verdict": verdict,
    }


def verify_spanning(S, r: int, lam, mu, cutoff: int) -> bool:
    """True iff words e_1..e_r on S span every weight slice up to cutoff."""
    return spanning_certificate(S, r, lam, mu, cutoff, d=1)["verdict"]


def dilated_generators(
    r: int,
    lam,
    mu,
    d: int,
    cutoff: int = DEFAULT_CUTOFF,
    bound: int = DEFAULT_BOUND,
) -> GeneratorSet:
    """Generator set for the action restricted to e_d, e_2d, ..., e_rd.

    Restriction to the dilated copy of the one-variable algebra splits each
    tensor factor into d residue submodules spanned by z^(d t + s); residue
    vector sbar contributes the d-dilated lift of the spanning generators of
    a rank-r module with parameters lam'_i = lam_i,
    mu'_i = (mu_i + s_i + lam_i)/d - lam_i (derived by matching the exact
    action coefficients on z^(d t + s)).
    """
    if d < 1:
        raise ValueError("dilation degree must be >= 1")
    lam = tuple(Fraction(x) for x in lam)
    mu = tuple(Fraction(x) for x in mu)
    if r == 0:
        return GeneratorSet(((),))
    gens = set()
    inner_cutoff = max(r, (cutoff + d - 1) // d + r)
    for residue in itertools.product(range(d), repeat=r):
        mu_res = tuple(
            (mu[i] + residue[i] + lam[i]) / d - lam[i] for i in range(r)
        )
        sub = spanning_generators(r, lam, mu_res, cutoff=inner_cutoff, bound=DEFAULT_BOUND)
        for t in sub:
            gens.add(tuple(d * t[i] + residue[i] for i in range(r)))
    return GeneratorSet(tuple(gens))


def verify_spanning_dilated(S, r: int, lam, mu, d: int, cutoff: int) -> bool:
    """True iff words in e_d, ..., e_rd applied to S span every weight slice
    up to the cutoff; with d = 1 this is exactly verify_spanning."""
    return spanning_certificate(S, r, lam, mu, cutoff, d=d)["verdict"]
