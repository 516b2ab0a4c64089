"""Tensor modules over the one-variable algebras and their weight theory.

T_(lambda, mu) is the rank-one module k[z] z^mu d^(-lambda) with
e_k . z^m (z^mu d^(-lambda)) = (m + mu + (k+1) lambda) z^(m+k) (z^mu d^(-lambda)).

The r-fold tensor product T^r_(lambdabar, mubar) carries the diagonal action

    e_k . z^abar = sum_i (a_i + mu_i + (k+1) lambda_i) z_i^k z^abar,

which raises weight by exactly k.  Monomials are indexed by their exponent
vector abar; the ground monomial z^mubar d^(-lambdabar) is implicit.  The
parameters may be arbitrary rationals.

The same element type also serves the coordinatewise action of the direct
sum of one-variable algebras (one tensor factor each), used by the weight
decomposition of the coinduced modules: act_e_coordinate touches a single
tensor factor.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ._enum import binom
from .exact import format_rat
from .liealg import LieElement, bracket

__all__ = [
    "ModuleDescriptor",
    "ModuleElement",
    "WeightVector",
    "monomial",
    "act_e",
    "act_e_coordinate",
    "act_word",
    "act_lie",
    "module_axiom_check",
    "shift_submodule",
    "shift_embed",
    "weight_support",
    "decompose_coinduced",
    "graded_dimension",
]


@dataclass(frozen=True)
class ModuleDescriptor:
    """Parameters (r, lambdabar, mubar) of a tensor module T^r."""

    r: int
    lam: tuple
    mu: tuple

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("rank must be >= 0")
        if len(self.lam) != self.r or len(self.mu) != self.r:
            raise ValueError("parameter vectors must have length r")
        object.__setattr__(self, "lam", tuple(Fraction(x) for x in self.lam))
        object.__setattr__(self, "mu", tuple(Fraction(x) for x in self.mu))

    def to_dict(self):
        return {
            "r": self.r,
            "lambda": [format_rat(x) for x in self.lam],
            "mu": [format_rat(x) for x in self.mu],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            int(data["r"]),
            tuple(Fraction(x) for x in data["lambda"]),
            tuple(Fraction(x) for x in data["mu"]),
        )


class ModuleElement:
    """Finite linear combination of monomials z^abar in a fixed T^r."""

    __slots__ = ("descriptor", "terms")

    def __init__(self, descriptor: ModuleDescriptor, terms=None):
        self.descriptor = descriptor
        self.terms = {}
        if terms:
            for expo, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                expo = tuple(int(a) for a in expo)
                if len(expo) != descriptor.r or any(a < 0 for a in expo):
                    raise ValueError("bad monomial exponent %r" % (expo,))
                self.terms[expo] = self.terms.get(expo, Fraction(0)) + c
                if self.terms[expo] == 0:
                    del self.terms[expo]

    def is_zero(self) -> bool:
        return not self.terms

    def weight(self):
        """Common total degree of the support; None for 0, error if mixed."""
        if not self.terms:
            return None
        degrees = {sum(e) for e in self.terms}
        if len(degrees) > 1:
            raise ValueError("inhomogeneous element")
        return degrees.pop()

    def _like(self, terms):
        out = ModuleElement(self.descriptor)
        out.terms = terms
        return out

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if self.descriptor != other.descriptor:
            raise ValueError("module mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return self._like(terms)

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        c = Fraction(scalar)
        if c == 0:
            return self._like({})
        return self._like({e: k * c for e, k in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and self.descriptor == other.descriptor
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms):
            c = self.terms[expo]
            mono = "*".join(
                "z%d^%d" % (i + 1, a) if a > 1 else "z%d" % (i + 1)
                for i, a in enumerate(expo)
                if a
            )
            parts.append("%s*%s" % (format_rat(c), mono or "1"))
        return " + ".join(parts)

    __repr__ = __str__


def monomial(descriptor: ModuleDescriptor, expo, coeff=1) -> ModuleElement:
    return ModuleElement(descriptor, {tuple(expo): Fraction(coeff)})


def act_e(k: int, m: ModuleElement) -> ModuleElement:
    """Diagonal action of e_k, k >= 1; raises weight by exactly k."""
    if k < 1:
        raise ValueError("act_e requires k >= 1 (e_0 and e_-1 are excluded)")
    desc = m.descriptor
    lam, mu = desc.lam, desc.mu
    terms = {}
    for expo, coeff in m.terms.items():
        for i in range(desc.r):
            factor = expo[i] + mu[i] + (k + 1) * lam[i]
            if factor == 0:
                continue
            up = list(expo)
            up[i] += k
            key = tuple(up)
            s = terms.get(key, Fraction(0)) + coeff * factor
            if s:
                terms[key] = s
            elif key in terms:
                del terms[key]
    out = ModuleElement(desc)
    out.terms = terms
    return out


def act_e_coordinate(k: int, i: int, m: ModuleElement) -> ModuleElement:
    """Action of the i-th coordinate field x_i^(k+1) d_i (0-based i):
    only tensor factor i moves."""
    if k < 1:
        raise ValueError("coordinate action requires k >= 1")
    desc = m.descriptor
    if not 0 <= i < desc.r:
        raise ValueError("coordinate index out of range")
    lam, mu = desc.lam, desc.mu
    terms = {}
    for expo, coeff in m.terms.items():
        factor = expo[i] + mu[i] + (k + 1) * lam[i]
        if factor == 0:
            continue
        up = list(expo)
        up[i] += k
        key = tuple(up)
        s = terms.get(key, Fraction(0)) + coeff * factor
        if s:
            terms[key] = s
    out = ModuleElement(desc)
    out.terms = terms
    return out


def act_word(rho, m: ModuleElement) -> ModuleElement:
    """Apply the left-normalized word e_1^(rho_1) ... e_r^(rho_r): as an
    operator product the rightmost factor acts first, so e_r powers are
    applied first and e_1 powers last."""
    out = m
    for k in range(len(rho), 0, -1):
        for _ in range(rho[k - 1]):
            out = act_e(k, out)
            if out.is_zero():
                return out
    return out


def act_lie(u: LieElement, m: ModuleElement) -> ModuleElement:
    """Action of an element of the span of {e_k : k >= 1} (one variable)."""
    if u.n != 1:
        raise ValueError("tensor modules here carry the one-variable action")
    out = ModuleElement(m.descriptor)
    for basis, coeff in u.terms.items():
        k = basis.weight
        out = out + coeff * act_e(k, m)
    return out


def module_axiom_check(u: LieElement, v: LieElement, m: ModuleElement) -> bool:
    """u.(v.m) - v.(u.m) == [u,v].m for elements of span{e_k, k >= 1}."""
    lhs = act_lie(u, act_lie(v, m)) - act_lie(v, act_lie(u, m))
    rhs = act_lie(bracket(u, v), m)
    return lhs == rhs


def shift_submodule(descriptor: ModuleDescriptor, N) -> ModuleDescriptor:
    """Descriptor of the submodule T^r_(lambdabar, mubar + Nbar); the
    inclusion into T^r_(lambdabar, mubar) sends z^abar to z^(abar + Nbar)."""
    N = tuple(int(x) for x in N)
    if len(N) != descriptor.r or any(x < 0 for x in N):
        raise ValueError("shift vector must be a nonnegative integer r-vector")
    mu = tuple(m + s for m, s in zip(descriptor.mu, N))
    return ModuleDescriptor(descriptor.r, descriptor.lam, mu)


def shift_embed(m: ModuleElement, N, parent: ModuleDescriptor) -> ModuleElement:
    """Apply the inclusion z^abar -> z^(abar+Nbar) of the shifted submodule
    into its parent module."""
    N = tuple(int(x) for x in N)
    if shift_submodule(parent, N) != m.descriptor:
        raise ValueError("element does not live in the N-shifted submodule")
    out = ModuleElement(parent)
    out.terms = {
        tuple(a + s for a, s in zip(expo, N)): c for expo, c in m.terms.items()
    }
    return out


def graded_dimension(descriptor: ModuleDescriptor, w: int) -> int:
    """Dimension of the weight-w slice of T^r: binom(w+r-1, r-1)."""
    if w < 0:
        return 0
    if descriptor.r == 0:
        return 1 if w == 0 else 0
    return binom(w + descriptor.r - 1, descriptor.r - 1)


# ---------------------------------------------------------------------------
# weight decomposition of coinduced modules


@dataclass(frozen=True)
class WeightVector:
    """An integral gl_n weight with its multiplicity."""

    alpha: tuple
    multiplicity: int


def _check_dominant(lam, n):
    lam = tuple(int(x) for x in lam)
    if len(lam) != n:
        raise ValueError("weight must have length n")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError("weight must be dominant (weakly decreasing)")
    return lam


def weight_support(lam, n: int):
    """Weights of the irreducible gl_n module V_lam with multiplicities.

    Enumerates triangular interlacing patterns with top row lam; the weight
    reads off the row-sum differences.  Output is sorted lexicographically
    decreasing and the multiplicities sum to dim V_lam.
    """
    lam = _check_dominant(lam, n)
    counts = Counter()

    # walk collects row totals from the top (length n) down to length 1;
    # the weight is alpha_i = s_i - s_(i-1) over row lengths i, i-1.
    def walk(row, totals):
        totals = totals + [sum(row)]
        if len(row) == 1:
            diffs = []
            prev = 0
            for t in reversed(totals):
                diffs.append(t - prev)
                prev = t
            counts[tuple(diffs)] += 1
            return

        def choose(i, prefix):
            if i == len(row) - 1:
                walk(tuple(prefix), totals)
                return
            for v in range(row[i + 1], row[i] + 1):
                prefix.append(v)
                choose(i + 1, prefix)
                prefix.pop()

        choose(0, [])

    walk(lam, [])
    support = [WeightVector(alpha, mult) for alpha, mult in counts.items()]
    support.sort(key=lambda wv: wv.alpha, reverse=True)
    return support


def decompose_coinduced(lam, n: int):
    """Decomposition of the coinduced module attached to V_lam under the
    coordinatewise sum of one-variable algebras.

    Each weight alpha of V_lam of multiplicity m contributes m copies of the
    tensor product over coordinates i of T_(alpha_i, 0); returned as
    (ModuleDescriptor, multiplicity) pairs, r = n, coordinatewise action.
    """
    out = []
    for wv in weight_support(lam, n):
        desc = ModuleDescriptor(
            n, tuple(Fraction(a) for a in wv.alpha), (Fraction(0),) * n
        )
        out.append((desc, wv.multiplicity))
    return out
