"""Shared enumeration helpers: exponent vectors, weighted vectors, tails."""

from __future__ import annotations

from math import comb as binom

__all__ = ["binom", "compositions", "monomials_of_degree", "weighted_vectors", "bounded_tails"]


def compositions(total: int, parts: int):
    """Yield all tuples of `parts` nonnegatives summing to `total`, in
    lexicographically increasing order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def monomials_of_degree(nvars: int, degree: int):
    """All exponent vectors of the given total degree, lex increasing."""
    return list(compositions(degree, nvars))


def weighted_vectors(r: int, weight: int):
    """All b in N^r with sum(i * b_i) == weight, coordinates weighted 1..r,
    lex increasing."""
    out = []

    def rec(i, remaining, prefix):
        if i == r:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        w = i + 1
        for b in range(remaining // w + 1):
            prefix.append(b)
            rec(i + 1, remaining - w * b, prefix)
            prefix.pop()

    rec(0, weight, [])
    return out


def bounded_tails(r: int, weight: int):
    """All a in N^r with a_i < i (1-based) and sum a_i == weight, lex increasing."""
    out = []

    def rec(i, remaining, prefix):
        if i == r:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        cap = min(i, remaining)  # position i+1 allows 0..i
        for a in range(cap + 1):
            prefix.append(a)
            rec(i + 1, remaining - a, prefix)
            prefix.pop()

    rec(0, weight, [])
    return out
