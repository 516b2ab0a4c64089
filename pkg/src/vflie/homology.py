"""Chevalley-Eilenberg homology of the vector-field algebras, weight slice
by weight slice.

Chains are C_p = Lambda^p(g) (x) M with the boundary

  d(x_1 ^ ... ^ x_p (x) m) =
      sum_(i<j) (-1)^(i+j) [x_i, x_j] ^ ... x_i^ ... x_j^ ... (x) m
    + sum_i    (-1)^i     x_1 ^ ... x_i^ ... ^ x_p (x) x_i . m.

Both terms preserve total weight (wedge weight plus module weight), so every
homology space splits into finite-dimensional weight slices computed by two
exact ranks.  Supported coefficients: the trivial module for any flavor;
tensor modules with the diagonal one-variable action for L_d(1), d >= 1; and
tensor modules with the coordinatewise action for the coordinate-sum flavor.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from ._enum import monomials_of_degree
from .exact import SparseMat
from .liealg import (
    FLAVOR_COORDINATE_SUM,
    AlgebraDescriptor,
    VFBasis,
    basis_of_weight,
    bracket_basis,
)
from .spanning import ResourceLimitError
from .tensormod import ModuleDescriptor, ModuleElement, act_e, act_e_coordinate

__all__ = [
    "TrivialCoefficients",
    "TensorCoefficients",
    "ChainBasisElement",
    "chain_basis",
    "boundary_matrix",
    "homology_dim",
    "homology_table",
    "table_to_csv",
    "table_to_json",
    "DEFAULT_DIM_LIMIT",
]

DEFAULT_DIM_LIMIT = 20000


@dataclass(frozen=True)
class TrivialCoefficients:
    """The one-dimensional trivial module k, concentrated in weight 0."""

    def validate(self, alg: AlgebraDescriptor):
        return None

    def basis_at_weight(self, w: int):
        return [()] if w == 0 else []

    def act(self, field: VFBasis, expo):
        return {}


@dataclass(frozen=True)
class TensorCoefficients:
    """A tensor module as coefficients.

    For L_d(1) (d >= 1) the whole one-variable algebra acts diagonally; for
    the coordinate-sum flavor each summand acts on its own tensor factor,
    which requires one factor per coordinate (r = n).  Monomial basis indexed
    by exponent vectors; module weight = total degree.
    """

    descriptor: ModuleDescriptor

    def validate(self, alg: AlgebraDescriptor):
        if alg.flavor == FLAVOR_COORDINATE_SUM:
            if self.descriptor.r != alg.n:
                raise ValueError(
                    "coordinatewise coefficients need one tensor factor per coordinate"
                )
            return None
        if alg.n == 1 and alg.min_weight >= 1:
            return None
        raise ValueError(
            "tensor coefficients support L_d(1) with d >= 1 or the "
            "coordinate-sum flavor only"
        )

    def basis_at_weight(self, w: int):
        if w < 0:
            return []
        return [tuple(e) for e in monomials_of_degree(self.descriptor.r, w)]

    def act(self, field: VFBasis, expo):
        m = ModuleElement(self.descriptor, {tuple(expo): Fraction(1)})
        if field.n == 1:
            out = act_e(field.weight, m)
        else:
            out = act_e_coordinate(field.weight, field.direction, m)
        return out.terms


@dataclass(frozen=True)
class ChainBasisElement:
    """x_1 ^ ... ^ x_p (x) z^expo with the wedge strictly increasing."""

    wedge: tuple
    expo: tuple


def _wedges_of_weight(alg: AlgebraDescriptor, p: int, w: int):
    """Strictly increasing p-tuples of basis fields with weight sum w."""
    if p == 0:
        return [()] if w == 0 else []
    minw = alg.min_weight
    w_top = w - (p - 1) * minw
    if w_top < minw:
        return []
    pool = []
    for wt in range(minw, w_top + 1):
        pool.extend(basis_of_weight(alg, wt))
    out = []

    def rec(start, left, budget, prefix):
        if left == 0:
            if budget == 0:
                out.append(tuple(prefix))
            return
        for idx in range(start, len(pool)):
            b = pool[idx]
            if b.weight + (left - 1) * minw > budget:
                # pool is sorted by weight, so no later element fits either
                break
            prefix.append(b)
            rec(idx + 1, left - 1, budget - b.weight, prefix)
            prefix.pop()

    rec(0, p, w, [])
    return out


def chain_basis(alg: AlgebraDescriptor, coeffs, p: int, w: int):
    """Ordered basis of the weight-w slice of Lambda^p(g) (x) M."""
    coeffs.validate(alg)
    if p < 0:
        return []
    minw = alg.min_weight
    out = []
    for wa in range(p * minw, w + 1):
        module_part = coeffs.basis_at_weight(w - wa)
        if not module_part:
            continue
        for wedge in _wedges_of_weight(alg, p, wa):
            for expo in module_part:
                out.append(ChainBasisElement(wedge, expo))
    return out


def _insert_signed(wedge, field):
    """Insert a field into a strictly increasing wedge.

    Returns (new_wedge, sign); (None, 0) when the field already appears.
    """
    if field in wedge:
        return None, 0
    key = field.sort_key()
    pos = 0
    while pos < len(wedge) and wedge[pos].sort_key() < key:
        pos += 1
    sign = -1 if pos % 2 else 1
    return wedge[:pos] + (field,) + wedge[pos:], sign


def boundary_matrix(alg: AlgebraDescriptor, coeffs, p: int, w: int) -> SparseMat:
    """Matrix of d_p on the weight-w slice: rows C_(p-1)(w), columns C_p(w)."""
    coeffs.validate(alg)
    cols = chain_basis(alg, coeffs, p, w)
    rows = chain_basis(alg, coeffs, p - 1, w)
    row_of = {c: i for i, c in enumerate(rows)}
    mat = SparseMat(len(rows), len(cols))
    for j, chain in enumerate(cols):
        wedge, expo = chain.wedge, chain.expo
        k = len(wedge)
        for i1 in range(k):
            for j1 in range(i1 + 1, k):
                sign = (-1) ** ((i1 + 1) + (j1 + 1))
                rest = tuple(b for t, b in enumerate(wedge) if t != i1 and t != j1)
                for basis, coeff in bracket_basis(wedge[i1], wedge[j1]):
                    new_wedge, s2 = _insert_signed(rest, basis)
                    if new_wedge is None:
                        continue
                    target = ChainBasisElement(new_wedge, expo)
                    ridx = row_of.get(target)
                    if ridx is None:
                        continue
                    mat[ridx, j] = mat[ridx, j] + sign * s2 * coeff
        for i1 in range(k):
            sign = (-1) ** (i1 + 1)
            rest = tuple(b for t, b in enumerate(wedge) if t != i1)
            for new_expo, coeff in coeffs.act(wedge[i1], expo).items():
                target = ChainBasisElement(rest, new_expo)
                ridx = row_of.get(target)
                if ridx is None:
                    continue
                mat[ridx, j] = mat[ridx, j] + sign * coeff
    return mat


def homology_dim(alg: AlgebraDescriptor, coeffs, p: int, w: int) -> int:
    """dim H_p at weight w = dim C_p(w) - rank d_p - rank d_(p+1), exactly."""
    cp = len(chain_basis(alg, coeffs, p, w))
    if cp == 0:
        return 0
    r_p = boundary_matrix(alg, coeffs, p, w).rank() if p > 0 else 0
    r_next = boundary_matrix(alg, coeffs, p + 1, w).rank()
    return cp - r_p - r_next


def homology_table(
    alg: AlgebraDescriptor,
    coeffs,
    p_max: int,
    w_max: int,
    dim_limit: int = DEFAULT_DIM_LIMIT,
    jobs: int = 1,
):
    """Exact dims {(p, w): dim H_p(w)} for p <= p_max, w <= w_max.

    The table is a finite window, never a completeness statement beyond it.
    Any chain slice larger than dim_limit raises ResourceLimitError naming
    the slice.  jobs > 1 distributes boundary ranks over a process pool;
    results are identical to the serial path.
    """
    coeffs.validate(alg)
    dims = {}
    slices = [(p, w) for w in range(w_max + 1) for p in range(p_max + 2)]
    for p, w in slices:
        n = len(chain_basis(alg, coeffs, p, w))
        dims[(p, w)] = n
        if n > dim_limit:
            raise ResourceLimitError(
                "chain slice (p=%d, w=%d) has dimension %d > limit %d"
                % (p, w, n, dim_limit)
            )
    tasks = [
        (p, w)
        for (p, w) in slices
        if 1 <= p <= p_max + 1 and dims[(p, w)] and dims.get((p - 1, w), 0)
    ]
    ranks = {}
    if jobs > 1:
        args = [(alg, coeffs, p, w) for (p, w) in tasks]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for (p, w), rank in zip(tasks, pool.map(_rank_task, args)):
                ranks[(p, w)] = rank
    else:
        for p, w in tasks:
            ranks[(p, w)] = boundary_matrix(alg, coeffs, p, w).rank()
    table = {}
    for w in range(w_max + 1):
        for p in range(p_max + 1):
            cp = dims[(p, w)]
            if cp == 0:
                table[(p, w)] = 0
                continue
            table[(p, w)] = cp - ranks.get((p, w), 0) - ranks.get((p + 1, w), 0)
    return table


def _rank_task(args):
    alg, coeffs, p, w = args
    return boundary_matrix(alg, coeffs, p, w).rank()


def table_to_csv(table, p_max: int, w_max: int) -> str:
    """CSV rendering: one row per homological degree, one column per weight."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p\\w"] + [str(w) for w in range(w_max + 1)])
    for p in range(p_max + 1):
        writer.writerow([str(p)] + [str(table[(p, w)]) for w in range(w_max + 1)])
    return buf.getvalue()


def table_to_json(alg: AlgebraDescriptor, table, p_max: int, w_max: int) -> str:
    entries = [
        {"p": p, "w": w, "dim": table[(p, w)]}
        for p in range(p_max + 1)
        for w in range(w_max + 1)
        if table[(p, w)]
    ]
    payload = {
        "algebra": alg.label(),
        "p_max": p_max,
        "w_max": w_max,
        "nonzero": entries,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
