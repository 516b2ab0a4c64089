"""Associated-graded presentations, module Groebner bases, Hilbert series.

Filtering the enveloping algebra by word length identifies the associated
graded of a tensor module, generated by a finite monomial set S, with a
quotient of a free module over the commutative polynomial ring
k[g_1, ..., g_r], deg g_i = i.  Relations are harvested exactly, one weight
slice at a time: a word column that becomes linearly dependent on earlier
columns yields the maximal-length part of its dependency as a homogeneous
relation of the graded module.  A position-over-term Groebner basis of the
relation module then turns standard-monomial counting into a closed-form
Hilbert series with denominator dividing prod (1 - t^i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._enum import weighted_vectors
from .exact import Echelon, MPoly
from .tensormod import ModuleDescriptor, act_e, monomial

__all__ = [
    "PolyModulePresentation",
    "RationalSeries",
    "normal_order_word",
    "associated_graded_presentation",
    "module_groebner",
    "hilbert_series",
    "partial_sum_polynomial",
]


def normal_order_word(mono) -> tuple:
    """Left-normalized word of a commutative monomial in g_1..g_r.

    Input is an exponent tuple (a_1, ..., a_r) or a single-term MPoly; the
    result lists generator indices in product order, e.g. g_1 g_2^2 ->
    (1, 2, 2).  Applied to a module element (rightmost letter first) this
    equals act_word((a_1, ..., a_r), m).
    """
    if isinstance(mono, MPoly):
        if len(mono.terms) != 1:
            raise ValueError("normal_order_word expects a single monomial")
        ((expo, coeff),) = mono.terms.items()
        if coeff != 1:
            raise ValueError("normal_order_word expects a monic monomial")
        mono = expo
    expo = tuple(int(a) for a in mono)
    if any(a < 0 for a in expo):
        raise ValueError("negative exponent")
    word = []
    for i, a in enumerate(expo):
        word.extend([i + 1] * a)
    return tuple(word)


@dataclass
class PolyModulePresentation:
    """Free module presentation over k[g_1..g_r]: generator weights plus a
    list of relation vectors (one MPoly in the g's per generator slot)."""

    ring_vars: tuple
    generator_weights: tuple
    relations: list

    @property
    def num_generators(self) -> int:
        return len(self.generator_weights)

    @property
    def var_weights(self) -> tuple:
        return tuple(i + 1 for i in range(len(self.ring_vars)))


def _g_vars(r: int) -> tuple:
    return tuple("g%d" % (i + 1) for i in range(r))


def associated_graded_presentation(
    descriptor: ModuleDescriptor, S, cutoff: int
) -> PolyModulePresentation:
    """Presentation of the associated graded module on the generators S,
    with relations harvested from all weight slices <= cutoff.

    Within a slice, columns g^b * m_s are inserted in order of increasing
    word length; a dependent column's dependency is truncated to its
    maximal-length terms (lower lengths vanish in the graded piece), so the
    harvested relations generate the graded relation module exactly on the
    verified window.
    """
    r = descriptor.r
    gvars = _g_vars(r)
    gens = sorted(tuple(int(a) for a in s) for s in S)
    gen_weights = tuple(sum(s) for s in gens)
    relations = []
    for w in range(cutoff + 1):
        columns = []
        for j, s in enumerate(gens):
            rem = w - sum(s)
            if rem < 0:
                continue
            for b in weighted_vectors(r, rem):
                columns.append((sum(b), b, j, s))
        columns.sort()
        ech = Echelon(track=True)
        labels = []
        for length, b, j, s in columns:
            vec = monomial(descriptor, s)
            for k in range(r, 0, -1):
                for _ in range(b[k - 1]):
                    vec = act_e(k, vec)
            labels.append((length, b, j))
            combo = ech.insert(vec.terms if vec.terms else {})
            if combo is None:
                continue
            parts = {}
            for idx, coeff in combo.items():
                llen, lb, lj = labels[idx]
                if llen != length:
                    continue
                parts.setdefault(lj, {})[lb] = coeff
            relation = tuple(
                MPoly(gvars, parts.get(j2, {})) for j2 in range(len(gens))
            )
            relations.append(_normalize_relation(relation, gvars))
    return PolyModulePresentation(gvars, gen_weights, relations)


def _normalize_relation(relation, gvars):
    """Scale a relation vector to primitive integers with a deterministic
    positive sign."""
    denom = 1
    for poly in relation:
        for c in poly.terms.values():
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
    content = 0
    for poly in relation:
        for c in poly.terms.values():
            content = math.gcd(content, c.numerator * (denom // c.denominator))
    if content == 0:
        return relation
    scale = Fraction(denom, content)
    first = None
    for poly in relation:
        if poly.terms:
            _, lead = poly.leading()
            first = lead * scale
            break
    if first is not None and first < 0:
        scale = -scale
    return tuple(poly * scale for poly in relation)


# ---------------------------------------------------------------------------
# module Groebner bases (position over term, weighted deg-lex)


def _wdeg(expo, weights):
    return sum(w * e for w, e in zip(weights, expo))


def _term_key(pos, expo, weights):
    # positions: earlier generator wins; then weighted degree, then lex
    return (-pos, _wdeg(expo, weights), expo)


def _leading_term(vec, weights):
    """((pos, expo), coeff) of the maximal term of a relation vector."""
    best = None
    for pos, poly in enumerate(vec):
        for expo, coeff in poly.terms.items():
            key = _term_key(pos, expo, weights)
            if best is None or key > best[0]:
                best = (key, pos, expo, coeff)
    if best is None:
        return None
    return (best[1], best[2]), best[3]


def _divides(e1, e2):
    return all(a <= b for a, b in zip(e1, e2))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vec_mul_mono(vec, expo, coeff, gvars):
    shift = MPoly(gvars, {tuple(expo): coeff})
    return tuple(p * shift for p in vec)


def _vec_is_zero(vec):
    return all(p.is_zero() for p in vec)


def _reduce_vector(vec, basis, weights, gvars):
    """Full normal form of vec against basis (list of (vec, lt, lc))."""
    result = [MPoly(gvars) for _ in vec]
    work = list(vec)
    while not _vec_is_zero(tuple(work)):
        lt = _leading_term(tuple(work), weights)
        (pos, expo), coeff = lt
        reduced = False
        for bvec, (bpos, bexpo), bcoeff in basis:
            if bpos == pos and _divides(bexpo, expo):
                factor = _vec_mul_mono(
                    bvec, _vec_sub(expo, bexpo), coeff / bcoeff, gvars
                )
                work = [w - f for w, f in zip(work, factor)]
                reduced = True
                break
        if not reduced:
            result[pos] = result[pos] + MPoly(gvars, {expo: coeff})
            work[pos] = work[pos] - MPoly(gvars, {expo: coeff})
    return tuple(result)


def module_groebner(
    pres: PolyModulePresentation, order: str = "pot-deglex"
) -> PolyModulePresentation:
    """Buchberger completion of the relation module.

    Order: position over term (earlier generators dominate), monomials by
    weighted degree (deg g_i = i) then lex.  S-vectors only arise between
    relations leading in the same position; the returned basis is
    inter-reduced and every S-vector reduces to zero.
    """
    if order != "pot-deglex":
        raise ValueError("unsupported order %r" % (order,))
    gvars = pres.ring_vars
    weights = pres.var_weights
    basis = []
    for vec in pres.relations:
        if _vec_is_zero(vec):
            continue
        lt = _leading_term(vec, weights)
        basis.append((vec, lt[0], lt[1]))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        (vi, (pi, ei), ci) = basis[i]
        (vj, (pj, ej), cj) = basis[j]
        if pi != pj:
            continue
        lcm = tuple(max(a, b) for a, b in zip(ei, ej))
        si = _vec_mul_mono(vi, _vec_sub(lcm, ei), Fraction(1) / ci, gvars)
        sj = _vec_mul_mono(vj, _vec_sub(lcm, ej), Fraction(1) / cj, gvars)
        spair = tuple(a - b for a, b in zip(si, sj))
        nf = _reduce_vector(spair, basis, weights, gvars)
        if _vec_is_zero(nf):
            continue
        lt = _leading_term(nf, weights)
        k = len(basis)
        basis.append((nf, lt[0], lt[1]))
        pairs.extend((m, k) for m in range(k))
    # minimal basis: drop anything whose leading term another element divides
    minimal = []
    for idx, (vec, (pos, expo), lc) in enumerate(basis):
        dominated = False
        for m, (_, (bpos, bexpo), _) in enumerate(basis):
            if m == idx or bpos != pos or not _divides(bexpo, expo):
                continue
            if _divides(expo, bexpo) and m > idx:
                continue  # identical leading terms: keep the earlier one
            dominated = True
            break
        if not dominated:
            minimal.append((vec, (pos, expo), lc))
    out = []
    for i, (vec, lt, lc) in enumerate(minimal):
        rest = [minimal[m] for m in range(len(minimal)) if m != i]
        nf = _reduce_vector(vec, rest, weights, gvars) if rest else vec
        out.append(_normalize_relation(nf, gvars))
    return PolyModulePresentation(gvars, pres.generator_weights, out)


def groebner_self_test(pres: PolyModulePresentation) -> bool:
    """Confluence check: every S-vector of the basis reduces to zero."""
    gvars = pres.ring_vars
    weights = pres.var_weights
    basis = []
    for vec in pres.relations:
        if _vec_is_zero(vec):
            continue
        lt = _leading_term(vec, weights)
        basis.append((vec, lt[0], lt[1]))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            (vi, (pi, ei), ci) = basis[i]
            (vj, (pj, ej), cj) = basis[j]
            if pi != pj:
                continue
            lcm = tuple(max(a, b) for a, b in zip(ei, ej))
            si = _vec_mul_mono(vi, _vec_sub(lcm, ei), Fraction(1) / ci, gvars)
            sj = _vec_mul_mono(vj, _vec_sub(lcm, ej), Fraction(1) / cj, gvars)
            spair = tuple(a - b for a, b in zip(si, sj))
            if not _vec_is_zero(_reduce_vector(spair, basis, weights, gvars)):
                return False
    return True


# ---------------------------------------------------------------------------
# Hilbert series


@dataclass
class RationalSeries:
    """num(t)/den(t) with integer coefficients, den(0) > 0, gcd-reduced."""

    numerator: MPoly
    denominator: MPoly

    def num_coeffs(self):
        return _mp_to_list(self.numerator)

    def den_coeffs(self):
        return _mp_to_list(self.denominator)

    def expand(self, upto: int):
        """Power-series coefficients h_0..h_upto."""
        num = self.num_coeffs()
        den = self.den_coeffs()
        if not den or den[0] == 0:
            raise ValueError("denominator vanishes at 0")
        h = []
        for k in range(upto + 1):
            acc = Fraction(num[k]) if k < len(num) else Fraction(0)
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * h[k - j]
            h.append(acc / den[0])
        return h

    def to_dict(self):
        num = [int(c) for c in self.num_coeffs()]
        den = [int(c) for c in self.den_coeffs()]
        return {"num": num, "den": den}

    def __str__(self):
        return "(%s) / (%s)" % (self.numerator, self.denominator)


def _mp_to_list(poly: MPoly):
    if len(poly.variables) != 1:
        raise ValueError("univariate expected")
    deg = poly.total_degree()
    out = [Fraction(0)] * (max(deg, 0) + 1)
    for expo, coeff in poly.terms.items():
        out[expo[0]] = coeff
    return out


def _list_to_mp(coeffs, var="t"):
    return MPoly((var,), {(i,): c for i, c in enumerate(coeffs) if c})


def _ptrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _ptrim(out)


def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _psub(a, b):
    return _padd(a, [-x for x in b])


def _pdivmod(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    _ptrim(a)
    _ptrim(b)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, x in enumerate(b):
            a[i + shift] -= factor * x
        _ptrim(a)
    return _ptrim(q), a


def _pgcd(a, b):
    a = _ptrim([Fraction(x) for x in a])
    b = _ptrim([Fraction(x) for x in b])
    while b:
        _, rem = _pdivmod(a, b)
        a, b = b, rem
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _reduce_fraction(num, den):
    g = _pgcd(num, den)
    if len(g) > 1:
        num, _ = _pdivmod(num, g)
        den, _ = _pdivmod(den, g)
    denom_lcm = 1
    for c in num + den:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    num_i = [c * denom_lcm for c in num]
    den_i = [c * denom_lcm for c in den]
    content = 0
    for c in num_i + den_i:
        content = math.gcd(content, int(c))
    if content > 1:
        num_i = [c / content for c in num_i]
        den_i = [c / content for c in den_i]
    if den_i and den_i[0] < 0:
        num_i = [-c for c in num_i]
        den_i = [-c for c in den_i]
    return num_i, den_i


def _monomial_quotient_numerator(gens, weights):
    """Numerator of Hilbert(k[g]/I) over prod(1 - t^(w_i)) for the monomial
    ideal I generated by gens (exponent tuples, weighted variables)."""
    gens = _minimalize(gens)

    @lru_cache(maxsize=None)
    def rec(frozen):
        gset = sorted(frozen)
        if not gset:
            return (1,)
        if all(e == 0 for e in gset[0]):
            return (0,)
        pick = gset[-1]
        rest = tuple(g for g in gset[:-1])
        colon = _minimalize(
            [tuple(max(a - b, 0) for a, b in zip(g, pick)) for g in rest]
        )
        base = rec(tuple(rest))
        sub = rec(tuple(sorted(colon)))
        shift = _wdeg(pick, weights)
        out = list(base) + [0] * max(0, shift + len(sub) - len(base))
        for i, c in enumerate(sub):
            out[shift + i] -= c
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    return [Fraction(c) for c in rec(tuple(sorted(gens)))]


def _minimalize(gens):
    gens = sorted(set(tuple(g) for g in gens))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out = [h for h in out if not _divides(g, h)]
            out.append(g)
    return sorted(out)


def hilbert_series(
    pres: PolyModulePresentation, gen_weights=None, var_weights=None
) -> RationalSeries:
    """Weighted Hilbert series of the presented module by standard-monomial
    counting: complement of the leading-term module per generator slot over
    the common denominator prod(1 - t^(w_i)).  Relations must form a
    Groebner basis (run module_groebner first)."""
    gvars = pres.ring_vars
    weights = tuple(var_weights) if var_weights else pres.var_weights
    gweights = tuple(gen_weights) if gen_weights else pres.generator_weights
    den = [Fraction(1)]
    for w in weights:
        factor = [Fraction(0)] * (w + 1)
        factor[0] = Fraction(1)
        factor[w] = Fraction(-1)
        den = _pmul(den, factor)
    lead_by_pos = {j: [] for j in range(len(gweights))}
    for vec in pres.relations:
        if _vec_is_zero(vec):
            continue
        (pos, expo), _ = _leading_term(vec, weights)
        lead_by_pos[pos].append(expo)
    num = []
    for j, gw in enumerate(gweights):
        part = _monomial_quotient_numerator(lead_by_pos[j], weights)
        shifted = [Fraction(0)] * gw + part
        num = _padd(num, shifted)
    num_i, den_i = _reduce_fraction(num, den)
    return RationalSeries(_list_to_mp(num_i), _list_to_mp(den_i))


# ---------------------------------------------------------------------------
# partial sums


def partial_sum_polynomial(series: RationalSeries, window: int):
    """Eventual polynomial of the partial sums f(n) = sum_(k<=n) h_k.

    Detects stabilization by finite differences on the tail of the window;
    returns (coefficients ascending, d, c) where the leading term is
    c * n^d / d! with integer c.  Raises ValueError when the window is too
    small to stabilize.
    """
    if window < 4:
        raise ValueError("window too small")
    h = series.expand(window)
    f = []
    acc = Fraction(0)
    for x in h:
        acc += x
        f.append(acc)
    rows = [f]
    for _ in range(window):
        prev = rows[-1]
        if len(prev) < 2:
            break
        rows.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    for d in range(len(rows)):
        row = rows[d]
        if len(row) < 4:
            break
        tail = row[-4:]
        if any(x != tail[0] for x in tail):
            continue
        x0 = window - d - 3
        values = [rows[0][x0 + i] for i in range(d + 4)]
        coeffs = _interp_at(values[: d + 1], x0)
        if all(
            _poly_eval(coeffs, x0 + i) == values[i] for i in range(len(values))
        ):
            coeffs = coeffs + [Fraction(0)] * (d + 1 - len(coeffs))
            lead = coeffs[d] if d < len(coeffs) else Fraction(0)
            c = lead * math.factorial(d)
            if c.denominator != 1:
                raise ValueError("leading coefficient %s is not integral" % c)
            return [Fraction(x) for x in coeffs], d, int(c)
    raise ValueError("window %d too small for partial sums to stabilize" % window)


def _interp_at(values, x0):
    """Polynomial through (x0 + i, values[i]), coefficients ascending."""
    n = len(values)
    table = [list(values)]
    for k in range(1, n):
        prev = table[-1]
        table.append([(prev[i + 1] - prev[i]) / k for i in range(len(prev) - 1)])
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        dd = table[k][0]
        for i, b in enumerate(basis):
            coeffs[i] += dd * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        root = x0 + k
        for i, b in enumerate(basis):
            nxt[i + 1] += b
            nxt[i] -= b * root
        basis = nxt
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
