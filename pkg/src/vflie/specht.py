"""Substitution-closed (T-) spaces of polynomials without constant term.

A T-space here is a subspace V of k[x_1..x_n] closed under every diagonal
substitution x_i -> p(x_i) with one univariate p, p(0) = 0, applied to all
variables at once.  Two facts drive the computation, both certified by the
routines below rather than assumed:

* V is closed under taking homogeneous components, because the component of
  degree m is an explicit rational combination of the dilations f(c x) at
  finitely many scalars c (a Vandermonde solve, done exactly).
* In characteristic zero a graded subspace is substitution-closed exactly
  when it is stable under the infinitesimal operators
      D_k f = sum_i x_i^(k+1) df/dx_i,  k >= 1,
  the derivatives of the one-parameter substitution families.  Since D_k
  raises degree by k, the closure saturates weight by weight in one
  ascending pass.

closure_basis builds the graded closure up to a cutoff; substitute and
homogeneous_split provide the raw moves so tests can confirm closure
membership for arbitrary sampled substitutions.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Echelon, MPoly

__all__ = [
    "variables_tuple",
    "substitute",
    "homogeneous_split",
    "infinitesimal_act",
    "closure_basis",
    "TSpace",
    "tspace_series",
]


def variables_tuple(n: int):
    """("x1", ..., "xn")."""
    return tuple("x%d" % (i + 1) for i in range(n))


def _require_no_constant(p: MPoly):
    zero = (0,) * len(p.variables)
    if p.terms.get(zero):
        raise ValueError("substitution polynomial must vanish at 0")


def substitute(f: MPoly, p: MPoly) -> MPoly:
    """Apply x_i -> p(x_i) to every variable of f.

    p must be univariate with p(0) = 0, so the result again has no constant
    term and substitutions compose.
    """
    if len(p.variables) != 1:
        raise ValueError("substitution polynomial must be univariate")
    _require_no_constant(p)
    pvar = p.variables[0]
    images = {
        v: p.subs_polys({pvar: MPoly.variable(f.variables, v)})
        for v in f.variables
    }
    return f.subs_polys(images)


def homogeneous_split(f: MPoly, points=None) -> dict:
    """Homogeneous components of f, {degree: component}, via dilations.

    The components are recovered as exact linear combinations of the
    dilations f(c x) at distinct scalars c (default 1, 2, ..., k), which is
    precisely why a substitution-closed space containing f contains each
    component.  Repeated points leave the dilation system singular and raise
    ValueError.  The result is checked against f before returning.
    """
    degrees = sorted({sum(e) for e in f.terms})
    if not degrees:
        return {}
    k = len(degrees)
    if points is None:
        points = [Fraction(i) for i in range(1, k + 1)]
    else:
        points = [Fraction(c) for c in points]
    if len(points) != k:
        raise ValueError("need exactly %d evaluation points" % k)
    if len(set(points)) != k:
        raise ValueError("evaluation points must be distinct")
    # rows: f(c_j x) = sum_d c_j^d comp_d; solve the k x k system exactly.
    rows = [[c ** d for d in degrees] for c in points]
    dil = []
    for c in points:
        if c == 0:
            dil.append(MPoly(f.variables, {e: q for e, q in f.terms.items() if sum(e) == 0}))
        else:
            scaled = {e: q * c ** sum(e) for e, q in f.terms.items()}
            dil.append(MPoly(f.variables, scaled))
    combo = _solve_exact(rows, dil, f.variables)
    out = {}
    for d, comp in zip(degrees, combo):
        if not comp.is_zero():
            out[d] = comp
    recomposed = MPoly(f.variables)
    for comp in out.values():
        recomposed = recomposed + comp
    if recomposed != f:
        raise AssertionError("homogeneous split failed to recompose")
    for d, comp in out.items():
        if any(sum(e) != d for e in comp.terms):
            raise AssertionError("component of degree %d is not homogeneous" % d)
    return out


def _solve_exact(rows, rhs, variables):
    """Solve (rows) * x = rhs for MPoly-valued rhs by Gaussian elimination."""
    k = len(rows)
    a = [list(map(Fraction, row)) for row in rows]
    b = list(rhs)
    for col in range(k):
        piv = next((r for r in range(col, k) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("dilation system is singular")
        a[col], a[piv] = a[piv], a[col]
        b[col], b[piv] = b[piv], b[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] = b[col] * inv
        for r in range(k):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                b[r] = b[r] - b[col] * factor
    return b


def infinitesimal_act(p: MPoly, f: MPoly) -> MPoly:
    """sum_i p(x_i) * df/dx_i, the derivative at 0 of t -> f(x + t p(x))."""
    if len(p.variables) != 1:
        raise ValueError("substitution polynomial must be univariate")
    pvar = p.variables[0]
    out = MPoly(f.variables)
    for v in f.variables:
        img = p.subs_polys({pvar: MPoly.variable(f.variables, v)})
        out = out + img * f.partial(v)
    return out


class TSpace:
    """Graded basis of a substitution-closed space, valid up to a cutoff."""

    def __init__(self, n: int, graded_basis: dict, cutoff: int):
        self.n = n
        self.variables = variables_tuple(n)
        self.graded_basis = graded_basis
        self.cutoff = cutoff

    def dimension(self, w: int) -> int:
        if w < 0 or w > self.cutoff:
            raise ValueError("weight %d outside certified range 0..%d" % (w, self.cutoff))
        return len(self.graded_basis.get(w, ()))

    def dimensions(self):
        return [self.dimension(w) for w in range(self.cutoff + 1)]

    def contains(self, f: MPoly) -> bool:
        """Exact membership test; f is split into homogeneous components."""
        if f.is_zero():
            return True
        if f.variables != self.variables:
            raise ValueError("variable mismatch")
        for d, comp in homogeneous_split(f).items():
            if d > self.cutoff:
                raise ValueError(
                    "component of degree %d outside certified range" % d
                )
            basis = self.graded_basis.get(d, [])
            if not basis:
                return False
            index = {}
            ech = Echelon()
            for g in basis:
                ech.insert(_vectorize(g, index))
            if ech.reduce(_vectorize(comp, index)):
                return False
        return True


def _vectorize(g: MPoly, index: dict) -> dict:
    vec = {}
    for expo, coeff in g.terms.items():
        pos = index.setdefault(expo, len(index))
        vec[pos] = coeff
    return vec


def closure_basis(generators, cutoff: int) -> TSpace:
    """Substitution closure of the given polynomials, graded up to cutoff.

    Components of the generators seed the grading; the single ascending
    sweep applies every ladder operator D_k to every lower-weight basis
    element, which suffices because each D_k strictly raises degree.
    Components beyond the cutoff are dropped (the returned space is only
    certified up to the cutoff).
    """
    gens = list(generators)
    if not gens:
        return TSpace(0, {}, cutoff)
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise ValueError("generators disagree on variables")
    n = len(variables)
    tvar = ("t",)
    seeds = {}
    for g in gens:
        for d, comp in homogeneous_split(g).items():
            if d <= cutoff:
                seeds.setdefault(d, []).append(comp)
    basis = {}
    echelons = {}
    indexes = {}

    def admit(w, poly):
        if poly.is_zero():
            return False
        ech = echelons.setdefault(w, Echelon())
        index = indexes.setdefault(w, {})
        if ech.insert(_vectorize(poly, index)) is not None:
            return False
        basis.setdefault(w, []).append(poly)
        return True

    for w in range(cutoff + 1):
        for poly in seeds.get(w, ()):
            admit(w, poly)
        for k in range(1, w + 1):
            lower = basis.get(w - k, [])
            ladder = MPoly(tvar, {(k + 1,): Fraction(1)})
            for g in lower:
                admit(w, infinitesimal_act(ladder, g))
    return TSpace(n, basis, cutoff)


def tspace_series(ts: TSpace) -> dict:
    """Fit the dimension sequence to Num(t) / prod_(i<=r) (1 - t^i).

    Tries r = 0, 1, ..., n + 2 in turn; a fit is accepted when multiplying
    the dimension series by the denominator leaves a numerator supported
    well below the cutoff (margin max(3, cutoff // 3)), then re-expanding
    reproduces every computed dimension.  Otherwise the result is marked
    inconclusive and only the raw dimensions are returned.
    """
    dims = ts.dimensions()
    cutoff = ts.cutoff
    margin = max(3, cutoff // 3)
    for r in range(0, ts.n + 3):
        den = [Fraction(1)]
        for i in range(1, r + 1):
            # multiply by (1 - t^i)
            nxt = [Fraction(0)] * (len(den) + i)
            for j, c in enumerate(den):
                nxt[j] += c
                nxt[j + i] -= c
            den = nxt
        if len(den) - 1 > cutoff - margin:
            break
        num = _series_times_poly(dims, den, cutoff)
        tail_start = cutoff - margin + 1
        if any(num[w] for w in range(tail_start, cutoff + 1)):
            continue
        trimmed = num[:tail_start]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        if not trimmed:
            trimmed = [Fraction(0)]
        if any(c.denominator != 1 for c in trimmed):
            continue
        expanded = _expand_rational(trimmed, den, cutoff)
        if expanded == [Fraction(d) for d in dims]:
            return {
                "dims": dims,
                "num": [int(c) for c in trimmed],
                "den": [int(c) for c in den],
                "verified_upto": cutoff,
                "inconclusive": False,
            }
    return {"dims": dims, "inconclusive": True}


def _series_times_poly(series, poly, upto):
    out = [Fraction(0)] * (upto + 1)
    for w in range(upto + 1):
        total = Fraction(0)
        for j, c in enumerate(poly):
            if j > w:
                break
            total += c * series[w - j]
        out[w] = total
    return out


def _expand_rational(num, den, upto):
    # den[0] = 1 by construction
    out = []
    for w in range(upto + 1):
        val = Fraction(num[w]) if w < len(num) else Fraction(0)
        for j in range(1, min(w, len(den) - 1) + 1):
            val -= den[j] * out[w - j]
        out.append(val / den[0])
    return out
