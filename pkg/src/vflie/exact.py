"""Exact rational arithmetic, multivariate polynomials and sparse linear algebra.

Everything here computes over Q with arbitrary-precision integers.  No
floating point, no modular shortcuts: ranks, kernels and determinants are
certificates, so they must be exact.  Rational scalars are stdlib
``fractions.Fraction``; elimination clears denominators and runs fraction-free
over the integers with gcd normalization to control coefficient growth.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

__all__ = [
    "Rat",
    "rat",
    "parse_rat",
    "format_rat",
    "MPoly",
    "SparseMat",
    "Echelon",
    "rank",
    "kernel_basis",
    "det_symbolic",
]


def rat(num, den=1) -> Fraction:
    """Build a Fraction; accepts ints, Fractions or 'p/q' strings."""
    if isinstance(num, str):
        return parse_rat(num)
    return Fraction(num, den)


def parse_rat(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into a Fraction.  Whitespace is tolerated."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p.strip()), int(q.strip()))
    return Fraction(int(s))


def format_rat(q) -> str:
    """Render a Fraction as 'p' or 'p/q' (denominator omitted when 1)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def deglex_key(expo):
    """Sort key for the degree-lexicographic monomial order."""
    return (sum(expo), expo)


# ---------------------------------------------------------------------------
# multivariate polynomials


class MPoly:
    """Multivariate polynomial over Q with a fixed variable tuple.

    Terms are stored sparsely as ``{exponent tuple: Fraction}`` with zero
    coefficients dropped.  Arithmetic requires both operands to share the
    same variable tuple.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        if terms:
            width = len(self.variables)
            for expo, coeff in terms.items():
                c = Fraction(coeff)
                if c == 0:
                    continue
                expo = tuple(int(e) for e in expo)
                if len(expo) != width or any(e < 0 for e in expo):
                    raise ValueError("bad exponent vector %r" % (expo,))
                clean[expo] = clean.get(expo, Fraction(0)) + c
                if clean[expo] == 0:
                    del clean[expo]
        self.terms = clean

    # -- constructors

    @classmethod
    def constant(cls, variables, value):
        variables = tuple(variables)
        zero = (0,) * len(variables)
        return cls(variables, {zero: Fraction(value)})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        i = variables.index(name)
        expo = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {expo: Fraction(1)})

    # -- predicates and views

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        zero = (0,) * len(self.variables)
        return self.terms.get(zero, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def coefficient(self, expo) -> Fraction:
        return self.terms.get(tuple(expo), Fraction(0))

    def leading(self):
        """(exponent, coefficient) of the deg-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        expo = max(self.terms, key=deglex_key)
        return expo, self.terms[expo]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError(
                "variable mismatch: %r vs %r" % (self.variables, other.variables)
            )

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            s = terms.get(expo, Fraction(0)) + c
            if s:
                terms[expo] = s
            elif expo in terms:
                del terms[expo]
        out = MPoly.__new__(MPoly)
        out.variables = self.variables
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = MPoly.__new__(MPoly)
        out.variables = self.variables
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return MPoly.constant(self.variables, other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = Fraction(other)
            if c == 0:
                return MPoly(self.variables)
            out = MPoly.__new__(MPoly)
            out.variables = self.variables
            out.terms = {e: k * c for e, k in self.terms.items()}
            return out
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(expo, Fraction(0)) + c1 * c2
                if s:
                    terms[expo] = s
                elif expo in terms:
                    del terms[expo]
        out = MPoly.__new__(MPoly)
        out.variables = self.variables
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.constant(self.variables, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly.constant(self.variables, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- substitution and calculus

    def evaluate(self, values) -> Fraction:
        """Evaluate at a {name: rational} assignment covering all variables."""
        point = [Fraction(values[v]) for v in self.variables]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, expo):
                if e:
                    v *= x**e
            total += v
        return total

    def subs_polys(self, images: dict) -> "MPoly":
        """Substitute polynomials for variables; all images must share a
        variable tuple, which becomes the result's."""
        imgs = [images[v] for v in self.variables]
        target = imgs[0].variables
        for g in imgs:
            if g.variables != target:
                raise ValueError("substitution images disagree on variables")
        result = MPoly(target)
        powers = [{0: MPoly.constant(target, 1)} for _ in imgs]
        for expo, coeff in sorted(self.terms.items()):
            term = MPoly.constant(target, coeff)
            for i, e in enumerate(expo):
                cache = powers[i]
                if e not in cache:
                    p = cache[max(cache)]
                    for _ in range(max(cache), e):
                        p = p * imgs[i]
                        cache[max(cache) + 1] = p
                term = term * cache[e]
            result = result + term
        return result

    def partial(self, name) -> "MPoly":
        """Partial derivative with respect to a named variable."""
        i = self.variables.index(name)
        terms = {}
        for expo, coeff in self.terms.items():
            if expo[i] == 0:
                continue
            down = list(expo)
            down[i] -= 1
            terms[tuple(down)] = coeff * expo[i]
        return MPoly(self.variables, terms)

    def divexact(self, divisor: "MPoly") -> "MPoly":
        """Exact division; raises ValueError if the division leaves a remainder."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        dexpo, dcoeff = divisor.leading()
        rem = {e: c for e, c in self.terms.items()}
        quo = {}
        while rem:
            expo = max(rem, key=deglex_key)
            diff = tuple(a - b for a, b in zip(expo, dexpo))
            if any(d < 0 for d in diff):
                raise ValueError("inexact polynomial division")
            q = rem[expo] / dcoeff
            quo[diff] = q
            for e2, c2 in divisor.terms.items():
                tgt = tuple(a + b for a, b in zip(diff, e2))
                s = rem.get(tgt, Fraction(0)) - q * c2
                if s:
                    rem[tgt] = s
                elif tgt in rem:
                    del rem[tgt]
        return MPoly(self.variables, quo)

    # -- rendering

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=deglex_key, reverse=True):
            coeff = self.terms[expo]
            factors = []
            for name, e in zip(self.variables, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mono = "*".join(factors)
            if not mono:
                body = format_rat(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = "%s*%s" % (format_rat(abs(coeff)), mono)
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            s += " %s %s" % (sign, body)
        return s

    def __repr__(self):
        return "MPoly(%r, %s)" % (self.variables, str(self))


# ---------------------------------------------------------------------------
# incremental fraction-free echelon


def _to_int_vector(vec):
    """Scale a {key: Fraction} vector to integers; returns (int vector, scale)."""
    denom = 1
    for c in vec.values():
        c = Fraction(c)
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    out = {}
    for k, c in vec.items():
        c = Fraction(c)
        v = c.numerator * (denom // c.denominator)
        if v:
            out[k] = v
    return out, denom


def _strip_gcd(vec):
    g = 0
    for v in vec.values():
        g = math.gcd(g, v)
        if g == 1:
            return vec
    if g > 1:
        for k in vec:
            vec[k] //= g
    return vec


class Echelon:
    """Incremental row echelon over Q, kept fraction-free over Z.

    Vectors are sparse ``{key: value}`` dicts with mutually comparable keys.
    ``insert`` reduces the vector against the stored pivot rows (pivot = the
    maximal key) by integer cross-multiplication with gcd stripping, then
    either records a new pivot row (independent) or reports the dependency.
    With ``track=True`` each insert also carries its expression in terms of
    the inserted vectors, so dependencies come out as exact kernel
    combinations.
    """

    def __init__(self, track: bool = False):
        self.pivots = {}
        self.track = track
        self._combos = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, vec):
        """Insert a vector; returns None if independent, else the dependency.

        The dependency is a {insert index: Fraction} combination c with
        sum_i c_i * v_i == 0 where v_i are the vectors as originally
        inserted and c includes the current vector's index.
        """
        index = self._count
        self._count += 1
        v, scale = _to_int_vector(vec)
        combo = {index: scale} if self.track else None
        while v:
            lead = max(v)
            row = self.pivots.get(lead)
            if row is None:
                _strip_gcd_pair(v, combo)
                if v[lead] < 0:
                    for k in v:
                        v[k] = -v[k]
                    if combo is not None:
                        for k in combo:
                            combo[k] = -combo[k]
                self.pivots[lead] = v
                if self.track:
                    self._combos[lead] = combo
                return None
            a, b = v[lead], row[lead]
            g = math.gcd(a, b)
            ca, cb = b // g, a // g
            v = _cross(v, row, ca, cb)
            if combo is not None:
                combo = _cross(combo, self._combos[lead], ca, cb)
            _strip_gcd_pair(v, combo)
        if not self.track:
            return {}
        return {i: Fraction(c) for i, c in combo.items()}

    def reduce(self, vec):
        """Reduce a vector against the pivots without inserting; returns the
        integer residue (empty dict means the vector lies in the row space)."""
        v, _ = _to_int_vector(vec)
        while v:
            lead = max(v)
            row = self.pivots.get(lead)
            if row is None:
                return v
            a, b = v[lead], row[lead]
            g = math.gcd(a, b)
            v = _cross(v, row, b // g, a // g)
            _strip_gcd_pair(v, None)
        return v


def _cross(v, row, ca, cb):
    """ca*v - cb*row over sparse integer dicts."""
    out = {k: x * ca for k, x in v.items()}
    for k, y in row.items():
        t = out.get(k, 0) - y * cb
        if t:
            out[k] = t
        elif k in out:
            del out[k]
    return out


def _strip_gcd_pair(v, combo):
    """Divide v (and its tracked combination) by their joint content."""
    if not v:
        return
    g = 0
    for x in v.values():
        g = math.gcd(g, x)
        if g == 1:
            return
    if combo is not None:
        for x in combo.values():
            g = math.gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for k in v:
            v[k] //= g
        if combo is not None:
            for k in combo:
                combo[k] //= g


def rank_of_vectors(vectors) -> int:
    """Rank of a family of sparse {key: Fraction} vectors."""
    ech = Echelon()
    for v in vectors:
        ech.insert(v)
    return ech.rank


# ---------------------------------------------------------------------------
# sparse matrices


class SparseMat:
    """Sparse matrix with entries indexed by (row, col).

    Entries are Fractions for numeric matrices or MPoly for symbolic ones;
    the two kinds are not mixed.
    """

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    @classmethod
    def from_rows(cls, rowlist):
        rows = len(rowlist)
        cols = len(rowlist[0]) if rowlist else 0
        m = cls(rows, cols)
        for i, row in enumerate(rowlist):
            if len(row) != cols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                m[i, j] = v
        return m

    @classmethod
    def identity(cls, n):
        m = cls(n, n)
        for i in range(n):
            m[i, i] = Fraction(1)
        return m

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        v = self.entries.get((i, j))
        if v is None:
            return Fraction(0)
        return v

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        if isinstance(value, MPoly):
            if value.is_zero():
                self.entries.pop((i, j), None)
            else:
                self.entries[(i, j)] = value
            return
        value = Fraction(value)
        if value == 0:
            self.entries.pop((i, j), None)
        else:
            self.entries[(i, j)] = value

    def is_zero(self) -> bool:
        return not self.entries

    def is_symbolic(self) -> bool:
        return any(isinstance(v, MPoly) for v in self.entries.values())

    def transpose(self) -> "SparseMat":
        t = SparseMat(self.cols, self.rows)
        for (i, j), v in self.entries.items():
            t.entries[(j, i)] = v
        return t

    def __mul__(self, other: "SparseMat") -> "SparseMat":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        by_row = {}
        for (i, j), v in self.entries.items():
            by_row.setdefault(i, []).append((j, v))
        by_col = {}
        for (j, k), v in other.entries.items():
            by_col.setdefault(j, {})[k] = v
        out = SparseMat(self.rows, other.cols)
        acc = {}
        for i, items in by_row.items():
            for j, v in items:
                row2 = by_col.get(j)
                if not row2:
                    continue
                for k, w in row2.items():
                    acc[(i, k)] = acc.get((i, k), 0) + v * w
        for key, v in acc.items():
            out[key] = v
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SparseMat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def row_vectors(self):
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def col_vectors(self):
        out = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def to_dense(self):
        zero = Fraction(0)
        return [
            [self.entries.get((i, j), zero) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def rank(self) -> int:
        if self.is_symbolic():
            raise ValueError("rank is defined here for numeric matrices only")
        vecs = self.row_vectors() if self.rows <= self.cols else self.col_vectors()
        return rank_of_vectors(vecs)

    def kernel_basis(self):
        """Basis of the right null space as tuples of Fractions.

        Columns are inserted left to right into a tracked echelon; every
        dependent column yields one kernel vector, normalized to a primitive
        integer vector whose first nonzero entry is positive.
        """
        if self.is_symbolic():
            raise ValueError("kernel_basis is defined here for numeric matrices only")
        ech = Echelon(track=True)
        basis = []
        for j, col in enumerate(self.col_vectors()):
            combo = ech.insert(col)
            if combo is None:
                continue
            vec = [Fraction(0)] * self.cols
            for idx, c in combo.items():
                vec[idx] = c
            basis.append(_normalize_kernel_vector(vec))
        return basis

    def det(self):
        """Exact determinant: Bareiss for numeric entries, cofactor/Bareiss
        over the polynomial ring for symbolic ones."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows == 0:
            return Fraction(1)
        if self.is_symbolic():
            return _det_mpoly(self)
        return _det_fraction(self.to_dense())

    def __repr__(self):
        return "SparseMat(%d x %d, %d nonzero)" % (
            self.rows,
            self.cols,
            len(self.entries),
        )


def _normalize_kernel_vector(vec):
    denom = 1
    for c in vec:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [c.numerator * (denom // c.denominator) for c in vec]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-x for x in ints]
            break
    return tuple(Fraction(v) for v in ints)


def _det_fraction(dense):
    """Bareiss fraction-free determinant of a dense Fraction matrix."""
    n = len(dense)
    scale = Fraction(1)
    m = []
    for row in dense:
        denom = 1
        for c in row:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        scale *= denom
        m.append([c.numerator * (denom // c.denominator) for c in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * m[n - 1][n - 1]) / scale


def _det_mpoly(mat: SparseMat) -> MPoly:
    variables = None
    for v in mat.entries.values():
        if isinstance(v, MPoly):
            variables = v.variables
            break
    dense = []
    for i in range(mat.rows):
        row = []
        for j in range(mat.cols):
            v = mat.entries.get((i, j))
            if v is None:
                row.append(MPoly(variables))
            elif isinstance(v, MPoly):
                row.append(v)
            else:
                row.append(MPoly.constant(variables, v))
        dense.append(row)
    if mat.rows <= 4:
        return _det_cofactor(dense, variables)
    return _det_bareiss_poly(dense, variables)


def _det_cofactor(dense, variables):
    """Cofactor expansion along the sparsest row."""
    n = len(dense)
    if n == 0:
        return MPoly.constant(variables, 1)
    if n == 1:
        return dense[0][0]
    best = min(range(n), key=lambda i: sum(0 if p.is_zero() else 1 for p in dense[i]))
    total = MPoly(variables)
    row = dense[best]
    for j in range(n):
        if row[j].is_zero():
            continue
        minor = [
            [dense[i][k] for k in range(n) if k != j] for i in range(n) if i != best
        ]
        sub = _det_cofactor(minor, variables)
        term = row[j] * sub
        if (best + j) % 2:
            term = -term
        total = total + term
    return total


def _det_bareiss_poly(dense, variables):
    """Bareiss elimination over the polynomial ring with exact division."""
    n = len(dense)
    m = [row[:] for row in dense]
    sign = 1
    prev = MPoly.constant(variables, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return MPoly(variables)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = MPoly(variables)
        prev = pivot
    out = m[n - 1][n - 1]
    return -out if sign < 0 else out


# module-level wrappers


def rank(m: SparseMat) -> int:
    """Exact rank over Q."""
    return m.rank()


def kernel_basis(m: SparseMat):
    """Exact basis of the right null space over Q."""
    return m.kernel_basis()


def det_symbolic(m: SparseMat):
    """Exact determinant of a (possibly symbolic) square matrix."""
    return m.det()
