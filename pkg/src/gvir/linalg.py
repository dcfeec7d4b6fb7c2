"""Exact linear algebra over polynomial entries.

Two engines on purpose.  The workhorse is an incremental fraction-free
Gauss-Jordan echelon (`Echelon`) that keeps every entry a Poly with integer
or rational coefficients and never divides, so ranks of large sparse systems
stay exact and reasonably fast.  The cross-check is a dense textbook Gaussian
elimination over the rational-function field (`field_rref`), slower but
independent; kernels and the Bareiss determinant sit on top.

Rows are sparse dicts {column index -> Poly}, zero entries absent.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import Poly, Scalar, _gcd_many


def _rational_content(polys):
    """Positive gcd over Q of all coefficients appearing in the polys."""
    cont = Fraction(0)
    for p in polys:
        if p.is_zero():
            continue
        c = p.content()
        cont = Fraction(
            math.gcd(cont.numerator, c.numerator),
            (cont.denominator * c.denominator) // math.gcd(cont.denominator, c.denominator),
        )
    return cont


def to_poly(reg, v):
    """Coerce an int, Fraction, Poly, or denominator-free Scalar to Poly."""
    if isinstance(v, Poly):
        return v
    if isinstance(v, Scalar):
        if not v._den_is_one():
            raise ValueError("entry has a nontrivial denominator; clear it first")
        return v.num
    return Poly.const(reg, v)


def row_from_list(reg, entries):
    """Sparse row dict from a dense list of entries."""
    row = {}
    for j, v in enumerate(entries):
        p = to_poly(reg, v)
        if not p.is_zero():
            row[j] = p
    return row


# full-content stripping is worth it only while rows are small
_FULL_STRIP_TERMS = 80


def strip_row(row):
    """Divide a row by its content: rational and monomial always, full
    polynomial gcd while the row is small enough to make it cheap."""
    if not row:
        return row
    polys = list(row.values())
    nterms = sum(len(p.terms) for p in polys)
    if nterms <= _FULL_STRIP_TERMS:
        g = _gcd_many(polys)
        if not g.is_const():
            row = {j: p.exact_div(g) for j, p in row.items()}
            polys = list(row.values())
    else:
        m = polys[0].monomial_gcd()
        for p in polys[1:]:
            if not any(m):
                break
            pm = p.monomial_gcd()
            m = tuple(min(a, b) for a, b in zip(m, pm))
        if any(m):
            row = {j: p.shift_down(m) for j, p in row.items()}
            polys = list(row.values())
    cont = _rational_content(polys)
    lead_col = min(row)
    _, lc = row[lead_col].lead()
    if lc < 0:
        cont = -cont
    if cont != 1:
        row = {j: p.scale(Fraction(1) / cont) for j, p in row.items()}
    return row


class Echelon:
    """Incremental fraction-free Gauss-Jordan echelon form.

    Feed rows one at a time; the structure keeps a mutually reduced pivot set
    (each stored row is zero on every other row's pivot column), so reducing
    a fresh row is a single pass.  Pivot columns are chosen to minimize the
    term count of the pivot entry, which keeps cross-multiplications small.
    """

    def __init__(self, ncols=None):
        self.ncols = ncols
        self.rows = []  # list of [pivot_col, row]
        self.pivot_cols = set()

    @property
    def rank(self):
        return len(self.rows)

    def is_full(self):
        return self.ncols is not None and self.rank >= self.ncols

    def residual(self, row):
        """Fraction-free reduction of a row against the current pivot set."""
        r = dict(row)
        for pc, prow in self.rows:
            coef = r.get(pc)
            if coef is None:
                continue
            piv = prow[pc]
            new = {}
            for j, v in r.items():
                if j == pc:
                    continue
                t = v * piv
                u = prow.get(j)
                if u is not None:
                    t = t - u * coef
                if not t.is_zero():
                    new[j] = t
            for j, u in prow.items():
                if j != pc and j not in r:
                    t = -(u * coef)
                    if not t.is_zero():
                        new[j] = t
            r = new
        return strip_row(r)

    def add_row(self, row):
        """Reduce and insert a row; returns True iff the rank grew."""
        r = self.residual(row)
        if not r:
            return False
        pc = min(r, key=lambda j: (len(r[j].terms), j))
        piv = r[pc]
        for entry in self.rows:
            orow = entry[1]
            coef = orow.get(pc)
            if coef is None:
                continue
            new = {}
            for j, v in orow.items():
                if j == pc:
                    continue
                t = v * piv
                u = r.get(j)
                if u is not None:
                    t = t - u * coef
                if not t.is_zero():
                    new[j] = t
            for j, u in r.items():
                if j != pc and j not in orow:
                    t = -(u * coef)
                    if not t.is_zero():
                        new[j] = t
            entry[1] = strip_row(new)
        self.rows.append([pc, r])
        self.pivot_cols.add(pc)
        return True


def rank_of(rows, ncols=None):
    """Rank of a sparse row list, stopping early at full column rank."""
    ech = Echelon(ncols)
    for row in rows:
        ech.add_row(row)
        if ech.is_full():
            break
    return ech.rank


def symbolic_rank(reg, rows):
    """Exact rank of a sparse polynomial matrix over the fraction field.

    Fraction-free elimination with per-row delayed divisors.  After a pivot
    step every updated entry is a bordered minor of the (content-stripped)
    input; a row with zero multiplier is skipped entirely and keeps its old
    divisor, and its next update divides by that divisor instead — exact by
    Sylvester's determinant identity.  Entry growth is therefore bounded by
    minor size, not by accumulated pivot products, which is what makes deep
    symbolic eliminations feasible.  Pivots minimize term count.
    """
    work = []
    for row in rows:
        r = strip_row({j: p for j, p in row.items() if not p.is_zero()})
        if r:
            work.append(r)
    divisors = [None] * len(work)  # None stands for 1
    act = list(range(len(work)))
    rank = 0
    while act:
        best = None
        for ri in act:
            for j, p in work[ri].items():
                k = len(p.terms)
                if best is None or k < best[0]:
                    best = (k, ri, j)
        if best is None:
            break
        _, pr, pc = best
        prow = work[pr]
        piv = prow[pc]
        act.remove(pr)
        rank += 1
        for ri in act:
            r = work[ri]
            c = r.get(pc)
            if c is None:
                continue
            d = divisors[ri]
            new = {}
            for j, v in r.items():
                if j == pc:
                    continue
                t = v * piv
                u = prow.get(j)
                if u is not None:
                    t = t - u * c
                if d is not None and not t.is_zero():
                    t = t.exact_div(d)
                if not t.is_zero():
                    new[j] = t
            for j, u in prow.items():
                if j != pc and j not in r:
                    t = u * c
                    if d is not None:
                        t = t.exact_div(d)
                    if not t.is_zero():
                        new[j] = -t
            work[ri] = new
            divisors[ri] = piv
        act = [ri for ri in act if work[ri]]
    return rank


# -- dense field-division engine (independent cross-check) --------------------


def _to_scalar_rows(reg, rows, ncols):
    out = []
    for row in rows:
        if isinstance(row, dict):
            dense = [Scalar.make(Poly.zero(reg)) for _ in range(ncols)]
            for j, v in row.items():
                dense[j] = Scalar.make(to_poly(reg, v))
        else:
            dense = [
                v if isinstance(v, Scalar) else Scalar.make(to_poly(reg, v)) for v in row
            ]
            dense += [Scalar.make(Poly.zero(reg))] * (ncols - len(dense))
        out.append(dense)
    return out


def field_rref(reg, rows, ncols):
    """Reduced row echelon form over the fraction field.

    Returns (rank, pivot column list, rref rows as dense Scalar lists).
    Plain leftmost-pivot Gaussian elimination with division.
    """
    mat = _to_scalar_rows(reg, rows, ncols)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero()), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return r, pivots, mat[:r]


def field_rank(reg, rows, ncols):
    return field_rref(reg, rows, ncols)[0]


def clear_denominators(reg, vec):
    """Scale a Scalar vector to a primitive Poly vector (common content 1)."""
    den = Poly.const(reg, 1)
    for s in vec:
        if s.is_zero():
            continue
        g = _gcd_many([den, s.den])
        den = den * s.den.exact_div(g)
    polys = []
    for s in vec:
        if s.is_zero():
            polys.append(Poly.zero(reg))
        else:
            polys.append(s.num * den.exact_div(s.den))
    g = _gcd_many([p for p in polys if not p.is_zero()])
    if not g.is_const():
        polys = [p if p.is_zero() else p.exact_div(g) for p in polys]
    cont = _rational_content(polys)
    first = next((p for p in polys if not p.is_zero()), None)
    if first is not None:
        _, lc = first.lead()
        if lc < 0:
            cont = -cont
        if cont != 1:
            polys = [p.scale(Fraction(1) / cont) for p in polys]
    return tuple(polys)


def kernel_basis(reg, rows, ncols):
    """Basis of the right kernel over the fraction field.

    Returns primitive Poly vectors (denominators cleared), one per free
    column, in column order.
    """
    rank, pivots, rref = field_rref(reg, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    one = Scalar.make(Poly.const(reg, 1))
    zero = Scalar.make(Poly.zero(reg))
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for i, pc in enumerate(pivots):
            vec[pc] = -rref[i][f]
        out.append(clear_denominators(reg, vec))
    return out


def det(reg, rows):
    """Determinant of a square matrix by fraction-free Bareiss elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return Poly.const(reg, 1)
    m = [[to_poly(reg, v) for v in row] for row in rows]
    sign = 1
    prev = Poly.const(reg, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            piv = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if piv is None:
                return Poly.zero(reg)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = Poly.zero(reg)
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d
