"""Cross-checks between the fraction-free echelon and the dense field engine."""

import itertools
import random
from fractions import Fraction

from gvir.linalg import (
    Echelon,
    det,
    field_rank,
    field_rref,
    kernel_basis,
    rank_of,
    row_from_list,
    strip_row,
    to_poly,
)
from gvir.scalars import Context, Poly


def _ctx():
    return Context.of_rank(2)


def _rand_poly(ctx, rng, maxdeg=1, maxc=4):
    reg = ctx.reg
    p = Poly.zero(reg)
    for _ in range(rng.randint(0, 2)):
        e = [0] * len(reg)
        for _ in range(rng.randint(0, maxdeg)):
            e[rng.randint(0, 1)] += 1
        p = p + Poly.monomial(reg, tuple(e), rng.randint(-maxc, maxc))
    return p


def _perm_det(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += sign * term
    return total


def test_rank_matches_field_oracle_int():
    ctx = _ctx()
    rng = random.Random(31415)
    for _ in range(200):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        dense = [[rng.choice([0, 0, 1, -1, rng.randint(-5, 5)]) for _ in range(n)] for _ in range(m)]
        rows = [row_from_list(ctx.reg, r) for r in dense]
        assert rank_of(rows, n) == field_rank(ctx.reg, rows, n)


def test_rank_matches_field_oracle_poly():
    ctx = _ctx()
    rng = random.Random(999)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = []
        for _ in range(m):
            row = {}
            for j in range(n):
                p = _rand_poly(ctx, rng)
                if not p.is_zero():
                    row[j] = p
            rows.append(row)
        assert rank_of(rows, n) == field_rank(ctx.reg, rows, n)


def test_rank_with_forced_dependencies():
    ctx = _ctx()
    rng = random.Random(2718)
    for _ in range(100):
        n = rng.randint(2, 5)
        base = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(2)]
        # every extra row is an integer combination of the two base rows
        combos = [
            [a * base[0][j] + b * base[1][j] for j in range(n)]
            for a, b in [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(3)]
        ]
        rows = [row_from_list(ctx.reg, r) for r in base + combos]
        rng.shuffle(rows)
        assert rank_of(rows, n) <= 2
        assert rank_of(rows, n) == field_rank(ctx.reg, rows, n)


def test_echelon_rows_stay_mutually_reduced():
    ctx = _ctx()
    rng = random.Random(404)
    for _ in range(40):
        m, n = rng.randint(2, 6), rng.randint(2, 6)
        ech = Echelon(n)
        for _ in range(m):
            ech.add_row(row_from_list(ctx.reg, [rng.randint(-3, 3) for _ in range(n)]))
        for pc, _row in ech.rows:
            for pc2, row2 in ech.rows:
                if pc2 != pc:
                    assert pc not in row2


def test_kernel_vectors_annihilate():
    ctx = _ctx()
    rng = random.Random(161803)
    for _ in range(80):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        rows = []
        for _ in range(m):
            row = {}
            for j in range(n):
                p = _rand_poly(ctx, rng)
                if not p.is_zero():
                    row[j] = p
            rows.append(row)
        rank = field_rank(ctx.reg, rows, n)
        kern = kernel_basis(ctx.reg, rows, n)
        assert rank + len(kern) == n
        for vec in kern:
            assert any(not p.is_zero() for p in vec)
            for row in rows:
                acc = Poly.zero(ctx.reg)
                for j, p in row.items():
                    acc = acc + p * vec[j]
                assert acc.is_zero()
        # kernel vectors are primitive: no common polynomial or rational factor
        for vec in kern:
            nz = [p for p in vec if not p.is_zero()]
            from gvir.scalars import _gcd_many

            assert _gcd_many(nz).is_const()


def test_det_matches_permutation_oracle():
    ctx = _ctx()
    rng = random.Random(555)
    for _ in range(120):
        n = rng.randint(1, 4)
        dense = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        d = det(ctx.reg, dense)
        assert d.is_const() or d.is_zero()
        got = Fraction(d.const_value()) if not d.is_zero() else Fraction(0)
        assert got == _perm_det(dense)


def test_det_symbolic_vandermonde():
    ctx = Context.of_rank(3)
    g = [Poly.symbol(ctx.reg, n) for n in ctx.gen_names]
    one = Poly.const(ctx.reg, 1)
    rows = [[one, gi, gi * gi] for gi in g]
    d = det(ctx.reg, rows)
    expect = (g[1] - g[0]) * (g[2] - g[0]) * (g[2] - g[1])
    assert d == expect


def test_det_singular_and_empty():
    ctx = _ctx()
    g1 = Poly.symbol(ctx.reg, "g1")
    rows = [[g1, g1], [g1, g1]]
    assert det(ctx.reg, rows).is_zero()
    assert det(ctx.reg, []).is_const()


def test_strip_row_removes_common_factor():
    ctx = _ctx()
    g1 = Poly.symbol(ctx.reg, "g1")
    g2 = Poly.symbol(ctx.reg, "g2")
    two = Poly.const(ctx.reg, 2)
    row = {0: two * g1 * g2, 2: two * g1 * (g1 + g2)}
    out = strip_row(row)
    assert out[0] == g2 and out[2] == g1 + g2
    # a lone entry is its own gcd, so it normalizes to 1
    row = {1: -(two * g1)}
    out = strip_row(row)
    assert out[1].is_const() and out[1].const_value() == 1
    # sign normalization: leading entry ends up with a positive lead
    row = {0: -(two * g1), 1: two * g2}
    out = strip_row(row)
    assert out[0] == g1 and out[1] == -g2
    assert strip_row({}) == {}


def test_field_rref_shape():
    ctx = _ctx()
    rows = [row_from_list(ctx.reg, r) for r in [[1, 2, 3], [2, 4, 6], [0, 1, 1]]]
    rank, pivots, rref = field_rref(ctx.reg, rows, 3)
    assert rank == 2 and pivots == [0, 1]
    # pivot columns are unit columns
    for i, pc in enumerate(pivots):
        assert rref[i][pc].is_one()
        for k in range(rank):
            if k != i:
                assert rref[k][pc].is_zero()


def test_to_poly_rejects_denominator():
    import pytest

    ctx = _ctx()
    s = ctx.symbol("g1") / ctx.symbol("g2")
    with pytest.raises(ValueError):
        to_poly(ctx.reg, s)
    assert to_poly(ctx.reg, ctx.symbol("g1")) == Poly.symbol(ctx.reg, "g1")
