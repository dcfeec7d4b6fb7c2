"""Splitting and integer-lattice tests: unimodularity, round trips, orders."""

import random

from gvir.groups import (
    Group,
    GroupOrder,
    SplitError,
    element_gcd,
    gadd,
    gneg,
    gscale,
    gsub,
    hermite_basis,
    int_det,
    is_primitive,
    split,
    unimodular_completion,
)


def _matmul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [
        tuple(sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p))
        for i in range(n)
    ]


def _identity(n):
    return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]


def test_element_arithmetic():
    x, y = (1, -2, 3), (0, 5, -1)
    assert gadd(x, y) == (1, 3, 2)
    assert gsub(x, y) == (1, -7, 4)
    assert gneg(x) == (-1, 2, -3)
    assert gscale(3, x) == (3, -6, 9)
    assert element_gcd((4, -6, 10)) == 2
    assert is_primitive((2, 3)) and not is_primitive((2, 4))


def test_int_det_small():
    assert int_det([[2, 1], [1, 1]]) == 1
    assert int_det([[2, 4], [1, 2]]) == 0
    assert int_det([[0, 1, 0], [0, 0, 1], [1, 0, 0]]) == 1


def test_unimodular_completion_properties():
    rng = random.Random(20240305)
    for _ in range(300):
        n = rng.randint(1, 4)
        while True:
            b = tuple(rng.randint(-6, 6) for _ in range(n))
            if any(b) and is_primitive(b):
                break
        U, V = unimodular_completion(b)
        # U @ b = e1
        img = tuple(sum(a * v for a, v in zip(row, b)) for row in U)
        assert img == (1,) + (0,) * (n - 1)
        # V is the two-sided inverse and both are unimodular
        assert _matmul(U, V) == _identity(n)
        assert _matmul(V, U) == _identity(n)
        assert int_det(U) in (1, -1)
        # first column of V is b itself
        assert tuple(V[r][0] for r in range(n)) == b


def test_unimodular_completion_rejects_bad_b():
    import pytest

    with pytest.raises(SplitError):
        unimodular_completion((0, 0))
    with pytest.raises(SplitError):
        unimodular_completion((2, 4))


def test_split_round_trip():
    rng = random.Random(77)
    for _ in range(200):
        n = rng.randint(2, 4)
        G = Group.of_rank(n)
        while True:
            b = tuple(rng.randint(-5, 5) for _ in range(n))
            if any(b) and is_primitive(b):
                break
        sp = split(G, b)
        assert sp.g0_rank() == n - 1
        # decomposition and reassembly agree on arbitrary x
        x = tuple(rng.randint(-9, 9) for _ in range(n))
        k, u = sp.level(x), sp.g0_coords(x)
        assert sp.compose(k, u) == x
        # coordinates are additive
        y = tuple(rng.randint(-9, 9) for _ in range(n))
        assert sp.level(gadd(x, y)) == sp.level(x) + sp.level(y)
        assert sp.g0_coords(gadd(x, y)) == tuple(
            a + c for a, c in zip(sp.g0_coords(x), sp.g0_coords(y))
        )
        # b sits at level 1 with no G0 part; G0 basis sits at level 0
        assert sp.level(b) == 1 and not any(sp.g0_coords(b))
        for g in sp.g0_basis:
            assert sp.level(g) == 0
        # basis (b, g0...) really spans: det +-1
        cols = [b] + list(sp.g0_basis)
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        assert int_det(mat) in (1, -1)


def test_split_rank_one():
    G = Group.of_rank(1)
    sp = split(G, (1,))
    assert sp.g0_basis == ()
    assert sp.level((5,)) == 5
    sp = split(G, (-1,))
    assert sp.level((5,)) == -5


def test_hermite_basis():
    # generators (2,0) and (3,0) give the subgroup Z*(1,0)
    assert hermite_basis([(2, 0), (3, 0)], 2) == ((1, 0),)
    # full lattice from a unimodular pair
    basis = hermite_basis([(2, 1), (1, 1)], 2)
    mat = [list(r) for r in basis]
    assert len(basis) == 2 and int_det(mat) in (1, -1)
    # (2,0),(0,2),(2,2) generate 2Z x 2Z, an index-4 sublattice
    basis = hermite_basis([(2, 0), (0, 2), (2, 2)], 2)
    mat = [list(r) for r in basis]
    assert abs(int_det(mat)) == 4
    assert hermite_basis([], 3) == ()
    assert hermite_basis([(0, 0)], 2) == ()


def test_hermite_membership_random():
    rng = random.Random(991)
    for _ in range(100):
        n = rng.randint(1, 3)
        vecs = [tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        basis = hermite_basis(vecs, n)
        # random integer combinations of the input lie in the basis span
        coeffs = [rng.randint(-3, 3) for _ in vecs]
        x = tuple(sum(c * v[i] for c, v in zip(coeffs, vecs)) for i in range(n))
        # reduce x by the (triangular) basis rows
        r = list(x)
        for row in basis:
            lead = next(i for i in range(n) if row[i])
            if r[lead] % row[lead] == 0:
                q = r[lead] // row[lead]
                for i in range(n):
                    r[i] -= q * row[i]
        assert not any(r), (vecs, basis, x)


def test_group_order_default_colex():
    o = GroupOrder(2)
    # last coordinate dominates: g1=(1,0) < g2=(0,1)
    assert o.compare((1, 0), (0, 1)) < 0
    assert o.is_positive((1, 0)) and o.is_positive((0, 1))
    assert not o.is_positive((0, 0))
    assert o.is_positive((-3, 1))
    assert not o.is_positive((3, -1))
    # translation invariance
    rng = random.Random(5)
    for _ in range(100):
        x = tuple(rng.randint(-5, 5) for _ in range(2))
        y = tuple(rng.randint(-5, 5) for _ in range(2))
        z = tuple(rng.randint(-5, 5) for _ in range(2))
        assert o.compare(x, y) == o.compare(gadd(x, z), gadd(y, z))


def test_group_order_custom_weights():
    import pytest

    o = GroupOrder(2, weights=[[1, 0], [0, 1]])
    assert o.compare((1, 0), (0, 1)) > 0  # plain lex now
    with pytest.raises(ValueError):
        GroupOrder(2, weights=[[1, 1], [2, 2]])


def test_group_validate():
    import pytest

    G = Group.of_rank(2)
    assert G.validate([1, 2]) == (1, 2)
    with pytest.raises(ValueError):
        G.validate((1, 2, 3))
