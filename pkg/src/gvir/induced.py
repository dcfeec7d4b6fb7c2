"""Windowed generalized Verma modules induced from an intermediate-series top.

Fix a splitting G = G0 (+) Zb.  The top copy V'(alpha, beta, G0) sits at
b-level 0, everything of level >= 1 kills it, and the induced module is
spanned by monomials d_{u_1 - k_1 b} ... d_{u_r - k_r b} (x) v_mu with
k_j >= 1.  The irreducible quotient divides out the unique maximal proper
submodule J.

The J computation here avoids projecting intermediate results to a window.
A vector m of level i lies in J exactly when every product of raising
operators of total level i kills its level-0 image; each such product,
applied to a basis monomial and read off on the level-0 line, is one exact
scalar.  The quotient dimension at a weight is the rank of the resulting
(probe sequences) x (basis monomials) matrix.  Restricting probes and
monomials to a finite box makes that a submatrix of the true infinite
system, so windowed dimensions are monotone nondecreasing in the box radius
and bounded by the true dimension, in particular by (2i+1)!! at level i.
Probes are drawn from the extended pool {d_{y+kb} : |y| <= k*N}, which is
closed under commutators; ordered products over it span the same functional
space as nondecreasing multisets, so only multisets are enumerated.

Two exact symmetries keep the ranks affordable.  First, the retained top
support is anchored at the accessed weight (|sum u_j| <= R rather than a
box around the origin), which makes the probe matrix at (i, x) the matrix
at (i, 0) with alpha replaced by alpha + iota(x); for a free alpha that is
a field automorphism, so each level row of the dimension table is constant
and is computed once.  Second, C acts as 0 throughout, as forced by the
top module, so every matrix entry is a product of degree-one factors and
is homogeneous under deg g_i = deg alpha = 1, deg beta = 0; rescaling rows
and columns by monomials makes all minors homogeneous, hence substituting
one generator := 1 preserves the rank exactly and removes a variable
whenever the bound alpha is itself homogeneous (free, a group element, or
zero).  No coefficient ever needs division and all entries stay polynomial.
All evaluators are pure and memoized per module instance; matrices for
distinct weights are independent and could be computed concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import TriangularPart
from .groups import gadd, gneg, gzero, split
from .linalg import kernel_basis, symbolic_rank, to_poly
from .scalars import Scalar


def double_factorial_odd(i):
    """(2i+1)!! = 1*3*5*...*(2i+1)."""
    out = 1
    for j in range(i + 1):
        out *= 2 * j + 1
    return out


@dataclass(frozen=True)
class Window:
    """Truncation parameters: levels 0..L, factor box radius N, and the
    radius R of the retained top support around each accessed weight.
    Dimension tables are reported for |x| <= i*N + R at level i."""

    level_cap: int
    box_radius: int
    top_radius: int

    @staticmethod
    def make(level_cap, box_radius, top_radius=None):
        if level_cap < 0:
            raise ValueError("level cap must be >= 0")
        if box_radius < 1:
            raise ValueError("box radius must be >= 1")
        if top_radius is None:
            top_radius = box_radius + level_cap
        if top_radius < 1:
            raise ValueError("top radius must be >= 1")
        return Window(level_cap, box_radius, top_radius)


def part_membership(splitting, coords, selector):
    """Membership of d_coords in the level-graded triangular slices."""
    return TriangularPart(selector, splitting=splitting).contains_index(coords)


def _box(radius, dim):
    return itertools.product(range(-radius, radius + 1), repeat=dim)


def _multisets(pool, total):
    """Nondecreasing tuples over pool (sorted (k, y) pairs) with sum of k
    equal to total."""
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for idx in range(start, len(pool)):
            k, y = pool[idx]
            if k <= remaining:
                acc.append(pool[idx])
                rec(idx, remaining - k, acc)
                acc.pop()

    rec(0, total, [])
    return out


class InducedModule:
    """Windowed induced module with its maximal-quotient dimension engine.

    The context fixes alpha and beta (free symbols or bound); b picks the
    splitting direction.  The top copy is always the irreducible V', so a
    reducible top drops the single line at mu = -a, alpha = iota(a)."""

    def __init__(self, ctx, group, b, window):
        if group.rank < 2:
            raise ValueError("induction needs a rank >= 2 group")
        if ctx.rank != group.rank:
            raise ValueError("context and group rank disagree")
        self.ctx = ctx
        self.group = group
        self.split = split(group, b)
        self.window = window
        self.alpha = ctx.alpha
        self.beta = ctx.beta
        self.g0_rank = self.split.g0_rank()
        self._iota_b = ctx.embed(self.split.b)
        self._g0_embed = [ctx.embed(g) for g in self.split.g0_basis]
        self._one = ctx.one()
        self._iota0_memo = {}
        self._act_memo = {}
        self._lmul_memo = {}
        self._dims_memo = {}
        a = self._alpha_element_coords()
        beta_b = ctx.binding("beta")
        reducible = a is not None and beta_b.kind == "rational" and beta_b.value in (
            Fraction(0),
            Fraction(1),
        )
        self.top_excluded = gneg(a) if reducible else None
        self.top_kind = (
            "whole"
            if not reducible
            else ("quotient_by_trivial" if beta_b.value == 0 else "submodule_off_zero")
        )

    def _alpha_element_coords(self):
        """alpha = iota(a) with a in G0, in G0 coordinates; else None."""
        b = self.ctx.binding("alpha")
        if b.kind == "element":
            coords = tuple(b.value)
            if self.split.level(coords) != 0:
                return None
            return self.split.g0_coords(coords)
        if b.kind == "rational" and b.value == 0:
            return gzero(self.g0_rank)
        return None

    # -- embedded values -----------------------------------------------------

    def _iota0(self, u):
        hit = self._iota0_memo.get(u)
        if hit is None:
            hit = self.ctx.zero()
            for ui, gi in zip(u, self._g0_embed):
                if ui:
                    hit = hit + gi * ui
            self._iota0_memo[u] = hit
        return hit

    def _embed_gen(self, t, y):
        """iota of the index y + t*b (y in G0 coordinates)."""
        v = self._iota0(y)
        if t:
            v = v + self._iota_b * t
        return v

    # -- action ----------------------------------------------------------------

    def _top_act(self, y, mu):
        """d_y (y in G0) on the top line v_mu; the dropped line absorbs
        whatever lands on it."""
        nu = gadd(y, mu)
        if self.top_excluded is not None and nu == self.top_excluded:
            return {}
        coeff = self.alpha + self._iota0(mu) + self._iota0(y) * self.beta
        if coeff.is_zero():
            return {}
        return {((), nu): coeff}

    def _lmul(self, f, mono):
        """Left-multiply by the lowering operator d_{u - k b}, f = (k, u)."""
        factors, mu = mono
        if not factors or f <= factors[0]:
            return {((f,) + factors, mu): self._one}
        key = (f, factors, mu)
        hit = self._lmul_memo.get(key)
        if hit is not None:
            return hit
        f1, rest = factors[0], factors[1:]
        out = {}
        for mono2, s2 in self._lmul(f, (rest, mu)).items():
            for mono3, s3 in self._lmul(f1, mono2).items():
                _accum(out, mono3, s2 * s3)
        # [d_{u-kb}, d_{u1-k1b}] = (iota(f1 index) - iota(f index)) d_(merged)
        k, u = f
        k1, u1 = f1
        br = self._embed_gen(-k1, u1) - self._embed_gen(-k, u)
        if not br.is_zero():
            merged = (k + k1, gadd(u, u1))
            for mono2, s2 in self._lmul(merged, (rest, mu)).items():
                _accum(out, mono2, br * s2)
        self._lmul_memo[key] = out
        return out

    def _act(self, gen, mono):
        """d_{y + t b} (gen = (t, y)) applied to one basis monomial."""
        t, y = gen
        factors, mu = mono
        if not factors:
            if t > 0:
                return {}
            if t == 0:
                return self._top_act(y, mu)
            return self._lmul((-t, y), mono)
        key = (gen, mono)
        hit = self._act_memo.get(key)
        if hit is not None:
            return hit
        f1, rest = factors[0], factors[1:]
        out = {}
        for mono2, s2 in self._act(gen, (rest, mu)).items():
            for mono3, s3 in self._lmul(f1, mono2).items():
                _accum(out, mono3, s2 * s3)
        k1, u1 = f1
        br = self._embed_gen(-k1, u1) - self._embed_gen(t, y)
        if not br.is_zero():
            gen2 = (t - k1, gadd(y, u1))
            for mono2, s2 in self._act(gen2, (rest, mu)).items():
                _accum(out, mono2, br * s2)
        # the central term of the bracket is dropped: C acts as 0 here
        self._act_memo[key] = out
        return out

    def act_vec(self, gen, vec):
        out = {}
        for mono, coeff in vec.items():
            if coeff.is_zero():
                continue
            for mono2, s2 in self._act(gen, mono).items():
                _accum(out, mono2, coeff * s2)
        return out

    # -- bases -------------------------------------------------------------------

    def factor_pool(self, i, radius):
        return sorted(
            (k, u) for k in range(1, i + 1) for u in _box(radius, self.g0_rank)
        )

    def probe_pool(self, i, radius):
        """Extended raising pool: (k, y) with |y| <= k * radius."""
        return sorted(
            (k, y)
            for k in range(1, i + 1)
            for y in _box(k * radius, self.g0_rank)
        )

    def factor_multisets(self, i, radius=None):
        radius = self.window.box_radius if radius is None else radius
        if i == 0:
            return [()]
        return _multisets(self.factor_pool(i, radius), i)

    def probe_multisets(self, i, radius=None):
        radius = self.window.box_radius if radius is None else radius
        if i == 0:
            return [()]
        seqs = _multisets(self.probe_pool(i, radius), i)
        seqs.sort(key=lambda s: (len(s), s))
        return seqs

    def basis_at(self, i, x, radius=None):
        """Windowed monomials of level i and G0-weight x, in PBW order.

        The retained top support is anchored at x: the factor shift
        sum u_j stays within the top radius, so the window is translation
        equivariant."""
        R = self.window.top_radius
        out = []
        for factors in self.factor_multisets(i, radius):
            shift = gzero(self.g0_rank)
            for _, u in factors:
                shift = gadd(shift, u)
            if max(map(abs, shift), default=0) > R:
                continue
            mu = tuple(a - s for a, s in zip(x, shift))
            if mu == self.top_excluded:
                continue
            out.append((factors, mu))
        out.sort()
        return out

    def report_weights(self, i):
        reach = i * self.window.box_radius + self.window.top_radius
        return sorted(_box(reach, self.g0_rank))

    def level_basis(self, i):
        """Weight -> monomial list for one level (the report window)."""
        return {x: self.basis_at(i, x) for x in self.report_weights(i)}

    # -- quotient dimensions -------------------------------------------------------

    def _probe_rows(self, i, x, cols, radius):
        reg = self.ctx.reg
        rows = []
        for seq in self.probe_multisets(i, radius):
            shift = gzero(self.g0_rank)
            for _, y in seq:
                shift = gadd(shift, y)
            nu = gadd(x, shift)
            if nu == self.top_excluded:
                continue
            target = ((), nu)
            row = {}
            for j, mono in enumerate(cols):
                vec = {mono: self._one}
                for gen in seq:
                    vec = self.act_vec(gen, vec)
                    if not vec:
                        break
                val = vec.get(target)
                if val is not None and not val.is_zero():
                    row[j] = to_poly(reg, val)
            if row:
                rows.append(row)
        return rows

    def _dehomogenize_ok(self):
        """Whether every matrix entry is homogeneous under
        deg g_i = deg alpha = 1, deg beta = 0, so one generator may be
        set to 1 without changing any rank."""
        b = self.ctx.binding("alpha")
        return b.kind in ("free", "element") or (b.kind == "rational" and b.value == 0)

    def _rank(self, rows):
        reg = self.ctx.reg
        if self._dehomogenize_ok():
            g_last = self.ctx.rank - 1
            rows = [
                {j: p.substitute({g_last: 1}) for j, p in r.items()} for r in rows
            ]
            rows = [{j: p for j, p in r.items() if not p.is_zero()} for r in rows]
        return symbolic_rank(reg, rows)

    def dims_at(self, i, x, radius=None):
        """Quotient dimension at (level i, G0-weight x) for one box radius."""
        radius = self.window.box_radius if radius is None else radius
        x = tuple(x)
        key = (i, x, radius)
        hit = self._dims_memo.get(key)
        if hit is not None:
            return hit
        cols = self.basis_at(i, x, radius)
        if cols:
            d = self._rank(self._probe_rows(i, x, cols, radius))
        else:
            d = 0
        self._dims_memo[key] = d
        return d

    def kernel_at(self, i, x, radius=None):
        """Basis of the windowed J at one weight, as monomial combinations."""
        radius = self.window.box_radius if radius is None else radius
        x = tuple(x)
        cols = self.basis_at(i, x, radius)
        if not cols:
            return []
        rows = self._probe_rows(i, x, cols, radius)
        vectors = kernel_basis(self.ctx.reg, rows, len(cols))
        return [
            {mono: Scalar.make(p) for mono, p in zip(cols, vec) if not p.is_zero()}
            for vec in vectors
        ]

    def quotient_dims(self):
        """Dimension table at radius N plus the N+1 rerun for stability.

        With a free alpha the anchored window makes the matrix at (i, x)
        the matrix at (i, 0) composed with the automorphism
        alpha -> alpha + iota(x), so each level row is constant and one
        rank per level per radius suffices."""
        N = self.window.box_radius
        constant_rows = (
            self.ctx.binding("alpha").kind == "free" and self.top_excluded is None
        )
        entries = {}
        next_entries = {}
        origin = gzero(self.g0_rank)
        for i in range(self.window.level_cap + 1):
            if constant_rows:
                d = self.dims_at(i, origin, N)
                d_next = self.dims_at(i, origin, N + 1)
                for x in self.report_weights(i):
                    entries[(i, x)] = d
                    next_entries[(i, x)] = d_next
            else:
                for x in self.report_weights(i):
                    entries[(i, x)] = self.dims_at(i, x, N)
                    next_entries[(i, x)] = self.dims_at(i, x, N + 1)
        stable = {k: entries[k] == next_entries[k] for k in entries}
        return QuotientDims(self, self.window, entries, next_entries, stable)

    # -- public action with window flagging -------------------------------------

    def act_on_induced(self, elem, vec):
        """Action of an algebra element on a combination of monomials.

        Exact; components whose factor box or top index leave the window are
        kept but reported through the escaped flag (the caller should widen
        the window before trusting windowed ranks involving them).  C acts
        as 0.
        """
        out = {}
        for z, coeff in elem.d_terms.items():
            gen = (self.split.level(z), self.split.g0_coords(z))
            for mono, s in self.act_vec(gen, vec).items():
                _accum(out, mono, coeff * s)
        escaped = any(self._escapes(mono) for mono in out)
        return out, escaped

    def _escapes(self, mono):
        factors, mu = mono
        N, R = self.window.box_radius, self.window.top_radius
        total = 0
        shift = gzero(self.g0_rank)
        for k, u in factors:
            total += k
            shift = gadd(shift, u)
            if max(map(abs, u), default=0) > N:
                return True
        if max(map(abs, shift), default=0) > R:
            return True
        return total > self.window.level_cap

    def monomial_weight(self, mono):
        """(level, G0-coords) of a basis monomial."""
        factors, mu = mono
        lvl = sum(k for k, _ in factors)
        x = mu
        for _, u in factors:
            x = gadd(x, u)
        return lvl, x


@dataclass
class QuotientDims:
    """Windowed dimension table of the irreducible quotient.

    entries maps (level i, G0-coords x) to the rank at box radius N;
    next_entries holds the N+1 rerun at the same top radius, and stable
    flags their agreement."""

    module: InducedModule
    window: Window
    entries: dict
    next_entries: dict
    stable: dict

    def level_row(self, i):
        return {x: d for (j, x), d in self.entries.items() if j == i}

    def max_level_dim(self, i):
        row = self.level_row(i)
        return max(row.values(), default=0)

    def bound_ok(self):
        """The (2i+1)!! bound on every stable entry."""
        return all(
            d <= double_factorial_odd(key[0])
            for key, d in self.entries.items()
            if self.stable[key]
        )

    def support_check(self):
        """Classify the support against the two admissible patterns.

        pattern_A: alpha - Z+ b + G0 (generic top); pattern_B: the same set
        with the zero weight removed (reducible top, alpha in G0).  Any
        stable nonzero entry at a positive b-level, or on the removed zero
        weight, is a violation."""
        violations = []
        for (i, x), d in self.entries.items():
            if not self.stable[(i, x)] or d == 0:
                continue
            if i < 0:
                violations.append({"level": i, "coords": list(x), "dim": d})
        excluded = self.module.top_excluded
        pattern = "pattern_A"
        if excluded is not None:
            pattern = "pattern_B"
            d0 = self.entries.get((0, excluded))
            if d0:
                violations.append(
                    {"level": 0, "coords": list(excluded), "dim": d0}
                )
        if violations:
            return {"verdict": "violation", "violations": violations}
        return {"verdict": pattern, "violations": []}

    def string_boundedness(self, g):
        """Behavior of the weight strings along a direction g of G.

        g inside G0 meets every level in a uniformly bounded band: bounded.
        Any direction with a b-component walks out of the level range on the
        positive side: truncated_above.  mixed signals no stable evidence.
        """
        g = self.module.group.validate(g)
        t = self.module.split.level(g)
        if not any(self.stable.values()):
            return "mixed"
        if t == 0:
            ok = all(
                d <= double_factorial_odd(i)
                for (i, x), d in self.entries.items()
                if self.stable[(i, x)]
            )
            return "bounded" if ok else "mixed"
        return "truncated_above"

    def to_rows(self):
        """Sorted (level, coords, dim, stable) tuples for serialization."""
        out = []
        for (i, x) in sorted(self.entries):
            out.append((i, x, self.entries[(i, x)], self.stable[(i, x)]))
        return out

    def to_json(self):
        w = self.window
        sc = self.support_check()
        return {
            "level_cap": w.level_cap,
            "box_radius": w.box_radius,
            "top_radius": w.top_radius,
            "top_kind": self.module.top_kind,
            "splitting_b": list(self.module.split.b),
            "g0_basis": [list(g) for g in self.module.split.g0_basis],
            "support_check": sc,
            "stable_count": sum(1 for v in self.stable.values() if v),
            "entry_count": len(self.entries),
            "max_dim_per_level": {
                str(i): self.max_level_dim(i) for i in range(w.level_cap + 1)
            },
            "rows": [
                {"level": i, "coords": list(x), "dim": d, "stable": s}
                for i, x, d, s in self.to_rows()
            ],
        }


def _accum(out, key, coeff):
    prev = out.get(key)
    s = coeff if prev is None else prev + coeff
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s
