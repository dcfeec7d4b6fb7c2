"""The generalized Virasoro algebra on a finitely generated group G.

Basis {C} u {d_x : x in G} with
    [d_x, d_y] = (y - x) d_{x+y} + delta_{x,-y} (x^3 - x)/12 C,
where x, y inside coefficients mean the embedded complex values.  C is
central.  Elements are finite linear combinations with exact Scalar
coefficients; everything here is immutable and side-effect free, so
independent brackets can be evaluated concurrently.
"""

from __future__ import annotations

from fractions import Fraction

from .groups import GroupOrder, gadd, is_zero
from .scalars import Scalar


class AlgebraElement:
    """A finite combination sum a_x d_x + a_c C with Scalar coefficients."""

    __slots__ = ("ctx", "group", "d_terms", "c_coeff")

    def __init__(self, ctx, group, d_terms=None, c_coeff=None):
        self.ctx = ctx
        self.group = group
        terms = {}
        for x, s in (d_terms or {}).items():
            x = group.validate(x)
            s = ctx.scalar(s)
            if not s.is_zero():
                terms[x] = s
        self.d_terms = terms
        self.c_coeff = ctx.scalar(c_coeff) if c_coeff is not None else ctx.zero()

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ctx, group):
        return AlgebraElement(ctx, group)

    @staticmethod
    def d(ctx, group, coords, coeff=1):
        return AlgebraElement(ctx, group, {tuple(coords): ctx.scalar(coeff)})

    @staticmethod
    def central(ctx, group, coeff=1):
        return AlgebraElement(ctx, group, None, ctx.scalar(coeff))

    # -- vector space ------------------------------------------------------

    def is_zero(self):
        return not self.d_terms and self.c_coeff.is_zero()

    def __add__(self, other):
        terms = dict(self.d_terms)
        for x, s in other.d_terms.items():
            terms[x] = terms[x] + s if x in terms else s
        return AlgebraElement(self.ctx, self.group, terms, self.c_coeff + other.c_coeff)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = self.ctx.scalar(s)
        return AlgebraElement(
            self.ctx,
            self.group,
            {x: v * s for x, v in self.d_terms.items()},
            self.c_coeff * s,
        )

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.d_terms == other.d_terms and self.c_coeff == other.c_coeff

    def __hash__(self):
        return hash((frozenset(self.d_terms.items()), self.c_coeff))

    # -- Lie structure -----------------------------------------------------

    def bracket(self, other):
        """[self, other]; the center brackets to zero with everything."""
        ctx = self.ctx
        out = {}
        cc = ctx.zero()
        for x, a in self.d_terms.items():
            ex = ctx.embed(x)
            for y, b in other.d_terms.items():
                coeff = a * b
                z = gadd(x, y)
                factor = ctx.embed(y) - ex
                if not factor.is_zero():
                    prev = out.get(z)
                    v = coeff * factor
                    out[z] = prev + v if prev is not None else v
                if is_zero(z):
                    cc = cc + coeff * ((ex**3 - ex) / 12)
        return AlgebraElement(ctx, self.group, out, cc)

    def weight_of(self):
        """Common ad(d_0)-weight, or the string "mixed".

        d_x has weight x and C has weight 0, so a combination is homogeneous
        exactly when all d-indices agree (and equal 0 if C also appears).
        """
        zero = self.group.zero()
        if not self.d_terms:
            return zero
        ws = set(self.d_terms)
        if len(ws) > 1:
            return "mixed"
        (w,) = ws
        if not self.c_coeff.is_zero() and w != zero:
            return "mixed"
        return w

    # -- rendering ---------------------------------------------------------

    def render(self):
        if self.is_zero():
            return "0"
        order = GroupOrder(self.group.rank)
        parts = []
        for x in sorted(self.d_terms, key=order.key):
            parts.append(_coeff_prefix(self.d_terms[x]) + render_d(x))
        if not self.c_coeff.is_zero():
            parts.append(_coeff_prefix(self.c_coeff) + "C")
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self.render()}>"


def render_d(coords):
    return "d[" + ",".join(str(a) for a in coords) + "]"


def _coeff_prefix(s):
    if s.is_one():
        return ""
    if s == -1:
        return "-"
    txt = str(s)
    if s.is_rational() and Fraction(s.rational_value()).denominator == 1:
        return f"{txt}*"
    return f"({txt})*"


def bracket(a, b):
    return a.bracket(b)


def weight_of(a):
    return a.weight_of()


# -- triangular decompositions ------------------------------------------------


class TriangularPart:
    """Membership test for one triangular slice of the algebra.

    selector "plus" / "minus": d_x with x strictly positive / negative in a
    total order compatible with addition (no center).
    selector "plus_level": all of level >= 0 with respect to a splitting
    G = G0 (+) Zb, together with the center.
    selector "strict_plus_level": level >= 1 only, center excluded.
    """

    SELECTORS = ("plus", "minus", "plus_level", "strict_plus_level")

    def __init__(self, selector, order=None, splitting=None):
        if selector not in self.SELECTORS:
            raise ValueError(f"unknown selector {selector!r}")
        if selector in ("plus", "minus") and order is None:
            raise ValueError(f"selector {selector!r} needs a total order")
        if selector.endswith("level") and splitting is None:
            raise ValueError(f"selector {selector!r} needs a splitting")
        self.selector = selector
        self.order = order
        self.splitting = splitting

    def contains_index(self, coords):
        """Does d_coords lie in this part?"""
        if self.selector == "plus":
            return self.order.is_positive(coords)
        if self.selector == "minus":
            return self.order.is_positive(tuple(-a for a in coords))
        lvl = self.splitting.level(coords)
        if self.selector == "plus_level":
            return lvl >= 0
        return lvl >= 1

    def allows_center(self):
        return self.selector == "plus_level"

    def contains(self, elem):
        if not elem.c_coeff.is_zero() and not self.allows_center():
            return False
        return all(self.contains_index(x) for x in elem.d_terms)


# -- PBW normal form -----------------------------------------------------------


def pbw_normalize(ctx, group, word, order=None):
    """Straighten a product of d_x / C symbols into the sorted PBW basis.

    word items are group-element coordinate tuples (meaning d_x) or the
    string "C".  Returns {(factors, c_power): Scalar} where factors is a
    nondecreasing tuple under the total order.  Repeatedly swapping the first
    descent terminates: a swap lowers the inversion count at fixed length and
    the commutator terms are strictly shorter.
    """
    order = order or GroupOrder(group.rank)
    base = []
    c_power = 0
    for item in word:
        if item == "C":
            c_power += 1
        else:
            base.append(group.validate(item))
    out = {}

    def emit(factors, cp, coeff):
        key = (factors, cp)
        prev = out.get(key)
        s = prev + coeff if prev is not None else coeff
        if s.is_zero():
            out.pop(key, None)
        else:
            out[key] = s

    stack = [(tuple(base), c_power, ctx.one())]
    while stack:
        w, cp, coeff = stack.pop()
        i = next(
            (k for k in range(len(w) - 1) if order.compare(w[k], w[k + 1]) > 0), None
        )
        if i is None:
            emit(w, cp, coeff)
            continue
        x, y = w[i], w[i + 1]
        stack.append((w[:i] + (y, x) + w[i + 2 :], cp, coeff))
        # d_x d_y = d_y d_x + (y-x) d_{x+y} + delta_{x,-y} (x^3-x)/12 C
        factor = ctx.embed(y) - ctx.embed(x)
        if not factor.is_zero():
            stack.append((w[:i] + (gadd(x, y),) + w[i + 2 :], cp, coeff * factor))
        if is_zero(gadd(x, y)):
            ex = ctx.embed(x)
            central = (ex**3 - ex) / 12
            if not central.is_zero():
                stack.append((w[:i] + w[i + 2 :], cp + 1, coeff * central))
    return out


def render_pbw(terms, order=None):
    """Deterministic text form of a PBW combination."""
    if not terms:
        return "0"
    okey = order.key if order is not None else (lambda x: tuple(reversed(x)))
    keys = sorted(terms, key=lambda k: (len(k[0]), [okey(x) for x in k[0]], k[1]))
    parts = []
    for factors, cp in keys:
        bits = [render_d(x) for x in factors] + ["C"] * cp
        if bits:
            parts.append(_coeff_prefix(terms[(factors, cp)]) + "*".join(bits))
        else:
            parts.append(str(terms[(factors, cp)]))
    return " + ".join(parts)
