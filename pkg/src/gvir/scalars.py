"""Exact coefficient arithmetic for the whole package.

Everything downstream computes over the field Q(g1,...,gn, alpha, beta, c, h):
sparse multivariate polynomials over Q together with their fraction field.
Group generators stay formal indeterminates, which makes them Q-linearly
independent by construction; alpha, beta, c and h may each be bound to a
value (a rational, or for alpha the embedded value of a group element) when a
Context is created.

A Scalar is always stored in canonical form -- num/den with gcd(num, den) = 1
and den monic under the graded-lex term order -- so structural equality
decides mathematical equality and is_zero is exact.  No floating point
anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction


class ScalarError(ArithmeticError):
    """Base class for exact-arithmetic failures."""


class ScalarDivisionError(ScalarError, ZeroDivisionError):
    """Division or inversion by an exact zero."""


class SpecializationError(ScalarError):
    """A substitution made a denominator vanish."""


class ExactDivisionError(ScalarError):
    """Polynomial division that was expected to be exact left a remainder."""


class ParseError(ValueError):
    """Malformed polynomial/scalar text."""


def _grlex(e):
    # graded lex key: total degree first, then exponent vector, first slot strongest
    return (sum(e), e)


def _norm_coeff(q):
    # keep integer coefficients as ints (fast path); Fractions only when needed
    if type(q) is Fraction and q.denominator == 1:
        return int(q)
    return q


class Registry:
    """Fixed ordered list of indeterminate names for one session."""

    __slots__ = ("names", "index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate symbol names in registry")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Registry) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Registry{self.names!r}"


class Poly:
    """Sparse multivariate polynomial over Q.

    terms maps exponent tuples (one slot per registry symbol) to nonzero
    int/Fraction coefficients.  Instances are immutable by convention.
    """

    __slots__ = ("reg", "terms", "_hash")

    def __init__(self, reg, terms):
        self.reg = reg
        self.terms = terms
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(reg):
        return Poly(reg, {})

    @staticmethod
    def const(reg, q):
        if isinstance(q, float):
            raise TypeError("floating point is not allowed; use Fraction")
        q = _norm_coeff(q if isinstance(q, (int, Fraction)) else Fraction(q))
        if q == 0:
            return Poly(reg, {})
        return Poly(reg, {(0,) * len(reg): q})

    @staticmethod
    def symbol(reg, name):
        i = reg.index.get(name)
        if i is None:
            raise KeyError(f"unknown symbol {name!r}; registry has {reg.names}")
        e = [0] * len(reg)
        e[i] = 1
        return Poly(reg, {tuple(e): 1})

    @staticmethod
    def monomial(reg, exps, coeff=1):
        coeff = _norm_coeff(coeff)
        if coeff == 0:
            return Poly(reg, {})
        return Poly(reg, {tuple(exps): coeff})

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def const_value(self):
        if not self.terms:
            return Fraction(0)
        ((e, c),) = self.terms.items()
        if any(e):
            raise ValueError("not a constant polynomial")
        return Fraction(c)

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            for i, p in enumerate(e):
                if p:
                    used.add(i)
        return used

    def lead(self):
        """(monomial, coefficient) of the graded-lex leading term."""
        m = max(self.terms, key=_grlex)
        return m, self.terms[m]

    # -- ring operations ----------------------------------------------

    def _check(self, other):
        if self.reg is not other.reg and self.reg != other.reg:
            raise ValueError("polynomials from different registries")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm_coeff(s)
            else:
                out.pop(e, None)
        return Poly(self.reg, out)

    def __neg__(self):
        return Poly(self.reg, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = _norm_coeff(s)
            else:
                out.pop(e, None)
        return Poly(self.reg, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(map(int.__add__, e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        for e in list(out):
            out[e] = _norm_coeff(out[e])
        return Poly(self.reg, out)

    __rmul__ = __mul__

    def scale(self, q):
        if q == 0:
            return Poly(self.reg, {})
        return Poly(self.reg, {e: _norm_coeff(c * q) for e, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial; use Scalar")
        result = Poly.const(self.reg, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- equality / hashing / display ----------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.reg.names == other.reg.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.reg.names, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical text order)."""
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.reg.names
        parts = []
        for e, c in self.sorted_terms():
            syms = "*".join(
                n if p == 1 else f"{n}^{p}" for n, p in zip(names, e) if p
            )
            neg = c < 0
            mag = -c if neg else c
            if syms:
                body = syms if mag == 1 else f"{mag}*{syms}"
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{' - ' if neg else ' + '}{body}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    # -- content / division / substitution -----------------------------

    def content(self):
        """Positive rational content (gcd of coefficients over Q)."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            f = Fraction(c)
            num = math.gcd(num, f.numerator)
            den = den * f.denominator // math.gcd(den, f.denominator)
        return Fraction(num, den)

    def primitive_int(self):
        """(factor, prim) with self = factor * prim; prim has coprime integer
        coefficients and positive graded-lex leading coefficient."""
        if not self.terms:
            return Fraction(0), self
        cont = self.content()
        _, lc = self.lead()
        if lc < 0:
            cont = -cont
        prim = Poly(self.reg, {e: _norm_coeff(Fraction(c) / cont) for e, c in self.terms.items()})
        return cont, prim

    def monomial_gcd(self):
        """Componentwise minimum exponent vector over all terms."""
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i, p in enumerate(e):
                if p < m[i]:
                    m[i] = p
        return tuple(m)

    def shift_down(self, m):
        """Divide by the monomial with exponent vector m (must divide all terms)."""
        if not any(m):
            return self
        return Poly(self.reg, {tuple(map(int.__sub__, e, m)): c for e, c in self.terms.items()})

    def exact_div(self, d):
        """Exact polynomial quotient self/d; raises ExactDivisionError otherwise."""
        if d.is_zero():
            raise ScalarDivisionError("polynomial division by zero")
        if d.is_const():
            return self.scale(Fraction(1) / Fraction(d.const_value()))
        rem = dict(self.terms)
        out = {}
        dm, dc = d.lead()
        dterms = d.terms
        while rem:
            lm = max(rem, key=_grlex)
            e = tuple(map(int.__sub__, lm, dm))
            if any(p < 0 for p in e):
                raise ExactDivisionError("division is not exact")
            q = _norm_coeff(Fraction(rem[lm]) / Fraction(dc) if not (
                isinstance(rem[lm], int) and isinstance(dc, int) and rem[lm] % dc == 0
            ) else rem[lm] // dc)
            out[e] = q
            for de, c in dterms.items():
                t = tuple(map(int.__add__, e, de))
                s = rem.get(t, 0) - q * c
                if s:
                    rem[t] = _norm_coeff(s)
                else:
                    rem.pop(t, None)
        return Poly(self.reg, out)

    def substitute(self, values):
        """Substitute polynomials/rationals for symbols.

        values maps symbol index -> Poly | int | Fraction.  Unmapped symbols
        stay formal.
        """
        reg = self.reg
        cache = {}

        def powval(i, p):
            key = (i, p)
            if key not in cache:
                v = values[i]
                if not isinstance(v, Poly):
                    v = Poly.const(reg, v)
                cache[key] = v ** p
            return cache[key]

        out = Poly.zero(reg)
        for e, c in self.terms.items():
            rest = [0] * len(e)
            term = None
            for i, p in enumerate(e):
                if p and i in values:
                    term = powval(i, p) if term is None else term * powval(i, p)
                else:
                    rest[i] = p
            mono = Poly.monomial(reg, rest, c)
            out = out + (mono if term is None else mono * term)
        return out


# ---------------------------------------------------------------------------
# multivariate gcd (primitive PRS)
# ---------------------------------------------------------------------------


def _as_univar(p, v):
    """View p as univariate in symbol v: dict degree -> Poly coefficient."""
    out = {}
    for e, c in p.terms.items():
        d = e[v]
        e0 = list(e)
        e0[v] = 0
        coeff = out.setdefault(d, {})
        coeff[tuple(e0)] = c
    return {d: Poly(p.reg, t) for d, t in out.items()}


def _from_univar(reg, u, v):
    out = {}
    for d, coeff in u.items():
        for e, c in coeff.terms.items():
            e2 = list(e)
            e2[v] += d
            out[tuple(e2)] = c
    return Poly(reg, out)


def _uni_mul_poly(u, f):
    return {d: coeff * f for d, coeff in u.items() if not coeff.is_zero()}


def _uni_sub(a, b):
    out = dict(a)
    for d, coeff in b.items():
        s = out.get(d)
        s = coeff.__neg__() if s is None else s - coeff
        if s.is_zero():
            out.pop(d, None)
        else:
            out[d] = s
    return out


def _gcd_many(polys):
    g = None
    for p in polys:
        g = p if g is None else _gcd_prim(g, p)
        if g.is_const() and not g.is_zero():
            return Poly.const(g.reg, 1)
    return g


def _pseudo_rem(F, G, reg, v):
    """Pseudo-remainder of univariate views F by G (coefficients are Polys)."""
    dG = max(G)
    lcg = G[dG]
    r = F
    while r and max(r) >= dG:
        d = max(r)
        lcr = r[d]
        shifted = {d - dG + dd: coeff for dd, coeff in G.items()}
        r = _uni_sub(_uni_mul_poly(r, lcg), _uni_mul_poly(shifted, lcr))
        if r and max(r) >= d:
            raise AssertionError("pseudo-remainder failed to reduce degree")
    return r


def _uni_primitive(u, reg, v):
    """Strip the content (gcd of coefficient polys) from a univariate view."""
    if not u:
        return u
    cont = _gcd_many(list(u.values()))
    if not cont.is_const():
        u = {d: coeff.exact_div(cont) for d, coeff in u.items()}
    whole = _from_univar(reg, u, v)
    _, prim = whole.primitive_int()
    return _as_univar(prim, v)


def _gcd_prim(a, b):
    """gcd of two primitive-integer Polys, returned primitive with positive
    leading coefficient."""
    reg = a.reg
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    # common monomial factor
    ma, mb = a.monomial_gcd(), b.monomial_gcd()
    m = tuple(map(min, ma, mb))
    if any(m):
        g = _gcd_prim(a.shift_down(ma), b.shift_down(mb))
        shell = Poly.monomial(reg, m, 1)
        return g * shell if not g.is_zero() else shell
    if a.is_const() or b.is_const():
        return Poly.const(reg, 1)
    common = a.variables() & b.variables()
    if not common:
        return Poly.const(reg, 1)
    v = min(common, key=lambda i: max(a.degree_in(i), b.degree_in(i)))
    A, B = _as_univar(a, v), _as_univar(b, v)
    ca = _gcd_many(list(A.values()))
    cb = _gcd_many(list(B.values()))
    pa = {d: c.exact_div(ca) for d, c in A.items()}
    pb = {d: c.exact_div(cb) for d, c in B.items()}
    cont = _gcd_prim(ca, cb)
    f, g = (pa, pb) if max(pa) >= max(pb) else (pb, pa)
    while g:
        r = _pseudo_rem(f, g, reg, v)
        if not r:
            break
        f, g = g, _uni_primitive(r, reg, v)
    else:
        g = f
    if not g:
        g = f
    result = _from_univar(reg, g, v)
    _, result = result.primitive_int()
    out = result * cont
    _, out = out.primitive_int()
    return out


def poly_gcd(a, b):
    """Canonical gcd: primitive integer coefficients, positive graded-lex lead."""
    if a.is_zero() and b.is_zero():
        return Poly.zero(a.reg)
    if a.is_zero():
        return b.primitive_int()[1]
    if b.is_zero():
        return a.primitive_int()[1]
    _, pa = a.primitive_int()
    _, pb = b.primitive_int()
    return _gcd_prim(pa, pb)


# ---------------------------------------------------------------------------
# the fraction field
# ---------------------------------------------------------------------------


class Scalar:
    """Element of Q(g1..gn, alpha, beta, c, h) in canonical form.

    Invariants: den != 0; gcd(num, den) = 1; den monic under graded lex;
    zero is stored as 0/1.  Equality of instances is equality in the field.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        # internal: use Scalar.make for normalized construction
        self.num = num
        self.den = den

    @staticmethod
    def make(num, den=None):
        reg = num.reg
        if den is None:
            den = Poly.const(reg, 1)
        if den.is_zero():
            raise ScalarDivisionError("zero denominator")
        if num.is_zero():
            return Scalar(num, Poly.const(reg, 1))
        if den.is_const():
            q = Fraction(den.const_value())
            return Scalar(num.scale(Fraction(1) / q), Poly.const(reg, 1))
        g = poly_gcd(num, den)
        if not g.is_const():
            num = num.exact_div(g)
            den = den.exact_div(g)
        if den.is_const():
            q = Fraction(den.const_value())
            return Scalar(num.scale(Fraction(1) / q), Poly.const(reg, 1))
        _, lc = den.lead()
        if lc != 1:
            q = Fraction(1) / Fraction(lc)
            num = num.scale(q)
            den = den.scale(q)
        return Scalar(num, den)

    # -- basic queries --------------------------------------------------

    @property
    def reg(self):
        return self.num.reg

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.den.is_const() and self.num.is_const() and not self.num.is_zero() \
            and self.num.const_value() == 1

    def is_rational(self):
        return self.num.is_const() and self.den.is_const()

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("scalar is not a rational constant")
        return Fraction(self.num.const_value())

    def _den_is_one(self):
        return self.den.is_const()

    # -- field operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.make(Poly.const(self.reg, other))
        if self._den_is_one() and other._den_is_one():
            return Scalar(self.num + other.num, self.den)
        num = self.num * other.den + other.num * self.den
        return Scalar.make(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.make(Poly.const(self.reg, other))
        if self._den_is_one() and other._den_is_one():
            return Scalar(self.num - other.num, self.den)
        num = self.num * other.den - other.num * self.den
        return Scalar.make(num, self.den * other.den)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Scalar(Poly.zero(self.reg), Poly.const(self.reg, 1))
            # scaling by a nonzero rational preserves canonical form
            return Scalar(self.num.scale(other), self.den)
        if self._den_is_one() and other._den_is_one():
            return Scalar(self.num * other.num, self.den)
        return Scalar.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ScalarDivisionError("inverting zero")
        return Scalar.make(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ScalarDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        out = Scalar.make(Poly.const(self.reg, 1))
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    # -- equality / display -----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self._den_is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({self})"

    # -- substitution -------------------------------------------------------

    def specialize(self, bindings):
        """Substitute values for symbols; bindings maps name -> int | Fraction
        | Poly | Scalar.  Raises SpecializationError if the denominator
        vanishes."""
        reg = self.reg
        values = {}
        for name, v in bindings.items():
            i = reg.index.get(name)
            if i is None:
                raise KeyError(f"unknown symbol {name!r}")
            if isinstance(v, Scalar):
                if not v._den_is_one():
                    raise ValueError("can only substitute polynomial values")
                v = v.num
            elif not isinstance(v, Poly):
                v = Poly.const(reg, v)
            values[i] = v
        num = self.num.substitute(values)
        den = self.den.substitute(values)
        if den.is_zero():
            raise SpecializationError("denominator vanished under specialization")
        return Scalar.make(num, den)


# ---------------------------------------------------------------------------
# parsing of the canonical text form
# ---------------------------------------------------------------------------


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("num", int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j]))
            i = j
        elif text.startswith("**", i):
            toks.append(("op", "^"))
            i += 2
        elif ch in "+-*/^()":
            toks.append(("op", ch))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {i}")
    toks.append(("end", None))
    return toks


class _Parser:
    def __init__(self, ctx, text):
        self.ctx = ctx
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expr(self):
        kind, val = self.peek()
        neg = False
        while kind == "op" and val in "+-":
            self.take()
            if val == "-":
                neg = not neg
            kind, val = self.peek()
        node = self.term()
        if neg:
            node = -node
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.factor()
                node = node * rhs if val == "*" else node / rhs
            else:
                return node

    def factor(self):
        node = self.base()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            sign = 1
            kind, val = self.peek()
            if kind == "op" and val == "-":
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ParseError("exponent must be an integer")
            return node ** (sign * val)
        return node

    def base(self):
        kind, val = self.take()
        if kind == "num":
            return self.ctx.scalar(val)
        if kind == "name":
            return self.ctx.symbol(val)
        if kind == "op" and val == "(":
            node = self.expr()
            kind, val = self.take()
            if (kind, val) != ("op", ")"):
                raise ParseError("expected ')'")
            return node
        if kind == "op" and val == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {val!r}")

    def parse(self):
        node = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input near token {self.peek()[1]!r}")
        return node


# ---------------------------------------------------------------------------
# sessions
# ---------------------------------------------------------------------------

_RESERVED = ("alpha", "beta", "c", "h")


class Binding:
    """How one of alpha/beta/c/h is fixed for a session."""

    __slots__ = ("kind", "value")

    def __init__(self, kind, value=None):
        if kind not in ("free", "rational", "element"):
            raise ValueError(f"unknown binding kind {kind!r}")
        self.kind = kind
        self.value = value

    def __repr__(self):
        return f"Binding({self.kind}, {self.value!r})"

    def __eq__(self, other):
        return isinstance(other, Binding) and (self.kind, self.value) == (other.kind, other.value)


def _parse_binding(name, spec, rank):
    if spec is None or spec == "free":
        return Binding("free")
    if isinstance(spec, Binding):
        return spec
    if isinstance(spec, (int, Fraction)):
        return Binding("rational", Fraction(spec))
    if isinstance(spec, str):
        try:
            return Binding("rational", Fraction(spec))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad binding for {name}: {spec!r}") from exc
    if isinstance(spec, (tuple, list)):
        coords = tuple(int(x) for x in spec)
        if name != "alpha":
            raise ValueError(f"{name} cannot be bound to a group element")
        if len(coords) != rank:
            raise ValueError(f"alpha element binding needs {rank} coordinates")
        return Binding("element", coords)
    if isinstance(spec, dict) and "element" in spec:
        return _parse_binding(name, tuple(spec["element"]), rank)
    raise ValueError(f"bad binding for {name}: {spec!r}")


class Context:
    """One computation session: symbol registry plus fixed bindings.

    Generators g1..gn are always formal.  alpha/beta/c/h are free symbols
    unless bound here; a bound symbol never appears in any computed Scalar.
    """

    def __init__(self, gen_names=("g1",), *, alpha=None, beta=None, c=None, h=None):
        gen_names = tuple(gen_names)
        for n in gen_names:
            if n in _RESERVED:
                raise ValueError(f"generator name {n!r} is reserved")
        self.gen_names = gen_names
        self.rank = len(gen_names)
        self.reg = Registry(gen_names + _RESERVED)
        self.bindings = {
            "alpha": _parse_binding("alpha", alpha, self.rank),
            "beta": _parse_binding("beta", beta, self.rank),
            "c": _parse_binding("c", c, self.rank),
            "h": _parse_binding("h", h, self.rank),
        }

    @staticmethod
    def of_rank(n, prefix="g", **kw):
        return Context(tuple(f"{prefix}{i+1}" for i in range(n)), **kw)

    # -- scalar constructors ---------------------------------------------

    def zero(self):
        return Scalar.make(Poly.zero(self.reg))

    def one(self):
        return Scalar.make(Poly.const(self.reg, 1))

    def scalar(self, q):
        if isinstance(q, Scalar):
            return q
        if isinstance(q, str):
            return self.parse(q)
        return Scalar.make(Poly.const(self.reg, q))

    def symbol(self, name):
        """The raw symbol as a Scalar (ignores bindings)."""
        return Scalar.make(Poly.symbol(self.reg, name))

    def gen(self, i):
        return Scalar.make(Poly.symbol(self.reg, self.gen_names[i]))

    def embed(self, coords):
        """Embedded value of a group element: sum coords[i] * g_{i+1}."""
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(coords)}")
        e0 = [0] * len(self.reg)
        terms = {}
        for i, k in enumerate(coords):
            if k:
                e = list(e0)
                e[i] = 1
                terms[tuple(e)] = k
        return Scalar.make(Poly(self.reg, terms))

    def binding(self, name):
        return self.bindings[name]

    def bound_value(self, name):
        """The effective Scalar for alpha/beta/c/h under this session's binding."""
        b = self.bindings[name]
        if b.kind == "free":
            return self.symbol(name)
        if b.kind == "rational":
            return self.scalar(b.value)
        return self.embed(b.value)

    @property
    def alpha(self):
        return self.bound_value("alpha")

    @property
    def beta(self):
        return self.bound_value("beta")

    @property
    def c(self):
        return self.bound_value("c")

    @property
    def h(self):
        return self.bound_value("h")

    def parse(self, text):
        return _Parser(self, text).parse()

    def __repr__(self):
        bound = {k: v for k, v in self.bindings.items() if v.kind != "free"}
        return f"Context(rank={self.rank}, bound={bound})"
