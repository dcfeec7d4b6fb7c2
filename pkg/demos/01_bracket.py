"""Tour of the Lie bracket on Vir[G] for a rank-2 subgroup G of C.

G is presented by two symbolic generators g1, g2 (think g1 = 1, g2 = sqrt(2)):
coordinates (m, n) name the group element m*g1 + n*g2, and every coefficient
the bracket produces is an exact polynomial in g1, g2.

Run:  python3 demos/01_bracket.py          (after `pip install -e .`)
      PYTHONPATH=src python3 demos/01_bracket.py   (from a fresh checkout)
"""

from gvir import AlgebraElement, Context, Group, pbw_normalize, render_pbw

ctx = Context.of_rank(2)
G = Group.of_rank(2)


def d(*coords):
    return AlgebraElement.d(ctx, G, coords)


print("== generic pair ==")
a, b = d(1, 0), d(0, 1)
print(f"[{a.render()}, {b.render()}] = {a.bracket(b).render()}")

print()
print("== opposite pair fires the central term ==")
a, b = d(1, 0), d(-1, 0)
print(f"[{a.render()}, {b.render()}] = {a.bracket(b).render()}")
a, b = d(2, 1), d(-2, -1)
print(f"[{a.render()}, {b.render()}] = {a.bracket(b).render()}")

print()
print("== the center really is central ==")
c = AlgebraElement.central(ctx, G)
print(f"[C, {a.render()}] = {c.bracket(a).render()}")

print()
print("== Jacobi identity, spot-checked exactly ==")
x, y, z = d(2, -1), d(-1, 3), d(0, 1)
jac = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y))
print(f"[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = {jac.render()}")

print()
print("== PBW straightening in the enveloping algebra ==")
word = ((1, 0), (-1, 0), (0, 1))
terms = pbw_normalize(ctx, G, word)
print(f"d[1,0] d[-1,0] d[0,1]  ~>  {render_pbw(terms)}")
