"""Tour of truncated Verma modules over the classical algebra (G = Z).

A Verma module with highest weight (c, h) is graded by level; the level-n
space has dimension p(n), the number of partitions of n.  Singular vectors
(non-top vectors killed by every raising operator) exist only where an exact
polynomial condition in c and h vanishes, and quotienting them out shrinks
the dimension table.

Run:  PYTHONPATH=src python3 demos/03_verma.py
"""

from gvir import Context, TruncatedVermaModule, verma_dims

print("== level dimensions are partition numbers ==")
print(f"levels 0..8: {verma_dims(8)}")

print()
print("== symbolic singular-vector conditions (c, h free) ==")
M = TruncatedVermaModule(Context.of_rank(1), 3)
for n in (1, 2, 3):
    rep = M.find_singular(n)
    print(f"level {n}: kernel dim {rep.kernel_dim()}, exists iff  {rep.conditions[0]} = 0")

print()
print("== a module with a level-2 singular vector: c = 26, h = 1 ==")
Mp = TruncatedVermaModule(Context.of_rank(1, c=26, h=1), 4)
rep = Mp.find_singular(2)
vec = rep.vectors[0]
body = " + ".join(f"({coeff}) {'.'.join(f'd_{-k}' for k in word)} v" for word, coeff in sorted(vec.items()))
print(f"singular vector: {body}")
print(f"killed by d_1: {Mp.act(1, vec) == {}},  killed by d_2: {Mp.act(2, vec) == {}}")
print(f"dims before quotient: {Mp.dims()}")
print(f"dims after quotient:  {Mp.quotient_dims_after_singular()}")

print()
print("== the trivial module sits at c = 0, h = 0 ==")
M0 = TruncatedVermaModule(Context.of_rank(1, c=0, h=0), 3)
print(f"level-1 kernel dim: {M0.find_singular(1).kernel_dim()}")
print(f"dims after quotient: {M0.quotient_dims_after_singular()}")
