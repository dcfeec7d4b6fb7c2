"""Tour of the dimension-table classifier.

A ModuleDescriptor is just a windowed weight-space dimension table plus its
group and provenance.  classify() reads the table alone — never the
construction metadata — and names the module family: trivial,
intermediate_series, highest_weight, lowest_weight, or induced_type (in which
case it also recovers the inducing direction b and the corank-one subgroup
G0).  This demo builds one descriptor per family and round-trips them.

Run:  PYTHONPATH=src python3 demos/05_classify.py
"""

import json

from gvir import (
    Context,
    Group,
    InducedModule,
    IntermediateSeriesModule,
    ModuleDescriptor,
    TruncatedVermaModule,
    Window,
    classify,
    descriptor_from_induced,
    descriptor_from_interseries,
    descriptor_from_verma,
)


def show(name, descriptor):
    rep = classify(descriptor)
    print(f"{name:<28} -> {rep.case}")
    if rep.detected_b is not None:
        print(f"{'':<28}    b = {list(rep.detected_b)}, "
              f"G0 basis = {[list(g) for g in rep.detected_G0_basis]}")
    return rep


print("== built tables ==")
V = IntermediateSeriesModule(Context.of_rank(2), Group.of_rank(2))
show("intermediate series, rank 2", descriptor_from_interseries(V))

M = TruncatedVermaModule(Context.of_rank(1), 6)
show("Verma truncation, G = Z", descriptor_from_verma(M))

mod = InducedModule(Context.of_rank(2), Group.of_rank(2), (0, 1), Window.make(1, 2))
show("induced along b = [0,1]", descriptor_from_induced(mod.quotient_dims()))

mod = InducedModule(Context.of_rank(3), Group.of_rank(3), (0, 0, 1), Window.make(1, 1))
show("induced, rank 3", descriptor_from_induced(mod.quotient_dims()))

print()
print("== an external table, entered as JSON ==")
payload = {
    "schema": "gvir.descriptor/1",
    "group": {"rank": 1},
    "provenance": "external",
    "flags": ["is_Z"],
    "offset": "h",
    # dims grow downward from a top line: a lowest-weight shape, flipped
    "rows": [["h", [n], d] for n, d in enumerate([1, 1, 2, 3, 5])]
    + [["h", [-1], 0], ["h", [-2], 0]],
}
desc = ModuleDescriptor.from_json(payload)
rep = show("hand-entered table", desc)
print()
print("full report for the external table:")
print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
