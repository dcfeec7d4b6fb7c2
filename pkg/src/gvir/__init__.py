"""Exact computer algebra for generalized Virasoro algebras over subgroups of C.

The package works with the Lie algebra spanned by a central element C and
generators d_x indexed by a finitely generated subgroup G of the complex
numbers, realized through an integer coordinate lattice.  It provides:

- the bracket and canonical rendering of algebra elements (``algebra``),
- intermediate-series weight modules and their reducibility analysis
  (``interseries``),
- truncated Verma modules over the classical algebra, with singular-vector
  detection (``classical``),
- induced modules built from a direction b and a corank-one subgroup, with
  windowed dimension tables for the maximal weight quotient (``induced``),
- classification of dimension-table descriptors into module families
  (``classify``),
- a JSON-driven command line front end (``cli``).

All arithmetic is exact: rational numbers and multivariate rational
polynomials, never floating point.
"""

from .algebra import AlgebraElement, bracket, pbw_normalize, render_pbw, weight_of
from .classical import (
    SingularVectorReport,
    TruncatedVermaModule,
    partition_count,
    partitions,
    verma_dims,
)
from .classify import (
    ClassificationReport,
    MalformedDescriptorError,
    ModuleDescriptor,
    classify,
    descriptor_from_induced,
    descriptor_from_interseries,
    descriptor_from_verma,
    is_uniformly_bounded,
    string_profile,
)
from .groups import Group, hermite_basis, int_det, is_primitive
from .induced import InducedModule, QuotientDims, Window
from .interseries import IntermediateSeriesModule, SubquotientDescriptor
from .scalars import Binding, Context, Poly, Scalar

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "Binding",
    "ClassificationReport",
    "Context",
    "Group",
    "InducedModule",
    "IntermediateSeriesModule",
    "MalformedDescriptorError",
    "ModuleDescriptor",
    "Poly",
    "QuotientDims",
    "Scalar",
    "SingularVectorReport",
    "SubquotientDescriptor",
    "TruncatedVermaModule",
    "Window",
    "bracket",
    "classify",
    "descriptor_from_induced",
    "descriptor_from_interseries",
    "descriptor_from_verma",
    "hermite_basis",
    "int_det",
    "is_primitive",
    "is_uniformly_bounded",
    "partition_count",
    "partitions",
    "pbw_normalize",
    "render_pbw",
    "string_profile",
    "verma_dims",
    "weight_of",
    "__version__",
]
