"""Exact bar codes, Jordan cells and monodromy of tame real- and angle-valued maps."""
from .canonical import EndoCanonicalForm, Poly, canonical_form
from .config import ConfigPolynomial, Configuration, configuration, polynomial
from .diagram import (
                      InvariantReport,
                      TameDiagram,
                      analyze,
                      build_representation,
                      cross_validate,
                      fiber_dims,
                      interval_dims,
                      novikov_numbers,
                      parse_diagram,
                      space_homology,
)
from .field import QQ, FieldError, FieldSpec
from .homology import SimplicialComplex, SimplicialMap, homology_basis, induced_map
from .io import ValidationError, parse_rep, rep_to_json
from .linalg import MatrixF, Subspace, nullspace, preimage, quotient, rank, solve
from .quiver import (
                      BarCode,
                      CircleRep,
                      Decomposition,
                      TransformRecord,
                      ZRep,
                      assemble_M,
                      decompose,
                      dker_dcoker,
                      elementary,
                      local_counts,
                      monodromy_of_regular,
                      twist,
                      unroll,
)
from .relation import LinearRelation, compose, dagger, graph, limits, parts, regular_part, relation_from_cycle

__all__ = [
                      "QQ",
                      "BarCode",
                      "CircleRep",
                      "ConfigPolynomial",
                      "Configuration",
                      "Decomposition",
                      "EndoCanonicalForm",
                      "FieldError",
                      "FieldSpec",
                      "InvariantReport",
                      "LinearRelation",
                      "MatrixF",
                      "Poly",
                      "SimplicialComplex",
                      "SimplicialMap",
                      "Subspace",
                      "TameDiagram",
                      "TransformRecord",
                      "ValidationError",
                      "ZRep",
                      "analyze",
                      "assemble_M",
                      "build_representation",
                      "canonical_form",
                      "compose",
                      "configuration",
                      "cross_validate",
                      "dagger",
                      "decompose",
                      "dker_dcoker",
                      "elementary",
                      "fiber_dims",
                      "graph",
                      "homology_basis",
                      "induced_map",
                      "interval_dims",
                      "limits",
                      "local_counts",
                      "monodromy_of_regular",
                      "novikov_numbers",
                      "nullspace",
                      "parse_diagram",
                      "parse_rep",
                      "parts",
                      "polynomial",
                      "preimage",
                      "quotient",
                      "rank",
                      "regular_part",
                      "relation_from_cycle",
                      "rep_to_json",
                      "solve",
                      "space_homology",
                      "twist",
                      "unroll",
]
