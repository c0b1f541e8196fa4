"""Generalized truncations of regular graphs and the supporting group machinery."""
from __future__ import annotations

from .autgroup import (
    CanonicalForm,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    is_vertex_transitive,
)
from .builtin import builtin_group
from .cayley import cayley_graph, cayley_graph_from_elements
from .classify import (
    ClassLabel,
    Decomposition,
    classify_corpus,
    classify_cubic_vt,
    truncation_decomposition,
)
from .construction import (
    OrbitSelection,
    TableRow,
    candidate_groups,
    enumerate_table,
    lift_criterion,
    orbit_truncation,
    orbit_unions_matching,
)
from .coset import CosetOverflow, Presentation, todd_coxeter
from .graph import INFINITE, Graph, Graph6Error, decode_graph6, encode_graph6, girth
from .perm import Perm, format_perm, parse_perm
from .permgroup import PermGroup, schreier_sims
from .truncation import (
    Labeling,
    NotAnAutomorphism,
    Truncation,
    blue_girth,
    lift,
    lifted_subgroup,
    project,
    projecting_subgroup,
    truncate,
)

__version__ = "0.1.0"
