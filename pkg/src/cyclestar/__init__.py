"""Exact desk-scale computation of even-cycle versus star Ramsey
numbers: certified extremal constructions, exhaustive cycle search,
isomorph-free enumeration, and verification suites for the structural
facts the computation rests on."""

__version__ = "0.1.0"

from .canon import are_isomorphic, canonical_graph, canonical_key
from .constructions import (
    LowerBoundReport,
    ParamTriple,
    build_h1,
    build_h2,
    certify_lower_bound,
    closed_form_value,
    extremal_size,
    regime,
)
from .cycles import (
    even_cycle_spectrum,
    find_cycle_of_length,
    find_cycle_of_length_at_least,
    find_path_of_length,
    is_hamiltonian,
    is_pancyclic,
    longest_even_cycle,
)
from .enumeration import DEFAULT_CEILING, EnumerationCeilingError, enumerate_graphs
from .graph6 import Graph6Error, from_graph6, to_graph6
from .graphs import Graph, GraphBuildError, build, disjoint_union
from .harness import (
    LemmaReport,
    probe_theorem,
    verify_bc,
    verify_dec,
    verify_erdos_gallai_structure,
    verify_set_system,
    verify_vz,
    verify_williamson,
)
from .search import (
    RamseyResult,
    TuranResult,
    UpperVerdict,
    ramsey_number,
    turan_number,
    verify_upper_at,
)
from .structure import (
    BlockTree,
    Decomposition,
    attach_low_degree_hubs,
    bc_closure,
    blocks,
    cut_vertices,
    decompose_2connected,
    is_2connected,
)
from .witnesses import BudgetExhausted, CycleWitness, PathWitness, StarWitness

__all__ = [
    "BlockTree",
    "BudgetExhausted",
    "CycleWitness",
    "Decomposition",
    "DEFAULT_CEILING",
    "EnumerationCeilingError",
    "Graph",
    "Graph6Error",
    "GraphBuildError",
    "LemmaReport",
    "LowerBoundReport",
    "ParamTriple",
    "PathWitness",
    "RamseyResult",
    "StarWitness",
    "TuranResult",
    "UpperVerdict",
    "are_isomorphic",
    "attach_low_degree_hubs",
    "bc_closure",
    "blocks",
    "build",
    "build_h1",
    "build_h2",
    "canonical_graph",
    "canonical_key",
    "certify_lower_bound",
    "closed_form_value",
    "cut_vertices",
    "decompose_2connected",
    "disjoint_union",
    "enumerate_graphs",
    "even_cycle_spectrum",
    "extremal_size",
    "find_cycle_of_length",
    "find_cycle_of_length_at_least",
    "find_path_of_length",
    "from_graph6",
    "is_2connected",
    "is_hamiltonian",
    "is_pancyclic",
    "longest_even_cycle",
    "probe_theorem",
    "ramsey_number",
    "regime",
    "to_graph6",
    "turan_number",
    "verify_bc",
    "verify_dec",
    "verify_erdos_gallai_structure",
    "verify_set_system",
    "verify_upper_at",
    "verify_vz",
    "verify_williamson",
]
