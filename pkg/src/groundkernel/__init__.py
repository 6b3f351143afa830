"""Dictionaries as definition graphs: reachable sets, grounding kernels, minimum grounding sets."""

from groundkernel.digraph import DefGraph, SccDecomposition, build_graph, induced_subgraph, is_acyclic, scc
from groundkernel.errors import (
    DictionarySyntaxError,
    DuplicateEntry,
    EmptyToken,
    GroundKernelError,
    InvalidPercent,
    InvalidToken,
    NotClosed,
    TooLarge,
    UnknownWord,
)
from groundkernel.kernel import KernelResult, grounding_kernel, word_levels
from groundkernel.lexicon import (
    Dictionary,
    ValidationReport,
    Word,
    normalize_token,
    parse_json,
    parse_text,
    validate,
)
from groundkernel.mgs import (
    MgsConfig,
    MgsResult,
    brute_force_min_fvs,
    exact_min_fvs_scc,
    greedy_fvs_scc,
    grounding_number,
    is_feedback_vertex_set,
    minimum_grounding_set,
)
from groundkernel.reachability import (
    ReachabilityResult,
    coverage_fraction,
    is_grounding_set,
    reach_step,
    reachable_set,
    relaxed_reach_step,
    relaxed_reachable_set,
)

__version__ = "0.1.0"
