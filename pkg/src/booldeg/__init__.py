"""Exact-arithmetic Boolean function complexity toolkit.

Computes degree, nondeterministic/rational/sign degree, block sensitivity,
influence, and decision-tree complexity with explicit rational witnesses,
and exhaustively verifies the inequalities relating them at small n.
"""

from .boolfn import (
    BlockPacking,
    BooleanFunction,
    PartialBooleanFunction,
    block_sensitivity_at,
    decision_tree_complexity,
    depends_on,
    family,
    influence,
    min_block_sensitivity,
    negate,
    restrict_fn,
    total_influence,
)
from .degrees import (
    NdegWitness,
    NullstellensatzCertificate,
    RationalRepresentation,
    SignWitness,
    avoidance_combine,
    deg,
    hypercube_nullstellensatz,
    ndeg,
    partial_degree,
    rdeg,
    sdeg,
)
from .dtree import build_tree, depth, evaluate_tree, hitting_set, verify_tree
from .harness import CorpusSpec, MeasureReport, verify_corpus, verify_families, verify_function
from .polynomials import (
    MultilinearPoly,
    UnivariatePoly,
    format_poly,
    interpolate_multilinear,
    multilinearize_product,
    parse_poly,
)
from .symmetry import (
    bernoulli_symmetrize,
    corollary_approx_check,
    markov_grid_check,
    minsky_papert_symmetrize,
    nonzero_probability,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
