"""Minimal pancake decompositions of snakes and circular snakes from their names."""

from .decomp import (
    CutAnnotation,
    Decomposition,
    annotate_cut_placement,
    check_decomposition,
    from_cuts,
    greedy_circular,
    greedy_linear,
    greedy_no_nodes,
    is_block_admissible,
    lift,
    oracle_count,
    oracle_min_circular,
    oracle_min_linear,
    reduce,
    verify_minimal,
)
from .equiv import (
    DecompositionSignature,
    EquivWitness,
    apply_witness,
    circular_weak_equiv,
    cluster_correspondence_check,
    decomposition_signature,
    decompositions_weak_equiv,
    no_nodes_weak_equiv,
    snake_weak_equiv,
    weak_equiv,
)
from .gen import (
    GenerationError,
    GenParams,
    enumerate_names,
    random_circular_name,
    random_clusters,
    random_snake_name,
)
from .model import (
    CircularDescriptor,
    CircularName,
    ClusterData,
    NoNodesDescriptor,
    SnakeDescriptor,
    SnakeName,
    ValidationReport,
    WordError,
    canonicalize,
    parse_word,
    reflect,
    reverse_orientation,
    rotate,
    segment_multiplicity,
    segments_between,
    validate,
)
from .seq import (
    CircularAnalysis,
    CutSequence,
    NoRepeat,
    SuccessorMap,
    check_lap_bound,
    circular_analysis,
    circular_sequences,
    is_primitive,
    minimal_sequence_linear,
    successor_map,
)

__version__ = "0.1.0"
