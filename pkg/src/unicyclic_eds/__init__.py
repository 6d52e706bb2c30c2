"""Exact eccentric-distance-sum toolkit for unicyclic graphs.

Computes distance-based invariants in exact integer arithmetic, builds the
named extremal families, enumerates unicyclic graphs up to isomorphism with
canonical codes, and audits an embedded catalog of extremal-value claims
(tables, closed forms, structural lemmas) against ground truth.
"""

from .graph import (
    Graph,
    GraphError,
    InvariantReport,
    bfs_distances,
    build_graph,
    degree_distance,
    eccentricity,
    eds,
    eds_by_pairs,
    format_edge_list,
    girth,
    invariant_report,
    max_degree,
    parse_edge_list,
    transmission,
    unique_cycle,
    wiener,
)
from .matching import (
    is_maximum_matching,
    matching_number,
    matching_number_oracle,
    matching_number_tree,
    matching_number_unicyclic,
    maximum_matchings,
    pendant_unsaturated_witness,
)
from .families import (
    AttachmentSpec,
    BroomSpec,
    CycleSpec,
    FamilyError,
    FamilySpec,
    FamilySyntaxError,
    HnkSpec,
    NamedSpec,
    SunSpec,
    UnkSpec,
    build_family,
    format_family_spec,
    make_broom_graph,
    make_cycle,
    make_hnk,
    make_named,
    make_sun,
    make_unk,
    parse_family_spec,
)
from .enumeration import (
    UnicyclicCode,
    codes_for_size,
    enumerate_rooted_trees,
    enumerate_unicyclic,
    graph6_decode,
    graph6_encode,
    labeled_oracle_enumerate,
    rooted_tree_code,
    unicyclic_canonical_code,
)
from .formulas import FormulaId, Prediction, eval_formula, predicted_extremal
from .audit import (
    AuditError,
    BoundReport,
    CheckReport,
    RankingRecord,
    check_delta_bounds,
    check_lemma,
    check_pendant_bound,
    check_pendant_pair_bound,
    check_theorem,
    formula_audit,
    rank_classes,
    reproduce_tables,
)

__version__ = "1.0.0"
