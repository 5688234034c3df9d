"""Chain conditions of anti-clique posets over tree hypergraphs, checked at desk scale."""

from .branch_space import OMEGA, Branch, DenseSequence, Node, TreeKind, arity, delta, meet_length
from .condition_poset import Condition, compatible, is_centred, is_n_linked, leq
from .errors import ChainCondError
from .finite_poset_lab import (
    CENTRED,
    LINKED,
    ChainCondition,
    FiniteHypergraph,
    FinitePoset,
    PartitionCertificate,
    antichain_lt,
    check_partition,
    condition_poset_of,
    gh_amplify,
    gh_find_configuration,
    min_parts,
    nlinked,
    sigma_centred_partition,
)
from .hypergraph import H0INF, H1INF, Edge, HypergraphKind, find_edge, is_anti_clique, is_edge
from .partition_builder import CaseTag, SeparatorKey, class_key, classify, member_of
from .prefix_adversary import PrefixColoring, find_mono_clique, find_mono_edge, refute_centred_class
from .report import CheckResult, Report
from .verifier import (
    check_class_antichain_bound,
    check_class_linked,
    check_h1_no_unbounded_clique,
    claim_violation,
    linked_counterexample,
    ramsey_upper,
)

__version__ = "0.1.0"
