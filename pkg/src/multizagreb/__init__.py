"""Multiplicative Zagreb indices and distance-k domination on trees."""

__version__ = "0.1.0"

from .domination import (
    CapExceededError,
    DominationResult,
    gamma_k,
    gamma_k_bruteforce,
    is_k_dominating,
    private_k_neighbors,
    removable_pendants,
)
from .enumeration import free_trees, labeled_trees_prufer
from .families import (
    closed_form_pi1,
    closed_form_pi2,
    corona,
    corona_decompose,
    path,
    star,
    t_a_nk2,
    t_nks,
)
from .indices import ExactRatio, f_aux, first_zagreb, g_ratio, h_aux, pi1, pi2, second_zagreb
from .transforms import contract_pend, move_pendants
from .tree import (
    CanonicalCode,
    InvalidTreeError,
    Tree,
    TreeFormatError,
    canonical_code,
    diameter,
    diametral_path,
    distances_from,
    from_edge_list,
    is_isomorphic,
    pendant_vertices,
)
