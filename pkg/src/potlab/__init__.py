"""Exact computations for flexible-tile pots: realizations, outputs and the cube census."""
from __future__ import annotations

from .extremal import census_biminimal_cube, census_cube, minimal_pot_stats, verify_lower_bounds
from .multigraph import (
    CanonicalForm,
    Multigraph,
    Orientation,
    are_isomorphic,
    automorphism_group,
    build_cayley,
    canonical_form,
    catalog_cubic8,
    cube,
    is_bipartite,
)
from .outputs import enumerate_outputs, outputs_below
from .pots import (
    EdgeColoring,
    Pot,
    PotIsomorphism,
    Tile,
    absolute_pot,
    apply_pot_isomorphism,
    induced_pot,
    induced_tile,
    pot_isomorphisms,
    retarget_realization,
    structural_flags,
    underlying_coloring,
)
from .realization import classify_scenarios, realize
from .reference import P1, P2
from .spectrum import build_system, min_order, minimal_solutions, usage_vectors

__all__ = [
    "CanonicalForm", "Multigraph", "Orientation", "are_isomorphic", "automorphism_group", "build_cayley",
    "canonical_form", "catalog_cubic8", "cube", "is_bipartite",
    "EdgeColoring", "Pot", "PotIsomorphism", "Tile", "absolute_pot", "apply_pot_isomorphism", "induced_pot",
    "induced_tile", "pot_isomorphisms", "retarget_realization", "structural_flags", "underlying_coloring",
    "build_system", "min_order", "minimal_solutions", "usage_vectors",
    "enumerate_outputs", "outputs_below", "classify_scenarios", "realize",
    "census_biminimal_cube", "census_cube", "minimal_pot_stats", "verify_lower_bounds",
    "P1", "P2",
]
