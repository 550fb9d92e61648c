"""Homological chord indices and invariants of knots in thickened surfaces."""

from .codec import parse_class, parse_diagram, parse_file, serialize_diagram
from .diagram import (
    GaussDiagram,
    Passage,
    SideCrossing,
    SurfaceDiagram,
    band_sum,
    gauss_diagram,
    mirror,
    parse_gauss_code,
    realize_virtual,
    reverse_orientation,
    smooth,
    writhe,
)
from .homology import HomologyClass, admissible_subgroup_basis, intersection, is_admissible
from .indices import chord_index, chord_indices, ind, index_function, parity
from .invariants import (
    group_ring_invariant,
    regular_invariant,
    small_state_sum,
    transcendental_invariant,
    virtual_writhe_polynomial,
    writhe_polynomial,
    zero_class_scan,
)
from .moves import MoveSite, apply, find_sites, random_diagram

__version__ = "0.1.0"
