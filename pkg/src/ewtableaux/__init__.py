"""Tableaux on Ferrers shapes (EW, NEW, Le and tree-like), their bijections
with permutations, and the sandpile model on Ferrers graphs."""

from .core import (
    BorderLabeling,
    Family,
    FerrersGraph,
    FerrersShape,
    ShapeError,
    Tableau,
    TableauError,
    border_labels,
    ferrers_graph,
    parse,
    serialize,
)
from .bijections import (
    ew_to_le,
    le_to_ew,
    le_to_new,
    new_le,
    new_le_inverse,
    new_to_le,
    phi_le,
    phi_le_inverse,
    psi,
    psi_inverse,
    tree_to_ew_M,
    tree_to_ew_via_le,
    tree_to_le,
    tree_to_perm,
)
from .permstat import desexc, desexc_inverse
from .tableaux import enumerate_tableaux, find_violation, is_valid, validate

__version__ = "0.1.0"
