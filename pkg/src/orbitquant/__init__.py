"""Exact character computations for nilpotent orbits of Sp(2n, C)."""
from .catalog import CellCatalogEntry, catalog_lookup, load_catalog
from .ktypes import KTypeDecomposition, closed_form, decompose, weight_multiplicity, weyl_dimension
from .orbits import OrbitDescriptor, Partition, collapse, jm_h, lambda_of, ls_dual, transpose, validate
from .vchar import VirtualCharacter, dominant_rep, mcgovern_character, r_x, unipotent_pair, x_pi
from .vogan import (
    GammaCertificate,
    gamma,
    parity_split_check,
    root_order_leq,
    support_maxima,
    theorem_c_closed_form,
    verify_achar_sommers,
)
from .weight import Weight
from .weyl import SignedPermutation, SubgroupSpec, act, arrangement, det_sign, enumerate_group

__version__ = "0.1.0"
