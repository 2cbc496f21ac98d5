"""Exact-arithmetic toolkit for symmetric endomorphisms of projective space:
cyclotomic linear algebra, finite projective matrix groups, relative
invariants/equivariants, equivariant map constructions, and automorphism
group computation for morphisms of P^2 over Q."""

from .algebra import (
    CycField,
    CycNum,
    DEFAULT_PRECISION,
    FMatrix,
    MPoly,
    TruncSeries,
    UPoly,
    common_field,
    cyclo_field,
    imag_unit,
    mpoly_gcd,
    roots_in_field,
    sqrt2,
    sqrt5,
    sqrt_minus3,
    upoly_factor_q,
)
from .groups import (
    CatalogEntry,
    Character,
    ClosureCapExceeded,
    MatGroup,
    catalog,
    catalog_from_label,
    largest_cyclic,
    linear_characters,
    linear_closure,
    projective_closure,
)
from .invariants import (
    equivariant_molien,
    equivariant_reynolds,
    equivariant_space,
    fundamental_equivariant_count,
    group_act,
    invariant_space,
    is_equivariant_tuple,
    is_relative_invariant,
    molien,
    reynolds,
    secondary_degrees,
)
from .dynmaps import (
    MorphismCertificate,
    ProjMap,
    aut_bound,
    conjugate,
    doyle_mcmullen,
    equivariant_combination,
    is_automorphism,
    klein_map,
    macaulay_resultant,
    make_map,
    morphism_certificate,
    pencil_resultant,
    resultant_roots_in_q,
    wedge_map,
)
from .autgroup import (
    AutOptions,
    AutResult,
    BadReduction,
    EliminationDegenerate,
    ProjPoint,
    ResourceCap,
    automorphism_group_p2,
    modp_cycle_filter,
    periodic_points,
    preimages,
)

__version__ = "0.1.0"
