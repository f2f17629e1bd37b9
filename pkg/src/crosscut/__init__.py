"""Number-theoretic set families, their lattices and nerve complexes, and exact
integer reduced homology."""

from .complexes import (
    SimplicialComplex,
    clique_complex,
    coprime_free_collapsed,
    face_complex,
    faces_by_dimension,
    facet_nerve,
    nerve,
    skeleton,
    strong_collapse,
)
from .families import (
    COPRIME_FREE,
    DISTINCT_PAIR_PRODUCTS,
    DIVISIBILITY_CHAIN,
    ENUMERATION_GUARD,
    NO_DIVISOR_OF_PAIR_PRODUCT,
    PAIRWISE_COPRIME,
    PRIMITIVE,
    PRODUCT_FREE,
    BitSubset,
    CountTriangle,
    EnumerationGuardError,
    FailureWitness,
    FamilyKind,
    Partition,
    count_triangle,
    is_member,
    kind_from_name,
    maximal_members,
    members,
    partition_components,
    s_multiple,
    small_count_closed_form,
)
from .homology import (
    BoundaryMatrix,
    HomologyGroup,
    betti_zero_fast,
    boundary_matrix,
    euler_check,
    reduced_homology,
    smith_normal_form,
)
from .lattice import TOP, FamilyLattice, alt_sum, crosscut_complex, is_crosscut, is_spanning, mobius
from .numthy import (
    PrimeSieve,
    chebyshev_count,
    divisor_count,
    is_squarefree,
    largest_prime_le,
    prime_support,
    sieve,
    totient,
)

__version__ = "0.1.0"
