"""Exact twisted convolution algebras over finite discrete groupoids."""

from .algebra import (
    Context,
    Element,
    EquivContext,
    EquivariantElement,
    add,
    char_fn,
    coboundary_iso,
    convolve,
    delta,
    disjoint_decomposition,
    equiv_convolve,
    equiv_star,
    from_coeffs,
    graded_component,
    graded_components,
    involute,
    local_unit,
    one,
    psi,
    psi_inverse,
    scale,
    zero,
)
from .catalog import (
    CATALOG,
    CatalogEntry,
    action_groupoid,
    build,
    disjoint_union,
    emit_fixtures,
    enumerate_cocycles,
    fixture_cocycles,
    free_pairs,
    group_groupoid,
    klein_table,
    pair2_coboundary_cocycle,
    pair_groupoid,
    s3_table,
    z2_neg_cocycle,
)
from .cocycle import (
    Cocycle,
    Grading,
    GroupTable,
    IntGroup,
    apply_coboundary,
    brute_force_cohomologous,
    check_cocycle,
    check_cohomologous,
    cyclic_group,
    invert_cocycle,
    kernel_arrows,
    multiply_cocycles,
    trivial_cocycle,
    validate_coboundary,
    validate_cocycle,
    validate_grading,
)
from .fileio import (
    read_coboundary,
    read_cocycle,
    read_decomposition,
    read_element,
    read_grading,
    read_groupoid,
    read_ideal,
    read_morphism,
    read_section,
    read_text,
    read_twist,
    serialize_coboundary,
    serialize_cocycle,
    serialize_decomposition,
    serialize_element,
    serialize_grading,
    serialize_groupoid,
    serialize_ideal,
    serialize_morphism,
    serialize_section,
    serialize_twist,
    write_cocycle,
    write_element,
    write_grading,
    write_groupoid,
    write_ideal,
    write_text,
    write_twist,
)
from .groupoid import (
    Groupoid,
    bisection_inverse,
    bisection_product,
    check_groupoid,
    composable_pairs,
    composable_triples,
    enumerate_bisections,
    is_bisection,
    is_effective,
    is_minimal,
    isotropy,
    orbits,
    restrict,
    subgroupoid,
    validate_groupoid,
)
from .rings import (
    CyclotomicField,
    IntegerRing,
    Involution,
    PrimeField,
    QuadraticGaloisField,
    RationalRing,
    Ring,
    UnitSubgroup,
    check_t_inverse_involution,
    parse_involution,
    parse_ring,
    unit_subgroup,
)
from .structure import (
    Ideal,
    SimpleResult,
    ck_witness,
    from_vec,
    graded_ck_witness,
    ideal_generated,
    is_graded_ideal,
    is_simple,
    reduce_against,
    rref,
    to_vec,
)
from .twist import (
    Twist,
    TwistMorphism,
    build_twist,
    check_twist,
    find_section,
    induced_cocycle,
    section_iso,
    twists_isomorphic,
    unique_scalar,
    validate_section,
    validate_twist,
    validate_twist_morphism,
)

__version__ = "0.1.0"
