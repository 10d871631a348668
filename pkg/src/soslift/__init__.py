"""Sos permutations: enumeration, degree lifting, Farey correspondence, trees."""

from .farey import (
    FareyInterval,
    farey_intervals,
    farey_sequence,
    format_fraction,
    mediant,
    parse_fraction,
    totient_sum,
    totients,
)
from .lifting import generate_up_to, lift_fibers, lift_once, project
from .perm_core import (
    PermClass,
    Permutation,
    ascents,
    cds,
    delta,
    gamma,
    inverse,
    mod_m,
    psi,
    psi_inverse,
    shift,
    shift_closure,
    shift_equivalent,
    supermod_m,
)
from .perm_sets import (
    enumerate_class,
    enumerate_sos_recurrence,
    in_V,
    in_W,
    in_X,
    in_Y,
    in_Yprime,
    verify_theorems,
)
from .sos import (
    SuranyiTable,
    satisfies_sos_recurrence,
    sos_from_alpha,
    suranyi_table,
    tau_explicit,
    tau_from_alpha,
    tau_near_fraction,
    theta_ab,
    verify_invariants,
)
from .trees import (
    FareyTree,
    GenTree,
    build_farey_tree,
    build_gen_tree,
    check_isomorphism,
    export_tree,
)

__version__ = "0.1.0"
