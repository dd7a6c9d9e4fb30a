"""Power residues, multiplicative orders, quadratic characters and norm forms."""

from .arith import (
    CongruenceSystem,
    Factorization,
    carmichael_lambda,
    crt_coprime,
    crt_general,
    euler_phi,
    factorize,
    is_prime,
    mod_pow,
    primitive_root,
)
from .norms import (
    NormMatrix,
    PolyMod,
    adjugate,
    build_matrix,
    build_matrix_general,
    det_norm,
    det_norm_general,
    det_norm_mod_p,
    poly_mul_mod,
)
from .orders import (
    OrderRecord,
    nth_roots_of_unity,
    order_bruteforce,
    order_composite,
    order_fast,
    order_prime_power,
    order_two_power,
    phi_quotient_exponent,
    power_sum_mod,
)
from .quadratic import (
    Subgroup,
    build_L4q,
    build_L4r_squarefree,
    build_Lstar,
    classify_prime,
    half_order_subgroups_containing_minus1,
    legendre,
    legendre_general,
)
from .residues import (
    ResidueSolution,
    all_nth_roots,
    check_prime_exponent_equivalence,
    construct_norm_p,
    find_nontrivial_zero,
    has_nth_root,
    is_irreducible_Fp,
    is_irreducible_Q,
    norm_equals_p_obstruction,
)
from .search import SearchReport, TableRow, scan_table, search_triple

__version__ = "0.1.0"
