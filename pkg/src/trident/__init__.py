"""trident: exact construction and classification of the congruence covers
of triangle groups, with the Galois (PSL2 vs PGL2) dichotomy, genus and
field-of-moduli bookkeeping, trace-triple machinery over finite fields, and
the census of low-genus projective-linear Galois Belyi curves."""

__version__ = "0.1.0"

from .census import CensusRow, census, census_tsv, hurwitz_group_bound
from .congruence import (
    CurveReport,
    GeneratorTriple,
    ReducedLambdas,
    P_N_order,
    explicit_generators,
    genus_of_quotient,
    p_group_orders,
    reduce_lambda_mod_p,
    reduce_triple,
    surjectivity_transfer_guaranteed,
    theorem_a,
    theorem_b_report,
)
from .cyclotomic import INF, CycElement, cyclotomic_polynomial, lam, lam2, zeta
from .errors import TridentError
from .fields import (
    AbelianField,
    D_field,
    D_pprime,
    E_field,
    F_field,
    F_pprime,
    adjoin_sqrt_pstar,
    splits_completely_in_F_over_E,
)
from .macbeath import (
    Classification,
    ProjectiveDetail,
    classify,
    classify_up_to_signs,
    construct_triple,
    dform,
    macbeath_census,
    subgroup_oracle,
    triple_orders,
)
from .projective import FqCtx, fq_ctx, group_label, group_order, pgl2_order, psl2_order
from .triangle import (
    Admissibility,
    admissible_prime,
    beta,
    chi,
    classify_triple,
    genus_from_order,
    is_hyperbolic,
    validate_triple,
)

__all__ = [
    "INF",
    "CycElement",
    "TridentError",
    "cyclotomic_polynomial",
    "lam",
    "lam2",
    "zeta",
    "AbelianField",
    "D_field",
    "D_pprime",
    "E_field",
    "F_field",
    "F_pprime",
    "adjoin_sqrt_pstar",
    "splits_completely_in_F_over_E",
    "Admissibility",
    "admissible_prime",
    "beta",
    "chi",
    "classify_triple",
    "genus_from_order",
    "is_hyperbolic",
    "validate_triple",
    "FqCtx",
    "fq_ctx",
    "group_label",
    "group_order",
    "pgl2_order",
    "psl2_order",
    "Classification",
    "ProjectiveDetail",
    "classify",
    "classify_up_to_signs",
    "construct_triple",
    "dform",
    "macbeath_census",
    "subgroup_oracle",
    "triple_orders",
    "CurveReport",
    "GeneratorTriple",
    "ReducedLambdas",
    "P_N_order",
    "explicit_generators",
    "genus_of_quotient",
    "p_group_orders",
    "reduce_lambda_mod_p",
    "reduce_triple",
    "surjectivity_transfer_guaranteed",
    "theorem_a",
    "theorem_b_report",
    "CensusRow",
    "census",
    "census_tsv",
    "hurwitz_group_bound",
]
