"""Generalized Motzkin numbers and central trinomial coefficients mod p.

Three independent evaluation routes (integer oracle, recurrences, base-p
digit products), reflection-symmetry verification, and exact rational
densities of residues, cross-validated by closed-form counting and
enumeration.
"""

from .modmath import (
    ExactRatio,
    MalformedWordError,
    Modulus,
    NonInvertibleError,
    NotPrimeError,
    from_digits,
    inverse_table,
    is_prime,
    mod_inverse,
    mod_pow,
    primes_up_to,
    to_digits,
)
from .oracle import (
    WEIGHT_MOTZKIN,
    WEIGHT_ONE,
    WEIGHT_ONE_MINUS_X,
    WEIGHT_ONE_PLUS_X,
    WEIGHT_X,
    ct,
    m_values_recurrence,
    oracle_ct,
    oracle_prefix,
    oracle_seq_mod,
    poly_mul,
    t_values_recurrence,
)
from .tables import (
    MTable,
    NAMED_COMBOS,
    SeqParams,
    ShiftCombo,
    TTable,
    UnsupportedWidthError,
    combo_table,
    m_table,
    motzkin_combo,
    t_table,
)
from .digits import CanonicalForm, HypothesisViolation, combo_eval, m_eval, parse_tail, t_eval, word_eval
from .symmetry import (
    SymmetryReport,
    check_m_symmetry,
    check_t_symmetry,
    motzkin_pm2_criterion,
    t_pm1_square_check,
)
from .density import (
    BudgetExceededError,
    DegenerateCaseError,
    DensityReport,
    count_zeros_enum,
    count_zeros_exact,
    density_zero_generic,
    density_zero_motzkin,
    density_zero_named,
    empirical_value_counts,
    exact_zero_fraction,
    multiplicative_generates,
    subgroup_order,
    transition_graph_regular,
    value_densities,
)
from .scans import (
    SweepResult,
    a113305_density,
    a113305_test,
    equality_sweep,
    mult_conj_check,
    pm2_sweep,
    sweep,
)

__version__ = "0.1.0"
