"""Exact arithmetic for Mordell-Weil rank bounds in the Fermat curve tower."""
from .bounds import (
    BoundReport,
    CohomParams,
    FiltrationData,
    bound_report,
    chabauty_check,
    fermat_rank_bound_asymptotic,
    fermat_rank_bound_exact,
    filtration_h1_bound,
    h1_level_from_infinity,
    iwasawa_h1_bound,
    prop_fnrank_bound,
    subquotient_h1_bound,
    theorem_main_bound,
)
from .errors import (
    BudgetExceededError,
    HypothesisError,
    InconsistentOverrideError,
    LevelZeroError,
    NonAbelianError,
    ValidationError,
)
from .modchar import (
    Character,
    GaloisActionSpec,
    Orbit,
    PrimePower,
    all_orbits,
    char_exact_order,
    is_trivial_on_B,
    orbit_of,
    p_adic_valuation,
    primitive_character_count,
    stabilizer_order,
)
from .semidirect import (
    IrrepDatum,
    RepSpectrum,
    enumerate_irreps,
    fixed_dim_bound,
    fixed_space_dim,
    frobenius_fixed_dim,
    new_part_fixed_bound,
    split_by_B,
)
from .tower import (
    FieldDegrees,
    TowerLevel,
    TowerTable,
    fermat_genus,
    field_degrees,
    rank_sum,
    sum_growth_ratio,
    tower_level,
    tower_table,
)

__version__ = "0.1.0"
