"""Dimension bounds for H^1 and the Mordell-Weil rank bounds built from them.

Every function returns an exact value: an ``int`` when the result is
integral, otherwise a ``Fraction``.  The arithmetic inputs (the base H^1
dimension and the Iwasawa constant C) are supplied by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from .errors import HypothesisError, ValidationError
from .tower import FieldDegrees, rank_sum, sum_growth_ratio, tower_level

Exact = Union[int, Fraction]


def exact(x) -> Exact:
    """Normalise a rational: integral values come back as ``int``."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _nonneg(name: str, x) -> None:
    if x < 0:
        raise ValidationError(f"{name} must be non-negative, got {x}")


@dataclass(frozen=True)
class FiltrationData:
    """Ranks r_0, ..., r_{N-1} of the successive quotients of a unipotent filtration."""

    ranks: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        for r in self.ranks:
            _nonneg("filtration rank", r)

    @property
    def dim(self) -> int:
        return sum(self.ranks)

    def __add__(self, other: "FiltrationData") -> "FiltrationData":
        return FiltrationData(self.ranks + other.ranks)


def filtration_h1_bound(filtration: FiltrationData, h1: int, start: int = 0) -> int:
    """(r_start + r_{start+1} + ...) * h1, the bound on dim H^1 of the start-th step."""
    if not 0 <= start <= len(filtration.ranks):
        raise ValidationError(f"start index {start} outside 0..{len(filtration.ranks)}")
    _nonneg("h1", h1)
    return sum(filtration.ranks[start:]) * h1


def subquotient_h1_bound(dim_V: int, h1: int) -> int:
    _nonneg("dim_V", dim_V)
    _nonneg("h1", h1)
    return dim_V * h1


def theorem_main_bound(dim_A: int, h1, *, trivial_action: bool = False) -> Exact:
    """Bound 2 * h1 * dim A on rank A(F) for a subquotient A of a tower Jacobian.

    A[p] has dimension 2 dim A and is a subquotient of the mod-p homology
    of the level curve, so the descent rank A(F) <= dim H^1(G_T(F), A[p])
    combines with the subquotient bound.  ``trivial_action`` asserts that
    G_F acts trivially on H_1(X, F_p).
    """
    if not trivial_action:
        raise HypothesisError(
            "the bound needs G_F to act trivially on H_1(X, F_p) (pass --h1-triviality)"
        )
    if dim_A < 1:
        raise ValidationError(f"dim A must be >= 1, got {dim_A}")
    _nonneg("h1", h1)
    return exact(2 * Fraction(h1) * dim_A)


def h1_level_from_infinity(dim_infinity_fixed: int) -> int:
    _nonneg("dim_infinity_fixed", dim_infinity_fixed)
    return 1 + dim_infinity_fixed


@dataclass(frozen=True)
class CohomParams:
    h1_base: int = 1
    F_degree_over_Q: int = 2
    iwasawa_C: Fraction = Fraction(0)
    mu_zero_asserted: bool = False

    def __post_init__(self):
        object.__setattr__(self, "iwasawa_C", Fraction(self.iwasawa_C))
        _nonneg("h1_base", self.h1_base)
        _nonneg("C", self.iwasawa_C)
        if self.F_degree_over_Q < 1:
            raise ValidationError("[F:Q] must be positive")

    @property
    def r2(self) -> Fraction:
        """Complex places of F, which is totally complex."""
        return Fraction(self.F_degree_over_Q, 2)


def _require_mu(mu_zero: bool) -> None:
    if not mu_zero:
        raise HypothesisError(
            "the bound needs the cyclotomic mu-invariant to vanish (pass --mu-zero)"
        )


def iwasawa_h1_bound(params: CohomParams, Fn_degree_over_Q: int) -> Exact:
    """(1/2)([F_n:Q] + C), the bound on dim H^1(G_T(F_n), F_p)."""
    _require_mu(params.mu_zero_asserted)
    if Fn_degree_over_Q < 1:
        raise ValidationError("[F_n:Q] must be positive")
    return exact((Fn_degree_over_Q + params.iwasawa_C) / 2)


def prop_fnrank_bound(dim_A: int, Fn_degree_over_Q: int, C, *, mu_zero: bool = False) -> Exact:
    """dim A * ([F_n:Q] + C), the bound on rank A(F_n)."""
    _require_mu(mu_zero)
    if dim_A < 1:
        raise ValidationError(f"dim A must be >= 1, got {dim_A}")
    if Fn_degree_over_Q < 1:
        raise ValidationError("[F_n:Q] must be positive")
    _nonneg("C", C)
    return exact(dim_A * (Fn_degree_over_Q + Fraction(C)))


def fermat_rank_bound_exact(p: int, n: int, degrees: FieldDegrees, C, *, mu_zero: bool = False) -> Exact:
    """[K:Q] dim J_n + C * S_n, the bound on rank J_n(K)."""
    _require_mu(mu_zero)
    _nonneg("C", C)
    dim_J = tower_level(p, n).dim_J
    return exact(degrees.K_degree * dim_J + Fraction(C) * rank_sum(p, n, degrees))


@dataclass(frozen=True)
class AsymptoticBound:
    """[K:Q] dim J_n + C' p^n per level, with C' = C * max S_n / p^n.

    Heuristic: C' is the supremum over the computed range only.
    """

    C_prime: Exact
    argmax_n: int
    bounds: Tuple[Exact, ...]
    heuristic: bool = True


def fermat_rank_bound_asymptotic(p: int, n_max: int, degrees: FieldDegrees, C) -> AsymptoticBound:
    if n_max < 1:
        raise ValidationError("n_max must be >= 1")
    _nonneg("C", C)
    ratios = [sum_growth_ratio(p, n, degrees) for n in range(1, n_max + 1)]
    best = max(ratios)
    argmax = 1 + ratios.index(best)
    C_prime = Fraction(C) * best
    bounds = tuple(
        exact(degrees.K_degree * tower_level(p, n).dim_J + C_prime * p**n)
        for n in range(n_max + 1)
    )
    return AsymptoticBound(exact(C_prime), argmax, bounds)


def chabauty_check(rank_bound, dim_J: int) -> bool:
    """Whether the bound certifies rank J < dim J."""
    return Fraction(rank_bound) < dim_J


@dataclass(frozen=True)
class LevelBounds:
    n: int
    dim_J: int
    S_n: Exact
    theorem_main: Optional[Exact]
    prop_fnrank: Optional[Exact]
    fermat_exact: Exact
    fermat_asymptotic: Exact
    chabauty_exact: Optional[bool]
    chabauty_asymptotic: Optional[bool]


@dataclass(frozen=True)
class BoundReport:
    p: int
    n_max: int
    params: CohomParams
    degrees: FieldDegrees
    C_prime: Exact
    levels: Tuple[LevelBounds, ...]
    kinds: Tuple[str, ...] = ("theorem-main", "prop-fnrank", "fermat-exact", "fermat-asymptotic")
    warnings: Tuple[str, ...] = field(default=())


def bound_report(
    p: int,
    n_max: int,
    degrees: FieldDegrees,
    params: CohomParams,
    *,
    trivial_action: bool = False,
    levels: Optional[Sequence[int]] = None,
) -> BoundReport:
    """Assemble every bound for levels 0..n_max (or the given subset).

    The theorem-main and prop-fnrank columns are left empty at n = 0, where
    the proper Jacobian is zero-dimensional; theorem-main is also left empty
    unless ``trivial_action`` is asserted.
    """
    _require_mu(params.mu_zero_asserted)
    C = params.iwasawa_C
    asym = fermat_rank_bound_asymptotic(p, max(n_max, 1), degrees, C)
    rows = []
    for n in levels if levels is not None else range(n_max + 1):
        dim_J = tower_level(p, n).dim_J
        main = fn = None
        if dim_J >= 1:
            if trivial_action:
                main = theorem_main_bound(dim_J, params.h1_base, trivial_action=True)
            fn = prop_fnrank_bound(dim_J, degrees.over_Q[n], C, mu_zero=True)
        ex = fermat_rank_bound_exact(p, n, degrees, C, mu_zero=True)
        asy = asym.bounds[n]
        rows.append(
            LevelBounds(
                n=n,
                dim_J=dim_J,
                S_n=exact(rank_sum(p, n, degrees)),
                theorem_main=main,
                prop_fnrank=fn,
                fermat_exact=ex,
                fermat_asymptotic=asy,
                chabauty_exact=chabauty_check(ex, dim_J) if dim_J >= 1 else None,
                chabauty_asymptotic=chabauty_check(asy, dim_J) if dim_J >= 1 else None,
            )
        )
    warnings = ["fermat-asymptotic uses C' = C * max S_n/p^n over the computed range (heuristic)"]
    if params.h1_base == 1 and params.iwasawa_C == 0:
        warnings.append("h1_base = 1 and C = 0 are illustrative defaults unless supplied from arithmetic data")
    return BoundReport(p, n_max, params, degrees, asym.C_prime, tuple(rows), warnings=tuple(warnings))
