"""Genus, Jacobian dimensions and cyclotomic field degrees along the Fermat tower.

Level i is the Fermat curve x^d + y^d + z^d = 0 with d = p^i.  Its Jacobian
J_i is isogenous to the sum of the new parts J'_0, ..., J'_i, where J'_i is
the cokernel of J_{i-1} -> J_i.  Field degrees track F_i = K(zeta_p)(mu_{p^i}).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Tuple

from .errors import InconsistentOverrideError, ValidationError
from .modchar import PrimePower


def fermat_genus(d: int) -> int:
    """Genus of the smooth plane curve of degree d."""
    if d < 1:
        raise ValidationError(f"degree must be >= 1, got {d}")
    return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class TowerLevel:
    level: PrimePower
    genus: int
    dim_J: int
    dim_Jprime: int

    @property
    def n(self) -> int:
        return self.level.n

    @property
    def degree(self) -> int:
        return self.level.value


def tower_level(p: int, n: int) -> TowerLevel:
    level = PrimePower(p, n)
    genus = fermat_genus(level.value)
    prev = fermat_genus(level.value // p) if n >= 1 else genus
    return TowerLevel(level, genus, genus, genus - prev)


@dataclass(frozen=True)
class FieldDegrees:
    """[K:Q], [F:Q] and the per-level degrees [F_i:Q] for i = 0..n."""

    p: int
    K_degree: int
    F_degree: int
    over_Q: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.over_Q) - 1

    @property
    def over_K(self) -> Tuple[int, ...]:
        return tuple(d // self.K_degree for d in self.over_Q)

    def over_F(self, i: int) -> int:
        return self.over_Q[i] // self.F_degree


def _validate_degrees(p: int, K_degree: int, over_Q: Tuple[int, ...]) -> None:
    F_degree = over_Q[0]
    if F_degree % K_degree or (p - 1) % (F_degree // K_degree):
        raise InconsistentOverrideError(
            f"[F:Q] = {F_degree} is not [K:Q] = {K_degree} times a divisor of p - 1"
        )
    if len(over_Q) > 1 and over_Q[1] != F_degree:
        raise InconsistentOverrideError("F_1 = F(mu_p) = F, so [F_1:Q] must equal [F:Q]")
    for i in range(len(over_Q) - 1):
        lo, hi = over_Q[i], over_Q[i + 1]
        if hi % lo or p % (hi // lo):
            raise InconsistentOverrideError(
                f"[F_{i + 1}:F_{i}] = {hi}/{lo} must be an integer dividing p = {p}"
            )


def field_degrees(
    p: int,
    n: int,
    K_degree: int = 1,
    linearly_disjoint: bool = True,
    overrides: Optional[Mapping[int, int]] = None,
) -> FieldDegrees:
    """Degrees [F_i:Q] for i = 0..n.

    With ``linearly_disjoint`` (K meets Q(zeta_{p^infinity}) only in Q), the
    tower grows maximally: [F:Q] = [K:Q](p - 1) and [F_i:F] = p^(i-1) for
    i >= 1.  ``overrides`` maps i to an explicit [F_i:Q] and replaces the
    computed value; when the field is not linearly disjoint every level
    must be overridden.
    """
    level = PrimePower(p, n)
    if K_degree < 1:
        raise ValidationError(f"[K:Q] must be >= 1, got {K_degree}")
    overrides = dict(overrides or {})
    for i in overrides:
        if not 0 <= i <= n:
            raise InconsistentOverrideError(f"override for level {i} outside 0..{n}")
    if not linearly_disjoint and set(overrides) != set(range(n + 1)):
        raise ValidationError("without linear disjointness every level 0..n needs an override")
    base = K_degree * (level.p - 1)
    over_Q = tuple(
        overrides.get(i, base * level.p ** max(i - 1, 0)) for i in range(n + 1)
    )
    _validate_degrees(level.p, K_degree, over_Q)
    return FieldDegrees(level.p, K_degree, over_Q[0], over_Q)


def rank_sum(p: int, n: int, degrees: FieldDegrees) -> Fraction:
    """S_n = sum over i = 0..n of dim J'_i / [F_i:K]."""
    if degrees.n < n:
        raise ValidationError(f"degrees cover levels 0..{degrees.n}, need 0..{n}")
    over_K = degrees.over_K
    return sum(
        (Fraction(tower_level(p, i).dim_Jprime, over_K[i]) for i in range(n + 1)),
        Fraction(0),
    )


def sum_growth_ratio(p: int, n: int, degrees: FieldDegrees) -> Fraction:
    """S_n / p^n."""
    return rank_sum(p, n, degrees) / p**n


@dataclass(frozen=True)
class TowerTable:
    levels: Tuple[TowerLevel, ...]
    degrees: FieldDegrees
    partial_sums: Tuple[Fraction, ...]


def tower_table(p: int, n: int, degrees: Optional[FieldDegrees] = None) -> TowerTable:
    if degrees is None:
        degrees = field_degrees(p, n)
    levels = tuple(tower_level(p, i) for i in range(n + 1))
    sums, running = [], Fraction(0)
    over_K = degrees.over_K
    for lv in levels:
        running += Fraction(lv.dim_Jprime, over_K[lv.n])
        sums.append(running)
    return TowerTable(levels, degrees, tuple(sums))
