"""Irreducible representations of G = (Z/p^nZ)^2 x| H for abelian H.

Each irreducible is induced from the stabilizer subgroup G_i of a
character chi_i, twisted by a character psi of the stabilizer H_i; it is
recorded here by its orbit and the index of psi, since every bound only
needs its dimension [H:H_i] and whether psi is trivial.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import cyclotomic
from .errors import LevelZeroError, NonAbelianError, ValidationError
from .modchar import (
    DEFAULT_BUDGET,
    Character,
    Element,
    GaloisActionSpec,
    Orbit,
    PrimePower,
    all_orbits,
    char_exact_order,
    stabilizer,
)

StabilizerCharacter = Dict[Element, Fraction]


@dataclass(frozen=True, order=True)
class IrrepDatum:
    """One irreducible rho_{i,psi}; ``psi_index == 0`` is the trivial psi."""

    orbit: Orbit
    psi_index: int
    dim: int
    fixed_dim: int

    @property
    def psi_is_trivial(self) -> bool:
        return self.psi_index == 0

    @property
    def index(self) -> int:
        """[H:H_i], the orbit size."""
        return self.orbit.size


@dataclass(frozen=True)
class RepSpectrum:
    level: PrimePower
    action: GaloisActionSpec
    constituents: Tuple[Tuple[IrrepDatum, int], ...] = ()

    def __post_init__(self):
        for irrep, mult in self.constituents:
            if irrep.orbit.representative.level != self.level:
                raise ValidationError("constituent level does not match spectrum level")
            if irrep.orbit.group_order != self.action.order:
                raise ValidationError("constituent was built for a different acting group")
            if mult < 0:
                raise ValidationError("multiplicities must be non-negative")

    @property
    def dim(self) -> int:
        return sum(m * irrep.dim for irrep, m in self.constituents)

    @property
    def fixed_dim(self) -> int:
        return sum(m * fixed_space_dim(irrep) for irrep, m in self.constituents)

    @property
    def fixed_bound(self) -> Fraction:
        return sum((m * fixed_dim_bound(irrep) for irrep, m in self.constituents), Fraction(0))


def _require_abelian(action: GaloisActionSpec) -> None:
    if not action.is_abelian:
        raise NonAbelianError("irreducible representations are only built for abelian H")


def stabilizer_characters(chi: Character, action: GaloisActionSpec) -> List[StabilizerCharacter]:
    """All characters of the (abelian) stabilizer of chi, trivial first.

    Values are exponents t in [0, 1) standing for exp(2*pi*i*t).  The group
    is built up one cyclic extension at a time: adjoining g with g^m in the
    current subgroup S, each character of S extends in m ways, one for each
    m-th root of its value at g^m.
    """
    _require_abelian(action)
    elems = stabilizer(chi, action)
    one = action.identity
    subgroup = [one]
    chars: List[StabilizerCharacter] = [{one: Fraction(0)}]
    members = {one}
    for g in elems:
        if g in members:
            continue
        powers = [one]
        x = g
        while x not in members:
            powers.append(x)
            x = action.compose(x, g)
        m = len(powers)
        # x == g^m lies in the current subgroup
        new_subgroup = [action.compose(s, gk) for gk in powers for s in subgroup]
        new_chars = []
        for c in chars:
            target = c[x]
            for j in range(m):
                w = (target + j) / m
                ext = {}
                for k, gk in enumerate(powers):
                    for s in subgroup:
                        ext[action.compose(s, gk)] = (c[s] + k * w) % 1
                new_chars.append(ext)
        subgroup = new_subgroup
        members = set(subgroup)
        chars = new_chars
    return chars


@lru_cache(maxsize=4096)
def _cached_stabilizer_characters(chi: Character, action: GaloisActionSpec):
    return tuple(stabilizer_characters(chi, action))


def enumerate_irreps(action: GaloisActionSpec, budget: int = DEFAULT_BUDGET) -> List[IrrepDatum]:
    """Every rho_{i,psi}, sorted by orbit representative then psi index."""
    _require_abelian(action)
    out = []
    for orbit in all_orbits(action, budget):
        for j in range(orbit.stabilizer_order):
            out.append(IrrepDatum(orbit, j, orbit.size, 1 if j == 0 else 0))
    return out


def fixed_space_dim(irrep: IrrepDatum) -> int:
    return 1 if irrep.psi_is_trivial else 0


def fixed_dim_bound(irrep: IrrepDatum) -> Fraction:
    return Fraction(irrep.dim, irrep.index)


@lru_cache(maxsize=64)
def _conjugacy_data(action: GaloisActionSpec) -> Dict[Element, Tuple[int, Tuple[Element, ...]]]:
    # element -> (centralizer order, conjugacy class)
    data = {}
    for h in action.elements:
        cls = {action.compose(action.compose(x, h), action.inverse(x)) for x in action.elements}
        data[h] = (action.order // len(cls), tuple(cls))
    return data


def frobenius_fixed_dim(irrep: IrrepDatum, action: GaloisActionSpec) -> int:
    """dim (rho_{i,psi})^H from (1/|H|) sum_h trace(Res_H rho)(h), Res_H rho = Ind psi.

    Computed by cyclotomic-exact averaging of the induced character, so it
    does not consult the trivial-psi rule at all.
    """
    psi = _cached_stabilizer_characters(irrep.orbit.representative, action)[irrep.psi_index]
    data = _conjugacy_data(action)
    terms = []
    for h in action.elements:
        cent, cls = data[h]
        terms.extend((cent, psi[c]) for c in cls if c in psi)
    total = cyclotomic.rational_value(terms)
    assert total is not None, "a sum over a whole group of character values is rational"
    value = total / (len(psi) * action.order)
    assert value.denominator == 1
    return int(value)


def split_by_B(spectrum: RepSpectrum) -> Tuple[RepSpectrum, RepSpectrum]:
    """Split into the B-invariant part and the new part where B acts nontrivially."""
    if spectrum.level.n == 0:
        raise LevelZeroError("B is undefined at level n = 0")
    top = spectrum.level.value
    invariant, new = [], []
    for irrep, mult in spectrum.constituents:
        if char_exact_order(irrep.orbit.representative) == top:
            new.append((irrep, mult))
        else:
            invariant.append((irrep, mult))
    return (
        RepSpectrum(spectrum.level, spectrum.action, tuple(invariant)),
        RepSpectrum(spectrum.level, spectrum.action, tuple(new)),
    )


def new_part_fixed_bound(new_part_dim: int, h_order: int) -> Fraction:
    """|H|^-1 dim W', the bound on dim (W')^H."""
    if h_order < 1:
        raise ValidationError("h_order must be positive")
    if new_part_dim < 0:
        raise ValidationError("new_part_dim must be non-negative")
    return Fraction(new_part_dim, h_order)


def random_spectrum(
    action: GaloisActionSpec,
    rng: random.Random,
    max_constituents: int = 8,
    max_multiplicity: int = 4,
    irreps: Optional[Sequence[IrrepDatum]] = None,
) -> RepSpectrum:
    """A hypothetical spectrum with random constituents and multiplicities."""
    if irreps is None:
        irreps = enumerate_irreps(action)
    k = rng.randint(0, max_constituents)
    picks = Counter(rng.choice(irreps) for _ in range(k))
    constituents = tuple(
        (irrep, picks[irrep] * rng.randint(1, max_multiplicity)) for irrep in sorted(picks)
    )
    return RepSpectrum(action.level, action, constituents)


def spectrum_from(action: GaloisActionSpec, items: Iterable[Tuple[IrrepDatum, int]]) -> RepSpectrum:
    return RepSpectrum(action.level, action, tuple(items))
