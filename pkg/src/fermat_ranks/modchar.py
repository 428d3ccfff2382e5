"""Residues mod p^n, characters of (Z/p^nZ)^2 and group actions on them.

A character of (Z/p^nZ)^2 is stored as a residue pair (a, b) through the
self-duality (a, b) -> [(s, t) -> a*s + b*t mod p^n].  Acting groups are
either subgroups of the unit group (Z/p^nZ)^* acting by scalars, or finite
groups of invertible 2x2 matrices mod p^n acting on the column vector (a, b).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Tuple, Union

from .errors import BudgetExceededError, LevelZeroError, ValidationError

DEFAULT_BUDGET = 10**6

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
Element = Union[int, Matrix]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True, order=True)
class PrimePower:
    """The level data p, n with p an odd prime."""

    p: int
    n: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p) or self.p < 3:
            raise ValidationError(f"p must be an odd prime, got {self.p!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise ValidationError(f"n must be a non-negative integer, got {self.n!r}")

    @property
    def value(self) -> int:
        return self.p**self.n

    def __str__(self):
        return f"{self.p}^{self.n}"


@dataclass(frozen=True, order=True)
class Character:
    """The character (s, t) -> a*s + b*t mod p^n of (Z/p^nZ)^2."""

    level: PrimePower
    a: int
    b: int

    def __post_init__(self):
        m = self.level.value
        if not (0 <= self.a < m and 0 <= self.b < m):
            raise ValidationError(f"({self.a}, {self.b}) is not a residue pair mod {m}")

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.a, self.b)

    def evaluate(self, s: int, t: int) -> int:
        """Return the exponent k such that the value is exp(2*pi*i*k/p^n)."""
        return (self.a * s + self.b * t) % self.level.value


def characters(level: PrimePower) -> Iterator[Character]:
    """All p^(2n) characters in lexicographic order."""
    m = level.value
    for a in range(m):
        for b in range(m):
            yield Character(level, a, b)


def _matmul(x: Matrix, y: Matrix, m: int) -> Matrix:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return (
        ((a * e + b * g) % m, (a * f + b * h) % m),
        ((c * e + d * g) % m, (c * f + d * h) % m),
    )


def _matrix_inverse(x: Matrix, m: int) -> Matrix:
    (a, b), (c, d) = x
    inv = pow((a * d - b * c) % m, -1, m) if m > 1 else 0
    return ((d * inv % m, -b * inv % m), (-c * inv % m, a * inv % m))


def primitive_root(level: PrimePower) -> int:
    """Smallest generator of the cyclic group (Z/p^nZ)^*."""
    m = level.value
    if m == 1:
        return 0
    p = level.p
    phi = m - m // p
    prime_factors = [q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)]
    if level.n > 1:
        prime_factors.append(p)
    for g in range(2, m):
        if g % p and all(pow(g, phi // q, m) != 1 for q in prime_factors):
            return g
    raise AssertionError("unreachable: (Z/p^nZ)^* is cyclic for odd p")


@dataclass(frozen=True)
class GaloisActionSpec:
    """A finite group H acting on the characters of level ``level``.

    ``kind`` is ``"scalar"`` (generators are units mod p^n) or ``"matrix"``
    (generators are invertible 2x2 matrices mod p^n).  The group is the
    closure of the generators; two specs with the same generated group give
    identical results everywhere.
    """

    level: PrimePower
    kind: str
    generators: Tuple[Element, ...] = ()
    elements: Tuple[Element, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.level.value
        if self.kind == "scalar":
            gens = tuple(int(u) % m for u in self.generators)
            for u in gens:
                if math.gcd(u, m) != 1 and m > 1:
                    raise ValidationError(f"{u} is not a unit mod {m}")
        elif self.kind == "matrix":
            gens = tuple(
                ((int(r[0][0]) % m, int(r[0][1]) % m), (int(r[1][0]) % m, int(r[1][1]) % m))
                for r in self.generators
            )
            for g in gens:
                (a, b), (c, d) = g
                if m > 1 and math.gcd(a * d - b * c, m) != 1:
                    raise ValidationError(f"{g} is not invertible mod {m}")
        else:
            raise ValidationError(f"unknown action kind {self.kind!r}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "elements", self._close())

    # constructors

    @classmethod
    def full_units(cls, level: PrimePower) -> "GaloisActionSpec":
        return cls(level, "scalar", (primitive_root(level),))

    @classmethod
    def scalar(cls, level: PrimePower, generators: Iterable[int]) -> "GaloisActionSpec":
        return cls(level, "scalar", tuple(generators))

    @classmethod
    def matrix(cls, level: PrimePower, generators: Iterable[Matrix]) -> "GaloisActionSpec":
        return cls(level, "matrix", tuple(generators))

    @classmethod
    def trivial(cls, level: PrimePower) -> "GaloisActionSpec":
        return cls(level, "scalar", ())

    # group structure

    @property
    def identity(self) -> Element:
        one = 1 % self.level.value
        if self.kind == "scalar":
            return one
        return ((one, 0), (0, one))

    def compose(self, x: Element, y: Element) -> Element:
        m = self.level.value
        if self.kind == "scalar":
            return x * y % m
        return _matmul(x, y, m)

    def inverse(self, x: Element) -> Element:
        m = self.level.value
        if self.kind == "scalar":
            return pow(x, -1, m) if m > 1 else 0
        return _matrix_inverse(x, m)

    def _close(self) -> Tuple[Element, ...]:
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = self.compose(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            self.compose(x, y) == self.compose(y, x) for x in gens for y in gens
        )

    def apply(self, h: Element, pair: Tuple[int, int]) -> Tuple[int, int]:
        m = self.level.value
        a, b = pair
        if self.kind == "scalar":
            return (h * a % m, h * b % m)
        (r, s), (t, u) = h
        return ((r * a + s * b) % m, (t * a + u * b) % m)

    def act(self, h: Element, chi: Character) -> Character:
        return Character(self.level, *self.apply(h, chi.pair))


@dataclass(frozen=True, order=True)
class Orbit:
    representative: Character
    size: int
    stabilizer_order: int

    @property
    def group_order(self) -> int:
        return self.size * self.stabilizer_order


def p_adic_valuation(x: int, level: PrimePower) -> int:
    """Largest k <= n with p^k | x; zero has valuation n."""
    if x == 0:
        return level.n
    k = 0
    while k < level.n and x % level.p == 0:
        x //= level.p
        k += 1
    return k


def char_exact_order(chi: Character) -> int:
    lv = chi.level
    v = min(p_adic_valuation(chi.a, lv), p_adic_valuation(chi.b, lv))
    return lv.p ** (lv.n - v)


def _check_levels(chi: Character, action: GaloisActionSpec) -> None:
    if chi.level != action.level:
        raise ValidationError(f"character level {chi.level} != action level {action.level}")


def stabilizer(chi: Character, action: GaloisActionSpec) -> Tuple[Element, ...]:
    """Elements of H fixing chi, sorted."""
    _check_levels(chi, action)
    if action.kind == "scalar":
        # u * chi == chi  iff  u == 1 mod ord(chi)
        order = char_exact_order(chi)
        return tuple(u for u in action.elements if u % order == 1 % order)
    return tuple(h for h in action.elements if action.apply(h, chi.pair) == chi.pair)


def stabilizer_order(chi: Character, action: GaloisActionSpec) -> int:
    return len(stabilizer(chi, action))


def orbit_members(chi: Character, action: GaloisActionSpec) -> Sequence[Tuple[int, int]]:
    _check_levels(chi, action)
    return sorted({action.apply(h, chi.pair) for h in action.elements})


def orbit_of(chi: Character, action: GaloisActionSpec) -> Orbit:
    members = orbit_members(chi, action)
    rep = Character(chi.level, *members[0])
    return Orbit(rep, len(members), action.order // len(members))


def _check_budget(level: PrimePower, budget: int) -> None:
    total = level.value**2
    if total > budget:
        raise BudgetExceededError(total, budget)


def all_orbits(action: GaloisActionSpec, budget: int = DEFAULT_BUDGET) -> list[Orbit]:
    """Every orbit of H on the characters, sorted by representative.

    Scanning characters in lexicographic order means the first unvisited
    character met is the minimum of its orbit.
    """
    level = action.level
    _check_budget(level, budget)
    m = level.value
    seen = bytearray(m * m)
    orbits = []
    for a in range(m):
        for b in range(m):
            if seen[a * m + b]:
                continue
            members = {action.apply(h, (a, b)) for h in action.elements}
            for x, y in members:
                seen[x * m + y] = 1
            orbits.append(
                Orbit(Character(level, a, b), len(members), action.order // len(members))
            )
    return orbits


def is_trivial_on_B(chi: Character) -> bool:
    """Whether chi kills B = ker((Z/p^nZ)^2 -> (Z/p^(n-1)Z)^2)."""
    if chi.level.n == 0:
        raise LevelZeroError("B is undefined at level n = 0")
    return char_exact_order(chi) < chi.level.value


def primitive_character_count(level: PrimePower) -> int:
    """Number of characters of exact order p^n."""
    if level.n == 0:
        raise LevelZeroError("primitive characters need n >= 1")
    return level.p ** (2 * level.n) - level.p ** (2 * level.n - 2)
