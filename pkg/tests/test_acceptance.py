"""Acceptance criteria; each test prints one PASS/FAIL line (collected in the terminal summary).

Run alone with:  pytest tests/test_acceptance.py
"""
import io
import random
import time
from fractions import Fraction
from pathlib import Path

import pytest

import oracles
from fermat_ranks.bounds import (
    CohomParams,
    FiltrationData,
    chabauty_check,
    fermat_rank_bound_exact,
    filtration_h1_bound,
    iwasawa_h1_bound,
    prop_fnrank_bound,
    subquotient_h1_bound,
    theorem_main_bound,
)
from fermat_ranks.cli import run
from fermat_ranks.modchar import (
    GaloisActionSpec,
    PrimePower,
    all_orbits,
    char_exact_order,
    characters,
    orbit_of,
    primitive_character_count,
    stabilizer_order,
)
from fermat_ranks.semidirect import (
    enumerate_irreps,
    fixed_dim_bound,
    fixed_space_dim,
    frobenius_fixed_dim,
    random_spectrum,
)
from fermat_ranks.tower import fermat_genus, field_degrees, rank_sum, tower_level

GOLDEN = Path(__file__).parent / "golden"
ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for the criterion named by the test's docstring."""
    name = request.function.__doc__.strip().splitlines()[0]
    yield
    report = getattr(request.node, "rep_call", None)
    status = "PASS" if report is not None and report.passed else "FAIL"
    line = f"[{status}] {name}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_1_orbit_stabilizer(criterion):
    """1. orbit-stabilizer suite: brute force == closed forms, sizes sum to p^2n, primitive counts"""
    start = time.perf_counter()
    for p, n in [(3, 1), (3, 2), (5, 1), (5, 2), (3, 3)]:
        level = PrimePower(p, n)
        m = p**n
        action = GaloisActionSpec.full_units(level)
        units = oracles.units(m)
        assert action.order == len(units)

        brute = sorted(oracles.orbits(units, m))
        got = [(o.representative.pair, o.size) for o in all_orbits(action)]
        assert got == brute
        assert sum(size for _, size in got) == p ** (2 * n)

        for c in characters(level):
            k_order = oracles.exact_order(c.a, c.b, m)
            brute_stab = len(oracles.stabilizer(c.a, c.b, units, m))
            # full units: order p^k has orbit size phi(p^k), stabilizer p^(n-k)
            closed_size = oracles.totient(k_order) if k_order > 1 else 1
            closed_stab = action.order // closed_size
            o = orbit_of(c, action)
            assert stabilizer_order(c, action) == brute_stab == closed_stab
            assert o.size == closed_size == len(oracles.orbit(c.a, c.b, units, m))

        brute_primitive = sum(1 for c in characters(level) if oracles.exact_order(c.a, c.b, m) == m)
        assert primitive_character_count(level) == brute_primitive == p ** (2 * n) - p ** (2 * n - 2)
    assert primitive_character_count(PrimePower(3, 2)) == 72
    assert time.perf_counter() - start < 10


def test_criterion_2_representations(criterion):
    """2. representation suite: sum dim^2 = p^2n |H|, Frobenius oracle, trivial stabilizers, termwise fixed bound"""
    for p, n in oracles.odd_prime_powers(125):
        m = p**n
        level = PrimePower(p, n)
        for group in oracles.scalar_subgroups(m):
            action = GaloisActionSpec.scalar(level, sorted(group))
            irreps = enumerate_irreps(action)
            assert sum(ir.dim**2 for ir in irreps) == m * m * action.order
            for ir in irreps:
                assert fixed_space_dim(ir) == frobenius_fixed_dim(ir, action)
        full = GaloisActionSpec.full_units(level)
        for o in all_orbits(full):
            if char_exact_order(o.representative) == m:
                assert o.stabilizer_order == 1

    rng = random.Random(20021)
    actions = [GaloisActionSpec.full_units(PrimePower(3, 2)), GaloisActionSpec.full_units(PrimePower(5, 1))]
    actions += [GaloisActionSpec.scalar(PrimePower(3, 3), [10]), GaloisActionSpec.trivial(PrimePower(3, 1))]
    irreps = {a: enumerate_irreps(a) for a in actions}
    for _ in range(1000):
        a = rng.choice(actions)
        spec = random_spectrum(a, rng, irreps=irreps[a])
        for ir, mult in spec.constituents:
            assert fixed_space_dim(ir) <= fixed_dim_bound(ir)
        assert spec.fixed_dim <= spec.fixed_bound


def test_criterion_3_tower(criterion):
    """3. tower suite: genus oracle d <= 250, telescoping, S_3 = 43/2, S_6 = 719, closed form, growth bound"""
    for d in range(1, 251):
        assert fermat_genus(d) == oracles.lattice_genus(d)
    for p in (3, 5, 7):
        for n in range(11):
            assert sum(tower_level(p, i).dim_Jprime for i in range(n + 1)) == tower_level(p, n).dim_J
    degs3 = field_degrees(3, 10)
    assert rank_sum(3, 3, degs3) == Fraction(43, 2)
    assert rank_sum(3, 6, degs3) == Fraction(719)
    for p in (3, 5, 7):
        degs = field_degrees(p, 10)
        cap = Fraction(p + 1, 2 * (p - 1))
        for n in range(11):
            s = rank_sum(p, n, degs)
            assert s == oracles.closed_form_sum(p, n)
            assert s / p**n <= cap


def test_criterion_4_bound_assembly(criterion):
    """4. bound assembly: composition identity x1000, excess <= 8C/p^n, Chabauty boundary at C = 0"""
    rng = random.Random(4141)
    for _ in range(1000):
        dim_A = rng.randint(1, 10**6)
        fn_deg = rng.randint(1, 10**5)
        C = Fraction(rng.randint(0, 10**4), rng.randint(1, 97))
        params = CohomParams(h1_base=rng.randint(0, 50), iwasawa_C=C, mu_zero_asserted=True)
        lhs = theorem_main_bound(dim_A, iwasawa_h1_bound(params, fn_deg), trivial_action=True)
        assert lhs == prop_fnrank_bound(dim_A, fn_deg, C, mu_zero=True)

    for K_degree in (1, 2):
        for p in (3, 5, 7):
            degs = field_degrees(p, 10, K_degree=K_degree)
            for n in range(1, 11):
                dim_J = tower_level(p, n).dim_J
                if n >= 2:
                    for C in (Fraction(1), Fraction(4), Fraction(25, 3)):
                        bound = fermat_rank_bound_exact(p, n, degs, C, mu_zero=True)
                        excess = Fraction(bound) / dim_J - K_degree
                        assert 0 <= excess <= 8 * C / p**n
                if K_degree == 1:
                    assert chabauty_check(fermat_rank_bound_exact(p, n, degs, 0, mu_zero=True), dim_J) is False


def test_criterion_5_filtration(criterion):
    """5. filtration suite: (sum_{j>=i} r_j) h1, monotone in i, i = 0 equals the subquotient bound"""
    rng = random.Random(55)
    for _ in range(1000):
        ranks = [rng.randint(0, 30) for _ in range(rng.randint(0, 15))]
        h1 = rng.randint(0, 40)
        f = FiltrationData(tuple(ranks))
        values = []
        for i in range(len(ranks) + 1):
            v = filtration_h1_bound(f, h1, i)
            assert v == sum(ranks[i:]) * h1
            values.append(v)
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert values[0] == subquotient_h1_bound(sum(ranks), h1)


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    return run(argv, stdout=out, stderr=err), out.getvalue(), err.getvalue()


def test_criterion_6_cli_golden(criterion):
    """6. CLI golden files byte-identical; hypothesis flags gate bounds with exit 2"""
    runs = [
        (["bound", "--p", "3", "--n", "3", "--K-degree", "1", "--C", "0", "--mu-zero", "--h1-triviality"],
         "bound_p3_n3.json"),
        (["orbits", "--p", "3", "--n", "1", "--action", "full-units", "--format", "csv"], "orbits_p3_n1.csv"),
        (["filtration-bound", "--ranks", "2,1", "--h1", "3"], "filtration_2_1_h1_3.txt"),
    ]
    for argv, golden in runs:
        code, out, _ = _cli(argv)
        assert code == 0
        assert out.encode() == (GOLDEN / golden).read_bytes()
    assert '"exact_bound": "325"' in (GOLDEN / "bound_p3_n3.json").read_text()
    for argv in (
        ["bound", "--p", "3", "--n", "3", "--K-degree", "1", "--C", "0", "--h1-triviality"],
        ["bound", "--p", "3", "--n", "3", "--K-degree", "1", "--C", "0", "--mu-zero"],
        ["table", "--p", "3", "--n-max", "3"],
    ):
        code, out, err = _cli(argv)
        assert code == 2 and out == "" and "precondition" in err
