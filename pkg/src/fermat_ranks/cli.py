"""Command-line front end.

Exit codes: 0 on success, 2 on validation errors (including a missing
hypothesis flag), 3 when brute-force enumeration exceeds its budget.
Rationals are always rendered as "num/den" strings; JSON output also
carries an "approx" block of floats for plotting.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import bounds, modchar, semidirect, tower
from .errors import BudgetExceededError, FermatRanksError, ValidationError

FORMATS = ("json", "csv", "plain")
ACTIONS = ("full-units", "trivial", "scalar", "matrix")

# keys echoed in the "config" block, per command
COMMAND_KEYS = {
    "orbits": ("p", "n", "action", "generators", "budget"),
    "irreps": ("p", "n", "action", "generators", "budget"),
    "tower": ("p", "n", "K_degree", "degree_overrides"),
    "bound": ("p", "n", "K_degree", "C", "h1_base", "mu_zero", "h1_triviality", "degree_overrides"),
    "filtration-bound": ("ranks", "h1", "start"),
    "table": ("p", "n_max", "K_degree", "C", "h1_base", "mu_zero", "h1_triviality", "degree_overrides"),
}

DEFAULTS: Dict[str, Any] = {
    "action": "full-units",
    "generators": [],
    "budget": modchar.DEFAULT_BUDGET,
    "K_degree": 1,
    "degree_overrides": {},
    "C": "0",
    "h1_base": 1,
    "mu_zero": False,
    "h1_triviality": False,
    "start": 0,
}


def rat(x) -> str:
    return str(Fraction(x))


# argument parsing


def _int_list(text: str) -> List[int]:
    text = text.strip()
    return [int(t) for t in text.split(",")] if text else []


def _generators(text: str) -> list:
    """'2,4' -> [2, 4]; '1,1,0,1;2,0,0,2' -> [[1, 1, 0, 1], [2, 0, 0, 2]]."""
    parts = [p for p in text.split(";") if p.strip()]
    if ";" in text:
        return [_int_list(p) for p in parts]
    return _int_list(text)


def _override(text: str):
    try:
        i, d = text.split("=")
        return int(i), int(d)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LEVEL=DEGREE, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermat-ranks",
        description="Exact bookkeeping for rank bounds in the Fermat curve tower.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    S = argparse.SUPPRESS

    def common(sp):
        sp.add_argument("--format", choices=FORMATS, default=S)
        sp.add_argument("--output", default=S, help="write here instead of stdout")
        sp.add_argument("--config", default=S, help="JSON config (same schema as the echoed config)")

    def level(sp, n_flag="--n"):
        sp.add_argument("--p", type=int, default=S)
        sp.add_argument(n_flag, type=int, default=S)

    def action(sp):
        sp.add_argument("--action", choices=ACTIONS, default=S)
        sp.add_argument(
            "--generators", type=_generators, default=S,
            help="units '2,4' for scalar; matrices 'a,b,c,d;a,b,c,d' for matrix",
        )
        sp.add_argument("--budget", type=int, default=S)

    def degrees(sp):
        sp.add_argument("--K-degree", dest="K_degree", type=int, default=S)
        sp.add_argument(
            "--degree-override", dest="degree_overrides", type=_override, action="append",
            default=S, metavar="LEVEL=DEGREE", help="explicit [F_i:Q]; repeatable",
        )

    def hypotheses(sp):
        sp.add_argument("--C", default=S, help="Iwasawa constant, a non-negative rational")
        sp.add_argument("--h1-base", dest="h1_base", type=int, default=S)
        sp.add_argument("--mu-zero", dest="mu_zero", action="store_true", default=S)
        sp.add_argument("--h1-triviality", dest="h1_triviality", action="store_true", default=S)

    sp = sub.add_parser("orbits", help="orbits of H on the characters of (Z/p^nZ)^2")
    level(sp), action(sp), common(sp)
    sp = sub.add_parser("irreps", help="irreducible representations of (Z/p^nZ)^2 x| H")
    level(sp), action(sp), common(sp)
    sp = sub.add_parser("tower", help="genus, Jacobian dimensions and field degrees for levels 0..n")
    level(sp), degrees(sp), common(sp)
    sp = sub.add_parser("bound", help="all rank bounds at level n")
    level(sp), degrees(sp), hypotheses(sp), common(sp)
    sp = sub.add_parser("filtration-bound", help="H^1 bound from a unipotent filtration")
    sp.add_argument("--ranks", type=_int_list, default=S)
    sp.add_argument("--h1", type=int, default=S)
    sp.add_argument("--start", type=int, default=S)
    common(sp)
    sp = sub.add_parser("table", help="tower ladder and bounds for levels 0..n-max")
    level(sp, "--n-max"), degrees(sp), hypotheses(sp), common(sp)
    return parser


def resolve_config(ns: argparse.Namespace) -> Dict[str, Any]:
    """Merge defaults, then the --config file, then explicit flags."""
    command = ns.command
    given = vars(ns)
    cfg: Dict[str, Any] = {k: DEFAULTS[k] for k in COMMAND_KEYS[command] if k in DEFAULTS}
    cfg["format"] = "plain" if command == "filtration-bound" else "json"
    if "config" in given:
        with open(given["config"], encoding="utf-8") as fh:
            loaded = json.load(fh)
        if "config" in loaded:
            loaded = loaded["config"]
        for k, v in loaded.items():
            if k in COMMAND_KEYS[command] or k == "format":
                cfg[k] = v
    for k, v in given.items():
        if k in COMMAND_KEYS[command] or k == "format":
            cfg[k] = v
    cfg["command"] = command
    for k in COMMAND_KEYS[command]:
        if k not in cfg:
            flag = "--" + k.replace("_", "-")
            raise ValidationError(f"missing required option {flag}")
    if "degree_overrides" in cfg:
        ov = cfg["degree_overrides"]
        items = ov.items() if isinstance(ov, dict) else ov
        cfg["degree_overrides"] = {str(int(i)): int(d) for i, d in sorted(items, key=lambda t: int(t[0]))}
    if "C" in cfg:
        try:
            C = Fraction(str(cfg["C"]))
        except ValueError:
            raise ValidationError(f"C must be a rational number, got {cfg['C']!r}")
        cfg["C"] = rat(C)
    if cfg["format"] not in FORMATS:
        raise ValidationError(f"format must be one of {', '.join(FORMATS)}")
    return cfg


# commands


def _action(cfg) -> modchar.GaloisActionSpec:
    level = modchar.PrimePower(cfg["p"], cfg["n"])
    kind, gens = cfg["action"], cfg["generators"]
    if kind == "full-units":
        return modchar.GaloisActionSpec.full_units(level)
    if kind == "trivial":
        return modchar.GaloisActionSpec.trivial(level)
    if kind == "scalar":
        if any(isinstance(g, list) for g in gens):
            raise ValidationError("scalar generators must be integers")
        return modchar.GaloisActionSpec.scalar(level, gens)
    if kind == "matrix":
        if gens and all(isinstance(g, int) for g in gens) and len(gens) == 4:
            gens = [gens]
        if not all(isinstance(g, list) and len(g) == 4 for g in gens):
            raise ValidationError("matrix generators must be 'a,b,c,d' groups separated by ';'")
        return modchar.GaloisActionSpec.matrix(level, [((a, b), (c, d)) for a, b, c, d in gens])
    raise ValidationError(f"unknown action {kind!r}")


def _degrees(cfg, n) -> tower.FieldDegrees:
    overrides = {int(i): d for i, d in cfg["degree_overrides"].items()}
    return tower.field_degrees(cfg["p"], n, cfg["K_degree"], overrides=overrides)


def cmd_orbits(cfg):
    action = _action(cfg)
    orbits = modchar.all_orbits(action, cfg["budget"])
    rows = [
        {
            "a": o.representative.a,
            "b": o.representative.b,
            "size": o.size,
            "stabilizer_order": o.stabilizer_order,
            "exact_order": modchar.char_exact_order(o.representative),
        }
        for o in orbits
    ]
    summary = {"group_order": action.order, "orbit_count": len(rows), "total_size": sum(r["size"] for r in rows)}
    return {"rows": rows, "summary": summary}, []


def cmd_irreps(cfg):
    action = _action(cfg)
    irreps = semidirect.enumerate_irreps(action, cfg["budget"])
    rows = [
        {
            "a": ir.orbit.representative.a,
            "b": ir.orbit.representative.b,
            "psi_index": ir.psi_index,
            "psi_trivial": ir.psi_is_trivial,
            "dim": ir.dim,
            "fixed_dim": semidirect.fixed_space_dim(ir),
            "fixed_dim_bound": rat(semidirect.fixed_dim_bound(ir)),
        }
        for ir in irreps
    ]
    summary = {
        "group_order": action.order,
        "irrep_count": len(rows),
        "sum_dim_squared": sum(ir.dim**2 for ir in irreps),
    }
    return {"rows": rows, "summary": summary}, []


def cmd_tower(cfg):
    p, n = cfg["p"], cfg["n"]
    degrees = _degrees(cfg, n)
    table = tower.tower_table(p, n, degrees)
    rows = []
    for lv, s in zip(table.levels, table.partial_sums):
        rows.append(
            {
                "n": lv.n,
                "p_n": lv.degree,
                "genus": lv.genus,
                "dim_J": lv.dim_J,
                "dim_Jprime": lv.dim_Jprime,
                "Fn_over_Q": degrees.over_Q[lv.n],
                "Fn_over_K": degrees.over_K[lv.n],
                "S_n": rat(s),
                "S_n_over_pn": rat(s / lv.degree),
            }
        )
    return {"rows": rows}, []


def _params(cfg, F_degree):
    return bounds.CohomParams(
        h1_base=cfg["h1_base"],
        F_degree_over_Q=F_degree,
        iwasawa_C=Fraction(cfg["C"]),
        mu_zero_asserted=cfg["mu_zero"],
    )


def cmd_bound(cfg):
    p, n = cfg["p"], cfg["n"]
    if not cfg["mu_zero"]:
        raise bounds.HypothesisError("precondition failed: mu-invariant zero not asserted (pass --mu-zero)")
    if not cfg["h1_triviality"]:
        raise bounds.HypothesisError(
            "precondition failed: trivial G_F action on H_1(X, F_p) not asserted (pass --h1-triviality)"
        )
    degrees = _degrees(cfg, max(n, 1))
    report = bounds.bound_report(
        p, max(n, 1), degrees, _params(cfg, degrees.F_degree), trivial_action=True, levels=[n]
    )
    lv = report.levels[0]
    results = {
        "n": n,
        "p_n": p**n,
        "dim_J": lv.dim_J,
        "K_degree": degrees.K_degree,
        "Fn_over_Q": degrees.over_Q[n],
        "S_n": rat(lv.S_n),
        "theorem_main_bound": None if lv.theorem_main is None else rat(lv.theorem_main),
        "prop_fnrank_bound": None if lv.prop_fnrank is None else rat(lv.prop_fnrank),
        "exact_bound": rat(lv.fermat_exact),
        "C_prime": rat(report.C_prime),
        "asymptotic_bound": rat(lv.fermat_asymptotic),
        "chabauty_exact": lv.chabauty_exact,
        "chabauty_asymptotic": lv.chabauty_asymptotic,
    }
    return results, list(report.warnings)


def cmd_filtration_bound(cfg):
    filtration = bounds.FiltrationData(tuple(cfg["ranks"]))
    value = bounds.filtration_h1_bound(filtration, cfg["h1"], cfg["start"])
    return {"bound": rat(value), "dim_V": filtration.dim}, []


def cmd_table(cfg):
    p, n_max = cfg["p"], cfg["n_max"]
    if n_max < 1:
        raise ValidationError("precondition failed: --n-max must be >= 1")
    if not cfg["mu_zero"]:
        raise bounds.HypothesisError("precondition failed: mu-invariant zero not asserted (pass --mu-zero)")
    degrees = _degrees(cfg, n_max)
    report = bounds.bound_report(
        p, n_max, degrees, _params(cfg, degrees.F_degree), trivial_action=cfg["h1_triviality"]
    )
    rows = []
    for lv in report.levels:
        pn = p**lv.n
        rows.append(
            {
                "n": lv.n,
                "p_n": pn,
                "genus": lv.dim_J,
                "dim_Jprime": tower.tower_level(p, lv.n).dim_Jprime,
                "Fn_over_Q": degrees.over_Q[lv.n],
                "S_n": rat(lv.S_n),
                "S_n_over_pn": rat(Fraction(lv.S_n) / pn),
                "exact_bound": rat(lv.fermat_exact),
                "asymptotic_bound": rat(lv.fermat_asymptotic),
            }
        )
    return {"rows": rows, "C_prime": rat(report.C_prime)}, list(report.warnings)


COMMANDS = {
    "orbits": cmd_orbits,
    "irreps": cmd_irreps,
    "tower": cmd_tower,
    "bound": cmd_bound,
    "filtration-bound": cmd_filtration_bound,
    "table": cmd_table,
}


# rendering


def _approx(obj):
    """Floats for every rational-string field, keyed like the original."""
    out = {}
    for k, v in obj.items():
        if isinstance(v, str) and k not in ("action",):
            try:
                out[k] = float(Fraction(v))
            except ValueError:
                pass
    return out


def render(cfg, results, warnings) -> str:
    fmt = cfg["format"]
    if fmt == "json":
        results = dict(results)
        if "rows" in results:
            results["approx"] = {"rows": [_approx(r) for r in results["rows"]]}
            rest = _approx({k: v for k, v in results.items() if k not in ("rows", "approx")})
            results["approx"].update(rest)
        else:
            results["approx"] = _approx(results)
        echo = {k: v for k, v in cfg.items() if k != "output"}
        doc = {"config": echo, "results": results, "warnings": warnings}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if "rows" in results:
        rows = results["rows"]
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
            return buf.getvalue()
        lines = ["\t".join(rows[0])] if rows else []
        lines += ["\t".join(_plain(v) for v in r.values()) for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(results), lineterminator="\n")
        writer.writeheader()
        writer.writerow({k: _plain(v) for k, v in results.items()})
        return buf.getvalue()
    if cfg["command"] == "filtration-bound":
        return results["bound"] + "\n"
    return "".join(f"{k}: {_plain(v)}\n" for k, v in results.items())


def _plain(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(ns)
        results, warnings = COMMANDS[cfg["command"]](cfg)
        text = render(cfg, results, warnings)
    except BudgetExceededError as exc:
        print(f"error: {exc}; use closed-form commands or raise --budget", file=stderr)
        return 3
    except (FermatRanksError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    out_path = getattr(ns, "output", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())
