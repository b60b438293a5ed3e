"""Command-line front end: JSON/CSV/plain-table reports for every module.

Exit status: 0 all requested checks pass, 1 a check failed, 2 usage or
parse error, 3 enumeration budget exceeded (a partial report is still
written).  JSON output is byte-identical for identical configurations:
keys are sorted, the sampling seed is part of the configuration, and
every numeric field is exact (big integers appear as decimal strings).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass

from .ascover import ASCover, CoverError, deuring_shafarevich, riemann_hurwitz
from .curve import AMCurve, BudgetError, DEFAULT_BUDGET
from .curve import short_orbits as curve_short_orbits
from .gf import is_prime, make_field
from .grp import Subgroup, full_group, verify_presentation
from .pipeline import (check_diagonal_quotient,
                       check_fibered_system_and_substitution,
                       check_fixed_field_translations,
                       check_quotient_by_translation,
                       negative_substitution_corpus, run_all)
from .curve import substitution_is_invariance, verify_invariance
from .poly import PolyError, parse_rational
from .zeta import count_points, fit_l_polynomial

SCHEMA = "amlab/1"

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


@dataclass
class RunConfig:
    subcommand: str
    p: int
    k: int = 1
    c: int = 1
    a: int = 1
    b: int = 0
    cover: str | None = None
    budget: int = DEFAULT_BUDGET
    json_path: str | None = None
    csv_path: str | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.p < 3 or not is_prime(self.p) or self.p % 2 == 0:
            raise ValueError(f"--p must be an odd prime, got {self.p}")
        if self.k < 1:
            raise ValueError(f"--k must be >= 1, got {self.k}")
        if self.budget <= 0:
            raise ValueError(f"--budget must be positive, got {self.budget}")
        if self.c % self.p == 0:
            raise ValueError("--c must be nonzero mod p")
        if self.subcommand == "genus" and not self.cover:
            raise ValueError("genus needs --cover <expr>")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="amlab",
        description="exact verification toolkit for the Artin-Mumford curve "
                    "and its automorphism group over small prime fields")
    sub = ap.add_subparsers(dest="subcommand", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--k", type=int, default=1, help="extension degree")
    common.add_argument("--c", type=int, default=1, help="curve constant c")
    common.add_argument("--a", type=int, default=1, help="parameter a")
    common.add_argument("--b", type=int, default=0, help="parameter b")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max field-element iterations for exhaustive scans")
    common.add_argument("--json", dest="json_path", metavar="PATH",
                        help="write the JSON report here")
    common.add_argument("--csv", dest="csv_path", metavar="PATH",
                        help="write a flat CSV report here")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for sampled checks")

    sub.add_parser("aut-check", parents=[common],
                   help="group presentation + symbolic curve invariance")
    sub.add_parser("orbits", parents=[common],
                   help="orbit decomposition of the translation group")
    sub.add_parser("count", parents=[common],
                   help="rational points over F_{p^k}")
    sub.add_parser("zeta", parents=[common],
                   help="point counts and exact L-polynomial fit")
    g = sub.add_parser("genus", parents=[common],
                       help="genus and p-rank of a cover y^p - y = f(x)")
    g.add_argument("--cover", metavar="EXPR",
                   help='rational right-hand side, e.g. "2x + 1/x"')
    sub.add_parser("quotients", parents=[common],
                   help="translation and diagonal quotient checks")
    sub.add_parser("verify-theorem", parents=[common],
                   help="the full verification chain")
    return ap


def _cmd_count(cfg: RunConfig) -> tuple[int, dict]:
    n = count_points(AMCurve.of(cfg.p, cfg.c), cfg.k, budget=cfg.budget)
    return EXIT_PASS, {"p": cfg.p, "k": cfg.k, "c": cfg.c, "count": n}


def _cmd_zeta(cfg: RunConfig) -> tuple[int, dict]:
    g = (cfg.p - 1) ** 2
    if cfg.p ** g > cfg.budget:
        raise BudgetError(
            f"fitting needs counts over fields up to {cfg.p}^{g} elements, "
            f"beyond budget {cfg.budget}")
    curve = AMCurve.of(cfg.p, cfg.c)
    counts = [count_points(curve, k, budget=cfg.budget) for k in range(1, g + 1)]
    rep = fit_l_polynomial(counts, cfg.p, g)
    ok = rep.functional_equation_ok and rep.p_rank_from_zeta == g
    return (EXIT_PASS if ok else EXIT_CHECK_FAILED), rep.to_json_dict()


def _cmd_genus(cfg: RunConfig) -> tuple[int, dict]:
    spec = make_field(cfg.p, 1)
    try:
        f = parse_rational(spec, cfg.cover)
    except PolyError as e:
        raise ValueError(f"cannot parse --cover: {e}")
    try:
        cover, u = ASCover.of(cfg.p, f).reduced()
        rh = riemann_hurwitz(cover)
        ds = deuring_shafarevich(cover)
    except CoverError as e:
        return EXIT_CHECK_FAILED, {"p": cfg.p, "cover": cfg.cover, "error": str(e)}
    body = rh.to_json_dict()
    body["p_rank"] = ds.p_rank
    body["provenance"]["p_rank"] = "ds"
    body["cover"] = cfg.cover
    body["reduced_rhs"] = repr(cover.rhs)
    body["reduction_substitution"] = repr(u)
    return EXIT_PASS, body


def _cmd_aut_check(cfg: RunConfig) -> tuple[int, dict]:
    pres = verify_presentation(cfg.p)
    curve = AMCurve.of(cfg.p, cfg.c)
    elements = full_group(cfg.p)
    exhaustive = len(elements) <= 1000
    if not exhaustive:
        import random
        elements = random.Random(cfg.seed).sample(elements, 200)
    inv_ok = all(verify_invariance(g, curve) for g in elements)
    corpus = negative_substitution_corpus(cfg.p, 100, cfg.seed)
    neg_ok = not any(substitution_is_invariance(curve, gx, gy) for gx, gy in corpus)
    ok = inv_ok and neg_ok and all(r["status"] == "pass" for r in pres)
    body = {
        "p": cfg.p,
        "presentation": pres,
        "invariance": {"checked": len(elements),
                       "mode": "exhaustive" if exhaustive else "sampled",
                       "status": "pass" if inv_ok else "fail"},
        "negative_corpus": {"size": len(corpus),
                            "status": "pass" if neg_ok else "fail"},
    }
    return (EXIT_PASS if ok else EXIT_CHECK_FAILED), body


def _cmd_orbits(cfg: RunConfig) -> tuple[int, dict]:
    rep = curve_short_orbits(AMCurve.of(cfg.p, cfg.c),
                             Subgroup.translations(cfg.p),
                             k=cfg.k, budget=cfg.budget)
    ok = (len(rep.short_orbits) == 2
          and all(o.size == cfg.p for o in rep.short_orbits))
    return (EXIT_PASS if ok else EXIT_CHECK_FAILED), rep.to_json_dict()


def _cmd_quotients(cfg: RunConfig) -> tuple[int, dict]:
    checks = (check_quotient_by_translation(cfg.p, cfg.c)
              + check_diagonal_quotient(cfg.p, cfg.c, budget=cfg.budget)
              + check_fixed_field_translations(cfg.p, a=cfg.a, b=cfg.b)
              + check_fibered_system_and_substitution(cfg.p, a=cfg.a, b=cfg.b))
    ok = all(c.status == "pass" for c in checks)
    return (EXIT_PASS if ok else EXIT_CHECK_FAILED), {
        "p": cfg.p, "c": cfg.c, "a": cfg.a, "b": cfg.b,
        "checks": [c.to_json_dict() for c in checks],
    }


def _cmd_verify_theorem(cfg: RunConfig) -> tuple[int, dict]:
    rep = run_all(cfg.p, budget=cfg.budget, seed=cfg.seed)
    return (EXIT_PASS if rep.overall_pass else EXIT_CHECK_FAILED), rep.to_json_dict()


_DISPATCH = {
    "count": _cmd_count,
    "zeta": _cmd_zeta,
    "genus": _cmd_genus,
    "aut-check": _cmd_aut_check,
    "orbits": _cmd_orbits,
    "quotients": _cmd_quotients,
    "verify-theorem": _cmd_verify_theorem,
}


def dispatch(cfg: RunConfig) -> tuple[int, dict]:
    """Run one subcommand; returns (exit status, report body)."""
    cfg.validate()
    code, body = _DISPATCH[cfg.subcommand](cfg)
    report = {"schema": SCHEMA, "command": cfg.subcommand,
              "seed": cfg.seed, "report": body}
    return code, report


def _flatten(prefix: str, obj, rows: list[tuple[str, str]]):
    if isinstance(obj, dict):
        for k in sorted(obj):
            _flatten(f"{prefix}.{k}" if prefix else str(k), obj[k], rows)
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            _flatten(f"{prefix}[{i}]", v, rows)
    else:
        rows.append((prefix, "" if obj is None else str(obj)))


def _render_text(report: dict) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", report, rows)
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_USAGE
    cfg = RunConfig(
        subcommand=args.subcommand, p=args.p, k=args.k, c=args.c,
        a=args.a, b=args.b, cover=getattr(args, "cover", None),
        budget=args.budget, json_path=args.json_path,
        csv_path=args.csv_path, seed=args.seed)
    try:
        code, report = dispatch(cfg)
    except BudgetError as e:
        report = {"schema": SCHEMA, "command": cfg.subcommand,
                  "seed": cfg.seed,
                  "report": {"error": f"budget exceeded: {e}", "partial": True}}
        code = EXIT_BUDGET
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        print(f"usage: see `amlab {cfg.subcommand} --help`", file=sys.stderr)
        return EXIT_USAGE

    text = _render_text(report)
    print(text)
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(report, fh, sort_keys=True, indent=2)
            fh.write("\n")
    if cfg.csv_path:
        rows: list[tuple[str, str]] = []
        _flatten("", report, rows)
        with open(cfg.csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["field", "value"])
            writer.writerows(rows)
    return code


if __name__ == "__main__":
    sys.exit(main())
