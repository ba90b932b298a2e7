"""Command-line front end; every subcommand writes one JSON document.

Exit status: 0 when all checks pass, 1 when a check fails, 2 for usage
errors (including unknown types), 3 when a bad prime is supplied.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .chevalley import structure_constants
from .expmod import RealizationError, realize_big_cell, unipotent_order, verify_sl2_relations
from .orbits import bala_carter_catalogue
from .parabolic import NotDistinguishedError, grading, is_distinguished
from .rootdata import RootDataError, build_root_system
from .selftest import run_selftest
from .sl2 import RichardsonSearchError, TripleError, build_triple, verify_triple
from .springer import FAMILIES, SetupError, springer_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BAD_PRIME = 0, 1, 2, 3
SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


class BadPrime(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    type_label: str | None = None
    primes: list = field(default_factory=list)
    output: str | None = None
    seed: int = 0
    levi: str = "all"
    parabolic: str = "empty"
    max_rank: int = 4
    family: str | None = None
    n: int | None = None
    m: int = 1
    samples: int = 100


def _parse_subset(text: str, rank: int, what: str) -> frozenset:
    t = text.strip().lower()
    if t == "all":
        return frozenset(range(rank))
    if t in ("empty", "none", ""):
        return frozenset()
    try:
        idx = [int(x) for x in t.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--{what} expects 'all', 'empty' or 1-based indices like 1,3") from None
    if any(i < 1 or i > rank for i in idx):
        raise UsageError(f"--{what} index out of range 1..{rank}")
    return frozenset(i - 1 for i in idx)


def _root_system(cfg: RunConfig):
    if not cfg.type_label:
        raise UsageError("--type is required")
    try:
        return build_root_system(cfg.type_label)
    except RootDataError as exc:
        raise UsageError(str(exc)) from None


def _check_primes(R, primes):
    for p in primes:
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise UsageError(f"{p} is not prime")
        if p in R.bad_primes:
            raise BadPrime(f"{p} is bad for {R.label}")


def _selected_grading(cfg: RunConfig):
    R = _root_system(cfg)
    _check_primes(R, cfg.primes)
    J = _parse_subset(cfg.levi, R.rank, "levi")
    I = _parse_subset(cfg.parabolic, R.rank, "parabolic")
    if not I <= J:
        raise UsageError("--parabolic must be contained in --levi")
    g = grading(structure_constants(R), I, levi=J)
    if not is_distinguished(g):
        raise UsageError(f"parabolic {sorted(i + 1 for i in I)} is not distinguished in the Levi "
                         f"{sorted(j + 1 for j in J)}")
    return g


def _cmd_orbits(cfg):
    R = _root_system(cfg)
    _check_primes(R, cfg.primes)
    recs = bala_carter_catalogue(structure_constants(R), cfg.primes)
    return [r.to_json() for r in recs], True


def _cmd_triple(cfg):
    g = _selected_grading(cfg)
    base = build_triple(g)
    out = {"schema": SCHEMA_VERSION, "triple": base.to_json(), "rational_check": verify_triple(base),
           "reductions": []}
    ok = out["rational_check"]
    for p in cfg.primes:
        T = build_triple(g, p)
        entry = {"p": p, "X": T.X.to_json(), "denominator_primes": sorted(T.denominator_primes)}
        if p in T.denominator_primes:
            entry["pass"] = False
            entry["reason"] = f"{p} divides a denominator of Y"
        else:
            entry["pass"] = verify_triple(T, p)
        ok &= entry["pass"]
        out["reductions"].append(entry)
    return out, ok


def _cmd_verify(cfg):
    if not cfg.primes:
        raise UsageError("verify needs at least one --prime")
    g = _selected_grading(cfg)
    reports = []
    ok = True
    for p in cfg.primes:
        T = build_triple(g, p)
        try:
            B = realize_big_cell(T, p)
        except RealizationError as exc:
            reports.append({"p": p, "all_pass": False, "gate": exc.gate, "detail": exc.detail})
            ok = False
            continue
        rep = verify_sl2_relations(B)
        rep["order_x1"] = unipotent_order(B.x_of(1), p)
        rep["order_y1"] = unipotent_order(B.y_of(1), p)
        ok &= rep["all_pass"]
        reports.append(rep)
    return {"schema": SCHEMA_VERSION, "type": g.root_system.label,
            "levi": sorted(j + 1 for j in g.levi), "parabolic": sorted(i + 1 for i in g.I),
            "reports": reports}, ok


def _cmd_springer(cfg):
    if cfg.family is None or cfg.n is None:
        raise UsageError("springer-check needs --family and --n")
    if cfg.family not in FAMILIES:
        raise UsageError(f"family must be one of {', '.join(FAMILIES)} (SL is not supported)")
    if len(cfg.primes) != 1:
        raise UsageError("springer-check takes exactly one --prime")
    try:
        rep = springer_suite(cfg.family, cfg.n, cfg.primes[0], cfg.m, cfg.samples, cfg.seed)
    except (SetupError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    return rep, rep["all_pass"]


def _cmd_selftest(cfg):
    rep = run_selftest(seed=cfg.seed, max_rank=cfg.max_rank)
    return rep, rep["all_pass"]


COMMANDS = {
    "orbits": _cmd_orbits,
    "triple": _cmd_triple,
    "verify": _cmd_verify,
    "springer-check": _cmd_springer,
    "selftest": _cmd_selftest,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        payload, ok = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except BadPrime as exc:
        print(f"error: refused, {exc}", file=stderr)
        return EXIT_BAD_PRIME
    except (RichardsonSearchError, TripleError, NotDistinguishedError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_label", help="root system label, e.g. G2 or A2xA1")
    common.add_argument("--prime", dest="primes", type=int, action="append", default=[],
                        help="prime (repeatable)")
    common.add_argument("--out", dest="output", help="write JSON here instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--levi", default="all", help="'all', 'empty' or 1-based indices")
    common.add_argument("--parabolic", default="empty", help="'all', 'empty' or 1-based indices")
    common.add_argument("--max-rank", dest="max_rank", type=int, default=4,
                        help="largest rank used by selftest")
    parser = argparse.ArgumentParser(prog="sl2lift", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("orbits", "triple", "verify", "selftest"):
        sub.add_parser(name, parents=[common])
    sp = sub.add_parser("springer-check", parents=[common])
    sp.add_argument("--family", help="GL, Sp or SO")
    sp.add_argument("--n", type=int, help="matrix size")
    sp.add_argument("--m", type=int, default=1, help="field degree over F_p")
    sp.add_argument("--samples", type=int, default=100)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items()})
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
