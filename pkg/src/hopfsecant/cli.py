"""Command-line front end: ``hopfsecant dims|profile|verify``.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import secant
from .polyring import GradedRing
from .verify import VerifyConfig, run_all

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3

LIMITS = {"vars": 3, "d": 5, "n_max": 4, "r": 3}


class InputError(Exception):
    pass


class LimitError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    ring_path: str | None = None
    vars: int | None = None
    r: int = 1
    d: int | None = None
    d_max: int | None = None
    n_max: int = 3
    fmt: str = "json"
    seed: int = 42
    trials: int = 100
    force: bool = False
    mode: str = "ordinary"

    def validate(self):
        if self.fmt not in ("json", "csv"):
            raise InputError(f"unknown format {self.fmt!r}")
        for name in ("vars", "r", "d", "d_max", "n_max"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise InputError(f"--{name.replace('_', '-')} must be positive")
        if self.trials < 0:
            raise InputError("--trials must be non-negative")
        if self.d is not None and self.d_max is not None:
            raise InputError("give --d or --d-max, not both")

    def degrees(self) -> list[int]:
        if self.d is not None:
            return [self.d]
        if self.d_max is not None:
            return list(range(1, self.d_max + 1))
        raise InputError("one of --d / --d-max is required")

    def load_ring(self) -> GradedRing:
        if self.ring_path is not None:
            try:
                return GradedRing.from_file(self.ring_path)
            except OSError as exc:
                raise InputError(f"cannot read ring spec: {exc}") from exc
            except ValueError as exc:  # includes JSON and polynomial syntax errors
                raise InputError(f"invalid ring spec: {exc}") from exc
        if self.vars is None:
            raise InputError("one of --ring / --vars is required")
        return GradedRing(self.vars, [])

    def check_limits(self, ring: GradedRing, degrees: list[int]):
        if self.force:
            return
        checks = [("vars", ring.nvars), ("d", max(degrees)), ("n_max", self.n_max), ("r", self.r)]
        for name, value in checks:
            if value > LIMITS[name]:
                raise LimitError(f"{name}={value} exceeds the default limit {LIMITS[name]}; "
                                 "pass --force to run anyway")


def cmd_dims(cfg: RunConfig, ring: GradedRing):
    I = secant.secant_ideal(ring, cfg.r)
    rows = [{"d": d, "n": n, "dim": I.dim(d, n)} for d in cfg.degrees() for n in range(1, cfg.n_max + 1)]
    nonzero = [row for row in rows if row["dim"]]
    summary = {"nonzero_cells": len(nonzero),
               "first_nonzero_n": min((row["n"] for row in nonzero), default=0)}
    return rows, summary, EXIT_OK


def cmd_profile(cfg: RunConfig, ring: GradedRing):
    degrees = cfg.degrees()
    if cfg.mode == "di":
        prof = secant.di_ideal_generator_profile(ring, cfg.r, max(degrees), cfg.n_max)
        rows = [row for row in prof.rows if row["d"] in degrees]
    else:
        rows = []
        for d in degrees:
            rows.extend(secant.ordinary_generator_profile(ring, cfg.r, d, cfg.n_max).rows)
    gen_ns = sorted({row["n"] for row in rows if row["new"] > 0})
    summary = {"max_n_with_new": max(gen_ns, default=0), "generator_degrees": gen_ns}
    return rows, summary, EXIT_OK


def cmd_verify(cfg: RunConfig, ring: GradedRing):
    vcfg = VerifyConfig(ring, d_max=max(cfg.degrees()), n_max=cfg.n_max)
    results = run_all(cfg.seed, cfg.trials, vcfg)
    rows = [{"suite": r.name, "trials": r.trials, "failures": r.failures,
             "status": "pass" if r.ok else "fail"} for r in results]
    failed = [r.name for r in results if not r.ok]
    summary = {"passed": not failed, "failed_suites": failed}
    return rows, summary, EXIT_OK if not failed else EXIT_VERIFY


COMMANDS = {"dims": cmd_dims, "profile": cmd_profile, "verify": cmd_verify}


def render(cfg: RunConfig, ring: GradedRing, rows: list[dict], summary: dict) -> str:
    if cfg.fmt == "csv":
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        return buf.getvalue()
    params = {"r": cfg.r, "d": cfg.degrees(), "n_max": cfg.n_max}
    if cfg.command == "profile":
        params["mode"] = cfg.mode
    if cfg.command == "verify":
        params.update(seed=cfg.seed, trials=cfg.trials)
        del params["r"]
    doc = {"ring": ring.to_spec(), "command": cfg.command, "params": params,
           "rows": rows, "summary": summary}
    return json.dumps(doc, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--ring", metavar="PATH", help='JSON ring spec {"vars": v, "relations": [...]}')
    src.add_argument("--vars", type=int, help="number of variables of a polynomial ring")
    common.add_argument("--r", type=int, default=1, help="secant order (default 1)")
    common.add_argument("--d", type=int, help="single inner degree")
    common.add_argument("--d-max", type=int, help="all inner degrees 1..D")
    common.add_argument("--n-max", type=int, default=3, help="largest outer degree (default 3)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--force", action="store_true", help="ignore the default size limits")

    parser = argparse.ArgumentParser(prog="hopfsecant", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dims", parents=[common], help="dimensions of secant ideal pieces")
    p = sub.add_parser("profile", parents=[common], help="where new generators appear")
    p.add_argument("--mode", choices=("ordinary", "di"), default="ordinary")
    v = sub.add_parser("verify", parents=[common], help="run the randomized identity suites")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--trials", type=int, default=100)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, ring_path=args.ring, vars=args.vars, r=args.r,
                    d=args.d, d_max=args.d_max, n_max=args.n_max, fmt=args.format,
                    force=args.force, mode=getattr(args, "mode", "ordinary"),
                    seed=getattr(args, "seed", 42), trials=getattr(args, "trials", 100))
    if cfg.command == "verify":
        if cfg.vars is None and cfg.ring_path is None:
            cfg.vars = 2
        if cfg.d is None and cfg.d_max is None:
            cfg.d_max = 3
    try:
        cfg.validate()
        ring = cfg.load_ring()
        cfg.check_limits(ring, cfg.degrees())
        rows, summary, code = COMMANDS[cfg.command](cfg, ring)
    except InputError as exc:
        print(f"hopfsecant: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitError as exc:
        print(f"hopfsecant: limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    sys.stdout.write(render(cfg, ring, rows, summary))
    return code


if __name__ == "__main__":
    sys.exit(main())
