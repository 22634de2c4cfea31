"""Suite runner and ``verify`` command line interface.

Suites bundle the registered properties; a run is deterministic given
(seed, dimension, trials): every trial draws from its own generator
seeded by (seed, property index, trial index), so results are
order-independent, parallelizable, and any failing sample is replayable
with ``--replay suite:seed:index``.

Exit codes: 0 all properties pass, 1 a property failed, 2 usage error.
The environment variable VERIFY_THREADS caps the worker pool (default 1,
single-threaded).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .core import GeometryError, SpaceConfig
from .properties import REGISTRY, SUITE_NAMES, Property, suite_properties

__all__ = [
    "SuiteConfig",
    "PropertyReport",
    "SuiteReport",
    "UsageError",
    "run_suite",
    "replay",
    "main",
]

REPORT_SCHEMA = "chgeom-report/1"

# --trials value at which every property runs its reference trial count
REFERENCE_TRIALS = 10000


class UsageError(Exception):
    """Bad suite name or configuration; maps to exit code 2."""


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    k: int = 2
    trials: int = 1000
    seed: int = 0
    tol: float | None = None
    format: str = "text"

    def __post_init__(self) -> None:
        if self.suite not in (*SUITE_NAMES, "all"):
            raise UsageError(f"unknown suite {self.suite!r}; "
                             f"choose from {', '.join((*SUITE_NAMES, 'all'))}")
        if self.k < 1:
            raise UsageError("dimension must be a positive integer")
        if self.trials < 1:
            raise UsageError("trials must be >= 1")
        if self.tol is not None and not self.tol > 0:
            raise UsageError("tolerance must be positive")
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")


@dataclass
class PropertyReport:
    name: str
    statement: str
    module: str
    tol: float
    trials: int
    max_residual: float
    worst_trial: int
    passed: bool
    skipped: bool = False

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "statement": self.statement,
            "module": self.module,
            "tol": self.tol,
            "trials": self.trials,
            "max_residual": self.max_residual,
            "worst_trial": self.worst_trial,
            "pass": self.passed,
            "skipped": self.skipped,
        }


@dataclass
class SuiteReport:
    suite: str
    config: dict
    properties: list = field(default_factory=list)
    wall_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def as_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "config": self.config,
            "pass": self.passed,
            "properties": [p.as_dict() for p in self.properties],
            "wall_ms": self.wall_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  (k={self.config['k']}, "
                 f"trials={self.config['trials']}, seed={self.config['seed']})"]
        for p in self.properties:
            status = "SKIP" if p.skipped else ("PASS" if p.passed else "FAIL")
            lines.append(
                f"  [{status}] {p.name:<36} max_residual={p.max_residual:9.3e}  "
                f"tol={p.tol:7.1e}  trials={p.trials}"
            )
            if not p.passed:
                lines.append(
                    f"         worst trial {p.worst_trial}; replay with "
                    f"--replay {self.suite}:{self.config['seed']}:{p.worst_trial}"
                )
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"suite {self.suite}: {verdict}  ({self.wall_ms:.0f} ms)")
        return "\n".join(lines)


def _trial_rng(seed: int, prop_index: int, trial: int) -> np.random.Generator:
    return np.random.default_rng((seed, prop_index, trial))


def _effective_trials(prop: Property, trials: int) -> int:
    return max(1, round(prop.base_trials * trials / REFERENCE_TRIALS))


def _worker_count() -> int:
    raw = os.environ.get("VERIFY_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_property(prop: Property, prop_index: int, cfg: SuiteConfig) -> PropertyReport:
    space = SpaceConfig(k=cfg.k, seed=cfg.seed)
    tol = cfg.tol if cfg.tol is not None else prop.tol
    if cfg.k < prop.min_k:
        return PropertyReport(
            name=prop.name, statement=prop.statement, module=prop.module,
            tol=tol, trials=0, max_residual=0.0, worst_trial=-1,
            passed=True, skipped=True,
        )
    n = _effective_trials(prop, cfg.trials)

    def run_range(indices):
        worst, worst_i = 0.0, -1
        for i in indices:
            r = float(prop.fn(space, _trial_rng(cfg.seed, prop_index, i)))
            if r > worst:
                worst, worst_i = r, i
        return worst, worst_i

    workers = _worker_count()
    if workers == 1 or n < 4 * workers:
        worst, worst_i = run_range(range(n))
    else:
        chunks = [range(j, n, workers) for j in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_range, chunks))
        worst, worst_i = max(results)
    return PropertyReport(
        name=prop.name, statement=prop.statement, module=prop.module,
        tol=tol, trials=n, max_residual=worst, worst_trial=worst_i,
        passed=worst <= tol,
    )


def run_suite(cfg: SuiteConfig) -> SuiteReport:
    """Run every property of the suite; deterministic given (seed, cfg)."""
    props = suite_properties(cfg.suite)
    if not props:
        raise UsageError(f"suite {cfg.suite!r} has no registered properties")
    report = SuiteReport(
        suite=cfg.suite,
        config={"k": cfg.k, "trials": cfg.trials, "seed": cfg.seed,
                "tol": cfg.tol, "format": cfg.format},
    )
    start = time.perf_counter()
    for prop in props:
        prop_index = REGISTRY.index(prop)
        report.properties.append(_run_property(prop, prop_index, cfg))
    report.wall_ms = (time.perf_counter() - start) * 1000.0
    return report


def replay(spec: str, k: int, tol: float | None = None) -> int:
    """Re-execute a single trial of every property of a suite, verbosely.

    ``spec`` has the form suite:seed:index.
    """
    try:
        suite, seed_s, index_s = spec.split(":")
        seed, index = int(seed_s), int(index_s)
    except ValueError as exc:
        raise UsageError("replay spec must be suite:seed:index") from exc
    cfg = SuiteConfig(suite=suite, k=k, seed=seed, tol=tol)
    space = SpaceConfig(k=k, seed=seed)
    failures = 0
    print(f"replaying trial {index} of suite {suite} (seed={seed}, k={k})")
    for prop in suite_properties(suite):
        if k < prop.min_k:
            print(f"  [SKIP] {prop.name} (needs k >= {prop.min_k})")
            continue
        prop_index = REGISTRY.index(prop)
        n = _effective_trials(prop, REFERENCE_TRIALS)
        if index >= n:
            print(f"  [----] {prop.name}: index {index} beyond reference "
                  f"trial count {n}")
            continue
        rng = _trial_rng(seed, prop_index, index)
        residual = float(prop.fn(space, rng))
        tol_eff = cfg.tol if cfg.tol is not None else prop.tol
        status = "PASS" if residual <= tol_eff else "FAIL"
        if residual > tol_eff:
            failures += 1
        print(f"  [{status}] {prop.name:<36} residual={residual:9.3e}  "
              f"tol={tol_eff:7.1e}")
        print(f"          {prop.statement}")
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Randomized verification suites for the boundary geometry engine.",
    )
    parser.add_argument("--suite", default=None,
                        help=f"one of: {', '.join((*SUITE_NAMES, 'all'))}")
    parser.add_argument("--dim", type=int, default=2,
                        help="complex dimension k of the ambient space (default 2)")
    parser.add_argument("--trials", type=int, default=1000,
                        help=f"sampling budget; {REFERENCE_TRIALS} reproduces the "
                             "reference per-property counts (default 1000)")
    parser.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    parser.add_argument("--tol", type=float, default=None,
                        help="override every property tolerance (default: per-property)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--replay", default=None, metavar="SUITE:SEED:INDEX",
                        help="re-execute one trial verbosely and exit")
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        if args.replay is not None:
            return replay(args.replay, k=args.dim, tol=args.tol)
        if args.suite is None:
            raise UsageError("--suite is required (or use --replay)")
        cfg = SuiteConfig(suite=args.suite, k=args.dim, trials=args.trials,
                          seed=args.seed, tol=args.tol, format=args.format)
        report = run_suite(cfg)
        print(report.to_json() if cfg.format == "json" else report.to_text())
        return 0 if report.passed else 1
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(f"usage error: invalid configuration: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
