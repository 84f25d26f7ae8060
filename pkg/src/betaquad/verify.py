"""Verification harness: sample parameters, integrate, compare, report.

An outcome passes when |numeric - closed| <= atol + rtol*|closed| with the
entry's tolerance class (standard 1e-8, principal_value 1e-6, combined
1e-7).  Zero-valued identities carry their own absolute floor and are
judged on absolute error alone.  Engines are asked for 1e-10; a run that
stalls above that but still certifies 1e-8 relative is accepted rather
than flagged as non-convergent.

Reports serialize as JSON lines (one outcome per line, then one summary
object).  Timing fields are canonicalized to 0.0 in the JSON form so that
reruns with identical flags are byte-identical regardless of wall clock or
thread count; the text form shows real timings.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import catalog, quad, specfun as sf

__all__ = [
    "RunConfig",
    "VerificationOutcome",
    "VerificationReport",
    "ConsistencyCheck",
    "ConsistencyReport",
    "verify_entry",
    "verify_all",
    "cross_check_consistency",
    "report_to_jsonl",
    "report_to_text",
]

ENGINE_REQUEST_TOL = quad.DEFAULT_TOL   # 1e-10 requested from the engines
ENGINE_ACCEPT_TOL = quad.ACCEPTED_TOL   # 1e-8 certified estimate still accepted
REL_ERR_FLOOR = 1e-300


@dataclass(frozen=True)
class RunConfig:
    seed: int = 7
    samples_per_entry: int = 20
    rtol_override: float | None = None
    atol: float = 1e-12
    entry_filter: tuple[str, ...] | None = None
    parallelism: int = 1

    def __post_init__(self):
        if self.samples_per_entry < 1:
            raise ValueError("samples_per_entry must be >= 1")
        if self.atol <= 0.0 or (self.rtol_override is not None and self.rtol_override <= 0.0):
            raise ValueError("tolerances must be positive")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


@dataclass(frozen=True)
class VerificationOutcome:
    entry_id: str
    sample_index: int
    params: dict
    numeric: float
    closed: float
    abs_err: float
    rel_err: float
    evaluations: int
    status: str  # pass | fail | quad_nonconverged | sample_error
    elapsed_ms: float


@dataclass
class VerificationReport:
    outcomes: list[VerificationOutcome]
    entries: int
    passes: int
    failures: int
    worst_rel_err: float
    wall_ms: float

    @property
    def verdict(self) -> str:
        return "pass" if self.failures == 0 else "fail"


@dataclass(frozen=True)
class ConsistencyCheck:
    name: str
    passed: bool
    worst: float
    detail: str


@dataclass
class ConsistencyReport:
    checks: list[ConsistencyCheck]
    wall_ms: float

    @property
    def verdict(self) -> str:
        return "pass" if all(c.passed for c in self.checks) else "fail"


def _entry_rtol(rec, cfg):
    return cfg.rtol_override if cfg.rtol_override is not None else rec.rtol


def _entry_atol(rec, cfg):
    return max(cfg.atol, rec.zero_atol or 0.0)


def verify_entry(rec, cfg: RunConfig) -> list[VerificationOutcome]:
    """Run cfg.samples_per_entry deterministic comparisons for one entry."""
    rtol = _entry_rtol(rec, cfg)
    atol = _entry_atol(rec, cfg)
    outcomes = []
    for index in range(cfg.samples_per_entry):
        outcomes.append(_verify_sample(rec, cfg, index, rtol, atol))
    return outcomes


def _verify_sample(rec, cfg, index, rtol, atol):
    start = time.perf_counter()
    params = {}
    try:
        params = catalog.sample_params(rec, cfg.seed, index)
        closed = catalog.closed_form_value(rec, params)
        f = rec.make_integrand(params)
        spec = rec.make_spec(params)
        folds = rec.make_folds(params) if rec.make_folds is not None else None
        result = quad.integrate(f, spec, ENGINE_REQUEST_TOL, folds=folds)
    except (catalog.DomainTooTightError, ValueError, OverflowError, quad.QuadratureError):
        elapsed = 1e3 * (time.perf_counter() - start)
        return VerificationOutcome(
            rec.id, index, params, math.nan, math.nan,
            math.nan, math.nan, 0, "sample_error", elapsed,
        )
    elapsed = 1e3 * (time.perf_counter() - start)

    numeric = result.value
    abs_err = abs(numeric - closed)
    rel_err = abs_err / max(abs(closed), REL_ERR_FLOOR)
    certified = result.converged or (
        result.error_estimate <= ENGINE_ACCEPT_TOL * max(1.0, abs(numeric))
    )
    if not certified or not math.isfinite(numeric):
        status = "quad_nonconverged"
    elif abs_err <= atol + rtol * abs(closed):
        status = "pass"
    else:
        status = "fail"
    return VerificationOutcome(
        rec.id, index, params, numeric, closed, abs_err, rel_err,
        result.evaluations, status, elapsed,
    )


def _selected_entries(cfg):
    if cfg.entry_filter is None:
        return sorted(catalog.all_entries(), key=lambda r: r.id)
    return [catalog.entry(eid) for eid in sorted(set(cfg.entry_filter))]


def verify_all(cfg: RunConfig) -> VerificationReport:
    """Verify the (filtered) roster; deterministic for a fixed config."""
    start = time.perf_counter()
    entries = _selected_entries(cfg)
    tasks = [
        (rec, index)
        for rec in entries
        for index in range(cfg.samples_per_entry)
    ]

    def run_task(task):
        rec, index = task
        return _verify_sample(rec, cfg, index, _entry_rtol(rec, cfg), _entry_atol(rec, cfg))

    if cfg.parallelism > 1:
        with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]
    results.sort(key=lambda o: (o.entry_id, o.sample_index))

    passes = sum(1 for o in results if o.status == "pass")
    failures = len(results) - passes
    worst = max((o.rel_err for o in results if math.isfinite(o.rel_err)), default=0.0)
    wall_ms = 1e3 * (time.perf_counter() - start)
    return VerificationReport(results, len(entries), passes, failures, worst, wall_ms)


# --------------------------------------------------------------------------
# non-quadrature consistency suites
# --------------------------------------------------------------------------

def cross_check_consistency(cfg: RunConfig) -> ConsistencyReport:
    """Identity suites that bypass the main quadrature comparison loop:
    reflection/duplication residual grids, exact beta symmetry, the
    duplication chain behind 3.249.5, and fake-parameter invariance."""
    start = time.perf_counter()
    checks = [
        _check_reflection_grid(),
        _check_duplication_grid(),
        _check_beta_symmetry(cfg),
        _check_duplication_chain(cfg),
        _check_fake_parameter(cfg, "3.217", "b"),
        _check_fake_parameter(cfg, "3.218", "a"),
    ]
    wall_ms = 1e3 * (time.perf_counter() - start)
    return ConsistencyReport(checks, wall_ms)


def _check_reflection_grid():
    worst = 0.0
    for i in range(1, 1001):
        a = i / 1001.0
        scale = abs(math.pi / math.sin(math.pi * a))
        worst = max(worst, abs(sf.reflection_residual(a)) / scale)
    return ConsistencyCheck(
        "reflection-grid", worst <= 1e-12, worst, "1000 points of (0,1), rel vs pi/sin"
    )


def _check_duplication_grid():
    worst = 0.0
    for i in range(1, 501):
        a = 20.0 * i / 501.0
        worst = max(worst, abs(sf.duplication_residual(a)) / sf.gamma(a + 0.5))
    return ConsistencyCheck(
        "duplication-grid", worst <= 1e-12, worst, "500 points of (0,20], rel vs Gamma(a+1/2)"
    )


def _check_beta_symmetry(cfg):
    rng = random.Random(cfg.seed ^ 0xBE7A)
    mism = 0
    for _ in range(1000):
        a = rng.uniform(0.05, 6.0)
        b = rng.uniform(0.05, 6.0)
        if sf.beta(a, b) != sf.beta(b, a):
            mism += 1
    return ConsistencyCheck(
        "beta-symmetry", mism == 0, float(mism), "1000 random pairs, exact equality"
    )


def _check_duplication_chain(cfg):
    # closed(3.249.5) = 2^(2b-2) B(b,b) = B(1/2,b)/2, via Legendre duplication
    rec = catalog.entry("3.249.5")
    worst = 0.0
    for index in range(50):
        params = catalog.sample_params(rec, cfg.seed, index)
        b = params["b"]
        direct = catalog.closed_form_value(rec, params)
        doubled = 2.0 ** (2.0 * b - 2.0) * sf.beta(b, b)
        halved = 0.5 * sf.beta(0.5, b)
        scale = max(abs(direct), REL_ERR_FLOOR)
        worst = max(worst, abs(direct - doubled) / scale, abs(direct - halved) / scale)
    return ConsistencyCheck(
        "duplication-chain-3.249.5",
        worst <= 1e-12,
        worst,
        "50 sampled b: closed == 2^(2b-2) B(b,b) == B(1/2,b)/2",
    )


def _check_fake_parameter(cfg, entry_id, fake_name):
    rec = catalog.entry(entry_id)
    worst_pair = 0.0
    worst_closed = 0.0
    ok = True
    for index in range(cfg.samples_per_entry):
        params = catalog.sample_params(rec, cfg.seed, index)
        alt = catalog.sample_params(rec, cfg.seed, index + 10_000)
        offset = 1
        while abs(alt[fake_name] - params[fake_name]) < 0.05:
            alt = catalog.sample_params(rec, cfg.seed, index + 10_000 + offset)
            offset += 1
        alt = dict(alt)
        alt["p"] = params["p"]
        closed = catalog.closed_form_value(rec, params)
        r1 = quad.integrate(rec.make_integrand(params), rec.make_spec(params), ENGINE_REQUEST_TOL)
        r2 = quad.integrate(rec.make_integrand(alt), rec.make_spec(alt), ENGINE_REQUEST_TOL)
        pair = abs(r1.value - r2.value)
        rel = abs(r1.value - closed) / max(abs(closed), REL_ERR_FLOOR)
        worst_pair = max(worst_pair, pair)
        worst_closed = max(worst_closed, rel)
        if pair > 2e-7 or rel > 1e-7 or not (r1.converged and r2.converged):
            ok = False
    return ConsistencyCheck(
        f"fake-parameter-{entry_id}",
        ok,
        max(worst_pair, worst_closed),
        f"{cfg.samples_per_entry} p-samples, two {fake_name}-draws each vs pi cot(pi p)",
    )


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def report_to_jsonl(report: VerificationReport, consistency: ConsistencyReport | None = None) -> str:
    """JSON lines: one outcome per line, then one summary object.

    Timing fields are zeroed so identical configurations yield
    byte-identical reports.
    """
    import json

    lines = []
    for o in report.outcomes:
        lines.append(
            json.dumps(
                {
                    "entry_id": o.entry_id,
                    "sample_index": o.sample_index,
                    "params": o.params,
                    "numeric": o.numeric,
                    "closed": o.closed,
                    "abs_err": o.abs_err,
                    "rel_err": o.rel_err,
                    "evaluations": o.evaluations,
                    "status": o.status,
                    "elapsed": 0.0,
                }
            )
        )
    verdict = report.verdict
    if consistency is not None and consistency.verdict == "fail":
        verdict = "fail"
    lines.append(
        json.dumps(
            {
                "entries": report.entries,
                "outcomes": len(report.outcomes),
                "passes": report.passes,
                "failures": report.failures,
                "worst_rel_err": report.worst_rel_err,
                "wall_ms": 0.0,
                "verdict": verdict,
            }
        )
    )
    return "\n".join(lines) + "\n"


def report_to_text(report: VerificationReport, consistency: ConsistencyReport | None = None) -> str:
    """Fixed-width per-entry summary table with real timings."""
    rows = {}
    for o in report.outcomes:
        row = rows.setdefault(
            o.entry_id, {"n": 0, "pass": 0, "worst": 0.0, "status": "ok", "ms": 0.0}
        )
        row["n"] += 1
        row["ms"] += o.elapsed_ms
        if o.status == "pass":
            row["pass"] += 1
        else:
            row["status"] = o.status if o.status != "fail" else "FAIL"
        if math.isfinite(o.rel_err):
            row["worst"] = max(row["worst"], o.rel_err)

    lines = [
        f"{'entry':<16} {'class':<16} {'samples':>7} {'passed':>7} {'worst_rel':>12} {'ms':>9}  status"
    ]
    for eid in sorted(rows):
        rec = catalog.entry(eid)
        row = rows[eid]
        lines.append(
            f"{eid:<16} {rec.tolerance_class:<16} {row['n']:>7d} {row['pass']:>7d} "
            f"{row['worst']:>12.3e} {row['ms']:>9.1f}  {row['status']}"
        )
    if consistency is not None:
        lines.append("")
        lines.append("consistency checks:")
        for c in consistency.checks:
            mark = "pass" if c.passed else "FAIL"
            lines.append(f"  {c.name:<28} {mark}  worst={c.worst:.3e}  ({c.detail})")
    verdict = report.verdict
    if consistency is not None and consistency.verdict == "fail":
        verdict = "fail"
    lines.append("")
    lines.append(
        f"summary: entries={report.entries} outcomes={len(report.outcomes)} "
        f"passes={report.passes} failures={report.failures} "
        f"worst_rel_err={report.worst_rel_err:.3e} wall_ms={report.wall_ms:.1f} "
        f"verdict={verdict}"
    )
    return "\n".join(lines) + "\n"
