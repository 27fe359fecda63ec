"""
Audit harnesses: seeded trials that compute colon ideals, annihilators,
intersections and submodule colons, certify what they find and tally the
outcomes per condition.

Trial i draws from `trial_rng(seed, i)` only, so serial and parallel runs
give the same report.
"""
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from loguru import logger
from rich.console import Console
from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn

from src.config import budget_settings, settings
from src.core.exceptions import InconclusiveError, UnsupportedRingError
from src.core.schemas.reports import AuditReport, ConditionStats, Discrepancy, TrialOutcome
from src.core.utils import trial_rng
from src.decorators import safe_call
from src.certificates.models import SFiniteCert
from src.certificates.mult_set import MultSet, standard_mult_set
from src.certificates.search import find_s_finite
from src.certificates.verify import verify_s_finite
from src.ideals import arith
from src.ideals.models import FinIdeal, FreeSubmodule, StructuredIdeal
from src.ideals.printing import format_element, format_ideal, format_module, format_vector
from src.rings.descriptors import IdealizationZF2, ModularIntegers, Ring
from src.rings.elements import Pair
from src.theorems.sampling import (
    SamplerConfig,
    sample_element,
    sample_ideal,
    sample_rank,
    sample_split,
    sample_submodule,
    sample_vector,
)

CHASE_CONDITIONS = ("colon", "annihilator", "intersect")
NOETHERIAN_CONDITIONS = ("scale-principal", "s-finite")
FORMULA_CONDITIONS = ("contained", "equal")
MAX_DISCREPANCIES = 20


@dataclass(frozen=True)
class ConditionResult:
    condition: str
    outcome: TrialOutcome
    s_degree: int = 0
    nontrivial_s: bool = False
    detail: str = ""


@dataclass(frozen=True)
class TrialResult:
    index: int
    results: tuple[ConditionResult, ...] = field(default=())


@safe_call(exceptions=(InconclusiveError, UnsupportedRingError))
def _certify(target: StructuredIdeal, mult_set: MultSet, budget: int) -> SFiniteCert:
    return find_s_finite(target, mult_set, budget)


def _certified(condition: str, target: StructuredIdeal, mult_set: MultSet, budget: int, case: str) -> ConditionResult:
    cert = _certify(target, mult_set, budget)
    if cert is None:
        return ConditionResult(condition, TrialOutcome.INCONCLUSIVE, detail=f"{case}: no certificate within budget")
    report = verify_s_finite(cert)
    if not report.ok:
        return ConditionResult(
            condition, TrialOutcome.FAILED, detail=f"{case}: certificate fails {', '.join(report.failures)}"
        )
    return ConditionResult(
        condition,
        TrialOutcome.CERTIFIED,
        s_degree=sum(cert.s_exponents),
        nontrivial_s=cert.s != cert.ring.one,
    )


@dataclass(frozen=True)
class ChaseCase:
    ideal: FinIdeal
    element: object
    other: FinIdeal


def _chase_case(ring: Ring, seed: int, index: int, config: SamplerConfig) -> ChaseCase:
    rng = trial_rng(seed, index)
    ideal = sample_ideal(ring, rng, config)
    a = sample_element(ring, rng, config)
    other = sample_ideal(ring, rng, config)
    return ChaseCase(ideal, a, other)


def _exhaustive_cases(ring: ModularIntegers) -> list[ChaseCase]:
    """Every (⟨d⟩, a) for d | n and a ∈ ℤ/n, with the partner ideal cycling through all ⟨d'⟩."""
    n = ring.modulus
    ideals = [FinIdeal(ring, (ring.from_int(d),)) for d in range(1, n + 1) if n % d == 0]
    return [
        ChaseCase(ideal, ring.from_int(a), ideals[a % len(ideals)])
        for ideal in ideals
        for a in range(n)
    ]


def _run_chase_case(index: int, case: ChaseCase, mult_set: MultSet, budget: int) -> TrialResult:
    a = case.element
    colon = arith.colon(case.ideal, a)  # type: ignore[arg-type]
    annihilator = arith.annihilator((a,))  # type: ignore[arg-type]
    meet = arith.intersect(case.ideal, case.other)
    label = f"I = {format_ideal(case.ideal)}, a = {format_element(a)}"  # type: ignore[arg-type]
    return TrialResult(
        index,
        (
            _certified("colon", colon, mult_set, budget, f"({label}) → {format_ideal(colon)}"),
            _certified("annihilator", annihilator, mult_set, budget, f"(0 : {format_element(a)})"),  # type: ignore[arg-type]
            _certified(
                "intersect", meet, mult_set, budget, f"{format_ideal(case.ideal)} ∩ {format_ideal(case.other)}"
            ),
        ),
    )


def chase_trial(args: tuple[Ring, MultSet, int, int, int, SamplerConfig]) -> TrialResult:
    """One sampled chase trial; module level so process pools can pickle it."""
    ring, mult_set, seed, index, budget, config = args
    return _run_chase_case(index, _chase_case(ring, seed, index, config), mult_set, budget)


def exhaustive_trial(args: tuple[int, ChaseCase, MultSet, int]) -> TrialResult:
    return _run_chase_case(*args)


def _progress_enabled(show: Optional[bool]) -> bool:
    return sys.stderr.isatty() if show is None else show


def _execute(
    trial: Callable[[tuple], TrialResult],
    jobs: Sequence[tuple],
    workers: int,
    description: str,
    show_progress: Optional[bool],
) -> list[TrialResult]:
    """Run the jobs in order, in-process or on a process pool, with an optional progress bar."""
    results: list[TrialResult] = []
    if workers > 1:
        executor = ProcessPoolExecutor(max_workers=workers)
        stream: Iterable[TrialResult] = executor.map(trial, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
    else:
        executor = None
        stream = map(trial, jobs)
    progress = None
    if _progress_enabled(show_progress):
        progress = Progress(
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            "[progress.percentage]{task.percentage:>3.0f}%",
            TimeElapsedColumn(),
            console=Console(stderr=True),
        )
        progress.start()
        task_id = progress.add_task(description, total=len(jobs))
    try:
        for result in stream:
            results.append(result)
            if progress is not None:
                progress.update(task_id, advance=1)
    finally:
        if progress is not None:
            progress.stop()
        if executor is not None:
            executor.shutdown()
    return results


def tally(
    audit: str,
    ring: Ring,
    mult_set: MultSet,
    seed: int,
    conditions: Sequence[str],
    results: Sequence[TrialResult],
) -> AuditReport:
    stats = []
    discrepancies: list[Discrepancy] = []
    for condition in conditions:
        rows = [(t.index, r) for t in results for r in t.results if r.condition == condition]
        counts = {outcome: 0 for outcome in TrialOutcome}
        for index, r in rows:
            counts[r.outcome] += 1
            if r.outcome != TrialOutcome.CERTIFIED and len(discrepancies) < MAX_DISCREPANCIES:
                discrepancies.append(Discrepancy(trial=index, condition=condition, detail=r.detail))
        stats.append(
            ConditionStats(
                condition=condition,
                trials=len(rows),
                certified=counts[TrialOutcome.CERTIFIED],
                failed=counts[TrialOutcome.FAILED],
                inconclusive=counts[TrialOutcome.INCONCLUSIVE],
                max_s_exponent=max((r.s_degree for _, r in rows), default=0),
                nontrivial_s=sum(1 for _, r in rows if r.nontrivial_s),
            )
        )
    report = AuditReport(
        audit=audit,
        ring=ring.spec,
        sset=mult_set.describe(),
        seed=seed,
        trials=len(results),
        conditions=stats,
        discrepancies=discrepancies,
    )
    logger.debug(f"{audit}: {len(results)} trials, passed = {report.passed}")
    return report


def chase_audit(
    ring: Ring,
    mult_set: Optional[MultSet] = None,
    trials: int = 1000,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    workers: Optional[int] = None,
    config: Optional[SamplerConfig] = None,
    exhaustive: bool = False,
    show_progress: Optional[bool] = None,
) -> AuditReport:
    """
    Sample (I, a) and (I₁, I₂), compute (I : a), (0 : a) and I₁ ∩ I₂ and look
    for a verifying S-finite certificate for each. `exhaustive` (ℤ/n only)
    replaces sampling with every principal ideal and every element.
    """
    mult_set = mult_set if mult_set is not None else standard_mult_set(ring)
    seed = seed if seed is not None else settings.SEED
    budget = budget if budget is not None else budget_settings.EXPONENT_BUDGET
    workers = workers if workers is not None else budget_settings.AUDIT_WORKERS
    config = config or SamplerConfig()
    if exhaustive:
        if not isinstance(ring, ModularIntegers):
            raise UnsupportedRingError(ring.spec, "exhaustive chase audit")
        jobs: list[tuple] = [(i, case, mult_set, budget) for i, case in enumerate(_exhaustive_cases(ring))]
        results = _execute(exhaustive_trial, jobs, workers, "Chase audit (exhaustive)", show_progress)
    else:
        jobs = [(ring, mult_set, seed, i, budget, config) for i in range(trials)]
        results = _execute(chase_trial, jobs, workers, "Chase audit", show_progress)
    return tally("chase", ring, mult_set, seed, CHASE_CONDITIONS, results)


def noetherian_trial(args: tuple[IdealizationZF2, MultSet, int, int, SamplerConfig]) -> TrialResult:
    """
    (2, 0)·I for a sampled I: must be ⟨0⟩ or ⟨(2a, ∅)⟩, and (2, 0) with that
    generator must certify I as S-finite. Every fifth ideal is a Split descriptor.
    """
    ring, mult_set, seed, index, config = args
    rng = trial_rng(seed, index)
    ideal: StructuredIdeal = sample_split(ring, rng, config) if index % 5 == 4 else sample_ideal(ring, rng, config)
    s = Pair(2)
    scaled = arith.scale(ideal, s)
    if isinstance(scaled, FinIdeal):
        scaled = FinIdeal(ring, ring.canonical_ideal(scaled.gens))  # type: ignore[arg-type]
    label = f"(2, 0)·{format_ideal(ideal)} = {format_ideal(scaled)}"
    principal = (
        isinstance(scaled, FinIdeal)
        and len(scaled.gens) <= 1
        and all(isinstance(g, Pair) and not g.support and g.a % 2 == 0 for g in scaled.gens)
    )
    if principal and isinstance(ideal, FinIdeal):
        # cross-check the closed form on the products of the generators
        principal = all(arith.is_member(scaled, ring.mul(s, g)) for g in ideal.gens)
    shape = ConditionResult(
        "scale-principal",
        TrialOutcome.CERTIFIED if principal else TrialOutcome.FAILED,
        detail="" if principal else f"{label} is not ⟨(2a, ∅)⟩",
    )
    exponents = mult_set.contains(s)
    if exponents is None or not isinstance(scaled, FinIdeal):
        cert_result = ConditionResult("s-finite", TrialOutcome.FAILED, detail=f"{label}: no certificate shape")
    else:
        cert = SFiniteCert(mult_set, s, exponents, tuple((g,) for g in scaled.gens), ideal, (s,))
        report = verify_s_finite(cert)
        cert_result = ConditionResult(
            "s-finite",
            TrialOutcome.CERTIFIED if report.ok else TrialOutcome.FAILED,
            s_degree=sum(exponents),
            nontrivial_s=True,
            detail="" if report.ok else f"{label}: fails {', '.join(report.failures)}",
        )
    return TrialResult(index, (shape, cert_result))


def s_noetherian_sample_check(
    trials: int = 500,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    config: Optional[SamplerConfig] = None,
    show_progress: Optional[bool] = None,
) -> AuditReport:
    """Over ℤ(+)F₂^(ℕ) with S = {(2, 0)ⁿ}: (2, 0)·I is principal and certifies I, for sampled I."""
    ring = IdealizationZF2()
    mult_set = standard_mult_set(ring)
    seed = seed if seed is not None else settings.SEED
    workers = workers if workers is not None else budget_settings.AUDIT_WORKERS
    config = config or SamplerConfig()
    jobs = [(ring, mult_set, seed, i, config) for i in range(trials)]
    results = _execute(noetherian_trial, jobs, workers, "S-Noetherian check", show_progress)
    return tally("s-noetherian", ring, mult_set, seed, NOETHERIAN_CONDITIONS, results)


def _formula_case(ring: Ring, seed: int, index: int, config: SamplerConfig) -> tuple:
    if index == 0:
        # ⟨(1, 2)⟩ with m = (1, 1): the direct colon is ⟨0⟩, the formula gives ⟨2⟩
        one, two = ring.from_int(1), ring.from_int(2)
        return FreeSubmodule(ring, 2, ((one, two),)), (one, one)
    rng = trial_rng(seed, index)
    rank = sample_rank(rng, config)
    return sample_submodule(ring, rng, rank, config), sample_vector(ring, rng, rank, config)


def formula_trial(args: tuple[Ring, int, int, SamplerConfig]) -> TrialResult:
    """submodule_colon(N, m) against the intersection of the coordinate colons."""
    ring, seed, index, config = args
    module, m = _formula_case(ring, seed, index, config)
    direct = arith.submodule_colon(module, m)
    formula = arith.coordinate_colon(module, m)
    label = f"N = {format_module(module)}, m = {format_vector(m)}: direct {format_ideal(direct)}, formula {format_ideal(formula)}"
    contained = arith.ideal_contains(formula, direct)
    equal = contained and arith.ideal_contains(direct, formula)
    return TrialResult(
        index,
        (
            ConditionResult(
                "contained",
                TrialOutcome.CERTIFIED if contained else TrialOutcome.FAILED,
                detail="" if contained else label,
            ),
            ConditionResult(
                "equal",
                TrialOutcome.CERTIFIED if equal else TrialOutcome.FAILED,
                detail="" if equal else label,
            ),
        ),
    )


def colon_formula_audit(
    ring: Ring,
    trials: int = 500,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    config: Optional[SamplerConfig] = None,
    show_progress: Optional[bool] = None,
) -> AuditReport:
    """
    Audit (N : m) = ⋂ᵢ (proj_i(N) : m_i). Containment of the left side in the
    right is expected everywhere; equality is the claim under audit, and its
    failures are listed as discrepancies. Trial 0 is always ⟨(1, 2)⟩, m = (1, 1).
    """
    seed = seed if seed is not None else settings.SEED
    workers = workers if workers is not None else budget_settings.AUDIT_WORKERS
    config = config or SamplerConfig()
    jobs = [(ring, seed, i, config) for i in range(trials)]
    results = _execute(formula_trial, jobs, workers, "Colon formula audit", show_progress)
    return tally("colon-formula", ring, MultSet(ring), seed, FORMULA_CONDITIONS, results)


def formula_audit_passed(report: AuditReport) -> bool:
    """Containment holds in every trial; equality may fail."""
    return all(c.failed == 0 for c in report.conditions if c.condition == "contained")

