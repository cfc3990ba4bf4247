"""Cross-checking harness: closed forms vs the shortest-path oracle.

cross_check sweeps a parameter grid and compares every closed quantity with
the oracle's value; property_suite spot-checks the three lemma-level facts
the closed forms rest on (orderliness of the repunit coin system, colex order
bounding weights, and monotonicity of the per-class candidate function).
Both emit the same report type, serializable for the CLI.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from random import Random

from .changemaking import colex_compare, greedy_count, greedy_presentation, \
    is_orderly, opt_count, repunit_coins, weight
from .closed_forms import FamilyParams, _apery_values_formula, \
    _frobenius_formula, _genus_formula, build_generators, \
    pseudo_frobenius_closed, repunit_specialization
from .core import AperySet, apery_set, frobenius_from_apery, \
    genus_from_apery, pseudo_frobenius_from_apery
from .errors import ConsistencyError, InvalidParamsError, OracleInfeasibleError

# Oracle feasibility cutoff for grid sweeps; larger moduli are skipped with a
# counted reason rather than attempted.
ORACLE_GRID_LIMIT = 10**5

SKIP_GCD = "gcd"
SKIP_HYPOTHESIS = "hypothesis"
SKIP_INFEASIBLE = "oracle-infeasible"


@dataclass(frozen=True)
class GridSpec:
    """Inclusive parameter ranges and per-case toggles for cross_check."""

    a_range: tuple[int, int] = (2, 60)
    b_range: tuple[int, int] = (2, 5)
    d_range: tuple[int, int] = (1, 5)
    k_range: tuple[int, int] = (1, 4)
    check_apery: bool = True
    check_pf: bool = False
    check_monotone: bool = False
    include_hypothesis_violations: bool = False

    def __post_init__(self):
        for name, (lo, hi), floor in (("a", self.a_range, 2),
                                      ("b", self.b_range, 2),
                                      ("d", self.d_range, 1),
                                      ("k", self.k_range, 1)):
            if lo < floor:
                raise InvalidParamsError(
                    f"{name} range starts at {lo}, minimum is {floor}")
            if hi < lo:
                raise InvalidParamsError(f"empty {name} range ({lo}, {hi})")


@dataclass(frozen=True)
class Mismatch:
    """One disagreement: which case, which quantity, both values.

    params identifies the case; coordinates inside a case (a class index, an
    amount) are part of the quantity label so one case has one params key.
    """

    params: tuple[tuple[str, int], ...]
    quantity: str
    closed_value: object
    oracle_value: object

    def to_dict(self) -> dict:
        return {"params": dict(self.params), "quantity": self.quantity,
                "closed": self.closed_value, "oracle": self.oracle_value}


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a sweep; mismatches fail the run, divergences do not."""

    cases_run: int
    cases_passed: int
    skipped: tuple[tuple[str, int], ...]
    mismatches: tuple[Mismatch, ...]
    divergences: tuple[Mismatch, ...]
    elapsed_seconds: float

    def __post_init__(self):
        object.__setattr__(self, "mismatches", tuple(self.mismatches))
        object.__setattr__(self, "divergences", tuple(self.divergences))
        object.__setattr__(self, "skipped", tuple(self.skipped))
        affected = len({m.params for m in self.mismatches})
        if self.cases_passed + affected != self.cases_run:
            raise ConsistencyError(
                f"passed {self.cases_passed} + affected {affected} "
                f"!= run {self.cases_run}")

    @property
    def cases_skipped(self) -> int:
        return sum(count for _, count in self.skipped)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "cases_skipped": self.cases_skipped,
            "skipped": dict(self.skipped),
            "mismatches": [m.to_dict() for m in self.mismatches],
            "divergences": [m.to_dict() for m in self.divergences],
            "elapsed_seconds": self.elapsed_seconds,
        }


def _param_items(p: FamilyParams) -> tuple[tuple[str, int], ...]:
    return (("a", p.a), ("b", p.b), ("d", p.d), ("k", p.k))


def _opt_counts_upto(values: tuple[int, ...], limit: int) -> list[int]:
    # full min-coin table 0..limit; values[0] == 1 seeds the unit baseline
    dp = list(range(limit + 1))
    for v in values[1:]:
        if v > limit:
            break
        for m in range(v, limit + 1):
            candidate = dp[m - v] + 1
            if candidate < dp[m]:
                dp[m] = candidate
    return dp


def _monotone_records(p: FamilyParams,
                      params: tuple[tuple[str, int], ...],
                      m_limit: int = 5) -> list[Mismatch]:
    # the per-class candidate at multiplier m must be nondecreasing in m;
    # evaluated through an independent DP, not the greedy shortcut
    a, b, d, k = p.a, p.b, p.d, p.k
    coins = tuple((b**i - 1) // (b - 1) for i in range(1, k + 1))
    limit = m_limit * a + a - 1
    dp = _opt_counts_upto(coins, limit)
    records = []
    for r in range(a):
        prev = None
        for m in range(m_limit + 1):
            big_m = m * a + r
            value = ((b - 1) * big_m + dp[big_m]) * a + big_m * d
            if prev is not None and value < prev:
                records.append(Mismatch(
                    params, f"ndr-monotone[r={r},m={m}]", value, prev))
                break
            prev = value
    return records


def run_single(p: FamilyParams, *, check_apery: bool = True,
               check_pf: bool = False, check_monotone: bool = False,
               cap: int | None = None,
               inject_mismatch: bool = False) -> list[Mismatch]:
    """Compare all requested quantities for one parameter point.

    Returns the list of disagreement records (empty on full agreement); used
    by cross_check workers and for isolated re-runs of reported mismatches.
    """
    params = _param_items(p)
    gens = build_generators(p)
    ape = apery_set(gens, cap=cap)
    records = []

    closed_f = _frobenius_formula(p)
    oracle_f = frobenius_from_apery(ape)
    if inject_mismatch:
        closed_f += 1
    if closed_f != oracle_f:
        quantity = "frobenius-injected" if inject_mismatch else "frobenius"
        records.append(Mismatch(params, quantity, closed_f, oracle_f))

    closed_g = _genus_formula(p)
    oracle_g = genus_from_apery(ape)
    if closed_g != oracle_g:
        records.append(Mismatch(params, "genus", closed_g, oracle_g))

    closed_minima = None
    if check_apery or check_pf:
        closed_minima = _apery_values_formula(p, cap=cap)
    if check_apery and closed_minima != ape.minima:
        for r, (cv, ov) in enumerate(zip(closed_minima, ape.minima)):
            if cv != ov:
                records.append(Mismatch(params, f"apery[r={r}]", cv, ov))
                break

    if check_pf:
        oracle_pf = tuple(pseudo_frobenius_from_apery(ape, cap=cap))
        n = repunit_specialization(p)
        if n is not None:
            closed_pf = tuple(pseudo_frobenius_closed(p.b, n, p.d)[0])
        else:
            closed_pf = tuple(pseudo_frobenius_from_apery(
                AperySet(p.a, closed_minima), cap=cap))
        if closed_pf != oracle_pf:
            records.append(Mismatch(params, "pf",
                                    list(closed_pf), list(oracle_pf)))

    if check_monotone:
        records.extend(_monotone_records(p, params))
    return records


def _run_case(case) -> tuple[str, list[Mismatch]]:
    (a, b, d, k), check_apery, check_pf, check_monotone, violation, cap, \
        inject = case
    p = FamilyParams(a=a, b=b, d=d, k=k)
    try:
        records = run_single(p, check_apery=check_apery, check_pf=check_pf,
                             check_monotone=check_monotone, cap=cap,
                             inject_mismatch=inject)
    except OracleInfeasibleError:
        return SKIP_INFEASIBLE, []
    status = "divergence" if violation else ("mismatch" if records else "pass")
    return status, records


def cross_check(grid: GridSpec = GridSpec(), *, jobs: int = 1,
                cap: int | None = None,
                inject_mismatch: bool = False) -> VerifyReport:
    """Sweep the grid and compare closed forms with the oracle case by case.

    Cases with gcd(a, d) != 1 are skipped; so are hypothesis violations
    (a < k-1) unless the grid asks for them, in which case their
    disagreements are reported as divergences, not failures.  The report is
    deterministic for a fixed grid regardless of jobs (elapsed time aside);
    inject_mismatch corrupts the first case's Frobenius value to exercise
    the failure path end to end.
    """
    started = time.perf_counter()
    cases = []
    skips = {SKIP_GCD: 0, SKIP_HYPOTHESIS: 0, SKIP_INFEASIBLE: 0}
    first = True
    for b in range(grid.b_range[0], grid.b_range[1] + 1):
        for k in range(grid.k_range[0], grid.k_range[1] + 1):
            for d in range(grid.d_range[0], grid.d_range[1] + 1):
                for a in range(grid.a_range[0], grid.a_range[1] + 1):
                    if gcd(a, d) != 1:
                        skips[SKIP_GCD] += 1
                        continue
                    violation = a < k - 1
                    if violation and not grid.include_hypothesis_violations:
                        skips[SKIP_HYPOTHESIS] += 1
                        continue
                    if a > ORACLE_GRID_LIMIT:
                        skips[SKIP_INFEASIBLE] += 1
                        continue
                    cases.append(((a, b, d, k), grid.check_apery,
                                  grid.check_pf, grid.check_monotone,
                                  violation, cap,
                                  inject_mismatch and first))
                    first = False

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_case, cases, chunksize=64))
    else:
        results = [_run_case(case) for case in cases]

    run = passed = 0
    mismatches: list[Mismatch] = []
    divergences: list[Mismatch] = []
    for status, records in results:
        if status == SKIP_INFEASIBLE:
            skips[SKIP_INFEASIBLE] += 1
            continue
        run += 1
        if status == "divergence":
            divergences.extend(records)
            passed += 1
        elif records:
            mismatches.extend(records)
        else:
            passed += 1
    mismatches.sort(key=lambda m: (m.params, m.quantity))
    divergences.sort(key=lambda m: (m.params, m.quantity))
    skipped = tuple(sorted((r, c) for r, c in skips.items() if c))
    return VerifyReport(cases_run=run, cases_passed=passed, skipped=skipped,
                        mismatches=tuple(mismatches),
                        divergences=tuple(divergences),
                        elapsed_seconds=time.perf_counter() - started)


def _check_orderly(rng: Random,
                   params: tuple[tuple[str, int], ...]) -> list[Mismatch]:
    b = rng.randint(2, 10)
    k = rng.randint(1, 8)
    coins = repunit_coins(b, k)
    params = params + (("b", b), ("k", k))
    verdict = is_orderly(coins)
    if not verdict.orderly:
        return [Mismatch(params, "orderly", False, True)]
    # spot-check greedy optimality at desk-sized amounts with the DP oracle
    records = []
    for _ in range(5):
        m = rng.randint(1, 5000)
        optimal = opt_count(coins, m)
        greedy = greedy_count(coins, m)
        if optimal != greedy:
            records.append(Mismatch(params, f"orderly-amount[M={m}]",
                                    greedy, optimal))
    return records


def _check_colex_weight(rng: Random,
                        params: tuple[tuple[str, int], ...]) -> list[Mismatch]:
    b = rng.randint(2, 5)
    k = rng.randint(1, 5)
    params = params + (("b", b), ("k", k))
    records = []
    for _ in range(40):
        r1 = rng.randint(0, 2000)
        r2 = rng.randint(0, 2000)
        x1 = greedy_presentation(b, k, r1)
        x2 = greedy_presentation(b, k, r2)
        if colex_compare(x1.digits, x2.digits) <= 0 \
                and weight(x1) > weight(x2):
            records.append(Mismatch(params, f"colex-weight[{r1},{r2}]",
                                    weight(x1), weight(x2)))
    return records


def _check_monotone_sampled(rng: Random,
                            params: tuple[tuple[str, int], ...]
                            ) -> list[Mismatch]:
    while True:
        a = rng.randint(2, 60)
        b = rng.randint(2, 5)
        d = rng.randint(1, 5)
        k = rng.randint(1, 4)
        if gcd(a, d) == 1 and a >= k - 1:
            break
    p = FamilyParams(a=a, b=b, d=d, k=k)
    return _monotone_records(p, params + _param_items(p))


_PROPERTY_CHECKS = (_check_orderly, _check_colex_weight,
                    _check_monotone_sampled)


def property_suite(seed: int = 0, budget: int = 100) -> VerifyReport:
    """Run budget many sampled lemma checks; deterministic for a given seed.

    Checks rotate through orderliness, colex-weight monotonicity, and
    candidate monotonicity.  Any violation points at an implementation bug,
    since all three are proved facts.
    """
    if budget < 1:
        raise InvalidParamsError(f"budget must be >= 1, got {budget}")
    started = time.perf_counter()
    rng = Random(seed)
    mismatches: list[Mismatch] = []
    passed = 0
    for i in range(budget):
        check = _PROPERTY_CHECKS[i % len(_PROPERTY_CHECKS)]
        records = check(rng, (("case", i),))
        if records:
            mismatches.extend(records)
        else:
            passed += 1
    return VerifyReport(cases_run=budget, cases_passed=passed, skipped=(),
                        mismatches=tuple(mismatches), divergences=(),
                        elapsed_seconds=time.perf_counter() - started)
