"""Family-agnostic numerical semigroup engine.

The one computational object here is the Apery set of the least generator:
the minimum semigroup element in each residue class mod a.  It is computed
by shortest-path relaxation over the residue graph, and every classical
quantity (Frobenius number, genus, gaps, pseudo-Frobenius set, type) is
derived from it.  This module is the independent oracle that the package's
closed-form evaluators are checked against.

All arithmetic is exact arbitrary-precision integer arithmetic.  The number
of residue classes a must fit in memory as a list index; a configurable cap
(default 10**7, overridable via the SEMIGROUP_ORACLE_CAP environment
variable) turns oversized requests into an OracleInfeasibleError instead of
an out-of-memory crash.
"""
from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import ConsistencyError, InvalidParamsError, OracleInfeasibleError

DEFAULT_RESIDUE_CAP = 10**7
ORACLE_CAP_ENV = "SEMIGROUP_ORACLE_CAP"

ENGINE_ORACLE = "oracle"
ENGINE_CLOSED = "closed-form"


def residue_cap(cap: int | None = None) -> int:
    """Effective residue cap: explicit argument, else env override, else default."""
    if cap is not None:
        return cap
    env = os.environ.get(ORACLE_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParamsError(
                f"{ORACLE_CAP_ENV} must be a decimal integer, got {env!r}")
    return DEFAULT_RESIDUE_CAP


@dataclass(frozen=True)
class GeneratorList:
    """Canonicalized system of semigroup generators (sorted, deduplicated, gcd 1).

    Accepts any iterable of positive integers; 1 is allowed and yields the
    full semigroup N (Frobenius number -1 by convention).
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = tuple(sorted(set(int(e) for e in elements)))
        if not elems:
            raise InvalidParamsError("generator list is empty")
        if elems[0] < 1:
            raise InvalidParamsError(f"generators must be positive, got {elems[0]}")
        g = 0
        for e in elems:
            g = gcd(g, e)
        if g != 1:
            raise InvalidParamsError(
                f"gcd of generators is {g}, not 1: not a numerical semigroup")
        object.__setattr__(self, "elements", elems)

    @property
    def least(self) -> int:
        return self.elements[0]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def _as_generators(gens) -> GeneratorList:
    return gens if isinstance(gens, GeneratorList) else GeneratorList(gens)


@dataclass(frozen=True)
class AperySet:
    """Apery set of the least generator: minima[r] is the least element = r mod a.

    Cheap structural invariants are enforced here; the semantic minimality of
    each entry is the oracle's job and is covered by the test suite.
    """

    modulus: int
    minima: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "minima", tuple(self.minima))
        if self.modulus < 1:
            raise InvalidParamsError("modulus must be >= 1")
        if len(self.minima) != self.modulus:
            raise InvalidParamsError(
                f"expected {self.modulus} minima, got {len(self.minima)}")
        if self.minima[0] != 0:
            raise ConsistencyError("minima[0] must be 0")
        for r, n in enumerate(self.minima):
            if n < 0 or n % self.modulus != r:
                raise ConsistencyError(
                    f"minima[{r}] = {n} is not congruent to {r} mod {self.modulus}")


@dataclass(frozen=True)
class SemigroupReport:
    """Frobenius number, genus, pseudo-Frobenius set and type, plus provenance."""

    frobenius: int
    genus: int
    pf: tuple[int, ...]
    type: int
    engine: str

    def __post_init__(self):
        object.__setattr__(self, "pf", tuple(self.pf))
        if not self.pf:
            raise ConsistencyError("pseudo-Frobenius set is never empty")
        if self.frobenius != max(self.pf):
            raise ConsistencyError(
                f"frobenius {self.frobenius} != max(pf) {max(self.pf)}")
        if self.type != len(self.pf):
            raise ConsistencyError(f"type {self.type} != |pf| {len(self.pf)}")
        if self.engine not in (ENGINE_ORACLE, ENGINE_CLOSED):
            raise InvalidParamsError(f"unknown engine tag {self.engine!r}")


def apery_set(gens, cap: int | None = None) -> AperySet:
    """Compute the Apery set of the least generator by Dijkstra over residues.

    Nodes are the residue classes 0..a-1 (a = least generator); each other
    generator g contributes edges r -> (r + g) mod a of weight g.  The
    shortest distance from 0 to r is exactly the least semigroup element
    congruent to r mod a.  Multiple generators sharing a residue class are
    pruned to the smallest, which dominates pointwise.
    """
    gens = _as_generators(gens)
    a = gens.least
    if a > residue_cap(cap):
        raise OracleInfeasibleError(
            f"least generator {a} exceeds the residue cap {residue_cap(cap)}; "
            f"raise the cap or use a closed-form engine")
    if a == 1:
        return AperySet(1, (0,))

    edges: dict[int, int] = {}
    for g in gens.elements[1:]:
        r = g % a
        if r == 0:
            continue  # self-loop, never improves a distance
        if r not in edges or g < edges[r]:
            edges[r] = g
    steps = sorted(edges.values())

    INF = None
    dist: list[int | None] = [INF] * a
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in steps:
            r2 = (r + g) % a
            d2 = d + g
            if dist[r2] is None or d2 < dist[r2]:
                dist[r2] = d2
                heapq.heappush(heap, (d2, r2))
    if any(d is None for d in dist):
        # unreachable residue would contradict gcd(gens) = 1
        raise ConsistencyError("residue graph not fully reachable despite gcd 1")
    return AperySet(a, tuple(dist))


def frobenius_from_apery(ape: AperySet) -> int:
    """Largest integer outside the semigroup: max of the Apery set minus a.

    Returns -1 exactly when the semigroup is all of N.
    """
    return max(ape.minima) - ape.modulus


def genus_from_apery(ape: AperySet) -> int:
    """Number of gaps: (sum of nonzero-class minima)/a - (a-1)/2, exactly."""
    a = ape.modulus
    total = sum(ape.minima[1:])
    # g = total/a - (a-1)/2 as one exact division by 2a
    num = 2 * total - a * (a - 1)
    q, rem = divmod(num, 2 * a)
    if rem != 0:
        raise ConsistencyError(
            f"genus formula did not divide exactly (sum {total}, modulus {a})")
    if q < 0:
        raise ConsistencyError("negative genus indicates a corrupted Apery set")
    return q


def contains(ape: AperySet, n: int) -> bool:
    """Membership test: n is in the semigroup iff n >= 0 and n >= minima[n mod a]."""
    if n < 0:
        return False
    return n >= ape.minima[n % ape.modulus]


def gaps(ape: AperySet) -> list[int]:
    """All positive integers outside the semigroup, sorted ascending.

    Residue class r contributes minima[r] - a, minima[r] - 2a, ... down to r.
    """
    a = ape.modulus
    out: list[int] = []
    for r in range(1, a):
        n = ape.minima[r] - a
        while n > 0:
            out.append(n)
            n -= a
    out.sort()
    return out


def pseudo_frobenius_from_apery(ape: AperySet, cap: int | None = None) -> list[int]:
    """Pseudo-Frobenius numbers: {w - a : w maximal in the Apery set}.

    Maximality is under the partial order w <= w' iff w' - w is in the
    semigroup, decided by pairwise membership tests (O(a^2) worst case, no
    pruning beyond early exit; correctness over speed at oracle scale).
    """
    a = ape.modulus
    if a > residue_cap(cap):
        raise OracleInfeasibleError(
            f"modulus {a} exceeds the residue cap {residue_cap(cap)}")

    # only strictly larger elements can dominate; scanning the largest first
    # finds a dominator quickly for small w (big differences are past F)
    by_size = sorted(ape.minima, reverse=True)

    def is_maximal(w: int) -> bool:
        for w2 in by_size:
            if w2 <= w:
                return True
            if contains(ape, w2 - w):
                return False
        return True

    return sorted(w - a for w in ape.minima if is_maximal(w))


def semigroup_report(gens, cap: int | None = None) -> SemigroupReport:
    """Full oracle report (F, g, PF, t) for an explicit generator list."""
    ape = apery_set(gens, cap=cap)
    pf = tuple(pseudo_frobenius_from_apery(ape, cap=cap))
    return SemigroupReport(
        frobenius=frobenius_from_apery(ape),
        genus=genus_from_apery(ape),
        pf=pf,
        type=len(pf),
        engine=ENGINE_ORACLE,
    )
