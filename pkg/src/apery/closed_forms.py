"""Closed-form evaluators for the geometric-step generator family.

The family is (a, ba+d, b^2*a + (b^2-1)/(b-1)*d, ..., b^k*a + (b^k-1)/(b-1)*d)
with gcd(a, d) = 1.  For a >= k-1 the least element of each residue class is
read off the greedy digit presentation of the class index, which yields exact
Frobenius number, genus and Apery set formulas with no search.  When a is the
base-b repunit (b^n - 1)/(b - 1) and k = n - 1 everything specializes further,
down to the pseudo-Frobenius set; Mersenne, Thabit and repunit semigroups are
instances.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .changemaking import digit_sum
from .core import AperySet, ENGINE_CLOSED, GeneratorList, SemigroupReport, \
    pseudo_frobenius_from_apery, residue_cap
from .errors import ConsistencyError, InvalidParamsError, OracleInfeasibleError


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (a, b, d, k) of the generator family; requires gcd(a, d) = 1.

    The extra hypothesis a >= k-1 needed by the closed forms is checked by the
    operations that depend on it, not at construction: generator building and
    oracle evaluation are valid without it.
    """

    a: int
    b: int
    d: int
    k: int

    def __post_init__(self):
        if self.a < 2:
            raise InvalidParamsError(f"need a >= 2, got {self.a}")
        if self.b < 2:
            raise InvalidParamsError(f"need b >= 2, got {self.b}")
        if self.d < 1:
            raise InvalidParamsError(f"need d >= 1, got {self.d}")
        if self.k < 1:
            raise InvalidParamsError(f"need k >= 1, got {self.k}")
        if gcd(self.a, self.d) != 1:
            raise InvalidParamsError(
                f"gcd(a, d) = gcd({self.a}, {self.d}) != 1")

    def supports_closed_forms(self) -> bool:
        return self.a >= self.k - 1


def _require_closed(p: FamilyParams) -> None:
    if not p.supports_closed_forms():
        raise InvalidParamsError(
            f"closed forms need a >= k - 1, got a={p.a} k={p.k}")


def repunit_value(b: int, n: int) -> int:
    """(b^n - 1)/(b - 1): the base-b number written as n ones."""
    return (b**n - 1) // (b - 1)


def build_generators(p: FamilyParams) -> GeneratorList:
    """Explicit generator list (a, ba+d, ..., b^k*a + (b^k-1)/(b-1)*d)."""
    gens = [p.a]
    gens.extend(p.b**i * p.a + repunit_value(p.b, i) * p.d
                for i in range(1, p.k + 1))
    return GeneratorList(gens)


def _coin_values(b: int, k: int) -> list[int]:
    return [repunit_value(b, i) for i in range(1, k + 1)]


def _raw_digit_sum(values: list[int], r: int) -> int:
    # greedy digit sum over precomputed repunit coin values, largest first
    s = 0
    for v in reversed(values[1:]):
        q, r = divmod(r, v)
        s += q
    return s + r  # the unit coin takes the remainder


def _exact_half(n: int) -> int:
    q, rem = divmod(n, 2)
    if rem:
        raise ConsistencyError(f"expected an even intermediate value, got {n}")
    return q


def residue_minimum(p: FamilyParams, r: int) -> int:
    """Least semigroup element congruent to d*r mod a, for 0 <= r <= a-1.

    Equals (greedy digit sum of r) * a + r * ((b-1)*a + d); valid under the
    a >= k-1 hypothesis, which makes the candidate at m = 0 minimal.
    """
    _require_closed(p)
    if not 0 <= r < p.a:
        raise InvalidParamsError(f"residue index {r} outside 0..{p.a - 1}")
    return _residue_minimum_formula(p, r)


def _residue_minimum_formula(p: FamilyParams, r: int) -> int:
    s = _raw_digit_sum(_coin_values(p.b, p.k), r)
    return s * p.a + r * ((p.b - 1) * p.a + p.d)


def apery_closed(p: FamilyParams, cap: int | None = None) -> AperySet:
    """Full Apery set from the closed form, one greedy presentation per class.

    The value for class index r lands at residue d*r mod a; gcd(a, d) = 1
    makes the placement a bijection.  Materializes a list of length a, so the
    same residue cap as the oracle applies.
    """
    _require_closed(p)
    return AperySet(p.a, _apery_values_formula(p, cap=cap))


def _apery_values_formula(p: FamilyParams, cap: int | None = None) -> tuple[int, ...]:
    a, b, d, k = p.a, p.b, p.d, p.k
    if a > residue_cap(cap):
        raise OracleInfeasibleError(
            f"modulus {a} exceeds the residue cap {residue_cap(cap)}")
    values = _coin_values(b, k)
    step = (b - 1) * a + d
    minima = [0] * a
    for r in range(1, a):
        minima[d * r % a] = _raw_digit_sum(values, r) * a + r * step
    return tuple(minima)


def frobenius_closed(p: FamilyParams) -> int:
    """Frobenius number ((b-1)*a - b + d + digit_sum(a-1)) * a - d."""
    _require_closed(p)
    return _frobenius_formula(p)


def _frobenius_formula(p: FamilyParams) -> int:
    s_top = _raw_digit_sum(_coin_values(p.b, p.k), p.a - 1)
    return ((p.b - 1) * p.a - p.b + p.d + s_top) * p.a - p.d


def genus_closed(p: FamilyParams) -> int:
    """Genus: digit-sum series over classes 1..a-1 plus (a-1)((b-1)a+d-1)/2.

    The series is an O(a*k) loop of greedy presentations; when (a, k) matches
    the repunit specialization a = (b^(k+1)-1)/(b-1) the closed summation for
    the series is used instead (the two are cross-checked in the test suite).
    """
    _require_closed(p)
    return _genus_formula(p)


def _genus_formula(p: FamilyParams) -> int:
    a, b, d, k = p.a, p.b, p.d, p.k
    n = repunit_specialization(p)
    if n is not None:
        series = _exact_half(b * repunit_value(b, n - 1) + b**n * (n - 1))
    else:
        values = _coin_values(b, k)
        series = sum(_raw_digit_sum(values, r) for r in range(1, a))
    # (a-1)((b-1)a + d - 1) is even: a odd makes a-1 even, a even forces d odd
    return series + _exact_half((a - 1) * ((b - 1) * a + d - 1))


def repunit_specialization(p: FamilyParams) -> int | None:
    """Return n with a = (b^n - 1)/(b - 1) and k = n - 1, or None."""
    n = p.k + 1
    return n if repunit_value(p.b, n) == p.a else None


def _check_repunit_args(b: int, n: int, d: int) -> int:
    if b < 2:
        raise InvalidParamsError(f"need b >= 2, got {b}")
    if n < 2:
        raise InvalidParamsError(f"need n >= 2, got {n}")
    if d < 1:
        raise InvalidParamsError(f"need d >= 1, got {d}")
    a = repunit_value(b, n)
    if gcd(a, d) != 1:
        raise InvalidParamsError(
            f"gcd((b^n-1)/(b-1), d) = gcd({a}, {d}) != 1")
    return a


def repunit_params(b: int, n: int, d: int = 1) -> FamilyParams:
    """Family parameters of the repunit specialization a=(b^n-1)/(b-1), k=n-1."""
    return FamilyParams(a=_check_repunit_args(b, n, d), b=b, d=d, k=n - 1)


def repunit_general_frobenius(b: int, n: int, d: int = 1) -> int:
    """Frobenius number (b^n + d - 1) * (b^n - 1)/(b - 1) - d."""
    a = _check_repunit_args(b, n, d)
    return (b**n + d - 1) * a - d


def repunit_general_genus(b: int, n: int, d: int = 1) -> int:
    """Genus (b^n - b)(b^n + d - 1)/(2(b-1)) + b^n (n-1)/2, exactly."""
    _check_repunit_args(b, n, d)
    # (b^n - b)/(b - 1) = b * repunit(b, n-1); halve the combined sum exactly
    return _exact_half(b * repunit_value(b, n - 1) * (b**n + d - 1)
                       + b**n * (n - 1))


def pseudo_frobenius_closed(b: int, n: int, d: int = 1) -> tuple[list[int], int]:
    """Pseudo-Frobenius set {F, F-d, ..., F-(n-2)d} and type n-1.

    Only valid at the repunit specialization; general parameters go through
    the oracle.
    """
    f = repunit_general_frobenius(b, n, d)
    return sorted(f - t * d for t in range(n - 1)), n - 1


def report_closed(p: FamilyParams, cap: int | None = None) -> SemigroupReport:
    """Closed-form report: F and g by formula; PF by the specialized formula
    when (a, k) matches the repunit shape, else from the closed Apery set."""
    frob = frobenius_closed(p)
    genus = genus_closed(p)
    n = repunit_specialization(p)
    if n is not None:
        pf, t = pseudo_frobenius_closed(p.b, n, p.d)
    else:
        pf = pseudo_frobenius_from_apery(apery_closed(p, cap=cap), cap=cap)
        t = len(pf)
    return SemigroupReport(frobenius=frob, genus=genus, pf=tuple(pf),
                           type=t, engine=ENGINE_CLOSED)
