"""Named constructors for eight numerical semigroup families from the literature.

Each family is an instantiation of the geometric-step generator family at a
particular (a, b, d, k), so anything the closed forms or the oracle can do
applies to Mersenne, Thabit, repunit and the rest by name.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .closed_forms import FamilyParams, repunit_value
from .errors import InvalidParamsError


def mersenne(n: int) -> FamilyParams:
    """Mersenne semigroup: a = 2^n - 1, b = 2, d = 1, k = n - 1; n >= 2."""
    if n < 2:
        raise InvalidParamsError(f"mersenne needs n >= 2, got n={n}")
    return FamilyParams(a=2**n - 1, b=2, d=1, k=n - 1)


def thabit(n: int) -> FamilyParams:
    """Thabit semigroup: a = 3*2^n - 1, b = 2, d = 1, k = n + 1; n >= 1."""
    if n < 1:
        raise InvalidParamsError(f"thabit needs n >= 1, got n={n}")
    return FamilyParams(a=3 * 2**n - 1, b=2, d=1, k=n + 1)


def gu_ze_tang(n: int, m: int) -> FamilyParams:
    """a = (2^m - 1)*2^n - 1, b = 2, d = 1, k = n + m - 1; n >= 1, 2 <= m <= 2^n."""
    if n < 1:
        raise InvalidParamsError(f"gu-ze-tang needs n >= 1, got n={n}")
    if not 2 <= m <= 2**n:
        raise InvalidParamsError(
            f"gu-ze-tang needs 2 <= m <= 2^n = {2**n}, got m={m}")
    return FamilyParams(a=(2**m - 1) * 2**n - 1, b=2, d=1, k=n + m - 1)


def song_gt(n: int, m: int) -> FamilyParams:
    """a = (2^m + 1)*2^n - (2^m - 1), b = 2, d = 2^m - 1, k = n + delta.

    delta is 1 when n = 0, m when 0 < m <= n, and m - 1 when m > n >= 1.
    Requires m >= 2, n >= 0; n = 0 degenerates to two generators.
    """
    if m < 2:
        raise InvalidParamsError(f"song-gt needs m >= 2, got m={m}")
    if n < 0:
        raise InvalidParamsError(f"song-gt needs n >= 0, got n={n}")
    if n == 0:
        delta = 1
    elif m <= n:
        delta = m
    else:
        delta = m - 1
    return FamilyParams(a=(2**m + 1) * 2**n - (2**m - 1), b=2,
                        d=2**m - 1, k=n + delta)


def liu_xin(m: int, k: int, d: int = 1) -> FamilyParams:
    """a = m*(2^k - 1) + 2^(k-1) - 1, b = 2; m >= 1, k >= 3, free step d."""
    if m < 1:
        raise InvalidParamsError(f"liu-xin needs m >= 1, got m={m}")
    if k < 3:
        raise InvalidParamsError(f"liu-xin needs k >= 3, got k={k}")
    return FamilyParams(a=m * (2**k - 1) + 2**(k - 1) - 1, b=2, d=d, k=k)


def repunit(b: int, n: int) -> FamilyParams:
    """Repunit semigroup: a = (b^n - 1)/(b - 1), d = 1, k = n - 1; b, n >= 2."""
    if b < 2:
        raise InvalidParamsError(f"repunit needs b >= 2, got b={b}")
    if n < 2:
        raise InvalidParamsError(f"repunit needs n >= 2, got n={n}")
    return FamilyParams(a=repunit_value(b, n), b=b, d=1, k=n - 1)


def gu_ze(b: int, n: int) -> FamilyParams:
    """a = b^(n+1) + (b^n - 1)/(b - 1), d = 1, k = n + 1; b >= 2, n >= 0."""
    if b < 2:
        raise InvalidParamsError(f"gu-ze needs b >= 2, got b={b}")
    if n < 0:
        raise InvalidParamsError(f"gu-ze needs n >= 0, got n={n}")
    return FamilyParams(a=b**(n + 1) + repunit_value(b, n), b=b, d=1, k=n + 1)


def thabit_base_b(b: int, n: int) -> FamilyParams:
    """Base-b Thabit semigroup: a = (b+1)*b^n - 1, d = b - 1, k = n + 1.

    Requires b >= 2, n >= 0; at b = 2 this is the classical Thabit family.
    """
    if b < 2:
        raise InvalidParamsError(f"thabit-base-b needs b >= 2, got b={b}")
    if n < 0:
        raise InvalidParamsError(f"thabit-base-b needs n >= 0, got n={n}")
    return FamilyParams(a=(b + 1) * b**n - 1, b=b, d=b - 1, k=n + 1)


_RESOLVERS = {
    "mersenne": mersenne,
    "thabit": thabit,
    "gu-ze-tang": gu_ze_tang,
    "song-gt": song_gt,
    "liu-xin": liu_xin,
    "repunit": repunit,
    "gu-ze": gu_ze,
    "thabit-base-b": thabit_base_b,
}

# Machine-readable parameter descriptors, in CLI presentation order.
_CATALOG: tuple[dict, ...] = (
    {
        "name": "mersenne",
        "params": [{"name": "n", "min": 2}],
        "resolves": "a=2^n-1, b=2, d=1, k=n-1",
    },
    {
        "name": "thabit",
        "params": [{"name": "n", "min": 1}],
        "resolves": "a=3*2^n-1, b=2, d=1, k=n+1",
    },
    {
        "name": "gu-ze-tang",
        "params": [{"name": "n", "min": 1}, {"name": "m", "min": 2, "max": "2^n"}],
        "resolves": "a=(2^m-1)*2^n-1, b=2, d=1, k=n+m-1",
    },
    {
        "name": "song-gt",
        "params": [{"name": "n", "min": 0}, {"name": "m", "min": 2}],
        "resolves": "a=(2^m+1)*2^n-(2^m-1), b=2, d=2^m-1, k=n+delta",
        "delta": [
            {"when": "n == 0", "value": "1"},
            {"when": "n != 0 and m <= n", "value": "m"},
            {"when": "n != 0 and m > n", "value": "m-1"},
        ],
    },
    {
        "name": "liu-xin",
        "params": [{"name": "m", "min": 1}, {"name": "k", "min": 3},
                   {"name": "d", "min": 1, "default": 1}],
        "resolves": "a=m*(2^k-1)+2^(k-1)-1, b=2",
    },
    {
        "name": "repunit",
        "params": [{"name": "b", "min": 2}, {"name": "n", "min": 2}],
        "resolves": "a=(b^n-1)/(b-1), d=1, k=n-1",
    },
    {
        "name": "gu-ze",
        "params": [{"name": "b", "min": 2}, {"name": "n", "min": 0}],
        "resolves": "a=b^(n+1)+(b^n-1)/(b-1), d=1, k=n+1",
    },
    {
        "name": "thabit-base-b",
        "params": [{"name": "b", "min": 2}, {"name": "n", "min": 0}],
        "resolves": "a=(b+1)*b^n-1, d=b-1, k=n+1",
    },
)

FAMILY_NAMES: tuple[str, ...] = tuple(entry["name"] for entry in _CATALOG)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its free parameters, ready to resolve."""

    name: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in _RESOLVERS:
            raise InvalidParamsError(
                f"unknown family {self.name!r}; known: {', '.join(FAMILY_NAMES)}")
        object.__setattr__(self, "params", dict(self.params))
        entry = next(e for e in _CATALOG if e["name"] == self.name)
        allowed = {p["name"] for p in entry["params"]}
        required = {p["name"] for p in entry["params"] if "default" not in p}
        given = set(self.params)
        if not required <= given:
            missing = ", ".join(sorted(required - given))
            raise InvalidParamsError(f"family {self.name} missing: {missing}")
        if not given <= allowed:
            extra = ", ".join(sorted(given - allowed))
            raise InvalidParamsError(
                f"family {self.name} does not take: {extra}")


def resolve(spec: FamilySpec) -> FamilyParams:
    """Map a named family instance to its (a, b, d, k) parameters."""
    return _RESOLVERS[spec.name](**spec.params)


def catalog() -> list[dict]:
    """All eight families with parameter names, bounds and defaults."""
    return [dict(entry, params=[dict(p) for p in entry["params"]])
            for entry in _CATALOG]
