"""Change-making machinery behind the closed-form evaluators.

Covers the optimal and greedy representation counts for a coin system, the
incremental One-Point certification of greedy optimality (orderliness), and
greedy digit presentations over the base-b repunit sequence
(1, b+1, b^2+b+1, ...) together with their colexicographic order and weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidParamsError, OracleInfeasibleError

DEFAULT_DP_CAP = 10**8


@dataclass(frozen=True)
class CoinSystem:
    """Strictly increasing denominations starting with the unit coin.

    Input is canonicalized (sorted, deduplicated); every amount is then
    representable because 1 is required to be present.
    """

    denominations: tuple[int, ...]

    def __init__(self, denominations: Iterable[int]):
        denoms = tuple(sorted(set(int(c) for c in denominations)))
        if not denoms or denoms[0] != 1:
            raise InvalidParamsError("coin system must contain the unit coin 1")
        object.__setattr__(self, "denominations", denoms)

    def __iter__(self):
        return iter(self.denominations)

    def __len__(self) -> int:
        return len(self.denominations)


def _as_coins(coins) -> CoinSystem:
    return coins if isinstance(coins, CoinSystem) else CoinSystem(coins)


def repunit_coins(b: int, k: int) -> CoinSystem:
    """The sequence (1, (b^2-1)/(b-1), ..., (b^k-1)/(b-1)) as a coin system."""
    if b < 2:
        raise InvalidParamsError(f"base must be >= 2, got {b}")
    if k < 1:
        raise InvalidParamsError(f"length must be >= 1, got {k}")
    return CoinSystem((b**i - 1) // (b - 1) for i in range(1, k + 1))


def _check_amount(M: int) -> None:
    if M < 0:
        raise InvalidParamsError(f"amount must be >= 0, got {M}")


def opt_count(coins, M: int, cap: int | None = None) -> int:
    """Minimum number of coins summing to M, by bottom-up dynamic programming.

    The table has M+1 cells; amounts above the cap (default 10**8 cells)
    raise OracleInfeasibleError rather than exhausting memory.
    """
    coins = _as_coins(coins)
    _check_amount(M)
    limit = DEFAULT_DP_CAP if cap is None else cap
    if M + 1 > limit:
        raise OracleInfeasibleError(
            f"amount {M} needs {M + 1} DP cells, above the cap {limit}")
    dp = list(range(M + 1))  # unit-coin-only counts as the starting point
    for c in coins.denominations[1:]:
        if c > M:
            break
        for x in range(c, M + 1):
            v = dp[x - c] + 1
            if v < dp[x]:
                dp[x] = v
    return dp[M]


def greedy_count(coins, M: int) -> int:
    """Number of coins the largest-first greedy strategy uses for M."""
    coins = _as_coins(coins)
    _check_amount(M)
    n = 0
    for c in reversed(coins.denominations):
        q, M = divmod(M, c)
        n += q
    return n


def _greedy_prefix(denoms: Sequence[int], M: int) -> int:
    # greedy count over an already-sorted prefix of denominations
    n = 0
    for c in reversed(denoms):
        q, M = divmod(M, c)
        n += q
    return n


class Orderliness(NamedTuple):
    orderly: bool
    counterexample: int | None


def is_orderly(coins) -> Orderliness:
    """Decide whether greedy is optimal for every amount (One-Point procedure).

    Coins are certified one prefix at a time: with (1, c_1, ..., c_j) already
    orderly and c the next coin, the single amount t = ceil(c / c_j) * c_j
    decides the extension.  At t the optimum uses the new coin at most once
    (t < 2c) and the remainder t - c is below c_j, so both optimum branches
    reduce to greedy counts over the certified prefix.  On failure the first
    failing test amount is returned; it need not be the globally smallest
    counterexample.
    """
    coins = _as_coins(coins)
    denoms = coins.denominations
    for j in range(1, len(denoms)):
        prev, new = denoms[j - 1], denoms[j]
        s = -(-new // prev)  # ceil
        t = s * prev
        prefix = denoms[:j]
        with_new = 1 + _greedy_prefix(prefix, t - new)  # greedy over extended system
        without_new = _greedy_prefix(prefix, t)
        if without_new < with_new:
            return Orderliness(False, t)
    return Orderliness(True, None)


@dataclass(frozen=True)
class GreedyPresentation:
    """Digit vector of the greedy representation of an amount over repunit coins.

    Digits are little-endian: digits[i-1] multiplies (b^i - 1)/(b - 1).  The
    top digit is unbounded; every lower digit is at most b, and a digit equal
    to b above the lowest position forces all lower digits to zero.
    Constructing a vector that violates these constraints raises.
    """

    b: int
    k: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(int(x) for x in self.digits))
        b, k, digits = self.b, self.k, self.digits
        if b < 2 or k < 1:
            raise InvalidParamsError(f"need base >= 2 and length >= 1, got b={b} k={k}")
        if len(digits) != k:
            raise InvalidParamsError(f"expected {k} digits, got {len(digits)}")
        if any(x < 0 for x in digits):
            raise InvalidParamsError("digits must be non-negative")
        if any(x > b for x in digits[:-1]):
            raise InvalidParamsError(f"non-top digits must be <= {b}: {digits}")
        for i in range(1, k - 1):  # positions 2..k-1, 1-based
            if digits[i] == b and any(digits[:i]):
                raise InvalidParamsError(
                    f"digit b at position {i + 1} forces lower digits to zero: {digits}")
        m = self.value()
        if digits[-1] != (b - 1) * m // (b**k - 1):
            raise InvalidParamsError(
                f"top digit {digits[-1]} is not the greedy quotient for amount {m}")

    def value(self) -> int:
        """The represented amount."""
        return sum(x * (self.b**i - 1) // (self.b - 1)
                   for i, x in enumerate(self.digits, start=1))


def greedy_presentation(b: int, k: int, M: int) -> GreedyPresentation:
    """Greedy digits of M over (1, (b^2-1)/(b-1), ..., (b^k-1)/(b-1)).

    Largest denomination first; the result is also an optimal representation
    because the repunit sequence is orderly.
    """
    if b < 2:
        raise InvalidParamsError(f"base must be >= 2, got {b}")
    if k < 1:
        raise InvalidParamsError(f"length must be >= 1, got {k}")
    _check_amount(M)
    digits = [0] * k
    for i in range(k, 0, -1):
        digits[i - 1], M = divmod(M, (b**i - 1) // (b - 1))
    return GreedyPresentation(b, k, tuple(digits))


def digit_sum(b: int, k: int, M: int) -> int:
    """Coin count of the greedy presentation (equals the optimal count)."""
    return sum(greedy_presentation(b, k, M).digits)


def weight(presentation: GreedyPresentation) -> int:
    """Weight of a presentation: sum of b^i * digit_i over positions i."""
    return sum(x * presentation.b**i
               for i, x in enumerate(presentation.digits, start=1))


def colex_compare(x: Sequence[int], y: Sequence[int]) -> int:
    """Colexicographic comparison of equal-length digit vectors.

    Returns -1, 0 or 1; the highest differing position decides.
    """
    if len(x) != len(y):
        raise InvalidParamsError(
            f"digit vectors differ in length: {len(x)} vs {len(y)}")
    for a, b in zip(reversed(x), reversed(y)):
        if a != b:
            return -1 if a < b else 1
    return 0
