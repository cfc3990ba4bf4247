"""Change making with repunit coin systems.

The Apery-set formulas lean on one combinatorial fact: for coins
(1, R_2, ..., R_k) with R_i = (b^i - 1)/(b - 1), the greedy algorithm
always makes optimal change.  This demo exercises that machinery.
"""
from apery import (
    colex_compare,
    digit_sum,
    greedy_count,
    greedy_presentation,
    is_orderly,
    opt_count,
    repunit_coins,
    weight,
)

coins = repunit_coins(b=3, k=3)
print(f"repunit coins for b=3, k=3: {coins.denominations}")

verdict = is_orderly(coins)
print(f"orderly (greedy always optimal): {verdict.orderly}")

print("\ngreedy vs optimal on a few amounts:")
for amount in (12, 25, 38, 100):
    print(f"  M={amount:>3}: greedy={greedy_count(coins, amount)} "
          f"optimal={opt_count(coins, amount)}")

# the classic counterexample system: greedy pays 6 = 4 + 1 + 1
bad = [1, 3, 4]
verdict = is_orderly(bad)
print(f"\ncoins {bad}: orderly={verdict.orderly}, "
      f"smallest counterexample M={verdict.counterexample}")
m = verdict.counterexample
print(f"  greedy={greedy_count(bad, m)} optimal={opt_count(bad, m)}")

# greedy change as a digit vector, lowest denomination first
print("\ngreedy presentations for b=3, k=3:")
for amount in (0, 5, 13, 26, 40):
    pres = greedy_presentation(3, 3, amount)
    print(f"  M={amount:>2}: digits={pres.digits} "
          f"coin count={digit_sum(3, 3, amount)}")

# colex order on digit vectors sorts the attached weights
x = greedy_presentation(3, 3, 14)
y = greedy_presentation(3, 3, 20)
order = {-1: "<", 0: "=", 1: ">"}[colex_compare(x.digits, y.digits)]
print(f"\ncolex: digits(14) {order} digits(20); "
      f"weights {weight(x)} vs {weight(y)}")
