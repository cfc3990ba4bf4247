"""The named generator families from the semigroup literature.

Each family is a parameter recipe that lands inside the general
(a, b, d, k) scheme; resolving one hands back a FamilyParams ready for
the closed forms.
"""
from apery import (
    FamilySpec,
    catalog,
    frobenius_closed,
    genus_closed,
    mersenne,
    build_generators,
    resolve,
    thabit,
)

print("available families:")
for entry in catalog():
    names = ", ".join(spec["name"] for spec in entry["params"])
    print(f"  {entry['name']:<14} params: {names}")

print("\nMersenne numerical semigroups <2^n - 1, 2^n, 2^n + 1, ...>:")
for n in range(2, 8):
    p = mersenne(n)
    print(f"  n={n}: a={p.a:>4}  F={frobenius_closed(p):>10}  "
          f"g={genus_closed(p)}")

p = thabit(1)
print(f"\nThabit n=1: generators {build_generators(p).elements}")
print(f"  F={frobenius_closed(p)} g={genus_closed(p)}")

# the same resolution is reachable by name, for config-driven callers
spec = FamilySpec("song-gt", {"n": 3, "m": 2})
p = resolve(spec)
print(f"\nresolved {spec.name} {dict(spec.params)}: "
      f"a={p.a} b={p.b} d={p.d} k={p.k}")
print(f"  generators {build_generators(p).elements}")
print(f"  F={frobenius_closed(p)} g={genus_closed(p)}")
