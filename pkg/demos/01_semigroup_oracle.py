"""Tour of the generic semigroup oracle.

Everything here works for arbitrary coprime generators; no structure is
assumed beyond gcd = 1.
"""
from apery import (
    apery_set,
    contains,
    frobenius_from_apery,
    gaps,
    genus_from_apery,
    pseudo_frobenius_from_apery,
    semigroup_report,
)

GENS = [7, 23, 71]

print(f"numerical semigroup generated by {GENS}")
ape = apery_set(GENS)
print(f"Apery set mod {ape.modulus} (least element per residue class):")
for r, value in enumerate(ape.minima):
    print(f"  class {r}: {value}")

print(f"\nFrobenius number: {frobenius_from_apery(ape)}")
print(f"genus (count of gaps): {genus_from_apery(ape)}")

pf = pseudo_frobenius_from_apery(ape)
print(f"pseudo-Frobenius set: {pf}  (type {len(pf)})")

print("\nmembership checks:")
for n in (46, 47, 48, 110, 111):
    verdict = "in" if contains(ape, n) else "not in"
    print(f"  {n} is {verdict} the semigroup")

all_gaps = gaps(ape)
print(f"\nfirst ten gaps: {all_gaps[:10]}")
print(f"last gap equals the Frobenius number: {all_gaps[-1]}")

# the one-call summary bundles the same quantities
report = semigroup_report(GENS)
print(f"\nsemigroup_report: F={report.frobenius} g={report.genus} "
      f"t={report.type} via {report.engine}")
