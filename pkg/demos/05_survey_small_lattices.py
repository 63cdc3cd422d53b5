"""Survey every weakly complemented lattice with at most five elements.

For each base lattice we attach every weak complementation, then count
filters, S-filters and congruences, and flag the instances where the
determination partition fails to be a congruence.
"""

from wdlat import (enumerate_congruences, enumerate_dicomplementations,
                   enumerate_filters, enumerate_lattices, enumerate_s_filters,
                   structure_checks)

print(f"{'instance':<14} {'dist':<5} {'|F|':>3} {'|SF|':>4} "
      f"{'|Con|':>5}  findings")
total = 0
for n in range(1, 6):
    for i, lat in enumerate(enumerate_lattices(n)):
        for k, D in enumerate(enumerate_dicomplementations(lat, "delta")):
            name = f"size{n}.{i}-wc{k}"
            report = structure_checks(D)
            bad = sorted({r.law_id for r in report.findings()})
            print(f"{name:<14} {str(lat.is_distributive()):<5} "
                  f"{len(enumerate_filters(D)):>3} "
                  f"{len(enumerate_s_filters(D)):>4} "
                  f"{len(enumerate_congruences(D)):>5}  "
                  f"{', '.join(bad) if bad else '-'}")
            total += 1

print()
print(total, "instances surveyed")

# The four element Boolean frame with the trivial table is the
# smallest case where the determination partition glues all non-units
# yet fails to respect join, so "same weak complement" does not induce
# a congruence, and the instance is vacuously regular even though the
# partition is far from diagonal.
square = next(lat for lat in enumerate_lattices(4) if len(lat.atoms) == 2)
D = list(enumerate_dicomplementations(square, "delta"))[1]
report = structure_checks(D)
print()
print("four element frame with trivial weak complementation:")
for line in report.lines():
    if line.startswith("FINDING"):
        print(" ", line)
