"""Congruences of a weakly complemented lattice.

On a distributive base lattice every S-filter F induces a congruence
theta_F whose class of 1 is exactly F, the map is least among
congruences collapsing F, and the induced congruences permute.
"""

from wdlat import (builtin, determination_congruence, enumerate_congruences,
                   enumerate_s_filters, regular, structure_checks,
                   theta_from_filter)

D = builtin("L6")

print("Con(L6):")
for c in enumerate_congruences(D):
    print(" ", " | ".join("{" + ",".join(b) + "}" for b in c.blocks))

print()
print("theta_F for each S-filter (class of 1 recovers F):")
for S in enumerate_s_filters(D):
    c = theta_from_filter(D, S)
    blocks = " | ".join("{" + ",".join(b) + "}" for b in c.blocks)
    print(f"  F = {{{','.join(S.members)}}}")
    print(f"      theta_F = {blocks}   cokernel {{{','.join(c.cokernel)}}}")

# The determination partition glues elements with equal weak complement.
phi = determination_congruence(D)
print()
print("determination partition:",
      " | ".join("{" + ",".join(b) + "}" for b in phi.blocks))
print("regular (classes determined by their weak complements):",
      regular(D))

# The non-distributive L7 is simple, so only two congruences exist,
# the theta_F laws are skipped rather than tested vacuously, and the
# determination partition fails to be a congruence at all.
L7 = builtin("L7")
print()
print("Con(L7) has", len(enumerate_congruences(L7)), "members")
report = structure_checks(L7)
print(report.summary())
for line in report.lines():
    if line.startswith("FINDING"):
        print(" ", line)
print(" ", next(l for l in report.lines() if l.startswith("SKIP")))
