"""The filter lattice of a weakly complemented lattice carries a dual
weak complementation of its own.

The annihilator F* = {a | x^d <= a for all x in F} plays the role of
the dual weak complementation on F(L), and under the condition
"x join y = 1 implies x^d <= y" it is even a pseudocomplement.
"""

from wdlat import (builtin, enumerate_filters, filter_lattice_dual_wcl,
                   principal_filter, pseudocomplement_checks, star)

D = builtin("L6")

print("filters of L6, by size:")
for F in enumerate_filters(D):
    members = "{" + ",".join(F.members) + "}"
    print(f"  {members:<16} star -> {{{','.join(star(D, F.members).members)}}}")

# F(L) with star satisfies the dual axioms (1')(2')(3');
# the report also verifies the closure operator laws of X -> X**.
FL, report = filter_lattice_dual_wcl(D)
print()
print("the filter lattice as a lattice:", " ".join(FL.base.names))
print(report.summary())

# Principal filters map dually: [a)* = [a^d).
a_star = star(D, principal_filter(D.base, "a").members)
print()
print("[a)* =", "{" + ",".join(a_star.members) + "}",
      " and a^d =", D.weak_complement("a"))

# Under the join-top condition, star is the pseudocomplement on F(L).
print()
print(pseudocomplement_checks(D).summary())
