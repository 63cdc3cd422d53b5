"""S-filters and their spectra.

A filter F is an S-filter when the interior meet of any two members
stays inside F.  S-filters are exactly the traces of filters of the
skeleton, and prime / primary / maximal behave very differently on
the base lattice and on the skeleton.
"""

from wdlat import (builtin, classify, dagger_witness, enumerate_filters,
                   enumerate_s_filters, extend_to_primary, s_conditions,
                   trace, verify_spectral_theorems)

D = builtin("L6")

print("filters of L6 and why they are (not) S-filters:")
for F in enumerate_filters(D):
    members = "{" + ",".join(F.members) + "}"
    w = dagger_witness(D, F)
    if w is None:
        print(f"  {members:<16} S-filter")
    else:
        x, y, m = w
        print(f"  {members:<16} leaks: {x} meet-int {y} = {m}, not a member")

# The three membership conditions agree on every filter.
F2 = next(F for F in enumerate_filters(D) if F.members == ("a", "1"))
print()
print("conditions on {a,1}:", s_conditions(D, F2))

print()
print("S-filters and their skeleton traces:")
for S in enumerate_s_filters(D):
    members = "{" + ",".join(S.members) + "}"
    print(f"  {members:<16} trace {{{','.join(trace(D, S))}}}")

# Spectral classification lives on two universes.
print()
print("classification over the base lattice:")
for S in enumerate_s_filters(D):
    c = classify(D, S, universe="L")
    members = "{" + ",".join(S.members) + "}"
    print(f"  {members:<16} prime={c.is_prime} primary={c.is_primary} "
          f"maximal={c.is_maximal} proper={c.is_proper}")

# Any proper S-filter extends to a primary one by a greedy sweep.
top = next(S for S in enumerate_s_filters(D) if S.members == ("1",))
print()
print("extend_to_primary({1}) =",
      "{" + ",".join(extend_to_primary(D, top).members) + "}")

print()
print(verify_spectral_theorems(D).summary())
