"""Build a weakly dicomplemented lattice from text and inspect it.

The plain text format lists the elements, the cover relation of the
order, and the two unary tables.  Everything else (meets, joins, the
axiom checks, the skeletons) is computed.
"""

from wdlat import attach, axiom_report, build_lattice, parse, to_dot

TEXT = """\
elements: 0 u v a b 1
cover: 0 u
cover: 0 v
cover: u a
cover: v a
cover: v b
cover: a 1
cover: b 1
delta: 0 1
delta: u b
delta: v 1
delta: a b
delta: b u
delta: 1 0
nabla: 0 1
nabla: u v
nabla: v u
nabla: a 0
nabla: b 0
nabla: 1 0
"""

spec = parse(TEXT)
lat = build_lattice(spec)
D = attach(lat, delta=dict(spec.delta), nabla=dict(spec.nabla))

print("carrier:", " ".join(lat.names))
print("distributive:", lat.is_distributive())

# Every axiom is a registered law; the report lists one line per law.
report = axiom_report(D)
for line in report.lines():
    print(line)
print(report.summary())

# The two skeletons: fixed points of the double applications.
names = lat.names
print("interior skeleton:", [names[i] for i in D.interior_fixed()])
print("closure skeleton: ", [names[i] for i in D.closure_fixed()])

# Derived operations at one pair.
print("a meet_interior b =", D.meet_interior("a", "b"))
print("u join_closure  v =", D.join_closure("u", "v"))

# A Hasse diagram with the interior skeleton drawn as boxes.
print()
print(to_dot(D))
