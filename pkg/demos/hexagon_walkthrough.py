"""Walk through the four-minor collection on a 4x4 grid.

Run: python demos/hexagon_example_walkthrough.py
"""
from cornerminors import (ideal_equals, ideal_of, interval_decomposition, interval_graph, minimal_primes,
                          saturate, toric_ideal)
from cornerminors.combinatorics import enumerate_chordless_cycles
from cornerminors.suites import hexagon_example

c = hexagon_example()
print("minors:", ", ".join(str(x) for x in c.minors))
print("cells used:", len(c.vertices))

vert, horiz = interval_decomposition(c)
print("\nmaximal vertical intervals")
for iv in vert:
    print("  ", iv)
print("maximal horizontal intervals")
for iv in horiz:
    print("  ", iv)

g = interval_graph(c)
print("\nchordless cycles of the interval graph")
ring = c.ring()
for s in enumerate_chordless_cycles(g):
    print("  ", " ".join(g.node_name(v) for v in s.nodes))

i = ideal_of(c, ring)
j = toric_ideal(c, ring=ring)
extra = [f for f in j.generators if f not in i.generators]
print("\nI(C) has", len(i), "generators; J_C adds", len(extra))
for f in extra:
    print("  ", f)

# J_C is what is left of I(C) once every cell is inverted
sat = saturate(i, c.vertices)
print("saturation equals J_C:", ideal_equals(sat, j))
print("I(C) is prime:", ideal_equals(i, j))

print("\nminimal primes")
for p in minimal_primes(c):
    print("  ", p, "->", len(p.generators), "generators")
