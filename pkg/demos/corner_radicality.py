"""Radicality of full corner collections and the decomposition identities.

Run: python demos/corner_radicality.py
"""
from cornerminors import MinorCollection, decomposition_check, is_radical_corner, minimal_primes
from cornerminors.combinatorics import interval_graph
from cornerminors.primes import obstruction_cycle

print("m n  radical  obstruction")
for m in range(2, 5):
    for n in range(2, 5):
        c = MinorCollection.full_corner(m, n)
        cyc = obstruction_cycle(c)
        g = interval_graph(c)
        shown = "-" if cyc is None else " ".join(g.node_name(v) for v in cyc.nodes)
        print(f"{m} {n}  {str(is_radical_corner(c)):7s}  {shown}")

c = MinorCollection.full_corner(3, 3)
print("\nminimal primes of the 3x3 corner collection:")
for p in minimal_primes(c):
    print("  ", p)

print("\nidentity checks by degree (3x3)")
rows = decomposition_check(c, max_degree=5)
for r in rows:
    if r["degree"] == "all":
        print(f"  {r['identity']:22s} by elimination: {r['pass']}")

# the picture changes for two rows: column 1 is the only nonempty support
rows = decomposition_check(MinorCollection.full_corner(2, 3), max_degree=4, elimination=False)
bad = sorted({r["identity"] for r in rows if r["pass"] is False})
print("\nidentities failing on the 2x3 corner collection:", ", ".join(bad))
