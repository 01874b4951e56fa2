"""Contingency tables moved by the minors of a collection.

Run: python demos/fiber_walks.py
"""
import random

from cornerminors import ContingencyTable, MinorCollection, certify_connection, fiber_connected, move_basis
from cornerminors.fibers import fiber_size
from cornerminors.poly import Cell
from cornerminors.suites import hexagon_example, random_table, table_pair

# the two monomials of the hexagon binomial have the same margins
c = hexagon_example()
u = ContingencyTable({Cell(1, 2): 1, Cell(2, 3): 1, Cell(3, 4): 1})
v = ContingencyTable({Cell(1, 4): 1, Cell(2, 2): 1, Cell(3, 3): 1})
print("margins agree:", u.margins() == v.margins())
print("minor moves connect them:", fiber_connected(u, v, move_basis(c)).verdict)

# extra mass at x11 and x21 opens a path
u2 = ContingencyTable({**u.values, Cell(1, 1): 1, Cell(2, 1): 1})
v2 = ContingencyTable({**v.values, Cell(1, 1): 1, Cell(2, 1): 1})
res = fiber_connected(u2, v2, move_basis(c))
print("with x11 and x21 added:", res.verdict, "via moves", res.witness)

corner = MinorCollection.full_corner(3, 3)
rng = random.Random(7)
t = random_table(rng, corner, 2)
print("\nrandom 3x3 table:", t.to_dict()["cells"])
print("size of its move component:", fiber_size(t, move_basis(corner)))

certified = 0
for _ in range(50):
    a, b, _ = table_pair(rng, corner, high=3)
    cert = certify_connection(a, b, corner)
    if cert["verdict"] == "certified":
        certified += 1
        assert fiber_connected(a, b, move_basis(corner)).verdict == "connected"
print("certified pairs out of 50:", certified, "(all confirmed by search)")
