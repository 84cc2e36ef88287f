#!/usr/bin/env python3
"""Isomorph-free enumeration, the engine behind the exhaustive searches.

A graph labeling is canonical when its upper-triangle bit string (read
column by column) is lexicographically maximal over all orderings.
Deleting the last vertex of a canonical labeling leaves a canonical
labeling, so extending canonical graphs vertex by vertex and keeping only
the canonical children visits every isomorphism class exactly once.
"""

from starwheel import canonical_form, cycle, enumerate_degree_bounded, to_graph6_str

print("== all graphs by order ==")
for order in range(1, 8):
    count = sum(1 for _ in enumerate_degree_bounded(order, order - 1))
    print(f"order {order}: {count} isomorphism classes")

print()
print("== degree caps shrink the space fast ==")
for dmax in range(8):
    count = sum(1 for _ in enumerate_degree_bounded(8, dmax))
    print(f"order 8, max degree <= {dmax}: {count} classes")

print()
print("== the eleven graphs on five vertices with max degree <= 2 ==")
print("(disjoint unions of paths and cycles)")
for g in enumerate_degree_bounded(5, 2):
    print(f"  {to_graph6_str(g)}  edges={sorted(g.edges())}")

print()
print("== canonical forms identify isomorphic graphs ==")
a = cycle(5)
b = a.relabel([2, 4, 1, 3, 0])
print(f"C_5 as built:   {a.rows}")
print(f"relabeled:      {b.rows}")
print(f"canonical both: {canonical_form(a).rows} == {canonical_form(b).rows}")
