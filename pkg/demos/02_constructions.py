#!/usr/bin/env python3
"""Build the extremal constructions and check them end to end.

The lower-bound witness for R(K_{1,n}, W_m) > 2n + m/2 - theta - 1 is the
disjoint union of the complement of a sparse regular graph H and a clique
K_n. H is (m/2-1)-regular with every component of order at most m-1, which
is exactly what makes the complement of the witness wheel-free.
"""

from starwheel import (
    circulant,
    components,
    contains_star,
    contains_wheel,
    is_good_coloring,
    lower_bound_witness,
    max_degree,
    regular_bounded_components,
    theta,
    to_graph6_str,
)

print("== circulants: the regular building blocks ==")
for n, s in [(7, 1), (9, 2), (5, 2)]:
    g = circulant(n, s)
    print(f"circulant({n},{s}): {2*s}-regular on {n} vertices, graph6 {to_graph6_str(g)}")

print()
print("== k-regular graphs with every component of order <= 2k+1 ==")
for k, n in [(2, 7), (3, 8), (4, 23), (5, 26)]:
    g = regular_bounded_components(k, n)
    orders = [len(c) for c in components(g)]
    assert all(g.degree(v) == k for v in range(n))
    print(f"k={k}, n={n}: component orders {orders} (cap {2*k+1})")

print()
print("== the lower-bound witness ==")
for n, m in [(4, 6), (6, 8), (8, 12), (10, 16)]:
    w = lower_bound_witness(n, m)
    t = theta(n, m)
    print(f"(n={n}, m={m}): theta={t}, order {w.n} = 2n+m/2-theta-1,"
          f" max degree {max_degree(w)} = n-1")
    star = contains_star(w, n)
    wheel = contains_wheel(w.complement(), m)
    print(f"  K_{{1,{n}}} in witness: {star}")
    print(f"  W_{m} in complement: {wheel}")
    verdict = is_good_coloring(w, n, m)
    print(f"  good coloring: {bool(verdict)} -> R(K_{{1,{n}}}, W_{m}) > {w.n}")
    print(f"  graph6: {to_graph6_str(w)}")
