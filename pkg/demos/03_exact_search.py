#!/usr/bin/env python3
"""Recompute small star-wheel Ramsey numbers from scratch.

The search enumerates one representative per isomorphism class of graphs
with max degree <= n-1 (anything denser contains the star outright) and
looks for a graph whose complement is wheel-free. The smallest order where
none exists is the Ramsey number. Subtrees whose complement already
contains the wheel are discarded early: induced subgraphs of the
complement persist as the graph grows, so nothing good is lost.
"""

import time

from starwheel import compute_ramsey, formula, to_graph6_str

for n, m in [(2, 4), (2, 5), (3, 4), (3, 5), (4, 6)]:
    start = time.perf_counter()
    result = compute_ramsey(n, m)
    elapsed = time.perf_counter() - start
    bound = formula(n, m)
    print(f"R(K_{{1,{n}}}, W_{m}):")
    for report in result.reports:
        line = report.to_line()
        extra = ""
        if report.witness is not None:
            extra = f"  witness {to_graph6_str(report.witness)}"
        print(f"  {line}{extra}")
    agree = "matches" if result.ramsey_number == bound.value else "DISAGREES WITH"
    print(f"  => {result.ramsey_number} in {elapsed:.2f}s; {agree} the formula value {bound.value}")
    print(f"  extremal good coloring on {result.extremal.n} vertices:"
          f" {to_graph6_str(result.extremal)}")
    print()

print("note the (4,6) lower side: the construction supplies the good graph")
print("on 10 vertices directly (enumerated=0), and the order-11 scan only")
print("has to refute a handful of survivors.")
