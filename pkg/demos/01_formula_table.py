#!/usr/bin/env python3
"""Walk the complete formula table for star-wheel Ramsey numbers.

R(K_{1,n}, W_m) is known exactly for every (n, m) except even rim lengths
m >= 10 with m <= n+1, where only a lower bound is known. This script
prints a slice of the table and tallies which theorem supplies each entry.
"""

from collections import Counter

from starwheel import formula

print("R(K_{1,n}, W_m) for n = 2..12, m = 3..14")
print()

header = "n\\m " + "".join(f"{m:>5}" for m in range(3, 15))
print(header)
for n in range(2, 13):
    cells = []
    for m in range(3, 15):
        bound = formula(n, m)
        mark = "" if bound.exact else "+"
        cells.append(f"{bound.value}{mark}".rjust(5))
    print(f"{n:>3} " + "".join(cells))

print()
print("entries marked + are lower bounds only")
print()

sources = Counter()
lower_only = []
for n in range(2, 31):
    for m in range(3, 71):
        bound = formula(n, m)
        sources[bound.source] += 1
        if not bound.exact:
            lower_only.append((n, m))

print("how often each theorem decides an entry (n <= 30, m <= 70):")
for source, count in sources.most_common():
    print(f"  {source:12} {count}")

print()
print(f"undecided (lower-bound-only) entries: {len(lower_only)}")
print(f"  first few: {lower_only[:6]}")
print("all of them have even m >= 10 with m <= n+1, the one remaining gap")
