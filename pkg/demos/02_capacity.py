#!/usr/bin/env python3
"""How many distinct words fit in an n-qubit register.

With i free qubits there are C(n,i) ways to place them and 2^(n-i)
settings of the pinned ones, so the register holds
sum_i C(n,i)*2^(n-i) = 3^n distinct words: more than the 2^n basis
states, far fewer than the 2^(2^n) conceivable bit words.
"""

from svmem import capacity, encode, enumerate_patterns

report = capacity(4)
print("capacity breakdown for n=4 (i = number of free qubits):")
print(f"{'i':>3} {'C(n,i)':>8} {'2^(n-i)':>8} {'words':>8}")
for row in report.rows:
    print(f"{row.i:>3} {row.choose:>8} {row.codes:>8} {row.product:>8}")
print(f"total: {report.total} (= 3^4)")
print()

# The count is exact big-integer arithmetic, so it stays honest long after
# doubles would have rounded it off.
for n in (10, 20, 40):
    total = capacity(n).total
    print(f"n={n:>2}: {total}  (2^n = {1 << n})")
print()

# Cross-check the combinatorics against brute force: encode every pattern
# and count the distinct state vectors that come out.
n = 6
distinct = {encode(p).amps.tobytes() for p in enumerate_patterns(n)}
print(f"brute force over all 3^{n} patterns: {len(distinct)} distinct words")
print(f"capacity({n}).total:                 {capacity(n).total}")
