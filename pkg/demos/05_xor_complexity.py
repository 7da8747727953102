"""
How many XORs?
==============

Counted encoding and decoding cost per information bit for C(p-r, r, p),
next to the circulant Cauchy code's closed forms.
"""

import sys

from cauchy_mds.metrics import normalized_curves, write_csv

for r in (4, 5):
    rows = normalized_curves(r, p_max=61)
    print(f"r = {r}")
    print(f"{'p':>4} {'mode':>7} {'ours':>7} {'circ.':>7} {'saved':>7}")
    for row in rows:
        print(f"{row.p:4d} {row.mode:>7} {row.normalized_proposed:7.2f} {row.normalized_circulant:7.2f} {row.reduction_pct:6.1f}%")

# The same rows as CSV
write_csv(normalized_curves(4, [11, 13]), sys.stdout)
