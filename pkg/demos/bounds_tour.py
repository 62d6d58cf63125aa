"""
A tour of the bounds
====================

Side by side: the conjectured 2k - 2, the older quadratic bound, and the two
k*sqrt(k) bounds (arborescences and all oriented trees). The inequalities the
recursions need are then checked with outward-rounded interval arithmetic.
"""

from orientree.bounds import (
    bound_table,
    verify_chain_bblock,
    verify_inequality_arbo,
    verify_inequality_main,
    verify_recurrence_sweep,
)

print(f"{'k':>6} {'2k-2':>8} {'k^2/2':>10} {'arbo':>10} {'main':>10}")
for row in bound_table([3, 5, 10, 30, 100, 1000, 10000]):
    print(f"{row['k']:>6} {row['burr']:>8.0f} {row['addario_general']:>10.1f} {row['arbo']:>10.1f} {row['main']:>10.1f}")

# %%
# The quadratic bound wins for tiny k; the k*sqrt(k) bounds take over quickly.

for rep in (verify_inequality_arbo(10**5), verify_inequality_main(10**5), verify_inequality_main(10**5, extra=9),
            verify_recurrence_sweep(2000), verify_chain_bblock(6, 200)):
    print(rep.summary())
