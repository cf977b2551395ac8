"""Re-check the structural results on small catalogs and seeded random graphs.

Each report counts instances and lists any counterexample as graph6 strings
that can be replayed.  The same suites are available as
``circalt verify <suite>``.
"""

from circalt.verify import run_suite

for report in run_suite("all", max_n=5, seed=1, count=20):
    print(report.to_text())
