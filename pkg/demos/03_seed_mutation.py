"""Classical seeds and the exchange relation, on the A2 pentagon.

Walking mu_1, mu_2, mu_1, mu_2, mu_1 visits all five clusters and
returns to the initial seed with its two variables swapped.  Every
variable along the way is a Laurent polynomial in {x1, x2} even though
each step divides by the previous variable.
"""

from qcluster import ClassicalSeed, ExchangeMatrix, classical_mutate, laurent_report

seed = ClassicalSeed.initial(ExchangeMatrix([[0, 1], [-1, 0]]))
print("initial cluster:", ", ".join(str(v) for v in seed.cluster()))

walk = seed
for step, k in enumerate((0, 1, 0, 1, 0), start=1):
    walk = classical_mutate(walk, k)
    print(f"after mu_{k + 1}:  x{k + 1} ->", walk.vars[k])

print()
print("back to start (transposed):", walk.vars == (seed.vars[1], seed.vars[0]))

# mutation is an involution
assert classical_mutate(classical_mutate(seed, 0), 0) == seed

# the membership report records support and monomial denominator per step
report = laurent_report(seed, [0, 1, 0])
for row in report.rows:
    print(
        f"step {row.step}: denominator exponents {row.denominator},"
        f" {len(row.support)} terms"
    )

# frozen variables ride along untouched: row 3 of this matrix is frozen
b = ExchangeMatrix([[0, 1], [-1, 0], [1, 0]], ex=[0, 1])
s = ClassicalSeed.initial(b)
print()
print("with a frozen variable, mu_1 gives", classical_mutate(s, 0).vars[0])
