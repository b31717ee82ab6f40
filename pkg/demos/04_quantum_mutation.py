"""Quantum mutation: same exchange combinatorics, q-commuting variables.

A quantum seed carries a skew form Lambda compatible with its exchange
matrix.  Mutation transports both, keeps all variables inside the based
quantum torus, and commutes with the q = 1 specialization.
"""

from qcluster import (
    ExchangeMatrix,
    QuantumSeed,
    SkewMatrix,
    classical_mutate,
    principal_seed,
    quantum_mutate,
    specialize_seed,
    verify_quantum_seed,
)

# smallest interesting example: one exchangeable and one frozen variable
seed = QuantumSeed.initial(
    ExchangeMatrix([[0], [1]], ex=[0]),
    SkewMatrix([[0, -1], [1, 0]]),
)
print("d =", seed.d)

s1 = quantum_mutate(seed, 0)
print("X1' =", s1.vars[0])
print("    =", " + ".join(f"{c} * X^{e}" for e, c in s1.vars[0].ordered_terms()))
print("Lambda' =", s1.lam.rows())
assert quantum_mutate(s1, 0) == seed  # involution, on the nose

# verification: compatibility, pairwise quasi-commutation, bar-invariance
verdict = verify_quantum_seed(s1)
print("verifies:", verdict.ok)

# pairing the mutated variables with the pre-mutation frame is caught
bad = QuantumSeed(seed.lam, s1.b, s1.vars, s1.d)
print("tampered:", verify_quantum_seed(bad).to_json()["quasi_commutation"])

# principal coefficients: B widens to [B; I] with the canonical frame
ps = principal_seed([[0, 1], [-1, 0]])
print()
print("principal B-rows:", ps.b.rows())
print("principal Lambda:", ps.lam.rows())

# the q = 1 square closes exactly, variable by variable
qs, cs = ps, specialize_seed(ps)
for k in (0, 1, 0):
    qs = quantum_mutate(qs, k)
    cs = classical_mutate(cs, k)
    assert qs.vars[k].specialize_q1() == cs.vars[k]
print("specialization square commutes on a length-3 walk")
