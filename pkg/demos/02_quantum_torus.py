"""The quantum torus: q-commuting variables with a bar-invariant basis.

Elements are stored on the normalized monomial basis X^a, where
X^a X^b = v^{Lambda(a,b)} X^{a+b}.  The ordered-product view shows the
same element as a sum of plain words X_1^{a_1} X_2^{a_2} with q^{p/2}
prefactors.
"""

from qcluster import QLaurent, SkewMatrix, TorusElement

lam = SkewMatrix([[0, 1], [-1, 0]])  # X1 X2 = q X2 X1

X1 = TorusElement.generator(lam, 0)
X2 = TorusElement.generator(lam, 1)

print("X1*X2      =", X1 * X2)
print("X2*X1      =", X2 * X1)
print("commute?   ", (X1 * X2) == (X2 * X1))

# the basis monomial X^(1,1) sits exactly between the two orderings
prod = X1 * X2
print("as words   :", [(e, str(c)) for e, c in prod.ordered_terms()])

# quasi-commutation detection: f g = q^t g f
f = TorusElement.monomial(lam, (-1, 0)) + TorusElement.monomial(lam, (-1, 1))
g = X2
t = f.quasi_commutation(g)
print("f,g twist  =", t)
assert f * g == g.scalar_mul(QLaurent.q_power(t)) * f

# bar-invariance: basis monomials are fixed, v-multiples are not
m = TorusElement.monomial(lam, (3, -2))
print("bar fixes X^(3,-2):", m.bar() == m)
tw = m.scalar_mul(QLaurent.v_power(1))
print("bar fixes v*X^(3,-2):", tw.bar() == tw)

# exact one-sided division undoes multiplication on the correct side
h = (X1 + X2) * f
print("right quotient restored:", h.exact_div_right(f) == X1 + X2)

# at q = 1 the torus collapses onto the commutative ring
print("q=1 shadow :", (f * g).specialize_q1())
