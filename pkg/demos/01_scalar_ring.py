"""Warm-up: the two scalar rings everything else is built on.

QLaurent holds an integer Laurent polynomial in v = q^{1/2}; CommLaurent
holds an ordinary multivariate Laurent polynomial.  Both are exact, and
both support the one operation mutation actually needs: exact division
that either succeeds or refuses loudly.
"""

from qcluster import CommLaurent, NotDivisibleError, QLaurent

# q-scalars: v^2 = q, so QLaurent.q_power(1) is v^2
q = QLaurent.q_power(1)
v = QLaurent.v_power(1)
print("q          =", q)
print("v^2        =", v * v)
print("q + q^-1   =", q + QLaurent.q_power(-1))

# bar swaps v and v^-1
f = QLaurent({3: 2, -1: 5})
print("f          =", f)
print("bar(f)     =", f.bar())
print("f(1)       =", f.eval_at_one())

# exact division: (v^2 - v^-2) / (v - v^-1) = v + v^-1
num = QLaurent({2: 1, -2: -1})
den = QLaurent({1: 1, -1: -1})
print("ratio      =", num.exact_div(den))

try:
    (q + 1).exact_div(den)
except NotDivisibleError as exc:
    print("refused    :", exc)

# commutative Laurent polynomials in two variables
x1 = CommLaurent.generator(2, 0)
x2 = CommLaurent.generator(2, 1)
g = x1 ** 2 - x2 ** 2
print()
print("g          =", g)
print("g/(x1-x2)  =", g.exact_div(x1 - x2))
print("(1+x2)/x1  =", (1 + x2).exact_div(x1))
