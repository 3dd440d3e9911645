"""Rational generating functions for a few pattern families, checked against the automaton."""
from wordpat import closedform as cf
from wordpat import transfer
from wordpat.algebra import XSeries, series_div

# 1-avoiding words over {1,2,3} with no 11 and no 23: (3 + x - x^2)/(1 - 2x - x^2 + x^3)
q = series_div(XSeries([3, 1, -1], 8), XSeries([1, -2, -1, 1], 8))
print(q.at_y(0))
print(transfer.avoid_strings_series(3, ["11", "23"], 8).y_slice(0)[1:])

# runs of equal letters: 111 over three letters
print(cf.gf_ones(3, 3, 6).coefficient_lists())

# 112 over two letters; the y^0 column gives partial Fibonacci sums
F = cf.gf_ones_rise(3, 2, 12)
print([c[0] for c in F])
print([c[1] for c in F], "words with exactly one 112")

# some families, and which one a pattern lands in
for p in ("111", "221", "212", "2112", "3123", "132", "2113", "123", "1232"):
    spec = cf.identify_family(p)
    print(p, spec.family if spec else "none (automaton only)")

# every closed form agrees with the automaton, coefficient by coefficient
for p in ("212", "2112", "3123", "213", "3124", "123"):
    for k in (2, 3, 4):
        assert cf.dispatch(p, k, 12) == transfer.distribution_series(k, p, 12), (p, k)
print("closed forms agree to order 12")

# the U_n polynomials behind 123
for n in range(7):
    print(n, cf.u_poly(n))
