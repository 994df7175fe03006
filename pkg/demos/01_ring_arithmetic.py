"""Tour of the twisted polynomial ring over GF(4).

GF(4) = {0, 1, a, a^2} is encoded as the integers 0..3 and carries the
squaring automorphism theta(z) = z^2 of order 2.  Polynomials multiply with
the twist x*b = theta(b)*x, so the ring is non-commutative: which side you
multiply on matters, and so does which side you divide on.
"""

from skewqc.field import gf4
from skewqc.notation import parse_coeff_string, poly_to_terms
from skewqc.skewpoly import SkewPoly, gcrd, lclm, right_divmod

F = gf4()
A, A2 = 2, 3

print("== the field ==")
print("elements:", ", ".join(F.tokens))
print("a * a   =", F.tokens[F.mul[A][A]], "   a * a^2 =", F.tokens[F.mul[A][A2]])
print("a + a^2 =", F.tokens[F.add[A][A2]], "   theta(a) =", F.tokens[F.theta(A)])

print()
print("== twisted products ==")
ax = SkewPoly(F, [0, A])        # a*x
a2x = SkewPoly(F, [0, A2])      # a^2*x
print("(a*x)(a^2*x) =", poly_to_terms(ax * a2x), "   <- theta twists the inner a^2")
print("(a^2*x)(a*x) =", poly_to_terms(a2x * ax), "   <- swapped order, different result")
x = SkewPoly(F, [0, 1])
a = SkewPoly(F, [A])
print("x * a =", poly_to_terms(x * a), "  but  a * x =", poly_to_terms(a * x))

print()
print("== division happens on a side ==")
g = parse_coeff_string(F, "a01a^2011")   # coefficient string, lowest degree first
f = parse_coeff_string(F, "a^211")
q, r = right_divmod(g, f)
print("g =", poly_to_terms(g))
print("f =", poly_to_terms(f))
print("right division g = q*f + r:")
print("  q =", poly_to_terms(q))
print("  r =", poly_to_terms(r))
assert g == q * f + r

print()
print("== greatest common right divisor with certificate ==")
res = gcrd(g, f * g)
print("gcrd(g, f*g) =", poly_to_terms(res.gcd), " (g itself, made monic)")
assert res.cofactor_f * g + res.cofactor_g * (f * g) == res.gcd
print("Bezout checks: cofactor_f*g + cofactor_g*(f*g) == gcd")

lcm = lclm(g, f)
print("deg lclm(g, f) =", lcm.degree, "= deg g + deg f - deg gcrd(g, f) =",
      g.degree + f.degree - gcrd(g, f).gcd.degree)
