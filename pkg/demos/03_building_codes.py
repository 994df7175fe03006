"""Constructing block-circulant codes that live in the twisted ring.

A code of length n = s*l is generated by a tuple (f_1, ..., f_l) of
polynomials modulo x^s - 1: codewords are the coefficient blocks of the left
multiples (u*f_1, ..., u*f_l).  The whole structure is governed by one
polynomial g (the greatest common left divisor of the tuple and x^s - 1) and
its cofactor h with g*h = h*g = x^s - 1: the dimension is deg h = s - deg g.
"""

from skewqc.codes import build_code, skew_shift
from skewqc.field import gf4
from skewqc.notation import parse_coeff_string, poly_to_terms
from skewqc.skewpoly import x_pow_minus_one
from skewqc.tables import get

F = gf4()

print("== a catalog code ==")
entry = get("index2-l2-40-9-21")
code = entry.build()
print("parameters:", code.params(), " claimed distance:", entry.d)
print("g =", poly_to_terms(code.g))
print("h =", poly_to_terms(code.h))
modulus = x_pow_minus_one(F, entry.s)
assert code.g * code.h == modulus == code.h * code.g
print("g*h = h*g = x^20 - 1  and  dim =", code.k, "= deg h =", code.h.degree)
print("spanning matrix shape:", code.genmatrix.shape)

print()
print("== encoding and the twisted shift ==")
message = [1, 2, 0, 3, 0, 0, 1, 0, 2]
word = code.encode(message)
print("message", message, "->", "".join(F.tokens[int(c)] for c in word))
assert code.is_codeword(word)
shifted = skew_shift(F, entry.s, word)
assert code.is_codeword(shifted)
print("its twisted shift is again a codeword (the defining closure property)")

print()
print("== building from an explicit tuple ==")
f1 = parse_coeff_string(F, "a1a^2011")
f2 = parse_coeff_string(F, "1 0 a a 1")
custom = build_code(F, 10, (f1, f2))
print("tuple -> code", custom.params(), " g =", poly_to_terms(custom.g))
print("shift-module closed:", custom.module_closed)
