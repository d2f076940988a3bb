"""From exponent vectors to a matrix group.

The input data for everything in this package is a pair of exponent
vectors: rationals in [0, 1) whose associated roots of unity are the roots
of two integer polynomials f and g.  This script builds the polynomials,
their companion matrices A and B, and looks at C = A^-1 B, whose deviation
from the identity is a single column.
"""

from sp4mono import (
    ExponentVector,
    companion,
    evaluate_word,
    from_exponents,
    levelt_triple,
    parse_word,
)

alpha = ExponentVector.from_strings(["1/2", "1/2", "1/3", "2/3"])
beta = ExponentVector.from_strings(["1/4", "1/4", "3/4", "3/4"])

f = from_exponents(alpha)
g = from_exponents(beta)
print("f =", f)
print("g =", g)
print("f - g =", f - g)

triple = levelt_triple(f, g)
print("\ncompanion matrix A:")
print(triple.A)
print("companion matrix B:")
print(triple.B)
print("C = A^-1 B:")
print(triple.C)
print("v = last column of C - I:", triple.v)

# Words in A and B evaluate to exact integer matrices.  C is accepted in
# word text as shorthand for A^-1 B.
word = parse_word("A^-7 B^3 C B^-3 A^7")
print("\nword", word, "evaluates to:")
print(evaluate_word(triple, word))

print("\nsanity: A equals the companion of f:", triple.A == companion(f))
