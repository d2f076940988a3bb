"""Anti-diagonal bases and root-group classification.

Upper triangular unipotent matrices form the unipotent radical of a Borel
subgroup only after the form is put into anti-diagonal shape.  This script
builds such a basis from the seed v, rewrites C in basis coordinates, and
classifies a few unipotent elements into the four positive root groups of
the symplectic group.
"""

from sp4mono import (
    MatrixQ,
    build_basis,
    classify_unipotent,
    coverage,
    from_exponents,
    invariant_form,
    is_in_U,
    levelt_triple,
    to_basis_coords,
    verify_basis,
)
from sp4mono.cyclotomic import ExponentVector

alpha = ExponentVector.from_strings(["1/3", "1/3", "2/3", "2/3"])
beta = ExponentVector.from_strings(["0", "0", "1/4", "3/4"])
triple = levelt_triple(from_exponents(alpha), from_exponents(beta))
form = invariant_form(triple)

basis = build_basis(form, triple.v)
c1, c2 = verify_basis(form, basis)
print("built basis (eps1, eps2, eps2*, eps1*):")
for v in basis.vectors:
    print("  (%s)" % ", ".join(v.to_strings()))
print("Gram constants: (%s, %s)" % (c1, c2))

p = to_basis_coords(triple.C, basis)
print("\nC in basis coordinates:")
print(p)
print("in unipotent radical:", is_in_U(p, c1, c2))
print("root label:", classify_unipotent(p, c1, c2))

def elem(entries):
    rows = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for (i, j), value in entries.items():
        rows[i][j] = value
    return MatrixQ(rows)

# One representative per positive root group; paired entries obey the
# linkage forced by the Gram constants.
samples = [
    elem({(0, 3): 7}),
    elem({(1, 2): 5}),
    elem({(0, 2): c2, (1, 3): c1}),
    elem({(0, 1): -c2, (2, 3): c1}),
]
for s in samples:
    print("\n", s, "\n  ->", classify_unipotent(s, c1, c2))

cov = coverage(samples + [p], c1, c2)
print("\ncoverage complete:", cov.complete, "| highest+second highest:", cov.highest_pair)
