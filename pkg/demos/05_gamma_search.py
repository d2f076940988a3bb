"""Rediscovering the conjugators behind the certificates.

The proof template needs a group element gamma moving v so that its last
coordinate becomes 1 or 2 in absolute value.  When the entries of v share
a factor >= 3 no such gamma exists; otherwise a deterministic shortlex
search over words in A and B finds one.  From gamma, recipe templates
assemble unipotent witnesses with exponents solved exactly from linear
entry cancellation.
"""

from sp4mono import (
    builtin_certificates,
    checked_basis,
    dataset,
    derive_witnesses,
    find_gamma,
    levelt_triple,
)
from sp4mono.forms import PUBLISHED_SCALING, SymplecticForm

rows = {(r.table_id, r.row_no): r for r in dataset()}
certs = {c.example_id: c for c in builtin_certificates()}

for key in [(3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8)]:
    row = rows[key]
    triple = levelt_triple(row.f, row.g)
    result = find_gamma(triple, max_len=2, max_exp=8)
    if result.status == "obstructed":
        print("%d:%d  obstructed (gcd %d)" % (*key, result.obstruction_gcd))
        continue
    print(
        "%d:%d  gamma = %-8s  e4 coefficient %2d  (%d words explored)"
        % (*key, result.gamma, result.e4_coeff, result.explored)
    )

# Witness derivation against the published frames.
for key, budget in (((3, 2), 13), ((3, 3), 23)):
    row = rows[key]
    cert = certs["%d:%d" % key]
    triple = levelt_triple(row.f, row.g)
    form = SymplecticForm(cert.omega, PUBLISHED_SCALING)
    basis = checked_basis(form, cert.basis_vectors)
    result = find_gamma(triple, 1, 8)
    cov = derive_witnesses(triple, form, basis, result.gamma, budget)
    print(
        "%d:%d  budget %d: coverage %s (complete=%s)"
        % (*key, budget, [str(label) for label in cov.labels()], cov.complete)
    )
