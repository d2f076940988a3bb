"""Cross-checking the 51-row dataset.

Every row stores exponent vectors, polynomials, their difference, a
status, and the partner row under X -> -X.  The validator re-derives each
column from the exponents and checks the pairing through the sign-flip
conjugation identity, so a transcription error anywhere surfaces as a
violation.
"""

import dataclasses

from sp4mono import dataset, validate_tables
from sp4mono.cyclotomic import IntPolynomial

rows = dataset()
report = validate_tables(rows)
print("rows:", report.row_count)
print("per table:", report.counts_by_table)
print("per status:", report.status_counts)
print("violations:", list(report.violations) or "none")

# Tamper with one difference polynomial and watch the validator object.
tampered = [
    dataclasses.replace(r, diff=IntPolynomial((1, 3, 2, 3))) if r.key == (3, 1) else r
    for r in rows
]
bad = validate_tables(tampered)
print("\nafter tampering with one difference polynomial:")
for violation in bad.violations:
    print(" ", violation)
