"""Root-group classification of unipotent elements of Sp(4).

In an anti-diagonal basis the positive-root one-parameter subgroups of the
unipotent radical U have disjoint support patterns:

    short simple   I + a E12 + b E34   (a, b linked by the form)
    long simple    I + t E23
    second highest I + a E13 + b E24   (linked)
    highest        I + t E14

Membership in U means upper triangular, unit diagonal, and symplectic for
the anti-diagonal Gram matrix built from the constants (c1, c2); the
linkage between paired entries is then automatic, so classification is a
pure support-pattern match.  Everything here receives matrices already in
basis coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .linalg import MatrixQ


class RootLabel(enum.Enum):
    SHORT_SIMPLE = "short-simple"
    LONG_SIMPLE = "long-simple"
    SECOND_HIGHEST = "second-highest"
    HIGHEST = "highest"
    TRIVIAL = "trivial"
    NOT_SINGLE_ROOT = "not-single-root"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_text(cls, text: str) -> "RootLabel":
        for label in cls:
            if label.value == text:
                return label
        raise ValueError("unknown root label %r" % (text,))


POSITIVE_LABELS = (
    RootLabel.SHORT_SIMPLE,
    RootLabel.LONG_SIMPLE,
    RootLabel.SECOND_HIGHEST,
    RootLabel.HIGHEST,
)

_SUPPORT_TO_LABEL = {
    frozenset(): RootLabel.TRIVIAL,
    frozenset({(0, 3)}): RootLabel.HIGHEST,
    frozenset({(0, 2), (1, 3)}): RootLabel.SECOND_HIGHEST,
    frozenset({(1, 2)}): RootLabel.LONG_SIMPLE,
    frozenset({(0, 1), (2, 3)}): RootLabel.SHORT_SIMPLE,
}


def antidiagonal_gram(c1, c2) -> MatrixQ:
    """The Gram matrix with (1,4) entry c1 and (2,3) entry c2."""
    return MatrixQ(
        [
            [0, 0, 0, c1],
            [0, 0, c2, 0],
            [0, -c2, 0, 0],
            [-c1, 0, 0, 0],
        ]
    )


def is_in_U(m: MatrixQ, c1, c2) -> bool:
    """Upper triangular, all diagonal entries 1, symplectic for the Gram matrix."""
    if m.nrows != 4 or m.ncols != 4:
        return False
    if not m.is_upper_triangular():
        return False
    if any(m[i, i] != 1 for i in range(4)):
        return False
    g = antidiagonal_gram(c1, c2)
    return m.transpose() * g * m == g


def classify_unipotent(m: MatrixQ, c1, c2) -> RootLabel:
    """Root label of an element of U by its strict upper support pattern."""
    if not is_in_U(m, c1, c2):
        raise ValueError("matrix is not in the unipotent radical for this Gram matrix")
    support = frozenset(
        (i, j) for i in range(4) for j in range(i + 1, 4) if m[i, j] != 0
    )
    return _SUPPORT_TO_LABEL.get(support, RootLabel.NOT_SINGLE_ROOT)


@dataclass(frozen=True)
class RootCoverage:
    """Which positive root groups are witnessed, and by what."""

    found: Mapping  # RootLabel -> MatrixQ, first witness per label
    skipped: tuple = field(default_factory=tuple)  # inputs outside U

    @property
    def complete(self) -> bool:
        return all(label in self.found for label in POSITIVE_LABELS)

    @property
    def highest_pair(self) -> bool:
        """Highest and second highest root groups both witnessed.

        Together with Zariski density this pair already forces finite
        index, so it gets its own flag alongside full coverage.
        """
        return RootLabel.HIGHEST in self.found and RootLabel.SECOND_HIGHEST in self.found

    def labels(self) -> list[RootLabel]:
        return [label for label in POSITIVE_LABELS if label in self.found]

    def to_json_dict(self) -> dict:
        return {
            "found": {str(label): m.to_strings() for label, m in self.found.items()},
            "complete": self.complete,
            "highest_pair": self.highest_pair,
        }


def coverage(witnesses: Iterable[MatrixQ], c1, c2) -> RootCoverage:
    """Classify each witness and collect the positive root groups covered.

    Matrices outside U (or trivial, or not in a single root group) do not
    witness anything; they are recorded in ``skipped``.
    """
    found: dict[RootLabel, MatrixQ] = {}
    skipped = []
    for m in witnesses:
        if not is_in_U(m, c1, c2):
            skipped.append(m)
            continue
        label = classify_unipotent(m, c1, c2)
        if label in POSITIVE_LABELS and label not in found:
            found[label] = m
        elif label not in POSITIVE_LABELS:
            skipped.append(m)
    return RootCoverage(found=found, skipped=tuple(skipped))
