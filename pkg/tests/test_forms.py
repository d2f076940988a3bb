import random

import pytest

from sp4mono import (
    FormError,
    MatrixQ,
    VectorQ,
    check_symplectic,
    evaluate_word,
    invariant_form,
    levelt_triple,
    proportionality,
)
from sp4mono.cyclotomic import IntPolynomial
from sp4mono.forms import PUBLISHED_SCALING, SymplecticForm
from sp4mono.monodromy import GroupWord


def poly(*ascending):
    return IntPolynomial(tuple(ascending))


PRINTED_OMEGA_1 = MatrixQ.from_strings(
    [
        ["0", "1", "-2/3", "-1"],
        ["-1", "0", "1", "-2/3"],
        ["2/3", "-1", "0", "1"],
        ["1", "2/3", "-1", "0"],
    ]
)

PRINTED_OMEGA_2 = MatrixQ(
    [[0, -4, 1, 6], [4, 0, -4, 1], [-1, 4, 0, -4], [-6, -1, 4, 0]]
)


def test_form_matches_first_printed_example():
    t = levelt_triple(poly(1, 3, 4, 3, 1), poly(1, 0, 2, 0, 1))
    form = invariant_form(t)
    assert proportionality(form.omega, PRINTED_OMEGA_1) == 3
    assert form.omega.is_integral()
    assert form.normalization == "primitive-integer"


def test_form_matches_second_printed_example():
    t = levelt_triple(poly(1, 2, 3, 2, 1), poly(1, -2, 2, -2, 1))
    form = invariant_form(t)
    scalar = proportionality(form.omega, PRINTED_OMEGA_2)
    assert scalar is not None and scalar != 0


def test_form_normalization_sign_and_gcd(form_for, rows):
    for r in rows[:8]:
        omega = form_for(r.table_id, r.row_no).omega
        entries = [omega[i, j] for i in range(4) for j in range(4)]
        first_nonzero = next(x for x in entries if x != 0)
        assert first_nonzero > 0
        from math import gcd

        assert gcd(*(int(x) for x in entries)) == 1


def test_unknown_pair_still_has_line_of_forms(triple_for):
    t = triple_for(4, 1)
    form = invariant_form(t)
    for m in (t.A, t.B):
        assert m.transpose() * form.omega * m == form.omega


def test_check_symplectic_examples():
    t = levelt_triple(poly(1, 3, 4, 3, 1), poly(1, 0, 2, 0, 1))
    form = invariant_form(t)
    assert check_symplectic(MatrixQ.identity(4), form)
    assert check_symplectic(t.A, form)
    bump = MatrixQ([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert not check_symplectic(bump, form)


def test_scaling_does_not_change_symplecticity():
    t = levelt_triple(poly(1, 3, 4, 3, 1), poly(1, 0, 2, 0, 1))
    published = SymplecticForm(PRINTED_OMEGA_1, PUBLISHED_SCALING)
    assert check_symplectic(t.A, published)
    assert check_symplectic(t.B, published)


def test_v_is_orthogonal_to_first_three_axes(triple_for, form_for, rows):
    for r in rows[:10]:
        t = triple_for(r.table_id, r.row_no)
        form = form_for(r.table_id, r.row_no)
        for i in range(3):
            assert form.pair(t.v, VectorQ.unit(4, i)) == 0
        assert form.pair(t.v, VectorQ.unit(4, 3)) != 0


def test_random_words_preserve_form_sample(triple_for, form_for, rows):
    rng = random.Random(17)
    for r in rows[:6]:
        t = triple_for(r.table_id, r.row_no)
        form = form_for(r.table_id, r.row_no)
        for _ in range(30):
            letters = tuple(
                (rng.choice("AB"), rng.choice([-1, 1])) for _ in range(rng.randint(1, 12))
            )
            m = evaluate_word(t, GroupWord(letters))
            assert check_symplectic(m, form)


def test_degenerate_form_rejected():
    with pytest.raises(FormError):
        SymplecticForm(MatrixQ.zeros(4, 4))
    with pytest.raises(FormError):
        SymplecticForm(MatrixQ.identity(4))


def test_wrong_kernel_dimension_rejected():
    # A hand-built degenerate "triple" (both generators trivial) preserves
    # every antisymmetric form; the solver must refuse the 6-dimensional
    # solution space.
    from sp4mono.monodromy import MonodromyTriple

    eye = MatrixQ.identity(4)
    fake = MonodromyTriple(
        f=poly(1, 3, 4, 3, 1),
        g=poly(1, 0, 2, 0, 1),
        A=eye,
        B=eye,
        C=eye,
        v=VectorQ.zero(4),
    )
    with pytest.raises(FormError):
        invariant_form(fake)
