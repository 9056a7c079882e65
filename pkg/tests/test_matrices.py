from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadamard6.eisenstein import (
    BETA,
    E_ONE,
    OMEGA,
    OMEGA2,
    EisensteinRational,
    SplitQuaternion,
)
from hadamard6.matrices import ExactMatrix, NonUnimodularEntryError, h6

rationals = st.fractions(min_value=-9, max_value=9, max_denominator=4)
eisenstein = st.builds(EisensteinRational, rationals, rationals)


def matrices(n):
    return st.lists(eisenstein, min_size=n * n, max_size=n * n).map(
        lambda e: ExactMatrix(n, n, e)
    )


def test_h6_entry_values():
    H = h6()
    assert H.entry(0, 0) == E_ONE
    assert H.entry(1, 2) == OMEGA      # row 2, column 3
    assert H.entry(5, 1) == OMEGA      # row 6, column 2
    assert H.entry(1, 3) == OMEGA2
    # symmetric with constant first row and column
    for i in range(6):
        assert H.entry(0, i) == E_ONE
        assert H.entry(i, 0) == E_ONE
        for j in range(6):
            assert H.entry(i, j) == H.entry(j, i)


def test_h6_trailing_block_is_circulant():
    H = h6()
    for i in range(1, 6):
        for j in range(1, 6):
            ii = 1 + (i % 5)
            jj = 1 + (j % 5)
            assert H.entry(i, j) == H.entry(ii, jj)


def test_identity_product():
    H = h6()
    assert ExactMatrix.identity(6) @ H == H


def test_hadamard_identity_gives_inverse():
    H = h6()
    assert H @ H.dagger().scaled(Fraction(1, 6)) == ExactMatrix.identity(6)


def test_beta_diagonal_squares_to_identity():
    d = ExactMatrix.from_rows([[BETA, SplitQuaternion.zero()], [SplitQuaternion.zero(), BETA]])
    assert d @ d == ExactMatrix.identity(2, SplitQuaternion)


def test_dagger_examples():
    assert ExactMatrix.identity(6).dagger() == ExactMatrix.identity(6)
    H = h6()
    assert H.dagger().dagger() == H
    # symmetry: dagger is just entrywise conjugation here
    conj = ExactMatrix(6, 6, [e.conj() for e in H.entries])
    assert H.dagger() == conj


def test_dagger_rejected_for_split_quaternions():
    m = ExactMatrix.identity(2, SplitQuaternion)
    with pytest.raises(ValueError):
        m.dagger()


@settings(max_examples=30)
@given(matrices(3), matrices(3))
def test_dagger_antihomomorphism(a, b):
    assert (a @ b).dagger() == b.dagger() @ a.dagger()


@settings(max_examples=30)
@given(matrices(2), matrices(2), matrices(2))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


def test_matmul_errors():
    a = ExactMatrix.identity(2)
    b = ExactMatrix.identity(3)
    with pytest.raises(ValueError):
        a @ b
    with pytest.raises(ValueError):
        a @ ExactMatrix.identity(2, SplitQuaternion)


def test_is_hadamard_true_and_false():
    assert h6().is_hadamard()
    assert not ExactMatrix.identity(6).is_hadamard()
    ones = ExactMatrix(6, 6, [E_ONE] * 36)
    assert not ones.is_hadamard()


def test_is_hadamard_fails_for_every_single_entry_mutation():
    H = h6()
    for i in range(6):
        for j in range(6):
            for k in (1, 2):
                mutated = H.with_entry(i, j, H.entry(i, j).times_omega_pow(k))
                assert not mutated.is_hadamard()


def test_is_hadamard_reports_non_unimodular_entry_distinctly():
    bad = h6().with_entry(0, 0, EisensteinRational(2))
    with pytest.raises(NonUnimodularEntryError):
        bad.is_hadamard()


def test_is_hadamard_rejects_non_square():
    m = ExactMatrix(2, 3, [E_ONE] * 6)
    with pytest.raises(ValueError):
        m.is_hadamard()


def test_mixed_ring_entries_rejected():
    with pytest.raises(ValueError):
        ExactMatrix(1, 2, [E_ONE, SplitQuaternion.one()])


def test_hash_and_canonical_bytes():
    H = h6()
    same = ExactMatrix(6, 6, list(H.entries))
    assert H == same and hash(H) == hash(same)
    assert H.canonical_bytes() == same.canonical_bytes()
    other = H.with_entry(0, 0, OMEGA)
    assert H != other
    assert H.canonical_bytes() != other.canonical_bytes()


def test_json_rows_are_strings():
    rows = h6().to_json_rows()
    assert rows[0] == ["1", "1", "1", "1", "1", "1"]
    assert rows[1][2] == "w"
