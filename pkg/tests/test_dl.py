from hypothesis import given
from hypothesis import strategies as st

from weyl_dl import (
    VirtualCharacter,
    decompose,
    dl_inverse_operator,
    dl_operator,
    reflection,
    sign,
    springer_table,
    trivial,
    verify_involution,
    verify_sign_twist,
)
from weyl_dl.dl import ShiftLedger, dl_inverse_matrix, dl_matrix, sign_tensor_permutation
from weyl_dl.symchars import transpose


def test_dl_trivial_is_sign_a2(tables):
    W, cc, t = tables("A", 2)
    v = dl_operator(W, t, decompose(t, trivial(cc)))
    assert v.coeffs == decompose(t, sign(W, cc)).coeffs == (0, 1, 0)


def test_dl_trivial_is_sign_a1(tables):
    W, cc, t = tables("A", 1)
    v = dl_operator(W, t, decompose(t, trivial(cc)))
    assert v.coeffs == (0, 1)


def test_dl_fixes_reflection_a2(tables):
    W, cc, t = tables("A", 2)
    refl = decompose(t, reflection(W, cc))
    assert dl_operator(W, t, refl).coeffs == refl.coeffs


def test_sign_twist_small(tables):
    for key in [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("A", 3)]:
        W, _, t = tables(*key)
        report = verify_sign_twist(W, t)
        assert report.ok, report.violations


def test_sign_twist_permutation_a2(tables):
    W, _, t = tables("A", 2)
    assert verify_sign_twist(W, t).permutation == (1, 0, 2)


def test_b2_two_dimensional_is_fixed(tables):
    W, _, t = tables("B", 2)
    perm = sign_tensor_permutation(W, t)
    two_dim = t.degrees.index(2)
    assert perm[two_dim] == two_dim


def test_involution_small(tables):
    for key in [("A", 1), ("A", 2), ("B", 2), ("G", 2), ("D", 4)]:
        W, _, t = tables(*key)
        assert verify_involution(W, t).ok


def test_dl_linear_on_lattice(tables):
    W, cc, t = tables("A", 2)
    v = VirtualCharacter(t.group_id, (2, -1, 3))
    image = dl_operator(W, t, v)
    # matches the sign-tensor permutation applied to coordinates
    assert image.coeffs == (-1, 2, 3)


def test_dl_inverse_matches_direct(tables):
    for key in [("A", 2), ("B", 2), ("G", 2)]:
        W, _, t = tables(*key)
        assert dl_matrix(W, t) == dl_inverse_matrix(W, t)


def test_dl_inverse_composition_is_identity(tables):
    W, _, t = tables("A", 1)
    for i in range(t.n_irreducibles):
        v = VirtualCharacter(t.group_id, tuple(1 if j == i else 0 for j in range(t.n_irreducibles)))
        assert dl_operator(W, t, dl_inverse_operator(W, t, v)).coeffs == v.coeffs


def test_dl_images_are_unit_vectors(tables):
    for key in [("A", 3), ("B", 3), ("G", 2)]:
        W, _, t = tables(*key)
        for col in dl_matrix(W, t):
            assert sorted(col) == [0] * (t.n_irreducibles - 1) + [1]


def test_springer_pairs_a2(tables):
    W, _, t = tables("A", 2)
    pairs = {(a.display, b.display) for a, b in springer_table(W, t)}
    assert ("(3)", "(1,1,1)") in pairs
    assert ("(2,1)", "(2,1)") in pairs


def test_springer_pairs_a1(tables):
    W, _, t = tables("A", 1)
    pairs = {(a.display, b.display) for a, b in springer_table(W, t)}
    assert pairs == {("(2)", "(1,1)"), ("(1,1)", "(2)")}


def test_springer_pairs_a3(tables):
    W, _, t = tables("A", 3)
    pairs = {(a.display, b.display) for a, b in springer_table(W, t)}
    assert ("(4)", "(1,1,1,1)") in pairs
    assert ("(3,1)", "(2,1,1)") in pairs
    assert ("(2,2)", "(2,2)") in pairs


def test_springer_pairing_is_transpose(tables):
    for rank in range(1, 5):
        W, _, t = tables("A", rank)
        perm = sign_tensor_permutation(W, t)
        assert t.labels is not None
        for i in range(t.n_irreducibles):
            assert t.labels[perm[i]] == transpose(t.labels[i])


def test_shift_ledger_values():
    ledger = ShiftLedger(central_rank=0, sigma_size=3)
    assert ledger.d == (3, 2, 1, 0)
    assert all(ledger.d[i] > ledger.d[i + 1] for i in range(3))


@given(
    central=st.integers(min_value=0, max_value=3),
    sigma=st.integers(min_value=0, max_value=6),
)
def test_shift_parity_identity(central, sigma):
    ledger = ShiftLedger(central, sigma)
    for size in range(sigma + 1):
        assert ledger.parity_identity_holds(size)
        assert ledger.inverse_side_sign(size) == (-1) ** size
