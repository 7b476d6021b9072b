import pytest

from permsym import (
    ExactMatrix,
    Perm,
    SubspaceBasis,
    block_form,
    build,
    column_space_basis,
    find_symmetries,
    is_invariant_subspace,
    parse,
    projectors_from_involution,
    verify_eigenpair,
)

from helpers import constant_kernel_basis


@pytest.fixture(scope="module")
def hubbard():
    return build("hubbard2")


@pytest.fixture(scope="module")
def fermi_equal():
    return build("fermi3", {"k1": "k", "k2": "k", "k3": "k"})


class TestProjectors:
    def test_identity_perm(self):
        pair = projectors_from_involution(Perm.identity(3))
        assert pair.pi1 == ExactMatrix.identity(3)
        assert pair.pi2 == ExactMatrix.zeros(3)

    def test_hubbard_involution(self):
        pair = projectors_from_involution(Perm([3, 2, 1, 0]))
        assert pair.pi1 == ExactMatrix.from_rows(
            [
                ["1/2", "0", "0", "1/2"],
                ["0", "1/2", "1/2", "0"],
                ["0", "1/2", "1/2", "0"],
                ["1/2", "0", "0", "1/2"],
            ]
        )

    def test_rejects_higher_order(self):
        with pytest.raises(ValueError):
            projectors_from_involution(Perm([1, 2, 0]))

    def test_projector_identities_all_catalog_involutions(self):
        for name in ("fermi3", "hubbard2", "twospin_H", "twospin_K", "triple_spin"):
            h = build(name)
            n = h.rows
            ident = ExactMatrix.identity(n)
            for p in find_symmetries(h).perms:
                if p.order() != 2:
                    continue
                pair = projectors_from_involution(p)
                assert pair.pi1 @ pair.pi1 == pair.pi1
                assert pair.pi2 @ pair.pi2 == pair.pi2
                assert pair.pi1 @ pair.pi2 == ExactMatrix.zeros(n)
                assert pair.pi1 + pair.pi2 == ident
                # the projectors commute with h, so both images are invariant
                assert pair.pi1 @ h == h @ pair.pi1
                b1 = column_space_basis(pair.pi1)
                b2 = column_space_basis(pair.pi2)
                assert len(b1) + len(b2) == n
                assert is_invariant_subspace(h, b1)
                assert is_invariant_subspace(h, b2)


class TestColumnSpaceBasis:
    def test_bell_plus(self):
        pair = projectors_from_involution(Perm([3, 2, 1, 0]))
        assert column_space_basis(pair.pi1) == SubspaceBasis([(1, 0, 0, 1), (0, 1, 1, 0)])

    def test_bell_minus(self):
        pair = projectors_from_involution(Perm([3, 2, 1, 0]))
        assert column_space_basis(pair.pi2) == SubspaceBasis([(1, 0, 0, -1), (0, 1, -1, 0)])

    def test_zero_matrix(self):
        assert len(column_space_basis(ExactMatrix.zeros(3))) == 0

    def test_parametric_entries_rejected(self):
        with pytest.raises(ValueError):
            column_space_basis(build("hubbard2"))

    def test_primitive_vectors(self):
        m = ExactMatrix.from_rows([["2/3", "0"], ["4/3", "0"]])
        assert column_space_basis(m) == SubspaceBasis([(1, 2)])

    def test_dependent_input_vectors_rejected(self):
        with pytest.raises(ValueError):
            SubspaceBasis([(1, 0), (2, 0)])


class TestInvariantSubspace:
    def test_bell_subspace_invariant(self, hubbard):
        assert is_invariant_subspace(hubbard, SubspaceBasis([(1, 0, 0, 1), (0, 1, 1, 0)]))

    def test_single_axis_not_invariant(self, hubbard):
        # H e0 = (U, t, t, 0) leaves the axis
        assert not is_invariant_subspace(hubbard, SubspaceBasis([(1, 0, 0, 0)]))

    def test_full_standard_basis(self, hubbard):
        basis = SubspaceBasis([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        assert is_invariant_subspace(hubbard, basis)

    def test_dimension_mismatch(self, hubbard):
        with pytest.raises(ValueError):
            is_invariant_subspace(hubbard, SubspaceBasis([(1, 0)]))


class TestBlockForm:
    def test_hubbard_bell_blocks(self, hubbard):
        b1 = SubspaceBasis([(1, 0, 0, 1), (0, 1, 1, 0)])
        b2 = SubspaceBasis([(1, 0, 0, -1), (0, 1, -1, 0)])
        blocks = block_form(hubbard, b1, b2)
        assert blocks == ExactMatrix.from_rows(
            [
                ["U", "2*t", "0", "0"],
                ["2*t", "0", "0", "0"],
                ["0", "0", "U", "0"],
                ["0", "0", "0", "0"],
            ]
        )
        # cross-check by multiplying back: S B = H S
        s = ExactMatrix.from_rows(
            [[1, 0, 1, 0], [0, 1, 0, 1], [0, 1, 0, -1], [1, 0, -1, 0]]
        )
        assert s @ blocks == hubbard @ s

    def test_twospin_blocks_are_2_plus_2(self):
        h = build("twospin_H")
        pair = projectors_from_involution(Perm([1, 0, 3, 2]))
        b1 = column_space_basis(pair.pi1)
        b2 = column_space_basis(pair.pi2)
        blocks = block_form(h, b1, b2)
        for r in range(4):
            for c in range(4):
                if (r < 2) != (c < 2):
                    assert blocks[r, c].is_zero()

    def test_full_basis_identity_case(self, hubbard):
        basis = SubspaceBasis([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        assert block_form(hubbard, basis, SubspaceBasis([])) == hubbard

    def test_rejects_partial_basis(self, hubbard):
        with pytest.raises(ValueError):
            block_form(hubbard, SubspaceBasis([(1, 0, 0, 1)]), SubspaceBasis([]))

    def test_rejects_non_invariant_split(self, hubbard):
        b1 = SubspaceBasis([(1, 0, 0, 0), (0, 1, 0, 0)])
        b2 = SubspaceBasis([(0, 0, 1, 0), (0, 0, 0, 1)])
        with pytest.raises(ValueError):
            block_form(hubbard, b1, b2)


class TestEigenpairs:
    def test_known_eigenpairs(self, fermi_equal):
        assert verify_eigenpair(fermi_equal, parse("2*k-2*t"), (1, -1, 1))
        assert verify_eigenpair(fermi_equal, parse("2*k+t"), (1, 0, -1))

    def test_wrong_vector_rejected(self, fermi_equal):
        assert not verify_eigenpair(fermi_equal, parse("2*k+t"), (1, 1, 1))

    def test_errors(self, fermi_equal):
        with pytest.raises(ValueError):
            verify_eigenpair(fermi_equal, parse("2*k+t"), (0, 0, 0))
        with pytest.raises(ValueError):
            verify_eigenpair(fermi_equal, parse("2*k+t"), (1, 0))

    def test_double_eigenvalue_kernel(self, fermi_equal):
        shifted = fermi_equal - ExactMatrix.identity(3) * parse("2*k+t")
        kernel = constant_kernel_basis(shifted)
        assert len(kernel) == 2
        for v in kernel:
            assert verify_eigenpair(fermi_equal, parse("2*k+t"), v)

    def test_simple_eigenvalue_kernel(self, fermi_equal):
        shifted = fermi_equal - ExactMatrix.identity(3) * parse("2*k-2*t")
        kernel = constant_kernel_basis(shifted)
        assert len(kernel) == 1
        assert verify_eigenpair(fermi_equal, parse("2*k-2*t"), kernel[0])
