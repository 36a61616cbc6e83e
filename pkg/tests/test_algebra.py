import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from algq import (
    AlgebraElement,
    HermitianObservable,
    Projector,
    commutes,
    hermitian_split,
    involution,
    jordan_product,
    norm,
    spectral_radius,
    spectrum,
)
from algq.algebra import pauli_matrices
from algq.errors import DimensionMismatch
from helpers import random_element, random_hermitian

SX, SY, SZ = pauli_matrices()


def _complex_matrix(draw_real, dim):
    return np.array(draw_real[: dim * dim]).reshape(dim, dim) + 1j * np.array(
        draw_real[dim * dim :]
    ).reshape(dim, dim)


small_floats = st.floats(min_value=-5, max_value=5, allow_nan=False, allow_infinity=False)


@st.composite
def elements(draw, dim=3):
    vals = draw(st.lists(small_floats, min_size=2 * dim * dim, max_size=2 * dim * dim))
    return AlgebraElement(_complex_matrix(vals, dim))


class TestInvolution:
    def test_conjugate_transpose(self):
        u = AlgebraElement([[0, 1], [0, 0]])
        assert np.array_equal(involution(u).entries, np.array([[0, 0], [1, 0]], dtype=complex))

    @given(elements())
    def test_involution_is_involutive(self, u):
        assert involution(involution(u)).isclose(u, tol=0)

    @given(elements(), elements())
    def test_antimultiplicative(self, u, v):
        left = involution(u @ v).entries
        right = (involution(v) @ involution(u)).entries
        assert np.abs(left - right).max() <= 1e-12 * max(1.0, np.abs(left).max())

    @given(elements(), elements())
    def test_additive(self, u, v):
        assert involution(u + v).isclose(involution(u) + involution(v), tol=1e-14)


class TestJordanProduct:
    def test_unit_is_neutral(self, rng):
        a = random_hermitian(rng, 3)
        eye = HermitianObservable(np.eye(3))
        assert jordan_product(a, eye).isclose(a)

    def test_square(self, rng):
        a = random_hermitian(rng, 3)
        assert jordan_product(a, a).isclose(AlgebraElement(a.entries @ a.entries))

    def test_pauli_pair_anticommutes(self):
        t1, t2 = HermitianObservable(SX), HermitianObservable(SY)
        assert np.abs(jordan_product(t1, t2).entries).max() <= 1e-12

    def test_matches_symmetrized_product(self, rng):
        # direct matrix-arithmetic oracle for the defining identity
        for _ in range(20):
            a, b = random_hermitian(rng, 4), random_hermitian(rng, 4)
            oracle = 0.5 * (a.entries @ b.entries + b.entries @ a.entries)
            assert np.abs(jordan_product(a, b).entries - oracle).max() <= 1e-10

    def test_scalar_associator_vanishes(self, rng):
        for _ in range(20):
            a, b = random_hermitian(rng, 3), random_hermitian(rng, 3)
            alpha = float(rng.normal())
            c = HermitianObservable(alpha * np.eye(3))
            left = jordan_product(jordan_product(a, b), c)
            right = jordan_product(a, jordan_product(b, c))
            assert np.abs(left.entries - right.entries).max() <= 1e-12 * max(
                1.0, np.abs(left.entries).max()
            )

    def test_dimension_mismatch(self, rng):
        with pytest.raises(DimensionMismatch):
            jordan_product(random_hermitian(rng, 2), random_hermitian(rng, 3))


class TestSpectrum:
    def test_pauli_spectrum(self):
        vals = spectrum(HermitianObservable(SZ))
        assert np.allclose(vals, [1, -1])

    def test_identity(self):
        assert np.allclose(spectrum(AlgebraElement(np.eye(5))), np.ones(5))

    def test_against_characteristic_polynomial(self, rng):
        # polynomial-root oracle
        a = random_hermitian(rng, 3)
        coeffs = np.poly(a.entries)
        roots = np.sort(np.roots(coeffs).real)
        assert np.allclose(np.sort(spectrum(a).real), roots, atol=1e-8)

    def test_descending_order(self, rng):
        vals = spectrum(random_hermitian(rng, 5)).real
        assert np.all(np.diff(vals) <= 1e-12)


class TestNorms:
    def test_identity_norm(self):
        assert norm(AlgebraElement.identity(4)) == pytest.approx(1.0, abs=1e-14)

    def test_spectral_radius_diag(self):
        assert spectral_radius(AlgebraElement(np.diag([2.0, -3.0]))) == pytest.approx(3.0)

    def test_nilpotent_norm_is_singular_value(self):
        # largest-singular-value oracle: sv([[0,2],[0,0]]) = {2, 0}
        assert norm(AlgebraElement([[0, 2], [0, 0]])) == pytest.approx(2.0, abs=1e-12)

    def test_spectral_radius_vs_eigenvalue_oracle(self, rng):
        a = random_hermitian(rng, 4)
        oracle = np.abs(np.linalg.eigvalsh(a.entries)).max()
        assert spectral_radius(a) == pytest.approx(oracle, abs=1e-10)

    def test_cstar_identity_across_dims(self, rng):
        # |  ||U*U|| - ||U||^2  | <= 1e-10 ||U||^2 over 200 random elements
        count = 0
        for dim in range(2, 7):
            for _ in range(40):
                u = random_element(rng, dim)
                lhs = norm(u.star @ u)
                rhs = norm(u) ** 2
                assert abs(lhs - rhs) <= 1e-10 * rhs
                count += 1
        assert count == 200

    def test_norm_axioms(self, rng):
        for _ in range(30):
            dim = int(rng.integers(2, 6))
            u, v = random_element(rng, dim), random_element(rng, dim)
            scale = max(norm(u), norm(v), 1.0)
            assert norm(u + v) <= norm(u) + norm(v) + 1e-10 * scale
            alpha = complex(rng.normal(), rng.normal())
            assert norm(alpha * u) == pytest.approx(abs(alpha) * norm(u), rel=1e-10)
            assert norm(u.star) == pytest.approx(norm(u), rel=1e-10)
            assert norm(u @ v) <= norm(u) * norm(v) + 1e-10 * scale**2

    def test_positivity_of_star_square(self, rng):
        for _ in range(25):
            u = random_element(rng, int(rng.integers(2, 6)))
            eigs = spectrum(u.star @ u).real
            assert eigs.min() >= -1e-10 * max(1.0, eigs.max())


class TestHermitianSplit:
    def test_hermitian_input(self, rng):
        a = random_hermitian(rng, 3)
        re, im = hermitian_split(a)
        assert re.isclose(a)
        assert np.abs(im.entries).max() <= 1e-12

    def test_anti_hermitian_input(self):
        re, im = hermitian_split(AlgebraElement(1j * np.eye(2)))
        assert np.abs(re.entries).max() == 0
        assert im.isclose(HermitianObservable(np.eye(2)))

    @given(elements())
    def test_reassembly(self, u):
        re, im = hermitian_split(u)
        rebuilt = re + 1j * im
        assert np.abs(rebuilt.entries - u.entries).max() <= 1e-13 * max(
            1.0, np.abs(u.entries).max()
        )


class TestCommutes:
    def test_self_commutes(self):
        t1 = HermitianObservable(SX)
        assert commutes(t1, t1)

    def test_pauli_noncommuting(self):
        assert not commutes(HermitianObservable(SX), HermitianObservable(SY))

    def test_diagonal_pair(self, rng):
        d1 = AlgebraElement(np.diag(rng.normal(size=4)))
        d2 = AlgebraElement(np.diag(rng.normal(size=4)))
        assert commutes(d1, d2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            commutes(AlgebraElement.identity(2), AlgebraElement.identity(3))


class TestProjector:
    def test_rank_from_trace(self):
        p = Projector(np.diag([1.0, 1.0, 0.0]))
        assert p.rank == 2

    def test_rejects_non_idempotent(self):
        with pytest.raises(ValueError):
            Projector(np.diag([0.5, 0.5]))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            HermitianObservable([[0, 1], [0, 0]])
