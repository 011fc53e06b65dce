import numpy as np
import pytest

from gpolab import (
    Dimension,
    build_conjugate_pair,
    build_generators,
    collimation,
    collimation_report,
    decompose,
    hermitian_eig,
    matrix_power,
    max_norm,
    normalize,
    random_hermitian,
    shift_profile,
)


@pytest.fixture(scope="module")
def gens10():
    return build_generators(Dimension(10))


def cosine_op(gens):
    return (gens.a + gens.a.conj().T) / 2


class TestNormalize:
    def test_identity(self):
        gens = build_generators(Dimension(2))
        tilde = normalize(decompose(np.eye(5), gens))
        assert tilde[2, 2] == pytest.approx(1.0, abs=1e-12)
        assert np.abs(tilde).sum() == pytest.approx(1.0, abs=1e-12)

    def test_scale_removed(self):
        gens = build_generators(Dimension(2))
        plain = normalize(decompose(gens.b, gens))
        scaled = normalize(decompose(5.0 * gens.b, gens))
        assert max_norm(plain - scaled) <= 1e-12
        assert scaled[3, 2] == pytest.approx(1.0, abs=1e-12)

    def test_zero_operator_rejected(self):
        gens = build_generators(Dimension(1))
        with pytest.raises(ValueError, match="zero operator"):
            normalize(decompose(np.zeros((3, 3)), gens))


class TestShiftProfile:
    def test_identity_concentrated(self):
        gens = build_generators(Dimension(2))
        profile = shift_profile(decompose(np.eye(5), gens), "phi")
        assert profile.weights[2] == pytest.approx(1.0, abs=1e-12)
        assert profile.weights.sum() == pytest.approx(1.0, abs=1e-12)

    def test_cosine_half_half(self, gens10):
        profile = shift_profile(decompose(cosine_op(gens10), gens10), "phi")
        assert profile.weights[9] == pytest.approx(0.5, abs=1e-12)
        assert profile.weights[11] == pytest.approx(0.5, abs=1e-12)

    def test_weights_normalized_and_nonnegative(self, gens10):
        for seed in (0, 1):
            coeffs = decompose(random_hermitian(gens10.dim, seed), gens10)
            for axis in ("phi", "pi"):
                profile = shift_profile(coeffs, axis)
                assert profile.weights.min() >= 0
                assert profile.weights.sum() == pytest.approx(1.0, abs=1e-12)

    def test_hermitian_profile_symmetric(self, gens10):
        coeffs = decompose(random_hermitian(gens10.dim, 3), gens10)
        for axis in ("phi", "pi"):
            w = shift_profile(coeffs, axis).weights
            assert max_norm(w - w[::-1]) <= 1e-10

    def test_bad_axis_rejected(self, gens10):
        coeffs = decompose(np.eye(21), gens10)
        with pytest.raises(ValueError, match="axis"):
            shift_profile(coeffs, "theta")

    def test_momentum_function_is_separable(self, gens10):
        # operators built from pi alone live entirely on the q = 0 row.
        pair = build_conjugate_pair(gens10.dim)
        op = matrix_power(pair.pi, 3) + 0.5 * pair.pi
        grid = decompose(op, gens10).grid.copy()
        grid[10, :] = 0.0
        assert max_norm(grid) <= 1e-10


class TestCollimation:
    def test_identity_fully_collimated(self):
        gens = build_generators(Dimension(2))
        coeffs = decompose(np.eye(5), gens)
        for axis in ("phi", "pi"):
            assert collimation(shift_profile(coeffs, axis)) == pytest.approx(1.0, abs=1e-12)

    def test_cosine_value_small_case(self):
        gens = build_generators(Dimension(1))
        profile = shift_profile(decompose(cosine_op(gens), gens), "phi")
        assert collimation(profile) == pytest.approx(np.exp(-1 / 3), abs=1e-12)

    def test_momentum_function_maximally_pi_collimated(self, gens10):
        pair = build_conjugate_pair(gens10.dim)
        op = matrix_power(pair.pi, 3) + 0.5 * pair.pi
        report = collimation_report(decompose(op, gens10))
        assert report.c_pi == pytest.approx(1.0, abs=1e-12)

    def test_custom_kernel(self, gens10):
        profile = shift_profile(decompose(cosine_op(gens10), gens10), "phi")
        no_spread_weight = collimation(profile, kernel=lambda k, n: (k == 0).astype(float))
        assert no_spread_weight == pytest.approx(0.0, abs=1e-12)
        flat = collimation(profile, kernel=lambda k, n: np.ones_like(k, dtype=float))
        assert flat == pytest.approx(1.0, abs=1e-12)

    def test_scale_invariance(self, gens10):
        m = random_hermitian(gens10.dim, 7)
        base_phi = collimation(shift_profile(decompose(m, gens10), "phi"))
        # power-of-two scalings commute exactly with the normalization
        for c in (2.0, -0.5, 2.0j):
            scaled = collimation(shift_profile(decompose(c * m, gens10), "phi"))
            assert scaled == base_phi
        for c in (3.0, 1.0 + 2.0j):
            scaled = collimation(shift_profile(decompose(c * m, gens10), "phi"))
            assert scaled == pytest.approx(base_phi, rel=1e-12)

    def test_bounds(self):
        dim = Dimension(25)
        gens = build_generators(dim)
        lower = np.exp(-dim.l / dim.n)
        for seed in range(3):
            report = collimation_report(decompose(random_hermitian(dim, seed), gens))
            for value in (report.c_phi, report.c_pi):
                assert lower - 1e-12 <= value <= 1.0 + 1e-12


class TestMomentumPowerOrdering:
    def test_quadratic_power_most_collimated(self):
        # mid-size run of the full ordering; the figure-scale run lives in
        # the acceptance suite.
        dim = Dimension(50)
        gens = build_generators(dim)
        pair = build_conjugate_pair(dim)
        values = {}
        power_op = np.eye(dim.n, dtype=complex)
        for k in range(1, 7):
            power_op = power_op @ pair.pi
            values[k] = collimation(shift_profile(decompose(power_op, gens), "phi"))
        assert values[2] == max(values.values())
        assert values[2] > values[4] > values[6]
        assert values[2] > values[1] and values[2] > values[3]
        assert values[4] > values[3] and values[4] > values[5]
        assert values[6] > values[5]

    def test_repeated_multiplication_matches_spectral_powers(self):
        dim = Dimension(50)
        pair = build_conjugate_pair(dim)
        eig = hermitian_eig(pair.pi)
        dense = matrix_power(pair.pi, 6)
        spectral = (eig.eigenvectors * eig.eigenvalues**6) @ eig.eigenvectors.conj().T
        assert max_norm(dense - spectral) <= 1e-9 * max_norm(dense)


class TestRandomHermitian:
    def test_profile_approximately_uniform_at_figure_scale(self):
        # averaged over ten seeds at dim 401 the phi-shift profile is flat
        # to within a factor of three between its largest and smallest weight.
        dim = Dimension(200)
        gens = build_generators(dim)
        total = np.zeros(dim.n)
        for seed in range(10):
            coeffs = decompose(random_hermitian(dim, seed), gens)
            total += shift_profile(coeffs, "phi").weights
        averaged = total / 10
        assert averaged.max() <= 3 * averaged.min()

    def test_deterministic_per_seed(self):
        dim = Dimension(8)
        assert np.array_equal(random_hermitian(dim, 42), random_hermitian(dim, 42))
        assert not np.array_equal(random_hermitian(dim, 42), random_hermitian(dim, 43))

    def test_exactly_hermitian(self):
        m = random_hermitian(Dimension(8), 0)
        assert max_norm(m - m.conj().T) == 0.0

    def test_entry_statistics(self):
        m = random_hermitian(Dimension(40), 1)
        off = m[np.triu_indices(81, k=1)]
        assert np.std(off.real) == pytest.approx(1.0, abs=0.1)
        assert np.std(off.imag) == pytest.approx(1.0, abs=0.1)
        assert np.std(np.diag(m).real) == pytest.approx(1.0, abs=0.2)
