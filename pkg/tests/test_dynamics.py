import math

import numpy as np
import pytest

from gpolab import (
    Dimension,
    OscillatorSpec,
    build_conjugate_pair,
    build_generators,
    build_hamiltonian,
    commutator,
    dh_dphi,
    dh_dpi,
    eom_residual,
    heisenberg_rate,
    matrix_power,
    max_norm,
    nested_commutator,
)
from gpolab.collimation import random_hermitian


def setup_l(l):
    dim = Dimension(l)
    gens = build_generators(dim)
    pair = build_conjugate_pair(dim)
    return dim, gens, pair


def oscillator_h(pair, omega=1.0):
    return build_hamiltonian(OscillatorSpec(dim=pair.dim, omega_freq=omega), pair)


class TestDerivativeOperators:
    def test_identity_has_zero_derivative(self):
        _, gens, pair = setup_l(3)
        assert max_norm(dh_dphi(np.eye(7), gens, pair)) <= 1e-14
        assert max_norm(dh_dpi(np.eye(7), gens, pair)) <= 1e-14

    def test_momentum_function_has_zero_phi_derivative(self):
        _, gens, pair = setup_l(5)
        op = matrix_power(pair.pi, 2) + 0.3 * pair.pi
        assert max_norm(dh_dphi(op, gens, pair)) <= 1e-10

    def test_position_function_has_zero_pi_derivative(self):
        _, gens, pair = setup_l(5)
        op = matrix_power(pair.phi, 2) + 0.3 * pair.phi
        assert max_norm(dh_dpi(op, gens, pair)) <= 1e-10

    def test_phi_derivative_of_phi(self):
        # interior diagonal is exactly 1; the cyclic wrap drags the two edge
        # entries to -(2l - 1)/2.
        _, gens, pair = setup_l(2)
        got = dh_dphi(pair.phi, gens, pair)
        expected = np.diag([-1.5, 1.0, 1.0, 1.0, -1.5]).astype(complex)
        assert max_norm(got - expected) <= 1e-12

    def test_pi_derivative_matches_brute_force_products(self):
        _, gens, pair = setup_l(2)
        h = oscillator_h(pair)
        got = dh_dpi(h, gens, pair)
        b = gens.b
        brute = np.zeros((5, 5), dtype=complex)
        for r in range(5):
            for c in range(5):
                left = sum(
                    b[k, r].conjugate() * h[k, m] * b[m, c] for k in range(5) for m in range(5)
                )
                right = sum(
                    b[r, k] * h[k, m] * b[c, m].conjugate() for k in range(5) for m in range(5)
                )
                brute[r, c] = (left - right) / (2 * pair.beta)
        assert max_norm(got - brute) <= 1e-12
        assert max_norm(got - got.conj().T) <= 1e-10

    def test_hermiticity_preserved(self):
        dim, gens, pair = setup_l(7)
        h = random_hermitian(dim, 4)
        for op in (dh_dphi(h, gens, pair), dh_dpi(h, gens, pair)):
            assert max_norm(op - op.conj().T) <= 1e-10

    def test_shape_mismatch_rejected(self):
        _, gens, pair = setup_l(2)
        with pytest.raises(ValueError, match="does not match"):
            dh_dphi(np.eye(3), gens, pair)


class TestHeisenbergRate:
    def test_energy_conserved(self):
        _, gens, pair = setup_l(3)
        h = oscillator_h(pair)
        assert max_norm(heisenberg_rate(h, h)) <= 1e-14

    def test_identity_is_stationary(self):
        _, gens, pair = setup_l(3)
        h = oscillator_h(pair)
        assert max_norm(heisenberg_rate(h, np.eye(7))) <= 1e-14

    def test_hermitian_rate_for_hermitian_observable(self):
        dim, gens, pair = setup_l(4)
        h = oscillator_h(pair)
        o = random_hermitian(dim, 8)
        rate = heisenberg_rate(h, o)
        assert max_norm(rate - rate.conj().T) <= 1e-10

    def test_dimension_mismatch_rejected(self):
        _, _, pair = setup_l(2)
        with pytest.raises(ValueError):
            heisenberg_rate(pair.phi, np.eye(3))


class TestNestedCommutator:
    def test_first_order_is_plain_commutator(self):
        _, _, pair = setup_l(2)
        h = oscillator_h(pair)
        assert np.array_equal(nested_commutator(pair.pi, h, 1), commutator(pair.pi, h))

    def test_zero_order_returns_operator(self):
        _, _, pair = setup_l(2)
        h = oscillator_h(pair)
        assert np.array_equal(nested_commutator(pair.pi, h, 0), h)

    def test_commuting_input_stays_zero(self):
        _, _, pair = setup_l(3)
        op = matrix_power(pair.pi, 2)
        for order in (1, 2, 5):
            assert max_norm(nested_commutator(pair.pi, op, order)) <= 1e-12

    def test_third_order_matches_unrolled_calls(self):
        _, _, pair = setup_l(1)
        h = oscillator_h(pair)
        unrolled = commutator(pair.pi, commutator(pair.pi, commutator(pair.pi, h)))
        assert max_norm(nested_commutator(pair.pi, h, 3) - unrolled) <= 1e-12

    def test_negative_order_rejected(self):
        _, _, pair = setup_l(1)
        with pytest.raises(ValueError, match="order"):
            nested_commutator(pair.pi, pair.phi, -1)


class TestEomResidual:
    def test_momentum_function_closes_immediately(self):
        dim, gens, pair = setup_l(5)
        h = matrix_power(pair.pi, 2) / 2
        report = eom_residual(h, pair, gens, "pi", 3)
        assert report.final_residual <= 1e-12
        assert report.residual_norm_by_order[1] <= 1e-12

    @pytest.mark.parametrize("bad", [0, 1, 2, 4, 24])
    def test_bad_truncation_rejected(self, bad):
        _, gens, pair = setup_l(2)
        with pytest.raises(ValueError, match="odd"):
            eom_residual(oscillator_h(pair), pair, gens, "pi", bad)

    def test_bad_variable_rejected(self):
        _, gens, pair = setup_l(2)
        with pytest.raises(ValueError, match="variable"):
            eom_residual(oscillator_h(pair), pair, gens, "theta", 3)

    def test_non_hermitian_rejected(self):
        _, gens, pair = setup_l(2)
        with pytest.raises(ValueError, match="Hermitian"):
            eom_residual(gens.a, pair, gens, "pi", 3)

    def test_oscillator_residual_series(self):
        # frozen from the series oracle at l=10, omega=1: the defect after
        # order 25 is 4.913e-8 for the pi equation and 5.097e-7 for phi.
        _, gens, pair = setup_l(10)
        h = oscillator_h(pair)
        expected_final = {"pi": 4.91283109419814e-08, "phi": 5.097349511278814e-07}
        for variable in ("pi", "phi"):
            report = eom_residual(h, pair, gens, variable, 25)
            assert sorted(report.residual_norm_by_order) == list(range(1, 26, 2))
            assert report.final_residual == pytest.approx(expected_final[variable], rel=1e-3)
            assert report.final_residual < report.residual_norm_by_order[3]
            orders = sorted(report.residual_norm_by_order)
            values = [report.residual_norm_by_order[k] for k in orders]
            peak = int(np.argmax(values))
            for i in range(peak, len(values) - 1):
                assert values[i + 1] <= values[i]

    def test_report_dict_schema(self):
        _, gens, pair = setup_l(3)
        report = eom_residual(oscillator_h(pair), pair, gens, "phi", 5)
        payload = report.as_dict()
        assert payload["dim"] == {"l": 3, "n": 7}
        assert payload["variable"] == "phi"
        assert payload["truncation_order"] == 5
        assert [entry["n"] for entry in payload["orders"]] == [1, 3, 5]
        assert payload["final_residual"] == payload["orders"][-1]["residual"]


class TestSeriesIdentities:
    def test_conjugation_matches_nested_series(self):
        # a† h a equals the full exponential-adjoint series in pi; with 31
        # terms the defect is at roundoff for l=5.
        _, gens, pair = setup_l(5)
        h = oscillator_h(pair)
        conjugated = gens.a.conj().T @ h @ gens.a
        acc = np.zeros_like(h)
        defects = []
        for order in range(31):
            term = (1j * pair.alpha) ** order / math.factorial(order)
            acc = acc + term * nested_commutator(pair.pi, h, order)
            defects.append(max_norm(conjugated - acc))
        assert defects[-1] <= 1e-10
        assert defects[-1] < defects[0]

    def test_position_rate_approaches_derivative(self):
        # away from the wrap (central block) the phi rate converges on the
        # pi derivative as the dimension grows.
        ratios = []
        for l in (5, 10, 20, 40):
            dim, gens, pair = setup_l(l)
            h = oscillator_h(pair)
            lhs = heisenberg_rate(h, pair.phi)
            rhs = dh_dpi(h, gens, pair)
            central = np.abs(dim.indices()) <= l / 2
            block = np.ix_(central, central)
            ratios.append(max_norm((lhs - rhs)[block]) / max_norm(rhs[block]))
        for earlier, later in zip(ratios, ratios[1:]):
            assert later < earlier
