"""Tests for the discrete phase-space grid.

The conventions under test (full-grid summation with prefactor N, the
1/(4N) orthogonality constant, the strip patterns of computational states)
were fixed once by brute force at N=2; that calibration is checked in as
tests/fixtures/phasespace_calibration.json and re-derived here.
"""

import json
from pathlib import Path

import numpy as np
import pytest

from qscatter.errors import DimensionMismatchError, InvalidValueError
from qscatter.linalg import dft_matrix, random_density_matrix
from qscatter.phasespace import (
    PhasePoint,
    WignerGrid,
    line_sum,
    overlap_from_grids,
    phase_point_operator,
    reconstruct,
    reflection,
    shift_u,
    shift_v,
    wigner_direct,
    wigner_via_circuit,
)
from qscatter.states import basis_state, maximally_mixed, pseudo_pure

FIXTURES = Path(__file__).parent / "fixtures"


def subgrid_points(n):
    return [(q, p) for q in range(n) for p in range(n)]


def full_grid_points(n):
    return [(q, p) for q in range(2 * n) for p in range(2 * n)]


def strip_pattern(label, n):
    """Ideal grid of |label><label|: a flat strip and an alternating strip."""
    w = np.zeros((2 * n, 2 * n))
    w[2 * label % (2 * n), :] = 1 / (2 * n)
    w[(2 * label + n) % (2 * n), :] = [(-1) ** p / (2 * n) for p in range(2 * n)]
    return w


class TestGridOperators:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_shift_u_cycles_basis(self, n):
        u = shift_u(n)
        vec = np.zeros(n)
        vec[0] = 1
        assert np.allclose(u @ vec, np.eye(n)[:, 1])
        assert np.allclose(np.linalg.matrix_power(u, n), np.eye(n), atol=1e-12)

    def test_shift_v_small_case(self):
        assert np.allclose(shift_v(2), np.diag([1, -1]), atol=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_shift_v_is_fourier_conjugate(self, n):
        f = dft_matrix(n)
        assert np.allclose(shift_v(n), f @ shift_u(n) @ f.conj().T, atol=1e-12)
        assert np.allclose(
            np.linalg.matrix_power(shift_v(n), n), np.eye(n), atol=1e-12
        )

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_reflection(self, n):
        r = reflection(n)
        assert np.allclose(r @ r, np.eye(n), atol=1e-12)
        assert r[0, 0] == 1  # |0> is a fixed point
        vec = np.zeros(n)
        vec[1] = 1
        assert np.allclose(r @ vec, np.eye(n)[:, n - 1])

    def test_origin_operator_is_scaled_reflection(self):
        a = phase_point_operator(PhasePoint(q=0, p=0, n=4))
        assert np.allclose(a, reflection(4) / 8, atol=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_hermitian_everywhere(self, n):
        for q, p in full_grid_points(n):
            a = phase_point_operator(PhasePoint(q=q, p=p, n=n))
            assert np.abs(a - a.conj().T).max() < 1e-12

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_scaled_operator_is_unitary(self, n):
        for q, p in [(0, 0), (1, 0), (0, 1), (n - 1, n + 1), (2 * n - 1, 2 * n - 1)]:
            u = 2 * n * phase_point_operator(PhasePoint(q=q, p=p, n=n))
            assert np.abs(u @ u.conj().T - np.eye(n)).max() < 1e-12

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_grid_redundancy_signs(self, n):
        for q, p in subgrid_points(n):
            a = phase_point_operator(PhasePoint(q=q, p=p, n=n))
            aq = phase_point_operator(PhasePoint(q=q + n, p=p, n=n))
            ap = phase_point_operator(PhasePoint(q=q, p=p + n, n=n))
            assert np.abs(aq - (-1) ** p * a).max() < 1e-12
            assert np.abs(ap - (-1) ** q * a).max() < 1e-12

    @pytest.mark.parametrize("n", [2, 4])
    def test_subgrid_orthogonality(self, n):
        pts = subgrid_points(n)
        gram = np.array(
            [
                [
                    np.trace(
                        phase_point_operator(PhasePoint(q=a[0], p=a[1], n=n))
                        @ phase_point_operator(PhasePoint(q=b[0], p=b[1], n=n))
                    ).real
                    for b in pts
                ]
                for a in pts
            ]
        )
        assert np.abs(gram - np.eye(n * n) / (4 * n)).max() < 1e-12

    def test_subgrid_traces_n2(self):
        # brute-forced once and frozen: only the origin operator has trace
        traces = [
            np.trace(phase_point_operator(PhasePoint(q=q, p=p, n=2)))
            for q, p in subgrid_points(2)
        ]
        assert np.allclose(traces, [0.5, 0, 0, 0], atol=1e-12)


class TestCalibrationFixture:
    """Re-derive the frozen summation conventions from scratch at N=2."""

    def setup_method(self):
        with open(FIXTURES / "phasespace_calibration.json") as fh:
            self.fixture = json.load(fh)

    def test_fixture_declares_full_range_prefactor_n(self):
        assert self.fixture["summation_range"] == "full-2Nx2N"
        assert self.fixture["reconstruction_prefactor"] == "N"
        assert self.fixture["p2_prefactor"] == "N"

    def test_orthogonality_constant(self):
        n = self.fixture["n"]
        assert self.fixture["orthogonality_constant"] == pytest.approx(1 / (4 * n))

    def test_full_range_round_trip_and_subgrid_shortfall(self):
        n = self.fixture["n"]
        ops = {
            (q, p): phase_point_operator(PhasePoint(q=q, p=p, n=n))
            for q, p in full_grid_points(n)
        }
        rng = np.random.default_rng(314)
        shortfall = self.fixture["subgrid_shortfall_factor"]
        for _ in range(25):
            rho = random_density_matrix(n, rng)
            w = wigner_direct(rho).values
            full = n * sum(w[q, p] * ops[(q, p)] for q, p in full_grid_points(n))
            sub = n * sum(w[q, p] * ops[(q, p)] for q, p in subgrid_points(n))
            assert np.abs(full - rho).max() < 1e-12
            # the N x N subgrid alone recovers rho only after the frozen factor
            assert np.abs(shortfall * sub - rho).max() < 1e-12


class TestWignerGrids:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_strip_pattern_all_labels(self, n):
        for label in range(n):
            w = wigner_direct(basis_state(label, n))
            assert np.abs(w.values - strip_pattern(label, n)).max() < 1e-10

    def test_maximally_mixed_lattice(self):
        # 1/N^2 on points with both coordinates even, zero elsewhere
        n = 4
        w = wigner_direct(maximally_mixed(n)).values
        expected = np.zeros((8, 8))
        expected[::2, ::2] = 1 / n**2
        assert np.abs(w - expected).max() < 1e-12

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_full_grid_sums_to_one(self, n):
        rng = np.random.default_rng(n + 100)
        for _ in range(10):
            w = wigner_direct(random_density_matrix(n, rng))
            assert w.values.sum() == pytest.approx(1.0, abs=1e-10)
            # equivalently: the even vertical lines carry the populations
            assert sum(
                line_sum(w, 0, -1, 2 * k) for k in range(n)
            ) == pytest.approx(1.0, abs=1e-10)

    def test_depolarized_grid_is_convex_combination(self):
        rho = basis_state(1, 4)
        w_pure = wigner_direct(rho).values
        w_mixed = wigner_direct(maximally_mixed(4)).values
        w_noisy = wigner_direct(pseudo_pure(1, 4, noise_p=0.15)).values
        assert np.abs(w_noisy - (0.85 * w_pure + 0.15 * w_mixed)).max() < 1e-12

    def test_imaginary_residue_guard(self):
        # a valid state never trips it
        w = wigner_direct(random_density_matrix(4, np.random.default_rng(1)))
        assert isinstance(w, WignerGrid)

    def test_rejects_non_state(self):
        with pytest.raises(InvalidValueError):
            wigner_direct(np.eye(4))


class TestCircuitRoute:
    @pytest.mark.parametrize("n", [2, 4])
    def test_matches_direct_everywhere(self, n):
        rng = np.random.default_rng(60 + n)
        rho = random_density_matrix(n, rng)
        w = wigner_direct(rho).values
        for q, p in full_grid_points(n):
            via = wigner_via_circuit(rho, PhasePoint(q=q, p=p, n=n))
            assert abs(via - w[q, p]) < 1e-10

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            wigner_via_circuit(maximally_mixed(2), PhasePoint(q=0, p=0, n=4))


class TestReconstruction:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_round_trip(self, n):
        rng = np.random.default_rng(70 + n)
        for _ in range(10):
            rho = random_density_matrix(n, rng)
            rec = reconstruct(wigner_direct(rho))
            assert np.abs(rec.matrix - rho).max() < 1e-10
            assert rec.valid

    def test_invalid_grid_is_flagged(self):
        rec = reconstruct(WignerGrid(n=2, values=np.zeros((4, 4))))
        assert not rec.valid
        assert np.abs(rec.matrix).max() == 0


class TestPairings:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_overlap_identity(self, n):
        rng = np.random.default_rng(80 + n)
        for _ in range(10):
            r1 = random_density_matrix(n, rng)
            r2 = random_density_matrix(n, rng)
            lhs = overlap_from_grids(wigner_direct(r1), wigner_direct(r2))
            assert lhs == pytest.approx(np.trace(r1 @ r2).real, abs=1e-10)

    def test_purity_from_grid(self):
        w = wigner_direct(basis_state(0, 4))
        assert overlap_from_grids(w, w) == pytest.approx(1.0, abs=1e-10)

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            overlap_from_grids(
                wigner_direct(maximally_mixed(2)), wigner_direct(maximally_mixed(4))
            )


class TestLineSums:
    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_vertical_even_lines_are_position_populations(self, n):
        rng = np.random.default_rng(90 + n)
        rho = random_density_matrix(n, rng)
        w = wigner_direct(rho)
        for k in range(n):
            assert line_sum(w, 0, -1, 2 * k) == pytest.approx(
                rho[k, k].real, abs=1e-10
            )

    @pytest.mark.parametrize("n", [2, 4, 8])
    def test_horizontal_even_lines_are_momentum_populations(self, n):
        rng = np.random.default_rng(95 + n)
        rho = random_density_matrix(n, rng)
        w = wigner_direct(rho)
        f = dft_matrix(n)
        mom = np.diag(f @ rho @ f.conj().T).real
        for s in range(n):
            assert line_sum(w, 1, 0, 2 * s) == pytest.approx(
                mom[(-s) % n], abs=1e-10
            )

    @pytest.mark.parametrize("n", [2, 4])
    def test_odd_lines_vanish(self, n):
        rho = random_density_matrix(n, np.random.default_rng(99))
        w = wigner_direct(rho)
        for k in range(n):
            assert abs(line_sum(w, 0, -1, 2 * k + 1)) < 1e-10
            assert abs(line_sum(w, 1, 0, 2 * k + 1)) < 1e-10

    def test_rejects_degenerate_line(self):
        w = wigner_direct(maximally_mixed(2))
        with pytest.raises(InvalidValueError):
            line_sum(w, 0, 0, 1)
        with pytest.raises(InvalidValueError):
            line_sum(w, 1, 0, 0.5)


class TestValidation:
    def test_phase_point_ranges(self):
        with pytest.raises(InvalidValueError):
            PhasePoint(q=8, p=0, n=4)
        with pytest.raises(InvalidValueError):
            PhasePoint(q=0, p=-1, n=4)
        with pytest.raises(InvalidValueError):
            PhasePoint(q=0, p=0, n=1)

    def test_grid_shape_checked(self):
        with pytest.raises(DimensionMismatchError):
            WignerGrid(n=4, values=np.zeros((4, 4)))

    def test_grid_must_be_finite(self):
        bad = np.zeros((4, 4))
        bad[0, 0] = np.inf
        with pytest.raises(InvalidValueError):
            WignerGrid(n=2, values=bad)
