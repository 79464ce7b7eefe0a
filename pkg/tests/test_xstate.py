import math

import numpy as np
import pytest
from hypothesis import given, settings
from numpy.testing import assert_allclose

from conftest import AB1_QUARTER, BELL, MIXED, xstate_entries
from oracles import charpoly_eigenvalues, random_xstate_entries
from relsteer.errors import DomainError, NotAState, NotPositive
from relsteer.xstate import (
    BlochX,
    bloch_from_xstate,
    eigenvalues,
    make_xstate,
    marginals,
    xstate_from_bloch,
)


class TestMakeXState:
    def test_bell_is_valid(self):
        x = make_xstate(*BELL)
        assert x.as_tuple() == BELL

    def test_maximally_mixed_is_valid(self):
        assert make_xstate(*MIXED).as_tuple() == MIXED

    def test_outer_block_violation(self):
        with pytest.raises(NotPositive):
            make_xstate(0.5, 0, 0, 0.5, 0.6, 0)

    def test_inner_block_violation(self):
        with pytest.raises(NotPositive):
            make_xstate(0.0, 0.5, 0.5, 0.0, 0.0, -0.51)

    def test_trace_violation(self):
        with pytest.raises(NotAState):
            make_xstate(0.5, 0.5, 0.5, 0.0, 0.0, 0.0)

    def test_negative_population(self):
        with pytest.raises(NotPositive):
            make_xstate(1.1, -0.1, 0.0, 0.0, 0.0, 0.0)

    def test_float_dust_is_clamped(self):
        x = make_xstate(0.5 + 2e-11, -5e-13, 0.0, 0.5 - 2e-11, 0.5 + 1e-13, 0.0)
        assert x.d2 == 0.0
        assert x.d1 * x.d4 - x.f**2 >= -1e-16
        assert min(np.linalg.eigvalsh(x.matrix())) >= -1e-15
        assert sum(x.as_tuple()[:4]) == pytest.approx(1.0, abs=1e-15)

    def test_trace_dust_is_accepted(self):
        x = make_xstate(0.25 + 5e-11, 0.25, 0.25, 0.25, 0.0, 0.0)
        assert sum(x.as_tuple()[:4]) == pytest.approx(1.0, abs=1e-15)

    def test_complex_coherence_rejected(self):
        with pytest.raises(DomainError):
            make_xstate(0.5, 0, 0, 0.5, 0.5j, 0)

    def test_real_valued_complex_accepted(self):
        assert make_xstate(0.5, 0, 0, 0.5, 0.5 + 0j, 0).f == 0.5

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            make_xstate(float("nan"), 0, 0, 1, 0, 0)

    def test_matrix_layout(self):
        m = make_xstate(*AB1_QUARTER).matrix()
        assert m[0, 3] == m[3, 0]
        assert m[0, 3] == pytest.approx(AB1_QUARTER[4], abs=1e-15)
        assert m[1, 2] == m[2, 1] == 0.0
        assert_allclose(np.diag(m), AB1_QUARTER[:4], atol=1e-15)


class TestBloch:
    def test_bell(self):
        assert bloch_from_xstate(make_xstate(*BELL)).as_tuple() == (1.0, -1.0, 1.0, 0.0, 0.0)

    def test_mixed(self):
        assert bloch_from_xstate(make_xstate(*MIXED)).as_tuple() == (0.0, 0.0, 0.0, 0.0, 0.0)

    def test_alice_bob_state_at_pi_over_3(self):
        # (d1, d4, f) = (1/4, 3/4, sqrt(3)/4) from cos^2(pi/3) = 1/4
        x = make_xstate(0.25, 0.0, 0.0, 0.75, math.sqrt(3) / 4, 0.0)
        h = math.sqrt(3) / 2
        assert_allclose(bloch_from_xstate(x).as_tuple(), (h, -h, 1.0, -0.5, -0.5), atol=1e-15)

    def test_inverse_bell(self):
        assert xstate_from_bloch(BlochX(1, -1, 1, 0, 0)).as_tuple() == BELL

    def test_inverse_mixed(self):
        assert xstate_from_bloch(BlochX(0, 0, 0, 0, 0)).as_tuple() == MIXED

    def test_unphysical_corner(self):
        # entries (1, 0, 0, 0, 0, 1/2): inner block 0 * 0 < 1/4
        with pytest.raises(NotPositive):
            xstate_from_bloch(BlochX(1, 1, 1, 1, 1))

    def test_swapped(self):
        assert BlochX(0.1, 0.2, 0.3, 0.4, 0.5).swapped() == BlochX(0.1, 0.2, 0.3, 0.5, 0.4)

    @given(xstate_entries())
    @settings(max_examples=300)
    def test_round_trip(self, entries):
        x = make_xstate(*entries)
        y = xstate_from_bloch(bloch_from_xstate(x))
        assert_allclose(y.as_tuple(), x.as_tuple(), atol=1e-12)


class TestEigenvalues:
    def test_bell(self):
        assert_allclose(eigenvalues(make_xstate(*BELL)), (1, 0, 0, 0), atol=1e-15)

    def test_mixed(self):
        assert_allclose(eigenvalues(make_xstate(*MIXED)), (0.25,) * 4)

    def test_alice_bob_quarter(self):
        assert_allclose(eigenvalues(make_xstate(*AB1_QUARTER)), (0.75, 0.25, 0, 0), atol=1e-15)

    def test_against_characteristic_polynomial(self, rng):
        for _ in range(500):
            x = make_xstate(*random_xstate_entries(rng))
            ev = eigenvalues(x)
            assert min(ev) >= 0.0
            assert sum(ev) == pytest.approx(1.0, abs=1e-12)
            assert_allclose(ev, charpoly_eigenvalues(x.matrix()), atol=1e-7)

    @given(xstate_entries())
    def test_against_dense_solver(self, entries):
        x = make_xstate(*entries)
        assert_allclose(eigenvalues(x), np.sort(np.linalg.eigvalsh(x.matrix()))[::-1], atol=1e-10)


class TestMarginals:
    def test_bell(self):
        assert marginals(make_xstate(*BELL)) == (0.0, 0.0)

    def test_zero_zero(self):
        assert marginals(make_xstate(1, 0, 0, 0, 0, 0)) == (1.0, 1.0)

    def test_alice_bob_state_at_pi_over_3(self):
        x = make_xstate(0.25, 0.0, 0.0, 0.75, math.sqrt(3) / 4, 0.0)
        assert marginals(x) == (-0.5, -0.5)

    @given(xstate_entries())
    def test_match_bloch(self, entries):
        x = make_xstate(*entries)
        b = bloch_from_xstate(x)
        assert marginals(x) == (b.r, b.s)
