import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bnls.constants import (
    K_from_C,
    K_from_c_eps,
    K_numeric,
    c_eps_formula,
    c_eps_from_K,
    compute_constants,
    eps_c_formula,
    omega_formula,
)
from bnls.errors import RegimeError
from bnls.functionals import Params


@st.composite
def regime_params(draw):
    n = draw(st.integers(1, 3))
    lo, hi = 2.0 + 4.0 / n, 2.0 + 8.0 / n
    width = hi - lo
    p = draw(st.floats(lo + 0.05 * width, hi - 0.05 * width))
    eps = draw(st.floats(0.05, 20.0))
    return Params(bigN=n, p=p, eps=eps)


class TestCepsFormula:
    def test_unit_constant_n1_p8(self):
        pm = Params(bigN=1, p=8.0, eps=1.0)
        assert c_eps_formula(1.0, pm) == pytest.approx(2.0, rel=1e-14)

    def test_eps_64(self):
        pm = Params(bigN=1, p=8.0, eps=64.0)
        assert c_eps_formula(1.0, pm) == pytest.approx(4.0, rel=1e-14)

    def test_n2_p5(self):
        pm = Params(bigN=2, p=5.0, eps=1.0)
        assert c_eps_formula(1.0, pm) == pytest.approx(5.0 ** (2.0 / 3.0), rel=1e-14)

    def test_rejects_bad_constant(self):
        pm = Params(bigN=1, p=8.0, eps=1.0)
        with pytest.raises(RegimeError):
            c_eps_formula(0.0, pm)

    @given(regime_params(), st.floats(0.1, 10.0))
    @settings(max_examples=80)
    def test_eps_scaling_law(self, pm, s):
        from dataclasses import replace

        ep = pm.exponents()
        base = c_eps_formula(1.3, pm)
        scaled = c_eps_formula(1.3, replace(pm, eps=s * pm.eps))
        assert scaled / base == pytest.approx(s ** (ep.alpha / (pm.p - 2.0)), rel=1e-12)


class TestEpsCFormula:
    def test_inverse_of_first_example(self):
        pm = Params(bigN=1, p=8.0, eps=1.0)
        assert eps_c_formula(2.0, 1.0, pm) == pytest.approx(1.0, rel=1e-14)

    @given(regime_params(), st.floats(0.1, 10.0), st.floats(0.1, 10.0))
    @settings(max_examples=80)
    def test_roundtrip(self, pm, c, C):
        from dataclasses import replace

        eps_c = eps_c_formula(c, C, pm)
        back = c_eps_formula(C, replace(pm, eps=eps_c))
        assert back == pytest.approx(c, rel=1e-12)

    def test_monotone_in_mass(self):
        pm = Params(bigN=1, p=8.0, eps=1.0)
        assert eps_c_formula(2.0, 1.0, pm) < eps_c_formula(4.0, 1.0, pm)


class TestKRoutes:
    def test_lemma_value(self):
        pm = Params(bigN=1, p=8.0, eps=1.0)
        assert K_from_c_eps(2.0, pm) == pytest.approx(0.5, rel=1e-14)

    @given(regime_params(), st.floats(0.1, 10.0))
    @settings(max_examples=80)
    def test_inversion_roundtrip(self, pm, c_eps):
        assert c_eps_from_K(K_from_c_eps(c_eps, pm), pm) == pytest.approx(c_eps, rel=1e-12)

    @given(regime_params(), st.floats(0.1, 10.0))
    @settings(max_examples=80)
    def test_two_routes_agree(self, pm, C):
        via_c = K_from_c_eps(c_eps_formula(C, pm), pm)
        direct = K_from_C(C, pm)
        assert direct == pytest.approx(via_c, rel=1e-12)

    def test_agreement_example(self):
        pm = Params(bigN=1, p=8.0, eps=1.0)
        assert K_from_C(1.0, pm) == pytest.approx(K_from_c_eps(2.0, pm), rel=1e-14)


class TestOmegaFormula:
    def test_n1_p8(self):
        assert omega_formula(1.0, Params(bigN=1, p=8.0, eps=1.0)) == pytest.approx(6.0)

    def test_n2_p5(self):
        assert omega_formula(1.0, Params(bigN=2, p=5.0, eps=1.0)) == pytest.approx(3.0)

    @given(regime_params(), st.floats(0.1, 10.0))
    @settings(max_examples=40)
    def test_inverse_eps_scaling(self, pm, s):
        from dataclasses import replace

        assert omega_formula(1.7, replace(pm, eps=s * pm.eps)) * s == pytest.approx(
            omega_formula(1.7, pm), rel=1e-12
        )


class TestPipeline:
    def test_report_consistency_triangle(self, params, grid, config, constants_report):
        cr = constants_report
        assert K_from_C(cr.C, params) == pytest.approx(cr.K, rel=1e-10)
        assert cr.c_eps == pytest.approx(c_eps_formula(cr.C, params), rel=1e-14)
        assert cr.omega_eps == pytest.approx(omega_formula(cr.v_mass, params), rel=1e-14)
        # eps_c is reported at c = c_eps, so it returns eps itself
        assert cr.eps_c == pytest.approx(params.eps, rel=1e-10)
        assert cr.provenance["C"].startswith("numeric")
        assert cr.provenance["c_eps"].startswith("formula")

    def test_report_table_and_dict(self, constants_report):
        table = constants_report.table()
        assert "c_eps" in table and "omega_eps" in table
        doc = constants_report.as_dict()
        assert doc["C"] == constants_report.C

    def test_k_numeric_seeded_at_optimizer(self, params, grid, config, q_state, constants_report):
        got = K_numeric(params, grid, config, n_starts=2, seed_field=q_state.field)
        assert got == pytest.approx(constants_report.K, rel=1e-4)

    def test_compute_constants_with_k_numeric(self, params, config):
        from bnls.grid import BoxGrid

        small = BoxGrid(1, 512, 40.0)
        cr = compute_constants(params, small, config, with_k_numeric=True)
        assert cr.K_numeric == pytest.approx(cr.K, rel=1e-3)
