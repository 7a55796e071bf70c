"""Tests for developing-map reconstruction and its certificates."""

import math
import random
from fractions import Fraction as F

import pytest

from conftest import EXACT_WRONSKIAN_INSTANCES, draw_modulus, draw_params
from sphquad import developing as D
from sphquad import heun as H
from sphquad import params as PM
from sphquad import polys as P
from sphquad import spectra as S


def _norm(*angles):
    return PM.normalize(PM.AngleSet(*angles))


KZ = _norm(F(65, 32), 4, 6, F(65, 32))


def _pair_and_seated(angles, t, lam):
    prm = PM.normalize(PM.AngleSet(*angles))
    return D.assemble_developing_pair(prm, t, lam), PM.denormalize(prm)


class TestExponentSystem:
    # frozen from tests/oracles/developing_system.py (exhaustive search,
    # p, q <= 20): the normalized zero-at-origin solution of each case
    CASES = [
        ((F(65, 32), 4, 6, F(65, 32)), (6, 4, 2, 0, F(1, 32))),
        ((F(1, 2), 2, 2, F(1, 2)), (1, 1, 0, 0, F(1, 2))),
        ((F(1, 2), 2, 2, F(3, 2)), (0, 2, 0, 0, F(1, 2))),
        ((F(1, 2), 2, 2, F(5, 2)), (2, 0, 0, 0, F(1, 2))),
        ((F(255, 128), 4, 6, F(255, 128)), (5, 4, 1, 0, F(127, 128))),
    ]

    @pytest.mark.parametrize("angles,expected", CASES)
    def test_frozen_solutions(self, angles, expected):
        sol = D.solve_exponent_system(PM.AngleSet(*angles))
        assert (sol.p, sol.q, sol.p0, sol.q0, sol.alpha) == expected

    def test_small_solution_degree_sum(self):
        sol = D.solve_exponent_system(PM.AngleSet(F(1, 2), 2, 2, F(1, 2)))
        assert sol.p + sol.q == 2 + max(sol.p0, sol.q0)

    def test_unrealizable_angles_rejected(self):
        with pytest.raises(D.NoSolution):
            D.solve_exponent_system(PM.AngleSet(F(1, 2), 2, 2, F(9, 2)))

    def test_float_angles(self):
        sol = D.solve_exponent_system(
            PM.AngleSet(math.sqrt(2), 3, 3, math.sqrt(2))
        )
        assert (sol.p, sol.q, sol.p0, sol.q0) == (3, 2, 1, 0)
        assert sol.alpha == pytest.approx(math.sqrt(2) - 1, abs=1e-12)

    def test_random_corpus_identities(self):
        rng = random.Random(37)
        for _ in range(40):
            angles = PM.denormalize(draw_params(rng, mmax=7))
            sol = D.solve_exponent_system(angles)
            assert 0 < sol.alpha < 1
            assert min(sol.p0, sol.q0) == 0
            assert sol.p >= sol.p0 and sol.q >= sol.q0
            assert abs(sol.p0 - sol.q0 + sol.alpha) == angles.alpha0
            assert abs(sol.p - sol.q + sol.alpha) == angles.alpha3
            assert sol.p + sol.q - max(sol.p0, sol.q0) == (
                angles.alpha1 + angles.alpha2 - 2
            )


class TestTerminatingSolutions:
    def test_kappa0_constant(self):
        prm = _norm(F(1, 2), 2, 2, F(5, 2))
        assert prm.kappa == 0
        h = D.polynomial_solution(H.band_origin0(prm, F(1, 3)).form, F(0))
        assert h == (F(1),)

    @pytest.mark.parametrize("angles,t,lam", EXACT_WRONSKIAN_INSTANCES)
    def test_exact_roots_terminate(self, angles, t, lam):
        prm = _norm(*angles)
        h = D.polynomial_solution(H.band_origin0(prm, t).form, lam)
        assert len(h) == prm.kappa + 1
        tw = D.quasipolynomial_solution(H.band_quasi_origin0(prm, t).form, lam)
        assert tw.exponent == prm.sigma + 1
        assert len(tw.coeffs) == prm.m + prm.n - prm.kappa + 1

    def test_perturbed_lambda_rejected_exact(self):
        angles, t, lam = EXACT_WRONSKIAN_INSTANCES[8]
        prm = _norm(*angles)
        form = H.band_origin0(prm, t).form
        with pytest.raises(D.TerminationFailed):
            D.polynomial_solution(form, lam + F(1, 1000))
        qform = H.band_quasi_origin0(prm, t).form
        with pytest.raises(D.TerminationFailed):
            D.quasipolynomial_solution(qform, lam + F(1, 1000))

    def test_perturbed_lambda_rejected_double(self):
        rep = S.solve_lambda(KZ, 0.3, "double")
        form = H.band_origin0(KZ, 0.3).form
        with pytest.raises(D.TerminationFailed):
            D.polynomial_solution(form, rep.lam_real[0] + 1e-3)

    def test_double_roots_terminate(self):
        rep = S.solve_lambda(KZ, 0.3, "double")
        form = H.band_origin0(KZ, 0.3).form
        for lam in rep.lam_real:
            h = D.polynomial_solution(form, lam)
            assert len(h) == KZ.kappa + 1

    def test_even_split_window_degrees(self):
        # m + n = 2*kappa: the polynomial and twisted windows match in
        # degree, and in general the two degrees sum to m + n
        assert KZ.m + KZ.n == 2 * KZ.kappa
        rep = S.solve_lambda(KZ, 0.3, "double")
        lam = rep.lam_real[0]
        h = D.polynomial_solution(H.band_origin0(KZ, 0.3).form, lam)
        tw = D.quasipolynomial_solution(H.band_quasi_origin0(KZ, 0.3).form, lam)
        assert len(h) == len(tw.coeffs)
        assert (len(h) - 1) + (len(tw.coeffs) - 1) == KZ.m + KZ.n

    def test_degenerate_moduli_rejected(self):
        for t in (0, 1, F(0), F(1)):
            form = H.band_origin0(KZ, t).form
            with pytest.raises(H.DegenerateModulus):
                D.polynomial_solution(form, F(0))
            qform = H.band_quasi_origin0(KZ, t).form
            with pytest.raises(H.DegenerateModulus):
                D.quasipolynomial_solution(qform, F(0))

    def test_reflected_form_rejected(self):
        form = H.HeunForm(H.Origin.ORIGIN0, KZ, F(1, 3), reflected=True)
        with pytest.raises(ValueError):
            D.polynomial_solution(form, F(0))


class TestAssembledPairs:
    @pytest.mark.parametrize("angles,t,lam", EXACT_WRONSKIAN_INSTANCES)
    def test_exact_certificates(self, angles, t, lam):
        pair, seated = _pair_and_seated(angles, t, lam)
        sol = D.solve_exponent_system(seated)
        assert (pair.p, pair.q, pair.p0, pair.q0, pair.alpha) == (
            sol.p, sol.q, sol.p0, sol.q0, sol.alpha,
        )
        assert min(pair.p0, pair.q0) == 0
        assert pair.coprime()
        assert D.exponent_system_ok(pair, seated)
        res = D.wronskian_verify(pair, t, seated)
        assert res.residual_norm == 0
        assert res.ok
        assert res.c != 0

    def test_scaling_leaves_ok_invariant(self):
        angles, t, lam = EXACT_WRONSKIAN_INSTANCES[13]
        pair, seated = _pair_and_seated(angles, t, lam)
        for cp, cq in [(7, 7), (-3, 1), (1, F(2, 5))]:
            scaled = D.DevelopingPair(
                P=tuple(cp * x for x in pair.P),
                Q=tuple(cq * x for x in pair.Q),
                alpha=pair.alpha,
            )
            res = D.wronskian_verify(scaled, t, seated)
            assert res.ok and res.residual_norm == 0

    def test_arbitrary_pair_rejected(self):
        seated = PM.AngleSet(F(1, 2), 2, 2, F(1, 2))
        junk = D.DevelopingPair(P=(F(0), F(1), F(2)), Q=(F(1), F(1)), alpha=F(1, 2))
        res = D.wronskian_verify(junk, F(1, 6), seated)
        assert res.residual_norm > 0
        assert not res.ok

    def test_lhs_root_multiplicities(self):
        # the certified identity forces the full critical divisor: after
        # stripping z**max(p0,q0), dividing by the two corner factors
        # leaves exactly the constant c
        angles, t, lam = EXACT_WRONSKIAN_INSTANCES[-1]
        pair, seated = _pair_and_seated(angles, t, lam)
        res = D.wronskian_verify(pair, t, seated)
        k0 = max(pair.p0, pair.q0)
        lhs = list(res.lhs)
        assert all(x == 0 for x in lhs[:k0])
        rest = lhs[k0:]
        for _ in range(seated.alpha1 - 1):
            assert P.pdivides([-1, 1], rest)
            rest = P.pdivmod(rest, [-1, 1])[0]
        for _ in range(seated.alpha2 - 1):
            assert P.pdivides([-t, 1], rest)
            rest = P.pdivmod(rest, [-t, 1])[0]
        assert P.ptrim(rest) == [res.c]

    def test_double_model_pair(self):
        rep = S.solve_lambda(KZ, 0.3, "double")
        seated = PM.denormalize(KZ)
        sol = D.solve_exponent_system(seated)
        for lam in rep.lam_real:
            pair = D.assemble_developing_pair(KZ, 0.3, lam)
            assert (pair.p, pair.q, pair.p0, pair.q0) == (
                sol.p, sol.q, sol.p0, sol.q0,
            )
            res = D.wronskian_verify(pair, 0.3, seated)
            assert res.ok

    def test_random_nonroot_assembly_rejected(self):
        rng = random.Random(38)
        hits = 0
        for _ in range(30):
            prm = draw_params(rng, mmax=5)
            t = draw_modulus(rng)
            lam = F(rng.randint(-40, 40), rng.randint(1, 7))
            try:
                D.assemble_developing_pair(prm, t, lam)
            except D.TerminationFailed:
                hits += 1
        # a random rational lambda is essentially never a certificate root
        assert hits >= 28


class TestVeronese:
    def test_examples(self):
        assert D.veronese_degree(1, 1) == 2
        assert D.veronese_degree(0, 5) == 1
        assert D.veronese_degree(2, 2) == 6

    def test_symmetry(self):
        for p in range(6):
            for q in range(6):
                assert D.veronese_degree(p, q) == D.veronese_degree(q, p)
                assert D.veronese_degree(p, q) == math.comb(p + q, p)
