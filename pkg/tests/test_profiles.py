import math

import pytest

from fthbi import (
    FixedExponent,
    FractionalOrder,
    HyperbolicExponent,
    InverseExponentialExponent,
    ProblemKind,
    ProblemSpec,
    SimilarityProfile,
    eval_profile,
    factor_n,
    front_correction,
    front_factor,
    gamma,
    n_s_fit,
    penetration_depth,
    similarity_eta,
    variable_exponent,
)

SUB = ProblemKind.SUBDIFFUSION
DRIFT = ProblemKind.DRIFT


def test_fractional_order_validation():
    assert float(FractionalOrder(0.5)) == 0.5
    with pytest.raises(ValueError):
        FractionalOrder(0.0)
    with pytest.raises(ValueError):
        FractionalOrder(1.0)
    with pytest.raises(ValueError):
        FractionalOrder(math.inf)


def test_problem_spec_validation():
    spec = ProblemSpec(SUB, 0.5)
    assert spec.coeff == 1.0
    with pytest.raises(ValueError):
        ProblemSpec(SUB, 0.5, coeff=0.0)
    with pytest.raises(TypeError):
        ProblemSpec("sub", 0.5)


def test_exponent_rule_validation():
    with pytest.raises(ValueError):
        FixedExponent(0.5)
    with pytest.raises(ValueError):
        HyperbolicExponent(0.0)
    FixedExponent(1.0)  # boundary allowed


def test_factor_n():
    # n(n+1) Gamma(2-mu)
    assert factor_n(2.0, 1.0 / 3.0) == pytest.approx(5.416471757705607, rel=1e-14)
    assert factor_n(1.0, 0.5) == pytest.approx(2.0 * gamma(1.5), rel=1e-14)


def test_front_factor_values():
    spec = ProblemSpec(SUB, 0.5)
    assert front_factor(spec, 1.472) == pytest.approx(2.0735760919103623, rel=1e-13)
    drift = ProblemSpec(DRIFT, 0.5)
    assert front_factor(drift, 2.0) == pytest.approx(6.0 * gamma(1.5), rel=1e-14)


def test_front_factor_classical_limit():
    # as mu -> 1 the subdiffusion front factor recovers sqrt(2 n (n+1))
    for n in (1.5, 2.0, 3.0):
        spec = ProblemSpec(SUB, 1.0 - 1e-12)
        assert front_factor(spec, n) == pytest.approx(
            math.sqrt(2.0 * n * (n + 1.0)), rel=1e-9
        )


def test_front_correction():
    # j = sqrt(Gamma(2-mu)/(2-mu)); tends to 1 in the classical limit
    assert front_correction(0.5) == pytest.approx(
        math.sqrt(gamma(1.5) / 1.5), rel=1e-14
    )
    assert front_correction(1.0 - 1e-12) == pytest.approx(1.0, abs=1e-9)


def test_penetration_depth_zero_at_origin():
    spec = ProblemSpec(SUB, 0.5, coeff=2.0)
    assert penetration_depth(spec, 1.5, 0.0) == 0.0
    with pytest.raises(ValueError):
        penetration_depth(spec, 1.5, -1.0)


@pytest.mark.parametrize(
    "kind,coeff,slope",
    [(SUB, 1.7, 0.25), (DRIFT, 0.4, 0.5), (SUB, 1.0, 0.25), (DRIFT, 1.0, 0.5)],
)
def test_penetration_depth_growth_exponent(kind, coeff, slope):
    spec = ProblemSpec(kind, 0.5, coeff=coeff)
    d1 = penetration_depth(spec, 2.0, 1.0)
    d2 = penetration_depth(spec, 2.0, 2.0)
    assert math.log(d2 / d1) / math.log(2.0) == pytest.approx(slope, abs=1e-10)


def test_similarity_eta_front_lands_on_lambda():
    spec = ProblemSpec(SUB, 0.5, coeff=1.3)
    n = 1.8
    t = 2.5
    x_front = penetration_depth(spec, n, t)
    eta = similarity_eta(spec, x_front, t)
    assert eta == pytest.approx(front_factor(spec, n), rel=1e-13)
    with pytest.raises(ValueError):
        similarity_eta(spec, 1.0, 0.0)


def test_variable_exponent_rules():
    hyp = HyperbolicExponent(1.0)
    inv = InverseExponentialExponent(1.25)
    assert variable_exponent(inv, 1.0 / 3.0, 1.0) == pytest.approx(
        1.3726264803904809, rel=1e-12
    )
    # hyperbolic rule n0 + mu/eta decays toward n0 and is singular at 0
    assert variable_exponent(hyp, 0.5, 1.0) == pytest.approx(1.5, rel=1e-14)
    assert variable_exponent(hyp, 0.5, 2.0) > variable_exponent(hyp, 0.5, 3.0)
    with pytest.raises(ValueError):
        variable_exponent(hyp, 0.5, 0.0)
    # inverse-exponential rule n0 + mu eta exp(-eta) is regular at 0
    assert variable_exponent(inv, 0.5, 0.0) == 1.25
    # fixed rules pass through unchanged
    assert variable_exponent(FixedExponent(1.7), 0.5, 0.3) == 1.7


def test_profile_front_conditions():
    prof = SimilarityProfile(SUB, 0.5, FixedExponent(2.0))
    assert eval_profile(prof, 0.0) == 1.0
    assert eval_profile(prof, prof.lam) == 0.0
    assert eval_profile(prof, prof.lam + 1.0) == 0.0  # clamped outside


def test_profile_raw_mode():
    prof = SimilarityProfile(DRIFT, 0.5, FixedExponent(1.25))
    inside = eval_profile(prof, 1.0, "raw")
    assert inside == pytest.approx((1.0 - 1.0 / prof.lam) ** 1.25, rel=1e-14)
    # raw mode has no real value past the front for non-integer n
    assert eval_profile(prof, prof.lam + 0.5, "raw") is None
    # but integer exponents continue analytically
    quad = SimilarityProfile(DRIFT, 0.5, FixedExponent(2.0))
    past = eval_profile(quad, quad.lam + 1.0, "raw")
    assert past == pytest.approx((1.0 - (quad.lam + 1.0) / quad.lam) ** 2, rel=1e-12)
    with pytest.raises(ValueError):
        eval_profile(prof, 1.0, "bogus")


def test_hyperbolic_profile_value():
    prof = SimilarityProfile(DRIFT, 0.5, HyperbolicExponent(1.0))
    assert eval_profile(prof, 1.0) == pytest.approx(0.5845314969870153, rel=1e-12)


def test_variable_rules_are_drift_only():
    with pytest.raises(ValueError):
        SimilarityProfile(SUB, 0.5, HyperbolicExponent(1.0))


def test_profile_lambda_freeze_option():
    base = SimilarityProfile(DRIFT, 0.5, HyperbolicExponent(1.0))
    frozen = SimilarityProfile(
        DRIFT, 0.5, HyperbolicExponent(1.0), recompute_lambda=False
    )
    assert base.lam == frozen.lam  # same base front
    # with the front frozen, the local exponent still varies but the
    # support does not: values differ somewhere inside
    diffs = [
        abs(eval_profile(base, e) - eval_profile(frozen, e))
        for e in (0.5, 1.0, 1.5)
    ]
    assert max(diffs) > 0.0


def test_front_slope_vanishes_for_n_above_one():
    # d(profile)/d(eta) ~ (1 - eta/lam)^(n-1) -> 0 at the front
    for n in (1.5, 2.0, 2.5):
        prof = SimilarityProfile(SUB, 0.5, FixedExponent(n))
        eps = 1e-9
        slope_scale = eval_profile(prof, prof.lam - eps * prof.lam) / eps
        assert slope_scale < 1e-4


def test_n_s_fit():
    assert n_s_fit(0.5) == pytest.approx(1.4771193329935017, rel=1e-12)
    # the empirical fit stays inside the plausible window on (0, 1)
    for mu in (0.1, 0.3, 0.5, 0.7, 0.9):
        assert 1.25 < n_s_fit(mu) < 1.5
