import numpy as np
import pandas as pd
import pytest
from hypothesis import given, seed, settings, strategies as st

from uncertframes.components.constructions import (
    constant,
    dft_pair,
    dirac_comb,
    identity_pair,
    random_biorthogonal_pair,
    spike,
)
from uncertframes.components.frames import analyze
from uncertframes.components.quasinorm import p_quasinorm
from uncertframes.components.uncertainty import (
    bound_holds,
    compare_bounds,
    discup_bound,
    slack_ratio,
    verify_discup,
    verify_fi,
    verify_mt,
    verify_rt_chain,
    verify_si,
    verify_uup,
)
from uncertframes.pipelines.verify_pipeline import flag_bound_violations
from uncertframes.schemas.frame_schema import CoherencePair, ReferenceNorm
from uncertframes.schemas.quasinorm_schema import SupportPolicy
from uncertframes.schemas.report_schema import TheoremId
from uncertframes.utils.exceptions import (
    ClassificationError,
    ExcludedInputError,
    InputError,
    RegimeError,
)

COMB = dirac_comb(4, 2)

# -------------------------
# Fixtures
# -------------------------

@pytest.fixture(scope="module")
def identity4():
    return identity_pair(4)


@pytest.fixture(scope="module")
def dft4():
    return dft_pair(4)


# -------------------------
# Bookkeeping helpers
# -------------------------

def test_slack_ratio_and_bound_holds():
    assert slack_ratio(4.0, 2.0) == 2.0
    assert slack_ratio(1.0, 0.0) == float("inf")
    assert bound_holds(2.0 - 1e-13, 2.0)
    assert not bound_holds(1.9, 2.0)


def test_discup_bound_formula():
    assert discup_bound(CoherencePair(c_f_omega=0.5, c_g_tau=0.5), 0.5) == pytest.approx(2.0)
    assert discup_bound(CoherencePair(c_f_omega=0.2, c_g_tau=0.5), 0.25) == pytest.approx(10 ** 0.25)


# -------------------------
# Saturation on the n = 4 comb
# -------------------------

def test_discup_on_comb(identity4, dft4):
    report = verify_discup(identity4, dft4, COMB, 0.5)
    assert report.theorem_id is TheoremId.DISCUP
    assert report.holds
    assert report.lhs == 4
    assert report.bound == pytest.approx(2.0, abs=1e-9)
    assert report.slack_ratio == pytest.approx(2.0, abs=1e-9)
    assert report.supports == (2, 2)
    assert report.pair_labels == ("identity:4", "dft:4")


def test_uup_on_comb_is_tight(identity4, dft4):
    report = verify_uup(identity4, dft4, COMB, 1)
    assert report.holds
    assert report.lhs == 4
    assert report.bound == pytest.approx(4.0)


def test_rt_chain_on_comb_is_all_equalities(identity4, dft4):
    report = verify_rt_chain(identity4, dft4, COMB)
    assert report.all_hold
    assert report.links == (True, True, True)
    assert (report.am, report.sq_mean, report.product) == (4.0, 4.0, 4.0)
    assert report.bound == pytest.approx(4.0)
    assert report.coherence == pytest.approx(0.5)


def test_proof_inequalities_on_spike(identity4, dft4):
    x = spike(4, 1)
    fi = verify_fi(identity4, dft4, x, 0.5)
    si = verify_si(identity4, dft4, x, 0.5)
    assert fi.holds and si.holds
    # theta_f x = e_1, theta_g x has four entries of modulus 1/2
    assert fi.lhs == pytest.approx(4 * 0.5 ** 0.5)
    assert fi.bound == pytest.approx(2 ** 0.5)
    assert si.supports == (1, 4)


# -------------------------
# Preconditions
# -------------------------

def test_zero_vector_is_excluded(identity4, dft4):
    with pytest.raises(ExcludedInputError):
        verify_discup(identity4, dft4, np.zeros(4), 0.5)


def test_wrong_length_vector(identity4, dft4):
    with pytest.raises(InputError):
        verify_discup(identity4, dft4, [1, 0, 1], 0.5)


@pytest.mark.parametrize("verifier", [verify_discup, verify_fi, verify_si])
@pytest.mark.parametrize("p", [1, 2, float("inf")])
def test_sub_one_verifiers_reject_p_at_least_one(identity4, dft4, verifier, p):
    with pytest.raises(RegimeError):
        verifier(identity4, dft4, COMB, p)


def test_uup_rejects_p_between(identity4, dft4):
    with pytest.raises(RegimeError):
        verify_uup(identity4, dft4, COMB, 0.5)
    with pytest.raises(RegimeError):
        verify_uup(identity4, dft4, COMB, 2)


def test_rt_chain_needs_parseval(identity4):
    with pytest.raises(ClassificationError):
        verify_rt_chain(identity4, random_biorthogonal_pair(4, seed=0), COMB)


def test_non_reconstructing_pair_is_refused(identity4):
    from uncertframes.components.frames import FramePair

    broken = FramePair(np.eye(4), 2 * np.eye(4), label="broken")
    with pytest.raises(ClassificationError):
        verify_discup(identity4, broken, COMB, 0.5)


# -------------------------
# Banach-space principles
# -------------------------

def test_mt_p2_on_comb(identity4, dft4):
    report = verify_mt(identity4, dft4, COMB, 2)
    assert report.holds
    assert [check.label for check in report.checks] == ["c_f_omega", "c_g_tau"]
    assert report.checks[0].lhs == pytest.approx(2.0)
    assert report.checks[0].bound == pytest.approx(2.0)


def test_mt_p1_and_inf_with_lp_reference():
    pair = identity_pair(3)
    one = verify_mt(pair, pair, spike(3, 0), 1, reference=ReferenceNorm.LP)
    inf = verify_mt(pair, pair, constant(3), float("inf"), reference=ReferenceNorm.LP)
    assert one.holds and inf.holds
    assert len(one.checks) == 2 and len(inf.checks) == 2


def test_mt_refuses_non_schauder_pair(identity4, dft4):
    # the DFT preserves l^2 but not l^1
    with pytest.raises(ClassificationError):
        verify_mt(identity4, dft4, COMB, 1, reference=ReferenceNorm.LP)


def test_mt_rejects_sub_one(identity4, dft4):
    with pytest.raises(RegimeError):
        verify_mt(identity4, dft4, COMB, 0.5)


# -------------------------
# Random pairs
# -------------------------

@seed(42)
@settings(max_examples=150, deadline=None)
@given(
    d=st.integers(1, 12),
    pair_seed=st.integers(0, 2**31),
    x_seed=st.integers(0, 2**31),
    p=st.sampled_from([0.25, 0.5, 0.75]),
)
def test_discup_and_proof_steps_hold_for_random_pairs(d, pair_seed, x_seed, p):
    f_pair = random_biorthogonal_pair(d, seed=pair_seed)
    g_pair = random_biorthogonal_pair(d, seed=pair_seed + 1)
    rng = np.random.default_rng(x_seed)
    x = rng.standard_normal(d) + 1j * rng.standard_normal(d)

    for verifier in (verify_discup, verify_fi, verify_si):
        assert verifier(f_pair, g_pair, x, p).holds


def test_exact_policy_still_satisfies_discup(identity4, dft4):
    report = verify_discup(identity4, dft4, COMB, 0.5, policy=SupportPolicy.exact())
    assert report.holds
    assert report.lhs >= 4


@pytest.mark.parametrize("p", [0.25, 0.5, 0.75])
def test_proof_steps_multiply_to_support_product(p):
    f_pair = random_biorthogonal_pair(5, seed=3)
    g_pair = random_biorthogonal_pair(5, seed=4)
    x = np.random.default_rng(5).standard_normal(5) + 0j

    fi = verify_fi(f_pair, g_pair, x, p)
    si = verify_si(f_pair, g_pair, x, p)
    norms = p_quasinorm(analyze(f_pair, x), p) * p_quasinorm(analyze(g_pair, x), p)
    discup = verify_discup(f_pair, g_pair, x, p)
    assert fi.lhs * si.lhs / norms == pytest.approx(discup.lhs, rel=1e-12)


@pytest.mark.parametrize("scale", [1e-7, 3.0, 1e7])
@pytest.mark.parametrize("verifier", [verify_discup, verify_fi, verify_si])
def test_reports_are_scale_invariant_under_exact_policy(verifier, scale):
    f_pair = random_biorthogonal_pair(6, seed=7)
    g_pair = dft_pair(6)
    x = np.random.default_rng(9).standard_normal(6) * 1j
    policy = SupportPolicy.exact()

    base = verifier(f_pair, g_pair, x, 0.5, policy=policy)
    scaled = verifier(f_pair, g_pair, scale * x, 0.5, policy=policy)
    assert scaled.supports == base.supports
    assert scaled.holds == base.holds


@seed(7)
@settings(max_examples=100, deadline=None)
@given(
    d=st.integers(1, 8),
    extra_f=st.integers(0, 16),
    extra_g=st.integers(0, 16),
    pair_seed=st.integers(0, 2**31),
    p=st.sampled_from([0.25, 0.5, 0.75]),
)
def test_discup_holds_for_overcomplete_pairs(d, extra_f, extra_g, pair_seed, p):
    f_pair = random_biorthogonal_pair(d, m=d + extra_f, seed=pair_seed)
    g_pair = random_biorthogonal_pair(d, m=d + extra_g, seed=pair_seed + 1)
    rng = np.random.default_rng(pair_seed)
    x = rng.standard_normal(d) + 1j * rng.standard_normal(d)

    for verifier in (verify_discup, verify_fi, verify_si):
        assert verifier(f_pair, g_pair, x, p).holds


# -------------------------
# Bound comparison
# -------------------------

@pytest.mark.parametrize("n", [4, 9])
def test_compare_bounds_ordering(n):
    grid = [0.1, 0.25, 0.5, 0.75, 0.9]
    table = compare_bounds(identity_pair(n), dft_pair(n), grid)

    assert list(table.columns) == ["p", "discup_bound", "uup_bound", "rt_bound", "below_uup"]
    np.testing.assert_allclose(table["discup_bound"], [n ** p for p in grid], rtol=1e-9)
    assert table["discup_bound"].is_monotonic_increasing
    assert table["below_uup"].all()
    np.testing.assert_allclose(table["uup_bound"], n, rtol=1e-9)


@pytest.mark.parametrize("n", [4, 9])
def test_compare_bounds_meets_uup_as_p_tends_to_one(n):
    table = compare_bounds(identity_pair(n), dft_pair(n), [1 - 1e-12])
    assert table["discup_bound"].iloc[0] == pytest.approx(table["uup_bound"].iloc[0], abs=1e-9)


def test_compare_bounds_needs_grid():
    with pytest.raises(InputError):
        compare_bounds(identity_pair(2), dft_pair(2), [])


def test_bound_flags_accept_the_identity_dft_table():
    table = flag_bound_violations(compare_bounds(identity_pair(4), dft_pair(4), [0.75, 0.25, 0.5]))
    assert list(table["p"]) == [0.25, 0.5, 0.75]
    assert not table["violation"].any()


def test_bound_flags_catch_non_increasing_rows():
    table = pd.DataFrame({
        "p": [0.25, 0.5, 0.75],
        "discup_bound": [1.5, 1.4, 1.8],
        "uup_bound": [2.0, 2.0, 2.0],
        "rt_bound": [2.0, 2.0, 2.0],
        "below_uup": [True, True, True],
    })
    assert list(flag_bound_violations(table)["violation"]) == [False, True, False]


def test_bound_flags_ignore_unit_coherence():
    table = pd.DataFrame({
        "p": [0.25, 0.5],
        "discup_bound": [1.0, 1.0],
        "uup_bound": [1.0, 1.0],
        "rt_bound": [1.0, 1.0],
        "below_uup": [False, False],
    })
    assert not flag_bound_violations(table)["violation"].any()
