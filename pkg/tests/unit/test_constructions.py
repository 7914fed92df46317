import numpy as np
import pytest
from sympy import divisors

from uncertframes.components.constructions import (
    check_disc_norm_axioms,
    constant,
    dft_pair,
    dirac_comb,
    identity_pair,
    random_biorthogonal_pair,
    spike,
)
from uncertframes.components.frames import analyze, verify_reconstruction
from uncertframes.components.quasinorm import support_count
from uncertframes.utils.exceptions import GenerationError, InputError, RegimeError


def test_identity_pair():
    pair = identity_pair(3)
    assert pair.label == "identity:3"
    np.testing.assert_array_equal(pair.analysis, np.eye(3))


def test_dft_pair_is_unitary():
    pair = dft_pair(4)
    assert pair.label == "dft:4"
    np.testing.assert_allclose(np.abs(pair.analysis), 0.5)
    np.testing.assert_allclose(pair.synthesis @ pair.analysis, np.eye(4), atol=1e-12)


def test_random_pair_is_deterministic():
    first = random_biorthogonal_pair(5, seed=7)
    second = random_biorthogonal_pair(5, seed=7)
    np.testing.assert_array_equal(first.analysis, second.analysis)
    np.testing.assert_array_equal(first.synthesis, second.synthesis)
    assert first.label == "random:5:7"
    assert not np.array_equal(first.analysis, random_biorthogonal_pair(5, seed=8).analysis)


def test_random_overcomplete_pair_uses_left_inverse():
    pair = random_biorthogonal_pair(4, m=6, seed=2)
    assert pair.label == "random:4:2:6"
    assert pair.analysis.shape == (6, 4)
    assert pair.synthesis.shape == (4, 6)
    assert verify_reconstruction(pair).holds


def test_random_pair_gives_up_under_impossible_cap():
    with pytest.raises(GenerationError):
        random_biorthogonal_pair(3, seed=0, cond_cap=1.0 + 1e-12, max_retries=3)


def test_random_pair_rejects_m_below_d():
    with pytest.raises(InputError):
        random_biorthogonal_pair(4, m=3)


# -------------------------
# Vectors
# -------------------------

def test_dirac_combs():
    np.testing.assert_array_equal(dirac_comb(4, 2), [1, 0, 1, 0])
    np.testing.assert_array_equal(dirac_comb(6, 3, 1), [0, 1, 0, 0, 1, 0])
    np.testing.assert_array_equal(spike(5, 2), [0, 0, 1, 0, 0])
    np.testing.assert_array_equal(constant(3), [1, 1, 1])


@pytest.mark.parametrize("n, spacing, offset", [(6, 4, 0), (4, 2, 2), (4, 0, 0), (0, 1, 0)])
def test_dirac_comb_rejects_bad_arguments(n, spacing, offset):
    with pytest.raises(InputError):
        dirac_comb(n, spacing, offset)


# -------------------------
# Disc-norm axioms
# -------------------------

@pytest.mark.parametrize("p", [0.1, 0.5, 0.9])
def test_disc_norm_axioms_hold(p):
    report = check_disc_norm_axioms(p, 4, sample_count=2000, seed=1)
    assert report.all_passed
    assert report.failures == 0
    assert set(report.axiom_results) == {"definiteness", "triangle", "upper_scaling", "lower_scaling"}
    assert report.axiom_results["definiteness"].checked == 2000
    # unimodular lambdas fall in both scaling checks
    scaling = report.axiom_results["upper_scaling"].checked + report.axiom_results["lower_scaling"].checked
    assert scaling > 2000


def test_disc_norm_axioms_are_reproducible():
    first = check_disc_norm_axioms(0.3, 3, sample_count=500, seed=5)
    second = check_disc_norm_axioms(0.3, 3, sample_count=500, seed=5)
    assert first == second


def test_disc_norm_axioms_need_sub_one_exponent():
    with pytest.raises(RegimeError):
        check_disc_norm_axioms(1.0, 3, sample_count=10)


@pytest.mark.parametrize("n", range(2, 17))
def test_dft_of_comb_is_comb_with_dual_spacing(n):
    for spacing in divisors(n):
        spectrum = analyze(dft_pair(n), dirac_comb(n, spacing))
        assert support_count(spectrum) == spacing
