import math

import numpy as np
import pytest
from hypothesis import given, seed, settings, strategies as st
from hypothesis.extra.numpy import arrays
from pydantic import ValidationError

from uncertframes.components.quasinorm import (
    as_coeff_seq,
    continuous_garling_counterexample,
    garling_check,
    p_quasinorm,
    p_subadditivity_check,
    support,
    support_count,
)
from uncertframes.schemas.quasinorm_schema import PExponent, Regime, SupportPolicy
from uncertframes.utils.exceptions import InputError, RegimeError

GARLING_EXPONENTS = [0.1, 0.3, 0.5, 0.7, 0.9]

# -------------------------
# Strategies
# -------------------------

moderate_complex = st.complex_numbers(
    min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False
)
any_complex = st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False)


def complex_vectors(elements, min_size=1, max_size=64):
    return st.integers(min_size, max_size).flatmap(
        lambda n: arrays(np.complex128, n, elements=elements)
    )


# -------------------------
# Exponents and policies
# -------------------------

@pytest.mark.parametrize(
    "p, regime",
    [(0.5, Regime.SUB_ONE), (1, Regime.ONE), (2.5, Regime.SUPER_ONE), ("inf", Regime.INFINITY)],
)
def test_exponent_regime(p, regime):
    assert PExponent.of(p).regime is regime


@pytest.mark.parametrize("bad", [0, -1.0, float("nan")])
def test_exponent_rejects_non_positive(bad):
    with pytest.raises(ValidationError):
        PExponent.of(bad)


def test_conjugate_index():
    assert PExponent.of(2).conjugate() == pytest.approx(2.0)
    assert PExponent.of(4).conjugate() == pytest.approx(4.0 / 3.0)
    assert math.isinf(PExponent.of(1).conjugate())
    assert PExponent.of(math.inf).conjugate() == 1.0
    with pytest.raises(RegimeError):
        PExponent.of(0.5).conjugate()


def test_support_policy_threshold():
    policy = SupportPolicy.default()
    assert policy.threshold(1.0) == pytest.approx(1e-10)
    assert policy.threshold(0.0) == pytest.approx(1e-14)
    assert SupportPolicy.exact().threshold(5.0) == 0.0


# -------------------------
# Quasi-norm and support
# -------------------------

def test_p_quasinorm_values():
    assert p_quasinorm([1, -1], 0.5) == pytest.approx(2.0)
    assert p_quasinorm([4, 0, 9], 0.5) == pytest.approx(5.0)
    assert p_quasinorm([3, 4j], 1) == pytest.approx(7.0)
    assert p_quasinorm([3, 4], 2) == pytest.approx(5.0)
    assert p_quasinorm([3, -4], math.inf) == pytest.approx(4.0)
    assert p_quasinorm([0, 0, 0], 0.3) == 0.0


def test_p_quasinorm_large_exponent_does_not_overflow():
    assert p_quasinorm([1e200, 1e200], 3) == pytest.approx(1e200 * 2 ** (1 / 3))


def test_support_uses_policy():
    a = [1.0, 1e-20, 0.0, -0.5]
    assert support_count(a) == 2
    assert support(a) == (0, 3)
    assert support_count(a, SupportPolicy.exact()) == 3
    assert support_count([0.0, 0.0]) == 0


@pytest.mark.parametrize("bad", [[], [1.0, float("nan")], [[1.0, 2.0]], [math.inf]])
def test_as_coeff_seq_rejects_malformed(bad):
    with pytest.raises(InputError):
        as_coeff_seq(bad)


@seed(11)
@settings(max_examples=150, deadline=None)
@given(
    a=complex_vectors(st.one_of(st.just(0j), moderate_complex)),
    scale=st.sampled_from([1e-7, 1e-3, 2.5, 1e7]),
    policy=st.sampled_from([SupportPolicy.default(), SupportPolicy.exact()]),
)
def test_support_count_is_scale_invariant(a, scale, policy):
    assert support_count(scale * a, policy) == support_count(a, policy)


# -------------------------
# Garling inequality
# -------------------------

def test_garling_strict_for_two_entries():
    result = garling_check([1.0, 1.0], 0.5)
    assert result.holds
    assert not result.equality
    assert result.lhs == pytest.approx(math.sqrt(2.0))
    assert result.rhs == pytest.approx(2.0)


def test_garling_equality_for_single_entry():
    result = garling_check([3 + 4j], 0.3)
    assert result.holds
    assert result.equality
    assert result.length == 1


def test_garling_equality_needs_a_single_exact_nonzero():
    # both sides round to 1.0 but two entries are nonzero
    result = garling_check([1.0, 1e-20], 0.9)
    assert result.lhs == result.rhs
    assert result.holds
    assert not result.equality


@pytest.mark.parametrize("p", [1, 2, math.inf])
def test_garling_rejects_p_at_least_one(p):
    with pytest.raises(RegimeError):
        garling_check([1.0, 2.0], p)


@seed(20240611)
@settings(max_examples=300, deadline=None)
@given(a=complex_vectors(any_complex), p=st.sampled_from(GARLING_EXPONENTS))
def test_garling_holds_for_any_sequence(a, p):
    assert garling_check(a, p).holds


@seed(7)
@settings(max_examples=200, deadline=None)
@given(a=complex_vectors(moderate_complex, min_size=2), p=st.sampled_from(GARLING_EXPONENTS))
def test_garling_equality_never_with_two_nonzeros(a, p):
    assert not garling_check(a, p).equality


@seed(11)
@settings(max_examples=100, deadline=None)
@given(
    value=moderate_complex,
    n=st.integers(1, 32),
    index=st.integers(0, 31),
    p=st.sampled_from(GARLING_EXPONENTS),
)
def test_garling_equality_for_every_single_nonzero(value, n, index, p):
    a = np.zeros(n, dtype=complex)
    a[index % n] = value
    assert garling_check(a, p).equality


# -------------------------
# Continuous counterexample and subadditivity
# -------------------------

def test_continuous_counterexample_at_half():
    witness = continuous_garling_counterexample(0.5)
    assert witness.lhs == pytest.approx(0.7071067811865476, rel=1e-15)
    assert witness.rhs == pytest.approx(0.5)
    assert witness.is_witness


@pytest.mark.parametrize("measure", [0.0, 1.0, 1.5, -0.2])
def test_continuous_counterexample_rejects_measure(measure):
    with pytest.raises(InputError):
        continuous_garling_counterexample(0.5, measure=measure)


def test_continuous_counterexample_rejects_p_one():
    with pytest.raises(RegimeError):
        continuous_garling_counterexample(1.0)


@seed(3)
@settings(max_examples=200, deadline=None)
@given(
    pair=st.integers(1, 16).flatmap(
        lambda n: st.tuples(arrays(np.complex128, n, elements=any_complex), arrays(np.complex128, n, elements=any_complex))
    ),
    p=st.sampled_from([0.2, 0.5, 0.8, 1.0]),
)
def test_p_subadditivity(pair, p):
    a, b = pair
    assert p_subadditivity_check(a, b, p).holds


def test_p_subadditivity_rejects_length_mismatch():
    with pytest.raises(InputError):
        p_subadditivity_check([1, 2], [1, 2, 3], 0.5)
