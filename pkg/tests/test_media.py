import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctaffect.errors import NonBinary, NotMeasurable, NotPreparable, PreconditionFailed
from ctaffect.media import (
    ClassicalMedium,
    ClassicalState,
    CoherentMedium,
    CoherentState,
    PartitionOfUnity,
    check_decision_conditions,
    counting_task,
    detect_superinformation,
    is_generalized_mixture,
    is_information_observable,
    is_information_variable,
    make_rng,
    partition_of_theta,
    r4_candidate_state,
    theta_of_partition,
)
from ctaffect.task_algebra import A_MINUS, A_PLUS, A_VAR, X0, X1, X_VAR, Attribute, Variable, union_attribute

SQ = 1 / math.sqrt(2)


# -- states and partitions ----------------------------------------------------

def test_classical_state_validation():
    with pytest.raises(ValueError):
        ClassicalState({"x0": 0.5, "x1": 0.4})
    with pytest.raises(ValueError):
        ClassicalState({"x0": 1.2, "x1": -0.2})
    assert ClassicalState.point("x0").is_sharp
    assert not ClassicalState.uniform(["x0", "x1"]).is_sharp


def test_coherent_state_validation():
    with pytest.raises(ValueError):
        CoherentState(np.array([1.0, 1.0]))
    with pytest.raises(ValueError):
        CoherentState.normalized([1, 0, 0])
    s = CoherentState.normalized([1, 1j])
    assert s.dim == 2
    assert s.same_ray(CoherentState(np.array([1j, -1]) * SQ))


def test_partition_validation():
    with pytest.raises(ValueError):
        PartitionOfUnity.of(X_VAR, [0.6, 0.6])
    p = PartitionOfUnity.of(X_VAR, [0.25, 0.75])
    assert p[X1] == 0.75 and p["x0"] == 0.25 and p[1] == 0.75
    assert not p.is_sharp


# -- coherent medium ----------------------------------------------------------

def test_qubit_vectors(qubit):
    assert np.allclose(qubit.prepare(A_PLUS).amplitudes, [SQ, SQ])
    assert np.allclose(qubit.prepare(A_MINUS).amplitudes, [SQ, -SQ])


def test_qubit_overlaps(qubit):
    assert qubit.overlap(X0, A_PLUS) == pytest.approx(0.5, abs=1e-12)
    assert qubit.overlap(X0, X1) == pytest.approx(0.0, abs=1e-12)
    assert qubit.distinguishable(A_PLUS, A_MINUS)
    assert not qubit.distinguishable(X0, A_MINUS)


def test_qubit_partitions(qubit):
    p = qubit.exact_partition(qubit.prepare(A_PLUS), X_VAR)
    assert p.values == pytest.approx((0.5, 0.5), abs=1e-12)
    assert qubit.exact_partition(qubit.prepare(X1), X_VAR).is_sharp


def test_qubit_rejects_unmeasurable_variable(qubit):
    mixed = Variable("M", (X0, A_PLUS))
    assert not qubit.is_measurable(mixed)
    with pytest.raises(NotMeasurable):
        qubit.exact_partition(qubit.prepare(X0), mixed)


def test_qubit_prepare_rejects_composite(qubit):
    with pytest.raises(NotPreparable):
        qubit.prepare(union_attribute(X_VAR))


def test_information_observables(qubit, classical):
    for m in (qubit, classical):
        for v in m.variables.values():
            assert is_information_variable(m, v)
            assert is_information_observable(m, v)


def test_mixed_pair_not_clonable_on_qubit(qubit):
    assert not qubit.clone_allowed(Variable("P", (X0, A_MINUS)))


def test_superinformation_decider(qubit, classical):
    res = detect_superinformation(qubit, X_VAR, A_VAR)
    assert res
    assert len(res.failing_pairs) == 4
    for _, _, o in res.failing_pairs:
        assert o == pytest.approx(0.5, abs=1e-9)
    x, a = classical.variables["X"], classical.variables["A"]
    res = detect_superinformation(classical, x, a)
    assert not res and res.evidence is None


def test_superinformation_preconditions(qubit):
    with pytest.raises(PreconditionFailed):
        detect_superinformation(qubit, X_VAR, X_VAR)
    with pytest.raises(PreconditionFailed):
        detect_superinformation(qubit, X_VAR, Variable("P", (X0, A_MINUS)))


def test_parity_pair_is_information(classical):
    # X and the parity of (x, a) share no attribute yet are jointly sharp
    x = classical.variables["X"]
    even = Attribute("even", frozenset({("x0", "a+"), ("x1", "a-")}))
    odd = Attribute("odd", frozenset({("x0", "a-"), ("x1", "a+")}))
    parity = Variable("P", (even, odd))
    m = ClassicalMedium(classical.labels, [x, parity])
    assert not detect_superinformation(m, x, parity)


def test_decision_conditions(qubit, classical):
    rep = check_decision_conditions(qubit, X_VAR, A_VAR)
    assert rep.r1 and rep.r2 and rep.r3 and rep.all_hold
    crep = check_decision_conditions(classical, classical.variables["X"], classical.variables["A"])
    assert not crep.r1 and not crep.r3


def test_generalized_mixture(qubit):
    assert is_generalized_mixture(qubit, A_PLUS, X_VAR)
    assert not is_generalized_mixture(qubit, X0, X_VAR)


def test_r4_hook_not_certified():
    psi, checks = r4_candidate_state()
    assert checks["invariant_under_X_swap"] and checks["invariant_under_A_swap"]
    assert checks["certified"] is False


def test_swap_unitary(qubit):
    u = qubit.swap_unitary(X0, X1)
    assert np.allclose(u, [[0, 1], [1, 0]])
    act = qubit.swap_action(A_PLUS, A_MINUS)
    assert qubit.contains(act(qubit.prepare(A_PLUS)), A_MINUS)


def test_non_perturbing_repeat(qubit, classical):
    rng = make_rng(5)
    for m in (qubit, classical):
        v = list(m.variables.values())[0]
        s = m.random_state(rng)
        for _ in range(20):
            out, post = m.measure(s, v, rng)
            again, _ = m.measure(post, v, rng)
            assert again == out


def test_basis_angle_changes_overlap():
    m = CoherentMedium.qubit(basis_angle=math.pi / 3)
    assert m.overlap(X0, A_PLUS) == pytest.approx(math.cos(math.pi / 6) ** 2, abs=1e-12)


# -- classical medium ---------------------------------------------------------

def test_classical_condition_is_bayes(classical):
    x, a = classical.variables["X"], classical.variables["A"]
    s = ClassicalState({("x0", "a+"): 0.2, ("x0", "a-"): 0.1, ("x1", "a+"): 0.3, ("x1", "a-"): 0.4})
    post = classical.condition(s, a[0])
    assert classical.exact_partition(post, x).values == pytest.approx((0.4, 0.6))


def test_classical_swap_action(bit):
    s = ClassicalState({"x0": 0.3, "x1": 0.7})
    out = bit.swap_action(X0, X1)(s)
    assert out.weights["x0"] == pytest.approx(0.7)


# -- counting task and theta --------------------------------------------------

def test_counting_exact(qubit):
    p = counting_task(qubit, qubit.theta_state(1.0), X_VAR, None)
    assert p.values == pytest.approx((math.cos(0.5) ** 2, math.sin(0.5) ** 2), abs=1e-12)


def test_counting_seeded_and_matches_per_instance(qubit):
    s = qubit.theta_state(2.0)
    a = counting_task(qubit, s, X_VAR, 2000, seed=11)
    b = counting_task(qubit, s, X_VAR, 2000, seed=11, per_instance=True)
    assert a.values == b.values
    assert counting_task(qubit, s, X_VAR, 2000, seed=12).values != a.values


def test_counting_rejects_bad_n(qubit):
    with pytest.raises(ValueError):
        counting_task(qubit, qubit.prepare(X0), X_VAR, 0)


def test_theta_roundtrip_and_nonbinary():
    for t in np.linspace(0, math.pi, 17):
        assert theta_of_partition(partition_of_theta(t)) == pytest.approx(t, abs=1e-7)
    tern = Variable("T", tuple(Attribute.single(f"t{i}") for i in range(3)))
    with pytest.raises(NonBinary):
        partition_of_theta(0.3, tern)


def test_theta_and_theta_plus_pi_share_partition():
    # partition depends on theta modulo 2 pi only through cos^2(theta/2)
    assert partition_of_theta(0.7).close_to(partition_of_theta(0.7 + 2 * math.pi))
    assert partition_of_theta(0.7).close_to(partition_of_theta(-0.7))


@settings(max_examples=100, deadline=None)
@given(theta=st.floats(0, 2 * math.pi), seed=st.integers(0, 2**32))
def test_partition_is_distribution(theta, seed):
    q = CoherentMedium.qubit()
    s = q.theta_state(theta)
    for v in (X_VAR, A_VAR):
        p = q.exact_partition(s, v)
        assert all(0 <= f <= 1 for f in p.values)
        assert math.fsum(p.values) == pytest.approx(1.0, abs=1e-9)
    est = counting_task(q, s, X_VAR, 500, seed=seed)
    assert math.fsum(est.values) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_random_states_valid(seed):
    rng = make_rng(seed)
    q = CoherentMedium.qubit()
    c = ClassicalMedium.product(X_VAR, A_VAR)
    sq = q.random_state(rng)
    assert np.linalg.norm(sq.amplitudes) == pytest.approx(1.0, abs=1e-12)
    sc = c.random_state(rng)
    assert math.fsum(sc.weights.values()) == pytest.approx(1.0, abs=1e-12)
