import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowdin_rt import (
    CoherentState,
    build,
    distill_coherence_prob,
    forward,
    golden_plus,
    majorizes,
    make_coherent,
    make_superposition,
    max_coherence_transform_prob,
    maximally_coherent,
    superposition_distill,
    superposition_transform,
    uniform_g,
    uniform_gram,
)
from lowdin_rt.errors import GramMismatch, NotUniformOverlap, OverlapOutOfGoldenRange
from lowdin_rt.gram import random_gram
from lowdin_rt.sampling import random_coherent, random_probs, random_superposition
from lowdin_rt.states import equal_up_to_phase, sorted_probs
from lowdin_rt.transform import pmax_batch


def brute_force_pmax(p, q):
    """Enumerate every tail index and sum each tail from scratch."""
    d = len(p)
    best = 1.0
    for j in range(1, d):
        ts = 0.0
        tt = 0.0
        for i in range(d - 1, j - 1, -1):
            ts += p[i]
            tt += q[i]
        if tt > 0 and ts / tt < best:
            best = ts / tt
    return best


def partial_sum_majorized(p, q, tol=1e-12):
    """Classical criterion: every top-k partial sum of p is at most that of q."""
    return all(np.sum(p[:k]) <= np.sum(q[:k]) + tol for k in range(1, len(p) + 1))


def coh(probs):
    return make_coherent(np.sqrt(np.asarray(probs, dtype=float)))


def test_majorizes_examples():
    p = np.array([0.766469, 0.233531])
    q = np.array([0.809295, 0.190705])
    assert majorizes(p, p)
    assert majorizes(p, q)
    assert not majorizes(q, p)
    uniform = np.full(4, 0.25)
    for q4 in random_probs(4, np.random.default_rng(1), n=20):
        assert majorizes(uniform, q4)


def test_majorizes_zero_pads():
    assert majorizes([0.5, 0.5], [1.0])
    assert not majorizes([1.0], [0.5, 0.5])


def test_pmax_deterministic_example():
    rep = max_coherence_transform_prob(coh([0.766469, 0.233531]), coh([0.809295, 0.190705]))
    assert rep.probability == 1.0 and rep.deterministic and rep.binding_index == 0


def test_pmax_qubit_example():
    rep = max_coherence_transform_prob(coh([0.9, 0.1]), coh([0.5, 0.5]))
    assert rep.probability == pytest.approx(0.2, abs=1e-14)
    assert not rep.deterministic
    assert rep.binding_index == 1
    assert rep.probability == pytest.approx(brute_force_pmax([0.9, 0.1], [0.5, 0.5]), abs=1e-15)


def test_pmax_sorts_internally():
    a = max_coherence_transform_prob(coh([0.1, 0.9]), coh([0.5, 0.5]))
    assert a.probability == pytest.approx(0.2, abs=1e-14)


def test_pmax_zero_target_tail_is_non_binding():
    rep = max_coherence_transform_prob(coh([0.6, 0.3, 0.1]), coh([0.7, 0.3, 0.0]))
    assert rep.probability == 1.0
    rep = max_coherence_transform_prob(coh([1.0, 0.0, 0.0]), coh([0.5, 0.5, 0.0]))
    assert rep.probability == 0.0 and rep.binding_index == 1


def test_pmax_qubit_formula_consistency(rng):
    for _ in range(200):
        p = random_probs(2, rng)
        q = random_probs(2, rng)
        rep = max_coherence_transform_prob(coh(p), coh(q))
        assert abs(rep.probability - min(1.0, p[1] / q[1])) <= 1e-14


@pytest.mark.parametrize("d", [2, 3, 5, 8])
def test_pmax_random_vs_oracles(d, rng):
    for _ in range(200):
        p = random_probs(d, rng)
        q = random_probs(d, rng)
        rep = max_coherence_transform_prob(coh(p), coh(q))
        sp, sq = sorted_probs(rep.source_bar), sorted_probs(rep.target_bar)
        assert rep.probability == brute_force_pmax(sp, sq)
        assert rep.deterministic == (rep.probability == 1.0)
        assert rep.deterministic == partial_sum_majorized(sp, sq)
        assert 0.0 <= rep.probability <= 1.0


def test_monotone_in_target_tail(rng):
    # shifting target weight from its smallest to its largest entry shrinks every
    # target tail, so the optimal probability cannot go down
    for _ in range(200):
        d = rng.integers(2, 7)
        p = random_probs(d, rng)
        q = random_probs(d, rng)
        shift = q[-1] * rng.uniform(0, 1)
        q2 = q.copy()
        q2[0] += shift
        q2[-1] -= shift
        a = max_coherence_transform_prob(coh(p), coh(q)).probability
        b = max_coherence_transform_prob(coh(p), coh(q2)).probability
        assert b >= a - 1e-12


def test_pmax_batch_matches_single(rng):
    src_states = [random_coherent(4, rng) for _ in range(50)]
    tgt_states = [random_coherent(4, rng) for _ in range(50)]
    src = np.array([sorted_probs(x) for x in src_states])
    tgt = np.array([sorted_probs(x) for x in tgt_states])
    prob, binding, ok = pmax_batch(src, tgt)
    for i in range(50):
        rep = max_coherence_transform_prob(src_states[i], tgt_states[i])
        assert prob[i] == rep.probability and binding[i] == rep.binding_index and ok[i] == rep.deterministic


def test_superposition_transform_worked_example(g_half):
    lmap = build(g_half)
    psi = make_superposition([3, 1], g_half)
    phi = make_superposition([4, 1], g_half)
    rep = superposition_transform(lmap, psi, phi)
    assert rep.probability == 1.0 and rep.deterministic
    assert equal_up_to_phase(rep.final_state.coefficients, phi.coefficients)


def test_superposition_transform_identity(rng):
    g = random_gram(4, rng)
    psi = random_superposition(g, rng)
    rep = superposition_transform(build(g), psi, psi)
    assert rep.probability == 1.0 and rep.binding_index == 0


def test_golden_source_reaches_anything(rng):
    g = uniform_gram(2, -0.3)
    lmap = build(g)
    src = golden_plus(2, -0.3)
    for _ in range(20):
        tgt = random_superposition(g, rng)
        assert superposition_transform(lmap, src, tgt).probability == 1.0


def test_pipeline_equivalence(rng):
    for d in (2, 3, 5):
        for s in (-0.2, 0.3):
            s = max(s, 1 / (1 - d) + 0.05)
            g = uniform_gram(d, s)
            lmap = build(g)
            for _ in range(20):
                psi = random_superposition(g, rng)
                phi = random_superposition(g, rng)
                rep = superposition_transform(lmap, psi, phi)
                direct = max_coherence_transform_prob(forward(lmap, psi), forward(lmap, phi))
                assert rep.probability == direct.probability
                assert equal_up_to_phase(rep.final_state.coefficients, phi.coefficients)


def test_transform_gram_mismatch(g_half):
    psi = make_superposition([1, 1], g_half)
    phi = make_superposition([1, 1], uniform_gram(2, 0.2))
    with pytest.raises(GramMismatch):
        superposition_transform(build(g_half), psi, phi)


@pytest.mark.parametrize("d", [2, 3, 7])
def test_distill_max_coherent(d):
    assert distill_coherence_prob(maximally_coherent(d)) == 1.0


def test_distill_examples():
    assert distill_coherence_prob(CoherentState(np.array([1.0, 0.0, 0.0]))) == 0.0
    assert distill_coherence_prob(coh([0.766469, 0.233531])) == pytest.approx(0.467062, abs=1e-4)


def test_superposition_distill():
    g = uniform_gram(3, -0.2)
    lmap = build(g)
    rep = superposition_distill(lmap, golden_plus(3, -0.2))
    assert rep.probability == 1.0
    assert equal_up_to_phase(rep.final_state.coefficients, golden_plus(3, -0.2).coefficients)
    g0 = uniform_gram(2, 0.0)
    rep = superposition_distill(build(g0), make_superposition([np.sqrt(0.9), np.sqrt(0.1)], g0))
    assert rep.probability == pytest.approx(0.2, abs=1e-14)


def test_superposition_distill_vs_closed_form(rng):
    g = uniform_gram(3, -0.2)
    lmap = build(g)
    for _ in range(20):
        psi = random_superposition(g, rng)
        expected = 3 * np.min(np.abs(uniform_g(psi, 3, -0.2).coefficients) ** 2)
        assert abs(superposition_distill(lmap, psi).probability - expected) <= 1e-12


def test_superposition_distill_range(rng):
    g = uniform_gram(3, 0.2)
    with pytest.raises(OverlapOutOfGoldenRange):
        superposition_distill(build(g), make_superposition([1, 2, 3], g))
    g = random_gram(3, rng)
    with pytest.raises(NotUniformOverlap):
        superposition_distill(build(g), make_superposition([1, 2, 3], g))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(0.01, 1.0), min_size=2, max_size=6), st.integers(0, 2**31))
def test_majorized_implies_unit_probability(weights, seed):
    p = np.sort(np.array(weights) / np.sum(weights))[::-1]
    rng = np.random.default_rng(seed)
    q = random_probs(len(p), rng)
    rep = max_coherence_transform_prob(coh(p), coh(q))
    if partial_sum_majorized(p, q, tol=0.0):
        assert rep.probability == 1.0
    if rep.probability < 1.0:
        assert not majorizes(p, q)
