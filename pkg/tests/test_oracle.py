"""Marking/phase oracle semantics, netlist emission, and replay."""

import numpy as np
import pytest

from svmem.boolfn import BoolFn, evaluate, from_minterms, needle, parse
from svmem.errors import ShapeError
from svmem.oracle import apply_marking, apply_phase, emit_circuit, replay_circuit
from svmem.statevec import StateVector, encode, kron, norm_squared


def _marking_bruteforce(f, psi):
    """Independent oracle: move each amplitude by the |x, q XOR f(x)| rule."""
    out = np.zeros_like(psi.amps)
    for j, amp in enumerate(psi.amps):
        x, q = j >> 1, j & 1
        out[(x << 1) | (q ^ evaluate(f, x))] += amp
    return out


def _random_fn(rng, n):
    return BoolFn(n, rng.integers(0, 2, size=1 << n))


def _random_state(rng, n):
    return StateVector(n, rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n))


def _basis(n, j):
    amps = np.zeros(1 << n, dtype=complex)
    amps[j] = 1.0
    return StateVector(n, amps)


# --- marking oracle -----------------------------------------------------------

def test_marking_flips_aux_on_hit():
    out = apply_marking(needle(0, 1), _basis(2, 0))
    np.testing.assert_array_equal(out.amps, [0, 1, 0, 0])


def test_marking_constant_false_is_identity():
    rng = np.random.default_rng(0)
    psi = _random_state(rng, 3)
    out = apply_marking(from_minterms(set(), 2), psi)
    np.testing.assert_array_equal(out.amps, psi.amps)


def test_marking_recognition_of_stored_word(zzb_state):
    f = parse("a'b'", ["a", "b", "c"])
    total = kron(zzb_state, _basis(1, 0))
    out = apply_marking(f, total)
    expected = np.zeros(16, dtype=complex)
    expected[1] = expected[3] = 1.0  # both stored states get their aux bit set
    np.testing.assert_array_equal(out.amps, expected)
    np.testing.assert_array_equal(out.amps, _marking_bruteforce(f, total))


def test_marking_matches_bruteforce_on_random_states():
    rng = np.random.default_rng(21)
    for n in range(1, 6):
        for _ in range(5):
            f = _random_fn(rng, n)
            psi = _random_state(rng, n + 1)
            np.testing.assert_array_equal(
                apply_marking(f, psi).amps, _marking_bruteforce(f, psi)
            )


def test_marking_shape_error(zzb_state):
    with pytest.raises(ShapeError):
        apply_marking(needle(0, 3), zzb_state)


def test_marking_is_self_inverse_permutation():
    # exhaustive over all basis states for n up to 6
    rng = np.random.default_rng(3)
    for n in range(1, 7):
        fns = [needle(0, n), from_minterms(set(), n), from_minterms(range(1 << n), n)]
        fns += [_random_fn(rng, n) for _ in range(5)]
        for f in fns:
            image = set()
            for j in range(1 << (n + 1)):
                once = apply_marking(f, _basis(n + 1, j))
                hits = np.flatnonzero(once.amps)
                assert len(hits) == 1 and once.amps[hits[0]] == 1.0
                image.add(int(hits[0]))
                twice = apply_marking(f, once)
                np.testing.assert_array_equal(twice.amps, _basis(n + 1, j).amps)
            assert image == set(range(1 << (n + 1)))  # bijection


def test_marking_preserves_magnitudes():
    rng = np.random.default_rng(4)
    f = _random_fn(rng, 4)
    psi = _random_state(rng, 5)
    out = apply_marking(f, psi)
    np.testing.assert_array_equal(
        np.sort(np.abs(out.amps)), np.sort(np.abs(psi.amps))
    )
    assert norm_squared(out) == pytest.approx(norm_squared(psi), abs=1e-12)


# --- phase oracle ----------------------------------------------------------------

def test_phase_sign_flip():
    out = apply_phase(needle(1, 1), StateVector(1, np.array([1.0, 1.0], complex)))
    np.testing.assert_array_equal(out.amps, [1, -1])


def test_phase_constant_false_is_identity():
    rng = np.random.default_rng(1)
    psi = _random_state(rng, 3)
    out = apply_phase(from_minterms(set(), 3), psi)
    np.testing.assert_array_equal(out.amps, psi.amps)


def test_phase_is_involution():
    rng = np.random.default_rng(2)
    f = _random_fn(rng, 4)
    psi = _random_state(rng, 4)
    np.testing.assert_array_equal(apply_phase(f, apply_phase(f, psi)).amps, psi.amps)


def test_phase_shape_error(zzb_state):
    with pytest.raises(ShapeError):
        apply_phase(needle(0, 2), zzb_state)


def test_phase_equals_marking_with_minus_aux():
    # preparing the auxiliary in (1 -1)/sqrt(2) turns marking into phase kickback
    rng = np.random.default_rng(17)
    minus = StateVector(1, np.array([1.0, -1.0]) / np.sqrt(2.0))
    for n in range(1, 6):
        for _ in range(5):
            f = _random_fn(rng, n)
            psi = _random_state(rng, n)
            via_marking = apply_marking(f, kron(psi, minus))
            via_phase = kron(apply_phase(f, psi), minus)
            np.testing.assert_allclose(
                via_marking.amps, via_phase.amps, rtol=0, atol=1e-12
            )


# --- netlist emission and replay ----------------------------------------------------

def test_emit_single_minterm():
    assert emit_circuit(needle(0, 2)) == (
        "qubits 3\nmcx controls=(0,-),(1,-) target=aux\n"
    )


def test_emit_constant_false_is_header_only():
    assert emit_circuit(from_minterms(set(), 2)) == "qubits 3\n"


def test_emit_primed_conjunction():
    assert emit_circuit(parse("a'b'", ["a", "b", "c"])) == (
        "qubits 4\n"
        "mcx controls=(0,-),(1,-),(2,-) target=aux\n"
        "mcx controls=(0,-),(1,-),(2,+) target=aux\n"
    )


def test_emit_minterms_ascend():
    text = emit_circuit(from_minterms({5, 1, 3}, 3))
    gates = [ln for ln in text.splitlines() if ln.startswith("mcx")]
    assert gates == [
        "mcx controls=(0,-),(1,-),(2,+) target=aux",
        "mcx controls=(0,-),(1,+),(2,+) target=aux",
        "mcx controls=(0,+),(1,-),(2,+) target=aux",
    ]


def test_replay_reproduces_marking_on_basis_states():
    # exhaustive over basis states, random functions, n up to 5
    rng = np.random.default_rng(33)
    for n in range(1, 6):
        for _ in range(5):
            f = _random_fn(rng, n)
            text = emit_circuit(f)
            for j in range(1 << (n + 1)):
                psi = _basis(n + 1, j)
                np.testing.assert_array_equal(
                    replay_circuit(text, psi).amps, apply_marking(f, psi).amps
                )


def test_replay_reproduces_marking_on_dense_state():
    rng = np.random.default_rng(34)
    f = _random_fn(rng, 5)
    psi = _random_state(rng, 6)
    np.testing.assert_array_equal(
        replay_circuit(emit_circuit(f), psi).amps, apply_marking(f, psi).amps
    )


def test_replay_validation():
    psi = _basis(2, 0)
    with pytest.raises(ValueError, match="header"):
        replay_circuit("mcx controls=(0,-) target=aux\n", psi)
    with pytest.raises(ValueError, match="bad netlist line"):
        replay_circuit("qubits 2\nmcx controls=(0,*) target=aux\n", psi)
    with pytest.raises(ValueError, match="bad netlist line"):
        replay_circuit("qubits 2\nccx controls=(0,-) target=aux\n", psi)
    with pytest.raises(ValueError, match="out of range"):
        replay_circuit("qubits 2\nmcx controls=(1,-) target=aux\n", psi)
    with pytest.raises(ShapeError):
        replay_circuit("qubits 3\n", psi)
