#!/usr/bin/env python3
"""Oracle wiring: netlist emission, replay, and phase kickback.

The marking oracle of any function is one multi-controlled X per
minterm, targeting an auxiliary qubit appended as the least significant
bit. The emitted netlist is replayable: an interpreter that only knows
mcx semantics reproduces the oracle's action exactly.
"""

import numpy as np

from svmem import (
    StateVector,
    apply_marking,
    apply_phase,
    emit_circuit,
    encode,
    kron,
    parse,
    replay_circuit,
)

f = parse("a'b'", ["a", "b", "c"])
text = emit_circuit(f)
print("netlist for a'b' (aux = least significant qubit):")
print(text)

# Feed the stored word through, with the auxiliary cleared: recognition
# sets the auxiliary on every supported basis state.
psi = kron(encode("ZZB"), StateVector(1, np.array([1, 0], complex)))
direct = apply_marking(f, psi)
replayed = replay_circuit(text, psi)
print("amplitudes after the oracle: ", direct.amps.real.astype(int).tolist())
print("replayed through the netlist:", replayed.amps.real.astype(int).tolist())
print("identical:", np.array_equal(direct.amps, replayed.amps))
print()

# Phase kickback: with the auxiliary prepared in (1 -1)/sqrt(2), marking
# acts as a pure sign flip on the data register.
minus = StateVector(1, np.array([1.0, -1.0]) / np.sqrt(2.0))
data = encode("BBB")
via_marking = apply_marking(f, kron(data, minus))
via_phase = kron(apply_phase(f, data), minus)
print("kickback matches the phase oracle:",
      np.allclose(via_marking.amps, via_phase.amps, atol=1e-12))
print("data register signs:", apply_phase(f, data).amps.real.astype(int).tolist())
