"""Boolean functions as oracles acting on state vectors.

The marking form works on n+1 qubits with the auxiliary as the LEAST
significant bit and sends |x, q> to |x, q XOR f(x)>; the phase form stays
on n qubits and flips the sign of marked amplitudes. Both are applied by
index arithmetic on the truth table (O(2^n)), never by building the
2^n x 2^n matrix. A separate netlist emitter covers the wiring-diagram
view: one multi-controlled X per minterm.
"""

from __future__ import annotations

import re

import numpy as np

from .boolfn import BoolFn
from .errors import ShapeError
from .statevec import StateVector


def apply_marking(f: BoolFn, psi: StateVector) -> StateVector:
    """|x, q> -> |x, q XOR f(x)>; a self-inverse basis permutation."""
    if psi.n != f.n + 1:
        raise ShapeError(
            f"marking oracle on {f.n} inputs needs {f.n + 1} qubits, state has {psi.n}"
        )
    idx = np.arange(1 << psi.n)
    # flipping the aux bit wherever f(x)=1 is its own inverse, so gathering
    # through perm applies the permutation directly
    perm = idx ^ f.table[idx >> 1]
    return StateVector(psi.n, psi.amps[perm])


def apply_phase(f: BoolFn, psi: StateVector) -> StateVector:
    """amps[x] -> (-1)^f(x) * amps[x]; diagonal with entries ±1."""
    if psi.n != f.n:
        raise ShapeError(f"phase oracle on {f.n} inputs got a {psi.n}-qubit state")
    signs = 1.0 - 2.0 * f.table.astype(np.float64)
    return StateVector(psi.n, psi.amps * signs)


def emit_circuit(f: BoolFn) -> str:
    """Netlist realizing the marking oracle, one mcx per minterm.

    Header `qubits <n+1>` counts the auxiliary target. Control polarity
    is '+' for a 1-bit and '-' for a 0-bit of the minterm, with qubit 0
    as the most significant bit. No decomposition to elementary gates.
    """
    lines = [f"qubits {f.n + 1}"]
    for m in np.flatnonzero(f.table):
        controls = ",".join(
            f"({q},{'+' if (int(m) >> (f.n - 1 - q)) & 1 else '-'})"
            for q in range(f.n)
        )
        lines.append(f"mcx controls={controls} target=aux")
    return "\n".join(lines) + "\n"


_MCX_LINE = re.compile(r"^mcx controls=(?P<controls>\S*) target=aux$")
_CONTROL = re.compile(r"\((\d+),([+-])\)")
_CONTROL_LIST = re.compile(r"^(\(\d+,[+-]\)(,\(\d+,[+-]\))*)?$")


def replay_circuit(text: str, psi: StateVector) -> StateVector:
    """Run a netlist gate by gate with multi-controlled-X semantics.

    Independent of apply_marking on purpose: each mcx flips the auxiliary
    (bit 0) on exactly those basis states whose control bits match.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("qubits "):
        raise ValueError("netlist must start with a 'qubits <count>' header")
    try:
        total = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError(f"bad netlist header: {lines[0]!r}") from None
    if psi.n != total:
        raise ShapeError(f"netlist wants {total} qubits, state has {psi.n}")
    idx = np.arange(1 << total)
    amps = psi.amps
    for line in lines[1:]:
        m = _MCX_LINE.match(line)
        if m is None or not _CONTROL_LIST.match(m.group("controls")):
            raise ValueError(f"bad netlist line: {line!r}")
        hit = np.ones(len(idx), dtype=bool)
        for q_text, polarity in _CONTROL.findall(m.group("controls")):
            q = int(q_text)
            if q >= total - 1:
                raise ValueError(f"control qubit {q} out of range in: {line!r}")
            bit = (idx >> (total - 1 - q)) & 1
            hit &= bit == (1 if polarity == "+" else 0)
        amps = amps[idx ^ hit.astype(idx.dtype)]
    return StateVector(total, amps)
