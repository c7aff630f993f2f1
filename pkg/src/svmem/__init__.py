"""svmem: state vectors as exact bit memory.

An n-qubit register initialized qubit by qubit to (1 0), (0 1), or
(1 1) stores the 2^n-bit word given by its support. This package
builds those states, counts exactly how many distinct words fit,
reads bits back through needle oracles (RAM), recognizes whole words
through arbitrary Boolean functions (CAM), and amplifies marked
states with Grover iteration. Everything is exactly verifiable at
desk scale.
"""

from .boolfn import (
    BoolFn,
    count_functions,
    default_var_names,
    evaluate,
    from_minterms,
    needle,
    parse,
    truth_set,
)
from .errors import (
    DegenerateStateError,
    NoSolutionError,
    ParseError,
    ResourceLimitError,
    ShapeError,
    SimulatorError,
)
from .grover import (
    AUTO,
    GroverReport,
    diffusion,
    optimal_iterations,
    predicted_success,
    run,
    sample_counts,
    uniform_state,
)
from .memory import (
    CapacityReport,
    CapacityRow,
    cam_match,
    capacity,
    enumerate_patterns,
    pattern_for,
    ram_read,
    recognizes,
)
from .oracle import apply_marking, apply_phase, emit_circuit, replay_circuit
from .statevec import (
    DEFAULT_QUBIT_CAP,
    DEFAULT_SUPPORT_EPS,
    Factor,
    StateVector,
    encode,
    kron,
    norm_squared,
    parse_pattern,
    probabilities,
    support,
)

__version__ = "0.1.0"
