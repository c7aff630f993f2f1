"""Exception types shared across the package."""


class SimulatorError(Exception):
    """Base class for svmem-specific failures."""


class ResourceLimitError(SimulatorError):
    """A register or enumeration would exceed the configured size cap."""


class DegenerateStateError(SimulatorError):
    """An operation needed a nonzero state but got the all-zero vector."""


class NoSolutionError(SimulatorError):
    """Grover search was asked to find states of a never-true function."""


class ShapeError(SimulatorError):
    """Qubit counts of the operands do not line up."""


class ParseError(SimulatorError):
    """A Boolean expression was rejected; `position` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
