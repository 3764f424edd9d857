"""Exception hierarchy shared across the package.

Two families matter to callers: ``SceneError`` covers malformed input
(files, names, references) and ``DomainError`` covers well-formed input
on which the requested operation is mathematically impossible. The CLI
maps them to exit codes 2 and 1 respectively.
"""


class HoopFluxError(Exception):
    """Base class for all package errors."""


class SceneError(HoopFluxError):
    """Input-level problem: the scene or a name in it is bad."""


class ParseError(SceneError):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(SceneError):
    """One or more scene invariants are violated; lists every violation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class UnknownSegment(SceneError):
    def __init__(self, seg_id):
        super().__init__(f"unknown segment {seg_id!r}")
        self.seg_id = seg_id


class UnknownName(SceneError):
    def __init__(self, kind, name, suggestion=None):
        msg = f"unknown {kind} {name!r}"
        if suggestion:
            msg += f" (did you mean {suggestion!r}?)"
        super().__init__(msg)
        self.kind = kind
        self.name = name
        self.suggestion = suggestion


class DomainError(HoopFluxError):
    """The operation is undefined for this (valid) input."""


class ChainingError(DomainError):
    """Consecutive path pieces fail to share endpoints."""


class NotIndependent(DomainError):
    """No exclusive-segment certificate exists for the given chains."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotInSpan(DomainError):
    """A chain is not an integer combination of the given basis."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotComparable(DomainError):
    """The directing relation fails; `side` names the failing half."""

    def __init__(self, side, message=None):
        super().__init__(message or f"not comparable: {side}")
        self.side = side


class NoWitness(DomainError):
    """No supplied loop certifies the face (not proven a face)."""


class NotInvariant(DomainError):
    """The function moves along some gauge orbit direction."""


class NoLoops(DomainError):
    """The graph is a forest: only constant invariants exist."""


class UncertifiedFrame(DomainError):
    """Operation requires a certified hoop frame."""


class FrameMismatch(DomainError):
    """The function's frame does not match the expected one."""


class DimensionMismatch(DomainError):
    """Momentum dimension differs from the frame size."""


class EmptyInput(DomainError):
    """Zero-dimensional systems are excluded."""


class DegenerateComplement(DomainError):
    """The requested complement rows are linearly dependent."""
