"""Exception hierarchy shared across the package."""


class DamageGameError(Exception):
    """Base class for all package errors."""


class GraphError(DamageGameError):
    """Invalid graph construction or query."""


class SelfLoopError(GraphError):
    """An edge (v, v) was supplied."""


class DuplicateEdgeError(GraphError):
    """The same undirected edge was supplied twice."""


class VertexRangeError(GraphError):
    """A vertex id is outside 0..n-1."""


class EdgeListFormatError(GraphError):
    """Malformed edge-list text.  Carries the 1-based offending line."""

    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MalformedHeaderError(EdgeListFormatError):
    pass


class WrongEdgeCountError(EdgeListFormatError):
    pass


class BadTokenError(EdgeListFormatError):
    pass


class FamilySpecError(DamageGameError):
    """Invalid graph-family parameter."""


class LandmarkError(DamageGameError):
    """Operation requires a generated graph with landmarks."""


class RulesError(DamageGameError):
    """Illegal use of the game state machine."""


class WrongPhaseError(RulesError):
    pass


class IllegalMoveError(RulesError):
    pass


class SolverError(DamageGameError):
    pass


class SolverCapacityError(SolverError):
    """Instance exceeds the packed-state encoding limits."""


class ResourceLimitExceeded(SolverError):
    """Search hit a state or time budget.  Carries partial statistics."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class PolicyError(DamageGameError):
    pass


class PolicySpecError(PolicyError):
    """Unparseable policy spec string."""


class ScriptPreconditionError(PolicyError):
    """A robber script was started from a state it does not cover."""


class PolicyFaultError(DamageGameError):
    """A policy emitted an illegal move during a match."""

    def __init__(self, policy_name, round_no, move):
        super().__init__(
            f"policy {policy_name!r} emitted illegal move {move!r} in round {round_no}"
        )
        self.policy_name = policy_name
        self.round_no = round_no
        self.move = move


class ClaimError(DamageGameError):
    """Unknown claim id or bad claim invocation."""
