"""State machine of the damage game: one cop versus a team of s robbers.

A round is a cop turn followed by a joint robber turn.  Moving onto a live
robber captures it; a robber moving onto the cop is captured immediately.
Damage is assessed right after the cop's move each round: the current vertex
of every robber that is still live at that point becomes damaged.  Initial
placements count as end-of-round-0 positions, so they are assessed after the
cop's round-1 move.  A robber that steps onto the cop later in the same round
does not retroactively spare the vertex it damaged.

Robbers are modeled as one adversarial player moving all tokens in a single
joint move.  Co-location of robbers is allowed; placing a robber on the cop
is legal and an immediate capture.

States are immutable; transitions are pure functions returning new states.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from itertools import product

from .errors import IllegalMoveError, RulesError, WrongPhaseError
from .graphs import Graph

CAUGHT = None  # robber status sentinel inside the positions tuple


class Phase(Enum):
    COP_PLACEMENT = "cop_placement"
    ROBBER_PLACEMENT = "robber_placement"
    COP_TO_MOVE = "cop_to_move"
    ROBBERS_TO_MOVE = "robbers_to_move"


@dataclass(frozen=True)
class GameState:
    """Full game position.

    robbers[i] is the vertex of robber i, or CAUGHT (None).  The tuple is
    indexed by robber id and never reordered, so policies can track
    individual robbers; the solver canonicalizes separately.
    """

    s: int
    cop: int | None
    robbers: tuple[int | None, ...]
    damaged: frozenset[int]
    phase: Phase
    round: int

    def live_robbers(self):
        """(robber id, vertex) pairs for robbers still in play."""
        return [(i, v) for i, v in enumerate(self.robbers) if v is not CAUGHT]

    def live_count(self):
        return sum(1 for v in self.robbers if v is not CAUGHT)


def class_key(state: GameState):
    """(live robber count, damaged set) -- the solver's progress measure."""
    if state.phase not in (Phase.COP_TO_MOVE, Phase.ROBBERS_TO_MOVE):
        raise WrongPhaseError("class_key is defined on post-placement states")
    return state.live_count(), state.damaged


def is_settled(state: GameState):
    """True once no live robbers remain; the value is frozen at |damaged|."""
    if state.phase not in (Phase.COP_TO_MOVE, Phase.ROBBERS_TO_MOVE):
        raise WrongPhaseError("is_settled is defined on post-placement states")
    return state.live_count() == 0


def initial_state(graph: Graph, s: int) -> GameState:
    if s < 1:
        raise RulesError("need at least one robber")
    if graph.n == 0:
        raise RulesError("cannot play on the empty graph")
    return GameState(
        s=s,
        cop=None,
        robbers=(),
        damaged=frozenset(),
        phase=Phase.COP_PLACEMENT,
        round=0,
    )


def place_cop(graph: Graph, state: GameState, v: int) -> GameState:
    if state.phase is not Phase.COP_PLACEMENT:
        raise WrongPhaseError(f"place_cop called in phase {state.phase.value}")
    graph.check_vertex(v)
    return replace(state, cop=v, phase=Phase.ROBBER_PLACEMENT)


def place_robbers(graph: Graph, state: GameState, vertices) -> GameState:
    """Joint robber placement; placing on the cop is an immediate capture."""
    if state.phase is not Phase.ROBBER_PLACEMENT:
        raise WrongPhaseError(f"place_robbers called in phase {state.phase.value}")
    vertices = tuple(vertices)
    if len(vertices) != state.s:
        raise IllegalMoveError(f"expected {state.s} placements, got {len(vertices)}")
    for v in vertices:
        graph.check_vertex(v)
    robbers = tuple(CAUGHT if v == state.cop else v for v in vertices)
    return replace(state, robbers=robbers, phase=Phase.COP_TO_MOVE, round=1)


def legal_cop_moves(graph: Graph, state: GameState):
    """The closed neighborhood of the cop; staying is legal."""
    if state.phase is not Phase.COP_TO_MOVE:
        raise WrongPhaseError(f"legal_cop_moves called in phase {state.phase.value}")
    return sorted(graph.closed_neighborhood(state.cop))


def apply_cop_move(graph: Graph, state: GameState, dest: int) -> GameState:
    """Cop step: capture on arrival, then assess damage, then flip phase.

    Every live robber sitting on dest is caught.  Afterwards the current
    vertex of every robber still live is added to the damaged set (this is
    where end-of-previous-round occupation turns into damage).
    """
    if state.phase is not Phase.COP_TO_MOVE:
        raise WrongPhaseError(f"apply_cop_move called in phase {state.phase.value}")
    if dest not in graph.closed_neighborhood(state.cop):
        raise IllegalMoveError(f"cop cannot move {state.cop} -> {dest}")
    robbers = tuple(CAUGHT if v == dest else v for v in state.robbers)
    damaged = state.damaged | {v for v in robbers if v is not CAUGHT}
    return replace(
        state, cop=dest, robbers=robbers, damaged=damaged, phase=Phase.ROBBERS_TO_MOVE
    )


def robber_move_options(graph: Graph, state: GameState, robber_id: int):
    """Closed neighborhood of one live robber."""
    v = state.robbers[robber_id]
    if v is CAUGHT:
        raise IllegalMoveError(f"robber {robber_id} is caught")
    return sorted(graph.closed_neighborhood(v))


def legal_joint_robber_moves(graph: Graph, state: GameState):
    """All joint moves, one representative per multiset of destinations.

    A joint move is a tuple aligned with state.robbers (None for caught
    robbers).  Robbers are interchangeable, so assignments that differ only
    by permuting robbers onto the same destination multiset are collapsed to
    the first one in product order.
    """
    if state.phase is not Phase.ROBBERS_TO_MOVE:
        raise WrongPhaseError(
            f"legal_joint_robber_moves called in phase {state.phase.value}"
        )
    live = state.live_robbers()
    if not live:
        return [tuple(CAUGHT for _ in state.robbers)]
    option_lists = [robber_move_options(graph, state, i) for i, _ in live]
    moves = []
    seen = set()
    for combo in product(*option_lists):
        key = tuple(sorted(combo))
        if key in seen:
            continue
        seen.add(key)
        move = [CAUGHT] * len(state.robbers)
        for (i, _), dest in zip(live, combo):
            move[i] = dest
        moves.append(tuple(move))
    return moves


def apply_robber_move(graph: Graph, state: GameState, move) -> GameState:
    """Joint robber step; stepping onto the cop is an immediate capture."""
    if state.phase is not Phase.ROBBERS_TO_MOVE:
        raise WrongPhaseError(f"apply_robber_move called in phase {state.phase.value}")
    move = tuple(move)
    if len(move) != len(state.robbers):
        raise IllegalMoveError(
            f"joint move length {len(move)} != robber count {len(state.robbers)}"
        )
    new_positions = []
    for i, (cur, dest) in enumerate(zip(state.robbers, move)):
        if cur is CAUGHT:
            if dest is not CAUGHT:
                raise IllegalMoveError(f"caught robber {i} cannot move")
            new_positions.append(CAUGHT)
            continue
        if dest is CAUGHT:
            raise IllegalMoveError(f"live robber {i} needs a destination")
        if dest not in graph.closed_neighborhood(cur):
            raise IllegalMoveError(f"robber {i} cannot move {cur} -> {dest}")
        new_positions.append(CAUGHT if dest == state.cop else dest)
    return replace(
        state,
        robbers=tuple(new_positions),
        phase=Phase.COP_TO_MOVE,
        round=state.round + 1,
    )
