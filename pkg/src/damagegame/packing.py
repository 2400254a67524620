"""Bit-packed encoding of post-placement game states into int64.

Layout, LSB first:

    bit  0        phase: 0 = cop to move, 1 = robbers to move
    bits 1-5      cop vertex (5 bits)
    bits 6-8      cop policy memory, used by best-response searches (0 in
                  plain solves)
    bits 9-...    s robber slots, 5 bits each, sorted ascending; a caught
                  robber is the sentinel 31, which sorts last
    top n bits    damaged-vertex bitset

Robbers are stored as a sorted multiset: the factorial symmetry between
interchangeable robbers collapses before memoization.  The encoding needs
9 + 5s + n <= 63 and n <= 30, which covers every desk-scale solve target;
larger instances are simulated, not solved.
"""

from __future__ import annotations

from .errors import SolverCapacityError
from .rules import CAUGHT, GameState, Phase

VBITS = 5
SLOT_CAUGHT = 31
COP_SHIFT = 1
MODE_SHIFT = 6
ROB_SHIFT = 9
MAX_N = 30

PHASE_COP = 0
PHASE_ROBBERS = 1


def damage_shift(s):
    return ROB_SHIFT + VBITS * s


def check_capacity(n, s):
    if n > MAX_N or damage_shift(s) + n > 63:
        raise SolverCapacityError(
            f"instance (n={n}, s={s}) exceeds the packed-state encoding "
            f"(need n <= {MAX_N} and 9 + 5s + n <= 63)"
        )


def pack_components(phase, cop, mode, slots, damage, s):
    """slots must already be sorted ascending with SLOT_CAUGHT last."""
    x = phase | (cop << COP_SHIFT) | (mode << MODE_SHIFT)
    for i in range(s):
        x |= slots[i] << (ROB_SHIFT + VBITS * i)
    x |= damage << damage_shift(s)
    return x


def pack_state(state: GameState, mode=0):
    """Encode a post-placement GameState (round and robber ids are not kept)."""
    if state.phase is Phase.COP_TO_MOVE:
        phase = PHASE_COP
    elif state.phase is Phase.ROBBERS_TO_MOVE:
        phase = PHASE_ROBBERS
    else:
        raise ValueError("only post-placement states can be packed")
    slots = sorted(
        (SLOT_CAUGHT if v is CAUGHT else v) for v in state.robbers
    )
    damage = 0
    for v in state.damaged:
        damage |= 1 << v
    return pack_components(phase, state.cop, mode, slots, damage, state.s)


def unpack_state(packed, n, s):
    """Decode to (phase, cop, mode, slots, damage_bits)."""
    packed = int(packed)
    phase = packed & 1
    cop = (packed >> COP_SHIFT) & 31
    mode = (packed >> MODE_SHIFT) & 7
    slots = tuple((packed >> (ROB_SHIFT + VBITS * i)) & 31 for i in range(s))
    damage = packed >> damage_shift(s)
    return phase, cop, mode, slots, damage


def unpack_to_gamestate(packed, n, s, round_no=1):
    """GameState view of a packed state (robber order is the canonical one)."""
    phase, cop, _mode, slots, damage = unpack_state(packed, n, s)
    robbers = tuple(CAUGHT if v == SLOT_CAUGHT else v for v in slots)
    return GameState(
        s=s,
        cop=cop,
        robbers=robbers,
        damaged=damage_bits_to_set(damage),
        phase=Phase.COP_TO_MOVE if phase == PHASE_COP else Phase.ROBBERS_TO_MOVE,
        round=round_no,
    )


def damage_bits_to_set(bits):
    out = set()
    v = 0
    bits = int(bits)
    while bits:
        if bits & 1:
            out.add(v)
        bits >>= 1
        v += 1
    return frozenset(out)


def live_count_of(packed, s):
    return sum(
        1
        for i in range(s)
        if (int(packed) >> (ROB_SHIFT + VBITS * i)) & 31 != SLOT_CAUGHT
    )


def damage_bits_of(packed, s):
    return int(packed) >> damage_shift(s)


def same_class(a, b, s):
    """True when two packed states share (live count, damaged set)."""
    return damage_bits_of(a, s) == damage_bits_of(b, s) and live_count_of(
        a, s
    ) == live_count_of(b, s)
