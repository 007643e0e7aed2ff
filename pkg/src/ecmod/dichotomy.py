"""Core computation for small targets and the complexity classifier.

The classifier hard-codes the three dichotomies for order-<=2 targets
(vertex deletion for any order via the all-loops-vertex criterion) and a
short list of targets whose plain colouring problem is already hard at
k = 0.  Everything beyond order 2 that is not on that list is reported
UNKNOWN rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    GraphError,
    ROW_00,
    ROW_01,
    ROW_11,
    Target,
    match_core,
)
from .homcheck import hom_exists_bruteforce

PTIME = "PTIME"
NP_COMPLETE = "NP_COMPLETE"
FPT = "FPT"
W1_HARD = "W1_HARD"
XP_ONLY = "XP_ONLY"
NOT_IN_XP = "NOT_IN_XP"
UNKNOWN = "UNKNOWN"

_ALL_ROWS = ROW_00 | ROW_01 | ROW_11

_SWITCH_NP_COMPLETE = {"H2b_r,b", "H2b_r,-", "H2rb_r,b", "H2rb_r,-", "H2rb_r,r"}
_SWITCH_W1_HARD = {"H2rb_r,b", "H2rb_r,-", "H2rb_r,r"}


@dataclass(frozen=True)
class Classification:
    problem: str
    target: Target
    classical: str
    parameterized: str
    source: str
    note: str = ""

    def record(self):
        name = self.target.canonical_name or f"order{self.target.order}"
        line = (
            f"problem={self.problem} target={name} classical={self.classical} "
            f"parameterized={self.parameterized} source={self.source}"
        )
        if self.note:
            line += f" note={self.note!r}"
        return line


def compute_core(h: Target) -> Target:
    """Smallest induced retract of h, by brute-force retraction search.

    Returns the core relabelled densely, taking the lexicographically least
    vertex subset among the smallest ones, so repeated coring is a fixed
    point.  Only meant for desk-scale targets (order <= 4).
    """
    g = h.graph
    if g.n > 4:
        raise GraphError(f"core search supports order <= 4, got {g.n}")
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            candidate = Target(g.induced(subset))
            if hom_exists_bruteforce(g, candidate) is not None:
                return candidate
    raise AssertionError("a graph always retracts to itself")


def _is_known_hard_colouring(t: Target) -> bool:
    """Hard-coded not-in-XP list: monochromatic loopless complete graphs and
    odd cycles of order >= 3 (so K3 up)."""
    g = t.graph
    if g.n < 3 or len(g.colours()) != 1:
        return False
    if any(u == v for u, v, _ in g.edges):
        return False
    pairs = {(u, v) for u, v, _ in g.edges}
    if len(pairs) != len(g.edges):
        return False
    if len(pairs) == g.n * (g.n - 1) // 2:
        return True
    if (
        g.n % 2 == 1
        and len(pairs) == g.n
        and len(g.connected_components()) == 1
        and all(len([1 for a, b in pairs if w in (a, b)]) == 2 for w in range(g.n))
    ):
        return True
    return False


def _core_or_self(h: Target) -> Target:
    return compute_core(h) if h.order <= 4 else h


def classify_vdel(h: Target, ambient_colours=None) -> Classification:
    """Vertex deletion: PTime iff some vertex carries a loop of every ambient
    colour, NP-complete otherwise; FPT whenever the core has order <= 2.

    The ambient colour set defaults to the target's own colours; pass the
    instance context's set (e.g. {r, b}) to classify within a wider palette.
    When the two ambient readings disagree, the note reports the other one.
    """
    colours = frozenset(ambient_colours) if ambient_colours is not None else h.colours()
    loops = {}
    for u, v, c in h.graph.edges:
        if u == v:
            loops.setdefault(u, set()).add(c)

    def has_full_loop_vertex(cs):
        return any(ls >= cs for ls in loops.values()) or not cs

    ptime = has_full_loop_vertex(colours)
    note = ""
    if ambient_colours is not None and ptime != has_full_loop_vertex(h.colours()):
        other = PTIME if has_full_loop_vertex(h.colours()) else NP_COMPLETE
        note = f"with the target's own colours the verdict is {other}"
    classical = PTIME if ptime else NP_COMPLETE
    if ptime:
        parameterized = FPT
    else:
        core = _core_or_self(h)
        if core.order <= 2:
            parameterized = FPT
        elif _is_known_hard_colouring(core):
            parameterized = NOT_IN_XP
        else:
            parameterized = UNKNOWN
    return Classification(
        "vdel", h, classical, parameterized, "vdel-loops-vertex-dichotomy", note
    )


def classify_edel(h: Target) -> Classification:
    """Edge deletion for order-<=2 cores: PTime iff every colour class is
    loops-only or has all three possible edges."""
    core = _core_or_self(h)
    if core.order > 2:
        if _is_known_hard_colouring(core):
            return Classification(
                "edel", h, NP_COMPLETE, NOT_IN_XP, "hard-colouring-at-k0"
            )
        return Classification(
            "edel", h, UNKNOWN, UNKNOWN, "edel-dichotomy-covers-order2-only"
        )
    ptime = all(
        mask & ROW_01 == 0 or mask == _ALL_ROWS for mask in core.rows.values()
    )
    return Classification(
        "edel",
        h,
        PTIME if ptime else NP_COMPLETE,
        FPT,
        "edel-order2-dichotomy; order2-group-deletion-fpt",
    )


def classify_switch(h: Target) -> Classification:
    """Switching for 2-edge-coloured order-<=2 cores: five NP-complete cases,
    of which two stay FPT via finite duality and three are W[1]-hard."""
    core = _core_or_self(h)
    name, _, _ = match_core(core)
    if name is None:
        return Classification(
            "switch", h, UNKNOWN, UNKNOWN, "switch-dichotomy-covers-order2-only"
        )
    if name in _SWITCH_NP_COMPLETE:
        classical = NP_COMPLETE
        parameterized = W1_HARD if name in _SWITCH_W1_HARD else FPT
        source = (
            "switch-order2-dichotomy; "
            + ("switch-mis-reduction-w1" if name in _SWITCH_W1_HARD else "switch-duality-search-fpt")
        )
    else:
        classical = PTIME
        parameterized = FPT
        source = "switch-order2-dichotomy; ptime-case"
    return Classification("switch", h, classical, parameterized, source)
