"""Generators for the hardness-reduction instances, doubling as test factories.

Three vertex-cover reductions (two for edge deletion, one for switching)
and the generic multicoloured-independent-set reduction for the three
W[1]-hard switching targets.  The MIS reduction replaces each part by a
partition gadget carrying one special vertex per source vertex and each
source edge by an edge gadget glued at its two special vertices; the
required behaviour of the gadgets (properties P1-P3 and E1-E4) is checked
empirically by ``verify_gadget_properties`` rather than trusted.

Construction notes for the partition gadgets, with s the part size:

* targets with both parallel edges and red loops at one/both ends share an
  all-blue theta graph: two odd cycles of length L/2 + s - 1 glued along a
  blue chord with s vertices (all special), where the outer cycle length L
  is 2q when q and s have the same parity and 2q + 2 otherwise; for s = 1
  the chord degenerates to a single shared vertex,
* the remaining target (red loop, blue loop) uses two alternating-odd-cycle
  figures glued along the chord, each carrying a small alternating odd
  cycle of length q (or q + 1) hung off the double-red break vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .fptsolve import ProblemKind
from .graphs import BLUE, RED, ColouredGraph, GraphError, Target, core_targets
from .homcheck import hom_exists_2sat


@dataclass(frozen=True)
class VcInstance:
    """A Vertex Cover instance: simple loopless graph plus a budget."""

    n: int
    edges: tuple
    k: int

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range")
            if u == v:
                raise GraphError("vertex cover instances are loopless")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError("vertex cover instances are simple")
            seen.add(key)


@dataclass(frozen=True)
class MisInstance:
    """A Multicoloured Independent Set instance: graph plus vertex parts."""

    n: int
    edges: tuple
    parts: tuple

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range")
            if u == v:
                raise GraphError("independent set instances are loopless")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError("independent set instances are simple")
            seen.add(key)
        flat = sorted(v for part in self.parts for v in part)
        if flat != list(range(self.n)):
            raise GraphError("parts must partition the vertex set")
        if any(not part for part in self.parts):
            raise GraphError("parts must be non-empty")

    @property
    def k(self):
        return len(self.parts)


@dataclass(frozen=True)
class ReducedInstance:
    instance: ColouredGraph
    problem: ProblemKind
    target: Target
    budget: int
    provenance: dict = field(compare=False)


# -- vertex cover reductions ---------------------------------------------------


def gen_vc_edel_h2b_rb(vc: VcInstance) -> ReducedInstance:
    """Blue copy of G plus a pending red edge per vertex; EDEL, blue edge
    with a red loop at one end and a blue loop at the other.

    G has a vertex cover of size <= k iff the output is a yes-instance at
    budget k.  Pendant edges come first in the edge list.
    """
    edges = [(v, vc.n + v, RED) for v in range(vc.n)]
    edges += [(u, v, BLUE) for u, v in vc.edges]
    prov = {v: ("source", v) for v in range(vc.n)}
    prov.update({vc.n + v: ("pendant", v) for v in range(vc.n)})
    return ReducedInstance(
        ColouredGraph(2 * vc.n, edges),
        ProblemKind.EDEL,
        core_targets()["H2b_r,b"],
        vc.k,
        prov,
    )


def gen_vc_edel_h2rb_rb(vc: VcInstance) -> ReducedInstance:
    """Red copy of G, blue pendants, and a five-edge completer per edge;
    EDEL, both parallel edges with a red loop and a blue loop.

    Each source edge uv closes an odd figure eight through u', v' and the
    fresh vertices x, y, z (u'x, v'x, yz red; xy, xz blue).
    """
    n = vc.n
    edges = [(v, n + v, BLUE) for v in range(n)]
    edges += [(u, v, RED) for u, v in vc.edges]
    prov = {v: ("source", v) for v in range(n)}
    prov.update({n + v: ("pendant", v) for v in range(n)})
    nxt = 2 * n
    for u, v in vc.edges:
        x, y, z = nxt, nxt + 1, nxt + 2
        nxt += 3
        edges += [
            (n + u, x, RED),
            (n + v, x, RED),
            (y, z, RED),
            (x, y, BLUE),
            (x, z, BLUE),
        ]
        prov[x] = ("completer", u, v, "x")
        prov[y] = ("completer", u, v, "y")
        prov[z] = ("completer", u, v, "z")
    return ReducedInstance(
        ColouredGraph(nxt, edges),
        ProblemKind.EDEL,
        core_targets()["H2rb_r,b"],
        vc.k,
        prov,
    )


def gen_vc_switch_h2b_rdash(vc: VcInstance) -> ReducedInstance:
    """All-red copy of G with a blue pendant carrying a red loop per vertex;
    SWITCH, blue edge with a red loop at one end."""
    n = vc.n
    edges = []
    for v in range(n):
        edges.append((v, n + v, BLUE))
        edges.append((n + v, n + v, RED))
    edges += [(u, v, RED) for u, v in vc.edges]
    prov = {v: ("source", v) for v in range(n)}
    prov.update({n + v: ("pendant", v) for v in range(n)})
    return ReducedInstance(
        ColouredGraph(2 * n, edges),
        ProblemKind.SWITCH,
        core_targets()["H2b_r,-"],
        vc.k,
        prov,
    )


# -- MIS reduction gadgets ------------------------------------------------------


def _other(c):
    return RED if c == BLUE else BLUE


def _blue_theta_partition(specials, q, alloc):
    """All-blue theta gadget used for the two red-looped targets."""
    s = len(specials)
    length = 2 * q if (q - s) % 2 == 0 else 2 * q + 2
    arc = length // 2
    edges = [(specials[i], specials[i + 1], BLUE) for i in range(s - 1)]
    for _ in range(2):
        prev = specials[0]
        for _ in range(arc - 1):
            w = alloc()
            edges.append((prev, w, BLUE))
            prev = w
        edges.append((prev, specials[-1], BLUE))
    return edges, {"outer_cycle": length, "odd_cycle": arc + s - 1}


def _private_colours(start_required, end_required, pc):
    """Colour sequence for the private path of the alternating gadget.

    Alternates except for exactly one red-red break at an internal vertex;
    honours the required colours at the two junction edges (or, when both
    junctions are the same vertex, just makes them differ).  Returns
    (colours, break_edge) with the break between edges break_edge and
    break_edge + 1, 1-indexed.
    """
    starts = [start_required] if start_required else [BLUE, RED]
    for t in range(1, pc):
        for start in starts:
            cols = []
            c = start
            for _ in range(t):
                cols.append(c)
                c = _other(c)
            if cols[-1] != RED:
                continue
            c = RED
            for _ in range(pc - t):
                cols.append(c)
                c = _other(c)
            if end_required is not None and cols[-1] != end_required:
                continue
            if end_required is None and cols[0] == cols[-1]:
                continue
            return cols, t
    raise AssertionError(f"no valid private colour sequence for pc={pc}")


def _hang_alternating_cycle(at, m, alloc):
    """Alternating odd cycle of length m hung at ``at`` with two blue ends."""
    edges = []
    prev = at
    for j in range(m - 1):
        w = alloc()
        edges.append((prev, w, BLUE if j % 2 == 0 else RED))
        prev = w
    edges.append((prev, at, BLUE))
    return edges


def _alternating_partition(specials, q, alloc):
    """Partition gadget for the red-loop/blue-loop target: two alternating
    odd figures glued along the chord of special vertices."""
    s = len(specials)
    big = s + q if (s + q) % 2 == 1 else s + q + 1
    small = q if q % 2 == 1 else q + 1
    chord_cols = [RED if i % 2 == 0 else BLUE for i in range(s - 1)]
    edges = [
        (specials[i], specials[i + 1], chord_cols[i]) for i in range(s - 1)
    ]
    pc = big - (s - 1)
    start_req = _other(chord_cols[-1]) if s > 1 else None
    end_req = _other(chord_cols[0]) if s > 1 else None
    cols, break_edge = _private_colours(start_req, end_req, pc)
    for _ in range(2):
        prev = specials[-1]
        break_vertex = None
        for j in range(pc - 1):
            w = alloc()
            edges.append((prev, w, cols[j]))
            if j + 1 == break_edge:
                break_vertex = w
            prev = w
        edges.append((prev, specials[0], cols[pc - 1]))
        edges += _hang_alternating_cycle(break_vertex, small, alloc)
    return edges, {"big_cycle": big, "small_cycle": small}


def _edge_gadget_rr(u, v, q, alloc):
    """All-blue (2q+1)-cycle switched at u and v, which sit at distance q."""
    m = 2 * q + 1
    verts = []
    for i in range(m):
        if i == 0:
            verts.append(u)
        elif i == q:
            verts.append(v)
        else:
            verts.append(alloc())
    edges = []
    for i in range(m):
        a, b = verts[i], verts[(i + 1) % m]
        colour = RED if (a in (u, v)) != (b in (u, v)) else BLUE
        edges.append((a, b, colour))
    return edges


def _edge_gadget_rdash(u, v, q, alloc):
    """Odd path of length >= max(q, 5): two red edges, blue middle, two red."""
    length = max(q, 5)
    if length % 2 == 0:
        length += 1
    verts = [u] + [alloc() for _ in range(length - 1)] + [v]
    edges = []
    for i in range(length):
        colour = RED if i in (0, 1, length - 2, length - 1) else BLUE
        edges.append((verts[i], verts[i + 1], colour))
    return edges


def _edge_gadget_rb(u, v, q, alloc):
    """Two alternating odd (2q+1)-cycles sharing the double-break vertex,
    switched at u and v (distance q apart on the double-red cycle)."""
    m = 2 * q + 1
    j0 = (q + 1) // 2
    verts = []
    for i in range(m):
        if i == 0:
            verts.append(u)
        elif i == q + 1:
            verts.append(v)
        else:
            verts.append(alloc())
    edges = []
    for i in range(m):
        a, b = verts[i], verts[(i + 1) % m]
        colour = RED if (i - j0) % m % 2 == 0 else BLUE
        if (a in (u, v)) != (b in (u, v)):
            colour = _other(colour)
        edges.append((a, b, colour))
    edges += _hang_alternating_cycle(verts[j0], m, alloc)
    return edges


_PARTITION_BUILDERS = {
    "r": _blue_theta_partition,
    "-": _blue_theta_partition,
    "b": _alternating_partition,
}
_EDGE_BUILDERS = {"r": _edge_gadget_rr, "-": _edge_gadget_rdash, "b": _edge_gadget_rb}


def _check_family(x, q):
    if x not in ("r", "b", "-"):
        raise GraphError(f"family must be one of r, b, -; got {x!r}")
    if q < 3:
        raise GraphError(f"girth parameter must be >= 3, got {q}")


def mis_switch_target(x) -> Target:
    return core_targets()["H2rb_r," + x]


def gen_mis_switch(mis: MisInstance, x, q) -> ReducedInstance:
    """Generic MIS reduction: one partition gadget per part, one edge gadget
    per source edge, glued at the special vertices (the source vertices).

    The source has a multicoloured independent set iff the output is a
    yes-instance of SWITCH at budget k = number of parts; the output has
    girth at least q.
    """
    _check_family(x, q)
    counter = [mis.n]
    prov = {v: ("source", v) for v in range(mis.n)}
    edges = []

    def alloc_for(label):
        def alloc():
            w = counter[0]
            counter[0] += 1
            prov[w] = label
            return w

        return alloc

    for i, part in enumerate(mis.parts):
        specials = tuple(sorted(part))
        part_edges, _ = _PARTITION_BUILDERS[x](specials, q, alloc_for(("partition", i)))
        edges += part_edges
    for u, v in mis.edges:
        edges += _EDGE_BUILDERS[x](u, v, q, alloc_for(("edge", u, v)))
    return ReducedInstance(
        ColouredGraph(counter[0], edges),
        ProblemKind.SWITCH,
        mis_switch_target(x),
        len(mis.parts),
        prov,
    )


def build_partition_gadget(x, q, part_size):
    """Standalone partition gadget with specials 0..part_size-1; returns
    (graph, specials, meta)."""
    _check_family(x, q)
    if part_size < 1:
        raise GraphError("part size must be >= 1")
    counter = [part_size]

    def alloc():
        w = counter[0]
        counter[0] += 1
        return w

    specials = tuple(range(part_size))
    edges, meta = _PARTITION_BUILDERS[x](specials, q, alloc)
    return ColouredGraph(counter[0], edges), specials, meta


def build_edge_gadget(x, q):
    """Standalone edge gadget with special vertices u = 0, v = 1."""
    _check_family(x, q)
    counter = [2]

    def alloc():
        w = counter[0]
        counter[0] += 1
        return w

    edges = _EDGE_BUILDERS[x](0, 1, q, alloc)
    return ColouredGraph(counter[0], edges), (0, 1)


# -- property verification -------------------------------------------------------


@dataclass
class GadgetReport:
    """Pass/fail per gadget property, with a witness string on failure."""

    x: str
    q: int
    part_size: int
    results: dict
    details: dict

    @property
    def all_passed(self):
        return all(self.results.values())


def _distance(g, a, b):
    adj = g.adjacency()
    dist = {a: 0}
    queue = deque((a,))
    while queue:
        u = queue.popleft()
        if u == b:
            return dist[u]
        for w, _ in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return float("inf")


def verify_gadget_properties(x, q, part_size) -> GadgetReport:
    """Exhaustively check P1-P3 and E1-E4 for one gadget family and size.

    Homomorphism testing is the 2-SAT route; E2 is checked for every choice
    of special vertices in the two glued partition gadgets.
    """
    _check_family(x, q)
    if not 3 <= q <= 6:
        raise GraphError("exhaustive checking supports q in 3..6")
    if not 1 <= part_size <= 4:
        raise GraphError("exhaustive checking supports part sizes 1..4")
    target = mis_switch_target(x)
    results = {}
    details = {}

    def record(name, ok, detail=""):
        results[name] = ok
        if not ok:
            details[name] = detail

    gadget, specials, _ = build_partition_gadget(x, q, part_size)
    record("P1", hom_exists_2sat(gadget, target) is None, "gadget maps unswitched")
    bad = []
    for v in range(gadget.n):
        maps = hom_exists_2sat(gadget.switch_at(v), target) is not None
        if maps != (v in specials):
            bad.append(v)
    record("P2", not bad, f"wrong verdict after switching at {bad}")
    record("P3", gadget.girth() >= q, f"girth {gadget.girth()} < {q}")

    edge_gadget, (u, v) = build_edge_gadget(x, q)
    bad = [s for s in ((), (u,), (v,))
           if hom_exists_2sat(edge_gadget.switch_set(s), target) is None]
    record("E1", not bad, f"no map after switching {bad}")
    bad = []
    for i in range(part_size):
        for j in range(part_size):
            src = MisInstance(
                2 * part_size,
                ((i, part_size + j),),
                (tuple(range(part_size)), tuple(range(part_size, 2 * part_size))),
            )
            inst = gen_mis_switch(src, x, q)
            switched = inst.instance.switch_set((i, part_size + j))
            if hom_exists_2sat(switched, target) is not None:
                bad.append((i, j))
    record("E2", not bad, f"union maps after switching both specials: {bad}")
    record("E3", edge_gadget.girth() >= q, f"girth {edge_gadget.girth()} < {q}")
    dist = _distance(edge_gadget, u, v)
    record("E4", dist >= q, f"distance {dist} < {q}")
    return GadgetReport(x, q, part_size, results, details)
