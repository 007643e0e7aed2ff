"""Homomorphism existence tests and duality-obstruction detectors.

Brute force works for any target; the 2-SAT route works for targets of
order at most 2, seeing the two target vertices as "false" (0) and "true"
(1).  Each edge of the instance contributes clauses determined by the row
of edges its colour has in the target:

    row (loop0, edge01, loop1)      clauses for edge uv
    none                            (x_u)(~x_u)
    loop0                           (~x_u)(~x_v)
    edge01                          (x_u + x_v)(~x_u + ~x_v)
    loop1                           (x_u)(x_v)
    loop0+edge01                    (~x_u + ~x_v)
    edge01+loop1                    (x_u + x_v)
    loop0+loop1                     (x_u + ~x_v)(~x_u + x_v)
    all three                       (x_u + ~x_u)

Loops in the instance identify u and v.  Two encoding variants exist on
top of the plain rows: a vertex-deletion-sound variant where every clause
of an edge mentions both endpoint variables (so deleting either variable
deletes the whole edge constraint), and a grouped variant for edge
deletion where each edge occurrence forms one clause group that carries a
witness variable; the two single-loop rows get a fresh auxiliary variable
c per edge and the clauses (c + l_u)(c + l_v)(~c) for that purpose.

The detectors realise the finite/polynomial duality facts used by the
switching solvers; each is validated against the brute-force oracle by the
test suite rather than trusted.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .graphs import BLUE, RED, GraphError, ROW_00, ROW_01, ROW_11, ColouredGraph, Target
from .twosat import Group, TwoCnf, solve_2sat

RBR_IMAGE = "RBR_IMAGE"
RB_ODD_R_PATH = "RB_ODD_R_PATH"
ALL_BLUE_ODD_CYCLE = "ALL_BLUE_ODD_CYCLE"
ODD_BLUE_PARITY_CYCLE = "ODD_BLUE_PARITY_CYCLE"

_CYCLE_KINDS = {ALL_BLUE_ODD_CYCLE, ODD_BLUE_PARITY_CYCLE}


class TargetOrderError(GraphError):
    """Raised when a 2-SAT encoding is asked for a target of order > 2."""


class PreconditionError(RuntimeError):
    """A detector was called outside its caller contract."""


@dataclass(frozen=True)
class Homomorphism:
    """Vertex map of the instance into the target, as a tuple by vertex."""

    mapping: tuple

    def __getitem__(self, v):
        return self.mapping[v]


@dataclass(frozen=True)
class Obstruction:
    """A witness realising one of the duality obstructions.

    ``vertices`` is the witness walk.  For the cycle kinds it is a closed
    walk (closure back to the first vertex implicit) over distinct edge
    occurrences; for the image kinds it is an open walk whose vertices and
    edges may repeat.  ``edges`` holds the (u, v, colour) record of each
    step, in walk order.
    """

    kind: str
    vertices: tuple
    edges: tuple


def is_homomorphism(g: ColouredGraph, mapping, h: Target) -> bool:
    allowed = set()
    for u, v, c in h.graph.edges:
        allowed.add((u, v, c))
        allowed.add((v, u, c))
    if len(mapping) != g.n:
        return False
    if any(not 0 <= x < h.graph.n for x in mapping):
        return False
    return all((mapping[u], mapping[v], c) in allowed for u, v, c in g.edges)


def validate_obstruction(g: ColouredGraph, obs: Obstruction) -> bool:
    """Re-check a witness against g by direct inspection."""
    edges = obs.edges
    verts = obs.vertices
    if obs.kind in _CYCLE_KINDS:
        if len(verts) != len(edges) or not edges:
            return False
        if Counter(edges) - Counter(g.edges):
            return False
        hops = list(zip(verts, verts[1:] + verts[:1]))
    else:
        if len(verts) != len(edges) + 1:
            return False
        present = set(g.edges)
        if any(e not in present for e in edges):
            return False
        hops = list(zip(verts, verts[1:]))
    for (a, b), (u, v, _) in zip(hops, edges):
        if {a, b} != {u, v} and not (a == b == u == v):
            return False
    colours = [c for _, _, c in edges]
    if obs.kind == RBR_IMAGE:
        return colours == [RED, BLUE, RED]
    if obs.kind == RB_ODD_R_PATH:
        middle = colours[1:-1]
        return (
            colours[0] == RED
            and colours[-1] == RED
            and len(middle) % 2 == 1
            and all(c == BLUE for c in middle)
        )
    if obs.kind == ALL_BLUE_ODD_CYCLE:
        return len(colours) % 2 == 1 and all(c == BLUE for c in colours)
    if obs.kind == ODD_BLUE_PARITY_CYCLE:
        return sum(c == BLUE for c in colours) % 2 == 1
    return False


# -- brute force ------------------------------------------------------------


def hom_exists_bruteforce(g: ColouredGraph, h: Target):
    """Backtracking over all |V(H)|^|V(G)| maps; complete and deterministic.

    Returns the lexicographically first homomorphism, or None.
    """
    hn = h.graph.n
    allowed = set()
    for u, v, c in h.graph.edges:
        allowed.add((u, v, c))
        allowed.add((v, u, c))
    n = g.n
    if n == 0:
        return Homomorphism(())
    by_last = [[] for _ in range(n)]
    for u, v, c in g.edges:
        by_last[v].append((u, c))
    assign = [0] * n
    v = 0
    while v >= 0:
        if assign[v] >= hn:
            assign[v] = 0
            v -= 1
            if v >= 0:
                assign[v] += 1
            continue
        y = assign[v]
        ok = True
        for u, c in by_last[v]:
            if (assign[u], y, c) not in allowed:
                ok = False
                break
        if not ok:
            assign[v] += 1
            continue
        if v == n - 1:
            return Homomorphism(tuple(assign))
        v += 1
        assign[v] = 0
    return None


# -- 2-SAT encodings ---------------------------------------------------------

# Clause templates per row mask; entries are ((slot, positive), ...) clauses
# where slot 0 is x_u and slot 1 is x_v.
_T = True
_F = False

_PLAIN_EDGE = {
    0: (((0, _T),), ((0, _F),)),
    ROW_00: (((0, _F),), ((1, _F),)),
    ROW_01: (((0, _T), (1, _T)), ((0, _F), (1, _F))),
    ROW_11: (((0, _T),), ((1, _T),)),
    ROW_00 | ROW_01: (((0, _F), (1, _F)),),
    ROW_01 | ROW_11: (((0, _T), (1, _T)),),
    ROW_00 | ROW_11: (((0, _T), (1, _F)), ((0, _F), (1, _T))),
    ROW_00 | ROW_01 | ROW_11: (((0, _T), (0, _F)),),
}

_PLAIN_LOOP = {
    0: (((0, _T),), ((0, _F),)),
    ROW_00: (((0, _F),),),
    ROW_01: (((0, _T),), ((0, _F),)),
    ROW_11: (((0, _T),),),
    ROW_00 | ROW_01: (((0, _F),),),
    ROW_01 | ROW_11: (((0, _T),),),
    ROW_00 | ROW_11: (((0, _T), (0, _F)),),
    ROW_00 | ROW_01 | ROW_11: (((0, _T), (0, _F)),),
}

# Vertex-deletion-sound replacements: every clause of a non-loop edge must
# mention both endpoints, so that deleting either variable deletes the whole
# edge constraint.  Each is equivalent to the plain row while both variables
# survive.
_VDEL_EDGE = dict(_PLAIN_EDGE)
_VDEL_EDGE[0] = (
    ((0, _T), (1, _T)),
    ((0, _T), (1, _F)),
    ((0, _F), (1, _T)),
    ((0, _F), (1, _F)),
)
_VDEL_EDGE[ROW_00] = (
    ((0, _F), (1, _F)),
    ((0, _F), (1, _T)),
    ((0, _T), (1, _F)),
)
_VDEL_EDGE[ROW_11] = (
    ((0, _T), (1, _T)),
    ((0, _T), (1, _F)),
    ((0, _F), (1, _T)),
)


def _instantiate(template, u, v):
    out = []
    for clause in template:
        out.append(
            tuple(2 * (u if slot == 0 else v) + (0 if pos else 1) for slot, pos in clause)
        )
    return out


def _compile_tables():
    # Hand-specialised clause builders; the declarative templates above stay
    # the readable source of truth and the tests check the two agree.
    def compiled(template):
        def build(u, v, _t=template):
            return _instantiate(_t, u, v)

        return build

    edge = {row: compiled(t) for row, t in _PLAIN_EDGE.items()}
    edge[ROW_01] = lambda u, v: [(2 * u, 2 * v), (2 * u + 1, 2 * v + 1)]
    edge[ROW_00 | ROW_01] = lambda u, v: [(2 * u + 1, 2 * v + 1)]
    edge[ROW_01 | ROW_11] = lambda u, v: [(2 * u, 2 * v)]
    edge[ROW_00 | ROW_11] = lambda u, v: [(2 * u, 2 * v + 1), (2 * u + 1, 2 * v)]
    edge[0] = lambda u, v: [(2 * u,), (2 * u + 1,)]
    edge[ROW_00] = lambda u, v: [(2 * u + 1,), (2 * v + 1,)]
    edge[ROW_11] = lambda u, v: [(2 * u,), (2 * v,)]
    edge[ROW_00 | ROW_01 | ROW_11] = lambda u, v: [(2 * u, 2 * u + 1)]
    loop = {row: compiled(t) for row, t in _PLAIN_LOOP.items()}
    vdel = {row: compiled(t) for row, t in _VDEL_EDGE.items()}
    return edge, loop, vdel


_EDGE_F, _LOOP_F, _VDEL_F = _compile_tables()


def build_2sat(g: ColouredGraph, h: Target, *, grouped=False, vertex_deletion=False):
    """2-CNF encoding of "g maps to h" for a target of order at most 2.

    One variable per vertex of g.  With ``vertex_deletion`` the deletion-
    sound row replacements are used; with ``grouped`` each edge occurrence
    becomes one clause group (fresh auxiliary variable per single-loop-row
    edge).  The two flags are mutually exclusive.
    """
    if h.graph.n > 2:
        raise TargetOrderError(f"2-SAT encoding needs order <= 2, got {h.graph.n}")
    if grouped and vertex_deletion:
        raise ValueError("grouped and vertex_deletion are mutually exclusive")
    rows = h.rows
    clauses = []
    groups = [] if grouped else None
    aux = g.n
    edge_table = _VDEL_F if vertex_deletion else _EDGE_F
    for u, v, c in g.edges:
        row = rows.get(c, 0)
        if not grouped:
            if u == v:
                clauses += _LOOP_F[row](u, u)
            else:
                clauses += edge_table[row](u, v)
            continue
        start = len(clauses)
        if u == v:
            clauses += _LOOP_F[row](u, u)
            witness = u
        elif row in (ROW_00, ROW_11):
            c_var = aux
            aux += 1
            want = row == ROW_11
            l_u = 2 * u + (0 if want else 1)
            l_v = 2 * v + (0 if want else 1)
            clauses.append((2 * c_var, l_u))
            clauses.append((2 * c_var, l_v))
            clauses.append((2 * c_var + 1,))
            witness = c_var
        else:
            clauses += edge_table[row](u, v)
            witness = u
        groups.append(Group(tuple(range(start, len(clauses))), witness))
    num_vars = aux if grouped else g.n
    return TwoCnf._unchecked(num_vars, tuple(clauses), tuple(groups) if grouped else None)


def hom_exists_2sat(g: ColouredGraph, h: Target):
    """2-SAT route; agrees with hom_exists_bruteforce for order <= 2 targets."""
    f = build_2sat(g, h)
    assignment = solve_2sat(f)
    if assignment is None:
        return None
    if h.graph.n == 1:
        return Homomorphism((0,) * g.n)
    return Homomorphism(tuple(int(x) for x in assignment.values[: g.n]))


# -- duality detectors --------------------------------------------------------


def _require_two_coloured(g):
    if not g.is_two_coloured():
        bad = sorted(g.colours() - {RED, BLUE})
        raise GraphError(f"detector needs a 2-edge-coloured graph, found {bad}")


def find_rbr_image(g: ColouredGraph):
    """Homomorphic image of a red-blue-red 3-edge path, or None.

    None iff g maps to the blue edge with a red loop at one end and a blue
    loop at the other.  The image degenerates freely: the blue edge may be a
    loop and the two red edges may coincide.
    """
    _require_two_coloured(g)
    red_at = {}
    for u, v, c in g.edges:
        if c == RED:
            red_at.setdefault(u, (u, v, c))
            red_at.setdefault(v, (u, v, c))
    for u, v, c in g.edges:
        if c == BLUE and u in red_at and v in red_at:
            e1, e2 = red_at[u], red_at[v]
            a = e1[0] + e1[1] - u if u in (e1[0], e1[1]) else u
            d = e2[0] + e2[1] - v if v in (e2[0], e2[1]) else v
            return Obstruction(RBR_IMAGE, (a, u, v, d), (e1, (u, v, c), e2))
    return None


def _forest_parity_witness(g, positions, weights, kind):
    """First closed walk of odd total weight over the given edge positions.

    Builds a BFS spanning forest with parity potentials, then scans the
    edges in position order: a weighted loop, or a non-tree edge whose
    endpoints' potentials plus its weight are odd, closes the witness cycle.
    """
    n = g.n
    adj = [[] for _ in range(n)]
    for pos in positions:
        u, v, _ = g.edges[pos]
        if u != v:
            adj[u].append((v, pos))
            adj[v].append((u, pos))
    pot = [-1] * n
    par_v = [-1] * n
    par_e = [-1] * n
    depth = [0] * n
    tree = set()
    for root in range(n):
        if pot[root] != -1:
            continue
        pot[root] = 0
        queue = deque((root,))
        while queue:
            u = queue.popleft()
            for w, pos in adj[u]:
                if pot[w] == -1:
                    pot[w] = pot[u] ^ weights[pos]
                    par_v[w] = u
                    par_e[w] = pos
                    depth[w] = depth[u] + 1
                    tree.add(pos)
                    queue.append(w)
    for pos in positions:
        u, v, _ = g.edges[pos]
        if u == v:
            if weights[pos]:
                return Obstruction(kind, (u,), (g.edges[pos],))
            continue
        if pos in tree:
            continue
        if pot[u] ^ pot[v] ^ weights[pos]:
            path_u, edges_u = [u], []
            path_v, edges_v = [v], []
            a, b = u, v
            while depth[a] > depth[b]:
                edges_u.append(par_e[a])
                a = par_v[a]
                path_u.append(a)
            while depth[b] > depth[a]:
                edges_v.append(par_e[b])
                b = par_v[b]
                path_v.append(b)
            while a != b:
                edges_u.append(par_e[a])
                a = par_v[a]
                path_u.append(a)
                edges_v.append(par_e[b])
                b = par_v[b]
                path_v.append(b)
            vertices = tuple(path_u) + tuple(path_v[-2::-1])
            walk_edges = edges_u + edges_v[::-1] + [pos]
            return Obstruction(
                kind, vertices, tuple(g.edges[p] for p in walk_edges)
            )
    return None


def find_odd_blue_parity_cycle(g: ColouredGraph):
    """Cycle carrying an odd number of blue edges, or None.

    None iff g maps to the blue edge with red loops at both ends.  A blue
    loop is a 1-cycle; a red/blue parallel pair is a 2-cycle of parity one.
    """
    _require_two_coloured(g)
    positions = range(len(g.edges))
    weights = [1 if c == BLUE else 0 for _, _, c in g.edges]
    return _forest_parity_witness(g, positions, weights, ODD_BLUE_PARITY_CYCLE)


def find_all_blue_odd_cycle(g: ColouredGraph):
    """Odd cycle inside the blue subgraph (a blue loop counts), or None.

    None iff g maps to the target with both 0-1 edges and red loops at both
    vertices.
    """
    _require_two_coloured(g)
    positions = [i for i, (_, _, c) in enumerate(g.edges) if c == BLUE]
    weights = [1] * len(g.edges)
    return _forest_parity_witness(g, positions, weights, ALL_BLUE_ODD_CYCLE)


def find_rb_odd_r_path(g: ColouredGraph):
    """Image of a red-B^(2p-1)-red path, p >= 1, or None.

    Caller contract: g has no odd-blue-parity cycle, so the blue subgraph
    is bipartite and can be two-sided per component.  A witness is a pair
    of red edges touching the same blue component on opposite sides; the
    connecting blue path then has odd length.  Under the contract, None
    means g maps to the blue edge with a red loop at one end.
    """
    _require_two_coloured(g)
    if find_odd_blue_parity_cycle(g) is not None:
        raise PreconditionError(
            "find_rb_odd_r_path requires a graph without odd-blue-parity cycles"
        )
    n = g.n
    blue_adj = [[] for _ in range(n)]
    for pos, (u, v, c) in enumerate(g.edges):
        if c == BLUE:
            blue_adj[u].append((v, pos))
            blue_adj[v].append((u, pos))
    red_at = {}
    for u, v, c in g.edges:
        if c == RED:
            red_at.setdefault(u, (u, v, c))
            red_at.setdefault(v, (u, v, c))
    side = [-1] * n
    for root in range(n):
        if side[root] != -1:
            continue
        side[root] = 0
        comp = [root]
        queue = deque((root,))
        while queue:
            u = queue.popleft()
            for w, _ in blue_adj[u]:
                if side[w] == -1:
                    side[w] = side[u] ^ 1
                    comp.append(w)
                    queue.append(w)
        anchored = [w for w in sorted(comp) if w in red_at]
        x = next((w for w in anchored if side[w] == 0), None)
        y = next((w for w in anchored if side[w] == 1), None)
        if x is None or y is None:
            continue
        # Shortest blue path x -> y; odd because the sides differ.
        prev = {x: None}
        queue = deque((x,))
        while queue:
            u = queue.popleft()
            if u == y:
                break
            for w, pos in blue_adj[u]:
                if w not in prev:
                    prev[w] = (u, pos)
                    queue.append(w)
        path_vertices = [y]
        path_edges = []
        node = y
        while prev[node] is not None:
            node, pos = prev[node]
            path_vertices.append(node)
            path_edges.append(g.edges[pos])
        path_vertices.reverse()
        path_edges.reverse()
        e1, e2 = red_at[x], red_at[y]
        a = e1[0] + e1[1] - x if x in (e1[0], e1[1]) else x
        d = e2[0] + e2[1] - y if y in (e2[0], e2[1]) else y
        return Obstruction(
            RB_ODD_R_PATH,
            (a, *path_vertices, d),
            (e1, *path_edges, e2),
        )
    return None


# -- switching to a monochromatic graph ---------------------------------------


def switch_label_classes(g: ColouredGraph, target_colour):
    """Per-component forced switch labels for reaching one colour.

    For each connected component (in component order) returns the pair of
    label classes (either is a valid switch set for that component), or
    None when the component is inconsistent: a wrong-colour loop, or a
    cycle whose colours cannot be reconciled.
    """
    _require_two_coloured(g)
    if target_colour not in (RED, BLUE):
        raise GraphError(f"target colour must be r or b, got {target_colour!r}")
    n = g.n
    adj = [[] for _ in range(n)]
    bad = [False] * n
    for u, v, c in g.edges:
        if u == v:
            if c != target_colour:
                bad[u] = True
            continue
        adj[u].append((v, c == target_colour))
        adj[v].append((u, c == target_colour))
    label = [-1] * n
    out = []
    for root in range(n):
        if label[root] != -1:
            continue
        label[root] = 0
        comp = [root]
        queue = deque((root,))
        ok = True
        while queue:
            u = queue.popleft()
            for w, same in adj[u]:
                want = label[u] if same else label[u] ^ 1
                if label[w] == -1:
                    label[w] = want
                    comp.append(w)
                    queue.append(w)
                elif label[w] != want:
                    ok = False
        if ok and any(bad[v] for v in comp):
            ok = False
        if not ok:
            out.append(None)
        else:
            c0 = tuple(sorted(v for v in comp if label[v] == 0))
            c1 = tuple(sorted(v for v in comp if label[v] == 1))
            out.append((c0, c1))
    return out


def min_switch_to_monochromatic(g: ColouredGraph, target_colour):
    """Globally minimum switch set making every edge target_colour, or None.

    Component-wise there are exactly two candidate sets (complements of one
    another within the component); the smaller is taken, ties by the
    lexicographically smaller tuple.
    """
    classes = switch_label_classes(g, target_colour)
    chosen = []
    for entry in classes:
        if entry is None:
            return None
        c0, c1 = entry
        pick = min((c0, c1), key=lambda t: (len(t), t))
        chosen.extend(pick)
    return tuple(sorted(chosen))
