"""Edge-coloured multigraphs with loops and parallel edges, plus switching.

Vertices are dense integers 0..n-1.  Edges are a multiset of (u, v, colour)
records normalised to u <= v, so multiset equality between graphs is
well-defined.  Graphs are immutable from the caller's perspective: every
operation returns a new value, which makes them safe to share across threads.

Colours are lowercase tokens over [a-z0-9_].  Two-edge-coloured contexts
(switching) admit only the tokens "r" and "b".
"""

from __future__ import annotations

import re
from collections import Counter, deque
from math import inf

RED = "r"
BLUE = "b"

_COLOUR_RE = re.compile(r"[a-z0-9_]+\Z")
_checked_colours: set[str] = set()


class GraphError(ValueError):
    """Malformed graph data or an operation applied outside its domain."""


class NotTwoColoured(GraphError):
    """Raised by operations defined only for graphs coloured over {r, b}."""


def _check_colour(c):
    if c not in _checked_colours:
        if not isinstance(c, str) or not _COLOUR_RE.match(c):
            raise GraphError(f"bad colour token {c!r}")
        _checked_colours.add(c)
    return c


class ColouredGraph:
    """An edge-coloured multigraph on vertices 0..n-1.

    ``edges`` keeps input order; the position of an edge in the tuple is its
    occurrence identity, which deletion certificates refer to.  Parallel
    edges, including same-colour duplicates, are kept with multiplicity.
    """

    __slots__ = ("n", "edges", "_colours", "_adj", "_key")

    def __init__(self, n, edges=()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = []
        for u, v, c in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v},{c}) has an endpoint outside 0..{n - 1}")
            _check_colour(c)
            norm.append((u, v, c) if u <= v else (v, u, c))
        self.n = n
        self.edges = tuple(norm)
        self._colours = None
        self._adj = None
        self._key = None

    @classmethod
    def _make(cls, n, edges):
        # Internal fast path for results of operations that preserve the
        # invariants (normalisation, endpoint range, colour validity).
        g = object.__new__(cls)
        g.n = n
        g.edges = edges
        g._colours = None
        g._adj = None
        g._key = None
        return g

    # -- identity ---------------------------------------------------------

    def _multiset_key(self):
        if self._key is None:
            self._key = (self.n, tuple(sorted(self.edges)))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ColouredGraph):
            return NotImplemented
        return self._multiset_key() == other._multiset_key()

    def __hash__(self):
        return hash(self._multiset_key())

    def __repr__(self):
        return f"ColouredGraph(n={self.n}, edges={list(self.edges)})"

    # -- basic queries ----------------------------------------------------

    @property
    def num_edges(self):
        return len(self.edges)

    def colours(self):
        if self._colours is None:
            self._colours = frozenset(c for _, _, c in self.edges)
        return self._colours

    def is_two_coloured(self):
        return self.colours() <= {RED, BLUE}

    def _require_two_coloured(self):
        if not self.is_two_coloured():
            bad = sorted(self.colours() - {RED, BLUE})
            raise NotTwoColoured(f"graph uses colours {bad} outside {{r, b}}")

    def adjacency(self):
        """Per-vertex list of (neighbour, edge position); loops appear once."""
        if self._adj is None:
            adj = [[] for _ in range(self.n)]
            for pos, (u, v, _) in enumerate(self.edges):
                adj[u].append((v, pos))
                if u != v:
                    adj[v].append((u, pos))
            self._adj = adj
        return self._adj

    # -- switching --------------------------------------------------------

    def switch_at(self, v):
        """Flip the colour of every non-loop edge incident to v (r <-> b)."""
        self._require_two_coloured()
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")
        flip = {RED: BLUE, BLUE: RED}
        new = tuple(
            (a, b, flip[c]) if (a == v) != (b == v) else (a, b, c)
            for a, b, c in self.edges
        )
        return ColouredGraph._make(self.n, new)

    def switch_set(self, s):
        """Switch at every vertex of s; only edges across the cut change."""
        self._require_two_coloured()
        s = frozenset(s)
        for v in s:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for order {self.n}")
        flip = {RED: BLUE, BLUE: RED}
        new = tuple(
            (a, b, flip[c]) if (a in s) != (b in s) else (a, b, c)
            for a, b, c in self.edges
        )
        return ColouredGraph._make(self.n, new)

    def colour_swapped(self):
        """Exchange the roles of r and b on every edge."""
        self._require_two_coloured()
        swap = {RED: BLUE, BLUE: RED}
        return ColouredGraph._make(self.n, tuple((u, v, swap[c]) for u, v, c in self.edges))

    # -- structure --------------------------------------------------------

    def connected_components(self):
        """Partition of 0..n-1 into maximal colour-blind components.

        Returned in deterministic order, by smallest member.
        """
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            comp = [root]
            seen[root] = True
            queue = deque((root,))
            while queue:
                u = queue.popleft()
                for w, _ in adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_bipartite(self):
        """Colour-blind bipartiteness; any loop is an odd closed walk."""
        if any(u == v for u, v, _ in self.edges):
            return False
        side = [-1] * self.n
        adj = self.adjacency()
        for root in range(self.n):
            if side[root] != -1:
                continue
            side[root] = 0
            queue = deque((root,))
            while queue:
                u = queue.popleft()
                for w, _ in adj[u]:
                    if side[w] == -1:
                        side[w] = side[u] ^ 1
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True

    def girth(self):
        """Length of a shortest cycle of the underlying multigraph.

        Loops are 1-cycles, a parallel pair is a 2-cycle, forests give inf.
        BFS from every vertex; fine at desk scale.
        """
        if any(u == v for u, v, _ in self.edges):
            return 1
        pair_count = Counter((u, v) for u, v, _ in self.edges)
        if any(k >= 2 for k in pair_count.values()):
            return 2
        simple = [[] for _ in range(self.n)]
        for u, v in pair_count:
            simple[u].append(v)
            simple[v].append(u)
        best = inf
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = deque((root,))
            while queue:
                u = queue.popleft()
                if 2 * dist[u] >= best - 1:
                    continue
                for w in simple[u]:
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        cand = dist[u] + dist[w] + 1
                        if cand < best:
                            best = cand
        return best

    # -- modification -----------------------------------------------------

    def delete_vertices(self, s):
        """Remove the vertices of s and their edges.

        Returns (graph, old_to_new) where old_to_new maps every surviving
        vertex to its new dense label.
        """
        s = frozenset(s)
        for v in s:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for order {self.n}")
        keep = [v for v in range(self.n) if v not in s]
        old_to_new = {v: i for i, v in enumerate(keep)}
        new_edges = tuple(
            (old_to_new[u], old_to_new[v], c)
            for u, v, c in self.edges
            if u not in s and v not in s
        )
        return ColouredGraph._make(len(keep), new_edges), old_to_new

    def delete_edge_positions(self, positions):
        positions = frozenset(positions)
        for p in positions:
            if not 0 <= p < len(self.edges):
                raise GraphError(f"edge position {p} out of range")
        new = tuple(e for i, e in enumerate(self.edges) if i not in positions)
        return ColouredGraph._make(self.n, new)

    def induced(self, vertices):
        """Induced subgraph on the given vertices, relabelled densely."""
        return self.delete_vertices(set(range(self.n)) - set(vertices))[0]

    # -- edge identities --------------------------------------------------

    def edge_ids(self):
        """Occurrence identity (u, v, colour, occurrence-index) per edge.

        The occurrence index counts identical records in input order, so
        deletion certificates survive serialisation round trips.
        """
        seen = Counter()
        ids = []
        for u, v, c in self.edges:
            ids.append((u, v, c, seen[(u, v, c)]))
            seen[(u, v, c)] += 1
        return tuple(ids)

    def positions_for_edge_ids(self, ids):
        lookup = {eid: pos for pos, eid in enumerate(self.edge_ids())}
        positions = []
        for eid in ids:
            if eid not in lookup:
                raise GraphError(f"edge id {eid} not present in graph")
            positions.append(lookup[eid])
        return tuple(positions)


# -- homomorphism targets --------------------------------------------------

# Row masks describing the edges a colour has in an order-2 target with
# vertex set {0, 1}: a loop at 0, the 0-1 edge, a loop at 1.
ROW_00 = 1
ROW_01 = 2
ROW_11 = 4

_UNSET = object()


class Target:
    """A validated homomorphism target.

    Same-colour parallel edges are collapsed (they are irrelevant in a
    target).  For order <= 2 the per-colour row masks feeding the 2-SAT
    encodings are precomputed, and ``canonical_name`` is set when the graph
    matches one of the twelve named order-<=2 cores up to a vertex swap
    and/or a colour swap.
    """

    __slots__ = ("graph", "rows", "_cname")

    def __init__(self, graph):
        if graph.n < 1:
            raise GraphError("a target needs at least one vertex")
        collapsed = tuple(dict.fromkeys(graph.edges))
        self.graph = ColouredGraph(graph.n, collapsed)
        self.rows = self._row_masks()
        self._cname = _UNSET

    @property
    def canonical_name(self):
        if self._cname is _UNSET:
            self._cname = _match_core_name(self) if self.order <= 2 else None
        return self._cname

    @classmethod
    def from_edges(cls, n, edges):
        return cls(ColouredGraph(n, edges))

    @property
    def order(self):
        return self.graph.n

    def colours(self):
        return self.graph.colours()

    def _row_masks(self):
        if self.graph.n > 2:
            return None
        rows = {}
        for u, v, c in self.graph.edges:
            if self.graph.n == 1:
                # Single vertex plays the role of "true".
                rows[c] = rows.get(c, 0) | ROW_11
            elif u == v:
                rows[c] = rows.get(c, 0) | (ROW_00 if u == 0 else ROW_11)
            else:
                rows[c] = rows.get(c, 0) | ROW_01
        return rows

    def colour_swapped(self):
        return Target(self.graph.colour_swapped())

    def vertex_swapped(self):
        if self.order == 1:
            return self
        g = self.graph
        return Target(ColouredGraph(g.n, tuple((1 - v, 1 - u, c) for u, v, c in g.edges)))

    def __eq__(self, other):
        if not isinstance(other, Target):
            return NotImplemented
        return self.graph == other.graph

    def __hash__(self):
        return hash(self.graph)

    def __repr__(self):
        name = f" {self.canonical_name}" if self.canonical_name else ""
        return f"Target(order={self.order}{name}, edges={list(self.graph.edges)})"


def make_order1_target(loops):
    """Order-1 target with the given loop colours, e.g. "rb" or ""."""
    return Target.from_edges(1, tuple((0, 0, c) for c in loops))


def make_order2_target(alpha, beta, gamma):
    """Order-2 target: alpha = 0-1 edge colours, beta/gamma = loops at 0/1."""
    edges = [(0, 1, c) for c in alpha]
    edges += [(0, 0, c) for c in beta]
    edges += [(1, 1, c) for c in gamma]
    return Target.from_edges(2, edges)


def _build_core_registry():
    cores = {
        "H1_rb": make_order1_target("rb"),
        "H1_b": make_order1_target("b"),
        "H1_-": make_order1_target(""),
        "H2-_r,b": make_order2_target("", "r", "b"),
        "H2b_-,-": make_order2_target("b", "", ""),
        "H2b_r,b": make_order2_target("b", "r", "b"),
        "H2b_r,-": make_order2_target("b", "r", ""),
        "H2b_r,r": make_order2_target("b", "r", "r"),
        "H2rb_-,-": make_order2_target("rb", "", ""),
        "H2rb_r,b": make_order2_target("rb", "r", "b"),
        "H2rb_r,-": make_order2_target("rb", "r", ""),
        "H2rb_r,r": make_order2_target("rb", "r", "r"),
    }
    return cores


_CORES = None


def core_targets():
    """The twelve 2-edge-coloured cores of order at most 2, by name."""
    global _CORES
    if _CORES is None:
        _CORES = _build_core_registry()
    return dict(_CORES)


def _edge_set(target):
    return frozenset(target.graph.edges)


def _match_core_name(target):
    name, _, _ = match_core(target)
    return name


def match_core(target):
    """Match a target against the twelve cores up to vertex and colour swap.

    Returns (name, colour_swapped, vertex_swapped) or (None, False, False).
    When colour_swapped is true, instances must have r and b exchanged before
    running a solver written for the canonical form.
    """
    if target.order > 2 or not target.graph.is_two_coloured():
        return None, False, False
    by_edges = {}
    for name, core in core_targets().items():
        if core.order == target.order:
            by_edges.setdefault(_edge_set(core), name)
    candidates = [(target, False, False), (target.colour_swapped(), True, False)]
    if target.order == 2:
        candidates.append((target.vertex_swapped(), False, True))
        candidates.append((target.vertex_swapped().colour_swapped(), True, True))
    for cand, cswap, vswap in candidates:
        name = by_edges.get(_edge_set(cand))
        if name is not None:
            return name, cswap, vswap
    return None, False, False
