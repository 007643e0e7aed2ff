"""Independent oracles and enumeration helpers for the test suite.

Everything here is deliberately separate from the library implementations:
truth-table satisfiability, subset-enumeration deletion oracles, brute
vertex cover / multicoloured independent set, and exhaustive families of
small edge-coloured graphs.
"""

from itertools import combinations, product

from ecmod import ColouredGraph

PAIR_STATES = ((), ("r",), ("b",), ("r", "b"))


def tt_satisfiable(num_vars, clauses):
    """Truth-table satisfiability over int-encoded literals (2v / 2v+1)."""
    for bits in range(1 << num_vars):
        ok = True
        for cl in clauses:
            hit = False
            for lit in cl:
                var, negated = lit >> 1, lit & 1
                val = (bits >> var) & 1
                if val != negated:
                    hit = True
                    break
            if not hit:
                ok = False
                break
        if ok:
            return [bool((bits >> i) & 1) for i in range(num_vars)]
    return None


def var_del_oracle(f, k):
    """Exhaustive Variable Deletion Almost 2-SAT; lex-least minimum set."""
    for size in range(k + 1):
        for subset in combinations(range(f.num_vars), size):
            dead = set(subset)
            live = [cl for cl in f.clauses if all((l >> 1) not in dead for l in cl)]
            if tt_satisfiable(f.num_vars, live) is not None:
                return subset
    return None


def group_del_oracle(f, k):
    """Exhaustive Group Deletion Almost 2-SAT; lex-least minimum set."""
    group_of = {}
    for gi, grp in enumerate(f.groups):
        for i in grp.clause_indices:
            group_of[i] = gi
    for size in range(k + 1):
        for subset in combinations(range(len(f.groups)), size):
            dead = set(subset)
            live = [cl for i, cl in enumerate(f.clauses) if group_of[i] not in dead]
            if tt_satisfiable(f.num_vars, live) is not None:
                return subset
    return None


def vc_brute(n, edges, k):
    for size in range(min(n, k) + 1):
        for subset in combinations(range(n), size):
            cover = set(subset)
            if all(u in cover or v in cover for u, v in edges):
                return True
    return False


def mis_brute(n, edges, parts):
    for pick in product(*parts):
        chosen = set(pick)
        if len(chosen) != len(parts):
            continue
        if all(not (u in chosen and v in chosen) for u, v in edges):
            return True
    return False


def graph_from_code(n, pairs, code):
    """Decode one member of the exhaustive family: 4 states per vertex pair
    followed by 4 loop states per vertex, lowest-order slot first."""
    edges = []
    for u, v in pairs:
        state = PAIR_STATES[code & 3]
        code >>= 2
        for c in state:
            edges.append((u, v, c))
    for v in range(n):
        state = PAIR_STATES[code & 3]
        code >>= 2
        for c in state:
            edges.append((v, v, c))
    return ColouredGraph(n, edges)


def family_size(n, loops=True):
    pairs = n * (n - 1) // 2
    slots = pairs + (n if loops else 0)
    return 4 ** slots


def enumerate_family(n, loops=True):
    """All 2-edge-coloured graphs on n vertices; loop states optional."""
    pairs = list(combinations(range(n), 2))
    size = family_size(n, loops)
    for code in range(size):
        if loops:
            yield graph_from_code(n, pairs, code)
        else:
            yield graph_from_code_loopless(n, pairs, code)


def graph_from_code_loopless(n, pairs, code):
    edges = []
    for u, v in pairs:
        state = PAIR_STATES[code & 3]
        code >>= 2
        for c in state:
            edges.append((u, v, c))
    return ColouredGraph(n, edges)


def random_two_coloured(rng, max_n=8, max_m=14, extra_colours=()):
    """Random instance graph; loops and parallel duplicates allowed."""
    n = rng.randint(1, max_n)
    m = rng.randint(0, max_m)
    palette = ["r", "b"] + list(extra_colours)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        edges.append((u, v, rng.choice(palette)))
    return ColouredGraph(n, edges)


def all_cycles(g):
    """Every cycle (closed walk over distinct edge occurrences), as a list
    of edge positions.  Exponential; intended for graphs with <= 6 vertices."""
    edges = g.edges
    cycles = []
    for i, (u, v, _) in enumerate(edges):
        if u == v:
            cycles.append([i])
    by_pair = {}
    for i, (u, v, _) in enumerate(edges):
        if u != v:
            by_pair.setdefault((u, v), []).append(i)
    for pair, positions in by_pair.items():
        for a, b in combinations(positions, 2):
            cycles.append([a, b])
    neighbours = {}
    for (u, v), positions in by_pair.items():
        neighbours.setdefault(u, set()).add(v)
        neighbours.setdefault(v, set()).add(u)

    def vertex_cycles(start):
        out = []

        def dfs(path):
            u = path[-1]
            for w in sorted(neighbours.get(u, ())):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    out.append(list(path))
                elif w > start and w not in path:
                    path.append(w)
                    dfs(path)
                    path.pop()

        dfs([start])
        return out

    for start in range(g.n):
        for cyc in vertex_cycles(start):
            hops = list(zip(cyc, cyc[1:] + cyc[:1]))
            choices = [by_pair[(min(a, b), max(a, b))] for a, b in hops]
            for combo in product(*choices):
                cycles.append(list(combo))
    return cycles


def girth_by_cycle_enumeration(g):
    cycles = all_cycles(g)
    if not cycles:
        return float("inf")
    return min(len(c) for c in cycles)
