"""2-CNF satisfiability and the deletion variants behind the FPT solvers.

Literals are stored as ints for speed: variable v is ``2*v`` when positive
and ``2*v + 1`` when negated, so negation is ``lit ^ 1``.  The ``Literal``
named tuple is the friendly form at API boundaries.

Satisfiability uses the implication graph: clause (a + b) contributes the
arcs ~a -> b and ~b -> a, a unit clause (a) the single arc ~a -> a.  The
formula is satisfiable iff no variable shares a strongly connected component
with its negation, and a satisfying assignment reads off the SCC order.

The deletion variants (remove <= k variables with their clauses, or <= k
whole clause groups) are solved exactly by branch-and-prune: when the live
clauses are unsatisfiable, a contradiction chain is extracted and every
solution must delete something on it, so we branch over the chain, depth at
most k, falling back to plain subset enumeration if a chain is ever too
wide.  No FPT running-time bound is claimed; answers are exact and the
returned set is the lexicographically least among the minimum-size ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

_ENUM_FALLBACK_WIDTH = 32


class Literal(NamedTuple):
    var: int
    positive: bool

    def negated(self):
        return Literal(self.var, not self.positive)

    def encode(self):
        return 2 * self.var + (0 if self.positive else 1)

    @classmethod
    def decode(cls, lit):
        return cls(lit >> 1, lit & 1 == 0)


def lit(var, positive=True):
    return 2 * var + (0 if positive else 1)


def neg(lit_):
    return lit_ ^ 1


@dataclass(frozen=True)
class Group:
    """A clause group: indices into the formula plus its witness variable.

    The witness occurs (in either polarity) in every clause of the group.
    """

    clause_indices: tuple
    witness: int


class TwoCnf:
    """A 2-CNF formula, optionally with a clause-group partition."""

    __slots__ = ("num_vars", "clauses", "groups")

    def __init__(self, num_vars, clauses, groups=None):
        clauses = tuple(tuple(cl) for cl in clauses)
        for cl in clauses:
            if not 1 <= len(cl) <= 2:
                raise ValueError(f"clause {cl} is not a 1- or 2-literal clause")
            for l in cl:
                if not 0 <= l < 2 * num_vars:
                    raise ValueError(f"literal {l} outside {num_vars} variables")
        self.num_vars = num_vars
        self.clauses = clauses
        if groups is not None:
            groups = tuple(groups)
            covered = sorted(i for g in groups for i in g.clause_indices)
            if covered != list(range(len(clauses))):
                raise ValueError("groups do not partition the clause indices")
            for g in groups:
                for i in g.clause_indices:
                    if all(l >> 1 != g.witness for l in clauses[i]):
                        raise ValueError(
                            f"witness variable {g.witness} missing from clause {i}"
                        )
        self.groups = groups

    @classmethod
    def _unchecked(cls, num_vars, clauses, groups=None):
        # Internal fast path for encoders whose output is valid by
        # construction (the public constructor validates).
        f = object.__new__(cls)
        f.num_vars = num_vars
        f.clauses = clauses
        f.groups = groups
        return f

    def __repr__(self):
        return (
            f"TwoCnf(num_vars={self.num_vars}, clauses={len(self.clauses)}, "
            f"groups={'none' if self.groups is None else len(self.groups)})"
        )


@dataclass(frozen=True)
class Assignment:
    """Truth values per variable; deleted variables simply carry no meaning."""

    values: tuple

    def satisfies(self, clauses):
        return formula_satisfied(clauses, self.values)


def formula_satisfied(clauses, values):
    for cl in clauses:
        for l in cl:
            if (l & 1) == 0:
                if values[l >> 1]:
                    break
            elif not values[l >> 1]:
                break
        else:
            return False
    return True


def _implication_arcs(num_vars, clauses):
    """Adjacency lists over 2*num_vars literal nodes, tagging clause indices."""
    adj = [[] for _ in range(2 * num_vars)]
    for idx, cl in enumerate(clauses):
        if len(cl) == 1:
            a = cl[0]
            adj[a ^ 1].append((a, idx))
        else:
            a, b = cl
            adj[a ^ 1].append((b, idx))
            adj[b ^ 1].append((a, idx))
    return adj


def _solve_values(num_vars, clauses):
    """Core solver: satisfying value list, or None if unsatisfiable."""
    nn = 2 * num_vars
    adj = [[] for _ in range(nn)]
    for cl in clauses:
        if len(cl) == 1:
            a = cl[0]
            adj[a ^ 1].append(a)
        else:
            a, b = cl
            adj[a ^ 1].append(b)
            adj[b ^ 1].append(a)

    # Iterative Tarjan.  Roots are taken negated-literal first so that an
    # unconstrained variable lands in the "false" side deterministically
    # (empty formula => all-false assignment).
    index = [-1] * nn
    low = [0] * nn
    comp = [-1] * nn
    on_stack = bytearray(nn)
    stack = []
    counter = 0
    ncomp = 0
    work = []
    for v0 in range(num_vars):
        for root in (2 * v0 + 1, 2 * v0):
            if index[root] != -1:
                continue
            work.append((root, 0))
            while work:
                v, pi = work[-1]
                if pi == 0:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = 1
                descend = False
                av = adj[v]
                while pi < len(av):
                    w = av[pi]
                    pi += 1
                    if index[w] == -1:
                        work[-1] = (v, pi)
                        work.append((w, 0))
                        descend = True
                        break
                    if on_stack[w] and low[w] < low[v]:
                        low[v] = low[w]
                if descend:
                    continue
                work.pop()
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = 0
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]

    values = []
    for v in range(num_vars):
        cp, cn = comp[2 * v], comp[2 * v + 1]
        if cp == cn:
            return None
        # Tarjan numbers sinks first; truth goes to the literal closer to a sink.
        values.append(cp < cn)
    return values


def solve_2sat(f: TwoCnf) -> Optional[Assignment]:
    """Satisfying assignment or None; deterministic given the formula."""
    values = _solve_values(f.num_vars, f.clauses)
    if values is None:
        return None
    return Assignment(tuple(values))


def _contradiction_chain(num_vars, indexed_clauses):
    """Clause indices forming an unsatisfiable implication chain.

    Finds a variable x with x =>* ~x and ~x =>* x and returns the clause
    indices along two shortest such implication paths.  Any deletion set
    that repairs the formula must remove a variable (or group) touching one
    of these clauses, which is what the branch step relies on.
    """
    clauses = [cl for _, cl in indexed_clauses]
    values = _solve_values(num_vars, clauses)
    if values is not None:
        return None
    adj = [[] for _ in range(2 * num_vars)]
    for local, (orig, cl) in enumerate(indexed_clauses):
        if len(cl) == 1:
            a = cl[0]
            adj[a ^ 1].append((a, orig))
        else:
            a, b = cl
            adj[a ^ 1].append((b, orig))
            adj[b ^ 1].append((a, orig))

    def shortest_path(src, dst):
        prev = {src: None}
        queue = deque((src,))
        while queue:
            u = queue.popleft()
            if u == dst:
                break
            for w, cidx in adj[u]:
                if w not in prev:
                    prev[w] = (u, cidx)
                    queue.append(w)
        if dst not in prev:
            return None
        out = []
        node = dst
        while prev[node] is not None:
            node, cidx = prev[node]
            out.append(cidx)
        return out

    for v in range(num_vars):
        down = shortest_path(2 * v, 2 * v + 1)
        if down is None:
            continue
        up = shortest_path(2 * v + 1, 2 * v)
        if up is not None:
            return tuple(dict.fromkeys(down + up))
    raise AssertionError("unsatisfiable formula without a contradiction chain")


def _search_deletions(num_vars, clauses, owners, num_objects, budget, live_of):
    """Shared search for the two deletion variants.

    ``owners(cidx)`` maps a clause index to the deletable objects covering
    it; ``live_of(deleted)`` yields the (index, clause) pairs that survive.
    Returns every deletion set of size <= budget found at this depth whose
    removal makes the formula satisfiable (a superset of all minimum ones).
    """
    found = set()
    visited = set()

    def rec(deleted, remaining):
        if deleted in visited:
            return
        visited.add(deleted)
        live = live_of(deleted)
        chain = _contradiction_chain(num_vars, live)
        if chain is None:
            found.add(deleted)
            return
        if remaining == 0:
            return
        branch = sorted({o for cidx in chain for o in owners(cidx) if o not in deleted})
        if len(branch) > _ENUM_FALLBACK_WIDTH:
            rest = [o for o in range(num_objects) if o not in deleted]
            for size in range(1, remaining + 1):
                for extra in combinations(rest, size):
                    cand = deleted | frozenset(extra)
                    if _contradiction_chain(num_vars, live_of(cand)) is None:
                        found.add(cand)
            return
        for obj in branch:
            rec(deleted | {obj}, remaining - 1)

    rec(frozenset(), budget)
    return found


def _pick_least(found):
    best = min(found, key=lambda s: (len(s), tuple(sorted(s))))
    return tuple(sorted(best))


def var_del_almost_2sat(f: TwoCnf, k: int):
    """Smallest set of <= k variables whose deletion leaves f satisfiable.

    Deleting a variable removes every clause containing it.  Returns a
    sorted variable tuple or None; exact, lex-least among minimum ones.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    clause_vars = [frozenset(l >> 1 for l in cl) for cl in f.clauses]

    def live_of(deleted):
        return [
            (i, cl)
            for i, cl in enumerate(f.clauses)
            if not (clause_vars[i] & deleted)
        ]

    def owners(cidx):
        return clause_vars[cidx]

    for budget in range(k + 1):
        found = _search_deletions(
            f.num_vars, f.clauses, owners, f.num_vars, budget, live_of
        )
        if found:
            return _pick_least(found)
    return None


def group_del_almost_2sat(f: TwoCnf, k: int):
    """Smallest set of <= k clause groups whose deletion leaves f satisfiable.

    Returns a sorted tuple of group indices or None; exact, lex-least.
    """
    if f.groups is None:
        raise ValueError("formula has no clause groups")
    if k < 0:
        raise ValueError("budget must be non-negative")
    group_of = {}
    for gi, g in enumerate(f.groups):
        for i in g.clause_indices:
            group_of[i] = gi

    def live_of(deleted):
        return [
            (i, cl) for i, cl in enumerate(f.clauses) if group_of[i] not in deleted
        ]

    def owners(cidx):
        return (group_of[cidx],)

    for budget in range(k + 1):
        found = _search_deletions(
            f.num_vars, f.clauses, owners, len(f.groups), budget, live_of
        )
        if found:
            return _pick_least(found)
    return None


def group_to_var_reduction(f: TwoCnf):
    """Rename variables per group and link the copies with equality clauses.

    Every occurrence of variable x inside group g_i becomes a fresh copy
    x_i; for each pair of groups in which x occurs, the two clauses
    (~x_i + x_j) and (x_i + ~x_j) pin the copies equal.  Deleting the copy
    of a group's witness variable then removes exactly that group's clauses,
    so the instance is a positive Variable Deletion one for budget k iff the
    input is a positive Group Deletion one for budget k.

    Returns (formula, copy_to_group) where copy_to_group maps each new
    variable index to the group index it belongs to.
    """
    if f.groups is None:
        raise ValueError("formula has no clause groups")
    group_of = {}
    for gi, g in enumerate(f.groups):
        for i in g.clause_indices:
            group_of[i] = gi

    copy_index = {}
    copy_to_group = {}

    def copy_var(x, gi):
        key = (x, gi)
        if key not in copy_index:
            copy_index[key] = len(copy_index)
            copy_to_group[copy_index[key]] = gi
        return copy_index[key]

    new_clauses = []
    for i, cl in enumerate(f.clauses):
        gi = group_of[i]
        new_clauses.append(
            tuple(2 * copy_var(l >> 1, gi) + (l & 1) for l in cl)
        )

    # Equality clauses only between copies that actually occur; absent copies
    # are unconstrained, so this is equivalent to linking all pairs.
    occurrences = {}
    for (x, gi), nv in copy_index.items():
        occurrences.setdefault(x, []).append((gi, nv))
    for x in sorted(occurrences):
        copies = sorted(occurrences[x])
        for (_, a), (_, b) in combinations(copies, 2):
            new_clauses.append((2 * a + 1, 2 * b))
            new_clauses.append((2 * a, 2 * b + 1))

    return TwoCnf(len(copy_index), new_clauses), copy_to_group


def dimacs_dump(f: TwoCnf) -> str:
    """DIMACS-like debug text; comment lines carry group ids.  Not a
    compatibility promise."""
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    group_of = {}
    if f.groups is not None:
        for gi, g in enumerate(f.groups):
            for i in g.clause_indices:
                group_of[i] = gi
    for i, cl in enumerate(f.clauses):
        if i in group_of:
            lines.append(f"c group {group_of[i]}")
        lines.append(
            " ".join(str((l >> 1) + 1 if (l & 1) == 0 else -((l >> 1) + 1)) for l in cl)
            + " 0"
        )
    return "\n".join(lines) + "\n"
