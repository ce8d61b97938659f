"""Exact shortest-word searches over the power-set graph, plus verifiers.

Subsets of states are encoded as integer bit masks.  All searches run a
level-synchronized breadth-first search expanding letters in declared
alphabet order, which makes the returned witness the lexicographically
least among all shortest ones.  A search either finds an exact answer,
reports a definite negative, or stops with `budget_exceeded`; it never
returns a wrong length.

The "careful" applicability rule (a letter may be applied to an active
set only if it is defined on every active state) is used for pfa in all
subset searches; for dfa it degenerates to the total case.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from .automata import DFA, PFA, Automaton, StateSet, Word

FOUND = "found"
BLIND = "blind"
NOT_SYNCHRONIZING = "not_synchronizing"
BUDGET_EXCEEDED = "budget_exceeded"


class BudgetExceededError(RuntimeError):
    """Raised by operations that cannot return a partial answer."""


class BlindSubsetError(ValueError):
    """Raised when an operation requires a carefully synchronizable subset."""


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10_000_000
    max_length: int = 10_000_000
    max_memory: int = 8 << 30  # advisory byte cap

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_length <= 0 or self.max_memory <= 0:
            raise ValueError("budget bounds must be positive")


DEFAULT_BUDGET = SearchBudget()


@dataclass
class SearchResult:
    status: str
    length: Optional[int] = None
    witness: Optional[Word] = None
    explored: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def found(self) -> bool:
        return self.status == FOUND


@lru_cache(maxsize=128)
def transition_masks(a: Automaton) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Per letter: successor mask for each state, and the definedness mask."""
    succ = []
    defined = []
    for x in range(len(a.alphabet)):
        col = []
        dmask = 0
        for s in a.states:
            m = 0
            for t in a.delta[s][x]:
                m |= 1 << t
            col.append(m)
            if m:
                dmask |= 1 << s
        succ.append(tuple(col))
        defined.append(dmask)
    return tuple(succ), tuple(defined)


def mask_of(states: Iterable[int]) -> int:
    m = 0
    for s in states:
        m |= 1 << s
    return m


def set_of(mask: int) -> StateSet:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


def _node_bytes(n: int) -> int:
    # rough per-node estimate: dict slot + int object + parent tuple
    return 120 + 2 * (n // 4)


def _bfs_to_singleton(a: Automaton, start: int, careful: bool,
                      budget: SearchBudget) -> SearchResult:
    t0 = time.perf_counter()
    succ, defined = transition_masks(a)
    letters = range(len(a.alphabet))
    if start.bit_count() == 1:
        return SearchResult(FOUND, 0, (), 1, time.perf_counter() - t0)
    parents: dict[int, tuple[int, int]] = {}
    visited = {start}
    frontier = [start]
    per_node = _node_bytes(a.n)
    depth = 0
    while frontier:
        depth += 1
        if depth > budget.max_length:
            return SearchResult(BUDGET_EXCEEDED, explored=len(visited),
                                elapsed=time.perf_counter() - t0)
        nxt = []
        for t in frontier:
            for x in letters:
                if careful and (t & defined[x]) != t:
                    continue
                col = succ[x]
                u = 0
                tt = t
                while tt:
                    b = tt & -tt
                    u |= col[b.bit_length() - 1]
                    tt ^= b
                if not u or u in visited:
                    continue
                visited.add(u)
                parents[u] = (t, x)
                if u.bit_count() == 1:
                    word = [x]
                    node = t
                    while node != start:
                        node, y = parents[node]
                        word.append(y)
                    word.reverse()
                    return SearchResult(FOUND, depth, tuple(word), len(visited),
                                        time.perf_counter() - t0)
                nxt.append(u)
        if len(visited) > budget.max_nodes or len(visited) * per_node > budget.max_memory:
            return SearchResult(BUDGET_EXCEEDED, explored=len(visited),
                                elapsed=time.perf_counter() - t0)
        frontier = nxt
    return SearchResult("exhausted", explored=len(visited),
                        elapsed=time.perf_counter() - t0)


def _finish(res: SearchResult, negative: str) -> SearchResult:
    if res.status == "exhausted":
        res.status = negative
    return res


def shortest_reset(a: Automaton, budget: Optional[SearchBudget] = None) -> SearchResult:
    """Shortest word merging all states of a dfa into one."""
    if a.kind != DFA:
        raise ValueError("shortest_reset requires a dfa")
    budget = budget or DEFAULT_BUDGET
    return _finish(_bfs_to_singleton(a, (1 << a.n) - 1, False, budget), NOT_SYNCHRONIZING)


def shortest_careful_reset(a: Automaton,
                           budget: Optional[SearchBudget] = None) -> SearchResult:
    """Shortest careful reset word of the full state set of a dfa/pfa."""
    if a.kind not in (DFA, PFA):
        raise ValueError("shortest_careful_reset requires a dfa or pfa")
    budget = budget or DEFAULT_BUDGET
    return _finish(_bfs_to_singleton(a, (1 << a.n) - 1, True, budget), NOT_SYNCHRONIZING)


def shortest_subset_reset(a: Automaton, subset: Iterable[int],
                          budget: Optional[SearchBudget] = None) -> SearchResult:
    """Shortest careful reset word of a subset (plain reset word for dfa)."""
    if a.kind not in (DFA, PFA):
        raise ValueError("subset search requires a dfa or pfa; use directing_word for nfa")
    start = mask_of(subset)
    if start == 0:
        raise ValueError("subset must be nonempty")
    if start >= 1 << a.n:
        raise IndexError("subset member out of range")
    budget = budget or DEFAULT_BUDGET
    return _finish(_bfs_to_singleton(a, start, True, budget), BLIND)


def is_blind(a: Automaton, subset: Iterable[int],
             budget: Optional[SearchBudget] = None) -> bool:
    """True iff no careful reset word of the subset exists."""
    res = shortest_subset_reset(a, subset, budget)
    if res.status == BUDGET_EXCEEDED:
        raise BudgetExceededError("blindness undecided within budget")
    return res.status == BLIND


def replay(a: Automaton, start: Iterable[int], word: Sequence[int],
           careful: bool = True) -> Optional[StateSet]:
    """Apply a word under the careful rule; None if some letter is inapplicable."""
    succ, defined = transition_masks(a)
    t = mask_of(start)
    for x in word:
        if careful and (t & defined[x]) != t:
            return None
        u = 0
        tt = t
        while tt:
            b = tt & -tt
            u |= succ[x][b.bit_length() - 1]
            tt ^= b
        t = u
    return set_of(t)


@dataclass
class SubsetGraph:
    """Materialized reachable part of the subset graph of one source set."""

    source: int
    nodes: list[int]                       # masks in BFS discovery order
    index: dict[int, int]
    edges: list[list[tuple[int, int]]]     # per node: (letter, target index)
    level: list[int]
    parent: list[int]                      # discovery parent index, -1 for source
    parent_letter: list[int]

    def word_to(self, i: int) -> Word:
        out = []
        while self.parent[i] != -1:
            out.append(self.parent_letter[i])
            i = self.parent[i]
        out.reverse()
        return tuple(out)


def build_subset_graph(a: Automaton, subset: Iterable[int], careful: bool = True,
                       budget: Optional[SearchBudget] = None) -> SubsetGraph:
    budget = budget or DEFAULT_BUDGET
    succ, defined = transition_masks(a)
    start = mask_of(subset)
    if not start:
        raise ValueError("subset must be nonempty")
    g = SubsetGraph(start, [start], {start: 0}, [[]], [0], [-1], [-1])
    frontier = [0]
    depth = 0
    per_node = _node_bytes(a.n)
    while frontier:
        depth += 1
        nxt = []
        for i in frontier:
            t = g.nodes[i]
            for x in range(len(a.alphabet)):
                if careful and (t & defined[x]) != t:
                    continue
                u = 0
                tt = t
                while tt:
                    b = tt & -tt
                    u |= succ[x][b.bit_length() - 1]
                    tt ^= b
                if not u:
                    continue
                j = g.index.get(u)
                if j is None:
                    j = len(g.nodes)
                    g.index[u] = j
                    g.nodes.append(u)
                    g.edges.append([])
                    g.level.append(depth)
                    g.parent.append(i)
                    g.parent_letter.append(x)
                    nxt.append(j)
                g.edges[i].append((x, j))
        if len(g.nodes) > budget.max_nodes or len(g.nodes) * per_node > budget.max_memory:
            raise BudgetExceededError(
                f"subset graph exceeds budget at {len(g.nodes)} nodes")
        frontier = nxt
    return g


def relevant_part(a: Automaton, subset: Iterable[int],
                  budget: Optional[SearchBudget] = None
                  ) -> tuple[StateSet, Automaton]:
    """States active along some prefix of some careful reset word of the subset.

    Returns the state set together with the sub-automaton restricted to it
    (transitions leaving the set become undefined; states are re-indexed
    in ascending order of the original indices, labels preserved).
    """
    if a.kind not in (DFA, PFA):
        raise ValueError("relevant_part requires a dfa or pfa")
    g = build_subset_graph(a, subset, careful=True, budget=budget)
    singletons = [i for i, m in enumerate(g.nodes) if m.bit_count() == 1]
    if not singletons:
        raise BlindSubsetError("subset is blind: no careful reset word exists")
    preds: list[list[int]] = [[] for _ in g.nodes]
    for i, out in enumerate(g.edges):
        for _, j in out:
            preds[j].append(i)
    alive = [False] * len(g.nodes)
    stack = list(singletons)
    for i in stack:
        alive[i] = True
    while stack:
        j = stack.pop()
        for i in preds[j]:
            if not alive[i]:
                alive[i] = True
                stack.append(i)
    united = 0
    for i, m in enumerate(g.nodes):
        if alive[i]:
            united |= m
    states = sorted(set_of(united))
    reindex = {s: i for i, s in enumerate(states)}
    keep = set(states)
    delta = tuple(
        tuple(
            frozenset(reindex[t] for t in a.delta[s][x] if t in keep)
            if a.delta[s][x] <= keep else frozenset()
            for x in range(len(a.alphabet))
        )
        for s in states
    )
    labels = tuple(a.label(s) for s in states) if a.state_labels else None
    sub = Automaton(PFA, len(states), a.alphabet, delta, labels)
    return frozenset(states), sub


def is_swap_congruence(a: Automaton, partition: Sequence[Iterable[int]]) -> bool:
    """Check that a partition is a congruence mapped injectively by every letter."""
    if a.kind != DFA:
        raise ValueError("swap congruence is defined for dfa")
    blocks = [frozenset(b) for b in partition]
    block_of: dict[int, int] = {}
    for i, b in enumerate(blocks):
        for s in b:
            if s in block_of:
                raise ValueError("partition blocks must be disjoint")
            block_of[s] = i
    if set(block_of) != set(a.states):
        raise ValueError("partition must cover all states")
    for b in blocks:
        for x in range(len(a.alphabet)):
            images = [next(iter(a.delta[s][x])) for s in b]
            if len(set(images)) != len(images):
                return False  # two congruent states merge
            if len({block_of[t] for t in images}) != 1:
                return False  # not a congruence
    return True


@dataclass(frozen=True)
class TransversalViolation:
    word: Word
    subset: StateSet


def check_transversal_partition(a: Automaton, subset: Iterable[int],
                                partition: Sequence[Iterable[int]],
                                budget: Optional[SearchBudget] = None
                                ) -> Optional[TransversalViolation]:
    """Verify the transversal-partition property of a subset instance.

    Traverses every set reachable from the subset by words that keep all
    active states inside the union of the blocks (careful applicability
    for pfa).  Passes (returns None) iff each such set is a synchronizing
    singleton or meets every block exactly once.  Raises BlindSubsetError
    when no singleton is reachable inside the block domain at all.
    """
    if a.kind not in (DFA, PFA):
        raise ValueError("transversal check requires a dfa or pfa")
    budget = budget or DEFAULT_BUDGET
    blocks = [mask_of(b) for b in partition]
    seen = 0
    for b in blocks:
        if seen & b:
            raise ValueError("partition blocks must be disjoint")
        seen |= b
    start = mask_of(subset)
    if not start:
        raise ValueError("subset must be nonempty")
    if len(blocks) != start.bit_count():
        raise ValueError("need exactly one block per subset state")
    if start & ~seen:
        raise ValueError("subset must lie inside the union of the blocks")
    domain = seen
    succ, defined = transition_masks(a)

    def verdict(t: int) -> bool:
        return t.bit_count() == 1 or all((t & b).bit_count() == 1 for b in blocks)

    parents: dict[int, tuple[int, int]] = {}

    def word_to(t: int) -> Word:
        out = []
        while t != start:
            t, x = parents[t]
            out.append(x)
        out.reverse()
        return tuple(out)

    if not verdict(start):
        return TransversalViolation((), set_of(start))
    synchronizable = start.bit_count() == 1
    visited = {start}
    frontier = [start] if start.bit_count() > 1 else []
    per_node = _node_bytes(a.n)
    while frontier:
        nxt = []
        for t in frontier:
            for x in range(len(a.alphabet)):
                if (t & defined[x]) != t:
                    continue
                u = 0
                tt = t
                while tt:
                    b = tt & -tt
                    u |= succ[x][b.bit_length() - 1]
                    tt ^= b
                if u & ~domain or u in visited:
                    continue
                visited.add(u)
                parents[u] = (t, x)
                if not verdict(u):
                    return TransversalViolation(word_to(u), set_of(u))
                if u.bit_count() == 1:
                    synchronizable = True
                    continue  # singleton images stay singletons
                nxt.append(u)
        if len(visited) > budget.max_nodes or len(visited) * per_node > budget.max_memory:
            raise BudgetExceededError("transversal traversal exceeds budget")
        frontier = nxt
    if not synchronizable:
        raise BlindSubsetError(
            "no careful reset word inside the block domain "
            "(subset blind or blocks do not cover the relevant part)")
    return None


def count_shortest_reset_words(a: Automaton, subset: Iterable[int],
                               budget: Optional[SearchBudget] = None
                               ) -> Optional[tuple[int, int]]:
    """Shortest careful reset length of the subset and the number of
    distinct words of that length, or None if the subset is blind.

    Counts words (not subset-graph paths) by level-synchronized dynamic
    programming, so a result of (L, 1) proves the shortest word unique.
    """
    budget = budget or DEFAULT_BUDGET
    res = shortest_subset_reset(a, subset, budget)
    if res.status == BUDGET_EXCEEDED:
        raise BudgetExceededError("word counting undecided within budget")
    if not res.found:
        return None
    if res.length == 0:
        return 0, 1
    succ, defined = transition_masks(a)
    start = mask_of(subset)
    ways: dict[int, int] = {start: 1}
    hits = 0
    for depth in range(1, res.length + 1):
        nxt: dict[int, int] = {}
        for t, count in ways.items():
            for x in range(len(a.alphabet)):
                if (t & defined[x]) != t:
                    continue
                u = 0
                tt = t
                while tt:
                    b = tt & -tt
                    u |= succ[x][b.bit_length() - 1]
                    tt ^= b
                if u.bit_count() == 1:
                    if depth == res.length:  # no singleton exists earlier
                        hits += count
                else:
                    nxt[u] = nxt.get(u, 0) + count
        ways = nxt
    return res.length, hits


# --- directing words for nfa -------------------------------------------------

D1 = "d1"
D2 = "d2"
D3 = "d3"


def directing_word(a: Automaton, mode: str,
                   budget: Optional[SearchBudget] = None) -> SearchResult:
    """Shortest word directing an nfa in the chosen sense.

    d1: all per-state images equal one singleton; d2: all images equal;
    d3: some state lies in every image.  The search tracks the tuple of
    per-start images, so it is meant for small n (about 8 or less).
    """
    if mode not in (D1, D2, D3):
        raise ValueError(f"unknown directing mode {mode!r}")
    budget = budget or DEFAULT_BUDGET
    t0 = time.perf_counter()
    succ, _ = transition_masks(a)
    n = a.n
    letters = range(len(a.alphabet))

    def hit(node: tuple[int, ...]) -> bool:
        if mode == D1:
            first = node[0]
            return first.bit_count() == 1 and all(m == first for m in node)
        if mode == D2:
            first = node[0]
            return all(m == first for m in node)
        common = ~0
        for m in node:
            common &= m
        return common != 0

    start = tuple(1 << s for s in range(n))
    if hit(start):
        return SearchResult(FOUND, 0, (), 1, time.perf_counter() - t0)
    visited = {start}
    parents: dict[tuple[int, ...], tuple[tuple[int, ...], int]] = {}
    frontier = [start]
    depth = 0
    per_node = _node_bytes(n) * n
    while frontier:
        depth += 1
        if depth > budget.max_length:
            return SearchResult(BUDGET_EXCEEDED, explored=len(visited),
                                elapsed=time.perf_counter() - t0)
        nxt = []
        for node in frontier:
            for x in letters:
                col = succ[x]
                images = []
                for m in node:
                    u = 0
                    while m:
                        b = m & -m
                        u |= col[b.bit_length() - 1]
                        m ^= b
                    images.append(u)
                new = tuple(images)
                if mode != D2 and any(m == 0 for m in new):
                    continue  # an empty image can never recover
                if new in visited:
                    continue
                visited.add(new)
                parents[new] = (node, x)
                if hit(new):
                    word = [x]
                    cur = node
                    while cur != start:
                        cur, y = parents[cur]
                        word.append(y)
                    word.reverse()
                    return SearchResult(FOUND, depth, tuple(word), len(visited),
                                        time.perf_counter() - t0)
                nxt.append(new)
        if len(visited) > budget.max_nodes or len(visited) * per_node > budget.max_memory:
            return SearchResult(BUDGET_EXCEEDED, explored=len(visited),
                                elapsed=time.perf_counter() - t0)
        frontier = nxt
    return SearchResult(NOT_SYNCHRONIZING, explored=len(visited),
                        elapsed=time.perf_counter() - t0)


# --- brute-force oracle ------------------------------------------------------

CLASSIC = "classic"
CAREFUL = "careful"
SUBSET = "subset"
ORACLE_MODES = (CLASSIC, CAREFUL, SUBSET, D1, D2, D3)


def brute_force_oracle(a: Automaton, subset: Optional[Iterable[int]], mode: str,
                       max_len: int) -> SearchResult:
    """Independent oracle: test every word of length 0..max_len in
    length-then-lexicographic order and return the first hit.

    No visited-set deduplication or reachability pruning is performed;
    only prefixes that are inapplicable by definition (a careful-mode
    letter undefined on an active state) are not extended.  Status
    not_synchronizing means "no hit within max_len".
    """
    if mode not in ORACLE_MODES:
        raise ValueError(f"unknown oracle mode {mode!r}")
    t0 = time.perf_counter()
    succ, defined = transition_masks(a)
    letters = range(len(a.alphabet))
    explored = 0

    def img(col, m):
        u = 0
        while m:
            b = m & -m
            u |= col[b.bit_length() - 1]
            m ^= b
        return u

    if mode in (CLASSIC, CAREFUL, SUBSET):
        if mode == SUBSET:
            if subset is None:
                raise ValueError("subset mode needs a subset")
            start = mask_of(subset)
        else:
            start = (1 << a.n) - 1
        careful = mode != CLASSIC or a.kind == PFA
        if start.bit_count() == 1:
            return SearchResult(FOUND, 0, (), 1, time.perf_counter() - t0)
        level: list[tuple[int, tuple[int, ...]]] = [(start, ())]
        for depth in range(1, max_len + 1):
            nxt = []
            for t, w in level:
                for x in letters:
                    if careful and (t & defined[x]) != t:
                        continue
                    u = img(succ[x], t)
                    explored += 1
                    if u == 0:
                        continue
                    if u.bit_count() == 1:
                        return SearchResult(FOUND, depth, w + (x,), explored,
                                            time.perf_counter() - t0)
                    nxt.append((u, w + (x,)))
            level = nxt
        return SearchResult(NOT_SYNCHRONIZING, explored=explored,
                            elapsed=time.perf_counter() - t0)

    def hit(node: tuple[int, ...]) -> bool:
        if mode == D1:
            return node[0].bit_count() == 1 and all(m == node[0] for m in node)
        if mode == D2:
            return all(m == node[0] for m in node)
        common = ~0
        for m in node:
            common &= m
        return common != 0

    start_t = tuple(1 << s for s in range(a.n))
    if hit(start_t):
        return SearchResult(FOUND, 0, (), 1, time.perf_counter() - t0)
    tlevel: list[tuple[tuple[int, ...], tuple[int, ...]]] = [(start_t, ())]
    for depth in range(1, max_len + 1):
        nxt = []
        for node, w in tlevel:
            for x in letters:
                new = tuple(img(succ[x], m) for m in node)
                explored += 1
                if hit(new):
                    return SearchResult(FOUND, depth, w + (x,), explored,
                                        time.perf_counter() - t0)
                nxt.append((new, w + (x,)))
        tlevel = nxt
    return SearchResult(NOT_SYNCHRONIZING, explored=explored,
                        elapsed=time.perf_counter() - t0)


# --- composition depth over transformation semigroups ------------------------

Transform = tuple[int, ...]


def constant_target(f: Transform) -> bool:
    return len(set(f)) == 1


def merging_target(subset: Iterable[int]) -> Callable[[Transform], bool]:
    members = tuple(subset)

    def target(f: Transform) -> bool:
        return len({f[s] for s in members}) == 1

    return target


def composition_depth(n: int, generators: Sequence[Sequence[int]],
                      target: Callable[[Transform], bool],
                      budget: Optional[SearchBudget] = None) -> SearchResult:
    """Length of a shortest generator sequence whose composition hits the target.

    Sequences have length >= 1 (the empty composition is excluded); the
    witness lists generator indices in application order g1,...,gk with
    the composition g1 o ... o gk applying gk first.
    """
    budget = budget or DEFAULT_BUDGET
    t0 = time.perf_counter()
    gens: list[Transform] = []
    for g in generators:
        f = tuple(g)
        if len(f) != n or any(v < 0 or v >= n for v in f):
            raise ValueError(f"generator {g!r} is not a function on 0..{n - 1}")
        gens.append(f)
    visited: dict[Transform, None] = {}
    parents: dict[Transform, tuple[Optional[Transform], int]] = {}
    frontier: list[Transform] = []
    for i, g in enumerate(gens):
        if g not in visited:
            visited[g] = None
            parents[g] = (None, i)
            frontier.append(g)
    depth = 1
    while frontier:
        for h in frontier:
            if target(h):
                word = []
                cur: Optional[Transform] = h
                while cur is not None:
                    cur, i = parents[cur]
                    word.append(i)
                word.reverse()
                return SearchResult(FOUND, depth, tuple(word), len(visited),
                                    time.perf_counter() - t0)
        depth += 1
        if depth > budget.max_length:
            return SearchResult(BUDGET_EXCEEDED, explored=len(visited),
                                elapsed=time.perf_counter() - t0)
        nxt = []
        for h in frontier:
            for i, g in enumerate(gens):
                new = tuple(h[g[s]] for s in range(n))
                if new not in visited:
                    visited[new] = None
                    parents[new] = (h, i)
                    nxt.append(new)
        if len(visited) > budget.max_nodes:
            return SearchResult(BUDGET_EXCEEDED, explored=len(visited),
                                elapsed=time.perf_counter() - t0)
        frontier = nxt
    return SearchResult(NOT_SYNCHRONIZING, explored=len(visited),
                        elapsed=time.perf_counter() - t0)
