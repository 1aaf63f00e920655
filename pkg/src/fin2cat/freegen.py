"""Graphs, free path categories, computads, and pasting words.

A computad is a graph with named 2-cell generators between parallel paths.
A pasting word is a sequence of whiskered generator applications; two words
denote the same 2-cell of the free structure iff one can be turned into the
other by swapping adjacent steps that act on disjoint segments.  We decide
that by computing a canonical normal form: repeatedly extract the step that
can be commuted to the front with the smallest (position, generator) key.

>>> c = builtin_computad(DELTA_DOT_LAX)
>>> [list(p.edges) for p in enumerate_paths(c.base, "0", "1", 3)]
[['d'], ['d', 'd0', 's0'], ['d', 'd1', 's0']]
"""

from collections import deque

from .errors import BoundaryMismatch, MalformedWord, ParallelismViolation

YES = "Yes"
NO_WITHIN_BUDGET = "NoWithinBudget"

DELTA_DOT_LAX = "DeltaDotLax"
DELTA_LAX = "DeltaLax"
DELTA_DOT = "DeltaDot"


class Graph:
    def __init__(self, nodes, edges, src, tgt):
        self.nodes = tuple(nodes)
        self.edges = tuple(edges)
        self.src = dict(src)
        self.tgt = dict(tgt)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.nodes == other.nodes
            and self.edges == other.edges
            and self.src == other.src
            and self.tgt == other.tgt
        )

    def __repr__(self):
        return "Graph(%d nodes, %d edges)" % (len(self.nodes), len(self.edges))


def make_graph(nodes, edges, src, tgt):
    nodes, edges = list(nodes), list(edges)
    if len(set(nodes)) != len(nodes) or len(set(edges)) != len(edges):
        raise MalformedWord("duplicate node or edge identifiers")
    if set(src) != set(edges) or set(tgt) != set(edges):
        raise MalformedWord("src/tgt must be defined on exactly the edges")
    for e in edges:
        if src[e] not in set(nodes) or tgt[e] not in set(nodes):
            raise MalformedWord("edge %r has endpoint outside nodes" % e)
    return Graph(nodes, edges, src, tgt)


class Path:
    """A directed path: a start node and a chained edge sequence."""

    def __init__(self, graph, start, edges):
        self.graph = graph
        self.start = start
        self.edges = tuple(edges)

    @property
    def end(self):
        return self.graph.tgt[self.edges[-1]] if self.edges else self.start

    def node_at(self, i):
        """The node reached after the first i edges."""
        return self.start if i == 0 else self.graph.tgt[self.edges[i - 1]]

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return (
            self.start == other.start
            and self.edges == other.edges
            and self.graph == other.graph
        )

    def __hash__(self):
        return hash((self.start, self.edges))

    def __repr__(self):
        return "Path(%s: %s)" % (self.start, ".".join(self.edges) or "empty")


def make_path(graph, start, edges):
    if start not in set(graph.nodes):
        raise MalformedWord("path start %r is not a node" % start)
    at = start
    for e in edges:
        if e not in set(graph.edges):
            raise MalformedWord("unknown edge %r" % e)
        if graph.src[e] != at:
            raise MalformedWord(
                "edge %r starts at %r, expected %r" % (e, graph.src[e], at)
            )
        at = graph.tgt[e]
    return Path(graph, start, edges)


def enumerate_paths(G, a, b, max_len):
    """All paths from a to b with at most max_len edges, shortest first and
    in edge-name order within a length."""
    found = []

    def walk(at, acc):
        if at == b:
            found.append(tuple(acc))
        if len(acc) == max_len:
            return
        for e in sorted(G.edges):
            if G.src[e] == at:
                acc.append(e)
                walk(G.tgt[e], acc)
                acc.pop()

    walk(a, [])
    found.sort(key=lambda es: (len(es), es))
    return [Path(G, a, es) for es in found]


class Computad:
    """A graph plus named 2-cell generators between parallel paths."""

    def __init__(self, base, cells, src, tgt):
        self.base = base
        self.cells = tuple(cells)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.cell_index = {g: i for i, g in enumerate(self.cells)}

    def __eq__(self, other):
        if not isinstance(other, Computad):
            return NotImplemented
        return (
            self.base == other.base
            and self.cells == other.cells
            and self.src == other.src
            and self.tgt == other.tgt
        )

    def __repr__(self):
        return "Computad(%r, %d cells)" % (self.base, len(self.cells))


def validate_computad(c):
    """Check a computad's cells are named paths with matching endpoints.

    Returns the computad unchanged on success.
    """
    if len(set(c.cells)) != len(c.cells):
        raise ParallelismViolation("duplicate cell names")
    if set(c.src) != set(c.cells) or set(c.tgt) != set(c.cells):
        raise ParallelismViolation("cell boundaries must cover exactly the cells")
    for g in c.cells:
        s, t = c.src[g], c.tgt[g]
        for p in (s, t):
            if not isinstance(p, Path) or p.graph != c.base:
                raise ParallelismViolation("cell %r boundary is not a base path" % g)
            make_path(c.base, p.start, p.edges)  # re-check chaining
        if s.start != t.start or s.end != t.end:
            raise ParallelismViolation(
                "cell %r has non-parallel boundary: %r vs %r" % (g, s, t)
            )
    return c


def make_computad(base, cells, src, tgt):
    return validate_computad(Computad(base, cells, src, tgt))


def builtin_computad(which):
    """The three built-in shape computads.

    DeltaDotLax: nodes 0..3, an edge d: 0 -> 1 below the three-level shape
    (d0, d1: 1 -> 2, s0: 2 -> 1, p0, p1, p2: 2 -> 3) with comparison cells
    sig00, sig20, sig21, unit cells n0, n1, and theta: d.d1 => d.d0.
    DeltaLax: the restriction to nodes 1..3 (no d, no theta).
    DeltaDot: DeltaDotLax plus the reverse cell theta_op: d.d0 => d.d1.
    """
    G = make_graph(
        nodes=["0", "1", "2", "3"],
        edges=["d", "d0", "d1", "s0", "p0", "p1", "p2"],
        src={"d": "0", "d0": "1", "d1": "1", "s0": "2", "p0": "2", "p1": "2", "p2": "2"},
        tgt={"d": "1", "d0": "2", "d1": "2", "s0": "1", "p0": "3", "p1": "3", "p2": "3"},
    )

    def p(start, edges):
        return make_path(G, start, edges)

    cells = ["sig00", "sig20", "sig21", "n0", "n1"]
    src = {
        "sig00": p("1", ["d0", "p0"]),
        "sig20": p("1", ["d0", "p2"]),
        "sig21": p("1", ["d1", "p2"]),
        "n0": p("1", []),
        "n1": p("1", []),
    }
    tgt = {
        "sig00": p("1", ["d0", "p1"]),
        "sig20": p("1", ["d1", "p0"]),
        "sig21": p("1", ["d1", "p1"]),
        "n0": p("1", ["d0", "s0"]),
        "n1": p("1", ["d1", "s0"]),
    }

    if which == DELTA_LAX:
        H = make_graph(
            nodes=["1", "2", "3"],
            edges=["d0", "d1", "s0", "p0", "p1", "p2"],
            src={k: v for k, v in G.src.items() if k != "d"},
            tgt={k: v for k, v in G.tgt.items() if k != "d"},
        )
        return make_computad(
            H,
            cells,
            {g: make_path(H, s.start, s.edges) for g, s in src.items()},
            {g: make_path(H, t.start, t.edges) for g, t in tgt.items()},
        )

    cells = cells + ["theta"]
    src["theta"] = p("0", ["d", "d1"])
    tgt["theta"] = p("0", ["d", "d0"])
    if which == DELTA_DOT_LAX:
        return make_computad(G, cells, src, tgt)
    if which == DELTA_DOT:
        cells = cells + ["theta_op"]
        src["theta_op"] = p("0", ["d", "d0"])
        tgt["theta_op"] = p("0", ["d", "d1"])
        return make_computad(G, cells, src, tgt)
    raise ValueError("unknown builtin computad %r" % which)


class PastingWord:
    """A composable sequence of whiskered 2-cell generator applications.

    Each step is a triple (prefix path, generator, suffix path); the source
    of step i+1 is the target of step i with the generator's source segment
    replaced.
    """

    def __init__(self, computad, source, target, steps):
        self.computad = computad
        self.source = source
        self.target = target
        self.steps = tuple(steps)

    @property
    def boundary(self):
        return (self.source, self.target)

    def positions(self):
        """The steps as (position, generator) pairs."""
        return tuple((len(pre.edges), g) for pre, g, _ in self.steps)

    def __repr__(self):
        return "PastingWord(%r => %r, %d steps)" % (
            self.source,
            self.target,
            len(self.steps),
        )


def make_word(computad, source, steps):
    """Build a pasting word from a source path and (position, generator)
    pairs (triples (prefix, generator, suffix) are also accepted)."""
    if source.graph != computad.base:
        raise MalformedWord("source path lives on a different graph")
    G = computad.base
    cur = source
    triples = []
    for step in steps:
        if len(step) == 2:
            pos, g = step
        else:
            pre, g, _ = step
            pos = len(pre.edges)
        if g not in computad.cell_index:
            raise MalformedWord("unknown 2-cell generator %r" % g)
        s = computad.src[g]
        k = len(s.edges)
        if pos < 0 or pos + k > len(cur.edges):
            raise MalformedWord("step (%r, %r) falls outside the path" % (pos, g))
        if tuple(cur.edges[pos : pos + k]) != s.edges or cur.node_at(pos) != s.start:
            raise MalformedWord(
                "generator %r does not match the path at position %r" % (g, pos)
            )
        pre = Path(G, cur.start, cur.edges[:pos])
        post = Path(G, s.end, cur.edges[pos + k :])
        triples.append((pre, g, post))
        cur = Path(
            G, cur.start, cur.edges[:pos] + computad.tgt[g].edges + cur.edges[pos + k :]
        )
    return PastingWord(computad, source, cur, triples)


def _extract_to_front(c, events, j):
    """Try to commute event j to the front of the event list.

    events are (position, generator) pairs, positions taken in the path
    current at each step.  Returns (front_position, remaining_events) or
    None when some earlier step overlaps.  Swapping over an earlier event
    shifts whichever of the two acts further right by the earlier/later
    event's length difference.
    """
    evs = [list(e) for e in events]
    cur = evs[j]
    for i in range(j - 1, -1, -1):
        other = evs[i]
        ko, to = (
            len(c.src[other[1]].edges),
            len(c.tgt[other[1]].edges),
        )
        kc = len(c.src[cur[1]].edges)
        tc = len(c.tgt[cur[1]].edges)
        if cur[0] >= other[0] + to:
            cur[0] -= to - ko
        elif cur[0] + kc <= other[0]:
            other[0] += tc - kc
        else:
            return None
    rest = [tuple(e) for idx, e in enumerate(evs) if idx != j]
    return cur[0], rest


def normalize_2cell(w):
    """The canonical representative of w's interchange class.

    Greedily pulls to the front, among the steps that can be commuted
    there, the one with the least (front position, generator index) key;
    repeats on the remainder.
    """
    c = w.computad
    rest = [list(e) for e in w.positions()]
    out = []
    while rest:
        best = None
        for j in range(len(rest)):
            got = _extract_to_front(c, rest, j)
            if got is None:
                continue
            # smaller front position wins; declaration order breaks ties
            fp, newrest = got
            key = (fp, c.cell_index[rest[j][1]], j)
            if best is None or key < best[0]:
                best = (key, fp, rest[j][1], newrest)
        out.append((best[1], best[2]))
        rest = [list(e) for e in best[3]]
    return make_word(c, w.source, out)


def two_cells_equal(w1, w2):
    """Whether two pasting words denote the same 2-cell: same computad,
    same boundary, same normal form."""
    if w1.computad != w2.computad:
        return False
    if w1.source != w2.source or w1.target != w2.target:
        return False
    return normalize_2cell(w1).positions() == normalize_2cell(w2).positions()


def _rewrites(c, start, edges):
    """One-step rewrites of a path (as an edge tuple) by the cells of c."""
    path = Path(c.base, start, edges)
    for g in c.cells:
        s = c.src[g]
        k = len(s.edges)
        for pos in range(len(edges) - k + 1):
            if edges[pos : pos + k] == s.edges and path.node_at(pos) == s.start:
                yield edges[:pos] + c.tgt[g].edges + edges[pos + k :]


def preorder_leq(c, f, g, budget=10000):
    """Decide whether some pasting 2-cell rewrites f into g.

    Breadth-first search over paths reachable from f by the cells of c.
    Returns YES when g is reached, NO_WITHIN_BUDGET once `budget` distinct
    paths have been visited (or the reachable set is exhausted).
    """
    if f.graph != c.base or g.graph != c.base:
        raise BoundaryMismatch("paths live on a different graph")
    if f.start != g.start or f.end != g.end:
        raise BoundaryMismatch("paths are not parallel: %r vs %r" % (f, g))
    target = g.edges
    if f.edges == target:
        return YES
    seen = {f.edges}
    queue = deque([f.edges])
    while queue:
        cur = queue.popleft()
        for nxt in _rewrites(c, f.start, cur):
            if nxt == target:
                return YES
            if nxt not in seen:
                if len(seen) >= budget:
                    return NO_WITHIN_BUDGET
                seen.add(nxt)
                queue.append(nxt)
    return NO_WITHIN_BUDGET
