"""Type A_t combinatorics: the ZA_t chart, A_t-quivers and their tilting objects.

Objects of D^b(kA_t) are charted by (g, h) with g in Z and h in 1..t.
Irreducible maps go (g,h) -> (g,h+1) and (g,h) -> (g+1,h-1).  The standard
heart is that of the linear quiver 1 <- 2 <- ... <- t, whose projectives sit
at (0,1), ..., (0,t); the module with support [a, b] sits at (a-1, b-a+1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Vertex = tuple[int, int]


def in_heart(t: int, v: Vertex) -> bool:
    g, h = v
    return g >= 0 and g + h <= t


def tau_a(v: Vertex, power: int = 1) -> Vertex:
    return v[0] - power, v[1]


def sigma_a(t: int, v: Vertex, power: int = 1) -> Vertex:
    g, h = v
    for _ in range(power):
        g, h = g + h, t + 1 - h
    for _ in range(-power):
        h = t + 1 - h
        g = g - h
    return g, h


def hom_a(t: int, u: Vertex, v: Vertex) -> int:
    """Degree-0 Hom dimension in D^b(kA_t) (a rectangle hammock)."""
    (g, h), (g2, h2) = u, v
    s = g2 - g
    return int(0 <= s <= h - 1 and 0 <= h2 - h + s <= t - h)


def heart_shift(t: int, v: Vertex) -> tuple[int, Vertex]:
    """(k, w) with v = Sigma^k w and w in the standard heart."""
    k = 0
    w = v
    # Sigma^2 = tau^{-(t+1)}, so a few steps always suffice after coarse moves
    while w[0] < 0:
        w = sigma_a(t, w, 2)
        k -= 2
    while w[0] >= t + 1:
        w = sigma_a(t, w, -2)
        k += 2
    while not in_heart(t, w):
        w = sigma_a(t, w, -1)
        k += 1
        if w[0] < 0:
            w = sigma_a(t, w, 2)
            k -= 2
    return k, w


def graded_hom_a(t: int, u: Vertex, v: Vertex) -> dict[int, int]:
    out = {}
    for d in range(-2 * t - 4, 2 * t + 5):
        if hom_a(t, u, sigma_a(t, v, d)):
            out[d] = 1
    return out


def interval(t: int, v: Vertex) -> tuple[int, int]:
    g, h = v
    if not in_heart(t, v):
        raise ValueError(f"{v} is not in the standard heart")
    return g + 1, g + h


def module_name(t: int, v: Vertex) -> str:
    """Name as Sigma^k of P(b), S(a), I(a) or M(a,b) for the linear quiver."""
    k, w = heart_shift(t, v)
    a, b = interval(t, w)
    if a == 1:
        base = f"P({b})"
    elif a == b:
        base = f"S({a})"
    elif b == t:
        base = f"I({a})"
    else:
        base = f"M({a},{b})"
    if k == 0:
        return base
    if k == 1:
        return "Σ" + base
    return f"Σ^{k}" + base


# --- A_t-quivers --------------------------------------------------------------

@dataclass(frozen=True)
class AtQuiver:
    t: int
    edges: tuple  # (source, target, colour) with vertices 0..t-1, colour "a" or "b"

    def __post_init__(self):
        if not valid_quiver(self.t, self.edges):
            raise ValueError(f"not an A_t-quiver: {self.edges}")


def valid_quiver(t: int, edges) -> bool:
    if len(edges) != t - 1:
        return False
    seen = set()
    for s, e, c in edges:
        for key in ((s, "out", c), (e, "in", c)):
            if key in seen:
                return False
            seen.add(key)
    # connected on t vertices with t-1 edges means tree
    parent = list(range(t))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, e, _ in edges:
        a, b = find(s), find(e)
        if a == b:
            return False
        parent[a] = b
    return True


def _adjacency(t: int, edges):
    adj = {v: [] for v in range(t)}
    for s, e, c in edges:
        adj[s].append((e, c, "out"))
        adj[e].append((s, c, "in"))
    return adj


def _canonical(t: int, edges) -> str:
    """Isomorphism invariant of a coloured directed tree (AHU encoding)."""
    adj = _adjacency(t, edges)

    def enc(v, parent):
        kids = sorted(f"{c}{d}" + enc(w, v) for w, c, d in adj[v] if w != parent)
        return "(" + "".join(kids) + ")"

    return min(enc(root, None) for root in range(t))


def _prufer_trees(t: int):
    if t == 1:
        yield []
        return
    if t == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(t), repeat=t - 2):
        degree = [1] * t
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(t) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [v for v in range(t) if degree[v] == 1]
        edges.append((u, w))
        yield edges


@lru_cache(maxsize=None)
def at_quivers(t: int) -> tuple[AtQuiver, ...]:
    if t < 1:
        raise ValueError("t must be >= 1")
    found = {}
    for tree in _prufer_trees(t):
        for orient in itertools.product((0, 1), repeat=len(tree)):
            for colours in itertools.product("ab", repeat=len(tree)):
                edges = tuple(
                    (u, w, c) if o == 0 else (w, u, c)
                    for (u, w), o, c in zip(tree, orient, colours)
                )
                if not valid_quiver(t, edges):
                    continue
                key = _canonical(t, edges)
                if key not in found:
                    found[key] = AtQuiver(t, tuple(sorted(edges)))
    return tuple(found[k] for k in sorted(found))


def _side_count(adj, x, colour, direction) -> int:
    """Vertices reached from x through its arrow of given colour/direction."""
    for w, c, d in adj[x]:
        if c == colour and d == direction:
            stack, seen = [w], {x, w}
            while stack:
                v = stack.pop()
                for u, _, _ in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            return len(seen) - 1
    return 0


def phi_q(Q: AtQuiver) -> dict[int, Vertex]:
    """Position of each vertex's summand in the tilting object T_Q.

    Along a beta arrow x -> y the g coordinate grows by
    e_alpha(x) + s_alpha(y) + 1; alpha arrows keep g fixed.
    """
    adj = _adjacency(Q.t, Q.edges)
    s_a = {x: _side_count(adj, x, "a", "out") for x in range(Q.t)}
    e_a = {x: _side_count(adj, x, "a", "in") for x in range(Q.t)}
    s_b = {x: _side_count(adj, x, "b", "out") for x in range(Q.t)}
    h = {x: 1 + e_a[x] + s_b[x] for x in range(Q.t)}
    g = {0: 0}
    stack = [0]
    while stack:
        x = stack.pop()
        for w, c, d in adj[x]:
            if w in g:
                continue
            if c == "a":
                g[w] = g[x]
            elif d == "out":
                g[w] = g[x] + e_a[x] + s_a[w] + 1
            else:
                g[w] = g[x] - e_a[w] - s_a[x] - 1
            stack.append(w)
    base = min(g.values())
    return {x: (g[x] - base, h[x]) for x in range(Q.t)}


# --- tilting objects ------------------------------------------------------------

def _normal_key(t: int, objs) -> tuple:
    return tuple(sorted(objs))


def same_up_to_shift(t: int, A, B) -> bool:
    target = _normal_key(t, B)
    for k in range(-2 * t - 4, 2 * t + 5):
        if _normal_key(t, (sigma_a(t, v, k) for v in A)) == target:
            return True
    return False


def is_tilting_a(t: int, objs) -> bool:
    objs = list(objs)
    if len(set(objs)) != t:
        return False
    for u in objs:
        for v in objs:
            if any(d != 0 for d in graded_hom_a(t, u, v)):
                return False
    return True


def exceptional_order(t: int, objs) -> list[Vertex]:
    """Order summands so that all Homs go forward; ties by (g,h)."""
    objs = sorted(set(objs))
    before = {u: set() for u in objs}
    for u in objs:
        for v in objs:
            if u != v and graded_hom_a(t, u, v):
                before[v].add(u)
    out = []
    left = set(objs)
    while left:
        ready = sorted(v for v in left if not (before[v] & left))
        if not ready:
            raise ValueError("summands do not form an exceptional collection")
        out.append(ready[0])
        left.remove(ready[0])
    return out


@dataclass(frozen=True)
class TiltingClass:
    """A tilting object tau^{-g} T_Q, summands in exceptional order."""

    quiver: AtQuiver
    quiver_index: int
    g: int
    summands: tuple


@lru_cache(maxsize=None)
def tilting_class_records(t: int) -> tuple[TiltingClass, ...]:
    reps: list[TiltingClass] = []
    # Sigma^2 = tau^{-(t+1)}, so g in 0..t reaches every class
    for g in range(t + 1):
        for idx, Q in enumerate(at_quivers(t)):
            T = [tau_a(v, -g) for v in phi_q(Q).values()]
            if any(same_up_to_shift(t, T, R.summands) for R in reps):
                continue
            reps.append(TiltingClass(Q, idx, g, tuple(exceptional_order(t, T))))
    return tuple(reps)


def tilting_classes(t: int) -> tuple[tuple[Vertex, ...], ...]:
    """Tilting objects of D^b(kA_t) up to suspension, in exceptional order."""
    return tuple(R.summands for R in tilting_class_records(t))


def hom_poset(t: int, T) -> list[tuple[int, int]]:
    """Pairs (a, b), a != b, with Hom(T_a, T_b) != 0 (forcing p_a <= p_b)."""
    return [
        (a, b)
        for a, u in enumerate(T)
        for b, v in enumerate(T)
        if a != b and hom_a(t, u, v)
    ]


def isomorphic(Q: AtQuiver, R: AtQuiver) -> bool:
    """Whether two A_t-quivers agree after relabelling vertices."""
    return Q.t == R.t and _canonical(Q.t, Q.edges) == _canonical(R.t, R.edges)
