"""The repetitive quiver of Lambda(r,n,m) restricted to a band of levels.

Vertices are pairs (level, x) with x in -m..n-1.  Paths compose left to
right.  Nonzero paths of the repetitive algebra are exactly the subpaths of
full paths; the string algebra A' obtained by killing the socle keeps the
proper ones.  Representations are covariant: an arrow u -> v acts M_u -> M_v.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..core import Params

FAMILIES = "abcxy"


class WindowEscape(RuntimeError):
    """A construction needed vertices outside the materialised levels."""


@dataclass(frozen=True)
class Arrow:
    id: int
    family: str
    index: int | None  # j for a_j, b_j, c_j, x_j; None for y
    level: int
    src: tuple[int, int]
    dst: tuple[int, int]

    @property
    def label(self) -> str:
        return self.family if self.index is None else f"{self.family}{self.index}"

    @property
    def connecting(self) -> bool:
        return self.family in "xy"


def _arrow_shapes(P: Params):
    """(family, index, src x, dst x, level step) for one level, in canonical order."""
    r, n, m = P.r, P.n, P.m
    for j in range(-m, 0):
        yield "a", j, j, j + 1, 0
    for j in range(0, n - r + 1):
        yield "b", j, j, (j + 1) % n, 0
    for j in range(n - r + 1, n):
        yield "c", j, j, (j + 1) % n, 0
    for j in range(n - r + 1, n):
        yield "x", j, (j + 1) % n, j, 1
    yield "y", None, (n - r + 1) % n, -m, 1


def maximal_paths(P: Params) -> list[tuple[list[tuple[str, int | None]], tuple[str, int | None]]]:
    """Maximal paths of Lambda as label lists, each with its connecting arrow."""
    r, n, m = P.r, P.n, P.m
    p0 = [("a", j) for j in range(-m, 0)] + [("b", j) for j in range(0, n - r + 1)]
    out = [(p0, ("y", None))]
    for k in range(n - r + 1, n):
        out.append(([("c", k)], ("x", k)))
    return out


def short_aliases(P: Params) -> dict[str, str] | None:
    """Single-letter names: non-connecting arrows a, b, c, ... in order, then x and y.

    Only available when there is a single x arrow per level and few enough
    letters; otherwise canonical labels are used.
    """
    plain = [f"{f}{j}" for f, j, *_ in _arrow_shapes(P) if f in "abc"]
    if P.r > 2 or len(plain) > 23:
        return None
    out = {lab: chr(ord("a") + k) for k, lab in enumerate(plain)}
    for f, j, *_ in _arrow_shapes(P):
        if f == "x":
            out[f"x{j}"] = "x"
    out["y"] = "y"
    return out


@dataclass
class RepQuiver:
    P: Params
    W: int
    lo: int
    hi: int
    vertices: list
    arrows: list
    by_key: dict  # (label, level) -> Arrow
    out_arrows: dict
    in_arrows: dict
    full_paths: list  # tuples of arrow ids, entirely inside the band
    allowed: frozenset  # proper subpaths of full paths
    nonzero: frozenset
    sigma: dict = field(default_factory=dict)
    eps: dict = field(default_factory=dict)
    aliases: dict | None = None
    full_count: dict = field(default_factory=dict)  # x -> number of full paths starting at (i, x)

    def arrow(self, label: str, level: int) -> Arrow:
        try:
            return self.by_key[(label, level)]
        except KeyError:
            raise WindowEscape(f"arrow {label}@{level} is outside levels [{self.lo}, {self.hi}]") from None

    def in_window(self, v) -> bool:
        return -self.W <= v[0] <= self.W

    def next_arrow(self, path: tuple, vertex) -> list[Arrow]:
        """Arrows b at `vertex` such that path + b stays an allowed path."""
        return [b for b in self.out_arrows.get(vertex, ()) if path + (b.id,) in self.allowed]

    def relations(self) -> dict[str, list]:
        """Zero and commutativity relations restricted to the band, as arrow-id tuples."""
        return listed_relations(self)


def _path_from_labels(P: Params, keys: dict, start_level: int, labels) -> tuple | None:
    """Resolve (family, index) labels into arrow ids starting at a level; None if off-band."""
    level = start_level
    out = []
    shapes = {(f, j): step for f, j, _, _, step in _arrow_shapes(P)}
    for fam, j in labels:
        lab = fam if j is None else f"{fam}{j}"
        a = keys.get((lab, level))
        if a is None:
            return None
        out.append(a.id)
        level += shapes[(fam, j)]
    return tuple(out)


def build_repetitive(P: Params, W: int) -> RepQuiver:
    """Materialise levels [-W-1, W+1] so covers of window modules stay inside."""
    if W < 1:
        raise ValueError("W must be >= 1")
    lo, hi = -W - 1, W + 1
    xs = list(range(-P.m, P.n))
    vertices = [(i, x) for i in range(lo, hi + 1) for x in xs]
    arrows: list[Arrow] = []
    keys: dict = {}
    for i in range(lo, hi + 1):
        for fam, j, s, e, step in _arrow_shapes(P):
            if i + step > hi:
                continue
            a = Arrow(len(arrows), fam, j, i, (i, s), (i + step, e))
            arrows.append(a)
            keys[(a.label, i)] = a
    out_arrows: dict = {v: [] for v in vertices}
    in_arrows: dict = {v: [] for v in vertices}
    for a in arrows:
        out_arrows[a.src].append(a)
        in_arrows[a.dst].append(a)

    full, escaped = [], []
    for i in range(lo - 1, hi + 1):
        for p, conn in maximal_paths(P):
            for s in range(len(p) + 1):
                labels = p[s:] + [conn] + p[:s]
                # p[s:] and conn sit at level i, p[:s] at level i+1
                ids = _path_from_labels(P, keys, i, labels)
                if ids is None:
                    escaped.append((i, tuple(labels)))
                    # keep the in-band pieces: they are still nonzero paths
                    continue
                full.append(ids)
    allowed = set()
    nonzero = set(full)
    for f in full:
        L = len(f)
        for a in range(L):
            for b in range(a + 1, L + 1):
                if b - a < L:
                    allowed.add(f[a:b])
    # subpaths of full paths that poke out of the band
    for i, labels in escaped:
        pieces = _inband_pieces(P, keys, i, labels)
        for piece in pieces:
            L = len(piece)
            for a in range(L):
                for b in range(a + 1, L + 1):
                    allowed.add(piece[a:b])
    nonzero |= allowed
    q = RepQuiver(
        P, W, lo, hi, vertices, arrows, keys, out_arrows, in_arrows,
        full, frozenset(allowed), frozenset(nonzero),
        aliases=short_aliases(P),
    )
    for p, _ in maximal_paths(P):
        xs_on = [_label_src(P, p[0])] + [_label_dst(P, lab) for lab in p]
        for x in xs_on:
            q.full_count[x] = q.full_count.get(x, 0) + 1
    _assign_signs(q)
    return q


def _label_src(P: Params, lab) -> int:
    return next(s for f, j, s, _, _ in _arrow_shapes(P) if (f, j) == lab)


def _label_dst(P: Params, lab) -> int:
    return next(e for f, j, _, e, _ in _arrow_shapes(P) if (f, j) == lab)


def _inband_pieces(P: Params, keys: dict, start_level: int, labels) -> list[tuple]:
    shapes = {(f, j): step for f, j, _, _, step in _arrow_shapes(P)}
    level = start_level
    pieces, cur = [], []
    for fam, j in labels:
        lab = fam if j is None else f"{fam}{j}"
        a = keys.get((lab, level))
        if a is None:
            if cur:
                pieces.append(tuple(cur))
            cur = []
        else:
            cur.append(a.id)
        level += shapes[(fam, j)]
    if cur:
        pieces.append(tuple(cur))
    return pieces


def _assign_signs(q: RepQuiver) -> None:
    """Greedy parity assignment of sigma, epsilon over arrows in canonical order."""
    order = sorted(q.arrows, key=lambda a: (a.level, FAMILIES.index(a.family), a.index or 0))
    # constraint graph: node = ("s"|"e", arrow id); edge weight -1 means opposite values
    adj: dict = {}

    def link(u, v, w):
        adj.setdefault(u, []).append((v, w))
        adj.setdefault(v, []).append((u, w))

    for v in q.vertices:
        outs, ins = q.out_arrows[v], q.in_arrows[v]
        for k in range(len(outs)):
            for l in range(k + 1, len(outs)):
                link(("s", outs[k].id), ("s", outs[l].id), -1)
        for k in range(len(ins)):
            for l in range(k + 1, len(ins)):
                link(("e", ins[k].id), ("e", ins[l].id), -1)
        for a in ins:
            for b in outs:
                # nonzero in the repetitive algebra, full paths included
                if (a.id, b.id) in q.nonzero:
                    link(("e", a.id), ("s", b.id), -1)
    value: dict = {}
    for a in order:
        for node in (("s", a.id), ("e", a.id)):
            if node in value:
                continue
            value[node] = 1
            queue = deque([node])
            while queue:
                u = queue.popleft()
                for v, w in adj.get(u, ()):
                    want = value[u] * w
                    if v not in value:
                        value[v] = want
                        queue.append(v)
                    elif value[v] != want:
                        raise RuntimeError("inconsistent sign constraints")
    q.sigma = {a.id: value[("s", a.id)] for a in q.arrows}
    q.eps = {a.id: value[("e", a.id)] for a in q.arrows}


def listed_relations(q: RepQuiver) -> dict[str, list]:
    """The generating relations, written out level by level inside the band.

    zero: monomial relations; commutativity: pairs of full paths with the
    same endpoints; connecting: paths through y from (i,k) to (i+1,k+1).
    """
    P = q.P
    r, n, m = P.r, P.n, P.m
    keys = q.by_key
    zero, comm, conn = [], [], []

    def c(k):
        if k == n - r:
            return ("b", n - r)
        if k == n:
            return ("b", 0)
        return ("c", k)

    def add(bucket, level, labels):
        ids = _path_from_labels(P, keys, level, labels)
        if ids is not None:
            bucket.append(ids)

    a_run = [("a", j) for j in range(-m, 0)]
    b_run = [("b", j) for j in range(0, n - r + 1)]
    for i in range(q.lo, q.hi + 1):
        if r > 1:
            for k in range(n - r, n):
                add(zero, i, [c(k), c(k + 1)])
        else:
            add(zero, i, [("b", n - 1), ("b", 0)])
        for k in range(n - r + 2, n):
            add(zero, i, [("x", k), ("x", k - 1)])
        if r > 1:
            add(zero, i, [("y", None), ("x", n - 1)] if m == 0 else [("a", -1), ("x", n - 1)])
        if r > 1:
            first = _path_from_labels(P, keys, i, [("c", n - r + 1), ("x", n - r + 1)])
            second = _path_from_labels(P, keys, i, [("y", None)] + a_run + b_run)
            if first and second:
                comm.append((first, second))
            for k in range(n - r + 2, n):
                f1 = _path_from_labels(P, keys, i, [("c", k), ("x", k)])
                f2 = _path_from_labels(P, keys, i, [("x", k - 1), ("c", k - 1)])
                if f1 and f2:
                    comm.append((f1, f2))
            f1 = _path_from_labels(P, keys, i, [("x", n - 1), ("c", n - 1)])
            f2 = _path_from_labels(P, keys, i, b_run + [("y", None)] + a_run)
            if f1 and f2:
                comm.append((f1, f2))
        else:
            f1 = _path_from_labels(P, keys, i, [("y", None)] + a_run + b_run)
            f2 = _path_from_labels(P, keys, i, b_run + [("y", None)] + a_run)
            if f1 and f2:
                comm.append((f1, f2))
    # paths through y from (i,k) to (i+1,k+1), k != 0, -m <= k <= n-r
    for f in _y_paths(q):
        conn.append(f)
    return {"zero": zero, "commutativity": comm, "connecting": conn}


def _y_paths(q: RepQuiver) -> list[tuple]:
    P = q.P
    out = []
    ys = [a for a in q.arrows if a.family == "y"]
    for y in ys:
        i = y.level
        for k in range(-P.m, P.n - P.r + 1):
            if k == 0:
                continue
            start, end = (i, k), (i + 1, k + 1)
            for before in _direct_paths_between(q, start, y.src):
                for after in _direct_paths_between(q, y.dst, end):
                    out.append(before + (y.id,) + after)
    return out


def _direct_paths_between(q: RepQuiver, u, v, limit: int = 64) -> list[tuple]:
    """Paths of non-connecting arrows from u to v (short: the level is fixed)."""
    out = []
    stack = [(u, ())]
    while stack:
        w, p = stack.pop()
        if w == v:
            out.append(p)
        if len(p) >= limit:
            continue
        for a in q.out_arrows.get(w, ()):
            if not a.connecting and a.id not in p:
                stack.append((a.dst, p + (a.id,)))
    return out
