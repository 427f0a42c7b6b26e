"""Matching coordinates of D^b(Lambda) with string modules of the repetitive algebra.

Z^0_{0,0} is the simple at (0,0).  Irreducible maps in the stable category
are w -> w[1] and w -> [1]w; which of the two is the ray step differs per
component and is decided by comparing Hom counts against simples (where
stable Hom equals Hom) with the engine's hammocks.  Every component reached
this way is filled out by hook moves, and components without a simple are
reached from mapped neighbours by (co)syzygies.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..core import CORAY, RAY, ObjCoord, OffComponent, Params, X, Z, mesh_move, serre, sigma, tau
from ..hammocks import TargetArray, graded_hom, hom_dim, hom_dims
from . import reps
from . import strings as S
from .quiver import RepQuiver, WindowEscape, build_repetitive


class CalibrationFailure(RuntimeError):
    """The string side cannot be matched to coordinates without guessing."""


_OPS = {
    "L": (S.shift_left, S.shift_left_inv),
    "R": (S.shift_right, S.shift_right_inv),
}
_OTHER = {"L": "R", "R": "L"}


@dataclass
class Dictionary:
    P: Params
    q: RepQuiver
    to_string: dict = field(default_factory=dict)  # ObjCoord -> StringWord
    to_coord: dict = field(default_factory=dict)  # canonical StringWord -> ObjCoord
    ray_op: dict = field(default_factory=dict)  # (kind, comp) -> "L" | "R"
    anchors: list = field(default_factory=list)  # (ObjCoord, StringWord, how)
    probes: list = field(default_factory=list)  # (ObjCoord, simple string) matched by profile

    def string(self, A: ObjCoord) -> S.StringWord | None:
        return self.to_string.get(A)

    def coord(self, w: S.StringWord) -> ObjCoord | None:
        return self.to_coord.get(S.canonical(w))

    def components(self) -> list[tuple[str, int]]:
        return sorted(self.ray_op)

    def __len__(self) -> int:
        return len(self.to_string)

    def add(self, A: ObjCoord, w: S.StringWord) -> None:
        old = self.to_string.get(A)
        if old is not None and not S.same_module(old, w):
            raise CalibrationFailure(f"{A!r} reached as two different strings")
        other = self.to_coord.get(S.canonical(w))
        if other is not None and other != A:
            raise CalibrationFailure(f"one string reached as {other!r} and {A!r}")
        self.to_string[A] = w
        self.to_coord[S.canonical(w)] = A


def _in_window(q: RepQuiver, w: S.StringWord) -> bool:
    return all(q.in_window(v) for v in S.vertices(q, w))


def _grow(q: RepQuiver, A: ObjCoord, w: S.StringWord, ray: str, limit: int | None = None) -> dict:
    """Coordinates -> strings along one component, by hook moves inside the window."""
    coray = _OTHER[ray]
    moves = [
        (RAY, 1, _OPS[ray][0]), (RAY, -1, _OPS[ray][1]),
        (CORAY, 1, _OPS[coray][0]), (CORAY, -1, _OPS[coray][1]),
    ]
    found = {A: w}
    queue = deque([(A, w, 0)])
    while queue:
        B, u, depth = queue.popleft()
        if limit is not None and depth >= limit:
            continue
        for direction, sign, op in moves:
            try:
                C = mesh_move(B, direction, sign)
            except OffComponent:
                C = None
            v = op(q, u)
            if C is None:
                if v is not None and _in_window(q, v):
                    raise _Mismatch(f"string move exists where {B!r} has no {direction}")
                continue
            if v is None:
                raise _Mismatch(f"no string for {C!r}")
            if not _in_window(q, v):
                continue
            if C in found:
                if not S.same_module(found[C], v):
                    raise _Mismatch(f"mesh does not commute at {C!r}")
                continue
            found[C] = v
            queue.append((C, v, depth + 1))
    return found


class _Mismatch(Exception):
    pass


# --- profiles -------------------------------------------------------------------

def _candidates(P: Params, bound: int) -> list[ObjCoord]:
    from ..core import window_objects

    return window_objects(P, bound)


def _engine_profiles(P: Params, grid: list[ObjCoord], cands: list[ObjCoord]):
    """(Hom(cand, grid), Hom(grid, cand)) as candidate x grid matrices."""
    T = TargetArray.from_objects(cands)
    TS = TargetArray.from_objects([serre(P, A) for A in cands])
    out = np.zeros((len(cands), len(grid)), dtype=np.int64)
    inn = np.zeros_like(out)
    for g, C in enumerate(grid):
        inn[:, g] = hom_dims(P, C, T)
        # Hom(A, C) is dual to Hom(C, S A)
        out[:, g] = hom_dims(P, C, TS)
    return out, inn


def _simple_profile(q: RepQuiver, s: S.StringWord, grid_strings) -> tuple[np.ndarray, np.ndarray]:
    out = np.array([S.hom_count_combinatorial(q, s, g) for g in grid_strings], dtype=np.int64)
    inn = np.array([S.hom_count_combinatorial(q, g, s) for g in grid_strings], dtype=np.int64)
    return out, inn


def _match(prof, E) -> list[int]:
    out, inn = prof
    if not out.any() and not inn.any():
        return []
    ok = np.all(E[0] == out, axis=1) & np.all(E[1] == inn, axis=1)
    return [int(k) for k in np.nonzero(ok)[0]]


def _bound(grid) -> int:
    return max(max(abs(A.i), abs(A.j)) for A in grid)


# --- building -------------------------------------------------------------------

def _simples(q: RepQuiver) -> list[S.StringWord]:
    return [S.trivial(v, 1) for v in q.vertices if q.in_window(v)]


def x_anchor(P: Params) -> ObjCoord:
    """X^1_{0,0}, read as Sigma X^0_{0,0} so that it also makes sense for r = 1."""
    return sigma(P, X(0, 0, 0), 1)


def projective_string(q: RepQuiver) -> S.StringWord:
    """The string of the indecomposable projective P(n-r) of Lambda: one arrow b_{n-r}."""
    P = q.P
    a = q.arrow(f"b{P.n - P.r}", 0)
    return S.StringWord(((a.id, True),))


def _calibrate_z0(q: RepQuiver):
    P = q.P
    base = S.trivial((0, 0), 1)
    level0 = [s for s in _simples(q) if s.vertex[0] == 0]
    results = {}
    for ray in ("L", "R"):
        try:
            grid = _grow(q, Z(0, 0, 0), base, ray)
        except _Mismatch:
            continue
        coords = sorted(grid, key=ObjCoord.sort_key)
        strs = [grid[C] for C in coords]
        cands = _candidates(P, _bound(coords) + P.n + P.m + 2 * P.r + 2)
        E = _engine_profiles(P, coords, cands)
        matches = {}
        ok = True
        for s in level0:
            hits = _match(_simple_profile(q, s, strs), E)
            if len(hits) != 1:
                ok = False
                break
            matches[s.vertex] = cands[hits[0]]
        if ok and P.m > 0 and matches.get((0, -1)) != x_anchor(P):
            ok = False
        if ok and not _drift_ok(q, grid):
            ok = False
        if ok:
            results[ray] = (grid, coords, strs, cands, E)
    if len(results) != 1:
        raise CalibrationFailure(
            f"Z^0 orientation is {'ambiguous' if results else 'inconsistent'} ({sorted(results)})"
        )
    (ray, data), = results.items()
    return ray, data


def _drift_ok(q: RepQuiver, grid: dict, sample: int = 3) -> bool:
    """Omega^{-r} must move grid strings exactly as Sigma^r moves coordinates."""
    P = q.P
    tested = 0
    for A in sorted(grid, key=lambda C: (abs(C.i) + abs(C.j), C.sort_key())):
        B = sigma(P, A, P.r)
        if B not in grid:
            continue
        try:
            R = reps.shift(reps.string_rep(q, grid[A]), P.r)
        except WindowEscape:
            continue
        if not reps.is_isomorphic(R, reps.string_rep(q, grid[B])):
            return False
        tested += 1
        if tested >= sample:
            break
    return True


def _orient(q: RepQuiver, A: ObjCoord, w: S.StringWord, probes) -> tuple[str, dict]:
    """Pick the ray operation for the component of A by Hom counts against probes.

    `probes` are (coordinate, simple string) pairs already matched.
    """
    P = q.P
    good = {}
    for ray in ("L", "R"):
        try:
            local = _grow(q, A, w, ray, limit=3)
        except _Mismatch:
            continue
        ok = True
        informative = False
        for C, u in local.items():
            for T, s in probes:
                e_out, e_in = hom_dim(P, T, C), hom_dim(P, C, T)
                o_out = S.hom_count_combinatorial(q, s, u)
                o_in = S.hom_count_combinatorial(q, u, s)
                if (e_out, e_in) != (o_out, o_in):
                    ok = False
                    break
                informative |= bool(e_out or e_in)
            if not ok:
                break
        if ok and informative:
            good[ray] = local
    if len(good) != 1:
        raise CalibrationFailure(f"cannot orient the component of {A!r} ({sorted(good)})")
    return next(iter(good))


def build_dictionary(P: Params, window: int = 4, sigma_steps: int = 2) -> Dictionary:
    q = build_repetitive(P, window)
    D = Dictionary(P, q)
    ray, (grid, coords, strs, cands, E) = _calibrate_z0(q)
    D.ray_op[("Z", 0)] = ray
    D.anchors.append((Z(0, 0, 0), S.trivial((0, 0), 1), "simple at (0,0)"))
    for C, u in grid.items():
        D.add(C, u)

    # every simple in the window with a unique profile match
    probes = []
    for s in _simples(q):
        hits = _match(_simple_profile(q, s, strs), E)
        if len(hits) == 1:
            probes.append((cands[hits[0]], s))
    for T, s in probes:
        key = (T.kind, T.comp)
        if key not in D.ray_op:
            D.ray_op[key] = _orient(q, T, s, probes)
            D.anchors.append((T, s, f"simple at {s.vertex}"))
        try:
            local = _grow(q, T, s, D.ray_op[key])
        except _Mismatch as exc:
            raise CalibrationFailure(str(exc)) from None
        for C, u in local.items():
            D.add(C, u)

    # remaining components through suspension of mapped objects
    wanted = {(k, c) for k in "XYZ" for c in range(P.r)}
    for _round in range(sigma_steps * P.r + 2):
        missing = wanted - set(D.ray_op)
        if not missing:
            break
        progress = False
        for A, w in sorted(D.to_string.items(), key=lambda t: (len(t[1]), t[0].sort_key())):
            for d in (1, -1):
                B = sigma(P, A, d)
                if (B.kind, B.comp) not in missing:
                    continue
                try:
                    R = reps.shift(reps.string_rep(q, w), d)
                    u = reps.identify_string(R)
                except (WindowEscape, LookupError):
                    continue
                if not _in_window(q, u):
                    continue
                key = (B.kind, B.comp)
                D.ray_op[key] = _orient(q, B, u, probes)
                D.anchors.append((B, u, f"Sigma^{d} of {A!r}"))
                for C, v in _grow(q, B, u, D.ray_op[key]).items():
                    D.add(C, v)
                missing.discard(key)
                progress = True
            if not missing:
                break
        if not progress:
            break
    D.probes = probes
    return D


# --- checks -----------------------------------------------------------------------

def check_tau(D: Dictionary) -> list[ObjCoord]:
    """Coordinates where tau^{-1} and [1]w[1] disagree (both sides mapped)."""
    bad = []
    for A, w in D.to_string.items():
        B = tau(A, -1)
        u = D.to_string.get(B)
        if u is None:
            continue
        v = S.ar_translate_inv(D.q, w)
        if v is None or not S.same_module(u, v):
            bad.append(A)
    return bad


def check_sigma_power(D: Dictionary, power: int, sample: int = 10, seed: int = 0) -> list[ObjCoord]:
    """Objects where Omega^{-power} of the string is not the string of Sigma^power."""
    rng = random.Random(seed)
    items = sorted(
        ((A, w) for A, w in D.to_string.items() if sigma(D.P, A, power) in D.to_string),
        key=lambda t: t[0].sort_key(),
    )
    rng.shuffle(items)
    bad = []
    done = 0
    for A, w in items:
        if done >= sample:
            break
        try:
            R = reps.shift(reps.string_rep(D.q, w), power)
        except WindowEscape:
            continue
        done += 1
        target = reps.string_rep(D.q, D.to_string[sigma(D.P, A, power)])
        if not reps.is_isomorphic(R, target):
            bad.append(A)
    return bad


@dataclass
class PairCheck:
    A: ObjCoord
    B: ObjCoord
    engine: int
    stable: int
    combinatorial: int
    linear: int

    @property
    def ok(self) -> bool:
        return self.engine == self.stable and self.combinatorial == self.linear


def sample_pairs(D: Dictionary, count: int, seed: int = 0) -> list[tuple[ObjCoord, ObjCoord]]:
    """Seeded pairs, half of them with a nonzero engine Hom so both cases are exercised."""
    rng = random.Random(seed)
    objs = sorted(D.to_string, key=ObjCoord.sort_key)
    pairs = []
    tries = 0
    while len(pairs) < count and tries < 200 * count:
        tries += 1
        A, B = rng.choice(objs), rng.choice(objs)
        want_nonzero = len(pairs) % 2 == 0
        if want_nonzero and not hom_dim(D.P, A, B):
            continue
        pairs.append((A, B))
    return pairs


def cross_check(D: Dictionary, count: int = 200, seed: int = 0) -> list[PairCheck]:
    out = []
    for A, B in sample_pairs(D, count, seed):
        v, w = D.to_string[A], D.to_string[B]
        M, N = reps.string_rep(D.q, v), reps.string_rep(D.q, w)
        out.append(
            PairCheck(
                A, B,
                engine=hom_dim(D.P, A, B),
                stable=reps.stable_hom_dim(M, N),
                combinatorial=S.hom_count_combinatorial(D.q, v, w),
                linear=reps.hom_dim_linear(M, N),
            )
        )
    return out


def cross_check_degree(D: Dictionary, d: int, count: int = 20, seed: int = 0) -> list[tuple]:
    """(A, B, engine, oracle) for Hom(A, Sigma^d B) via Omega^{-d}; skips window escapes."""
    out = []
    for A, B in sample_pairs(D, 4 * count, seed):
        if len(out) >= count:
            break
        M = reps.string_rep(D.q, D.to_string[A])
        try:
            N = reps.shift(reps.string_rep(D.q, D.to_string[B]), d)
            st = reps.stable_hom_dim(M, N)
        except WindowEscape:
            continue
        out.append((A, B, graded_hom(D.P, A, B).get(d, 0), st))
    return out
