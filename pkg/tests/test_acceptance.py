"""The eleven acceptance criteria, one test each.

Each test records a PASS/FAIL line that is printed in the terminal summary
(see conftest.py).  Running this file directly prints the same lines.
"""

from __future__ import annotations

import math
import random
import time

import numpy as np
import pytest

from ddcat import autoequiv, dynkin, hammocks, silting
from ddcat.autoequiv import AutoEq
from ddcat.core import X, Y, Z, make_params, serre, sigma, special_triangle, tau, window_objects
from ddcat.hammocks import TargetArray

try:
    from conftest import ACCEPTANCE
except ImportError:  # run as a script from elsewhere
    ACCEPTANCE = {}

GRID = [(1, 2, 0), (1, 2, 1), (2, 3, 1), (2, 5, 2), (3, 4, 2)]
BOUND = 8


def record(k: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[k] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {k:2d}: {detail}")


def _mouth_exception(P, A, B) -> bool:
    return (
        P.r == 1 and A.kind == "X" and A.i == A.j and B.kind == "X"
        and B.comp == A.comp and B.i == A.i and B.j == A.i + P.m
    )


# 1 -------------------------------------------------------------------------------

def test_c01_hom_bound():
    t0 = time.time()
    bad = []
    twos = 0
    for prm in GRID:
        P = make_params(*prm)
        objs = window_objects(P, BOUND)
        T = TargetArray.from_objects(objs)
        cap = 1 if P.r >= 2 else 2
        for A in objs:
            degs, M = hammocks.graded_scan(P, A, T)
            if M.size and M.max() > cap:
                bad.append((prm, A, "over cap"))
            for di, bi in zip(*np.nonzero(M == 2)):
                twos += 1
                B = sigma(P, objs[bi], degs[di])
                if not (hammocks.region_r1_square(P, A, B) or _mouth_exception(P, A, B)):
                    bad.append((prm, A, B))
    dt = time.time() - t0
    ok = not bad and dt < 60
    record(1, ok, f"{len(bad)} violations, {twos} dimension-2 entries all explained, {dt:.1f}s")
    assert not bad, bad[:5]
    assert dt < 60


# 2 -------------------------------------------------------------------------------

def test_c02_serre_duality():
    bad = 0
    checked = 0
    for prm in GRID:
        P = make_params(*prm)
        objs = window_objects(P, BOUND)
        n = len(objs)
        for d in range(-P.r, P.r + 1):
            targets = [sigma(P, B, d) for B in objs]
            T = TargetArray.from_objects(targets)
            forward = np.vstack([hammocks.hom_dims(P, A, T) for A in objs])
            SA = TargetArray.from_objects([serre(P, A) for A in objs])
            backward = np.vstack([hammocks.hom_dims(P, B, SA) for B in targets])
            bad += int(np.count_nonzero(forward != backward.T))
            checked += n * n
    record(2, bad == 0, f"{checked} (A, Sigma^d B) pairs, {bad} failures of hom(A,B) = hom(B,SA)")
    assert bad == 0


# 3 -------------------------------------------------------------------------------

def test_c03_functor_relations():
    bad = []
    for prm in GRID:
        P = make_params(*prm)
        phi = AutoEq(0, P.m + P.r, P.r - P.n)
        for A in window_objects(P, BOUND):
            Sr = sigma(P, A, P.r)
            if A.kind == "X" and Sr != tau(A, -(P.m + P.r)):
                bad.append((prm, A, "X"))
            if A.kind == "Y" and Sr != tau(A, P.n - P.r):
                bad.append((prm, A, "Y"))
            if autoequiv.twist_x(autoequiv.twist_y(A)) != tau(A, -1):
                bad.append((prm, A, "TxTy"))
            if autoequiv.twist_y(autoequiv.twist_x(A)) != tau(A, -1):
                bad.append((prm, A, "TyTx"))
            if autoequiv.apply(P, phi, A) != Sr:
                bad.append((prm, A, "twists"))
    record(3, not bad, f"{len(bad)} violations over all window objects")
    assert not bad, bad[:5]


# 4 -------------------------------------------------------------------------------

def test_c04_endo_complex():
    bad = []
    count = 0
    for prm in GRID:
        P = make_params(*prm)
        for kind, make in (("X", X), ("Y", Y)):
            for k in range(P.r):
                for h in range(13):
                    A = make(k, 0, h) if kind == "X" else make(k, h, 0)
                    count += 1
                    if hammocks.endo_complex(P, A) != hammocks.graded_hom(P, A, A):
                        bad.append((prm, A))
    record(4, not bad, f"{count} objects of height <= 12, {len(bad)} mismatches")
    assert not bad, bad[:5]


# 5 -------------------------------------------------------------------------------

def test_c05_group_structure():
    rng = random.Random(2024)
    bad = []
    for _ in range(20):
        r = rng.randint(1, 12)
        n = rng.randint(r + 1, r + 12)
        m = rng.randint(0, 12)
        free, tors = autoequiv.group_structure(make_params(r, n, m))
        if tors != math.gcd(r, n, m) or free != 2:
            bad.append(((r, n, m), free, tors))
    record(5, not bad, f"20 random triples, {len(bad)} with torsion != gcd(r,n,m)")
    assert not bad, bad


# 6 -------------------------------------------------------------------------------

# tilting object of kA_3 and its admissible shifts (i, j, k)
TABLE = [
    (("P(1)", "P(2)", "P(3)"), lambda i, j, k: j >= i and k >= max(j, -1)),
    (("P(1)", "P(3)", "S(3)"), lambda i, j, k: k >= j >= max(i, -1)),
    (("P(2)", "S(2)", "P(3)"), lambda i, j, k: j >= i and k >= max(i, -1)),
    (("S(2)", "P(3)", "I(2)"), lambda i, j, k: j >= -1 and k >= max(i, j, -1)),
    (("P(3)", "I(2)", "S(3)"), lambda i, j, k: k >= j >= i >= -1),
    (("P(3)", "S(3)", "ΣS(2)"), lambda i, j, k: k >= j >= i >= -1),
    (("S(2)", "I(2)", "ΣP(1)"), lambda i, j, k: k >= j >= max(i, -1)),
    (("I(2)", "S(3)", "ΣP(1)"), lambda i, j, k: k >= i and j >= i >= -1),
    (("S(2)", "ΣP(1)", "ΣP(3)"), lambda i, j, k: j >= i and k >= max(j, -2)),
    (("ΣP(1)", "S(3)", "ΣP(2)"), lambda i, j, k: j >= -1 and k >= max(i, j)),
    (("S(3)", "ΣP(2)", "ΣS(2)"), lambda i, j, k: k >= j >= i >= -1),
    (("S(3)", "ΣS(2)", "Σ^2P(1)"), lambda i, j, k: k >= j >= i >= -1),
]


def _admissible(names, pred, lo=-4, hi=4):
    out = set()
    rng = range(lo, hi + 1)
    for p in ((i, j, k) for i in rng for j in rng for k in rng):
        if pred(*p):
            out.add(frozenset(zip(names, p)))
    return out


def test_c06_table1():
    from ddcat.cli import cmd_table231

    P = make_params(2, 3, 1)
    fams = silting.silting_families(P, Z(0, 0, 0))
    ours = {}
    for f in fams:
        ours[frozenset(f.names())] = _admissible(f.names(), lambda *p, f=f: f.admits(p))
    mism = []
    for names, pred in TABLE:
        got = ours.get(frozenset(names))
        if got is None or got != _admissible(names, pred):
            mism.append(names)
    objs, _ = silting.enumerate_silting(P, Z(0, 0, 0), (-2, 3))
    bad_inst = [S for S in objs if len(S) != 4 or not silting.is_partial_silting(P, S)]
    _, golden_ok = cmd_table231()
    ok = len(fams) == 12 and not mism and not bad_inst and golden_ok
    record(
        6, ok,
        f"{len(fams)} families, {len(mism)} constraint mismatches, "
        f"{len(objs)} boxed instances ({len(bad_inst)} bad), golden match {golden_ok}",
    )
    assert len(fams) == 12
    assert not mism, mism
    assert not bad_inst
    assert golden_ok


# 7 -------------------------------------------------------------------------------

# the six listed tilting objects, each completed by Z^0_{0,0}
SIX = [
    [Z(0, -1, 0), X(1, -2, -2), X(0, 0, 0)],
    [X(1, -2, -2), X(1, -1, -1), X(0, 0, 0)],
    [X(1, -1, -1), X(1, -2, -1), X(0, 0, 0)],
    [X(1, -1, -1), X(0, 0, 0), X(0, 0, 1)],
    [X(1, -1, -1), X(0, 0, 1), X(0, 1, 1)],
    [X(1, -1, -1), X(0, 1, 1), Z(0, 1, 0)],
]
M7 = frozenset([Z(0, 0, 0), X(0, -2, -2), X(0, 0, 0), Z(0, 6, -1)])


def test_c07_six_tilting():
    P = make_params(2, 3, 1)
    Z00 = Z(0, 0, 0)
    listed = {frozenset(L + [Z00]) for L in SIX}
    found = {frozenset(S) for S in silting.tilting_with(P, Z00, 3)}
    objs, _ = silting.enumerate_silting(P, Z00, (-2, 3))
    m_found = M7 in {frozenset(S) for S in objs}
    missing = [sorted(S) for S in listed - found]
    extra = [sorted(S) for S in found - listed]
    ok = found == listed and m_found
    detail = f"{len(found)} computed, {len(listed & found)}/6 listed reproduced, M emitted {m_found}"
    for S in missing:
        witness = [
            f"Hom({A!r}, Sigma^{d} {B!r})"
            for A in S for B in S for d in hammocks.graded_hom(P, A, B) if d != 0
        ]
        detail += f"; listed but not tilting: {[repr(A) for A in S]} has {', '.join(witness)}"
    if extra:
        detail += f"; computed but not listed: {[[repr(A) for A in S] for S in extra]}"
    record(7, ok, detail)
    assert m_found
    assert found == listed, detail


# 8 -------------------------------------------------------------------------------

LISTED_QUIVERS = [
    (((0, 1, "a"), (1, 2, "a")), ((0, 1), (0, 2), (0, 3))),
    (((0, 1, "a"), (1, 2, "b")), ((0, 1), (0, 3), (2, 1))),
    (((0, 1, "a"), (2, 1, "b")), ((1, 1), (1, 2), (0, 3))),
    (((1, 0, "a"), (1, 2, "b")), ((0, 3), (0, 2), (1, 1))),
    (((0, 1, "b"), (1, 2, "b")), ((0, 3), (1, 2), (2, 1))),
    (((0, 1, "b"), (1, 2, "a")), ((0, 3), (2, 1), (2, 3))),
]
TWELVE = [
    ("P(1)", "P(2)", "P(3)"), ("P(1)", "P(3)", "S(3)"), ("P(3)", "I(2)", "S(2)"),
    ("P(2)", "P(3)", "S(2)"), ("P(3)", "I(2)", "S(3)"), ("P(3)", "S(3)", "ΣS(2)"),
    ("S(2)", "I(2)", "ΣP(1)"), ("S(2)", "ΣP(1)", "ΣP(3)"), ("ΣP(1)", "ΣP(2)", "S(3)"),
    ("I(2)", "ΣP(1)", "S(3)"), ("S(3)", "ΣP(2)", "ΣS(2)"), ("S(3)", "ΣS(2)", "Σ^2P(1)"),
]


def test_c08_a3():
    qs = dynkin.at_quivers(3)
    phi_bad = []
    matched = set()
    for edges, want in LISTED_QUIVERS:
        Q = dynkin.AtQuiver(3, edges)
        phi = dynkin.phi_q(Q)
        if tuple(phi[v] for v in range(3)) != want:
            phi_bad.append(edges)
        matched |= {k for k, R in enumerate(qs) if dynkin.isomorphic(Q, R)}
    classes = dynkin.tilting_classes(3)
    names = {frozenset(dynkin.module_name(3, v) for v in T) for T in classes}
    want_names = {frozenset(T) for T in TWELVE}
    ok = len(qs) == 6 and len(matched) == 6 and not phi_bad and len(classes) == 12 and names == want_names
    record(8, ok, f"{len(qs)} quivers, {len(phi_bad)} phi_Q mismatches, {len(classes)} tilting classes")
    assert len(qs) == 6 and len(matched) == 6
    assert not phi_bad
    assert len(classes) == 12 and names == want_names


# 9 -------------------------------------------------------------------------------

def test_c09_oracle():
    from ddcat.oracle import dictionary

    t0 = time.time()
    D = dictionary.build_dictionary(make_params(2, 3, 1), window=4)
    checks = dictionary.cross_check(D, count=200, seed=9)
    dt = time.time() - t0
    eng = sum(c.engine != c.stable for c in checks)
    comb = sum(c.combinatorial != c.linear for c in checks)
    nonzero = sum(c.engine > 0 for c in checks)
    ok = len(checks) == 200 and eng == 0 and comb == 0 and dt < 120
    record(
        9, ok,
        f"{len(checks)} pairs ({nonzero} nonzero), engine/stable mismatches {eng}, "
        f"combinatorial/linear mismatches {comb}, {dt:.1f}s",
    )
    assert len(checks) == 200 and eng == 0 and comb == 0
    assert dt < 120


# 10 ------------------------------------------------------------------------------

def test_c10_euler_additivity():
    rng = random.Random(10)
    bad = []
    for n in range(500):
        P = make_params(*GRID[n % len(GRID)])
        kind = rng.choice(("ray", "coray"))
        k = rng.randrange(P.r)
        i, j, d = rng.randint(-6, 6), rng.randint(-6, 6), rng.randint(0, 6)
        left, mid, right = special_triangle(kind, k, i, j, d)
        tests = rng.sample(window_objects(P, BOUND), 20)
        for T in tests:
            e = hammocks.euler_char
            if e(P, T, mid) != e(P, T, left) + e(P, T, right):
                bad.append((P, kind, k, i, j, d, T))
    record(10, not bad, f"500 triangles x 20 test objects, {len(bad)} failures")
    assert not bad, bad[:5]


# 11 ------------------------------------------------------------------------------

def test_c11_string_mesh():
    from ddcat.core import Params
    from ddcat.oracle import reps as R
    from ddcat.oracle import strings as S
    from ddcat.oracle.quiver import build_repetitive

    q = build_repetitive(Params(2, 3, 1), 4)
    rng = random.Random(11)
    checked = 0
    comm_bad = 0
    mesh_bad = 0
    while checked < 200:
        w = S.random_string(q, rng, 10, window=2)
        a, b = S.shift_left(q, w), S.shift_right(q, w)
        if a is None or b is None:
            continue  # w sits at a mouth, only one irreducible map leaves it
        checked += 1
        x, y = S.shift_right(q, a), S.shift_left(q, b)
        if x is None or y is None or not S.same_module(x, y):
            comm_bad += 1
            continue
        dim = lambda s: R.string_rep(q, s).total
        gap = dim(w) + dim(x) - dim(a) - dim(b)
        if gap and not _is_radical_of_projective(q, w, gap):
            mesh_bad += 1

    P = lambda t: S.parse_string(q, t)
    one = S.trivial((0, -1), 1)
    chain = [
        one,
        P("d~@-1 . y@-1"),
        P("a@-1 . d~@-1 . y@-1"),
        P("c@-2 . y@-2 . a@-1 . d~@-1 . y@-1"),
        P("y@-1"),
        P("c@-1 . y@-1"),
        P("x~@-1 . b@-1 . c@-1 . y@-1"),
        P("a@0 . b@0 . c@0 . x~@-1 . b@-1 . c@-1 . y@-1"),
        P("b@-1 . c@-1 . y@-1"),
    ]
    # consecutive entries without an ellipsis between them are one hook apart
    direct_steps = [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (7, 8)]
    chain_ok = all(S.geiss_less(q, u, v) for u, v in zip(chain, chain[1:]))
    chain_ok &= all(S.shift_left(q, chain[s]) == chain[t] for s, t in direct_steps)
    # the two cohook removals shorten the string
    chain_ok &= len(chain[4]) < len(chain[3]) and len(chain[8]) < len(chain[7])
    # the elided stretch x~bcy < ... < abc x~bcy is reached by hooks
    w = chain[6]
    for _ in range(3):
        w = S.shift_left(q, w)
    chain_ok &= w is not None and S.geiss_leq(q, chain[6], w)
    simple = R.string_rep(q, one)
    chain_ok &= all(R.hom_dim_linear(simple, R.string_rep(q, u)) == 1 for u in chain)

    cy = chain[5]
    triangle_ok = (
        S.shift_left(q, cy) == P("x~@-1 . b@-1 . c@-1 . y@-1")
        and S.shift_right(q, cy) == P("c@-1")
        and S.ar_translate_inv(q, cy) == P("x~@-1 . b@-1 . c@-1")
    )
    ok = comm_bad == 0 and mesh_bad == 0 and chain_ok and triangle_ok
    record(
        11, ok,
        f"{checked} strings: {comm_bad} hook commutation failures, {mesh_bad} mesh failures; "
        f"Geiss chain {'ok' if chain_ok else 'wrong'}, AR triangle {'ok' if triangle_ok else 'wrong'}",
    )
    assert comm_bad == 0 and mesh_bad == 0
    assert chain_ok and triangle_ok


def _is_radical_of_projective(q, w, gap) -> bool:
    """Whether M(w) = rad P(v) for a projective P(v) of dimension gap."""
    from ddcat.oracle import reps as R
    from ddcat.oracle import strings as S

    M = R.string_rep(q, w)
    for v in q.vertices:
        if not q.in_window(v):
            continue
        Pv, _ = R.projective(q, v)
        if Pv.total != gap or Pv.total - 1 != M.total:
            continue
        if R.is_isomorphic(M, R.syzygy(R.string_rep(q, S.trivial(v, 1)))):
            return True
    return False


if __name__ == "__main__":
    pytest.main([__file__, "-q"])
