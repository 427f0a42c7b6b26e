"""Hom dimensions between indecomposables via closed-form hammocks.

Every hammock is a union of ray/coray regions, so each clause is a
conjunction of coordinate inequalities.  The same predicate code runs on
Python ints and on numpy arrays, which lets callers scan whole windows of
targets in one call.  For r = 1 the clauses for components k and k+1
coincide, and summing them yields dimension 2 exactly on the overlap.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field

import numpy as np

from .core import (
    KINDS,
    NotApplicable,
    ObjCoord,
    Params,
    X,
    Y,
    check_coord,
    height,
    serre,
    sigma,
)

KIND_CODE = {k: n for n, k in enumerate(KINDS)}
_XK, _YK, _ZK = 0, 1, 2


def _clauses(P: Params, A: ObjCoord, kind, comp, I, J):
    """Dimension of Hom(A, B) for B = (kind, comp, I, J); works elementwise."""
    k = A.comp
    i, j = A.i, A.j
    if A.kind == "X":
        S = serre(P, A)
        kn, p, q = S.comp, S.i, S.j
        return (
            ((kind == _XK) & (comp == k) & (i <= I) & (I <= j) & (J >= j)) * 1
            + ((kind == _XK) & (comp == kn) & (I <= p) & (p <= J) & (J <= q))
            + ((kind == _ZK) & (comp == k) & (i <= I) & (I <= j))
        )
    if A.kind == "Y":
        S = serre(P, A)
        kn, p, q = S.comp, S.i, S.j
        return (
            ((kind == _YK) & (comp == k) & (I >= i) & (j <= J) & (J <= i)) * 1
            + ((kind == _YK) & (comp == kn) & (q <= I) & (I <= p) & (J <= q))
            + ((kind == _ZK) & (comp == k) & (j <= J) & (J <= i))
        )
    x0 = serre(P, X(k, i, i))
    y0 = serre(P, Y(k, j, j))
    S = serre(P, A)
    kn, a, b, p, q = S.comp, x0.i, y0.i, S.i, S.j
    return (
        ((kind == _XK) & (comp == kn) & (I <= a) & (a <= J)) * 1
        + ((kind == _YK) & (comp == kn) & (J <= b) & (b <= I))
        + ((kind == _ZK) & (comp == k) & (I >= i) & (J >= j))
        + ((kind == _ZK) & (comp == kn) & (I <= p) & (J <= q))
    )


def hom_dim(P: Params, A: ObjCoord, B: ObjCoord) -> int:
    check_coord(P, A)
    check_coord(P, B)
    return int(_clauses(P, A, KIND_CODE[B.kind], B.comp, B.i, B.j))


@dataclass(frozen=True)
class TargetArray:
    """A batch of objects stored column-wise for vectorised hom scans."""

    kind: np.ndarray
    comp: np.ndarray
    i: np.ndarray
    j: np.ndarray
    objects: list = field(default_factory=list, compare=False)

    @classmethod
    def from_objects(cls, objs) -> "TargetArray":
        objs = list(objs)
        return cls(
            np.array([KIND_CODE[o.kind] for o in objs], dtype=np.int64),
            np.array([o.comp for o in objs], dtype=np.int64),
            np.array([o.i for o in objs], dtype=np.int64),
            np.array([o.j for o in objs], dtype=np.int64),
            objs,
        )

    def __len__(self) -> int:
        return len(self.kind)

    def shifted(self, P: Params, d: int) -> "TargetArray":
        """Sigma^d applied to every member."""
        q, comp = np.divmod(self.comp + d, P.r)
        di = np.select([self.kind == _XK, self.kind == _YK], [P.r + P.m, P.r - P.n], P.r + P.m)
        dj = np.select([self.kind == _XK, self.kind == _YK], [P.r + P.m, P.r - P.n], P.r - P.n)
        return TargetArray(self.kind, comp, self.i + q * di, self.j + q * dj)


def hom_dims(P: Params, A: ObjCoord, T: TargetArray) -> np.ndarray:
    return np.asarray(_clauses(P, A, T.kind, T.comp, T.i, T.j), dtype=np.int64)


# --- degree window -----------------------------------------------------------

def _margin(P: Params) -> int:
    return P.n + P.m + P.r + 2


def _t_range(P: Params, A: ObjCoord, B: ObjCoord) -> tuple[int, int]:
    """Range of full turns t such that Sigma^{s+rt} B may meet a hammock of A.

    Under Sigma^r the ray index moves by m+r and the coray index by r-n, so
    outside this range every target has left all bands for good.
    """
    K = _margin(P)
    lo = min(A.i, A.j) - K
    hi = max(A.i, A.j) + K
    al, be = P.alpha, P.beta
    if B.kind == "X":
        return math.ceil((lo - B.j) / al), math.floor((hi - B.i) / al)
    if B.kind == "Y":
        return math.ceil((B.j - hi) / be), math.floor((B.i - lo) / be)
    t1 = min((lo - B.i) / al, (B.j - hi) / be)
    t2 = max((hi - B.i) / al, (B.j - lo) / be)
    return math.floor(t1), math.ceil(t2)


def degree_range(P: Params, A: ObjCoord, B: ObjCoord) -> range:
    """A range of degrees d outside which Hom(A, Sigma^d B) vanishes."""
    t1, t2 = _t_range(P, A, B)
    return range(P.r * t1 - P.r, P.r * t2 + 2 * P.r)


@lru_cache(maxsize=1 << 18)
def _graded_hom_cached(P: Params, A: ObjCoord, B: ObjCoord) -> tuple:
    degs = degree_range(P, A, B)
    if len(degs) == 0:
        return ()
    d = np.arange(degs.start, degs.stop, dtype=np.int64)
    q, comp = np.divmod(B.comp + d, P.r)
    di, dj = _WRAP[B.kind](P)
    dims = np.asarray(
        _clauses(P, A, KIND_CODE[B.kind], comp, B.i + q * di, B.j + q * dj), dtype=np.int64
    )
    nz = np.nonzero(dims)[0]
    return tuple((int(d[k]), int(dims[k])) for k in nz)


_WRAP = {
    "X": lambda P: (P.r + P.m, P.r + P.m),
    "Y": lambda P: (P.r - P.n, P.r - P.n),
    "Z": lambda P: (P.r + P.m, P.r - P.n),
}


def graded_hom(P: Params, A: ObjCoord, B: ObjCoord) -> dict[int, int]:
    """Nonzero entries of d -> dim Hom(A, Sigma^d B), ascending in d."""
    check_coord(P, A)
    check_coord(P, B)
    return dict(_graded_hom_cached(P, A, B))


def graded_hom_dense(P: Params, A: ObjCoord, T: TargetArray, dmin: int, dmax: int) -> np.ndarray:
    """Matrix of hom dimensions, rows = degrees dmin..dmax, columns = targets."""
    rows = [hom_dims(P, A, T.shifted(P, d)) for d in range(dmin, dmax + 1)]
    return np.vstack(rows) if rows else np.zeros((0, len(T)), dtype=np.int64)


def euler_char(P: Params, T: ObjCoord, A: ObjCoord) -> int:
    return sum((-1) ** (d % 2) * v for d, v in graded_hom(P, T, A).items())


# --- endomorphism complexes and object types ---------------------------------

def lambdas(P: Params, A: ObjCoord) -> tuple[int, int]:
    """(lambda+, lambda-) for an object of an X or Y component."""
    h = height(A)
    if A.kind == "X":
        return h // P.alpha, (h + 1) // P.alpha
    return (h + 1) // P.beta, h // P.beta


def endo_complex(P: Params, A: ObjCoord) -> dict[int, int]:
    if A.kind == "Z":
        return {0: 1}
    lp, lm = lambdas(P, A)
    out: dict[int, int] = {}

    def add(d):
        out[d] = out.get(d, 0) + 1

    if A.kind == "X":
        for l in range(lp + 1):
            add(l * P.r)
        for l in range(1, lm + 1):
            add(1 - l * P.r)
    else:
        for l in range(lm + 1):
            add(-l * P.r)
        for l in range(1, lp + 1):
            add(l * P.r + 1)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class ObjectClass:
    tag: str  # "Exceptional", "Spherelike" or "Big"
    d: int | None = None
    spherical: bool = False

    def __str__(self) -> str:
        if self.tag == "Spherelike":
            s = f"Spherelike({self.d})"
            return s + " spherical" if self.spherical else s
        return self.tag


def classify(P: Params, A: ObjCoord) -> ObjectClass:
    check_coord(P, A)
    if A.kind == "Z":
        return ObjectClass("Exceptional")
    h = height(A)
    edge = P.alpha - 1 if A.kind == "X" else P.beta - 1
    if h < edge:
        return ObjectClass("Exceptional")
    if h > edge:
        return ObjectClass("Big")
    if A.kind == "X":
        # an X mouth object is 0-spherical when m = 0 and r = 1
        return ObjectClass("Spherelike", 1 - P.r, spherical=(h == 0))
    return ObjectClass("Spherelike", 1 + P.r, spherical=(h == 0))


def is_spherelike_endo(endo: dict[int, int], d: int) -> bool:
    if d == 0:
        return endo == {0: 2}
    return endo == {0: 1, -d: 1}


def to_json_graded(g: dict[int, int]) -> dict[str, int]:
    return {str(d): v for d, v in sorted(g.items())}


def region_r1_square(P: Params, A: ObjCoord, B: ObjCoord) -> bool:
    """Whether B lies in both X-regions (or both Y-regions) of A when r = 1."""
    if P.r != 1 or A.kind != B.kind or A.kind == "Z":
        return False
    S = serre(P, A)
    if A.kind == "X":
        first = A.i <= B.i <= A.j and B.j >= A.j
        second = B.i <= S.i <= B.j <= S.j
    else:
        first = B.i >= A.i and A.j <= B.j <= A.i
        second = S.j <= B.i <= S.i and B.j <= S.j
    return first and second


__all__ = [
    "NotApplicable",
    "ObjectClass",
    "TargetArray",
    "classify",
    "degree_range",
    "endo_complex",
    "euler_char",
    "graded_hom",
    "graded_hom_dense",
    "graded_scan",
    "hom_dim",
    "hom_dims",
    "lambdas",
    "region_r1_square",
    "to_json_graded",
]


def _scan_degrees(P: Params, A: ObjCoord, T: TargetArray) -> range:
    """Union of degree_range(A, B) over the targets, computed columnwise."""
    K = _margin(P)
    lo = min(A.i, A.j) - K
    hi = max(A.i, A.j) + K
    al, be = P.alpha, P.beta
    t1 = np.select(
        [T.kind == _XK, T.kind == _YK],
        [-((T.j - lo) // al), -((hi - T.j) // be)],
        np.floor(np.minimum((lo - T.i) / al, (T.j - hi) / be)).astype(np.int64),
    )
    t2 = np.select(
        [T.kind == _XK, T.kind == _YK],
        [(hi - T.i) // al, (T.i - lo) // be],
        np.ceil(np.maximum((hi - T.i) / al, (T.j - lo) / be)).astype(np.int64),
    )
    ok = t1 <= t2
    if not ok.any():
        return range(0)
    return range(P.r * int(t1[ok].min()) - P.r, P.r * int(t2[ok].max()) + 2 * P.r)


def graded_scan(P: Params, A: ObjCoord, T: TargetArray) -> tuple[range, np.ndarray]:
    """Hom(A, Sigma^d B) for every target B and every degree that can be nonzero.

    Returns the degree range together with a (degrees x targets) matrix.
    """
    degs = _scan_degrees(P, A, T)
    if not len(degs) or not len(T):
        return degs, np.zeros((len(degs), len(T)), dtype=np.int64)
    d = np.arange(degs.start, degs.stop, dtype=np.int64)[:, None]
    q, comp = np.divmod(T.comp[None, :] + d, P.r)
    di = np.select([T.kind == _XK, T.kind == _YK], [P.r + P.m, P.r - P.n], P.r + P.m)
    dj = np.select([T.kind == _XK, T.kind == _YK], [P.r + P.m, P.r - P.n], P.r - P.n)
    kind = np.broadcast_to(T.kind, q.shape)
    M = _clauses(P, A, kind, comp, T.i + q * di, T.j + q * dj)
    return degs, np.asarray(M, dtype=np.int64)
