"""Parameters, object coordinates and the elementary functors tau, Sigma, S.

Indecomposable objects of D^b(Lambda(r,n,m)) live in 3r AR components
X^k, Y^k (type ZA_inf) and Z^k (type ZA_inf_inf), k = 0..r-1.  An object
is addressed by (kind, k, i, j); irreducible maps increase i or j by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

KINDS = ("X", "Y", "Z")
_KIND_RANK = {k: n for n, k in enumerate(KINDS)}


class InvalidParams(ValueError):
    pass


class InvalidCoord(ValueError):
    pass


class NotApplicable(ValueError):
    pass


class OffComponent(ValueError):
    pass


@dataclass(frozen=True)
class Params:
    r: int
    n: int
    m: int

    @property
    def rank(self) -> int:
        """Rank of the Grothendieck group, i.e. number of quiver vertices."""
        return self.n + self.m

    # periods of Sigma^r on the ray / coray index
    @property
    def alpha(self) -> int:
        return self.m + self.r

    @property
    def beta(self) -> int:
        return self.n - self.r

    def __str__(self) -> str:
        return f"{self.r},{self.n},{self.m}"


def make_params(r: int, n: int, m: int) -> Params:
    if r < 1:
        raise InvalidParams(f"r must be >= 1 (got {r})")
    if n <= r:
        raise InvalidParams(f"need n > r (got n={n}, r={r})")
    if m < 0:
        raise InvalidParams(f"m must be >= 0 (got {m})")
    return Params(r, n, m)


def parse_params(text: str) -> Params:
    parts = text.split(",")
    if len(parts) != 3:
        raise InvalidParams(f"expected r,n,m but got {text!r}")
    try:
        r, n, m = (int(p) for p in parts)
    except ValueError:
        raise InvalidParams(f"non-integer entry in {text!r}") from None
    return make_params(r, n, m)


@dataclass(frozen=True, order=False)
class ObjCoord:
    kind: str
    comp: int
    i: int
    j: int

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise InvalidCoord(f"unknown kind {self.kind!r}")
        if self.kind == "X" and self.j < self.i:
            raise InvalidCoord(f"X object needs j >= i: {self}")
        if self.kind == "Y" and self.i < self.j:
            raise InvalidCoord(f"Y object needs i >= j: {self}")

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.comp, self.i, self.j)

    def __lt__(self, other: "ObjCoord") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return f"{self.kind}:{self.comp}:{self.i}:{self.j}"

    def __repr__(self) -> str:
        return f"{self.kind}^{self.comp}_{{{self.i},{self.j}}}"


def X(k: int, i: int, j: int) -> ObjCoord:
    return ObjCoord("X", k, i, j)


def Y(k: int, i: int, j: int) -> ObjCoord:
    return ObjCoord("Y", k, i, j)


def Z(k: int, i: int, j: int) -> ObjCoord:
    return ObjCoord("Z", k, i, j)


_FIELDS = ("kind", "k", "i", "j")


def parse_coord(text: str, P: Params | None = None) -> ObjCoord:
    """Parse KIND:k:i:j; errors name the offending field and its column."""
    parts = text.strip().split(":")
    if len(parts) != 4:
        raise InvalidCoord(f"cannot parse {text!r}: expected 4 fields KIND:k:i:j, got {len(parts)}")
    col = 1
    vals = []
    for name, part in zip(_FIELDS, parts):
        if name == "kind":
            if part not in _KIND_RANK:
                raise InvalidCoord(f"{text!r} col {col}: kind must be X, Y or Z, got {part!r}")
            vals.append(part)
        else:
            try:
                vals.append(int(part))
            except ValueError:
                raise InvalidCoord(f"{text!r} col {col}: field {name} is not an integer: {part!r}") from None
        col += len(part) + 1
    kind, k, i, j = vals
    if k < 0 or (P is not None and k >= P.r):
        raise InvalidCoord(f"{text!r} col 3: component index {k} out of range")
    return ObjCoord(kind, k, i, j)


def check_coord(P: Params, A: ObjCoord) -> None:
    if not 0 <= A.comp < P.r:
        raise InvalidCoord(f"component index out of range for r={P.r}: {A}")


def height(A: ObjCoord) -> int:
    if A.kind == "X":
        return A.j - A.i
    if A.kind == "Y":
        return A.i - A.j
    raise NotApplicable("Z components have no mouth")


def tau(A: ObjCoord, power: int = 1) -> ObjCoord:
    return ObjCoord(A.kind, A.comp, A.i - power, A.j - power)


def _wrap_shift(P: Params, kind: str) -> tuple[int, int]:
    if kind == "X":
        return P.r + P.m, P.r + P.m
    if kind == "Y":
        return P.r - P.n, P.r - P.n
    return P.r + P.m, P.r - P.n


def sigma(P: Params, A: ObjCoord, power: int = 1) -> ObjCoord:
    # Sigma^power with power = q*r + s: q full turns of the wrap shift,
    # then s single steps
    q, s = divmod(A.comp + power, P.r)
    di, dj = _wrap_shift(P, A.kind)
    return ObjCoord(A.kind, s, A.i + q * di, A.j + q * dj)


def sigma_exponent(P: Params, A: ObjCoord, B: ObjCoord) -> int | None:
    """The d with Sigma^d A = B, or None if B is not a suspension of A."""
    if A.kind != B.kind:
        return None
    c = (B.comp - A.comp) % P.r
    A1 = sigma(P, A, c)
    di, dj = _wrap_shift(P, A.kind)
    q, rem = divmod(B.i - A1.i, di)
    if rem or B.j - A1.j != q * dj:
        return None
    return c + q * P.r


def serre(P: Params, A: ObjCoord, power: int = 1) -> ObjCoord:
    return sigma(P, tau(A, power), power)


RAY, CORAY = "ray_step", "coray_step"


def mesh_move(A: ObjCoord, direction: str, sign: int = 1) -> ObjCoord:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if direction == RAY:
        i, j = A.i, A.j + sign
    elif direction == CORAY:
        i, j = A.i + sign, A.j
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if (A.kind == "X" and j < i) or (A.kind == "Y" and i < j):
        raise OffComponent(f"{direction} {sign:+d} from {A} leaves the component")
    return ObjCoord(A.kind, A.comp, i, j)


def mesh_neighbours(A: ObjCoord) -> Iterator[ObjCoord]:
    """Targets of the irreducible maps starting at A."""
    for d in (RAY, CORAY):
        try:
            yield mesh_move(A, d, 1)
        except OffComponent:
            pass


RAY_MOUTH, CORAY_MOUTH = "ray_mouth", "coray_mouth"


def mouth_projection(P: Params, A: ObjCoord, which: str) -> ObjCoord:
    """Mouth objects attached to A.

    For X: ray_mouth is X_ii (start of the ray through A), coray_mouth is X_jj.
    For Y: coray_mouth is Y_ii, ray_mouth is Y_jj.
    For Z^k_ij: ray_mouth is the X^{k+1} mouth object receiving a map from A,
    coray_mouth the Y^{k+1} one.  Both are S applied to the mouth objects
    X^k_ii and Y^k_jj.
    """
    k, i, j = A.comp, A.i, A.j
    if A.kind == "X":
        return X(k, i, i) if which == RAY_MOUTH else X(k, j, j)
    if A.kind == "Y":
        return Y(k, i, i) if which == CORAY_MOUTH else Y(k, j, j)
    if which == RAY_MOUTH:
        return serre(P, X(k, i, i))
    return serre(P, Y(k, j, j))


def special_triangle(kind: str, k: int, i: int, j: int, d: int):
    """The triangles X -> Z -> Z and Y -> Z -> Z along rays and corays."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if kind == "ray":
        return X(k, i, i + d), Z(k, i, j), Z(k, i + d + 1, j)
    if kind == "coray":
        return Y(k, j + d, j), Z(k, i, j), Z(k, i, j + d + 1)
    raise ValueError(f"unknown triangle kind {kind!r}")


def window_objects(P: Params, bound: int, kinds=KINDS) -> list[ObjCoord]:
    """All objects with |i|, |j| <= bound, sorted."""
    out = []
    rng = range(-bound, bound + 1)
    for kind in kinds:
        for k in range(P.r):
            for i in rng:
                for j in rng:
                    if kind == "X" and j < i:
                        continue
                    if kind == "Y" and i < j:
                        continue
                    out.append(ObjCoord(kind, k, i, j))
    return out
