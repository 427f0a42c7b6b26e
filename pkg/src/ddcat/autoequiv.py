"""Object-level autoequivalences Sigma^a T_X^b T_Y^c.

The group is abelian; on objects Sigma^r = T_X^(m+r) T_Y^(r-n), so triples
are compared modulo the relation vector (r, m+r, r-n).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .core import ObjCoord, Params, sigma, tau


class NotZComponent(ValueError):
    pass


@dataclass(frozen=True)
class AutoEq:
    a: int = 0
    b: int = 0
    c: int = 0

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c]

    def __str__(self) -> str:
        return f"S^{self.a} TX^{self.b} TY^{self.c}"


IDENTITY = AutoEq()
_TEXT_RE = re.compile(r"^\s*S\^(-?\d+)\s+TX\^(-?\d+)\s+TY\^(-?\d+)\s*$")


def parse_autoeq(text: str) -> AutoEq:
    m = _TEXT_RE.match(text)
    if not m:
        raise ValueError(f"expected 'S^a TX^b TY^c', got {text!r}")
    return AutoEq(*(int(g) for g in m.groups()))


def relation_vector(P: Params) -> tuple[int, int, int]:
    return P.r, P.m + P.r, P.r - P.n


def normal_form(P: Params, phi: AutoEq) -> AutoEq:
    q, a = divmod(phi.a, P.r)
    _, rb, rc = relation_vector(P)
    return AutoEq(a, phi.b + q * rb, phi.c + q * rc)


def compose(P: Params, phi: AutoEq, psi: AutoEq) -> AutoEq:
    return normal_form(P, AutoEq(phi.a + psi.a, phi.b + psi.b, phi.c + psi.c))


def invert(P: Params, phi: AutoEq) -> AutoEq:
    return normal_form(P, AutoEq(-phi.a, -phi.b, -phi.c))


def equal(P: Params, phi: AutoEq, psi: AutoEq) -> bool:
    return normal_form(P, phi) == normal_form(P, psi)


def twist_x(A: ObjCoord, power: int = 1) -> ObjCoord:
    if A.kind == "X":
        return tau(A, -power)
    if A.kind == "Y":
        return A
    return ObjCoord("Z", A.comp, A.i + power, A.j)


def twist_y(A: ObjCoord, power: int = 1) -> ObjCoord:
    if A.kind == "Y":
        return tau(A, -power)
    if A.kind == "X":
        return A
    return ObjCoord("Z", A.comp, A.i, A.j + power)


def apply(P: Params, phi: AutoEq, A: ObjCoord) -> ObjCoord:
    return twist_y(twist_x(sigma(P, A, phi.a), phi.b), phi.c)


def group_structure(P: Params) -> tuple[int, int]:
    """(free rank, torsion order) of Z^3 / <relation vector>."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    snf = smith_normal_form(Matrix([list(relation_vector(P))]), domain=ZZ)
    diag = [abs(int(snf[0, k])) for k in range(min(snf.shape))]
    nonzero = [d for d in diag if d]
    torsion = math.prod(d for d in nonzero if d != 1) if nonzero else 1
    return 3 - len(nonzero), torsion


def transitive_witness(P: Params, Z1: ObjCoord, Z2: ObjCoord) -> AutoEq:
    """The normal-form phi with phi(Z1) = Z2 on Z components."""
    if Z1.kind != "Z" or Z2.kind != "Z":
        raise NotZComponent("transitive_witness needs two Z objects")
    a = (Z2.comp - Z1.comp) % P.r
    W = sigma(P, Z1, a)
    return normal_form(P, AutoEq(a, Z2.i - W.i, Z2.j - W.j))
