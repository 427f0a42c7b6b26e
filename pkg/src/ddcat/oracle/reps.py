"""Explicit representations over a prime field: string modules, projectives,
Hom spaces, stable Hom and (co)syzygies."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .quiver import RepQuiver, WindowEscape
from .strings import StringWord, l_end, l_start, vertices


@dataclass
class Rep:
    q: RepQuiver
    dims: dict  # vertex -> int (only nonzero entries)
    mats: dict  # arrow id -> (dim dst) x (dim src) array

    def dim(self, v) -> int:
        return self.dims.get(v, 0)

    def mat(self, a) -> np.ndarray:
        M = self.mats.get(a.id)
        if M is None:
            return np.zeros((self.dim(a.dst), self.dim(a.src)), dtype=np.int64)
        return M

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple:
        return tuple(sorted((v, d) for v, d in self.dims.items() if d))

    def arrows(self):
        """Arrows with both ends in the support."""
        for v in self.dims:
            for a in self.q.out_arrows.get(v, ()):
                if a.dst in self.dims:
                    yield a


def string_rep(q: RepQuiver, w: StringWord) -> Rep:
    V = vertices(q, w)
    for v in V:
        if not q.lo <= v[0] <= q.hi:
            raise WindowEscape(f"string leaves levels [{q.lo}, {q.hi}]")
    local: list[int] = []
    dims: dict = {}
    for v in V:
        local.append(dims.get(v, 0))
        dims[v] = dims.get(v, 0) + 1
    mats: dict = {}
    for k, L in enumerate(w.letters):
        a = q.arrows[L[0]]
        if a.id not in mats:
            mats[a.id] = np.zeros((dims[a.dst], dims[a.src]), dtype=np.int64)
        if L[1]:
            src_pos, dst_pos = local[k + 1], local[k]
        else:
            src_pos, dst_pos = local[k], local[k + 1]
        mats[a.id][dst_pos, src_pos] = 1
    return Rep(q, dims, mats)


def satisfies_relations(M: Rep) -> bool:
    """Check the zero and commutativity relations of the repetitive algebra."""
    p = linalg.working_prime()
    rels = M.q.relations()

    def act(path):
        a0 = M.q.arrows[path[0]]
        out = np.eye(M.dim(a0.src), dtype=np.int64)
        for aid in path:
            out = (M.mat(M.q.arrows[aid]) @ out) % p
        return out

    for path in rels["zero"] + rels["connecting"]:
        if np.any(act(path)):
            return False
    for f1, f2 in rels["commutativity"]:
        if np.any((act(f1) - act(f2)) % p):
            return False
    return True


# --- projective-injectives --------------------------------------------------------

def projective(q: RepQuiver, v) -> tuple[Rep, dict]:
    """P(v) = paths from v; returns the rep and path -> (vertex, local index)."""
    fulls = [f for f in q.full_paths if q.arrows[f[0]].src == v]
    if len(fulls) != q.full_count.get(v[1], 0):
        raise WindowEscape(f"projective at {v} does not fit in the materialised band")
    dims: dict = {}
    index: dict = {}

    def place(key, vert):
        index[key] = (vert, dims.get(vert, 0))
        dims[vert] = dims.get(vert, 0) + 1

    place((), v)
    soc_vertex = q.arrows[fulls[0][-1]].dst
    for f in fulls:
        for k in range(1, len(f)):
            place(f[:k], q.arrows[f[k - 1]].dst)
    place("soc", soc_vertex)
    mats: dict = {}
    for f in fulls:
        for k in range(len(f)):
            a = q.arrows[f[k]]
            src = index[f[:k]]
            dst = index[f[: k + 1]] if k + 1 < len(f) else index["soc"]
            if a.id not in mats:
                mats[a.id] = np.zeros((dims[a.dst], dims[a.src]), dtype=np.int64)
            mats[a.id][dst[1], src[1]] = 1
    return Rep(q, dims, mats), index


def direct_sum(reps: list[Rep]) -> tuple[Rep, list[dict]]:
    """The sum and, for each summand, vertex -> offset inside the sum."""
    q = reps[0].q
    dims: dict = {}
    offsets = []
    for R in reps:
        off = {}
        for v, d in R.dims.items():
            off[v] = dims.get(v, 0)
            dims[v] = dims.get(v, 0) + d
        offsets.append(off)
    mats: dict = {}
    for R, off in zip(reps, offsets):
        for aid, M in R.mats.items():
            a = q.arrows[aid]
            if aid not in mats:
                mats[aid] = np.zeros((dims[a.dst], dims[a.src]), dtype=np.int64)
            r0, c0 = off[a.dst], off[a.src]
            mats[aid][r0:r0 + M.shape[0], c0:c0 + M.shape[1]] = M
    return Rep(q, dims, mats), offsets


# --- Hom spaces -----------------------------------------------------------------

def _hom_system(M: Rep, N: Rep):
    common = [v for v in M.dims if N.dim(v) and M.dim(v)]
    pos = {}
    n = 0
    for v in common:
        pos[v] = n
        n += N.dim(v) * M.dim(v)
    blocks = []
    for v in common:
        for a in M.q.out_arrows.get(v, ()):
            w = a.dst
            rows = N.dim(w) * M.dim(v)
            if rows == 0:
                continue
            B = np.zeros((rows, n), dtype=np.int64)
            # N_a f_v - f_w M_a = 0, row-major vec(A X B) = (A kron B^T) vec X
            B[:, pos[v]:pos[v] + N.dim(v) * M.dim(v)] += np.kron(N.mat(a), np.eye(M.dim(v), dtype=np.int64))
            if w in pos:
                B[:, pos[w]:pos[w] + N.dim(w) * M.dim(w)] -= np.kron(
                    np.eye(N.dim(w), dtype=np.int64), M.mat(a).T
                )
            blocks.append(B)
    # arrows into a common vertex from a vertex outside it impose f_w M_a = 0
    for w in common:
        for a in M.q.in_arrows.get(w, ()):
            v = a.src
            if v in pos or not M.dim(v):
                continue
            B = np.zeros((N.dim(w) * M.dim(v), n), dtype=np.int64)
            B[:, pos[w]:pos[w] + N.dim(w) * M.dim(w)] = np.kron(np.eye(N.dim(w), dtype=np.int64), M.mat(a).T)
            blocks.append(B)
    A = np.vstack(blocks) if blocks else np.zeros((0, n), dtype=np.int64)
    return common, pos, A


def hom_basis(M: Rep, N: Rep) -> list[dict]:
    p = linalg.working_prime()
    common, pos, A = _hom_system(M, N)
    if not common:
        return []
    ns = linalg.nullspace(A % p, p)
    out = []
    for vec in ns:
        f = {}
        for v in common:
            k = pos[v]
            f[v] = vec[k:k + N.dim(v) * M.dim(v)].reshape(N.dim(v), M.dim(v))
        out.append(f)
    return out


def hom_dim_linear(M: Rep, N: Rep) -> int:
    p = linalg.working_prime()
    common, _, A = _hom_system(M, N)
    if not common:
        return 0
    return A.shape[1] - linalg.rank(A % p, p)


def _flatten(f: dict, keys, shapes) -> np.ndarray:
    parts = []
    for v in keys:
        if v in f:
            parts.append(f[v].reshape(-1))
        else:
            parts.append(np.zeros(shapes[v][0] * shapes[v][1], dtype=np.int64))
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


# --- covers and envelopes ----------------------------------------------------------

def _path_action(N: Rep, path, vec: np.ndarray, p: int) -> np.ndarray:
    out = vec
    for aid in path:
        out = (N.mat(N.q.arrows[aid]) @ out) % p
    return out


def top_basis(N: Rep) -> list[tuple]:
    """(vertex, vector) pairs spanning a complement of rad N."""
    p = linalg.working_prime()
    out = []
    for v in sorted(N.dims):
        d = N.dim(v)
        ims = [N.mat(a) for a in N.q.in_arrows.get(v, ()) if N.dim(a.src)]
        R = np.hstack(ims) if ims else np.zeros((d, 0), dtype=np.int64)
        cur = R.T.copy() if R.size else np.zeros((0, d), dtype=np.int64)
        r0 = linalg.rank(cur, p) if cur.size else 0
        for k in range(d):
            e = np.zeros(d, dtype=np.int64)
            e[k] = 1
            trial = np.vstack([cur, e[None, :]]) if cur.size else e[None, :]
            r1 = linalg.rank(trial, p)
            if r1 > r0:
                cur, r0 = trial, r1
                out.append((v, e))
    return out


def projective_cover(N: Rep):
    """(P, pi) with pi: P -> N given vertexwise as matrices."""
    p = linalg.working_prime()
    tops = top_basis(N)
    summands = [projective(N.q, v) for v, _ in tops]
    Psum, offsets = direct_sum([R for R, _ in summands])
    pi = {v: np.zeros((N.dim(v), d), dtype=np.int64) for v, d in Psum.dims.items()}
    for (v, vec), (R, index), off in zip(tops, summands, offsets):
        for key, (vert, k) in index.items():
            if key == "soc":
                # both full paths act on N; they agree since N kills the socle
                f = next(f for f in N.q.full_paths if N.q.arrows[f[0]].src == v)
                img = _path_action(N, f, vec, p) if N.dim(vert) else np.zeros(0, dtype=np.int64)
            else:
                img = _path_action(N, key, vec, p)
            if N.dim(vert):
                pi[vert][:, off[vert] + k] = img
    return Psum, pi


def _solve(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """X with A X = B, A of full column rank."""
    rows, cols = A.shape
    aug = np.hstack([A, B]) % p
    R, piv = linalg.row_reduce(aug, p)
    if any(c >= cols for c in piv):
        raise ArithmeticError("inconsistent system")
    X = np.zeros((cols, B.shape[1]), dtype=np.int64)
    for r, c in enumerate(piv):
        X[c] = R[r, cols:]
    return X


def _kernel_rep(Pm: Rep, pi: dict) -> Rep:
    p = linalg.working_prime()
    K = {}
    for v, d in Pm.dims.items():
        if pi[v].shape[0] == 0:
            K[v] = np.eye(d, dtype=np.int64)
        else:
            ns = linalg.nullspace(pi[v] % p, p)
            K[v] = ns.T
    dims = {v: k.shape[1] for v, k in K.items() if k.shape[1]}
    mats = {}
    for a in Pm.arrows():
        if a.src in dims and a.dst in dims:
            Y = (Pm.mat(a) @ K[a.src]) % p
            mats[a.id] = _solve(K[a.dst], Y, p)
    return Rep(Pm.q, dims, mats)


def syzygy(N: Rep) -> Rep:
    """Omega N: kernel of the projective cover."""
    Pm, pi = projective_cover(N)
    return _kernel_rep(Pm, pi)


def socle_basis(N: Rep) -> list[tuple]:
    p = linalg.working_prime()
    out = []
    for v in sorted(N.dims):
        outs = [N.mat(a) for a in N.q.out_arrows.get(v, ()) if N.dim(a.dst)]
        if outs:
            ns = linalg.nullspace(np.vstack(outs) % p, p)
        else:
            ns = np.eye(N.dim(v), dtype=np.int64)
        for vec in ns:
            out.append((v, vec))
    return out


def injective(q: RepQuiver, v) -> tuple[Rep, dict]:
    """I(i,x) = P(i-1,x)."""
    return projective(q, (v[0] - 1, v[1]))


def injective_envelope(N: Rep, seed: int = 0):
    """(I, iota) with iota: N -> I injective and I minimal."""
    p = linalg.working_prime()
    socs = socle_basis(N)
    counts: dict = {}
    for v, _ in socs:
        counts[v] = counts.get(v, 0) + 1
    summands = []
    for v in sorted(counts):
        R, _ = injective(N.q, v)
        summands.extend([R] * counts[v])
    Isum, offsets = direct_sum(summands)
    bases = [hom_basis(N, R) for R in summands]
    rng = random.Random(seed)
    for _attempt in range(20):
        iota = {v: np.zeros((Isum.dim(v), d), dtype=np.int64) for v, d in N.dims.items()}
        for R, off, B in zip(summands, offsets, bases):
            coeffs = [rng.randrange(1, p) for _ in B]
            for c, f in zip(coeffs, B):
                for v, blk in f.items():
                    iota[v][off[v]:off[v] + blk.shape[0], :] += c * blk
        iota = {v: m % p for v, m in iota.items()}
        if all(linalg.rank(m, p) == N.dim(v) for v, m in iota.items()):
            return Isum, iota
    raise ArithmeticError("no injective envelope map found")


def _cokernel_rep(Im: Rep, iota: dict) -> Rep:
    p = linalg.working_prime()
    Q = {}
    comp = {}
    for v, d in Im.dims.items():
        img = iota.get(v)
        if img is None or img.shape[1] == 0:
            basis = np.eye(d, dtype=np.int64)
            k = 0
        else:
            R, piv = linalg.row_reduce(img.T % p, p)
            cols = [R[r] for r in range(len(piv))]
            k = len(cols)
            extra = []
            cur = np.array(cols, dtype=np.int64).reshape(k, d)
            rk = k
            for e in range(d):
                vec = np.zeros(d, dtype=np.int64)
                vec[e] = 1
                trial = np.vstack([cur, vec[None, :]])
                if linalg.rank(trial, p) > rk:
                    cur, rk = trial, rk + 1
                    extra.append(vec)
            basis = cur.T
        Q[v] = (basis, k)
        comp[v] = d - k
    dims = {v: c for v, c in comp.items() if c}
    mats = {}
    for a in Im.arrows():
        if a.src in dims and a.dst in dims:
            Bs, ks = Q[a.src]
            Bt, kt = Q[a.dst]
            Y = (Im.mat(a) @ Bs[:, ks:]) % p
            coords = _solve(Bt, Y, p)
            mats[a.id] = coords[kt:, :]
    return Rep(Im.q, dims, mats)


def cosyzygy(N: Rep) -> Rep:
    """Omega^{-1} N: cokernel of the injective envelope."""
    Im, iota = injective_envelope(N)
    return _cokernel_rep(Im, iota)


def shift(N: Rep, d: int) -> Rep:
    """Sigma^d realised as Omega^{-d}."""
    for _ in range(d):
        N = cosyzygy(N)
    for _ in range(-d):
        N = syzygy(N)
    return N


# --- stable Hom -------------------------------------------------------------------

def stable_hom_dim(M: Rep, N: Rep) -> int:
    """dim Hom(M, N) minus maps factoring through the projective cover of N."""
    p = linalg.working_prime()
    total = hom_dim_linear(M, N)
    if total == 0 or not N.dims:
        return total
    Pm, pi = projective_cover(N)
    B = hom_basis(M, Pm)
    if not B:
        return total
    keys = sorted(v for v in M.dims if N.dim(v))
    shapes = {v: (N.dim(v), M.dim(v)) for v in keys}
    rows = []
    for g in B:
        comp = {v: (pi[v] @ g[v]) % p for v in g if v in pi and N.dim(v)}
        rows.append(_flatten(comp, keys, shapes))
    return total - linalg.rank(np.array(rows, dtype=np.int64), p)


# --- isomorphism and identification ---------------------------------------------

def is_isomorphic(M: Rep, N: Rep, seed: int = 0) -> bool:
    if M.dim_vector() != N.dim_vector():
        return False
    p = linalg.working_prime()
    B = hom_basis(M, N)
    if not B:
        return False
    rng = random.Random(seed)
    for _ in range(3):
        coeffs = [rng.randrange(1, p) for _ in B]
        if all(
            linalg.is_invertible(sum(c * f[v] for c, f in zip(coeffs, B)) % p, p)
            for v in M.dims
        ):
            return True
    return False


def strings_with_dims(q: RepQuiver, dims: dict) -> list[StringWord]:
    """All strings (up to inversion) whose dimension vector is `dims`."""
    from .strings import canonical, is_string, trivial

    total = sum(dims.values())
    found = set()
    if total == 1:
        (v,) = [v for v, d in dims.items() if d]
        return [trivial(v, 1)]
    starts = sorted(v for v, d in dims.items() if d)

    def grow(letters, budget, at):
        if len(letters) == total - 1:
            w = StringWord(tuple(letters))
            if is_string(q, w):
                found.add(canonical(w))
            return
        cand = [(a.id, False, a.dst) for a in q.out_arrows.get(at, ())]
        cand += [(a.id, True, a.src) for a in q.in_arrows.get(at, ())]
        for aid, inv, nxt in cand:
            if budget.get(nxt, 0) <= 0:
                continue
            if letters and letters[-1][0] == aid and letters[-1][1] != inv:
                continue
            trial = letters + [(aid, inv)]
            if len(trial) > 1 and not is_string(q, StringWord(tuple(trial))):
                continue
            budget[nxt] -= 1
            grow(trial, budget, nxt)
            budget[nxt] += 1

    for v in starts:
        budget = dict(dims)
        budget[v] -= 1
        grow([], budget, v)
    return sorted(found, key=lambda w: w.letters)


def identify_string(R: Rep) -> StringWord:
    """The string w with M(w) isomorphic to the indecomposable R."""
    if not R.dims:
        raise ValueError("zero representation")
    for w in strings_with_dims(R.q, R.dims):
        if is_isomorphic(R, string_rep(R.q, w)):
            return w
    raise LookupError("representation is not a string module inside the window")


__all__ = [
    "Rep",
    "cosyzygy",
    "hom_basis",
    "hom_dim_linear",
    "identify_string",
    "injective_envelope",
    "is_isomorphic",
    "projective",
    "projective_cover",
    "satisfies_relations",
    "shift",
    "stable_hom_dim",
    "string_rep",
    "syzygy",
    "l_end",
    "l_start",
]
