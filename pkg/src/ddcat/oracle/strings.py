"""Strings of the string algebra A' = repetitive algebra modulo its socle.

A letter is (arrow id, inverse flag).  A string is either a nonempty tuple
of letters forming a walk without backtracking whose direct and inverse runs
are allowed paths, or a trivial string 1^{+-}_x.  w[1] changes w at its
start (the left end) and [1]w at its end; both keep the other end fixed.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .quiver import RepQuiver, WindowEscape


class UndefinedComposition(ValueError):
    pass


class NotComparable(ValueError):
    pass


class InvalidString(ValueError):
    pass


@dataclass(frozen=True)
class StringWord:
    letters: tuple = ()
    vertex: tuple | None = None  # trivial strings only
    sign: int = 0  # trivial strings only

    @property
    def trivial(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        # trivial strings have length 0 but are still strings
        return True


def trivial(x: tuple, sign: int = 1) -> StringWord:
    return StringWord((), tuple(x), sign)


# --- letters ------------------------------------------------------------------

def l_start(q: RepQuiver, letter) -> tuple:
    a = q.arrows[letter[0]]
    return a.dst if letter[1] else a.src


def l_end(q: RepQuiver, letter) -> tuple:
    a = q.arrows[letter[0]]
    return a.src if letter[1] else a.dst


def l_sigma(q: RepQuiver, letter) -> int:
    return q.eps[letter[0]] if letter[1] else q.sigma[letter[0]]


def l_eps(q: RepQuiver, letter) -> int:
    return q.sigma[letter[0]] if letter[1] else q.eps[letter[0]]


def start(q: RepQuiver, w: StringWord) -> tuple:
    return w.vertex if w.trivial else l_start(q, w.letters[0])


def end(q: RepQuiver, w: StringWord) -> tuple:
    return w.vertex if w.trivial else l_end(q, w.letters[-1])


def sigma(q: RepQuiver, w: StringWord) -> int:
    return -w.sign if w.trivial else l_sigma(q, w.letters[0])


def eps(q: RepQuiver, w: StringWord) -> int:
    return w.sign if w.trivial else l_eps(q, w.letters[-1])


def vertices(q: RepQuiver, w: StringWord) -> list[tuple]:
    if w.trivial:
        return [w.vertex]
    out = [l_start(q, w.letters[0])]
    for L in w.letters:
        out.append(l_end(q, L))
    return out


def invert(w: StringWord) -> StringWord:
    if w.trivial:
        return StringWord((), w.vertex, -w.sign)
    return StringWord(tuple((a, not inv) for a, inv in reversed(w.letters)))


def same_module(v: StringWord, w: StringWord) -> bool:
    if v.trivial or w.trivial:
        return v.trivial and w.trivial and v.vertex == w.vertex
    return v == w or v == invert(w)


def canonical(w: StringWord) -> StringWord:
    """Representative of {w, w^-1}; trivial strings get sign +1."""
    if w.trivial:
        return StringWord((), w.vertex, 1)
    u = invert(w)
    return min(w, u, key=lambda s: s.letters)


# --- validity -----------------------------------------------------------------

def _runs_ok(q: RepQuiver, letters) -> bool:
    k = 0
    L = len(letters)
    while k < L:
        inv = letters[k][1]
        l = k
        while l < L and letters[l][1] == inv:
            l += 1
        run = [a for a, _ in letters[k:l]]
        path = tuple(reversed(run)) if inv else tuple(run)
        if len(path) > 1 and path not in q.allowed:
            return False
        if len(path) == 1 and path not in q.nonzero:
            return False
        k = l
    return True


def is_string(q: RepQuiver, w: StringWord) -> bool:
    if w.trivial:
        return w.vertex in q.out_arrows and w.sign in (1, -1)
    for a, _ in w.letters:
        if not 0 <= a < len(q.arrows):
            return False
    for u, v in zip(w.letters, w.letters[1:]):
        if l_end(q, u) != l_start(q, v):
            return False
        if u[0] == v[0] and u[1] != v[1]:
            return False
    return _runs_ok(q, w.letters)


def compose(q: RepQuiver, v: StringWord, w: StringWord) -> StringWord:
    """The string vw (v first); raises UndefinedComposition."""
    if end(q, v) != start(q, w):
        raise UndefinedComposition("endpoints do not match")
    if v.trivial and w.trivial:
        if v.sign != w.sign:
            raise UndefinedComposition("trivial strings of opposite sign")
        return v
    if w.trivial:
        if eps(q, v) != w.sign:
            raise UndefinedComposition("sign condition fails on the right")
        return v
    if v.trivial:
        if sigma(q, w) != -v.sign:
            raise UndefinedComposition("sign condition fails on the left")
        return w
    u = StringWord(v.letters + w.letters)
    if not is_string(q, u):
        raise UndefinedComposition("concatenation is not a string")
    return u


def try_compose(q: RepQuiver, v: StringWord, w: StringWord) -> StringWord | None:
    try:
        return compose(q, v, w)
    except UndefinedComposition:
        return None


def arrow_word(a_id: int, inverse: bool = False) -> StringWord:
    return StringWord(((a_id, inverse),))


# --- hooks and cohooks --------------------------------------------------------

def _max_direct_from(q: RepQuiver, first) -> tuple:
    """Maximal allowed path beginning with the given arrow."""
    path = (first.id,)
    v = first.dst
    while True:
        nxt = q.next_arrow(path, v)
        if not nxt:
            return path
        path = path + (nxt[0].id,)
        v = nxt[0].dst


def _max_direct_into(q: RepQuiver, last) -> tuple:
    """Maximal allowed path ending with the given arrow."""
    path = (last.id,)
    v = last.src
    while True:
        prev = [a for a in q.in_arrows.get(v, ()) if (a.id,) + path in q.allowed]
        if not prev:
            return path
        path = (prev[0].id,) + path
        v = prev[0].src


def _hook_arrow(q: RepQuiver, w: StringWord):
    for a in q.in_arrows.get(start(q, w), ()):
        if try_compose(q, arrow_word(a.id), w) is not None:
            return a
    return None


def _check_band(q: RepQuiver, w: StringWord) -> StringWord:
    for v in vertices(q, w):
        if not q.lo <= v[0] <= q.hi:
            raise WindowEscape(f"string leaves levels [{q.lo}, {q.hi}]")
    return w


def shift_left(q: RepQuiver, w: StringWord) -> StringWord | None:
    """w[1]: add a hook at the start of w, or remove a cohook there."""
    a0 = _hook_arrow(q, w)
    if a0 is not None:
        others = [b for b in q.out_arrows.get(a0.src, ()) if b.id != a0.id]
        hook: tuple = ()
        if others:
            hook = _max_direct_from(q, others[0])
        letters = tuple((b, True) for b in reversed(hook)) + ((a0.id, False),)
        if w.trivial:
            return StringWord(letters)
        return StringWord(letters + w.letters)
    if w.trivial:
        return None
    k = 0
    L = w.letters
    while k < len(L) and not L[k][1]:
        k += 1
    if k == len(L):
        return None
    rest = L[k + 1:]
    if rest:
        return StringWord(rest)
    return trivial(l_end(q, L[k]), l_eps(q, L[k]))


def shift_left_inv(q: RepQuiver, u: StringWord) -> StringWord | None:
    """w[-1]: the w with w[1] = u, or None."""
    L = u.letters
    k = 0
    while k < len(L) and L[k][1]:
        k += 1
    if k < len(L):
        a0 = q.arrows[L[k][0]]
        others = [b for b in q.out_arrows.get(a0.src, ()) if b.id != a0.id]
        hook = _max_direct_from(q, others[0]) if others else ()
        if tuple((b, True) for b in reversed(hook)) == L[:k]:
            rest = L[k + 1:]
            w = StringWord(rest) if rest else trivial(a0.dst, q.eps[a0.id])
            if shift_left(q, w) == u:
                return w
    # otherwise u arose by removing a cohook: put one back
    for vn in q.out_arrows.get(start(q, u), ()):
        tail = try_compose(q, arrow_word(vn.id, True), u)
        if tail is None:
            continue
        ends = [b for b in q.in_arrows.get(vn.dst, ()) if b.id != vn.id]
        head: tuple = _max_direct_into(q, ends[0]) if ends else ()
        w = StringWord(tuple((b, False) for b in head) + tail.letters)
        if not is_string(q, w):
            continue
        if shift_left(q, w) == u:
            return w
    return None


def shift_right(q: RepQuiver, w: StringWord) -> StringWord | None:
    """[1]w: the mirror image of w[1] at the end of w."""
    u = shift_left(q, invert(w))
    return None if u is None else invert(u)


def shift_right_inv(q: RepQuiver, u: StringWord) -> StringWord | None:
    w = shift_left_inv(q, invert(u))
    return None if w is None else invert(w)


def ar_translate_inv(q: RepQuiver, w: StringWord) -> StringWord | None:
    """[1]w[1], the inverse AR translate.

    At a mouth one of w[1], [1]w is undefined; the composite is then taken
    through the other one.
    """
    u = shift_left(q, w)
    if u is not None:
        v = shift_right(q, u)
        if v is not None:
            return v
    u = shift_right(q, w)
    return None if u is None else shift_left(q, u)


def ar_translate(q: RepQuiver, w: StringWord) -> StringWord | None:
    u = shift_left_inv(q, w)
    if u is not None:
        v = shift_right_inv(q, u)
        if v is not None:
            return v
    u = shift_right_inv(q, w)
    return None if u is None else shift_left_inv(q, u)


# --- the linear order ---------------------------------------------------------

def geiss_less(q: RepQuiver, v: StringWord, w: StringWord) -> bool:
    if end(q, v) != end(q, w) or eps(q, v) != eps(q, w):
        raise NotComparable("strings end at different vertices or with different eps")
    a, b = v.letters, w.letters
    c = 0
    while c < min(len(a), len(b)) and a[len(a) - 1 - c] == b[len(b) - 1 - c]:
        c += 1
    va, wb = a[: len(a) - c], b[: len(b) - c]
    if not va and not wb:
        return False
    if not va:
        return not wb[-1][1]
    if not wb:
        return va[-1][1]
    return (not wb[-1][1]) and va[-1][1]


def geiss_leq(q: RepQuiver, v: StringWord, w: StringWord) -> bool:
    if end(q, v) != end(q, w) or eps(q, v) != eps(q, w):
        raise NotComparable("strings end at different vertices or with different eps")
    return canonical_eq(v, w) or geiss_less(q, v, w)


def canonical_eq(v: StringWord, w: StringWord) -> bool:
    return v == w


# --- morphisms by admissible pairs ----------------------------------------------

def _substrings(q: RepQuiver, w: StringWord, side: str):
    """(letters, vertex) of e for every decomposition w = d e f on the given side."""
    L = w.letters
    l = len(L)
    V = vertices(q, w)
    for s in range(l + 1):
        if s > 0:
            inv = L[s - 1][1]
            if (side == "fac") != inv:
                continue
        for t in range(s, l + 1):
            if t < l:
                inv = L[t][1]
                if (side == "fac") == inv:
                    continue
            yield L[s:t], V[s]


def _flip(letters) -> tuple:
    return tuple((a, not inv) for a, inv in reversed(letters))


def hom_count_combinatorial(q: RepQuiver, v: StringWord, w: StringWord) -> int:
    subs: dict = {}
    for e, x in _substrings(q, w, "sub"):
        key = (e, x if not e else None)
        subs[key] = subs.get(key, 0) + 1
    total = 0
    for e, x in _substrings(q, v, "fac"):
        if not e:
            total += subs.get(((), x), 0)
            continue
        total += subs.get((e, None), 0)
        f = _flip(e)
        if f != e:
            total += subs.get((f, None), 0)
    return total


# --- text form ----------------------------------------------------------------

def _letter_text(q: RepQuiver, letter, short: bool) -> str:
    a = q.arrows[letter[0]]
    name = a.label
    if short and q.aliases:
        name = q.aliases[name]
    return f"{name}{'~' if letter[1] else ''}@{a.level}"


def format_string(q: RepQuiver, w: StringWord, short: bool = True) -> str:
    if w.trivial:
        i, x = w.vertex
        return f"1{'+' if w.sign > 0 else '-'}({i},{x})"
    return " . ".join(_letter_text(q, L, short) for L in w.letters)


_TRIV = re.compile(r"^1([+-])\((-?\d+),(-?\d+)\)$")
_LETTER = re.compile(r"^([a-z][-0-9]*)(~?)@(-?\d+)$")


def parse_string(q: RepQuiver, text: str) -> StringWord:
    text = text.strip()
    m = _TRIV.match(text)
    if m:
        w = trivial((int(m.group(2)), int(m.group(3))), 1 if m.group(1) == "+" else -1)
        if not is_string(q, w):
            raise InvalidString(f"vertex outside the quiver: {text!r}")
        return w
    back = {v: k for k, v in (q.aliases or {}).items()}
    letters = []
    for tok in text.split("."):
        m = _LETTER.match(tok.strip())
        if not m:
            raise InvalidString(f"bad letter {tok!r}")
        name = m.group(1)
        level = int(m.group(3))
        label = name if (name, level) in q.by_key else back.get(name, name)
        a = q.arrow(label, level)
        letters.append((a.id, m.group(2) == "~"))
    w = StringWord(tuple(letters))
    if not is_string(q, w):
        raise InvalidString(f"not a string: {text!r}")
    return w


# --- sampling -----------------------------------------------------------------

def random_string(q: RepQuiver, rng: random.Random, max_len: int = 12, window: int | None = None) -> StringWord:
    """A random string kept inside the given window (default: the quiver's W)."""
    W = q.W if window is None else window
    vs = [v for v in q.vertices if -W <= v[0] <= W]
    v0 = rng.choice(vs)
    w = trivial(v0, rng.choice((1, -1)))
    target = rng.randint(0, max_len)
    for _ in range(target):
        options = []
        x = end(q, w)
        for a in q.out_arrows.get(x, ()):
            options.append((a.id, False))
        for a in q.in_arrows.get(x, ()):
            options.append((a.id, True))
        rng.shuffle(options)
        nxt = None
        for L in options:
            if not -W <= l_end(q, L)[0] <= W:
                continue
            cand = try_compose(q, w, StringWord((L,)))
            if cand is not None:
                nxt = cand
                break
        if nxt is None:
            break
        w = nxt
    return w
