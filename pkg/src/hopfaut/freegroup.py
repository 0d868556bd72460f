"""Free groups F_n: reduced words, endomorphisms and Nielsen automorphisms.

A word is a tuple of nonzero ints; ``i`` stands for x_i and ``-i`` for its
inverse.  Automorphisms are kept as Nielsen sequences so that inverting them
is purely syntactic.  A sequence ``[g1, ..., gk]`` denotes the composite
``g1 o g2 o ... o gk`` (gk is applied first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Word = tuple


def reduce_word(w: Iterable[int]) -> Word:
    """Freely reduce (stack-based, single pass)."""
    out: list = []
    for a in w:
        if a == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse_word(w: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(w))


def word_rank_ok(w: Sequence[int], n: int) -> bool:
    return all(1 <= abs(a) <= n for a in w)


@dataclass(frozen=True)
class FreeGroupMap:
    """Endomorphism of F_n, given by the images of x_1..x_n."""

    n: int
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.n:
            raise ValueError(f"need {self.n} images, got {len(self.images)}")
        imgs = tuple(reduce_word(w) for w in self.images)
        for w in imgs:
            if not word_rank_ok(w, self.n):
                raise ValueError(f"image {w} uses a generator outside rank {self.n}")
        object.__setattr__(self, "images", imgs)

    def __call__(self, w: Sequence[int]) -> Word:
        return apply(self, w)


def identity(n: int) -> FreeGroupMap:
    return FreeGroupMap(n, tuple((i,) for i in range(1, n + 1)))


def apply(f: FreeGroupMap, w: Sequence[int]) -> Word:
    if not word_rank_ok(w, f.n):
        raise ValueError(f"word {tuple(w)} exceeds rank {f.n}")
    out: list = []
    for a in w:
        img = f.images[a - 1] if a > 0 else inverse_word(f.images[-a - 1])
        out.extend(img)
    return reduce_word(out)


def compose(f: FreeGroupMap, g: FreeGroupMap) -> FreeGroupMap:
    """(f o g)(x_i) = f(g(x_i))."""
    if f.n != g.n:
        raise ValueError("rank mismatch")
    return FreeGroupMap(f.n, tuple(apply(f, w) for w in g.images))


def inner(g: Sequence[int], n: int) -> FreeGroupMap:
    """x_i -> g^-1 x_i g."""
    g = reduce_word(g)
    if not word_rank_ok(g, n):
        raise ValueError("conjugating word exceeds rank")
    gi = inverse_word(g)
    return FreeGroupMap(n, tuple(gi + (i,) + g for i in range(1, n + 1)))


# ---------------------------------------------------------------------------
# Nielsen generators


@dataclass(frozen=True)
class Swap:
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("Swap needs i != j")

    def to_map(self, n: int) -> FreeGroupMap:
        imgs = [(k,) for k in range(1, n + 1)]
        imgs[self.i - 1], imgs[self.j - 1] = imgs[self.j - 1], imgs[self.i - 1]
        return FreeGroupMap(n, tuple(imgs))

    def inverse(self) -> list:
        return [self]

    def __str__(self):
        return f"swap {self.i} {self.j}"


@dataclass(frozen=True)
class Invert:
    i: int

    def to_map(self, n: int) -> FreeGroupMap:
        imgs = [(k,) for k in range(1, n + 1)]
        imgs[self.i - 1] = (-self.i,)
        return FreeGroupMap(n, tuple(imgs))

    def inverse(self) -> list:
        return [self]

    def __str__(self):
        return f"invert {self.i}"


@dataclass(frozen=True)
class LeftMul:
    """x_i -> x_j^-1 x_i."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("LeftMul needs i != j")

    def to_map(self, n: int) -> FreeGroupMap:
        imgs = [(k,) for k in range(1, n + 1)]
        imgs[self.i - 1] = (-self.j, self.i)
        return FreeGroupMap(n, tuple(imgs))

    def inverse(self) -> list:
        # x_i -> x_j x_i  equals  invert(j) o leftmul(i, j) o invert(j)
        return [Invert(self.j), self, Invert(self.j)]

    def __str__(self):
        return f"leftmul {self.i} {self.j}"


NielsenGen = Swap | Invert | LeftMul


def _check_gen(g, n: int) -> None:
    idx = (g.i,) if isinstance(g, Invert) else (g.i, g.j)
    if any(not 1 <= k <= n for k in idx):
        raise ValueError(f"{g} exceeds rank {n}")


def nielsen_to_map(seq: Sequence, n: int) -> FreeGroupMap:
    f = identity(n)
    for g in seq:
        _check_gen(g, n)
        f = compose(f, g.to_map(n))
    return f


def inverse_sequence(seq: Sequence) -> list:
    out: list = []
    for g in reversed(seq):
        out.extend(g.inverse())
    return out


def inverse_of_sequence(seq: Sequence, n: int) -> FreeGroupMap:
    return nielsen_to_map(inverse_sequence(seq), n)


# Named automorphisms used throughout.


def eta() -> list:
    """x1 -> x2^-1 x1, x2 -> x2^-1 (an involution of F_2)."""
    return [LeftMul(1, 2), Invert(2)]


def sigma12() -> list:
    return [Swap(1, 2)]


def right_mul(i: int, j: int) -> list:
    """x_i -> x_i x_j."""
    return [Invert(i), LeftMul(i, j), Invert(i)]


def left_mul_inv(i: int, j: int) -> list:
    """x_i -> x_j x_i."""
    return LeftMul(i, j).inverse()


# ---------------------------------------------------------------------------
# text formats

_GEN = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(s: str) -> Word:
    """Parse ``"x1 x2^-1 x1"``; ``"1"`` or ``""`` is the empty word."""
    s = s.strip()
    if s in ("", "1", "e"):
        return ()
    out: list = []
    for tok in s.replace("*", " ").split():
        m = _GEN.match(tok)
        if not m:
            raise ValueError(f"bad generator token {tok!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if i < 1:
            raise ValueError("generator indices start at 1")
        out.extend([i if e > 0 else -i] * abs(e))
    return reduce_word(out)


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "1"
    parts = []
    k = 0
    while k < len(w):
        a = w[k]
        m = k
        while m < len(w) and w[m] == a:
            m += 1
        e = (m - k) * (1 if a > 0 else -1)
        parts.append(f"x{abs(a)}" + ("" if e == 1 else f"^{e}"))
        k = m
    return " ".join(parts)


def parse_nielsen(items: Iterable[str]) -> list:
    """Parse strings like ``"swap 1 2"``, ``"leftmul 1 2"``, ``"invert 2"``.

    The shorthands ``"eta"`` and ``"sigma12"`` expand to their sequences.
    """
    out: list = []
    for s in items:
        toks = s.lower().split()
        if not toks:
            continue
        name, args = toks[0], [int(t) for t in toks[1:]]
        if name == "swap" and len(args) == 2:
            out.append(Swap(*args))
        elif name == "invert" and len(args) == 1:
            out.append(Invert(*args))
        elif name == "leftmul" and len(args) == 2:
            out.append(LeftMul(*args))
        elif name == "eta" and not args:
            out.extend(eta())
        elif name == "sigma12" and not args:
            out.extend(sigma12())
        else:
            raise ValueError(f"cannot parse Nielsen generator {s!r}")
    return out


def format_nielsen(seq: Sequence) -> list:
    return [str(g) for g in seq]
