"""Graded cocommutative Hopf algebras with exact coefficients.

Two families are supported:

``tensor``  T(V), basis = words in the letters x1..xd (all primitive).
``nil2``    U(L2), the enveloping algebra of the free class-2 nilpotent Lie
            algebra on x1..xd.  Extra central primitive letters
            z_ij = [x_i, x_j] (i < j) have degree 2.  Basis = PBW monomials,
            stored as nondecreasing letter tuples (x's ascending, then z's in
            lexicographic (i, j) order).

Internally letters are 0-based ints; x_i is ``i-1`` and z_ij follows the x's.
Every operation drops terms of total degree above the descriptor's
truncation degree.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .exactcore import to_fraction

TENSOR = "tensor"
NIL2 = "nil2"


@dataclass(frozen=True)
class HopfDescriptor:
    kind: str
    dim: int
    truncation: int

    def __post_init__(self):
        if self.kind not in (TENSOR, NIL2):
            raise ValueError(f"unknown Hopf algebra kind {self.kind!r}")
        if self.dim < 1 or self.truncation < 1:
            raise ValueError("need dim >= 1 and truncation >= 1")

    @cached_property
    def z_pairs(self) -> tuple:
        if self.kind != NIL2:
            return ()
        return tuple(itertools.combinations(range(self.dim), 2))

    @cached_property
    def _z_index(self) -> dict:
        return {p: self.dim + k for k, p in enumerate(self.z_pairs)}

    @property
    def nletters(self) -> int:
        return self.dim + len(self.z_pairs)

    def z_letter(self, i: int, j: int) -> int:
        """Letter of z_ij for 0-based i < j."""
        return self._z_index[(i, j)]

    def letter_degree(self, letter: int) -> int:
        return 1 if letter < self.dim else 2

    def word_degree(self, word: Sequence[int]) -> int:
        d = self.dim
        return sum(1 if l < d else 2 for l in word)

    def letter_name(self, letter: int) -> str:
        if letter < self.dim:
            return f"x{letter + 1}"
        i, j = self.z_pairs[letter - self.dim]
        return f"z{i + 1}{j + 1}" if self.dim < 10 else f"z{i + 1}_{j + 1}"

    def check_word(self, word: Sequence[int]) -> tuple:
        word = tuple(word)
        n = self.nletters
        if any(not 0 <= l < n for l in word):
            raise ValueError(f"letter out of range in {word}")
        if self.kind == NIL2 and list(word) != sorted(word):
            raise ValueError(f"PBW word {word} is not normal ordered")
        return word

    def with_truncation(self, truncation: int) -> "HopfDescriptor":
        return HopfDescriptor(self.kind, self.dim, truncation)

    def to_json(self) -> dict:
        return {"kind": self.kind, "dim": self.dim, "truncation": self.truncation}

    @classmethod
    def from_json(cls, obj: Mapping) -> "HopfDescriptor":
        return cls(obj["kind"], int(obj["dim"]), int(obj["truncation"]))


def tensor_algebra(dim: int, truncation: int) -> HopfDescriptor:
    return HopfDescriptor(TENSOR, dim, truncation)


def enveloping_nil2(dim: int, truncation: int) -> HopfDescriptor:
    return HopfDescriptor(NIL2, dim, truncation)


# ---------------------------------------------------------------------------
# word level kernels (cached; results are tuples of (key, coeff))


def _acc(out: dict, key, c) -> None:
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _right_mul_x(desc: HopfDescriptor, word: tuple, i: int) -> tuple:
    """PBW word times x_i in U(L2), straightened."""
    d = desc.dim
    xs = [l for l in word if l < d]
    zs = [l for l in word if l >= d]
    out: dict = {}
    _acc(out, tuple(sorted(xs + [i])) + tuple(zs), 1)
    # b_1..b_m x_i = x_i b_1..b_m - sum_k z_{i b_k} b_1..^b_k..b_m  for b_k > i
    for pos, j in enumerate(xs):
        if j > i:
            rest = xs[:pos] + xs[pos + 1:]
            _acc(out, tuple(rest) + tuple(sorted(zs + [desc.z_letter(i, j)])), -1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _mul_words(desc: HopfDescriptor, a: tuple, b: tuple) -> tuple:
    if desc.word_degree(a) + desc.word_degree(b) > desc.truncation:
        return ()
    if desc.kind == TENSOR:
        return ((a + b, 1),)
    d = desc.dim
    cur = {a: 1}
    for l in b:
        nxt: dict = {}
        if l < d:
            for w, c in cur.items():
                for w2, c2 in _right_mul_x(desc, w, l):
                    _acc(nxt, w2, c * c2)
        else:
            for w, c in cur.items():
                _acc(nxt, tuple(sorted(w + (l,))), c)
        cur = nxt
    return tuple(cur.items())


@lru_cache(maxsize=None)
def _coproduct_word(word: tuple, k: int) -> tuple:
    """Delta^k of a product of primitive letters: distribute letters over k+1 slots.

    Sub-words of a normal-ordered PBW word are normal ordered, so this serves
    both algebra kinds without straightening.
    """
    out: dict = {}
    if k == 0:
        return (((word,), 1),)
    for assign in itertools.product(range(k + 1), repeat=len(word)):
        parts = [[] for _ in range(k + 1)]
        for letter, slot in zip(word, assign):
            parts[slot].append(letter)
        _acc(out, tuple(tuple(p) for p in parts), 1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _antipode_word(desc: HopfDescriptor, word: tuple) -> tuple:
    sign = -1 if len(word) % 2 else 1
    if desc.kind == TENSOR:
        return ((word[::-1], sign),)
    cur = {(): sign}
    for l in reversed(word):
        nxt: dict = {}
        for w, c in cur.items():
            for w2, c2 in _mul_words(desc, w, (l,)):
                _acc(nxt, w2, c * c2)
        cur = nxt
    return tuple(cur.items())


# ---------------------------------------------------------------------------
# elements


class AlgebraElement:
    """Finite linear combination of basis words with Fraction coefficients."""

    __slots__ = ("descriptor", "terms")

    def __init__(self, descriptor: HopfDescriptor, terms: Mapping | None = None, *, check=True):
        self.descriptor = descriptor
        out = {}
        D = descriptor.truncation
        for w, c in (terms or {}).items():
            if check:
                w = descriptor.check_word(w)
            if c and descriptor.word_degree(w) <= D:
                out[w] = out.get(w, 0) + to_fraction(c)
        self.terms = {w: c for w, c in out.items() if c}

    def _same(self, other: "AlgebraElement"):
        if self.descriptor != other.descriptor:
            raise ValueError("descriptor mismatch")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = scalar(self.descriptor, other)
        self._same(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            _acc(t, w, c)
        return AlgebraElement(self.descriptor, t, check=False)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.descriptor, {w: -c for w, c in self.terms.items()}, check=False)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        c = to_fraction(other)
        return AlgebraElement(self.descriptor, {w: c * v for w, v in self.terms.items()}, check=False)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.descriptor == other.descriptor and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.descriptor, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"AlgebraElement({format_element(self)})"

    def degrees(self) -> set:
        return {self.descriptor.word_degree(w) for w in self.terms}

    def homogeneous_part(self, degree: int) -> "AlgebraElement":
        dw = self.descriptor.word_degree
        return AlgebraElement(self.descriptor, {w: c for w, c in self.terms.items() if dw(w) == degree}, check=False)


class TensorElement:
    """Element of H^{(x)n}: linear combination of n-tuples of basis words."""

    __slots__ = ("descriptor", "arity", "terms")

    def __init__(self, descriptor: HopfDescriptor, arity: int, terms: Mapping | None = None, *, check=True):
        self.descriptor = descriptor
        self.arity = arity
        out = {}
        D = descriptor.truncation
        dw = descriptor.word_degree
        for key, c in (terms or {}).items():
            if check:
                key = tuple(descriptor.check_word(w) for w in key)
                if len(key) != arity:
                    raise ValueError(f"tensor key {key} has wrong arity (expected {arity})")
            if c and all(dw(w) <= D for w in key):
                out[key] = out.get(key, 0) + to_fraction(c)
        self.terms = {k: c for k, c in out.items() if c}

    def _same(self, other):
        if self.descriptor != other.descriptor or self.arity != other.arity:
            raise ValueError("tensor descriptor/arity mismatch")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            _acc(t, k, c)
        return TensorElement(self.descriptor, self.arity, t, check=False)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        c = to_fraction(other)
        return TensorElement(self.descriptor, self.arity, {k: c * v for k, v in self.terms.items()}, check=False)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return (self.descriptor, self.arity, self.terms) == (other.descriptor, other.arity, other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.descriptor, self.arity, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"TensorElement({format_tensor(self)})"

    def total_degrees(self) -> set:
        dw = self.descriptor.word_degree
        return {sum(dw(w) for w in k) for k in self.terms}

    def homogeneous_part(self, degree: int) -> "TensorElement":
        dw = self.descriptor.word_degree
        return TensorElement(
            self.descriptor, self.arity,
            {k: c for k, c in self.terms.items() if sum(dw(w) for w in k) == degree}, check=False,
        )


# ---------------------------------------------------------------------------
# constructors


def scalar(desc: HopfDescriptor, c) -> AlgebraElement:
    return AlgebraElement(desc, {(): to_fraction(c)}, check=False)


def one(desc: HopfDescriptor) -> AlgebraElement:
    return scalar(desc, 1)


def word(desc: HopfDescriptor, letters: Sequence[int], coeff=1) -> AlgebraElement:
    """Basis element from 0-based letters; for nil2 the letters are multiplied out."""
    if desc.kind == TENSOR:
        return AlgebraElement(desc, {tuple(letters): coeff})
    out = one(desc)
    for l in letters:
        out = mul(out, AlgebraElement(desc, {(l,): 1}))
    return out * coeff


def x(desc: HopfDescriptor, i: int) -> AlgebraElement:
    """The generator x_i (1-based)."""
    if not 1 <= i <= desc.dim:
        raise ValueError(f"x{i} outside dimension {desc.dim}")
    return AlgebraElement(desc, {(i - 1,): 1})


def z(desc: HopfDescriptor, i: int, j: int) -> AlgebraElement:
    """The central letter z_ij = [x_i, x_j] of U(L2) (1-based, i < j)."""
    if desc.kind != NIL2:
        raise ValueError("z letters exist only in the nil2 algebra")
    return AlgebraElement(desc, {(desc.z_letter(i - 1, j - 1),): 1})


def primitive_letters(desc: HopfDescriptor) -> list:
    return list(range(desc.nletters))


def tensor(*factors: AlgebraElement) -> TensorElement:
    """Pure tensor of algebra elements."""
    desc = factors[0].descriptor
    terms: dict = {(): Fraction(1)}
    for f in factors:
        if f.descriptor != desc:
            raise ValueError("descriptor mismatch")
        nxt: dict = {}
        for k, c in terms.items():
            for w, c2 in f.terms.items():
                _acc(nxt, k + (w,), c * c2)
        terms = nxt
    return TensorElement(desc, len(factors), terms, check=False)


def tensor_concat(a: TensorElement, b: TensorElement) -> TensorElement:
    if a.descriptor != b.descriptor:
        raise ValueError("descriptor mismatch")
    terms: dict = {}
    for k, c in a.terms.items():
        for k2, c2 in b.terms.items():
            _acc(terms, k + k2, c * c2)
    return TensorElement(a.descriptor, a.arity + b.arity, terms, check=False)


def as_tensor(a: AlgebraElement) -> TensorElement:
    return TensorElement(a.descriptor, 1, {(w,): c for w, c in a.terms.items()}, check=False)


def factor(t: TensorElement) -> AlgebraElement:
    """Inverse of :func:`as_tensor` for arity-1 tensors."""
    if t.arity != 1:
        raise ValueError("expected arity 1")
    return AlgebraElement(t.descriptor, {k[0]: c for k, c in t.terms.items()}, check=False)


# ---------------------------------------------------------------------------
# structure maps


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    desc = a.descriptor
    out: dict = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            for w, c in _mul_words(desc, w1, w2):
                _acc(out, w, c1 * c2 * c)
    return AlgebraElement(desc, out, check=False)


def mul_words(desc: HopfDescriptor, a: tuple, b: tuple) -> dict:
    return dict(_mul_words(desc, a, b))


def coproduct_iter(a: AlgebraElement, k: int) -> TensorElement:
    """Delta^k(a) as a tensor of arity k+1 (Delta^0 = id)."""
    if k < 0:
        raise ValueError("use counit() for Delta^{-1}")
    out: dict = {}
    for w, c in a.terms.items():
        for key, c2 in _coproduct_word(w, k):
            _acc(out, key, c * c2)
    return TensorElement(a.descriptor, k + 1, out, check=False)


def coproduct(a: AlgebraElement) -> TensorElement:
    return coproduct_iter(a, 1)


def coproduct_word(w: tuple, k: int) -> tuple:
    return _coproduct_word(tuple(w), k)


def antipode(a: AlgebraElement) -> AlgebraElement:
    desc = a.descriptor
    out: dict = {}
    for w, c in a.terms.items():
        for w2, c2 in _antipode_word(desc, w):
            _acc(out, w2, c * c2)
    return AlgebraElement(desc, out, check=False)


def antipode_word(desc: HopfDescriptor, w: tuple) -> dict:
    return dict(_antipode_word(desc, tuple(w)))


def counit(a: AlgebraElement) -> Fraction:
    return a.terms.get((), Fraction(0))


def lie_bracket(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return mul(a, b) - mul(b, a)


def tensor_mul(s: TensorElement, t: TensorElement) -> TensorElement:
    """Componentwise product in H^{(x)n}."""
    s._same(t)
    desc = s.descriptor
    out: dict = {}
    for k1, c1 in s.terms.items():
        for k2, c2 in t.terms.items():
            partial = {(): c1 * c2}
            for w1, w2 in zip(k1, k2):
                nxt: dict = {}
                prod = _mul_words(desc, w1, w2)
                for key, c in partial.items():
                    for w, c3 in prod:
                        _acc(nxt, key + (w,), c * c3)
                partial = nxt
            for key, c in partial.items():
                _acc(out, key, c)
    return TensorElement(desc, s.arity, out, check=False)


def apply_slot(t: TensorElement, slot: int, fn) -> TensorElement:
    """Apply a linear map ``fn(word) -> AlgebraElement`` to one tensor slot."""
    desc = t.descriptor
    out: dict = {}
    cache: dict = {}
    for key, c in t.terms.items():
        w = key[slot]
        if w not in cache:
            cache[w] = fn(w).terms
        for w2, c2 in cache[w].items():
            _acc(out, key[:slot] + (w2,) + key[slot + 1:], c * c2)
    return TensorElement(desc, t.arity, out, check=False)


def permute(t: TensorElement, perm: Sequence[int]) -> TensorElement:
    """Slot j of the result is slot ``perm[j]`` of t."""
    return TensorElement(
        t.descriptor, t.arity, {tuple(k[p] for p in perm): c for k, c in t.terms.items()}, check=False
    )


def counit_slot(t: TensorElement, slot: int) -> TensorElement:
    """Apply the counit to one slot, lowering arity by one."""
    out: dict = {}
    for key, c in t.terms.items():
        if key[slot] == ():
            _acc(out, key[:slot] + key[slot + 1:], c)
    return TensorElement(t.descriptor, t.arity - 1, out, check=False)


def multiply_slots(t: TensorElement) -> AlgebraElement:
    """m^{n-1}: multiply all slots together in order."""
    desc = t.descriptor
    out = AlgebraElement(desc)
    for key, c in t.terms.items():
        prod = {(): c}
        for w in key:
            nxt: dict = {}
            for pw, pc in prod.items():
                for w2, c2 in _mul_words(desc, pw, w):
                    _acc(nxt, w2, pc * c2)
            prod = nxt
        out = out + AlgebraElement(desc, prod, check=False)
    return out


# ---------------------------------------------------------------------------
# basis enumeration


@lru_cache(maxsize=None)
def basis_words(desc: HopfDescriptor, degree: int) -> tuple:
    """All basis words of the given degree (ignores truncation)."""
    if degree < 0:
        return ()
    if desc.kind == TENSOR:
        return tuple(itertools.product(range(desc.dim), repeat=degree))
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for l in range(start, desc.nletters):
            dl = desc.letter_degree(l)
            if dl <= remaining:
                acc.append(l)
                rec(l, remaining - dl, acc)
                acc.pop()

    rec(0, degree, [])
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def tensor_basis(desc: HopfDescriptor, arity: int, degree: int) -> tuple:
    """Basis n-tuples of words with the given total degree, in a fixed order."""
    out = []
    for comp in _compositions(degree, arity):
        for key in itertools.product(*(basis_words(desc, p) for p in comp)):
            out.append(key)
    return tuple(out)


def _compositions(n: int, k: int):
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, k - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# text and JSON formats


def format_word(desc: HopfDescriptor, w: tuple) -> str:
    if not w:
        return "1"
    if desc.kind == TENSOR:
        return "*".join(desc.letter_name(l) for l in w)
    parts = []
    for l, grp in itertools.groupby(w):
        e = len(list(grp))
        parts.append(desc.letter_name(l) + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def _format_coeff_term(c: Fraction, body: str, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if body == "1":
        s = str(a)
    elif a == 1:
        s = body
    else:
        s = f"{a}*{body}"
    if first:
        return s if sign == "+" else f"-{s}"
    return f" {sign} {s}"


def _sort_key(desc: HopfDescriptor):
    dw = desc.word_degree
    return lambda w: (dw(w), w)


def format_element(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    key = _sort_key(a.descriptor)
    out = []
    for i, w in enumerate(sorted(a.terms, key=key)):
        out.append(_format_coeff_term(a.terms[w], format_word(a.descriptor, w), i == 0))
    return "".join(out)


def format_tensor(t: TensorElement) -> str:
    if not t.terms:
        return "0"
    key = _sort_key(t.descriptor)
    out = []
    ks = sorted(t.terms, key=lambda k: (sum(key(w)[0] for w in k), tuple(key(w) for w in k)))
    for i, k in enumerate(ks):
        body = " | ".join(format_word(t.descriptor, w) for w in k)
        c = t.terms[k]
        if c == 1 and True:
            s = f"({body})"
        else:
            s = f"{abs(c)}*({body})" if abs(c) != 1 else f"({body})"
        sign = "-" if c < 0 else "+"
        out.append((f"-{s}" if sign == "-" else s) if i == 0 else f" {sign} {s}")
    return "".join(out)


def _word_to_json(desc: HopfDescriptor, w: tuple) -> list:
    if desc.kind == TENSOR:
        return [l + 1 for l in w]
    exps = [0] * desc.nletters
    for l in w:
        exps[l] += 1
    return exps


def _word_from_json(desc: HopfDescriptor, obj: Sequence[int]) -> tuple:
    if desc.kind == TENSOR:
        return tuple(int(l) - 1 for l in obj)
    if len(obj) != desc.nletters:
        raise ValueError(f"exponent vector must have length {desc.nletters}")
    return tuple(l for l, e in enumerate(obj) for _ in range(int(e)))


def _coeff_str(c: Fraction) -> str:
    return str(c)


def element_to_json(a: AlgebraElement) -> dict:
    key = _sort_key(a.descriptor)
    return {
        "descriptor": a.descriptor.to_json(),
        "terms": [
            {"coeff": _coeff_str(a.terms[w]), "word": _word_to_json(a.descriptor, w)}
            for w in sorted(a.terms, key=key)
        ],
    }


def element_from_json(obj: Mapping) -> AlgebraElement:
    desc = HopfDescriptor.from_json(obj["descriptor"])
    terms: dict = {}
    for t in obj["terms"]:
        _acc(terms, _word_from_json(desc, t["word"]), Fraction(t["coeff"]))
    return AlgebraElement(desc, terms)


def tensor_to_json(t: TensorElement) -> dict:
    key = _sort_key(t.descriptor)
    ks = sorted(t.terms, key=lambda k: tuple(key(w) for w in k))
    return {
        "descriptor": t.descriptor.to_json(),
        "arity": t.arity,
        "terms": [
            {"coeff": _coeff_str(t.terms[k]), "word": [_word_to_json(t.descriptor, w) for w in k]}
            for k in ks
        ],
    }


def tensor_from_json(obj: Mapping) -> TensorElement:
    desc = HopfDescriptor.from_json(obj["descriptor"])
    arity = int(obj["arity"])
    terms: dict = {}
    for t in obj["terms"]:
        key = tuple(_word_from_json(desc, w) for w in t["word"])
        _acc(terms, key, Fraction(t["coeff"]))
    return TensorElement(desc, arity, terms)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False)


# --- expression parser: "2*x1*x2 - 1/2*z12 + 3", "(x1 + x2)^2", "[x1, x2]"

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<x>x(?P<xi>\d+))|(?P<z>z(?P<zi>\d+)(?:_(?P<zj>\d+))?)"
    r"|(?P<op>[-+*^()\[\],]))"
)


def _tokenize(s: str) -> list:
    pos, out = 0, []
    s = s.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {s[pos:]!r}")
        pos = m.end()
        out.append(m)
        while pos < len(s) and s[pos].isspace():
            pos += 1
    return out


def parse_element(desc: HopfDescriptor, s: str) -> AlgebraElement:
    """Parse an algebra expression; products are taken in the algebra."""
    toks = _tokenize(s)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def is_op(t, ch):
        return t is not None and t.group("op") == ch

    def expr():
        sign = 1
        if is_op(peek(), "-"):
            take()
            sign = -1
        elif is_op(peek(), "+"):
            take()
        val = term() * sign
        while is_op(peek(), "+") or is_op(peek(), "-"):
            op = take().group("op")
            t = term()
            val = val + t if op == "+" else val - t
        return val

    def term():
        val = power()
        while True:
            t = peek()
            if is_op(t, "*"):
                take()
                val = val * power()
            elif t is not None and (t.group("num") or t.group("x") or t.group("z") or is_op(t, "(") or is_op(t, "[")):
                val = val * power()
            else:
                return val

    def power():
        base = atom()
        if is_op(peek(), "^"):
            take()
            e = take()
            if not e.group("num") or "/" in e.group("num"):
                raise ValueError("exponent must be a nonnegative integer")
            out = one(desc)
            for _ in range(int(e.group("num"))):
                out = out * base
            return out
        return base

    def atom():
        t = take() if peek() is not None else None
        if t is None:
            raise ValueError(f"unexpected end of {s!r}")
        if t.group("num"):
            return scalar(desc, Fraction(t.group("num")))
        if t.group("x"):
            return x(desc, int(t.group("xi")))
        if t.group("z"):
            zi, zj = t.group("zi"), t.group("zj")
            if zj is None:
                if len(zi) != 2:
                    raise ValueError(f"ambiguous z letter {t.group('z')!r}; use z<i>_<j>")
                zi, zj = zi[0], zi[1]
            return z(desc, int(zi), int(zj))
        if is_op(t, "("):
            v = expr()
            if not is_op(take() if peek() else None, ")"):
                raise ValueError("missing ')'")
            return v
        if is_op(t, "["):
            a = expr()
            if not is_op(take() if peek() else None, ","):
                raise ValueError("bracket needs ','")
            b = expr()
            if not is_op(take() if peek() else None, "]"):
                raise ValueError("missing ']'")
            return lie_bracket(a, b)
        raise ValueError(f"unexpected token {t.group(0)!r}")

    val = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {s!r}")
    return val


def parse_tensor(desc: HopfDescriptor, s: str) -> TensorElement:
    """Parse ``A | B | C`` into A (x) B (x) C, each factor an algebra expression."""
    depth, parts, cur = 0, [], []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "|" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return tensor(*(parse_element(desc, p) for p in parts))


def coproduct_slot(t: TensorElement, slot: int) -> TensorElement:
    """Apply Delta to one slot, raising the arity by one."""
    out: dict = {}
    for key, c in t.terms.items():
        for (a, b), c2 in _coproduct_word(key[slot], 1):
            _acc(out, key[:slot] + (a, b) + key[slot + 1:], c * c2)
    return TensorElement(t.descriptor, t.arity + 1, out, check=False)


def swap(t: TensorElement) -> TensorElement:
    return permute(t, (1, 0))
