"""Aut(F_n) acting on H^{(x)n}, conjugation, and the quotient by conjugation.

An element h^1 (x) ... (x) h^n of H^{(x)n} corresponds to the homomorphism
that sends x_i to h^i.  Evaluating it on a list of group words gives
:func:`hom_extend`; automorphisms act by precomposition with the inverse,
which makes :func:`act` a left action.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import freegroup as fg
from . import hopf
from .exactcore import EchelonBasis, SparseMatrix
from .hopf import AlgebraElement, HopfDescriptor, TensorElement, _acc


@dataclass(frozen=True)
class ActionContext:
    descriptor: HopfDescriptor
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be >= 1")


# ---------------------------------------------------------------------------
# evaluation on words


def _word_product(desc: HopfDescriptor, factors: Sequence[tuple], cache: dict) -> dict:
    """Product of Sweedler components; each factor is (word, inverted?)."""
    key = tuple(factors)
    hit = cache.get(key)
    if hit is not None:
        return hit
    cur = {(): Fraction(1)}
    for w, inv in factors:
        fac = hopf.antipode_word(desc, w) if inv else {w: 1}
        nxt: dict = {}
        for a, ca in cur.items():
            for b, cb in fac.items():
                for ab, cab in hopf._mul_words(desc, a, b):
                    _acc(nxt, ab, ca * cb * cab)
        cur = nxt
        if not cur:
            break
    cache[key] = cur
    return cur


def hom_extend(h: TensorElement, words: Sequence[Sequence[int]]) -> TensorElement:
    """Evaluate the homomorphism x_i -> h^i on group words (multilinear in h)."""
    n = h.arity
    desc = h.descriptor
    words = [fg.reduce_word(w) for w in words]
    for w in words:
        if not fg.word_rank_ok(w, n):
            raise ValueError(f"word {w} uses a generator beyond rank {n}")
    # occurrences in reading order
    occ: list = []  # (word index, generator 0-based, inverted)
    for wi, w in enumerate(words):
        for a in w:
            occ.append((wi, abs(a) - 1, a < 0))
    counts = [0] * n
    slot_of: list = []
    for _, g, _ in occ:
        slot_of.append(counts[g])
        counts[g] += 1
    k = len(words)
    out: dict = {}
    cache: dict = {}
    for key, c in h.terms.items():
        per_gen = []
        dead = False
        for g in range(n):
            if counts[g] == 0:
                if key[g] != ():
                    dead = True
                    break
                per_gen.append(((((),), 1),))  # placeholder, never indexed
            else:
                per_gen.append(hopf.coproduct_word(key[g], counts[g] - 1))
        if dead:
            continue
        for combo in itertools.product(*per_gen):
            coeff = c
            for _, cc in combo:
                coeff *= cc
            per_word: list = [[] for _ in range(k)]
            for (wi, g, inv), s in zip(occ, slot_of):
                per_word[wi].append((combo[g][0][s], inv))
            partial = {(): coeff}
            for wi in range(k):
                prod = _word_product(desc, per_word[wi], cache)
                nxt: dict = {}
                for pk, pc in partial.items():
                    for w2, c2 in prod.items():
                        _acc(nxt, pk + (w2,), pc * c2)
                partial = nxt
                if not partial:
                    break
            for pk, pc in partial.items():
                _acc(out, pk, pc)
    return TensorElement(desc, k, out, check=False)


def act(ctx: ActionContext, aut: Sequence, t: TensorElement) -> TensorElement:
    """Left action of the automorphism given by a Nielsen sequence."""
    if t.arity != ctx.n:
        raise ValueError(f"arity {t.arity} does not match rank {ctx.n}")
    inv = fg.inverse_of_sequence(aut, ctx.n)
    return hom_extend(t, inv.images)


def act_by_map(f: fg.FreeGroupMap, t: TensorElement) -> TensorElement:
    """Substitute the images of ``f``; this is the action of f^{-1}."""
    if t.arity != f.n:
        raise ValueError("arity does not match rank")
    return hom_extend(t, f.images)


# ---------------------------------------------------------------------------
# conjugation


def conjugate(h: AlgebraElement, t: TensorElement) -> TensorElement:
    """h (*) t = h(1) t1 S(h(2)) (x) ... (x) h(2n-1) tn S(h(2n))."""
    if h.descriptor != t.descriptor:
        raise ValueError("descriptor mismatch")
    n = t.arity
    # x_0 plays the role of h; words x_0 x_j x_0^-1 reproduce the formula
    ext = hopf.tensor_concat(hopf.as_tensor(h), t)
    words = [(1, j + 2, -1) for j in range(n)]
    return hom_extend(ext, words)


def conjugate_primitive(letter: int, t: TensorElement) -> TensorElement:
    """v (*) t for a primitive basis letter v: sum over slots of [v, t_j]."""
    desc = t.descriptor
    v = (letter,)
    out: dict = {}
    for key, c in t.terms.items():
        for j, w in enumerate(key):
            for w2, c2 in hopf._mul_words(desc, v, w):
                _acc(out, key[:j] + (w2,) + key[j + 1:], c * c2)
            for w2, c2 in hopf._mul_words(desc, w, v):
                _acc(out, key[:j] + (w2,) + key[j + 1:], -c * c2)
    return TensorElement(desc, t.arity, out, check=False)


# ---------------------------------------------------------------------------
# coordinates


class DegreeBasis:
    """Ordered basis of the total-degree-d part of H^{(x)n}."""

    def __init__(self, desc: HopfDescriptor, n: int, degree: int):
        self.descriptor = desc
        self.n = n
        self.degree = degree
        self.keys = hopf.tensor_basis(desc, n, degree)
        self.index = {k: i for i, k in enumerate(self.keys)}

    def __len__(self):
        return len(self.keys)

    def vector(self, t: TensorElement) -> dict:
        out = {}
        for k, c in t.terms.items():
            i = self.index.get(k)
            if i is None:
                raise ValueError(f"term {k} is not of degree {self.degree}")
            out[i] = c
        return out

    def element(self, vec: dict) -> TensorElement:
        return TensorElement(self.descriptor, self.n, {self.keys[i]: c for i, c in vec.items()}, check=False)

    def basis_element(self, i: int) -> TensorElement:
        return TensorElement(self.descriptor, self.n, {self.keys[i]: Fraction(1)}, check=False)


def homogeneous_degree(t: TensorElement) -> int | None:
    degs = t.total_degrees()
    if len(degs) > 1:
        raise ValueError("inhomogeneous tensor")
    return next(iter(degs)) if degs else None


@dataclass
class QuotientModule:
    """H^{(x)n} modulo the span of v (*) t for primitive letters v.

    Echelon bases are built lazily per total degree and then never mutated,
    so concurrent readers see either no entry or a finished one.
    """

    context: ActionContext
    _bases: dict = field(default_factory=dict, repr=False)
    _coords: dict = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def coords(self, degree: int) -> DegreeBasis:
        cb = self._coords.get(degree)
        if cb is None:
            cb = DegreeBasis(self.context.descriptor, self.context.n, degree)
            self._coords.setdefault(degree, cb)
        return self._coords[degree]

    def tilde(self, degree: int) -> EchelonBasis:
        b = self._bases.get(degree)
        if b is not None:
            return b
        desc = self.context.descriptor
        if degree > desc.truncation:
            raise ValueError(f"degree {degree} exceeds truncation {desc.truncation}")
        cb = self.coords(degree)
        ech = EchelonBasis(len(cb))
        for v in hopf.primitive_letters(desc):
            rest = degree - desc.letter_degree(v)
            if rest < 0:
                continue
            sub = DegreeBasis(desc, self.context.n, rest)
            for i in range(len(sub)):
                ech.add(cb.vector(conjugate_primitive(v, sub.basis_element(i))))
        with self._lock:
            self._bases.setdefault(degree, ech)
        return self._bases[degree]

    def quotient_dim(self, degree: int) -> int:
        return len(self.coords(degree)) - self.tilde(degree).rank


def tilde_basis(ctx: ActionContext, degree: int) -> list:
    q = QuotientModule(ctx)
    if degree == 0:
        return []
    cb = q.coords(degree)
    return [cb.element(r) for r in q.tilde(degree).rows()]


def quotient_reduce(q: QuotientModule, t: TensorElement) -> TensorElement:
    """Canonical representative of t modulo the conjugation subspace."""
    deg = homogeneous_degree(t)
    if deg is None:
        return t
    cb = q.coords(deg)
    return cb.element(q.tilde(deg).reduce(cb.vector(t)))


def in_tilde(q: QuotientModule, t: TensorElement) -> bool:
    """True iff every homogeneous part of t lies in the conjugation subspace."""
    return all(not quotient_reduce(q, t.homogeneous_part(d)) for d in t.total_degrees())


# ---------------------------------------------------------------------------
# filtration and associated graded


def filtration_degree(t: TensorElement) -> int:
    """Least i with t in V_i; each PBW letter (x or z) counts once."""
    return max((sum(len(w) for w in k) for k in t.terms), default=0)


def _length_basis(desc: HopfDescriptor, n: int, length: int) -> list:
    """Tensor keys of PBW words with total letter count ``length``."""
    letters = hopf.primitive_letters(desc)
    keys = set()
    for combo in itertools.combinations_with_replacement(
        [(s, l) for s in range(n) for l in letters], length
    ):
        slots = [[] for _ in range(n)]
        for s, l in combo:
            slots[s].append(l)
        keys.add(tuple(tuple(sorted(x)) for x in slots))
    return sorted(keys, key=lambda k: (tuple(len(w) for w in k), k))


def assoc_graded_matrix(ctx: ActionContext, aut: Sequence, i: int):
    """(gr of the action on V_i/V_{i-1}, substitution action on Sym^i(g (x) k^n)).

    Both are SparseMatrix values over the same ordered basis; columns are images.
    """
    desc = ctx.descriptor
    if desc.kind != hopf.NIL2:
        raise ValueError("associated graded comparison needs the nil2 algebra")
    if desc.truncation < 2 * i:
        raise ValueError(f"truncation must be at least {2 * i}")
    n = ctx.n
    keys = _length_basis(desc, n, i)
    index = {k: r for r, k in enumerate(keys)}
    inv = fg.inverse_of_sequence(aut, n)
    # c[a][b] = exponent sum of x_{a+1} in the image of x_{b+1}
    c = [[sum((1 if g > 0 else -1) for g in inv.images[b] if abs(g) == a + 1) for b in range(n)] for a in range(n)]

    gr_cols, sub_cols = [], []
    for key in keys:
        t = TensorElement(desc, n, {key: 1}, check=False)
        img = act(ctx, aut, t)
        col = {}
        for k2, v in img.terms.items():
            ln = sum(len(w) for w in k2)
            if ln > i:
                raise AssertionError(f"action raised filtration degree on {key}")
            if ln == i:
                col[index[k2]] = v
        gr_cols.append(col)

        poly = {(): Fraction(1)}
        for s, w in enumerate(key):
            for l in w:
                nxt: dict = {}
                for mono, mc in poly.items():
                    for b in range(n):
                        if c[s][b]:
                            _acc(nxt, tuple(sorted(mono + ((b, l),))), mc * c[s][b])
                poly = nxt
        col = {}
        for mono, mc in poly.items():
            slots = [[] for _ in range(n)]
            for b, l in mono:
                slots[b].append(l)
            col[index[tuple(tuple(sorted(x)) for x in slots)]] = mc
        sub_cols.append(col)
    N = len(keys)
    return SparseMatrix.from_columns(N, gr_cols), SparseMatrix.from_columns(N, sub_cols)


# ---------------------------------------------------------------------------
# the E/F experiment


def _action_columns(ctx: ActionContext, aut: Sequence, cb: DegreeBasis) -> list:
    return [cb.vector(act(ctx, aut, cb.basis_element(j))) for j in range(len(cb))]


def _apply_cols(cols: list, v: dict) -> dict:
    out: dict = {}
    for j, x in v.items():
        for i, a in cols[j].items():
            _acc(out, i, x * a)
    return out


def _log_apply(cols: list, v: dict, max_power: int) -> dict:
    """log(A) v for unipotent A given by columns, via log(1+N) = sum (-1)^{k+1} N^k / k."""
    out: dict = {}
    cur = dict(v)
    for k in range(1, max_power + 2):
        nv = _apply_cols(cols, cur)
        for i, x in cur.items():
            _acc(nv, i, -x)
        cur = nv
        if not cur:
            return out
        sgn = Fraction(1 if k % 2 else -1, k)
        for i, x in cur.items():
            _acc(out, i, sgn * x)
    raise ArithmeticError("operator is not unipotent on this component")


LIFTS = {
    # (1 1; 0 1) and (1 0; 1 1) as automorphisms of F_2
    "upper": (fg.right_mul(2, 1), fg.right_mul(1, 2)),
    "transpose": (fg.right_mul(1, 2), fg.right_mul(2, 1)),
}


@dataclass(frozen=True)
class EFResult:
    u: AlgebraElement
    r: AlgebraElement
    convention: str
    nilpotency: int


def nilpotency_index(cols: list, dim: int) -> int:
    """Least k with (A - I)^k = 0, found by applying powers to all basis vectors."""
    vecs = [{j: Fraction(1)} for j in range(dim)]
    k = 0
    while any(vecs):
        k += 1
        nxt = []
        for v in vecs:
            w = _apply_cols(cols, v)
            for i, x in v.items():
                _acc(w, i, -x)
            nxt.append(w)
        vecs = nxt
        if k > dim + 1:
            raise ArithmeticError("not nilpotent")
    return k


def ef_defect(desc: HopfDescriptor | None = None, convention: str = "upper"):
    """Return (u, r) in degree 6 of T(V), V = span(x, y).

    u = (id (x) eps)(([[E,F],E] - 2E)(x^3 (x) y^3)) and r = 24 [[x,y],y][[x,y],x].
    """
    if desc is None:
        desc = hopf.tensor_algebra(2, 6)
    if desc.kind != hopf.TENSOR or desc.dim != 2 or desc.truncation < 6:
        raise ValueError("ef_defect needs T(V) with dim V = 2 and truncation >= 6")
    ctx = ActionContext(desc, 2)
    up, low = LIFTS[convention]
    cb = DegreeBasis(desc, 2, 6)
    A = _action_columns(ctx, up, cb)
    B = _action_columns(ctx, low, cb)
    k = max(nilpotency_index(A, len(cb)), nilpotency_index(B, len(cb)))

    def E(v):
        return _log_apply(A, v, k)

    def F(v):
        return _log_apply(B, v, k)

    x, y = hopf.x(desc, 1), hopf.x(desc, 2)
    v = cb.vector(hopf.tensor(x * x * x, y * y * y))
    # [[E,F],E] = 2 EFE - FEE - EEF
    efe = E(F(E(v)))
    fee = F(E(E(v)))
    eef = E(E(F(v)))
    ev = E(v)
    w: dict = {}
    for vec, coef in ((efe, 2), (fee, -1), (eef, -1), (ev, -2)):
        for i, c in vec.items():
            _acc(w, i, coef * c)
    u = hopf.factor(hopf.counit_slot(cb.element(w), 1))
    br = hopf.lie_bracket(x, y)
    r = 24 * (hopf.lie_bracket(br, y) * hopf.lie_bracket(br, x))
    return EFResult(u, r, convention, k)


def defect_coefficient(res: EFResult):
    """c with u = c [[x,y],y][[x,y],x] modulo commutators, or None if not proportional."""
    desc = res.u.descriptor
    q = QuotientModule(ActionContext(desc, 1))
    base = quotient_reduce(q, hopf.as_tensor(res.r * Fraction(1, 24)))
    uq = quotient_reduce(q, hopf.as_tensor(res.u))
    if not base:
        return None
    k = next(iter(base.terms))
    c = uq.terms.get(k, Fraction(0)) / base.terms[k]
    return c if uq == base * c else None


def act_inner(ctx: ActionContext, g: Sequence[int], t: TensorElement) -> TensorElement:
    """Action of the inner automorphism x_i -> g^-1 x_i g."""
    if t.arity != ctx.n:
        raise ValueError("arity does not match rank")
    return hom_extend(t, fg.inner(fg.inverse_word(g), ctx.n).images)
