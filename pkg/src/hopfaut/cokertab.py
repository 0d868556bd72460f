"""Obstruction tables and dimension utilities.

The H^1 table pairs each quotient module [S_(p,q)(L2) / ad]_degree with a
space of level-one modular or cusp forms: (2k, 2l) contributes cusp forms of
weight 2k - 2l + 2 and (2k+1, 2l+1) contributes modular forms of the same
weight.  Cokernel degree = module degree + 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import action, hopf
from .exactcore import EchelonBasis
from .nilrep import quotient_character, required_dim
from .symfunc import Partition, SchurPoly, as_partition

COKERNEL_SHIFT = 4


def modular_dims(weight: int) -> tuple:
    """(dim M_w, dim S_w) for SL_2(Z)."""
    if weight == 0:
        return (1, 0)
    if weight < 0 or weight % 2 or weight == 2:
        return (0, 0)
    m = weight // 12 + (0 if weight % 12 == 2 else 1)
    return (m, m - 1)


@dataclass(frozen=True)
class ObstructionEntry:
    cokernel_degree: int
    lam: Partition
    form_kind: str
    weight: int
    multiplicity: int
    module_degree: int
    source: tuple = field(default=(), compare=False)

    COLUMNS = ("cokernel_degree", "lambda", "form_kind", "weight", "multiplicity", "module_degree")

    def row(self) -> list:
        return [self.cokernel_degree, list(self.lam), self.form_kind, self.weight, self.multiplicity, self.module_degree]

    def to_json(self) -> dict:
        return dict(zip(self.COLUMNS, self.row()))


def table_cells(max_module_degree: int):
    """(p, q, form_kind, weight) for every cell that can contribute."""
    out = []
    for k in range(1, max_module_degree + 1):
        for l in range(k):
            w = 2 * k - 2 * l + 2
            if 2 * k + 2 * l <= max_module_degree and modular_dims(w)[1]:
                out.append((2 * k, 2 * l, "cusp", w))
            if 2 * k + 2 * l + 2 <= max_module_degree and modular_dims(w)[0]:
                out.append((2 * k + 1, 2 * l + 1, "modular", w))
    return out


def h1_table(max_module_degree: int, max_excess: int | None = None, min_excess: int = 0) -> list:
    """Entries of the H^1 table with module degree <= max_module_degree.

    Excess = module degree - |lambda|; the number of rows needed grows with
    it, so ``max_excess`` caps the computation.
    """
    entries = []
    for p, q, kind, w in table_cells(max_module_degree):
        mdim, sdim = modular_dims(w)
        fdim = sdim if kind == "cusp" else mdim
        top = min(max_module_degree, 2 * (p + q))
        if max_excess is not None:
            top = min(top, p + q + max_excess)
        for deg in range(p + q + min_excess, top + 1):
            d = required_dim(p, q, deg)
            char = quotient_character(p, q, deg, d)
            for lam, m in char.items():
                entries.append(ObstructionEntry(deg + COKERNEL_SHIFT, lam, kind, w, m * fdim, deg, (p, q)))
    entries.sort(key=lambda e: (e.cokernel_degree, tuple(-a for a in e.lam), e.form_kind, e.weight, e.source))
    return entries


def excess_one_forms(k: int, l: int, odd: bool) -> SchurPoly:
    """Closed-form excess-one piece for the cell (2k, 2l) or (2k+1, 2l+1)."""
    if odd:
        p, q = 2 * k + 1, 2 * l + 1
    else:
        p, q = 2 * k, 2 * l
    if q == 0:
        shapes = [(p - 1, 1, 1)]
    elif q == 1:
        shapes = [(p, 1, 1), (p - 1, 2, 1), (p - 1, 1, 1, 1)]
    else:
        shapes = [(p + 1, q - 1, 1), (p, q, 1), (p - 1, q + 1, 1), (p, q - 1, 1, 1), (p - 1, q, 1, 1)]
    return SchurPoly.from_list(s for s in shapes if list(s) == sorted(s, reverse=True) and min(s) > 0)


def entries_to_tsv(entries) -> str:
    lines = ["\t".join(ObstructionEntry.COLUMNS)]
    for e in entries:
        lines.append("\t".join([str(e.cokernel_degree), ",".join(map(str, e.lam)), e.form_kind, str(e.weight), str(e.multiplicity), str(e.module_degree)]))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# free Lie algebra


def mobius(n: int) -> int:
    res, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            res = -res
        p += 1
    if m > 1:
        res = -res
    return res


def _divisors(n: int) -> list:
    return [e for e in range(1, n + 1) if n % e == 0]


def witt_dim(d: int, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    return sum(mobius(e) * d ** (k // e) for e in _divisors(k)) // k


def necklace_count(d: int, k: int) -> int:
    phi = lambda e: sum(1 for a in range(1, e + 1) if math.gcd(a, e) == 1)
    return sum(phi(e) * d ** (k // e) for e in _divisors(k)) // k


@lru_cache(maxsize=None)
def _hall_words(d: int, max_k: int) -> tuple:
    """Hall set up to degree max_k: (tree, degree) pairs in Hall order.

    Trees are ints (generators, 0-based) or pairs (u, v) meaning [u, v].
    """
    order: list = [(i, 1) for i in range(d)]
    pos = {i: n for n, i in enumerate(range(d))}
    for k in range(2, max_k + 1):
        new = []
        for u, du in order:
            for v, dv in order:
                if du + dv != k:
                    continue
                if not pos[u] > pos[v]:
                    continue
                if isinstance(u, tuple) and pos[u[1]] > pos[v]:
                    continue
                new.append(((u, v), k))
        for t, _ in new:
            pos[t] = len(pos)
        order.extend(new)
    return tuple(order)


def hall_basis(d: int, k: int) -> list:
    """Hall trees of degree k, in Hall order (generators x_1 < ... < x_d)."""
    return [t for t, dk in _hall_words(d, k) if dk == k]


def lie_expand(tree, desc: hopf.HopfDescriptor) -> hopf.AlgebraElement:
    if isinstance(tree, int):
        return hopf.x(desc, tree + 1)
    return hopf.lie_bracket(lie_expand(tree[0], desc), lie_expand(tree[1], desc))


def format_tree(tree) -> str:
    if isinstance(tree, int):
        return f"x{tree + 1}"
    return f"[{format_tree(tree[0])},{format_tree(tree[1])}]"


def _word_vector(a: hopf.AlgebraElement, d: int) -> dict:
    out = {}
    for w, c in a.terms.items():
        idx = 0
        for l in w:
            idx = idx * d + l
        out[idx] = c
    return out


def d_space_dim(d: int, s: int, explicit: bool = False) -> int:
    """dim ker(V (x) L_{s+1}(V) -> L_{s+2}(V)), bracketing."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if not explicit:
        return d * witt_dim(d, s + 1) - witt_dim(d, s + 2)
    desc = hopf.tensor_algebra(d, s + 2)
    basis = [lie_expand(t, desc) for t in hall_basis(d, s + 1)]
    ech = EchelonBasis(d ** (s + 2))
    for i in range(d):
        xi = hopf.x(desc, i + 1)
        for b in basis:
            ech.add(_word_vector(hopf.lie_bracket(xi, b), d))
    return d * len(basis) - ech.rank


def bracket_rank(d: int, s: int) -> int:
    """Rank of the bracketing map; equals witt_dim(d, s+2) when it is onto."""
    return d * witt_dim(d, s + 1) - d_space_dim(d, s, explicit=True)


# ---------------------------------------------------------------------------
# cyclic words


@dataclass(frozen=True)
class CyclicDims:
    formula: int
    explicit: int
    antisymmetric: int


def cyclic_word_dims(d: int, k: int) -> CyclicDims:
    """Dimensions of T(V)_k / [T, T] (both ways) and of the image of (1 - S) there."""
    if k < 1:
        raise ValueError("k must be positive")
    desc = hopf.tensor_algebra(d, k)
    q = action.QuotientModule(action.ActionContext(desc, 1))
    explicit = q.quotient_dim(k)
    cb = q.coords(k)
    tilde = q.tilde(k)
    img = EchelonBasis(len(cb))
    for key in cb.keys:
        w = key[0]
        t = hopf.TensorElement(desc, 1, {(w,): 1}) - hopf.as_tensor(hopf.antipode(hopf.AlgebraElement(desc, {w: 1})))
        img.add(tilde.reduce(cb.vector(t)))
    return CyclicDims(necklace_count(d, k), explicit, img.rank)
