"""Symmetrization Sym(g) -> U(g) and its inverse for the class-2 algebra.

Polynomials in Sym(g) are stored as dicts keyed by sorted tuples of
primitive letters, using the same letter numbering as :mod:`hopfaut.hopf`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import hopf
from .exactcore import SparseMatrix, solve, to_fraction
from .hopf import AlgebraElement, HopfDescriptor, TensorElement, _acc


class SymPoly:
    """Commutative polynomial in the primitive letters of a descriptor."""

    __slots__ = ("descriptor", "terms")

    def __init__(self, descriptor: HopfDescriptor, terms: Mapping | None = None):
        self.descriptor = descriptor
        out: dict = {}
        for m, c in (terms or {}).items():
            _acc(out, tuple(sorted(m)), to_fraction(c))
        self.terms = out

    def __add__(self, other: "SymPoly") -> "SymPoly":
        t = dict(self.terms)
        for m, c in other.terms.items():
            _acc(t, m, c)
        return SymPoly(self.descriptor, t)

    def __neg__(self):
        return SymPoly(self.descriptor, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            out: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    _acc(out, tuple(sorted(m1 + m2)), c1 * c2)
            return SymPoly(self.descriptor, out)
        c = to_fraction(other)
        return SymPoly(self.descriptor, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.descriptor == other.descriptor and self.terms == other.terms

    def __repr__(self):
        d = self.descriptor
        parts = [f"{c}*{hopf.format_word(d, m)}" for m, c in sorted(self.terms.items())]
        return "SymPoly(" + (" + ".join(parts) or "0") + ")"


def sym_monomial(desc: HopfDescriptor, letters: Sequence[int], coeff=1) -> SymPoly:
    return SymPoly(desc, {tuple(letters): coeff})


def _require_nil2(desc: HopfDescriptor) -> None:
    if desc.kind != hopf.NIL2:
        raise ValueError("PBW maps are implemented for the nil2 enveloping algebra")


def _distinct_perms(m: tuple):
    if not m:
        yield ()
        return
    seen = set()
    for i, a in enumerate(m):
        if a in seen:
            continue
        seen.add(a)
        for rest in _distinct_perms(m[:i] + m[i + 1:]):
            yield (a,) + rest


@lru_cache(maxsize=None)
def _sigma_monomial(desc: HopfDescriptor, m: tuple) -> tuple:
    perms = list(_distinct_perms(m))
    w = Fraction(1, len(perms))
    out: dict = {}
    for p in perms:
        for word, c in hopf.word(desc, p).terms.items():
            _acc(out, word, w * c)
    return tuple(out.items())


def symmetrize(p: SymPoly) -> AlgebraElement:
    """sigma(X_1...X_i) = (1/i!) sum over orderings, straightened."""
    desc = p.descriptor
    _require_nil2(desc)
    out: dict = {}
    for m, c in p.terms.items():
        for w, c2 in _sigma_monomial(desc, m):
            _acc(out, w, c * c2)
    return AlgebraElement(desc, out, check=False)


def filtration_length(a: AlgebraElement) -> int:
    return max((len(w) for w in a.terms), default=0)


def pbw_inverse(u: AlgebraElement, i: int) -> SymPoly:
    """pi_i(u): project (id - eta eps)^{(x)i} Delta^{i-1}(u) to g^{(x)i}, divide by i!."""
    desc = u.descriptor
    _require_nil2(desc)
    if i < 0:
        raise ValueError("i must be nonnegative")
    if filtration_length(u) > i:
        raise ValueError(f"element does not lie in U_{i}")
    out: dict = {}
    if i == 0:
        c = hopf.counit(u)
        return SymPoly(desc, {(): c} if c else {})
    scale = Fraction(1, math.factorial(i))
    for w, c in u.terms.items():
        if len(w) != i:
            continue  # lower filtration pieces vanish under the projection
        for key, c2 in hopf.coproduct_word(w, i - 1):
            if all(len(part) == 1 for part in key):
                _acc(out, tuple(sorted(part[0] for part in key)), c * c2 * scale)
    return SymPoly(desc, out)


def sym_coproduct(p: SymPoly) -> tuple:
    """Standard coproduct on Sym(g) as a list of (SymPoly-key pair, coeff)."""
    out: dict = {}
    for m, c in p.terms.items():
        for (a, b), c2 in hopf.coproduct_word(m, 1):
            _acc(out, (a, b), c * c2)
    return tuple(out.items())


def sigma_tensor(p: SymPoly) -> TensorElement:
    """(sigma (x) sigma)(Delta_Sym p)."""
    desc = p.descriptor
    out: dict = {}
    for (a, b), c in sym_coproduct(p):
        for wa, ca in _sigma_monomial(desc, a):
            for wb, cb in _sigma_monomial(desc, b):
                _acc(out, (wa, wb), c * ca * cb)
    return TensorElement(desc, 2, out, check=False)


# ---------------------------------------------------------------------------
# class-2 straightening constants


@dataclass(frozen=True)
class StraighteningConstants:
    """X^n Y^k = sum_i c[i] sigma(X^{n-i} Y^{k-i} [X,Y]^i), likewise Y^k X^n with d."""

    n: int
    k: int
    c: tuple
    d: tuple

    def coefficient(self, which: str, i: int) -> Fraction:
        if not 0 <= i <= min(self.n, self.k):
            raise ValueError(f"index {i} outside 0..{min(self.n, self.k)}")
        return (self.c if which == "c" else self.d)[i]


def heisenberg(truncation: int) -> HopfDescriptor:
    return hopf.enveloping_nil2(2, truncation)


def _sigma_basis(desc: HopfDescriptor, n: int, k: int) -> list:
    X, Y, Z = 0, 1, desc.z_letter(0, 1)
    return [
        symmetrize(sym_monomial(desc, (X,) * (n - i) + (Y,) * (k - i) + (Z,) * i))
        for i in range(min(n, k) + 1)
    ]


def straighten_constants(n: int, k: int) -> StraighteningConstants:
    if n < 0 or k < 0:
        raise ValueError("n, k must be nonnegative")
    desc = heisenberg(max(n + k, 1))
    basis = _sigma_basis(desc, n, k)
    words = sorted({w for b in basis for w in b.terms})
    idx = {w: r for r, w in enumerate(words)}
    cols = [{idx[w]: c for w, c in b.terms.items()} for b in basis]
    mat = SparseMatrix.from_columns(len(words), cols)

    def coords(a: AlgebraElement) -> tuple:
        rhs = {}
        for w, c in a.terms.items():
            if w not in idx:
                raise ArithmeticError("element lies outside the sigma basis span")
            rhs[idx[w]] = c
        sol = solve(mat, rhs)
        return tuple(sol.get(i, Fraction(0)) for i in range(len(basis)))

    X, Y = hopf.x(desc, 1), hopf.x(desc, 2)
    xn = hopf.one(desc)
    for _ in range(n):
        xn = xn * X
    yk = hopf.one(desc)
    for _ in range(k):
        yk = yk * Y
    return StraighteningConstants(n, k, coords(xn * yk), coords(yk * xn))


def straighten_constant(n: int, k: int, i: int, which: str = "c") -> Fraction:
    if i > min(n, k) or i < 0:
        raise ValueError(f"degenerate request: i={i} exceeds min(n, k)={min(n, k)}")
    return straighten_constants(n, k).coefficient(which, i)
