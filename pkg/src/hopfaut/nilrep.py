"""Explicit weight-space models of Sym^p(L2) (x) Sym^q(L2).

L2 = V (+) Lambda^2 V with basis x_1..x_d (degree 1, weight e_i) and
z_ab = [x_a, x_b] for a < b (degree 2, weight e_a + e_b).  The two-row Schur
functor S_(p,q)(L2) is realized as the kernel of the map
Sym^p (x) Sym^q -> Sym^(p+1) (x) Sym^(q-1) that moves one factor across.
Everything is computed one torus weight at a time; GL(V) multiplicities come
from weight-space dimensions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .exactcore import EchelonBasis, SparseMatrix, kernel_basis
from .symfunc import SchurPoly, char_to_schur, dominant_multiplicity, partitions

Weight = tuple


@dataclass(frozen=True)
class L2Basis:
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be positive")

    @cached_property
    def pairs(self) -> tuple:
        return tuple(itertools.combinations(range(self.d), 2))

    @cached_property
    def weights(self) -> tuple:
        out = []
        for i in range(self.d):
            w = [0] * self.d
            w[i] = 1
            out.append(tuple(w))
        for a, b in self.pairs:
            w = [0] * self.d
            w[a] += 1
            w[b] += 1
            out.append(tuple(w))
        return tuple(out)

    @property
    def size(self) -> int:
        return self.d + len(self.pairs)

    def z(self, a: int, b: int) -> int:
        return self.d + self.pairs.index((a, b))

    def is_x(self, letter: int) -> bool:
        return letter < self.d

    def name(self, letter: int) -> str:
        if letter < self.d:
            return f"x{letter + 1}"
        a, b = self.pairs[letter - self.d]
        return f"z{a + 1}{b + 1}"

    def bracket(self, r: int, letter: int):
        """[x_r, letter] as (letter, sign) or None."""
        if letter >= self.d or letter == r:
            return None
        if r < letter:
            return self.z(r, letter), 1
        return self.z(letter, r), -1


@lru_cache(maxsize=None)
def monomials(d: int, length: int, weight: Weight, start: int = 0) -> tuple:
    """Sorted letter tuples of the given length and exact weight (letters >= start)."""
    B = L2Basis(d)
    if length == 0:
        return ((),) if not any(weight) else ()
    if sum(weight) < length or sum(weight) > 2 * length:
        return ()
    out = []
    for l in range(start, B.size):
        lw = B.weights[l]
        rest = tuple(a - b for a, b in zip(weight, lw))
        if min(rest) < 0:
            continue
        for tail in monomials(d, length - 1, rest, l):
            out.append((l,) + tail)
    return tuple(out)


def _sub_weights(weight: Weight):
    return itertools.product(*(range(a + 1) for a in weight))


@lru_cache(maxsize=None)
def tensor_basis(d: int, p: int, q: int, weight: Weight) -> tuple:
    """Ordered basis (m1, m2) of the weight space of Sym^p (x) Sym^q."""
    out = []
    for u in _sub_weights(weight):
        left = monomials(d, p, u)
        if not left:
            continue
        right = monomials(d, q, tuple(a - b for a, b in zip(weight, u)))
        for m1 in left:
            for m2 in right:
                out.append((m1, m2))
    out.sort()
    return tuple(out)


def _check_weight(d: int, degree: int, weight: Weight) -> Weight:
    weight = tuple(weight)
    if len(weight) != d or min(weight, default=0) < 0:
        raise ValueError(f"weight {weight} is not a length-{d} exponent vector")
    if sum(weight) != degree:
        raise ValueError(f"weight {weight} has degree {sum(weight)}, not {degree}")
    return weight


def _remove_one(m: tuple, letter: int) -> tuple:
    i = m.index(letter)
    return m[:i] + m[i + 1:]


def _insert(m: tuple, letter: int) -> tuple:
    return tuple(sorted(m + (letter,)))


def pieri_map_matrix(p: int, q: int, degree: int, weight: Weight, d: int | None = None) -> SparseMatrix:
    """Matrix of Sym^p (x) Sym^q -> Sym^(p+1) (x) Sym^(q-1) on one weight space."""
    if q < 1:
        raise ValueError("the Pieri map needs q >= 1")
    d = len(weight) if d is None else d
    weight = _check_weight(d, degree, weight)
    src = tensor_basis(d, p, q, weight)
    tgt = tensor_basis(d, p + 1, q - 1, weight)
    idx = {k: i for i, k in enumerate(tgt)}
    ent: dict = {}
    for j, (m1, m2) in enumerate(src):
        for l in set(m2):
            key = (_insert(m1, l), _remove_one(m2, l))
            r = idx[key]
            ent[(r, j)] = ent.get((r, j), 0) + m2.count(l)
    return SparseMatrix(len(tgt), len(src), ent)


@lru_cache(maxsize=None)
def schur2_basis(d: int, p: int, q: int, weight: Weight) -> tuple:
    """Basis (sparse vectors over tensor_basis) of the weight space of S_(p,q)(L2)."""
    if q == 0:
        n = len(tensor_basis(d, p, 0, weight))
        return tuple({i: Fraction(1)} for i in range(n))
    m = pieri_map_matrix(p, q, sum(weight), weight, d)
    return tuple(kernel_basis(m))


def schur2_weight_dim(d: int, p: int, q: int, weight: Weight) -> int:
    return len(schur2_basis(d, p, q, tuple(weight)))


def schur2_weight_dim_count(d: int, p: int, q: int, weight: Weight) -> int:
    """dim src - dim tgt, equal to the kernel dimension since the Pieri map is onto."""
    weight = tuple(weight)
    n = len(tensor_basis(d, p, q, weight))
    if q == 0:
        return n
    return n - len(tensor_basis(d, p + 1, q - 1, weight))


def _ad(B: L2Basis, r: int, m1: tuple, m2: tuple) -> dict:
    """ad(x_r) as a derivation on a monomial of Sym (x) Sym."""
    out: dict = {}
    for which, m in ((0, m1), (1, m2)):
        for l in set(m):
            br = B.bracket(r, l)
            if br is None:
                continue
            zl, sign = br
            new = _insert(_remove_one(m, l), zl)
            key = (new, m2) if which == 0 else (m1, new)
            out[key] = out.get(key, 0) + sign * m.count(l)
    return {k: v for k, v in out.items() if v}


def adjoint_images(d: int, p: int, q: int, weight: Weight) -> list:
    """Images ad(x_r)(k) in the weight space, k over S_(p,q)(L2) at weight - e_r."""
    weight = tuple(weight)
    B = L2Basis(d)
    tgt = tensor_basis(d, p, q, weight)
    idx = {k: i for i, k in enumerate(tgt)}
    out = []
    for r in range(d):
        if weight[r] == 0:
            continue
        w0 = tuple(a - (1 if i == r else 0) for i, a in enumerate(weight))
        src = tensor_basis(d, p, q, w0)
        for vec in schur2_basis(d, p, q, w0):
            img: dict = {}
            for j, c in vec.items():
                for key, s in _ad(B, r, *src[j]).items():
                    i = idx[key]
                    img[i] = img.get(i, 0) + c * s
            out.append({i: v for i, v in img.items() if v})
    return out


def adjoint_matrix(p: int, q: int, degree: int, weight: Weight, d: int | None = None) -> SparseMatrix:
    """Matrix of ad: V (x) [S_(p,q)(L2)]_degree -> [Sym^p (x) Sym^q]_(degree+1) at ``weight``.

    Columns run over pairs (r, basis vector of S_(p,q)(L2) at weight - e_r), r-major.
    """
    d = len(weight) if d is None else d
    weight = _check_weight(d, degree + 1, weight)
    cols = adjoint_images(d, p, q, weight)
    return SparseMatrix.from_columns(len(tensor_basis(d, p, q, weight)), cols)


@lru_cache(maxsize=None)
def adjoint_rank(d: int, p: int, q: int, weight: Weight) -> int:
    weight = tuple(weight)
    ech = EchelonBasis(len(tensor_basis(d, p, q, weight)))
    ech.extend(adjoint_images(d, p, q, weight))
    return ech.rank


def adjoint_source_dim(d: int, p: int, q: int, weight: Weight) -> int:
    total = 0
    for r in range(d):
        if weight[r]:
            w0 = tuple(a - (1 if i == r else 0) for i, a in enumerate(weight))
            total += schur2_weight_dim(d, p, q, w0)
    return total


# ---------------------------------------------------------------------------
# characters


def required_dim(p: int, q: int, degree: int) -> int:
    """Rows needed so that every constituent of the degree piece is visible."""
    e = degree - (p + q)
    if e < 0:
        return 1
    return max(1, 2 * e + min(p + q - e, 2 if q > 0 else 1))


def _validate(p: int, q: int, degree: int, d: int, truncate: bool) -> None:
    if not p >= q >= 0:
        raise ValueError("need p >= q >= 0")
    need = required_dim(p, q, degree)
    if d < need and not truncate:
        raise ValueError(f"d={d} too small for a faithful decomposition; need d >= {need}")


def _dominant_weights(degree: int, d: int):
    for lam in partitions(degree, max_len=d):
        yield tuple(lam) + (0,) * (d - len(lam))


def _full_character(dimfn, degree: int, d: int) -> SchurPoly:
    weights = {}
    for w in _dominant_weights(degree, d):
        v = dimfn(w)
        if v:
            for perm in set(itertools.permutations(w)):
                weights[perm] = v
    return char_to_schur(weights, d)


def schur2_character(p: int, q: int, degree: int, d: int, truncate: bool = False) -> SchurPoly:
    """GL(V)-character of [S_(p,q)(L2)]_degree from explicit Pieri kernels."""
    _validate(p, q, degree, d, truncate)
    if degree < p + q or degree > 2 * (p + q):
        return SchurPoly()
    return _full_character(lambda w: schur2_weight_dim(d, p, q, w), degree, d)


def adjoint_kernel_character(p: int, q: int, d: int) -> SchurPoly:
    """Character of ker(ad: V (x) S_(p,q)(V) -> [S_(p,q)(L2)]_(p+q+1))."""
    if not p >= q >= 0:
        raise ValueError("need p >= q >= 0")
    deg = p + q + 1

    def kdim(w):
        return adjoint_source_dim(d, p, q, w) - adjoint_rank(d, p, q, w)

    return _full_character(kdim, deg, d)


def _quotient_dim(d, p, q, w):
    if sum(w) == p + q:
        return schur2_weight_dim(d, p, q, w)
    return schur2_weight_dim(d, p, q, w) - adjoint_rank(d, p, q, w)


def quotient_character(p: int, q: int, degree: int, d: int, truncate: bool = False, method: str = "alternating") -> SchurPoly:
    """Character of [S_(p,q)(L2) / ad(L2) S_(p,q)(L2)]_degree.

    ``method="alternating"`` only evaluates ranks at weights dominating a
    constituent of S_(p,q)(L2); ``method="full"`` runs highest-weight
    subtraction over every dominant weight.
    """
    _validate(p, q, degree, d, truncate)
    if degree < p + q or degree > 2 * (p + q):
        return SchurPoly()
    if method == "full":
        return _full_character(lambda w: _quotient_dim(d, p, q, w), degree, d)
    if method != "alternating":
        raise ValueError(f"unknown method {method!r}")
    out = {}
    cheap = lru_cache(maxsize=None)(lambda w: schur2_weight_dim_count(d, p, q, w))
    exact = lru_cache(maxsize=None)(lambda w: _quotient_dim(d, p, q, w))
    for lam in partitions(degree, max_len=d):
        bound = dominant_multiplicity(cheap, lam, d)
        if bound <= 0:
            continue
        m = dominant_multiplicity(exact, lam, d)
        if m < 0 or m > bound:
            raise ArithmeticError(f"inconsistent multiplicity {m} for {lam} (ambient {bound})")
        if m:
            out[lam] = m
    return SchurPoly(out)
