"""Partitions and symmetric functions in the Schur basis.

Products use the Littlewood-Richardson rule, S_nu(Lambda^2 V) comes from the
Jacobi-Trudi determinant whose entries are h_m[e_2], and Schur functors of
V (+) Lambda^2 V are assembled from LR coefficients.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

Partition = tuple


# ---------------------------------------------------------------------------
# partitions


def as_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(a) for a in parts)
    if any(a < 0 for a in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    return tuple(a for a in p if a > 0)


def parse_partition(s: str) -> Partition:
    s = s.strip().strip("[]()")
    if not s:
        return ()
    return as_partition(int(t) for t in s.replace(" ", ",").split(",") if t)


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rem, mp, ml):
        if rem == 0:
            yield ()
            return
        if ml == 0:
            return
        for a in range(min(rem, mp), 0, -1):
            for rest in rec(rem - a, a, ml - 1):
                yield (a,) + rest

    yield from rec(n, max_part, max_len)


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for a in p if a > j) for j in range(p[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(b <= a for a, b in zip(outer, inner))


def format_partition(p: Partition) -> str:
    """Compact exponent notation, e.g. (2,2,1,1) -> [2^2 1^2]."""
    if not p:
        return "[]"
    out = []
    for a, grp in itertools.groupby(p):
        e = len(list(grp))
        out.append(f"{a}^{e}" if e > 1 else f"{a}")
    return "[" + " ".join(out) + "]"


def even_column_partitions(k: int) -> list:
    """A_k: partitions of 2k whose columns all have even length."""
    return [lam for lam in partitions(2 * k) if all(c % 2 == 0 for c in conjugate(lam))]


def enumerate_Bm(m: int) -> list:
    """Row (a) placed on top of mu in A_{m-a}, for 1 <= a <= m, when legal."""
    if m < 1:
        raise ValueError("m must be positive")
    out = set()
    for a in range(1, m + 1):
        for mu in even_column_partitions(m - a):
            if not mu or a >= mu[0]:
                out.add((a,) + mu)
    return sort_partitions(out)


def sort_partitions(ps: Iterable[Partition]) -> list:
    """Decreasing size, then reverse lexicographic."""
    return sorted(ps, key=lambda p: (sum(p), p), reverse=True)


# ---------------------------------------------------------------------------
# Schur polynomials


class SchurPoly:
    """Integer combination of Schur functions s_lambda."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        out: dict = {}
        for lam, c in (terms or {}).items():
            lam = as_partition(lam)
            c = int(c)
            if c:
                out[lam] = out.get(lam, 0) + c
                if not out[lam]:
                    del out[lam]
        self.terms = out

    @classmethod
    def s(cls, *parts: int) -> "SchurPoly":
        return cls({as_partition(parts): 1})

    @classmethod
    def from_list(cls, items: Iterable) -> "SchurPoly":
        out = cls()
        for lam in items:
            out = out + cls({as_partition(lam): 1})
        return out

    def __add__(self, other):
        t = dict(self.terms)
        for lam, c in other.terms.items():
            t[lam] = t.get(lam, 0) + c
        return SchurPoly(t)

    def __neg__(self):
        return SchurPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SchurPoly):
            return lr_mult(self, other)
        return SchurPoly({k: v * int(other) for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, SchurPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, lam) -> int:
        return self.terms.get(as_partition(lam), 0)

    def items(self) -> list:
        return [(lam, self.terms[lam]) for lam in sort_partitions(self.terms)]

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def restrict_rows(self, d: int) -> "SchurPoly":
        return SchurPoly({lam: c for lam, c in self.terms.items() if len(lam) <= d})

    def degree_part(self, n: int) -> "SchurPoly":
        return SchurPoly({lam: c for lam, c in self.terms.items() if sum(lam) == n})

    def dimension(self, d: int) -> int:
        return sum(c * weyl_dim(lam, d) for lam, c in self.terms.items())

    def __repr__(self):
        return f"SchurPoly({format_schur(self)})"

    def to_json(self) -> dict:
        return {"terms": [{"lambda": list(lam), "mult": c} for lam, c in self.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SchurPoly":
        return cls({tuple(t["lambda"]): t["mult"] for t in obj["terms"]})


def format_schur(p: SchurPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for lam, c in p.items():
        body = format_partition(lam)
        out.append(body if c == 1 else f"{c}{body}")
    return " + ".join(out)


# ---------------------------------------------------------------------------
# Littlewood-Richardson


def _horizontal_strips(shape: list, size: int, caps: list):
    """Ways to add ``size`` boxes, at most one per column; caps[r] bounds row r."""
    rows = len(shape)
    limits = []
    for r in range(rows + 1):
        above = shape[r - 1] if r > 0 else math.inf
        cur = shape[r] if r < rows else 0
        lim = above - cur if r > 0 else size
        limits.append(min(lim, size, caps[r] if r < len(caps) else size))

    def rec(r, rem):
        if rem == 0:
            yield [0] * (rows + 1 - r)
            return
        if r > rows:
            return
        for a in range(min(limits[r], rem), -1, -1):
            for rest in rec(r + 1, rem - a):
                yield [a] + rest

    yield from rec(0, size)


@lru_cache(maxsize=None)
def _lr_product(mu: Partition, nu: Partition) -> tuple:
    """s_mu * s_nu by filling LR tableaux of content nu outside mu."""
    results: dict = {}

    def rec(k, shape, counts):
        # counts[r][j] = number of letters j in row r placed so far
        if k == len(nu):
            lam = tuple(a for a in shape if a > 0)
            results[lam] = results.get(lam, 0) + 1
            return
        rows = len(shape)
        caps = []
        for r in range(rows + 1):
            if k == 0:
                caps.append(nu[0])
            else:
                prev = sum(counts[rr][k - 1] for rr in range(r)) if r > 0 else 0
                done = sum(counts[rr][k] for rr in range(r))
                caps.append(max(prev - done, 0))
        for strip in _horizontal_strips(shape, nu[k], caps):
            # lattice check row by row (caps gave a necessary bound per row;
            # recheck cumulatively)
            ok = True
            if k > 0:
                done = 0
                for r, a in enumerate(strip):
                    prev = sum(counts[rr][k - 1] for rr in range(r))
                    done += a
                    if done > prev:
                        ok = False
                        break
            if not ok:
                continue
            new_shape = list(shape) + [0]
            new_counts = [list(c) for c in counts] + [[0] * len(nu)]
            for r, a in enumerate(strip):
                new_shape[r] += a
                new_counts[r][k] += a
            while new_shape and new_shape[-1] == 0:
                new_shape.pop()
                new_counts.pop()
            rec(k + 1, new_shape, new_counts)

    rec(0, list(mu), [[0] * len(nu) for _ in mu])
    return tuple(results.items())


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if sum(lam) != sum(mu) + sum(nu) or not contains(lam, mu):
        return 0
    return dict(_lr_product(mu, nu)).get(lam, 0)


def lr_mult(a: SchurPoly, b: SchurPoly) -> SchurPoly:
    out: dict = {}
    for mu, c1 in a.terms.items():
        for nu, c2 in b.terms.items():
            x, y = (mu, nu) if mu >= nu else (nu, mu)
            for lam, c in _lr_product(x, y):
                out[lam] = out.get(lam, 0) + c1 * c2 * c
    return SchurPoly(out)


# ---------------------------------------------------------------------------
# plethysm with e_2


def sym_of_wedge2(k: int) -> SchurPoly:
    """Sym^k(Lambda^2 V) = sum of s_lambda over A_k."""
    if k < 0:
        return SchurPoly()
    return SchurPoly({lam: 1 for lam in even_column_partitions(k)})


@lru_cache(maxsize=None)
def _schur_of_wedge2(nu: Partition) -> SchurPoly:
    n = len(nu)
    if n == 0:
        return SchurPoly({(): 1})
    total = SchurPoly()
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = SchurPoly({(): 1})
        for i, j in enumerate(perm):
            m = nu[i] - i + j
            if m < 0:
                term = SchurPoly()
                break
            term = term * sym_of_wedge2(m)
        total = total + term * sign
    return total


def schur_of_wedge2(nu: Iterable[int]) -> SchurPoly:
    """S_nu(Lambda^2 V) via Jacobi-Trudi; raises if the result is not Schur positive."""
    res = _schur_of_wedge2(as_partition(nu))
    if not res.is_nonnegative():
        raise ArithmeticError(f"non-positive plethysm result {res}")
    return res


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def schur_of_sum(lam: Iterable[int]) -> list:
    """Triples (mu, nu, c) with c = c^lam_{mu,nu} > 0."""
    lam = as_partition(lam)
    n = sum(lam)
    out = []
    for a in range(n, -1, -1):
        for mu in partitions(a):
            if not contains(lam, mu):
                continue
            for nu in partitions(n - a):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out.append((mu, nu, c))
    return out


class GradedCharacter(dict):
    """degree -> SchurPoly."""

    def total(self) -> SchurPoly:
        out = SchurPoly()
        for v in self.values():
            out = out + v
        return out

    def to_json(self) -> dict:
        return {"degrees": [{"degree": d, **self[d].to_json()} for d in sorted(self) if self[d]]}


def schur_of_L2(lam: Iterable[int]) -> GradedCharacter:
    """S_lam(V (+) Lambda^2 V) by degree, deg(V) = 1 and deg(Lambda^2 V) = 2."""
    out = GradedCharacter()
    for mu, nu, c in schur_of_sum(lam):
        deg = sum(mu) + 2 * sum(nu)
        piece = SchurPoly({mu: c}) * schur_of_wedge2(nu)
        out[deg] = out.get(deg, SchurPoly()) + piece
    return GradedCharacter({d: v for d, v in out.items() if v})


# ---------------------------------------------------------------------------
# characters


@lru_cache(maxsize=None)
def kostka(lam: Partition, mu: Partition) -> int:
    """Number of SSYT of shape lam and content mu (mu any composition)."""
    lam = as_partition(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0

    def rec(k, shape):
        if k == len(mu):
            return 1 if tuple(a for a in shape if a) == lam else 0
        total = 0
        for strip in _horizontal_strips(list(shape), mu[k], [mu[k]] * (len(shape) + 1)):
            new = list(shape) + [0]
            for r, a in enumerate(strip):
                new[r] += a
            while new and new[-1] == 0:
                new.pop()
            if contains(lam, tuple(new)):
                total += rec(k + 1, tuple(new))
        return total

    return rec(0, ())


def weyl_dim(lam: Partition, d: int) -> int:
    if len(lam) > d:
        return 0
    l = list(lam) + [0] * (d - len(lam))
    num, den = 1, 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= l[i] - l[j] + j - i
            den *= j - i
    return num // den


def schur_weights(lam: Partition, d: int) -> dict:
    """Torus character of S_lam(k^d) as exponent-vector -> multiplicity."""
    out = {}
    n = sum(lam)
    for w in _compositions(n, d):
        k = kostka(lam, tuple(sorted(w, reverse=True)))
        if k:
            out[w] = k
    return out


def _compositions(n: int, d: int):
    if d == 0:
        if n == 0:
            yield ()
        return
    for a in range(n, -1, -1):
        for rest in _compositions(n - a, d - 1):
            yield (a,) + rest


def char_to_schur(weights: Mapping, d: int) -> SchurPoly:
    """Decompose a GL_d torus character by highest-weight subtraction."""
    w = {tuple(k): int(v) for k, v in weights.items() if v}
    for k in w:
        if len(k) != d:
            raise ValueError(f"weight {k} does not have length {d}")
        if any(a < 0 for a in k):
            raise ValueError(f"negative weight {k}")
    for k, v in w.items():
        for perm in set(itertools.permutations(k)):
            if w.get(perm, 0) != v:
                raise ValueError("weights are not symmetric under permutations")
    dom = {k: v for k, v in w.items() if all(k[i] >= k[i + 1] for i in range(d - 1))}
    out: dict = {}
    while dom:
        top = max(dom)
        c = dom[top]
        if c < 0:
            raise ArithmeticError(f"negative multiplicity {c} at {top}")
        lam = as_partition(top)
        out[lam] = c
        for mu in list(partitions(sum(lam), max_len=d)):
            mu_w = tuple(mu) + (0,) * (d - len(mu))
            k = kostka(lam, mu)
            if k:
                dom[mu_w] = dom.get(mu_w, 0) - c * k
                if dom[mu_w] == 0:
                    del dom[mu_w]
    return SchurPoly(out)


def dominant_multiplicity(dimfn, mu: Partition, d: int) -> int:
    """Multiplicity of s_mu from weight-space dimensions (alternating sum over S_d).

    ``dimfn`` takes a dominant weight (weakly decreasing tuple of length d).
    """
    if len(mu) > d:
        return 0
    m = list(mu) + [0] * (d - len(mu))
    rho = list(range(d - 1, -1, -1))
    total = 0
    for perm in itertools.permutations(range(d)):
        nu = [m[i] + rho[i] - rho[perm[i]] for i in range(d)]
        if min(nu) < 0:
            continue
        val = dimfn(tuple(sorted(nu, reverse=True)))
        if val:
            total += _perm_sign(perm) * val
    return total
