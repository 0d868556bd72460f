"""Named property suites, each returning a list of :class:`Check` records."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import action as A
from . import cokertab, hopf, nilrep, pbw, symfunc
from . import freegroup as fg
from .hopf import AlgebraElement, TensorElement


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""
    counterexample: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"property": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        if self.counterexample:
            out["counterexample"] = self.counterexample
        return out


def _first_failure(name: str, items, predicate, describe) -> Check:
    count = 0
    for it in items:
        count += 1
        if not predicate(it):
            return Check(name, False, f"failed after {count} cases", {"case": describe(it)})
    return Check(name, True, f"{count} cases")


# ---------------------------------------------------------------------------
# Hopf axioms


def _basis_upto(desc, max_degree):
    for deg in range(max_degree + 1):
        for w in hopf.basis_words(desc, deg):
            yield w


def hopf_axioms(dim: int = 2, max_degree: int = 5, seed: int = 0, kinds=("tensor", "nil2")) -> list:
    checks = []
    rng = random.Random(seed)
    for kind in kinds:
        desc = hopf.HopfDescriptor(kind, dim, max_degree)
        words = list(_basis_upto(desc, max_degree))
        el = lambda w: AlgebraElement(desc, {w: 1}, check=False)
        fmt = lambda w: hopf.format_word(desc, w)

        def coassoc(w):
            dl = hopf.coproduct(el(w))
            return hopf.coproduct_slot(dl, 0) == hopf.coproduct_slot(dl, 1) == hopf.coproduct_iter(el(w), 2)

        def counit(w):
            dl = hopf.coproduct(el(w))
            return hopf.factor(hopf.counit_slot(dl, 0)) == el(w) == hopf.factor(hopf.counit_slot(dl, 1))

        def antipode(w):
            dl = hopf.coproduct(el(w))
            s = lambda u: hopf.antipode(AlgebraElement(desc, {u: 1}, check=False))
            left = hopf.multiply_slots(hopf.apply_slot(dl, 0, s))
            right = hopf.multiply_slots(hopf.apply_slot(dl, 1, s))
            target = hopf.scalar(desc, hopf.counit(el(w)))
            return left == target == right

        def cocomm(w):
            dl = hopf.coproduct(el(w))
            return hopf.swap(dl) == dl

        def s2(w):
            return hopf.antipode(hopf.antipode(el(w))) == el(w)

        pairs = [
            (a, b) for a in words for b in words
            if desc.word_degree(a) + desc.word_degree(b) <= max_degree
        ]

        def bialg(ab):
            a, b = ab
            return hopf.coproduct(el(a) * el(b)) == hopf.coproduct(el(a)) * hopf.coproduct(el(b))

        def assoc(abc):
            a, b, c = abc
            return (a * b) * c == a * (b * c)

        for name, pred in (("coassociativity", coassoc), ("counit", counit), ("antipode", antipode),
                           ("cocommutativity", cocomm), ("antipode-squared", s2)):
            checks.append(_first_failure(f"{kind}:{name}", words, pred, fmt))
        checks.append(_first_failure(f"{kind}:bialgebra", pairs, bialg, lambda ab: [fmt(ab[0]), fmt(ab[1])]))

        def rand_elem(deg):
            ws = [w for d in range(deg + 1) for w in hopf.basis_words(desc, d)]
            return AlgebraElement(desc, {rng.choice(ws): rng.randint(-3, 3) for _ in range(3)})

        triples = [(rand_elem(1), rand_elem(2), rand_elem(2)) for _ in range(20)]
        checks.append(_first_failure(f"{kind}:associativity", triples, assoc, lambda t: [hopf.format_element(x) for x in t]))
    return checks


# ---------------------------------------------------------------------------
# Aut(F_2) relations and inner automorphisms


def _tensor_basis_upto(desc, n, max_degree):
    for deg in range(max_degree + 1):
        for key in hopf.tensor_basis(desc, n, deg):
            yield TensorElement(desc, n, {key: 1}, check=False)


def relations_outf2(max_degree: int = 4) -> list:
    desc = hopf.tensor_algebra(2, max_degree)
    ctx = A.ActionContext(desc, 2)
    basis = list(_tensor_basis_upto(desc, 2, max_degree))
    se = fg.sigma12() + fg.eta()
    rels = {
        "(sigma12 eta)^3 = id": se * 3,
        "eta^2 = id": fg.eta() * 2,
        "sigma12^2 = id": fg.sigma12() * 2,
        "invert1^2 = id": [fg.Invert(1)] * 2,
        "invert2^2 = id": [fg.Invert(2)] * 2,
    }
    checks = []
    for name, seq in rels.items():
        checks.append(Check(f"word {name}", fg.nielsen_to_map(seq, 2) == fg.identity(2)))

        def pred(t, seq=seq):
            return A.act(ctx, seq, t) == t

        checks.append(_first_failure(name, basis, pred, hopf.format_tensor))

    def sequential(t):
        cur = t
        for _ in range(3):
            cur = A.act(ctx, fg.eta(), A.act(ctx, fg.sigma12(), cur))
        return cur == t

    checks.append(_first_failure("(sigma12 eta)^3 = id, one generator at a time", basis, sequential, hopf.format_tensor))
    return checks


def inner_trivial(max_degree: int = 4, n: int = 2, max_word_length: int = 1) -> list:
    desc = hopf.tensor_algebra(2, max_degree)
    ctx = A.ActionContext(desc, n)
    q = A.QuotientModule(ctx)
    gens = [g for g in range(-n, n + 1) if g]
    words = set()
    for L in range(1, max_word_length + 1):
        for w in itertools.product(gens, repeat=L):
            r = fg.reduce_word(w)
            if r:
                words.add(r)
    basis = list(_tensor_basis_upto(desc, n, max_degree))
    cases = [(g, t) for g in sorted(words) for t in basis]
    return [_first_failure(
        "inner automorphisms act trivially on the quotient",
        cases,
        lambda gt: A.in_tilde(q, A.act_inner(ctx, gt[0], gt[1]) - gt[1]),
        lambda gt: {"g": fg.format_word(gt[0]), "t": hopf.format_tensor(gt[1])},
    )]


# ---------------------------------------------------------------------------
# class-2 statements


def class2_binomial_lhs(ctx, X: AlgebraElement, Y: AlgebraElement, i: int, j: int) -> TensorElement:
    """S(Y_(1)) X^i (x) Y_(2): substitute x1 -> x2^-1 x1."""
    t = hopf.tensor(_power(X, i), _power(Y, j))
    return A.hom_extend(t, [(-2, 1), (2,)])


def _power(a: AlgebraElement, k: int) -> AlgebraElement:
    out = hopf.one(a.descriptor)
    for _ in range(k):
        out = out * a
    return out


def _linear_sympoly(a: AlgebraElement) -> pbw.SymPoly:
    if any(len(w) != 1 for w in a.terms):
        raise ValueError("expected a combination of primitive letters")
    return pbw.SymPoly(a.descriptor, {w: c for w, c in a.terms.items()})


def class2_binomial_rhs(X: AlgebraElement, Y: AlgebraElement, i: int, j: int) -> TensorElement:
    desc = X.descriptor
    sx, sy = _linear_sympoly(X), _linear_sympoly(Y)
    total = None
    for k in range(j + 1):
        mono = pbw.SymPoly(desc, {(): 1})
        for _ in range(k):
            mono = mono * sy
        for _ in range(i):
            mono = mono * sx
        term = hopf.tensor(pbw.symmetrize(mono), _power(Y, j - k)) * ((-1) ** k * comb(j, k))
        total = term if total is None else total + term
    return total


def class2(max_total: int = 5) -> list:
    desc = hopf.enveloping_nil2(2, 2 * max_total)
    ctx = A.ActionContext(desc, 2)
    q = A.QuotientModule(ctx)
    x1, x2 = hopf.x(desc, 1), hopf.x(desc, 2)
    z = hopf.z(desc, 1, 2)
    pairs = [("x1", "x2", x1, x2), ("x2", "x1", x2, x1), ("x1+x2", "x1-x2", x1 + x2, x1 - x2), ("x1", "z12", x1, z), ("z12", "x2", z, x2)]
    checks = []
    for nx, ny, X, Y in pairs:
        cap = max_total if X.degrees() == {1} and Y.degrees() == {1} else max_total - 2
        cases = [(i, j) for i in range(cap + 1) for j in range(cap + 1 - i)]
        checks.append(_first_failure(
            f"binomial formula X={nx}, Y={ny}, i+j<={cap}",
            cases,
            lambda ij, X=X, Y=Y: A.in_tilde(q, class2_binomial_lhs(ctx, X, Y, *ij) - class2_binomial_rhs(X, Y, *ij)),
            lambda ij: {"i": ij[0], "j": ij[1]},
        ))
    return checks


def assoc_graded(max_i: int = 4) -> list:
    desc = hopf.enveloping_nil2(2, 2 * max_i)
    ctx = A.ActionContext(desc, 2)
    checks = []
    for name, aut in (("sigma12", fg.sigma12()), ("invert1", [fg.Invert(1)]), ("eta", fg.eta())):
        for i in range(1, max_i + 1):
            gr, sub = A.assoc_graded_matrix(ctx, aut, i)
            checks.append(Check(f"gr({name}) on Sym^{i}", gr == sub, f"size {gr.rows}"))
    return checks


# ---------------------------------------------------------------------------
# E/F


def ef_defect_suite() -> list:
    checks = []
    desc = hopf.tensor_algebra(2, 6)
    q = A.QuotientModule(A.ActionContext(desc, 1))
    for conv in A.LIFTS:
        res = A.ef_defect(desc, conv)
        c = A.defect_coefficient(res)
        nonzero = bool(A.quotient_reduce(q, hopf.as_tensor(res.u)))
        checks.append(Check(f"{conv}: defect nonzero modulo commutators", nonzero))
        checks.append(Check(
            f"{conv}: defect equals 24 [[x,y],y][[x,y],x] modulo commutators",
            c == 24,
            f"computed coefficient {c}",
        ))
    return checks


# ---------------------------------------------------------------------------
# PBW


def pbw_suite(max_i: int = 4) -> list:
    desc = hopf.enveloping_nil2(2, 2 * max_i)
    letters = hopf.primitive_letters(desc)
    checks = []
    monos = [m for i in range(max_i + 1) for m in itertools.combinations_with_replacement(letters, i)]
    checks.append(_first_failure(
        "pi_i o sigma_i = id", monos,
        lambda m: pbw.pbw_inverse(pbw.symmetrize(pbw.sym_monomial(desc, m)), len(m)) == pbw.sym_monomial(desc, m),
        lambda m: hopf.format_word(desc, m),
    ))
    small = [m for m in monos if desc.word_degree(m) <= 4]
    checks.append(_first_failure(
        "sigma is a coalgebra map", small,
        lambda m: hopf.coproduct(pbw.symmetrize(pbw.sym_monomial(desc, m))) == pbw.sigma_tensor(pbw.sym_monomial(desc, m)),
        lambda m: hopf.format_word(desc, m),
    ))
    words = [w for i in range(2 * max_i + 1) for w in hopf.basis_words(desc, i) if len(w) <= max_i]

    def sp(w):
        a = AlgebraElement(desc, {w: 1}, check=False)
        back = pbw.symmetrize(pbw.pbw_inverse(a, len(w)))
        return pbw.filtration_length(a - back) < len(w) or not (a - back)

    checks.append(_first_failure("sigma_i o pi_i = id mod U_(i-1)", words, sp, lambda w: hopf.format_word(desc, w)))
    nk = [(n, k) for n in range(7) for k in range(7 - n)]
    checks.append(_first_failure(
        "leading straightening coefficient is 1", nk,
        lambda p: pbw.straighten_constants(*p).c[0] == 1 == pbw.straighten_constants(*p).d[0],
        lambda p: list(p),
    ))
    checks.append(Check("c_(1,1,1) = 1/2", pbw.straighten_constant(1, 1, 1, "c") == Fraction(1, 2)))
    checks.append(Check("d_(1,1,1) = -1/2", pbw.straighten_constant(1, 1, 1, "d") == Fraction(-1, 2)))
    return checks


# ---------------------------------------------------------------------------
# representation theory


def _sp(*parts_list):
    return symfunc.SchurPoly.from_list(parts_list)


def symfunc_goldens() -> list:
    s21_l2 = symfunc.SchurPoly({
        (1, 1, 1, 1, 1): 1, (2, 1, 1, 1): 2, (3, 2): 1, (2, 2, 1): 2, (3, 1): 1, (2, 1, 1): 2,
        (3, 1, 1): 1, (1, 1, 1, 1): 1, (2, 2): 1, (2, 1): 1, (3, 2, 1): 1, (2, 2, 1, 1): 1, (2, 1, 1, 1, 1): 1,
    })
    return [
        Check("Sym^2(L^2 V)", symfunc.sym_of_wedge2(2) == _sp((2, 2), (1, 1, 1, 1))),
        Check("S_11(L^2 V)", symfunc.schur_of_wedge2((1, 1)) == _sp((2, 1, 1))),
        Check("S_21(L^2 V)", symfunc.schur_of_wedge2((2, 1)) == _sp((3, 2, 1), (2, 2, 1, 1), (2, 1, 1, 1, 1))),
        Check("S_21(V + L^2 V)", symfunc.schur_of_L2((2, 1)).total() == s21_l2),
    ]


def adjoint_kernel(d: int = 5) -> list:
    checks = []
    for lam in ((1, 1), (2, 1), (2, 2)):
        k = nilrep.adjoint_kernel_character(*lam, d)
        checks.append(Check(f"ad injective on V (x) S_{lam}(V)", not k, symfunc.format_schur(k)))
    for n in range(1, 5):
        k = nilrep.adjoint_kernel_character(n, 0, d)
        checks.append(Check(f"ker ad on V (x) Sym^{n}(V) = S_({n + 1})", k == _sp((n + 1,)), symfunc.format_schur(k)))
    return checks


def first_excess_expectations() -> list:
    """(label, p, q, degree, stated decomposition)."""

    def F(*ps):
        return symfunc.SchurPoly.from_list(p for p in ps if min(p) > 0 and list(p) == sorted(p, reverse=True))

    out = []
    for p in (2, 3, 4):
        out.append(("a", p, 0, p + 1, F((p - 1, 1, 1))))
    for p in (3, 4):
        out.append(("b", p, 1, p + 2, F((p, 1, 1), (p - 1, 2, 1), (p - 1, 1, 1, 1))))
    for p, q in ((4, 2), (5, 2), (5, 3)):
        out.append(("c", p, q, p + q + 1, F((p + 1, q - 1, 1), (p, q, 1), (p - 1, q + 1, 1), (p, q - 1, 1, 1), (p - 1, q, 1, 1))))
    for p in (2, 3):
        out.append(("d", p, p, 2 * p + 1, F((p + 1, p - 1, 1))))
    for p in (2, 3):
        out.append(("e", p, p - 1, 2 * p, F((p + 1, p - 1), (p + 1, p - 2, 1), (p, p - 1, 1))))
    return out


def first_excess() -> list:
    checks = []
    for label, p, q, deg, expected in first_excess_expectations():
        d = nilrep.required_dim(p, q, deg)
        got = nilrep.quotient_character(p, q, deg, d)
        checks.append(Check(
            f"({label}) (p,q)=({p},{q}) degree {deg}", got == expected,
            f"computed {symfunc.format_schur(got)}; stated {symfunc.format_schur(expected)}",
        ))
    stated = symfunc.SchurPoly.from_list([(2, 2, 2), (2, 1, 1, 1, 1)])
    got = nilrep.quotient_character(4, 0, 6, nilrep.required_dim(4, 0, 6))
    checks.append(Check("second excess degree, (p)=(4)", got == stated,
                        f"computed {symfunc.format_schur(got)}; stated {symfunc.format_schur(stated)}"))
    return checks


def cross_pipeline(max_pq: int = 4, max_degree: int = 6) -> list:
    checks = []
    for p in range(max_pq + 1):
        for q in range(min(p, max_pq - p) + 1):
            if p + q == 0:
                continue
            ref = symfunc.schur_of_L2((p, q) if q else (p,))
            for deg in range(p + q, max_degree + 1):
                d = nilrep.required_dim(p, q, deg)
                got = nilrep.schur2_character(p, q, deg, d)
                exp = ref.get(deg, symfunc.SchurPoly()).restrict_rows(d)
                checks.append(Check(f"S_({p},{q})(L2) degree {deg}", got == exp,
                                    f"explicit {symfunc.format_schur(got)}; LR {symfunc.format_schur(exp)}"))
    return checks


def h1_suite(max_module_degree: int = 17) -> list:
    tab = cokertab.h1_table(max_module_degree, max_excess=1)
    checks = []
    fam = [e for e in tab if e.source[1:] == (0,) and e.form_kind == "cusp" and e.module_degree > sum(e.lam) - 1 and e.module_degree > sum(e.source)]
    low = min(fam, key=lambda e: e.cokernel_degree) if fam else None
    checks.append(Check(
        "lowest cusp entry of the (2k,0) family above the bottom degree",
        low is not None and (low.lam, low.form_kind, low.weight, low.multiplicity, low.cokernel_degree) == ((9, 1, 1), "cusp", 12, 1, 15),
        str(low.to_json() if low else None),
    ))
    trip = {e.lam for e in tab if e.cokernel_degree == 9 and e.form_kind == "modular" and e.weight == 4 and e.multiplicity == 1}
    checks.append(Check("weight-4 triple at cokernel degree 9", trip == {(3, 1, 1), (2, 2, 1), (2, 1, 1, 1)}, str(sorted(trip))))
    checks.extend(closed_form_agreement(tab, max_module_degree, 16))
    return checks


def closed_form_agreement(tab, max_module_degree: int, max_weight: int) -> list:
    checks = []
    for p, q, kind, w in cokertab.table_cells(max_module_degree):
        if w > max_weight or p + q + 1 > max_module_degree:
            continue
        k, l = p // 2, q // 2
        odd = p % 2 == 1
        mdim, sdim = cokertab.modular_dims(w)
        fdim = mdim if odd else sdim
        deg = p + q + 1 if q != 1 else p + q + 1
        expected = cokertab.excess_one_forms(k, l, odd) * fdim
        got = symfunc.SchurPoly({e.lam: e.multiplicity for e in tab if e.source == (p, q) and e.module_degree == deg})
        checks.append(Check(f"cell ({p},{q}) weight {w} degree {deg}", got == expected,
                            f"table {symfunc.format_schur(got)}; closed form {symfunc.format_schur(expected)}"))
    return checks


def dims_suite() -> list:
    checks = [
        Check("witt(2,3) = 2", cokertab.witt_dim(2, 3) == 2),
        Check("witt(4,3) = 20", cokertab.witt_dim(4, 3) == 20),
        Check("D_1 at d=4 has dim 4", cokertab.d_space_dim(4, 1) == 4 == cokertab.d_space_dim(4, 1, explicit=True)),
        Check("modular_dims(12) = (2,1)", cokertab.modular_dims(12) == (2, 1)),
        Check("cyclic(2,3) = 4", cokertab.cyclic_word_dims(2, 3).formula == 4 == cokertab.cyclic_word_dims(2, 3).explicit),
    ]
    bad = []
    for d in (1, 2, 3):
        for k in range(1, 7):
            c = cokertab.cyclic_word_dims(d, k)
            if c.formula != c.explicit:
                bad.append((d, k, c.formula, c.explicit))
    checks.append(Check("necklace formula = explicit quotient, d<=3, k<=6", not bad, str(bad)))
    return checks


SUITES = {
    "hopf-axioms": hopf_axioms,
    "relations-outf2": relations_outf2,
    "inner-trivial": inner_trivial,
    "assoc-graded": assoc_graded,
    "class2": class2,
    "ef-defect": ef_defect_suite,
    "pbw": pbw_suite,
    "symfunc-goldens": symfunc_goldens,
    "adjoint-kernel": adjoint_kernel,
    "first-excess": first_excess,
    "h1-table": h1_suite,
    "dims": dims_suite,
    "cross-pipeline": cross_pipeline,
}
