"""Acceptance criteria 1-14, one line each in the pytest terminal summary.

Run directly (``python3 tests/test_acceptance.py``) for the same report
without pytest.  Criteria whose stated values disagree with the exact
computation are left failing; the computed values appear in the detail.
"""

from __future__ import annotations

import itertools
import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hopfaut import action as A
from hopfaut import cokertab, hopf, nilrep, pbw, symfunc, verify
from hopfaut import freegroup as fg
from hopfaut.hopf import AlgebraElement, TensorElement
from hopfaut.symfunc import SchurPoly
from oracles import straightening_closed_form, sweedler_phi, word_antipode, word_coproduct

RESULTS: dict = {}


def _suite_ok(checks) -> tuple:
    bad = [c for c in checks if not c.ok]
    if bad:
        return False, "; ".join(f"{c.name}: {c.detail}" for c in bad)
    return True, f"{len(checks)} properties"


# ---------------------------------------------------------------------------


def criterion_1():
    t0 = time.time()
    ok, detail = _suite_ok(verify.hopf_axioms(dim=2, max_degree=5))
    # independent oracle for T(V): shuffle coproduct and reversal antipode
    desc = hopf.tensor_algebra(2, 5)
    for d in range(6):
        for w in hopf.basis_words(desc, d):
            a = AlgebraElement(desc, {w: 1})
            if hopf.coproduct(a).terms != word_coproduct(w, 2) or hopf.antipode(a).terms != word_antipode(w):
                return False, f"oracle mismatch at {w}"
    dt = time.time() - t0
    return ok and dt < 60, f"{detail}; {dt:.1f}s"


def criterion_2():
    desc = hopf.tensor_algebra(2, 4)
    h = [(0,), (1,), (0, 1)]  # v1, v2, v1 v2
    words = [(2, 2, 3), (2, -3, 1)]
    got = A.hom_extend(TensorElement(desc, 3, {tuple(h): 1}), words)
    exp = sweedler_phi(h, words)
    return got.terms == exp, f"{len(exp)} terms"


def criterion_3():
    t0 = time.time()
    ok, detail = _suite_ok(verify.relations_outf2(max_degree=4))
    dt = time.time() - t0
    return ok and dt < 120, f"{detail}; {dt:.1f}s"


def criterion_4():
    desc = hopf.tensor_algebra(2, 4)
    ctx = A.ActionContext(desc, 2)
    q = A.QuotientModule(ctx)
    count = 0
    for g in ((1,), (2,), (-1,), (-2,)):
        for d in range(5):
            for key in hopf.tensor_basis(desc, 2, d):
                t = TensorElement(desc, 2, {key: 1})
                if A.quotient_reduce(q, (A.act_inner(ctx, g, t) - t).homogeneous_part(d)):
                    return False, f"g={g}, t={hopf.format_tensor(t)}"
                count += 1
    return True, f"{count} cases"


def _abelianization(seq, n):
    """Integer matrix M[a][b] = exponent of x_a in phi(x_b), from elementary matrices."""

    def eye():
        return [[int(a == b) for b in range(n)] for a in range(n)]

    def mul(P, Q):
        return [[sum(P[a][k] * Q[k][b] for k in range(n)) for b in range(n)] for a in range(n)]

    M = eye()
    for g in seq:
        E = eye()
        if isinstance(g, fg.Swap):
            i, j = g.i - 1, g.j - 1
            E[i][i] = E[j][j] = 0
            E[i][j] = E[j][i] = 1
        elif isinstance(g, fg.Invert):
            E[g.i - 1][g.i - 1] = -1
        else:  # x_i -> x_j^-1 x_i
            E[g.j - 1][g.i - 1] = -1
        M = mul(M, E)
    return M


def _inverse_2x2(M):
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    assert det in (1, -1)
    return [[M[1][1] * det, -M[0][1] * det], [-M[1][0] * det, M[0][0] * det]]


def criterion_5():
    desc = hopf.enveloping_nil2(2, 8)
    ctx = A.ActionContext(desc, 2)
    letters = hopf.primitive_letters(desc)
    count = 0
    for name, seq in (("sigma12", fg.sigma12()), ("invert1", [fg.Invert(1)]), ("eta", fg.eta())):
        C = _inverse_2x2(_abelianization(seq, 2))
        for i in range(1, 5):
            gr, sub = A.assoc_graded_matrix(ctx, seq, i)
            if gr != sub:
                return False, f"{name} on Sym^{i}: gr differs from substitution"
            # direct oracle: polynomial substitution y_(s,l) -> sum_b C[s][b] y_(b,l)
            for combo in itertools.combinations_with_replacement([(s, l) for s in range(2) for l in letters], i):
                key = tuple(tuple(sorted(l for s, l in combo if s == slot)) for slot in range(2))
                img = A.act(ctx, seq, TensorElement(desc, 2, {key: 1}))
                top = {k: c for k, c in img.terms.items() if sum(len(w) for w in k) == i}
                poly = {(): Fraction(1)}
                for s, l in combo:
                    nxt = {}
                    for mono, mc in poly.items():
                        for b in range(2):
                            if C[s][b]:
                                m2 = tuple(sorted(mono + ((b, l),)))
                                nxt[m2] = nxt.get(m2, 0) + mc * C[s][b]
                    poly = nxt
                exp = {}
                for mono, mc in poly.items():
                    k2 = tuple(tuple(sorted(l for b, l in mono if b == slot)) for slot in range(2))
                    exp[k2] = exp.get(k2, 0) + mc
                exp = {k: v for k, v in exp.items() if v}
                if top != exp:
                    return False, f"{name} on {key}"
                count += 1
    return True, f"{count} basis vectors, 3 generators, i <= 4"


def criterion_6():
    desc = hopf.enveloping_nil2(2, 10)
    ctx = A.ActionContext(desc, 2)
    q = A.QuotientModule(ctx)
    X, Y = hopf.x(desc, 1), hopf.x(desc, 2)
    count = 0
    for i in range(6):
        for j in range(6 - i):
            lhs = verify.class2_binomial_lhs(ctx, X, Y, i, j)
            rhs = verify.class2_binomial_rhs(X, Y, i, j)
            if not A.in_tilde(q, lhs - rhs):
                return False, f"i={i}, j={j}"
            count += 1
    ok, detail = _suite_ok(verify.class2(max_total=5))
    return ok, f"{count} (i,j) pairs; {detail}"


def criterion_7():
    t0 = time.time()
    res = A.ef_defect(convention="upper")
    desc = res.u.descriptor
    q = A.QuotientModule(A.ActionContext(desc, 1))
    amb = len(hopf.tensor_basis(desc, 2, 6))
    diff = A.quotient_reduce(q, hopf.as_tensor(res.u - res.r))
    nonzero = bool(A.quotient_reduce(q, hopf.as_tensor(res.u)))
    coeffs = {conv: A.defect_coefficient(A.ef_defect(convention=conv)) for conv in A.LIFTS}
    dt = time.time() - t0
    ok = not diff and nonzero and dt < 300 and amb == 448
    detail = (f"nonzero={nonzero}; coefficient of [[x,y],y][[x,y],x]: "
              + ", ".join(f"{k} {v}" for k, v in coeffs.items()) + f" (stated 24); ambient {amb}; {dt:.1f}s")
    return ok, detail


def criterion_8():
    desc = hopf.enveloping_nil2(2, 8)
    letters = hopf.primitive_letters(desc)
    for i in range(5):
        for m in itertools.combinations_with_replacement(letters, i):
            p = pbw.sym_monomial(desc, m)
            if pbw.pbw_inverse(pbw.symmetrize(p), i) != p:
                return False, f"pi o sigma fails on {m}"
            if desc.word_degree(m) <= 4 and hopf.coproduct(pbw.symmetrize(p)) != pbw.sigma_tensor(p):
                return False, f"coalgebra map fails on {m}"
    for n in range(7):
        for k in range(7 - n):
            sc = pbw.straighten_constants(n, k)
            if sc.c[0] != 1 or sc.d[0] != 1:
                return False, f"leading coefficient at ({n},{k})"
            for i in range(min(n, k) + 1):
                if sc.c[i] != straightening_closed_form(n, k, i, "c") or sc.d[i] != straightening_closed_form(n, k, i, "d"):
                    return False, f"closed form at ({n},{k},{i})"
    c111 = pbw.straighten_constant(1, 1, 1, "c")
    return c111 == Fraction(1, 2), f"c_111 = {c111}"


def criterion_9():
    S = SchurPoly.from_list
    ok = (
        symfunc.sym_of_wedge2(2) == S([(2, 2), (1, 1, 1, 1)])
        and symfunc.schur_of_wedge2((1, 1)) == S([(2, 1, 1)])
        and symfunc.schur_of_wedge2((2, 1)) == S([(3, 2, 1), (2, 2, 1, 1), (2, 1, 1, 1, 1)])
    )
    total = symfunc.schur_of_L2((2, 1)).total()
    listed = SchurPoly({
        (1, 1, 1, 1, 1): 1, (2, 1, 1, 1): 2, (3, 2): 1, (2, 2, 1): 2, (3, 1): 1, (2, 1, 1): 2, (3, 1, 1): 1,
        (1, 1, 1, 1): 1, (2, 2): 1, (2, 1): 1, (3, 2, 1): 1, (2, 2, 1, 1): 1, (2, 1, 1, 1, 1): 1,
    })
    return ok and total == listed, symfunc.format_schur(total)


def criterion_10():
    ok, detail = _suite_ok(verify.adjoint_kernel(d=5))
    return ok, detail


def criterion_11():
    t0 = time.time()
    checks = verify.first_excess()
    ok, detail = _suite_ok(checks)
    dt = time.time() - t0
    return ok and dt < 900, f"{detail}; {dt:.1f}s"


def criterion_12():
    ok, detail = _suite_ok(verify.h1_suite(17))
    return ok, detail


def criterion_13():
    ok, detail = _suite_ok(verify.dims_suite())
    return ok, detail


def criterion_14():
    ok, detail = _suite_ok(verify.cross_pipeline(max_pq=4, max_degree=6))
    return ok, detail


CRITERIA = {
    1: ("Hopf axioms on T(V) and U(L2), d=2, degree <= 5", criterion_1),
    2: ("worked phi_2 example against brute-force Sweedler oracle", criterion_2),
    3: ("Aut/Out relations on T(V)^(x)2, degree <= 4", criterion_3),
    4: ("inner automorphisms act trivially on the quotient", criterion_4),
    5: ("associated graded equals GL_2(Z) substitution action", criterion_5),
    6: ("class-2 binomial formula, i+j <= 5", criterion_6),
    7: ("E/F defect equals 24 [[x,y],y][[x,y],x] mod commutators", criterion_7),
    8: ("PBW maps and straightening constants", criterion_8),
    9: ("symmetric-function goldens", criterion_9),
    10: ("adjoint kernel at d=5", criterion_10),
    11: ("first-excess quotient characters", criterion_11),
    12: ("H^1 table entries and closed forms", criterion_12),
    13: ("dimension formulas", criterion_13),
    14: ("cross-pipeline Schur functor characters", criterion_14),
}


def evaluate(n: int) -> tuple:
    if n not in RESULTS:
        title, fn = CRITERIA[n]
        try:
            ok, detail = fn()
        except Exception as e:  # report, do not hide
            ok, detail = False, f"{type(e).__name__}: {e}"
        RESULTS[n] = (title, bool(ok), detail)
    return RESULTS[n]


def report_line(n: int) -> str:
    title, ok, detail = RESULTS[n]
    return f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    title, ok, detail = evaluate(n)
    print(report_line(n))
    assert ok, detail


if __name__ == "__main__":
    for n in sorted(CRITERIA):
        evaluate(n)
        print(report_line(n), flush=True)
    sys.exit(0 if all(RESULTS[n][1] for n in RESULTS) else 1)
