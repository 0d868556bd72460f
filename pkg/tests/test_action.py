import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfaut import action as A
from hopfaut import freegroup as fg
from hopfaut import hopf
from hopfaut.hopf import TensorElement
from oracles import sweedler_phi

T4 = hopf.tensor_algebra(2, 4)
CTX = A.ActionContext(T4, 2)
Q = A.QuotientModule(CTX)


def basis_tensors(desc, n, max_degree):
    return [TensorElement(desc, n, {k: 1}) for d in range(max_degree + 1) for k in hopf.tensor_basis(desc, n, d)]


def tensors(desc, n, max_degree=3):
    keys = [k for d in range(max_degree + 1) for k in hopf.tensor_basis(desc, n, d)]
    return st.dictionaries(st.sampled_from(keys), st.integers(-3, 3), max_size=4).map(
        lambda d: TensorElement(desc, n, d)
    )


def gens(n):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return st.sampled_from(
        [fg.Swap(i, j) for i, j in pairs] + [fg.Invert(i) for i in range(1, n + 1)] + [fg.LeftMul(i, j) for i, j in pairs]
    )


def test_identity_words():
    t = hopf.parse_tensor(T4, "x1*x2 | x2")
    assert A.hom_extend(t, [(1,), (2,)]) == t


def test_eta_on_primitives():
    t = hopf.tensor(hopf.x(T4, 1), hopf.x(T4, 2))
    assert hopf.format_tensor(A.act(CTX, fg.eta(), t)) == "-(x1 | x2) - (x2*x1 | 1)"


def test_inverse_letter_gives_antipode():
    a = hopf.parse_element(T4, "x1*x2")
    got = A.hom_extend(hopf.as_tensor(a), [(-1,)])
    assert hopf.factor(got) == hopf.antipode(a)


def test_repeated_letter_gives_product_of_coproduct():
    a = hopf.parse_element(T4, "x1*x2")
    got = A.hom_extend(hopf.as_tensor(a), [(1, 1)])
    assert hopf.factor(got) == hopf.multiply_slots(hopf.coproduct(a))


def test_unused_generator_applies_counit():
    t = hopf.tensor(hopf.x(T4, 1), hopf.one(T4))
    assert A.hom_extend(t, [(2,)]) == TensorElement(T4, 1)


def test_rank_check():
    with pytest.raises(ValueError):
        A.hom_extend(hopf.tensor(hopf.x(T4, 1)), [(2,)])
    with pytest.raises(ValueError):
        A.act(CTX, fg.eta(), hopf.tensor(hopf.x(T4, 1)))


def test_worked_phi2_example_against_oracle():
    desc = hopf.tensor_algebra(2, 4)
    h = [(0,), (1,), (0, 1)]
    t = TensorElement(desc, 3, {tuple(h): 1})
    words = [(2, 2, 3), (2, -3, 1)]
    assert A.hom_extend(t, words).terms == sweedler_phi(h, words)


@pytest.mark.parametrize("words", [[(1, -2, 1)], [(2, 1), (-1,)], [(1, 2, -1, -2)], [(-2, -2, 1), (2,)]])
def test_hom_extend_against_oracle(words):
    desc = hopf.tensor_algebra(2, 6)
    h = [(0, 1, 1), (1, 0)]
    t = TensorElement(desc, 2, {tuple(h): 1})
    assert A.hom_extend(t, words).terms == sweedler_phi(h, words)


@given(st.lists(gens(2), max_size=4), st.lists(gens(2), max_size=4), tensors(T4, 2))
def test_action_is_a_homomorphism(s1, s2, t):
    assert A.act(CTX, s1 + s2, t) == A.act(CTX, s1, A.act(CTX, s2, t))


@given(st.lists(gens(2), max_size=4), tensors(T4, 2))
def test_action_inverse(seq, t):
    assert A.act(CTX, fg.inverse_sequence(seq), A.act(CTX, seq, t)) == t


@given(tensors(T4, 2), tensors(T4, 2))
def test_action_is_linear(s, t):
    assert A.act(CTX, fg.eta(), s + t) == A.act(CTX, fg.eta(), s) + A.act(CTX, fg.eta(), t)


def test_conjugation_by_primitive_matches_general_formula():
    for t in basis_tensors(T4, 2, 3):
        for l in range(2):
            v = hopf.x(T4, l + 1)
            assert A.conjugate(v, t) == A.conjugate_primitive(l, t)


@given(st.lists(gens(2), min_size=1, max_size=3), tensors(T4, 2))
def test_action_descends_to_quotient(seq, t):
    # conjugation span is preserved: tilde elements map into tilde
    for v in A.tilde_basis(CTX, 3):
        assert A.in_tilde(Q, A.act(CTX, seq, v))


@given(tensors(T4, 2))
def test_quotient_reduce_is_projection(t):
    r = A.quotient_reduce(Q, t.homogeneous_part(3))
    assert A.quotient_reduce(Q, r) == r


def test_quotient_dims_rank_one():
    desc = hopf.tensor_algebra(2, 6)
    q = A.QuotientModule(A.ActionContext(desc, 1))
    # T(V)/[T,T]: cyclic words counted by necklaces
    assert [q.quotient_dim(k) for k in range(1, 7)] == [2, 3, 4, 6, 8, 14]


@pytest.mark.parametrize("g", [(1,), (2,), (-1,), (-2,), (1, 2), (2, -1, 2)])
def test_inner_automorphisms_trivial(g):
    for t in basis_tensors(T4, 2, 4):
        assert A.in_tilde(Q, A.act_inner(CTX, g, t) - t)


def test_non_inner_is_nontrivial():
    t = hopf.tensor(hopf.x(T4, 1), hopf.one(T4))
    assert not A.in_tilde(Q, A.act(CTX, [fg.Invert(1)], t) - t)


def test_assoc_graded_requires_nil2():
    with pytest.raises(ValueError):
        A.assoc_graded_matrix(CTX, fg.eta(), 1)


def test_filtration_preserved_nil2():
    desc = hopf.enveloping_nil2(2, 6)
    ctx = A.ActionContext(desc, 2)
    for t in basis_tensors(desc, 2, 3):
        assert A.filtration_degree(A.act(ctx, fg.eta(), t)) <= A.filtration_degree(t)


def test_ef_defect_nonzero_and_proportional():
    for conv in A.LIFTS:
        res = A.ef_defect(convention=conv)
        c = A.defect_coefficient(res)
        assert c is not None and c != 0


def test_ef_defect_coefficients():
    assert A.defect_coefficient(A.ef_defect(convention="upper")) == Fraction(-3, 5)
    assert A.defect_coefficient(A.ef_defect(convention="transpose")) == Fraction(1, 2)
