import random

from cobeq import (
    Compose, Decomposition, Dual, Gen, Hom, HomMap, Id, Inj1, Inj2, Mode,
    Oplus, Proj1, Proj2, Tensor, TensorMap, Unit, Valuation, Zero, decompose,
    improper_subformula, infer_type, interpret_arrow, is_proper, oplus_free,
    valuation,
)
from cobeq.generate import random_object
from cobeq.syntax import Obj, expand_derived, subobjects

P, Q, R = Gen("p"), Gen("q"), Gen("r")


def component_count(a: Obj) -> int:
    # independent arithmetic: leaves 1, tensor/hom multiply, oplus adds
    match a:
        case Tensor(l, r) | Hom(l, r):
            return component_count(l) * component_count(r)
        case Oplus(l, r):
            return component_count(l) + component_count(r)
        case Dual(x):
            return component_count(x)
        case _:
            return 1


def test_trivial_decomposition():
    for a in (P, Unit(), Zero(), Tensor(P, Hom(Q, R))):
        d = decompose(a)
        assert d == Decomposition((a,), (Id(a),), (Id(a),))


def test_oplus_under_tensor_example():
    d = decompose(Tensor(Oplus(P, Q), R))
    assert d.components == (Tensor(P, R), Tensor(Q, R))
    assert d.injections == (
        TensorMap(Compose(Inj1(P, Q), Id(P)), Id(R)),
        TensorMap(Compose(Inj2(P, Q), Id(Q)), Id(R)),
    )
    assert d.projections == (
        TensorMap(Compose(Id(P), Proj1(P, Q)), Id(R)),
        TensorMap(Compose(Id(Q), Proj2(P, Q)), Id(R)),
    )


def test_hom_swaps_roles():
    a = Oplus(P, Q)
    d = decompose(Hom(a, R))
    da = decompose(a)
    assert d.components == (Hom(P, R), Hom(Q, R))
    assert d.injections == tuple(HomMap(pr, Id(R)) for pr in da.projections)
    assert d.projections == tuple(HomMap(i, Id(R)) for i in da.injections)


def test_emitted_terms_typecheck():
    rng = random.Random(3)
    for mode in (Mode.SMCB, Mode.CCB):
        for _ in range(50):
            a = random_object(rng, mode, depth=3)
            d = decompose(a)
            assert len(d.components) == len(d.injections) == len(d.projections)
            assert len(d.components) == component_count(a)
            for c, inj, proj in zip(d.components, d.injections, d.projections):
                assert oplus_free(c)
                assert infer_type(inj) == (c, a)
                assert infer_type(proj) == (a, c)


def test_dual_decomposition_components():
    a = Oplus(P, Tensor(Q, Oplus(P, Q)))
    d = decompose(Dual(a))
    inner = decompose(a)
    assert d.components == tuple(Dual(c) for c in inner.components)
    for c, inj, proj in zip(d.components, d.injections, d.projections):
        assert infer_type(inj) == (c, Dual(a))
        assert infer_type(proj) == (Dual(a), c)


def test_dual_decomposition_is_semantically_biproduct():
    rng = random.Random(17)
    for _ in range(20):
        a = Dual(random_object(rng, Mode.CCB, depth=2))
        d = decompose(a)
        for i, inj in enumerate(d.injections):
            for j, proj in enumerate(d.projections):
                got = interpret_arrow(expand_derived(Compose(proj, inj), Mode.CCB))
                if i == j:
                    assert got == interpret_arrow(Id(d.components[i]))
                else:
                    from cobeq import ZeroMap
                    assert got == interpret_arrow(
                        ZeroMap(d.components[i], d.components[j]))


def test_valuation_clauses():
    assert valuation(Oplus(Unit(), Zero())) is Valuation.I_VALUED
    assert valuation(Oplus(Zero(), Zero())) is Valuation.ZERO_VALUED
    assert valuation(Oplus(Unit(), Unit())) is Valuation.NEITHER
    assert valuation(Tensor(P, Zero())) is Valuation.ZERO_VALUED
    assert valuation(Hom(P, Zero())) is Valuation.ZERO_VALUED
    assert valuation(Tensor(Unit(), Unit())) is Valuation.I_VALUED
    assert valuation(P) is Valuation.NEITHER
    assert valuation(Dual(Tensor(P, Zero()))) is Valuation.ZERO_VALUED
    assert valuation(Dual(Unit())) is Valuation.I_VALUED


def test_properness():
    assert not is_proper(Hom(P, Unit()))
    assert is_proper(Hom(P, Q))
    assert is_proper(Hom(Oplus(Unit(), Zero()), Unit()))
    assert is_proper(Hom(Zero(), Unit()))
    bad = improper_subformula(Tensor(Q, Hom(P, Unit())))
    assert bad == Hom(P, Unit())


import pytest


@pytest.mark.xfail(
    reason="properness is not hereditary under decomposition: "
           "(p (x) (p (+) I)) -o (r -o (I (+) p)) is proper but splitting "
           "I (+) p yields the improper component subformula r -o I",
    strict=True)
def test_proper_objects_have_proper_components():
    rng = random.Random(23)
    found = 0
    for _ in range(200):
        a = random_object(rng, Mode.SMCB, depth=3)
        if not is_proper(a):
            continue
        found += 1
        for c in decompose(a).components:
            assert is_proper(c)
    assert found > 50


def test_properness_hereditary_counterexample_is_pinned():
    # both facts below follow from the definitions of valuation, properness
    # and the decomposition clauses; see the xfail above
    a = Hom(Tensor(P, Oplus(P, Unit())), Hom(R, Oplus(Unit(), P)))
    assert is_proper(a)
    comps = decompose(a).components
    assert Hom(Tensor(P, P), Hom(R, Unit())) in comps
    assert not is_proper(comps[0])


def test_proper_oplus_and_tensor_components_stay_proper():
    # restricted to objects without hom the invariant does hold
    rng = random.Random(31)
    checked = 0
    for _ in range(300):
        a = random_object(rng, Mode.CCB, depth=3)
        if not is_proper(a):
            continue
        checked += 1
        for c in decompose(a).components:
            assert is_proper(c)
    assert checked > 100


def test_oplus_free_i_valued_uses_only_unit_connectives():
    rng = random.Random(29)
    seen = 0
    for _ in range(500):
        a = random_object(rng, Mode.SMCB, depth=3)
        if oplus_free(a) and valuation(a) is Valuation.I_VALUED:
            seen += 1
            for s in subobjects(a):
                assert isinstance(s, (Unit, Tensor, Hom))
    assert seen > 0
