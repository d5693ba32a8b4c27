"""Decomposition of objects into direct-sum-free components with their
injection/projection term sequences, plus the unit/zero valuation and the
properness predicate that scopes the positive answers of the decision
procedure.

`decompose` is memoized; all results are immutable, so the cache is safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cache

from .syntax import (
    Arrow, Compose, Dual, Gen, Hom, HomMap, Id, Inj1, Inj2, Obj, Oplus,
    Proj1, Proj2, Tensor, TensorMap, Unit, Zero, dual_map, subobjects,
)


@dataclass(frozen=True)
class Decomposition:
    """Components `a^i` of an object with the terms `inj[i] : a^i -> a` and
    `proj[i] : a -> a^i` selecting them."""

    components: tuple[Obj, ...]
    injections: tuple[Arrow, ...]
    projections: tuple[Arrow, ...]

    def __len__(self) -> int:
        return len(self.components)


@cache
def oplus_free(a: Obj) -> bool:
    return not any(isinstance(s, Oplus) for s in subobjects(a))


@cache
def decompose(a: Obj) -> Decomposition:
    """The component/injection/projection sequences of `a`.

    Direct-sum-free objects are a single component selected by identities.
    Tensor and hom multiply component counts in row-major order (hom flips
    the role of injections and projections on its left factor); a direct sum
    concatenates, composing with the block injections/projections.  The dual
    of a decomposition dualizes components in place and swaps the roles of
    the two sequences.
    """
    if oplus_free(a):
        return Decomposition((a,), (Id(a),), (Id(a),))
    match a:
        case Tensor(l, r):
            dl, dr = decompose(l), decompose(r)
            return Decomposition(
                tuple(Tensor(c1, c2) for c1 in dl.components for c2 in dr.components),
                tuple(TensorMap(i1, i2) for i1 in dl.injections for i2 in dr.injections),
                tuple(TensorMap(p1, p2) for p1 in dl.projections for p2 in dr.projections),
            )
        case Hom(l, r):
            dl, dr = decompose(l), decompose(r)
            return Decomposition(
                tuple(Hom(c1, c2) for c1 in dl.components for c2 in dr.components),
                tuple(HomMap(p1, i2) for p1 in dl.projections for i2 in dr.injections),
                tuple(HomMap(i1, p2) for i1 in dl.injections for p2 in dr.projections),
            )
        case Oplus(l, r):
            dl, dr = decompose(l), decompose(r)
            return Decomposition(
                dl.components + dr.components,
                tuple(Compose(Inj1(l, r), i) for i in dl.injections)
                + tuple(Compose(Inj2(l, r), i) for i in dr.injections),
                tuple(Compose(p, Proj1(l, r)) for p in dl.projections)
                + tuple(Compose(p, Proj2(l, r)) for p in dr.projections),
            )
        case Dual(x):
            dx = decompose(x)
            return Decomposition(
                tuple(Dual(c) for c in dx.components),
                tuple(dual_map(p) for p in dx.projections),
                tuple(dual_map(i) for i in dx.injections),
            )
        case _:  # leaves are oplus-free, handled above
            raise AssertionError(f"unreachable: {a!r}")


class Valuation(Enum):
    """Whether a formula denotes the tensor unit, the zero object, or neither."""

    I_VALUED = "I-valued"
    ZERO_VALUED = "0-valued"
    NEITHER = "neither"


@cache
def valuation(a: Obj) -> Valuation:
    match a:
        case Unit():
            return Valuation.I_VALUED
        case Zero():
            return Valuation.ZERO_VALUED
        case Gen():
            return Valuation.NEITHER
        case Oplus(l, r):
            vl, vr = valuation(l), valuation(r)
            if {vl, vr} == {Valuation.I_VALUED, Valuation.ZERO_VALUED}:
                return Valuation.I_VALUED
            if vl is vr is Valuation.ZERO_VALUED:
                return Valuation.ZERO_VALUED
            return Valuation.NEITHER
        case Tensor(l, r) | Hom(l, r):
            vl, vr = valuation(l), valuation(r)
            if Valuation.ZERO_VALUED in (vl, vr):
                return Valuation.ZERO_VALUED
            if vl is vr is Valuation.I_VALUED:
                return Valuation.I_VALUED
            return Valuation.NEITHER
        case Dual(x):
            return valuation(x)
        case _:
            raise AssertionError(f"unreachable: {a!r}")


def improper_subformula(a: Obj) -> Obj | None:
    """First hom subformula whose codomain is I-valued while its domain is
    neither I-valued nor 0-valued, or None if `a` is proper."""
    for sub in subobjects(a):
        match sub:
            case Hom(l, r) if (valuation(r) is Valuation.I_VALUED
                               and valuation(l) is Valuation.NEITHER):
                return sub
    return None


def is_proper(a: Obj) -> bool:
    return improper_subformula(a) is None
