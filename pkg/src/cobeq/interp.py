"""Evaluation of the diagram language into matrices of cobordism multisets,
plus the purely syntactic matrix normalizer and the direct-definition entry
oracle used to cross-validate the evaluator.

The evaluator `interpret_arrow` recurses structurally over a term, mapping
each generator family to its matrix of wires, caps and cups and each
combinator to the corresponding matrix operation.  `entry_oracle` instead
computes single entries from first principles, by sandwiching the term
between projection and injection terms, and must agree with the evaluator
entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .biproduct import Valuation, decompose, valuation
from .cob import (
    Boundary, CobMatrix, Cobordism, MultiCob, empty_multicob, flip,
    identity_cob, identity_matrix, mat_add, mat_compose, mat_dagger,
    mat_dsum, mat_hom, mat_tensor, singleton, zero_matrix,
)
from .syntax import (
    Alpha, AlphaInv, Arrow, Compose, Dagger, Dual, Eps, EpsC, Eta, EtaC,
    Gen, Hom, HomMap, Id, Inj1, Inj2, Lambda, LambdaInv, Mode, ModeViolation,
    Obj, Oplus, OplusMap, Plus, Proj1, Proj2, Sigma, Tensor, TensorMap, Unit,
    Whisker, Zero, ZeroMap, check_mode, check_object_mode, expand_derived,
    infer_type, render_arrow, render_object,
)


# ---------------------------------------------------------------------------
# Objects


def interpret_object(a: Obj, mode: Mode | None = None) -> tuple[Boundary, ...]:
    """The boundary sequence denoted by a formula.

    Generators become a single positive point, the unit a single empty
    boundary, the zero object the empty sequence.  Tensor and hom pair
    components in row-major order (hom flipping the left factor), direct
    sums concatenate, duals flip componentwise.  When `mode` is given the
    formula is checked for dialect legality first.
    """
    if mode is not None:
        check_object_mode(a, mode)
    return _object_value(a)


@cache
def _object_value(a: Obj) -> tuple[Boundary, ...]:
    match a:
        case Gen():
            return ("+",)
        case Unit():
            return ("",)
        case Zero():
            return ()
        case Tensor(l, r):
            return tuple(s + t for s in interpret_object(l) for t in interpret_object(r))
        case Oplus(l, r):
            return interpret_object(l) + interpret_object(r)
        case Hom(l, r):
            return tuple(flip(s) + t for s in interpret_object(l) for t in interpret_object(r))
        case Dual(x):
            return tuple(flip(s) for s in interpret_object(x))
        case _:
            raise ValueError(f"unknown object node {a!r}")


@cache
def live_components(a: Obj) -> tuple[int, ...]:
    """Indices of the components that contribute a boundary to the
    interpreted object (the 0-valued ones contribute none)."""
    return tuple(i for i, c in enumerate(decompose(a).components)
                 if valuation(c) is not Valuation.ZERO_VALUED)


# ---------------------------------------------------------------------------
# Generator cobordisms


def _swap_block(b1: Boundary, b2: Boundary) -> Cobordism:
    n1, n2 = len(b1), len(b2)
    off = n1 + n2
    pairs = [(i, off + n2 + i) for i in range(n1)]
    pairs += [(n1 + q, off + q) for q in range(n2)]
    return Cobordism(b1 + b2, b2 + b1, tuple(sorted(pairs)))


def _cap_block(a: Boundary, wires: Boundary) -> Cobordism:
    # wires -> flip(a) + a + wires
    ns, la = len(wires), len(a)
    pairs = [(ns + t, ns + la + t) for t in range(la)]
    pairs += [(q, ns + 2 * la + q) for q in range(ns)]
    return Cobordism(wires, flip(a) + a + wires, tuple(sorted(pairs)))


def _cup_block(a: Boundary, wires: Boundary) -> Cobordism:
    # a + flip(a) + wires -> wires
    ns, la = 2 * len(a) + len(wires), len(a)
    pairs = [(p, la + p) for p in range(la)]
    pairs += [(2 * la + q, ns + q) for q in range(len(wires))]
    return Cobordism(a + flip(a) + wires, wires, tuple(sorted(pairs)))


def _sparse(row_types, col_types, nonzero: dict[tuple[int, int], MultiCob]) -> CobMatrix:
    return CobMatrix(
        tuple(row_types), tuple(col_types),
        tuple(tuple(nonzero.get((i, j), empty_multicob(c, r))
                    for j, c in enumerate(col_types))
              for i, r in enumerate(row_types)))


# ---------------------------------------------------------------------------
# Arrows


def interpret_arrow(t: Arrow, mode: Mode | None = None) -> CobMatrix:
    """The matrix denoted by a well-typed term.

    Derived forms need no pre-expansion: sugar kinds evaluate directly to
    the matrices of their expansions.  When `mode` is given the term is
    checked for dialect legality first.
    """
    if mode is not None:
        check_mode(t, mode)
    return _eval(t)


@cache
def _eval(t: Arrow) -> CobMatrix:
    match t:
        case Id() | Alpha() | AlphaInv() | Lambda() | LambdaInv():
            # strictly associative and unital model: all of these are
            # identity matrices between equal boundary sequences
            src, tgt = infer_type(t)
            types = interpret_object(src)
            assert types == interpret_object(tgt)
            return identity_matrix(types)
        case Sigma(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            na, nb = len(ta), len(tb)
            nz = {(j * na + i, i * nb + j): singleton(_swap_block(ta[i], tb[j]))
                  for i in range(na) for j in range(nb)}
            return _sparse(interpret_object(Tensor(b, a)),
                           interpret_object(Tensor(a, b)), nz)
        case Eta(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            na, nb = len(ta), len(tb)
            nz = {(i * (na * nb) + i * nb + j, j):
                  singleton(_cap_block(ta[i], tb[j]))
                  for i in range(na) for j in range(nb)}
            return _sparse(interpret_object(Hom(a, Tensor(a, b))), tb, nz)
        case Eps(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            na, nb = len(ta), len(tb)
            nz = {(i, j * (na * nb) + j * nb + i):
                  singleton(_cup_block(ta[j], tb[i]))
                  for j in range(na) for i in range(nb)}
            return _sparse(tb, interpret_object(Tensor(a, Hom(a, b))), nz)
        case EtaC(a):
            ta = interpret_object(a)
            na = len(ta)
            nz = {(i * na + i, 0): singleton(_cap_block(ta[i], ""))
                  for i in range(na)}
            return _sparse(interpret_object(Tensor(Dual(a), a)), ("",), nz)
        case EpsC(a):
            ta = interpret_object(a)
            na = len(ta)
            nz = {(0, j * na + j): singleton(_cup_block(ta[j], ""))
                  for j in range(na)}
            return _sparse(("",), interpret_object(Tensor(a, Dual(a))), nz)
        case Inj1(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            nz = {(j, j): singleton(identity_cob(c)) for j, c in enumerate(ta)}
            return _sparse(ta + tb, ta, nz)
        case Inj2(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            nz = {(len(ta) + j, j): singleton(identity_cob(c))
                  for j, c in enumerate(tb)}
            return _sparse(ta + tb, tb, nz)
        case Proj1(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            nz = {(i, i): singleton(identity_cob(c)) for i, c in enumerate(ta)}
            return _sparse(ta, ta + tb, nz)
        case Proj2(a, b):
            ta, tb = interpret_object(a), interpret_object(b)
            nz = {(i, len(ta) + i): singleton(identity_cob(c))
                  for i, c in enumerate(tb)}
            return _sparse(tb, ta + tb, nz)
        case ZeroMap(a, b):
            return zero_matrix(interpret_object(b), interpret_object(a))
        case Compose(g, f):
            return mat_compose(_eval(g), _eval(f))
        case Plus(l, r):
            return mat_add(_eval(l), _eval(r))
        case TensorMap(l, r):
            return mat_tensor(_eval(l), _eval(r))
        case OplusMap(l, r):
            return mat_dsum(_eval(l), _eval(r))
        case Whisker(a, g):
            return mat_hom(identity_matrix(interpret_object(a)), _eval(g))
        case HomMap(f, g):
            return mat_hom(_eval(f), _eval(g))
        case Dagger(f):
            return mat_dagger(_eval(f))
        case _:
            raise ValueError(f"unknown arrow node {t!r}")


def entry_oracle(t: Arrow, i: int, j: int) -> MultiCob:
    """Entry (i, j) of the matrix of `t`, computed from the definition:
    interpret the term projection(i) . t . injection(j) and read off the sole
    entry of the resulting 1x1 matrix.

    Indices follow the interpreted matrix, i.e. they range over the
    components that contribute a boundary.
    """
    src, tgt = infer_type(t)
    ds, dt = decompose(src), decompose(tgt)
    jj = live_components(src)[j]
    ii = live_components(tgt)[i]
    probe = Compose(Compose(dt.projections[ii], t), ds.injections[jj])
    m = interpret_arrow(probe)
    assert m.shape == (1, 1)
    return m.entries[0][0]


# ---------------------------------------------------------------------------
# Syntactic matrix normalization (smcb only)


@dataclass(frozen=True)
class TermMatrix:
    """A matrix of formal sums of direct-sum-free terms.

    Rows and columns are indexed by the components of the target and source;
    an empty sum denotes the zero arrow.  No entry mentions (+) on objects or
    arrows, injections or projections.
    """

    row_components: tuple[Obj, ...]
    col_components: tuple[Obj, ...]
    entries: tuple[tuple[tuple[Arrow, ...], ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_components), len(self.col_components))


def _sum_sorted(terms) -> tuple[Arrow, ...]:
    terms = tuple(terms)
    if len(terms) <= 1:
        return terms
    return tuple(sorted(terms, key=render_arrow))


def _tm_sparse(rows, cols, nonzero: dict[tuple[int, int], tuple[Arrow, ...]]) -> TermMatrix:
    return TermMatrix(
        tuple(rows), tuple(cols),
        tuple(tuple(nonzero.get((i, j), ()) for j in range(len(cols)))
              for i in range(len(rows))))


def normalize_syntactic(t: Arrow) -> TermMatrix:
    """Rewrite a term as a matrix of pure monoidal-closed terms.

    Generator families produce their case-analysis matrices; combinators act
    by matrix composition, sum, Kronecker tensor, block diagonal and the
    whisker Kronecker.  Only the smcb dialect is supported.
    """
    check_mode(t, Mode.SMCB)
    return _norm(expand_derived(t, Mode.SMCB))


@cache
def _norm(t: Arrow) -> TermMatrix:
    match t:
        case Id(a):
            comps = decompose(a).components
            return _tm_sparse(comps, comps,
                              {(i, i): (Id(c),) for i, c in enumerate(comps)})
        case Alpha(a, b, c) | AlphaInv(a, b, c):
            ca = decompose(a).components
            cb = decompose(b).components
            cc = decompose(c).components
            src, tgt = infer_type(t)
            mk = Alpha if isinstance(t, Alpha) else AlphaInv
            nz = {}
            k = 0
            for x in ca:
                for y in cb:
                    for z in cc:
                        nz[(k, k)] = (mk(x, y, z),)
                        k += 1
            return _tm_sparse(decompose(tgt).components, decompose(src).components, nz)
        case Lambda(a):
            comps = decompose(a).components
            cols = decompose(Tensor(Unit(), a)).components
            return _tm_sparse(comps, cols,
                              {(i, i): (Lambda(c),) for i, c in enumerate(comps)})
        case LambdaInv(a):
            comps = decompose(a).components
            rows = decompose(Tensor(Unit(), a)).components
            return _tm_sparse(rows, comps,
                              {(i, i): (LambdaInv(c),) for i, c in enumerate(comps)})
        case Sigma(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            na, nb = len(ca), len(cb)
            nz = {(j * na + i, i * nb + j): (Sigma(ca[i], cb[j]),)
                  for i in range(na) for j in range(nb)}
            return _tm_sparse(decompose(Tensor(b, a)).components,
                              decompose(Tensor(a, b)).components, nz)
        case Eta(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            na, nb = len(ca), len(cb)
            nz = {(i * (na * nb) + i * nb + j, j): (Eta(ca[i], cb[j]),)
                  for i in range(na) for j in range(nb)}
            return _tm_sparse(decompose(Hom(a, Tensor(a, b))).components, cb, nz)
        case Eps(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            na, nb = len(ca), len(cb)
            nz = {(i, j * (na * nb) + j * nb + i): (Eps(ca[j], cb[i]),)
                  for j in range(na) for i in range(nb)}
            return _tm_sparse(cb, decompose(Tensor(a, Hom(a, b))).components, nz)
        case Inj1(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            nz = {(j, j): (Id(c),) for j, c in enumerate(ca)}
            return _tm_sparse(ca + cb, ca, nz)
        case Inj2(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            nz = {(len(ca) + j, j): (Id(c),) for j, c in enumerate(cb)}
            return _tm_sparse(ca + cb, cb, nz)
        case Proj1(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            nz = {(i, i): (Id(c),) for i, c in enumerate(ca)}
            return _tm_sparse(ca, ca + cb, nz)
        case Proj2(a, b):
            ca, cb = decompose(a).components, decompose(b).components
            nz = {(i, len(ca) + i): (Id(c),) for i, c in enumerate(cb)}
            return _tm_sparse(cb, ca + cb, nz)
        case ZeroMap(a, b):
            return _tm_sparse(decompose(b).components, decompose(a).components, {})
        case Compose(g, f):
            mg, mf = _norm(g), _norm(f)
            assert mg.col_components == mf.row_components
            f_row_nz = [[j for j, s in enumerate(row) if s]
                        for row in mf.entries]
            acc: dict[tuple[int, int], list[Arrow]] = {}
            for i, grow in enumerate(mg.entries):
                for k, gs in enumerate(grow):
                    if not gs:
                        continue
                    for j in f_row_nz[k]:
                        acc.setdefault((i, j), []).extend(
                            Compose(x, y) for x in gs
                            for y in mf.entries[k][j])
            return _tm_sparse(mg.row_components, mf.col_components,
                              {key: _sum_sorted(ts) for key, ts in acc.items()})
        case Plus(l, r):
            ml, mr = _norm(l), _norm(r)
            return TermMatrix(
                ml.row_components, ml.col_components,
                tuple(tuple(_sum_sorted(a + b) for a, b in zip(ra, rb))
                      for ra, rb in zip(ml.entries, mr.entries)))
        case TensorMap(l, r):
            ml, mr = _norm(l), _norm(r)
            m2, n2 = mr.shape
            rows = tuple(Tensor(x, y) for x in ml.row_components
                         for y in mr.row_components)
            cols = tuple(Tensor(x, y) for x in ml.col_components
                         for y in mr.col_components)
            nz = {}
            for i1, lrow in enumerate(ml.entries):
                for j1, ls in enumerate(lrow):
                    if not ls:
                        continue
                    for i2, rrow in enumerate(mr.entries):
                        for j2, rs in enumerate(rrow):
                            if not rs:
                                continue
                            nz[(i1 * m2 + i2, j1 * n2 + j2)] = _sum_sorted(
                                TensorMap(x, y) for x in ls for y in rs)
            return _tm_sparse(rows, cols, nz)
        case OplusMap(l, r):
            ml, mr = _norm(l), _norm(r)
            rows = ml.row_components + mr.row_components
            cols = ml.col_components + mr.col_components
            nr, nc = ml.shape
            grid = tuple(
                tuple((ml.entries[i][j] if i < nr and j < nc
                       else mr.entries[i - nr][j - nc] if i >= nr and j >= nc
                       else ())
                      for j in range(len(cols)))
                for i in range(len(rows)))
            return TermMatrix(rows, cols, grid)
        case Whisker(a, g):
            mg = _norm(g)
            ca = decompose(a).components
            m2, n2 = mg.shape
            rows = tuple(Hom(x, y) for x in ca for y in mg.row_components)
            cols = tuple(Hom(x, y) for x in ca for y in mg.col_components)
            nz = {}
            for k, c in enumerate(ca):
                for i2, grow in enumerate(mg.entries):
                    for j2, gs in enumerate(grow):
                        if gs:
                            nz[(k * m2 + i2, k * n2 + j2)] = _sum_sorted(
                                Whisker(c, y) for y in gs)
            return _tm_sparse(rows, cols, nz)
        case _:
            raise ModeViolation(f"normalize_syntactic cannot handle {t!r}")


# ---------------------------------------------------------------------------
# Serialization


def term_matrix_to_text(m: TermMatrix) -> str:
    lines = [f"termmatrix {m.shape[0]}x{m.shape[1]}"]
    lines.append("rows: " + ", ".join(render_object(c) for c in m.row_components))
    lines.append("cols: " + ", ".join(render_object(c) for c in m.col_components))
    for i, row in enumerate(m.entries):
        for j, terms in enumerate(row):
            body = " + ".join(render_arrow(s) for s in terms) if terms else "0"
            lines.append(f"entry {i} {j}: {body}")
    return "\n".join(lines)


def term_matrix_to_json(m: TermMatrix) -> dict:
    return {
        "shape": list(m.shape),
        "row_components": [render_object(c) for c in m.row_components],
        "col_components": [render_object(c) for c in m.col_components],
        "entries": [[[render_arrow(s) for s in terms] for terms in row]
                    for row in m.entries],
    }
