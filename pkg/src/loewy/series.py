"""Socle and radical series, layers, and the maps relating them to duals.

For a right module V the two filtrations are computed from the radical
powers of the algebra: rad^n V = V * rad^n A and soc^n V is the joint
kernel of the action of rad^n A.  Layers are explicit subquotient modules
that remember projection/section coordinate maps into the parent, which
makes the capital/socle adjunction and the two duality isomorphisms exact
matrix identities rather than approximate constructions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import Subspace, kernel
from .modules import (
    Module,
    ModuleMap,
    SubquotientModule,
    f_dual,
    simple,
    subquotient,
)

__all__ = [
    "LoewySeries",
    "LayerTable",
    "socle_n",
    "radical_n",
    "socle_series",
    "radical_series",
    "capital_n",
    "socle_submodule",
    "socle_layer",
    "radical_layer",
    "capital_map",
    "socle_map",
    "adjunction_forward",
    "adjunction_backward",
    "dual_socle_capital_iso",
    "dual_layer_iso",
    "layer_table",
]

_KINDS = ("radical", "socle")


@dataclass(eq=False)
class LoewySeries:
    """A full filtration 0 = term[0] <= ... <= term[L] (socle kind) or the
    descending radical chain term[n] = rad^n V (radical kind)."""

    kind: str
    terms: list[Subspace]


@dataclass(eq=False)
class LayerTable:
    """Layer multiplicities m[i][j][n-1] for a module family against the simples."""

    kind: str
    table: np.ndarray  # shape (len(family), num_simples, loewy_length)
    loewy_length: int

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LayerTable)
            and other.kind == self.kind
            and other.loewy_length == self.loewy_length
            and np.array_equal(other.table, self.table)
        )

    def cartan(self) -> np.ndarray:
        return self.table.sum(axis=2)


def _check_kind(kind: str) -> None:
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")


def socle_n(v: Module, n: int) -> Subspace:
    """The subspace soc^n V = {x : x * rad^n A = 0}; soc^0 V = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = v.algebra
    rad = a.radical_power(n)
    if rad.dim == 0 or v.dim == 0:
        return Subspace.full(v.dim, a.p)
    mats = np.array([v.act(r) for r in rad.basis], dtype=np.int64)
    stacked = mats.transpose(0, 2, 1).reshape(-1, v.dim)
    return kernel(stacked, a.p)


def radical_n(v: Module, n: int) -> Subspace:
    """The subspace rad^n V = V * rad^n A; rad^0 V = V."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a = v.algebra
    if n == 0:
        return Subspace.full(v.dim, a.p)
    rad = a.radical_power(n)
    if rad.dim == 0:
        return Subspace.zero(v.dim, a.p)
    rows = np.concatenate([v.act(r) for r in rad.basis])
    return Subspace.from_rows(rows, v.dim, a.p)


def socle_series(v: Module) -> LoewySeries:
    L = v.algebra.loewy_length
    return LoewySeries("socle", [socle_n(v, n) for n in range(L + 1)])


def radical_series(v: Module) -> LoewySeries:
    L = v.algebra.loewy_length
    return LoewySeries("radical", [radical_n(v, n) for n in range(L + 1)])


def capital_n(v: Module, n: int) -> SubquotientModule:
    """The quotient V / rad^n V."""
    return subquotient(v, Subspace.full(v.dim, v.algebra.p), radical_n(v, n))


def socle_submodule(v: Module, n: int) -> SubquotientModule:
    """soc^n V as a submodule."""
    return subquotient(v, socle_n(v, n), Subspace.zero(v.dim, v.algebra.p))


def socle_layer(v: Module, n: int) -> SubquotientModule:
    """The semisimple layer soc^n V / soc^{n-1} V, n >= 1."""
    if n < 1:
        raise ValueError("layers are indexed from 1")
    return subquotient(v, socle_n(v, n), socle_n(v, n - 1))


def radical_layer(v: Module, n: int) -> SubquotientModule:
    """The semisimple layer rad^{n-1} V / rad^n V, n >= 1."""
    if n < 1:
        raise ValueError("layers are indexed from 1")
    return subquotient(v, radical_n(v, n - 1), radical_n(v, n))


def capital_map(f: ModuleMap, n: int) -> ModuleMap:
    """The map induced by f on the capitals V/rad^n V (functor on morphisms)."""
    src = capital_n(f.source, n)
    tgt = capital_n(f.target, n)
    p = f.source.algebra.p
    return ModuleMap(src, tgt, (src.lift @ f.matrix @ tgt.proj) % p)


def socle_map(f: ModuleMap, n: int) -> ModuleMap:
    """The restriction of f to the n-th socles."""
    src = socle_submodule(f.source, n)
    tgt = socle_submodule(f.target, n)
    p = f.source.algebra.p
    moved = (src.lift @ f.matrix) % p
    if not tgt.top.contains(Subspace.from_rows(moved, f.target.dim, p)):
        raise ValueError("map does not carry the socle into the socle")
    return ModuleMap(src, tgt, (moved @ tgt.proj) % p)


def adjunction_forward(f: ModuleMap, n: int) -> ModuleMap:
    """Turn f: V/rad^n V -> W into the corresponding map V -> soc^n W.

    The source of f must be a capital produced by capital_n(V, n); the
    image automatically lands in soc^n W, which the construction verifies.
    """
    src = f.source
    if not isinstance(src, SubquotientModule):
        raise ValueError("source of f is not a capital subquotient")
    parent = src.parent
    p = parent.algebra.p
    if src.bot != radical_n(parent, n):
        raise ValueError(f"source of f is not the capital at level n={n}")
    target = socle_submodule(f.target, n)
    through = (src.proj @ f.matrix) % p  # parent -> W coordinates
    if not target.top.contains(Subspace.from_rows(through, f.target.dim, p)):
        raise ValueError("image does not lie in the n-th socle")
    return ModuleMap(parent, target, (through @ target.proj) % p)


def adjunction_backward(g: ModuleMap, n: int) -> ModuleMap:
    """Turn g: V -> soc^n W into the corresponding map V/rad^n V -> W."""
    tgt = g.target
    if not isinstance(tgt, SubquotientModule):
        raise ValueError("target of g is not a socle submodule")
    parent_w = tgt.parent
    p = parent_w.algebra.p
    if tgt.top != socle_n(parent_w, n):
        raise ValueError(f"target of g is not the socle at level n={n}")
    src = capital_n(g.source, n)
    if src.bot.dim and ((src.bot.basis @ g.matrix) % p).any():
        raise ValueError("map does not kill rad^n of its source")
    return ModuleMap(src, parent_w, (src.lift @ g.matrix @ tgt.lift) % p)


def dual_socle_capital_iso(u: Module, n: int) -> tuple[ModuleMap, ModuleMap]:
    """Mutually inverse maps soc^n(f_dual U) <-> f_dual(U/rad^n U).

    Forward sends a functional vanishing on rad^n U to the functional it
    induces on the capital; backward pulls a functional on the capital
    back along the projection.  Both are linear over the opposite algebra
    and the construction checks they invert each other exactly.
    """
    du = f_dual(u)
    soc = socle_submodule(du, n)
    cap = capital_n(u, n)
    cap_dual = f_dual(cap)
    p = u.algebra.p
    eta = ModuleMap(soc, cap_dual, (soc.lift @ cap.lift.T) % p)
    xi = ModuleMap(cap_dual, soc, (cap.proj.T @ soc.proj) % p)
    _check_mutually_inverse(eta, xi)
    return eta, xi


def dual_layer_iso(u: Module, n: int) -> tuple[ModuleMap, ModuleMap]:
    """Mutually inverse maps f_dual(soc_n U) <-> rad_n(f_dual U), n >= 1.

    soc_n U is the n-th socle layer and rad_n(f_dual U) the n-th radical
    layer of the dual; the maps transport a functional on the layer to the
    class of any extension, and conversely restrict representatives.
    """
    if n < 1:
        raise ValueError("layers are indexed from 1")
    du = f_dual(u)
    lay = socle_layer(u, n)
    dual_lay = f_dual(lay)
    rad_lay = radical_layer(du, n)
    p = u.algebra.p
    # rad^m of the dual is the annihilator of soc^m U; the layer maps below
    # are well defined exactly because of this.
    for m in (n - 1, n):
        ann = kernel(socle_n(u, m).basis, p) if socle_n(u, m).dim else Subspace.full(u.dim, p)
        if ann != radical_n(du, m):
            raise ValueError("dual radical series does not annihilate the socle series")
    eta = ModuleMap(dual_lay, rad_lay, (lay.proj.T @ rad_lay.proj) % p)
    xi = ModuleMap(rad_lay, dual_lay, (rad_lay.lift @ lay.lift.T) % p)
    _check_mutually_inverse(eta, xi)
    return eta, xi


def _check_mutually_inverse(f: ModuleMap, g: ModuleMap) -> None:
    p = f.source.algebra.p
    d1, d2 = f.source.dim, g.source.dim
    if not np.array_equal((f.matrix @ g.matrix) % p, np.eye(d1, dtype=np.int64)):
        raise ValueError("maps are not mutually inverse")
    if not np.array_equal((g.matrix @ f.matrix) % p, np.eye(d2, dtype=np.int64)):
        raise ValueError("maps are not mutually inverse")


def layer_table(family: list[Module], kind: str) -> LayerTable:
    """Multiplicity table m[i][j][n-1] of S_j in the n-th layer of family[i].

    Radical kind counts Hom(rad_n family[i], S_j); socle kind counts
    Hom(S_j, soc_n family[i]).  n runs from 1 to the algebra's Loewy
    length.
    """
    _check_kind(kind)
    if not family:
        raise ValueError("family must not be empty")
    a = family[0].algebra
    if any(v.algebra is not a for v in family):
        raise ValueError("family members live over different algebras")
    from .modules import hom_space  # local to avoid cycle at import time

    L = a.loewy_length
    k = a.num_vertices
    simples = [simple(a, j) for j in range(k)]
    out = np.zeros((len(family), k, L), dtype=np.int64)
    for i, v in enumerate(family):
        for n in range(1, L + 1):
            lay = radical_layer(v, n) if kind == "radical" else socle_layer(v, n)
            for j in range(k):
                if kind == "radical":
                    out[i, j, n - 1] = len(hom_space(lay, simples[j]))
                else:
                    out[i, j, n - 1] = len(hom_space(simples[j], lay))
    return LayerTable(kind, out, L)
