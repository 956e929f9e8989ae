"""Finite-dimensional right modules over a basic algebra.

A module of dimension d stores one d x d action matrix per algebra basis
element; elements are row vectors and act on the right, v -> v @ matrix.
Module maps are intertwiners in the same convention, so composition of
maps is matrix multiplication in application order.

The two duality functors both land over the opposite algebra: f_dual is
the linear dual (transposed actions) and a_dual is Hom into the regular
module with the action induced by left multiplication.  Their composite
is the Nakayama functor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, EXHAUSTIVE_SEARCH_LIMIT
from .linalg import Subspace, complement_basis, kernel, rref

__all__ = [
    "Module",
    "SubquotientModule",
    "ModuleMap",
    "IsoSearchResult",
    "regular_module",
    "simple",
    "projective",
    "injective",
    "hom_space",
    "f_dual",
    "f_dual_map",
    "a_dual",
    "ADualModule",
    "nakayama",
    "subquotient",
    "submodule",
    "quotient_module",
    "find_isomorphism",
]


class Module:
    """A right module given by its action matrices on a fixed basis."""

    def __init__(self, algebra: Algebra, action: np.ndarray, check: bool = True):
        self.algebra = algebra
        self.action = np.asarray(action, dtype=np.int64) % algebra.p
        if self.action.ndim != 3 or self.action.shape[0] != algebra.dim \
                or self.action.shape[1] != self.action.shape[2]:
            raise ValueError(f"action tensor has shape {self.action.shape}")
        self.dim = self.action.shape[1]
        if check:
            self._verify()

    def _verify(self) -> None:
        a, p, d = self.algebra, self.algebra.p, self.dim
        if not np.array_equal(self.act(a.one), np.eye(d, dtype=np.int64)):
            raise ValueError("identity does not act as the identity matrix")
        # Multiplicativity against the generators; products of generators give
        # every basis element, so this pins down the whole action.
        for g in a.generator_indices():
            prod = np.tensordot(a.table[:, g, :], self.action, axes=([1], [0])) % p
            direct = (self.action @ self.action[g]) % p
            if not np.array_equal(prod, direct):
                raise ValueError(
                    f"action is not multiplicative against basis element {a.labels[g]!r}"
                )

    def act(self, x: np.ndarray) -> np.ndarray:
        """Action matrix of an arbitrary algebra element (row convention)."""
        x = np.asarray(x, dtype=np.int64) % self.algebra.p
        return np.tensordot(x, self.action, axes=(0, 0)) % self.algebra.p

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim})"


class SubquotientModule(Module):
    """top/bot for invariant subspaces bot <= top of a parent module.

    lift (dim x parent.dim) sends coordinates to representatives inside the
    parent; proj (parent.dim x dim) reduces modulo bot and extracts
    coordinates, and lift @ proj is the identity.
    """

    def __init__(self, algebra, action, parent: Module, top: Subspace, bot: Subspace,
                 lift: np.ndarray, proj: np.ndarray, check: bool = True):
        super().__init__(algebra, action, check=check)
        self.parent = parent
        self.top = top
        self.bot = bot
        self.lift = lift
        self.proj = proj


class ModuleMap:
    """A module homomorphism source -> target as a matrix on row vectors."""

    def __init__(self, source: Module, target: Module, matrix: np.ndarray, check: bool = True):
        if source.algebra is not target.algebra:
            raise ValueError("source and target live over different algebras")
        self.source = source
        self.target = target
        p = source.algebra.p
        self.matrix = np.asarray(matrix, dtype=np.int64).reshape(source.dim, target.dim) % p
        if check and not self._intertwines():
            raise ValueError("matrix does not intertwine the algebra actions")

    def _intertwines(self) -> bool:
        p = self.source.algebra.p
        lhs = (self.source.action @ self.matrix) % p
        rhs = np.matmul(self.matrix, self.target.action) % p
        return np.array_equal(lhs, rhs)

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self followed by other."""
        if other.source is not self.target and other.source.dim != self.target.dim:
            raise ValueError("maps do not compose")
        return ModuleMap(self.source, other.target,
                         (self.matrix @ other.matrix) % self.source.algebra.p)

    def apply(self, v: np.ndarray) -> np.ndarray:
        return (np.asarray(v, dtype=np.int64) @ self.matrix) % self.source.algebra.p

    def is_isomorphism(self) -> bool:
        if self.source.dim != self.target.dim:
            return False
        return len(rref(self.matrix, self.source.algebra.p)[1]) == self.source.dim

    def __repr__(self) -> str:
        return f"ModuleMap({self.source.dim} -> {self.target.dim})"


def regular_module(a: Algebra) -> Module:
    """The algebra as a right module over itself."""
    return Module(a, a.table.transpose(1, 0, 2).copy(), check=False)


def simple(a: Algebra, i: int) -> Module:
    """The simple module S_i concentrated at vertex i."""
    if not (0 <= i < a.num_vertices):
        raise ValueError(f"vertex index {i} out of range")
    action = np.zeros((a.dim, 1, 1), dtype=np.int64)
    action[i, 0, 0] = 1
    return Module(a, action)


def subquotient(v: Module, top: Subspace, bot: Subspace) -> SubquotientModule:
    """The module top/bot for invariant subspaces bot <= top of v."""
    p, d = v.algebra.p, v.dim
    for w in (top, bot):
        if w.ambient != d or w.p != p:
            raise ValueError("subspace does not live in the module's coordinate space")
        moved = (w.basis @ v.action) % p  # (dimA, w.dim, d)
        if w.dim and moved.size and w.reduce(moved.reshape(-1, d)).any():
            raise ValueError("subspace is not invariant under the algebra action")
    if not top.contains(bot):
        raise ValueError("subquotient requires bot <= top")
    lift = complement_basis(top, bot)
    _, piv_c = rref(lift, p)
    reducer = np.eye(d, dtype=np.int64)
    for j, pc in enumerate(bot.pivots):
        reducer[pc] = (reducer[pc] - bot.basis[j]) % p
    proj = reducer[:, piv_c]
    action = (lift @ v.action @ proj) % p  # (dimA, q, q)
    return SubquotientModule(v.algebra, action, v, top, bot, lift, proj)


def submodule(v: Module, w: Subspace) -> SubquotientModule:
    return subquotient(v, w, Subspace.zero(v.dim, v.algebra.p))


def quotient_module(v: Module, w: Subspace) -> SubquotientModule:
    return subquotient(v, Subspace.full(v.dim, v.algebra.p), w)


def projective(a: Algebra, i: int) -> SubquotientModule:
    """The projective P_i = e_i A as a submodule of the regular module."""
    if not (0 <= i < a.num_vertices):
        raise ValueError(f"vertex index {i} out of range")
    reg = regular_module(a)
    span = Subspace.from_rows(a.table[i] % a.p, a.dim, a.p)
    return submodule(reg, span)


def injective(a: Algebra, i: int) -> Module:
    """The injective I_i, the linear dual of the opposite projective at i."""
    return f_dual(projective(a.opposite(), i))


def f_dual(v: Module) -> Module:
    """Linear dual of v as a module over the opposite algebra.

    Actions are transposed; applying f_dual twice returns the original
    action tensor on the nose.
    """
    return Module(v.algebra.opposite(), v.action.transpose(0, 2, 1).copy(), check=False)


def f_dual_map(f: ModuleMap) -> ModuleMap:
    """The dual of a map, between the duals in the opposite direction."""
    return ModuleMap(f_dual(f.target), f_dual(f.source), f.matrix.T.copy())


def hom_space(u: Module, v: Module) -> list[ModuleMap]:
    """Basis of Hom(u, v), canonical for the given coordinate systems.

    Solves the intertwining equations of every algebra basis element by
    intersecting their kernels in basis order; the result is the reduced
    row-echelon basis of the space of intertwiners.
    """
    if u.algebra is not v.algebra:
        raise ValueError("modules live over different algebras")
    p = u.algebra.p
    du, dv = u.dim, v.dim
    n = du * dv
    if n == 0:
        return []
    eye_u = np.eye(du, dtype=np.int64)
    eye_v = np.eye(dv, dtype=np.int64)
    basis: np.ndarray | None = None  # None means the full space of matrices
    for c in range(u.algebra.dim):
        constraint = (np.kron(u.action[c], eye_v) - np.kron(eye_u, v.action[c].T)) % p
        if not constraint.any():
            continue
        if basis is None:
            sol = kernel(constraint, p)
            basis = sol.basis
        else:
            sol = kernel((constraint @ basis.T) % p, p)
            if sol.dim == basis.shape[0]:
                continue
            basis = rref((sol.basis @ basis) % p, p)[0][: sol.dim]
        if basis.shape[0] == 0:
            return []
    if basis is None:
        basis = np.eye(n, dtype=np.int64)
    return [ModuleMap(u, v, row.reshape(du, dv)) for row in basis]


class ADualModule(Module):
    """Hom(v, regular) over the opposite algebra, with its defining hom basis."""

    def __init__(self, algebra, action, hom_basis: list[ModuleMap], check: bool = True):
        super().__init__(algebra, action, check=check)
        self.hom_basis = hom_basis


def a_dual(v: Module) -> ADualModule:
    """Hom_A(v, A) as a right module over the opposite algebra.

    The underlying space is hom_space(v, regular); the opposite action
    post-composes a homomorphism with left multiplication.
    """
    a = v.algebra
    p = a.p
    maps = hom_space(v, regular_module(a))
    m = len(maps)
    if m == 0:
        return ADualModule(a.opposite(), np.zeros((a.dim, 0, 0), dtype=np.int64), [])
    flat = np.array([f.matrix.reshape(-1) for f in maps], dtype=np.int64).reshape(m, v.dim * a.dim)
    flat_rref, piv = rref(flat, p)
    if not np.array_equal(flat_rref[:m], flat) or len(piv) != m:
        raise ValueError("hom basis is not in reduced echelon position")
    action = np.zeros((a.dim, m, m), dtype=np.int64)
    for c in range(a.dim):
        left = a.table[c]  # matrix of z -> basis_c * z on the regular module
        moved = np.array([(f.matrix @ left) % p for f in maps], dtype=np.int64).reshape(m, -1)
        coords = moved[:, piv] if m else moved[:, :0]
        if not np.array_equal((coords @ flat) % p, moved):
            raise ValueError("left multiplication does not preserve the hom space")
        action[c] = coords
    return ADualModule(a.opposite(), action, maps)


def nakayama(v: Module) -> Module:
    """The Nakayama functor: linear dual of the algebra dual."""
    return f_dual(a_dual(v))


@dataclass(eq=False)
class IsoSearchResult:
    """Tri-state outcome of an isomorphism search: yes / no / unknown."""

    status: str
    witness: ModuleMap | None = None


def find_isomorphism(
    u: Module,
    v: Module,
    trials: int = 512,
    seed: int = 0,
    exhaustive_limit: int = EXHAUSTIVE_SEARCH_LIMIT,
) -> IsoSearchResult:
    """Look for an isomorphism u -> v inside Hom(u, v).

    Basis elements are tried first, then every combination when the search
    space has at most exhaustive_limit elements (making "no" definitive),
    otherwise `trials` seeded random combinations (failure then reports
    "unknown").
    """
    if u.algebra is not v.algebra:
        raise ValueError("modules live over different algebras")
    p = u.algebra.p
    if u.dim != v.dim:
        return IsoSearchResult("no")
    if u.dim == 0:
        return IsoSearchResult("yes", ModuleMap(u, v, np.zeros((0, 0), dtype=np.int64)))
    maps = hom_space(u, v)
    m = len(maps)
    if m == 0:
        return IsoSearchResult("no")
    for f in maps:
        if f.is_isomorphism():
            return IsoSearchResult("yes", f)
    stacked = np.array([f.matrix for f in maps], dtype=np.int64)
    if p**m <= exhaustive_limit:
        for coeffs in np.ndindex(*([p] * m)):
            c = np.array(coeffs, dtype=np.int64)
            if not c.any():
                continue
            mat = np.tensordot(c, stacked, axes=(0, 0)) % p
            if len(rref(mat, p)[1]) == u.dim:
                return IsoSearchResult("yes", ModuleMap(u, v, mat))
        return IsoSearchResult("no")
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        c = rng.integers(0, p, size=m).astype(np.int64)
        if not c.any():
            continue
        mat = np.tensordot(c, stacked, axes=(0, 0)) % p
        if len(rref(mat, p)[1]) == u.dim:
            return IsoSearchResult("yes", ModuleMap(u, v, mat))
    return IsoSearchResult("unknown")
