"""Exact dense linear algebra over prime fields GF(p).

Matrices are numpy int64 arrays with entries reduced to [0, p).  Subspaces
keep their basis in reduced row-echelon form, so equal subspaces have
identical representations and comparison is a plain array equality.  All
routines are deterministic.

Dimensions are desk scale; callers must keep d * (p - 1)**2 inside int64,
which holds for every prime this package targets (p < 2**31 with small d,
or small p with d in the hundreds).
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "PrimeField",
    "Subspace",
    "as_matrix",
    "rref",
    "rank",
    "kernel",
    "image",
    "solve",
    "subspace_sum",
    "subspace_intersection",
    "quotient_basis_extension",
    "complement_basis",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field GF(p) for a prime p < 2**31."""

    def __init__(self, p: int):
        if not isinstance(p, (int, np.integer)):
            raise TypeError(f"modulus must be an integer, got {type(p).__name__}")
        p = int(p)
        if p >= 2**31:
            raise ValueError(f"modulus {p} too large, need p < 2**31")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        return pow(a, self.p - 2, self.p)

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def as_matrix(entries, p: int) -> np.ndarray:
    """Coerce to a fresh 2-D int64 array reduced mod p."""
    m = np.array(entries, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {m.shape}")
    return m


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p).

    Returns (r, pivots) where r has unit leading entries, zeros above and
    below each pivot, and pivots lists the pivot columns in order.  Zero
    rows sink to the bottom.
    """
    r = np.array(m, dtype=np.int64) % p
    if r.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {r.shape}")
    nrows, ncols = r.shape
    pivots: list[int] = []
    lead = 0
    for col in range(ncols):
        if lead == nrows:
            break
        nz = np.nonzero(r[lead:, col])[0]
        if nz.size == 0:
            continue
        i = lead + int(nz[0])
        if i != lead:
            r[[lead, i]] = r[[i, lead]]
        r[lead] = (r[lead] * pow(int(r[lead, col]), p - 2, p)) % p
        others = np.nonzero(r[:, col])[0]
        others = others[others != lead]
        if others.size:
            r[others] = (r[others] - np.outer(r[others, col], r[lead])) % p
        pivots.append(col)
        lead += 1
    return r, pivots


def rank(m: np.ndarray, p: int) -> int:
    return len(rref(m, p)[1])


def kernel(m: np.ndarray, p: int) -> "Subspace":
    """Right null space {x : m @ x = 0} as a Subspace of F^ncols."""
    m = np.asarray(m, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {m.shape}")
    ncols = m.shape[1]
    r, pivots = rref(m, p)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, c in enumerate(pivots):
            basis[t, c] = (-r[i, f]) % p
    return Subspace.from_rows(basis, ncols, p)


def image(m: np.ndarray, p: int) -> "Subspace":
    """Row space of m as a Subspace of F^ncols."""
    m = np.asarray(m, dtype=np.int64) % p
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D array, got shape {m.shape}")
    return Subspace.from_rows(m, m.shape[1], p)


def solve(a: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray | None, "Subspace"]:
    """Solve a @ x = b over GF(p).

    b may be a vector or a matrix of stacked right-hand sides.  Returns
    (particular, homogeneous) where particular is one solution (None when
    the system is inconsistent) and homogeneous is the right null space
    of a.
    """
    a = np.asarray(a, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    single = b.ndim == 1
    if single:
        b = b[:, None]
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"shape mismatch: a has {a.shape[0]} rows, b has {b.shape[0]}")
    ncols = a.shape[1]
    aug, pivots = rref(np.hstack([a, b]), p)
    if pivots and pivots[-1] >= ncols:
        return None, kernel(a, p)
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for i, c in enumerate(pivots):
        x[c] = aug[i, ncols:]
    if single:
        x = x[:, 0]
    return x, kernel(a, p)


class Subspace:
    """A subspace of F^ambient held as a reduced row-echelon basis."""

    def __init__(self, basis: np.ndarray, ambient: int, p: int, pivots: list[int]):
        # Internal constructor; use from_rows/zero/full.
        self.basis = basis
        self.ambient = ambient
        self.p = p
        self.pivots = pivots

    @classmethod
    def from_rows(cls, rows: np.ndarray, ambient: int, p: int) -> "Subspace":
        rows = np.asarray(rows, dtype=np.int64)
        count = rows.size // ambient if ambient else 0
        rows = rows.reshape(count, ambient) % p
        r, pivots = rref(rows, p)
        return cls(r[: len(pivots)].copy(), ambient, p, pivots)

    @classmethod
    def zero(cls, ambient: int, p: int) -> "Subspace":
        return cls(np.zeros((0, ambient), dtype=np.int64), ambient, p, [])

    @classmethod
    def full(cls, ambient: int, p: int) -> "Subspace":
        return cls(np.eye(ambient, dtype=np.int64), ambient, p, list(range(ambient)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def reduce(self, vectors: np.ndarray) -> np.ndarray:
        """Residue of row vectors modulo this subspace (zero iff contained)."""
        v = np.asarray(vectors, dtype=np.int64) % self.p
        squeeze = v.ndim == 1
        rows = 1 if squeeze else v.shape[0] if v.ndim else 0
        v = v.reshape(rows, self.ambient)
        if self.dim:
            v = (v - v[:, self.pivots] @ self.basis) % self.p
        return v[0] if squeeze else v

    def contains_vector(self, v: np.ndarray) -> bool:
        return not self.reduce(v).any()

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return not self.reduce(other.basis).any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and other.ambient == self.ambient
            and other.p == self.p
            and np.array_equal(other.basis, self.basis)
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.p, self.basis.tobytes()))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, p={self.p})"

    def _check_compatible(self, other: "Subspace") -> None:
        if other.ambient != self.ambient or other.p != self.p:
            raise ValueError(
                f"ambient mismatch: ({self.ambient}, p={self.p}) vs "
                f"({other.ambient}, p={other.p})"
            )

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        rows = np.vstack([self.basis, other.basis])
        return Subspace.from_rows(rows, self.ambient, self.p)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.p)
        # (c, d) with c @ self.basis = d @ other.basis
        m = np.hstack([self.basis.T, (-other.basis.T) % self.p])
        combos = kernel(m, self.p)
        rows = combos.basis[:, : self.dim] @ self.basis
        return Subspace.from_rows(rows, self.ambient, self.p)

    def pivot_selector(self) -> np.ndarray:
        """ambient x dim matrix extracting coordinates: x @ sel = coefficients
        of x in self.basis, valid for x inside the subspace."""
        sel = np.zeros((self.ambient, self.dim), dtype=np.int64)
        for t, c in enumerate(self.pivots):
            sel[c, t] = 1
        return sel

    def quotient_maps(self) -> tuple[np.ndarray, np.ndarray]:
        """Coordinates on F^ambient / self.

        Returns (proj, section): proj is ambient x q, section is q x ambient,
        q = ambient - dim, and section @ proj is the identity on quotient
        coordinates.
        """
        d, p = self.ambient, self.p
        pivot_set = set(self.pivots)
        free = [j for j in range(d) if j not in pivot_set]
        proj = np.zeros((d, len(free)), dtype=np.int64)
        for i, c in enumerate(self.pivots):
            proj[c] = (-self.basis[i, free]) % p
        for t, f in enumerate(free):
            proj[f, t] = 1
        section = np.zeros((len(free), d), dtype=np.int64)
        for t, f in enumerate(free):
            section[t, f] = 1
        return proj, section


def subspace_sum(s: Subspace, t: Subspace) -> Subspace:
    return s.sum_with(t)


def subspace_intersection(s: Subspace, t: Subspace) -> Subspace:
    return s.intersect(t)


def quotient_basis_extension(s: Subspace) -> tuple[np.ndarray, np.ndarray]:
    return s.quotient_maps()


def complement_basis(top: Subspace, bot: Subspace) -> np.ndarray:
    """Reduced row-echelon basis of a complement of bot inside top.

    Requires bot <= top.  The rows, taken together with bot, span top; they
    are canonical given the two subspaces.
    """
    top._check_compatible(bot)
    if not top.contains(bot):
        raise ValueError("complement_basis requires bot <= top")
    reduced = bot.reduce(top.basis)
    r, pivots = rref(reduced, top.p)
    return r[: len(pivots)].copy()
