"""Exact sparse linear algebra over the scalar fraction field.

Vectors are sparse ``{index: Scalar}`` dicts; matrices store their columns
(column j = image of the j-th standard basis vector).  Everything is exact;
ranks, kernels and restrictions never involve floating point.
"""

from __future__ import annotations

from .scalars import Scalar

__all__ = [
    "Vec",
    "vec_add",
    "vec_axpy",
    "vec_scale",
    "Matrix",
    "Subspace",
    "nullspace",
    "column_space",
    "restrict_operator",
    "eigenspace",
    "generalized_eigenspace",
]

Vec = dict[int, Scalar]


def vec_scale(v: Vec, c: Scalar) -> Vec:
    if c.is_zero():
        return {}
    return {i: x * c for i, x in v.items()}


def vec_axpy(target: Vec, v: Vec, c: Scalar) -> None:
    """target += c * v, in place."""
    if c.is_zero():
        return
    for i, x in v.items():
        cur = target.get(i)
        s = x * c if cur is None else cur + x * c
        if s.is_zero():
            target.pop(i, None)
        else:
            target[i] = s


def vec_add(a: Vec, b: Vec) -> Vec:
    out = dict(a)
    for i, x in b.items():
        cur = out.get(i)
        s = x if cur is None else cur + x
        if s.is_zero():
            out.pop(i, None)
        else:
            out[i] = s
    return out


class Matrix:
    """A sparse matrix given by its columns."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: list[Vec]):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        return Matrix(nrows, ncols, [{} for _ in range(ncols)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [{i: Scalar.one()} for i in range(n)])

    @staticmethod
    def scalar(n: int, c: Scalar) -> "Matrix":
        c = Scalar.of(c)
        if c.is_zero():
            return Matrix.zeros(n, n)
        return Matrix(n, n, [{i: c} for i in range(n)])

    @staticmethod
    def from_entries(nrows: int, ncols: int, entries: dict[tuple[int, int], Scalar]) -> "Matrix":
        cols: list[Vec] = [{} for _ in range(ncols)]
        for (i, j), c in entries.items():
            if not c.is_zero():
                cols[j][i] = c
        return Matrix(nrows, ncols, cols)

    def entry(self, i: int, j: int) -> Scalar:
        return self.cols[j].get(i, Scalar.zero())

    def matvec(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, c in v.items():
            vec_axpy(out, self.cols[j], c)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("matrix shape mismatch")
        return Matrix(self.nrows, other.ncols,
                      [self.matvec(c) for c in other.cols])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(self.nrows, self.ncols,
                      [vec_add(a, b) for a, b in zip(self.cols, other.cols)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols,
                      [{i: -c for i, c in col.items()} for col in self.cols])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def smul(self, c) -> "Matrix":
        c = Scalar.of(c)
        return Matrix(self.nrows, self.ncols,
                      [vec_scale(col, c) for col in self.cols])

    def power(self, m: int) -> "Matrix":
        out = Matrix.identity(self.nrows)
        for _ in range(m):
            out = out @ self
        return out

    def trace(self) -> Scalar:
        t = Scalar.zero()
        for j in range(min(self.nrows, self.ncols)):
            c = self.cols[j].get(j)
            if c is not None:
                t = t + c
        return t

    def is_zero(self) -> bool:
        return all(not col for col in self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all((not (a.keys() ^ b.keys()))
                   and all(a[k] == b[k] for k in a)
                   for a, b in zip(self.cols, other.cols))

    __hash__ = None

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; composite row index i*other.nrows + i2."""
        nr = self.nrows * other.nrows
        nc = self.ncols * other.ncols
        cols: list[Vec] = []
        for j1 in range(self.ncols):
            c1 = self.cols[j1]
            for j2 in range(other.ncols):
                c2 = other.cols[j2]
                col: Vec = {}
                for i1, v1 in c1.items():
                    for i2, v2 in c2.items():
                        col[i1 * other.nrows + i2] = v1 * v2
                cols.append(col)
        return Matrix(nr, nc, cols)

    def evaluate_poly(self, coeffs: list[Scalar]) -> "Matrix":
        """sum_k coeffs[k] * self^k."""
        out = Matrix.zeros(self.nrows, self.ncols)
        p = Matrix.identity(self.nrows)
        for k, c in enumerate(coeffs):
            if k:
                p = p @ self
            if not Scalar.of(c).is_zero():
                out = out + p.smul(c)
        return out

    def dense(self) -> list[list[Scalar]]:
        return [[self.entry(i, j) for j in range(self.ncols)]
                for i in range(self.nrows)]

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols})"


def direct_sum_matrices(mats: list[Matrix]) -> Matrix:
    nr = sum(m.nrows for m in mats)
    nc = sum(m.ncols for m in mats)
    cols: list[Vec] = []
    roff = 0
    for m in mats:
        for col in m.cols:
            cols.append({i + roff: c for i, c in col.items()})
        roff += m.nrows
    return Matrix(nr, nc, cols)


class Subspace:
    """Row-reduced spanning set with pivot bookkeeping.  The stored basis
    vectors are in reduced echelon form (each pivot coordinate 1, cleared
    from the other basis vectors)."""

    def __init__(self, vectors=None):
        self.rows: list[Vec] = []
        self.pivots: dict[int, int] = {}
        for v in vectors or []:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vec) -> tuple[Vec, Vec]:
        """Return (residual, coords): v = residual + sum coords[i]*rows[i]."""
        res = dict(v)
        coords: Vec = {}
        for p, idx in self.pivots.items():
            c = res.get(p)
            if c is not None:
                coords[idx] = c
                vec_axpy(res, self.rows[idx], -c)
        return res, coords

    def add(self, v: Vec) -> bool:
        """Insert a vector; True if it enlarged the span."""
        res, _ = self.reduce(v)
        if not res:
            return False
        p = min(res)
        f = res[p].inv()
        newrow = vec_scale(res, f)
        idx = len(self.rows)
        # clear the new pivot from existing rows
        for row in self.rows:
            c = row.get(p)
            if c is not None:
                vec_axpy(row, newrow, -c)
        self.rows.append(newrow)
        self.pivots[p] = idx
        return True

    def contains(self, v: Vec) -> bool:
        res, _ = self.reduce(v)
        return not res

    def basis(self) -> list[Vec]:
        return [dict(r) for r in self.rows]


def column_space(m: Matrix) -> Subspace:
    return Subspace(m.cols)


def nullspace(m: Matrix) -> list[Vec]:
    """Kernel basis of m (vectors over column indices)."""
    reduced: list[tuple[int, Vec, Vec]] = []
    kernel: list[Vec] = []
    for j in range(m.ncols):
        v = dict(m.cols[j])
        a: Vec = {j: Scalar.one()}
        for p, rv, ra in reduced:
            c = v.get(p)
            if c is not None:
                vec_axpy(v, rv, -c)
                vec_axpy(a, ra, -c)
        if not v:
            kernel.append(a)
        else:
            p = min(v)
            f = v[p].inv()
            v = vec_scale(v, f)
            a = vec_scale(a, f)
            reduced.append((p, v, a))
    return kernel


def restrict_operator(mat: Matrix, sub: Subspace) -> Matrix:
    """The operator in the subspace's reduced basis; raises if the subspace
    is not invariant."""
    cols = []
    for b in sub.rows:
        img = mat.matvec(b)
        res, coords = sub.reduce(img)
        if res:
            raise ValueError("subspace is not invariant under the operator")
        cols.append(coords)
    return Matrix(sub.dim, sub.dim, cols)


def eigenspace(mat: Matrix, value: Scalar) -> list[Vec]:
    return nullspace(mat - Matrix.scalar(mat.nrows, value))


def generalized_eigenspace(mat: Matrix, value: Scalar) -> list[Vec]:
    """Kernel of (mat - value)^N for stabilizing N <= dim."""
    m = mat - Matrix.scalar(mat.nrows, value)
    p = m
    prev = -1
    ker = nullspace(p)
    while len(ker) > prev and len(ker) < mat.nrows:
        prev = len(ker)
        p = p @ m
        ker = nullspace(p)
    return ker
