"""Exact linear algebra: matrices, canonical subspaces, linear maps.

Subspaces are always carried by a reduced row-echelon basis, which makes
subspace equality (and hence kernel/image/class comparisons everywhere
above this module) a plain data comparison.
"""
from __future__ import annotations

from .field import QQ


class Matrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = tuple(tuple(field.of(x) for x in row) for row in data)
        self.rows = len(self.data)
        if self.rows:
            self.cols = len(self.data[0])
        elif cols is not None:
            self.cols = cols
        else:
            self.cols = 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, field, cols, rows_count):
        return cls(field, [[c[i] for c in cols] for i in range(rows_count)],
                   cols=len(cols))

    def col(self, j):
        return tuple(row[j] for row in self.data)

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.cols)],
                      cols=self.rows)

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in +")
        return Matrix(self.field, [
            [a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)
        ], cols=self.cols)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.data],
                      cols=self.cols)

    def scale(self, c):
        c = self.field.of(c)
        return Matrix(self.field, [[c * a for a in row] for row in self.data],
                      cols=self.cols)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in @")
        z = self.field.zero
        # sparse-aware triple loop; coboundary matrices are mostly zero
        out = [[z] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.data):
            oi = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = other.data[k]
                for j, b in enumerate(brow):
                    if b:
                        oi[j] = oi[j] + a * b
        return Matrix(self.field, out, cols=other.cols)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        z = self.field.zero
        out = []
        for row in self.data:
            s = z
            for a, v in zip(row, vec):
                if a and v:
                    s = s + a * v
            out.append(s)
        return tuple(out)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.field, [r1 + r2 for r1, r2 in zip(self.data, other.data)],
                      cols=self.cols + other.cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("col mismatch in vstack")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def is_zero(self):
        return all(not a for row in self.data for a in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.data))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.data!r})"


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    top = a.hstack(Matrix.zero(a.field, a.rows, b.cols))
    bot = Matrix.zero(a.field, b.rows, a.cols).hstack(b)
    return top.vstack(bot)


def rref(m: Matrix):
    """Reduced row echelon form.  Returns (rref matrix, pivot column tuple)."""
    rows = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        if r >= nr:
            break
        pr = None
        for i in range(r, nr):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = m.field.one / rows[r][c]
        rows[r] = [inv * x for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(m.field, rows, cols=nc), tuple(pivots)


class Subspace:
    """Subspace of field^n carried by its canonical RREF basis (one row each)."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis: Matrix, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_rows(cls, field, ambient_dim, rows):
        m = Matrix(field, list(rows)) if rows else Matrix.zero(field, 0, ambient_dim)
        if m.cols != ambient_dim:
            raise ValueError("row length != ambient dimension")
        r, piv = rref(m)
        keep = [r.data[i] for i in range(len(piv))]
        return cls(field, ambient_dim, Matrix(field, keep) if keep
                   else Matrix.zero(field, 0, ambient_dim), piv)

    @classmethod
    def zero_space(cls, field, ambient_dim):
        return cls.from_rows(field, ambient_dim, [])

    @classmethod
    def full_space(cls, field, ambient_dim):
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim),
                   tuple(range(ambient_dim)))

    @property
    def dim(self):
        return self.basis.rows

    def reduce(self, vec):
        """Eliminate the pivot coordinates of vec; result is the canonical
        representative of vec modulo this subspace."""
        v = list(vec)
        for r, p in enumerate(self.pivots):
            if v[p]:
                f = v[p]
                row = self.basis.data[r]
                v = [x - f * y for x, y in zip(v, row)]
        return tuple(v)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def coordinates(self, vec):
        """Coefficients of vec in the RREF basis, or None if vec is outside."""
        coords = tuple(vec[p] for p in self.pivots)
        if any(self.reduce(vec)):
            return None
        return coords

    def contains_space(self, other: "Subspace"):
        return all(self.contains(row) for row in other.basis.data)

    def extended(self, vec):
        return Subspace.from_rows(self.field, self.ambient_dim,
                                  list(self.basis.data) + [tuple(vec)])

    def sum(self, other: "Subspace"):
        return Subspace.from_rows(self.field, self.ambient_dim,
                                  list(self.basis.data) + list(other.basis.data))

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


class LinearMap:
    """A linear map carried by a codomain_dim x domain_dim matrix."""

    __slots__ = ("matrix", "domain_dim", "codomain_dim")

    def __init__(self, matrix: Matrix):
        self.matrix = matrix
        self.domain_dim = matrix.cols
        self.codomain_dim = matrix.rows

    @classmethod
    def zero(cls, field, domain_dim, codomain_dim):
        return cls(Matrix.zero(field, codomain_dim, domain_dim))

    @classmethod
    def identity(cls, field, n):
        return cls(Matrix.identity(field, n))

    @property
    def field(self):
        return self.matrix.field

    def apply(self, vec):
        return self.matrix.apply(vec)

    def compose(self, other: "LinearMap"):
        """self after other."""
        return LinearMap(self.matrix @ other.matrix)

    def __neg__(self):
        return LinearMap(-self.matrix)

    def __eq__(self, other):
        return isinstance(other, LinearMap) and self.matrix == other.matrix

    def __repr__(self):
        return f"LinearMap({self.domain_dim} -> {self.codomain_dim})"


def kernel(f: LinearMap) -> Subspace:
    r, piv = rref(f.matrix)
    field = f.field
    free = [c for c in range(f.domain_dim) if c not in piv]
    rows = []
    for j in free:
        v = [field.zero] * f.domain_dim
        v[j] = field.one
        for rr, p in enumerate(piv):
            v[p] = -r.data[rr][j]
        rows.append(v)
    return Subspace.from_rows(field, f.domain_dim, rows)


def image(f: LinearMap) -> Subspace:
    return Subspace.from_rows(f.field, f.codomain_dim, list(f.matrix.transpose().data))


def rank(f: LinearMap) -> int:
    return image(f).dim


def quotient(ambient_dim: int, sub: Subspace):
    """Quotient of field^ambient_dim by sub.

    Returns (projection, section, dim) with projection . section = id on the
    quotient and kernel(projection) = sub.  The section embeds the quotient
    along the non-pivot coordinates of sub's RREF basis.
    """
    if sub.ambient_dim != ambient_dim:
        raise ValueError("subspace ambient dimension mismatch")
    field = sub.field
    free = [c for c in range(ambient_dim) if c not in sub.pivots]
    qdim = len(free)
    proj_rows = []
    for fcol in free:
        row = []
        for i in range(ambient_dim):
            e = [field.zero] * ambient_dim
            e[i] = field.one
            row.append(sub.reduce(e)[fcol])
        proj_rows.append(row)
    proj = LinearMap(Matrix(field, proj_rows) if qdim
                     else Matrix.zero(field, 0, ambient_dim))
    sect_cols = []
    for fcol in free:
        e = [field.zero] * ambient_dim
        e[fcol] = field.one
        sect_cols.append(e)
    sect = LinearMap(Matrix.from_cols(field, sect_cols, ambient_dim))
    return proj, sect, qdim


def solve(f: LinearMap, target):
    """A vector v with f(v) = target exactly, or None if target is not in
    the image of f."""
    if len(target) != f.codomain_dim:
        raise ValueError("target length mismatch")
    field = f.field
    aug = f.matrix.hstack(Matrix.from_cols(field, [list(target)], f.codomain_dim))
    r, piv = rref(aug)
    n = f.domain_dim
    if n in piv:
        return None
    x = [field.zero] * n
    for rr, p in enumerate(piv):
        x[p] = r.data[rr][n]
    return tuple(x)


def solve_matrix(f: LinearMap, targets: Matrix):
    """Columnwise solve: a matrix X with f.matrix @ X = targets, or None."""
    cols = []
    for j in range(targets.cols):
        x = solve(f, targets.col(j))
        if x is None:
            return None
        cols.append(list(x))
    return Matrix.from_cols(f.field, cols, f.domain_dim)


def linear_section(f: LinearMap) -> LinearMap:
    """A map q with f . q = id on image(f), chosen by pivot preimages.

    q is defined on the whole codomain: a codomain vector is first written in
    the RREF basis of image(f) by reading off pivot coordinates.
    """
    im = image(f)
    field = f.field
    preimages = []
    for row in im.basis.data:
        v = solve(f, row)
        preimages.append(v)
    cols = []
    for i in range(f.codomain_dim):
        e = [field.zero] * f.codomain_dim
        e[i] = field.one
        acc = [field.zero] * f.domain_dim
        for r, p in enumerate(im.pivots):
            c = e[p]
            if c:
                acc = [a + c * b for a, b in zip(acc, preimages[r])]
        cols.append(acc)
    return LinearMap(Matrix.from_cols(field, cols, f.domain_dim))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def vec_zero(field, n):
    return (field.zero,) * n


def vec_is_zero(v):
    return not any(v)


def basis_vector(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)
