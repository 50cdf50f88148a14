"""Lie and Leibniz algebras by structure constants, and their modules.

Structure constants are stored fully (all i, j) and the symmetry axioms are
validated, not implied by storage; this lets Lie and Leibniz algebras share
one representation.
"""
from __future__ import annotations

from .errors import CheckFailure
from .linalg import Matrix, LinearMap, block_diag, vec_add, vec_scale, vec_zero


def _coerce_structure(field, dim, structure):
    """structure[i][j] is the coefficient vector of the bracket of e_i, e_j."""
    out = []
    for i in range(dim):
        row = []
        for j in range(dim):
            row.append(tuple(field.of(x) for x in structure[i][j]))
            if len(row[-1]) != dim:
                raise ValueError("structure constant vector of wrong length")
        out.append(tuple(row))
    return tuple(out)


class _AlgebraBase:
    __slots__ = ("field", "dim", "c")

    def bracket(self, u, v):
        field = self.field
        out = [field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                coef = a * b
                for k, s in enumerate(self.c[i][j]):
                    if s:
                        out[k] = out[k] + coef * s
        return tuple(out)

    def basis_bracket(self, i, j):
        return self.c[i][j]

    def __eq__(self, other):
        return (type(self) is type(other) and self.field == other.field
                and self.c == other.c)

    def __hash__(self):
        return hash((type(self).__name__, self.c))


class LieAlgebra(_AlgebraBase):
    flavor = "lie"

    def __init__(self, field, dim, structure):
        self.field = field
        self.dim = dim
        self.c = _coerce_structure(field, dim, structure)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, field={self.field!r})"


class LeibnizAlgebra(_AlgebraBase):
    flavor = "leibniz"

    def __init__(self, field, dim, structure):
        self.field = field
        self.dim = dim
        self.c = _coerce_structure(field, dim, structure)

    def __repr__(self):
        return f"LeibnizAlgebra(dim={self.dim}, field={self.field!r})"


def validate_lie(field, dim, structure) -> LieAlgebra:
    """Check antisymmetry and the Jacobi identity on all basis triples."""
    g = LieAlgebra(field, dim, structure)
    for i in range(dim):
        for j in range(dim):
            lhs = g.c[i][j]
            rhs = tuple(-x for x in g.c[j][i])
            if lhs != rhs:
                raise CheckFailure("ANTISYM_FAIL", (i, j))
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                # [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0
                acc = [field.zero] * dim
                for (a, b, cidx) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = g.c[a][b]
                    for m, coef in enumerate(inner):
                        if coef:
                            for t, s in enumerate(g.c[m][cidx]):
                                if s:
                                    acc[t] = acc[t] + coef * s
                if any(acc):
                    raise CheckFailure("JACOBI_FAIL", (i, j, k))
    return g


def validate_leibniz(field, dim, structure) -> LeibnizAlgebra:
    """Check the right Leibniz identity [x,[y,z]] = [[x,y],z] - [[x,z],y]."""
    h = LeibnizAlgebra(field, dim, structure)
    e = [tuple(field.one if t == s else field.zero for t in range(dim))
         for s in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                lhs = h.bracket(e[i], h.c[j][k])
                rhs1 = h.bracket(h.c[i][j], e[k])
                rhs2 = h.bracket(h.c[i][k], e[j])
                if lhs != tuple(a - b for a, b in zip(rhs1, rhs2)):
                    raise CheckFailure("LEIBNIZ_FAIL", (i, j, k))
    return h


class Representation:
    """A module over a Lie algebra: one action matrix per basis vector."""

    __slots__ = ("algebra", "dim", "action")

    def __init__(self, algebra: LieAlgebra, dim: int, action):
        self.algebra = algebra
        self.dim = dim
        self.action = tuple(action)
        if len(self.action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis vector")
        for m in self.action:
            if m.rows != dim or m.cols != dim:
                raise ValueError("action matrix of wrong shape")

    def act_basis(self, i, mvec):
        return self.action[i].apply(mvec)

    def act(self, xvec, mvec):
        out = vec_zero(self.algebra.field, self.dim)
        for i, a in enumerate(xvec):
            if a:
                out = vec_add(out, vec_scale(a, self.action[i].apply(mvec)))
        return out

    def action_of(self, xvec) -> Matrix:
        field = self.algebra.field
        out = Matrix.zero(field, self.dim, self.dim)
        for i, a in enumerate(xvec):
            if a:
                out = out + self.action[i].scale(a)
        return out

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.algebra == other.algebra
                and self.action == other.action)

    def __repr__(self):
        return f"Representation(dim={self.dim} over dim-{self.algebra.dim} algebra)"


def trivial_rep(algebra, dim) -> "Representation | LeibnizRepresentation":
    field = algebra.field
    zeros = [Matrix.zero(field, dim, dim) for _ in range(algebra.dim)]
    if algebra.flavor == "leibniz":
        return LeibnizRepresentation(algebra, dim, zeros, list(zeros))
    return Representation(algebra, dim, zeros)


def validate_module(rep: Representation) -> Representation:
    """Check rho([ei,ej]) = rho(ei)rho(ej) - rho(ej)rho(ei) on all pairs."""
    g = rep.algebra
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = rep.action_of(g.c[i][j])
            rhs = rep.action[i] @ rep.action[j] - rep.action[j] @ rep.action[i]
            if lhs != rhs:
                raise CheckFailure("MODULE_AXIOM_FAIL", (i, j))
    return rep


def adjoint(g: LieAlgebra) -> Representation:
    """g acting on itself by the bracket; column j of the matrix of e_i is
    the bracket of e_i with e_j."""
    field = g.field
    mats = []
    for i in range(g.dim):
        cols = [list(g.c[i][j]) for j in range(g.dim)]
        mats.append(Matrix.from_cols(field, cols, g.dim))
    return Representation(g, g.dim, mats)


class LeibnizRepresentation:
    """A module over a Leibniz algebra: left and right action families."""

    __slots__ = ("algebra", "dim", "left", "right")

    def __init__(self, algebra: LeibnizAlgebra, dim: int, left, right):
        self.algebra = algebra
        self.dim = dim
        self.left = tuple(left)
        self.right = tuple(right)
        if len(self.left) != algebra.dim or len(self.right) != algebra.dim:
            raise ValueError("need one left and one right matrix per basis vector")
        for m in self.left + self.right:
            if m.rows != dim or m.cols != dim:
                raise ValueError("action matrix of wrong shape")

    def left_of(self, xvec) -> Matrix:
        field = self.algebra.field
        out = Matrix.zero(field, self.dim, self.dim)
        for i, a in enumerate(xvec):
            if a:
                out = out + self.left[i].scale(a)
        return out

    def right_of(self, xvec) -> Matrix:
        field = self.algebra.field
        out = Matrix.zero(field, self.dim, self.dim)
        for i, a in enumerate(xvec):
            if a:
                out = out + self.right[i].scale(a)
        return out

    def act_left(self, xvec, mvec):
        return self.left_of(xvec).apply(mvec)

    def act_right(self, mvec, xvec):
        return self.right_of(xvec).apply(mvec)

    def __eq__(self, other):
        return (isinstance(other, LeibnizRepresentation)
                and self.algebra == other.algebra
                and self.left == other.left and self.right == other.right)

    def __repr__(self):
        return f"LeibnizRepresentation(dim={self.dim})"


def validate_leibniz_module(rep: LeibnizRepresentation) -> LeibnizRepresentation:
    """The three mixed Leibniz identities, one module slot at a time.

    With L_i, R_i the left/right matrices and c the structure constants:
      slot z:  L_i L_j = L_[ij] - R_j L_i
      slot y:  L_i R_j = R_j L_i - L_[ij]
      slot x:  R_[jk]  = R_k R_j - R_j R_k
    """
    h = rep.algebra
    for i in range(h.dim):
        for j in range(h.dim):
            lb = rep.left_of(h.c[i][j])
            if rep.left[i] @ rep.left[j] != lb - rep.right[j] @ rep.left[i]:
                raise CheckFailure("MODULE_AXIOM_FAIL", (i, j), "slot z")
            if rep.left[i] @ rep.right[j] != rep.right[j] @ rep.left[i] - lb:
                raise CheckFailure("MODULE_AXIOM_FAIL", (i, j), "slot y")
            rb = rep.right_of(h.c[i][j])
            if rb != rep.right[j] @ rep.right[i] - rep.right[i] @ rep.right[j]:
                raise CheckFailure("MODULE_AXIOM_FAIL", (i, j), "slot x")
    return rep


def leibniz_adjoint(h: LeibnizAlgebra) -> LeibnizRepresentation:
    field = h.field
    left = []
    right = []
    for i in range(h.dim):
        left.append(Matrix.from_cols(field, [list(h.c[i][j]) for j in range(h.dim)],
                                     h.dim))
        right.append(Matrix.from_cols(field, [list(h.c[j][i]) for j in range(h.dim)],
                                      h.dim))
    return LeibnizRepresentation(h, h.dim, left, right)


def leibniz_from_lie(g: LieAlgebra) -> LeibnizAlgebra:
    """Every Lie algebra is a Leibniz algebra with the same constants."""
    return LeibnizAlgebra(g.field, g.dim, g.c)


def leibniz_rep_from_lie(rep: Representation,
                         h: LeibnizAlgebra | None = None) -> LeibnizRepresentation:
    """A Lie module (rho) becomes a Leibniz module with left rho, right -rho."""
    h = h or leibniz_from_lie(rep.algebra)
    return LeibnizRepresentation(h, rep.dim, rep.action,
                                 [-m for m in rep.action])


class ModuleMorphism:
    """An equivariant linear map between modules over the same algebra."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, matrix: Matrix):
        self.source = source
        self.target = target
        self.map = LinearMap(matrix)
        if matrix.cols != source.dim or matrix.rows != target.dim:
            raise ValueError("morphism matrix of wrong shape")

    @property
    def matrix(self):
        return self.map.matrix

    def apply(self, vec):
        return self.map.apply(vec)

    def __repr__(self):
        return f"ModuleMorphism({self.source.dim} -> {self.target.dim})"


def validate_morphism(phi: ModuleMorphism) -> ModuleMorphism:
    if phi.source.algebra != phi.target.algebra:
        raise CheckFailure("BASE_MISMATCH", detail="morphism across different algebras")
    alg = phi.source.algebra
    if alg.flavor == "leibniz":
        for i in range(alg.dim):
            if phi.matrix @ phi.source.left[i] != phi.target.left[i] @ phi.matrix:
                raise CheckFailure("EQUIVARIANCE_FAIL", (i,), "left action")
            if phi.matrix @ phi.source.right[i] != phi.target.right[i] @ phi.matrix:
                raise CheckFailure("EQUIVARIANCE_FAIL", (i,), "right action")
    else:
        for i in range(alg.dim):
            if phi.matrix @ phi.source.action[i] != phi.target.action[i] @ phi.matrix:
                raise CheckFailure("EQUIVARIANCE_FAIL", (i,))
    return phi


def direct_sum_reps(a: Representation, b: Representation) -> Representation:
    if a.algebra != b.algebra:
        raise CheckFailure("BASE_MISMATCH", detail="direct sum over different algebras")
    mats = [block_diag(x, y) for x, y in zip(a.action, b.action)]
    return Representation(a.algebra, a.dim + b.dim, mats)
