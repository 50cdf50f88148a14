"""Chevalley-Eilenberg and Leibniz cochain complexes and their cohomology.

Cochain bases are ordered lexicographically: increasing index tuples for the
alternating (CE) complex, all index tuples for the Leibniz complex, with the
module basis running fastest.  This fixes every coboundary matrix bit for bit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CheckFailure
from .linalg import (LinearMap, Matrix, Subspace, image, kernel, solve,
                     vec_add, vec_scale, vec_sub, vec_zero)
from .algebra import (LeibnizRepresentation, ModuleMorphism, Representation,
                      validate_morphism)

CE = "ce"
LEIBNIZ = "leibniz"


def ce_tuples(dim: int, n: int):
    return tuple(itertools.combinations(range(dim), n))

def leib_tuples(dim: int, n: int):
    return tuple(itertools.product(range(dim), repeat=n))

def cochain_tuples(flavor: str, dim: int, n: int):
    return ce_tuples(dim, n) if flavor == CE else leib_tuples(dim, n)


def sort_with_sign(t):
    """Sort an index tuple, tracking the sign of the permutation.
    Returns (None, 0) when an index repeats."""
    t = list(t)
    sign = 1
    for i in range(1, len(t)):
        j = i
        while j > 0 and t[j - 1] > t[j]:
            t[j - 1], t[j] = t[j], t[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(t, t[1:]):
        if a == b:
            return None, 0
    return tuple(t), sign


def _flavor_of_module(module) -> str:
    return LEIBNIZ if isinstance(module, LeibnizRepresentation) else CE


@dataclass(frozen=True)
class Cochain:
    """Degree-n cochain with values in a module, stored as one flat vector."""

    flavor: str
    degree: int
    module: object
    vec: tuple

    def __post_init__(self):
        expected = len(self.tuples()) * self.module.dim
        if len(self.vec) != expected:
            raise ValueError(f"cochain vector has length {len(self.vec)}, want {expected}")

    @property
    def algebra(self):
        return self.module.algebra

    def tuples(self):
        return cochain_tuples(self.flavor, self.algebra.dim, self.degree)

    def value(self, t):
        idx = self.tuples().index(tuple(t))
        m = self.module.dim
        return self.vec[idx * m:(idx + 1) * m]

    def value_signed(self, t):
        """Value on an arbitrary index tuple, extended alternately (CE only)."""
        if self.flavor != CE:
            return self.value(t)
        st, sign = sort_with_sign(t)
        if st is None:
            return vec_zero(self.algebra.field, self.module.dim)
        v = self.value(st)
        return v if sign == 1 else tuple(-x for x in v)

    def __add__(self, other):
        self._check_like(other)
        return Cochain(self.flavor, self.degree, self.module,
                       vec_add(self.vec, other.vec))

    def __sub__(self, other):
        self._check_like(other)
        return Cochain(self.flavor, self.degree, self.module,
                       vec_sub(self.vec, other.vec))

    def __neg__(self):
        return Cochain(self.flavor, self.degree, self.module,
                       tuple(-x for x in self.vec))

    def _check_like(self, other):
        if (self.flavor, self.degree, self.module.dim) != \
                (other.flavor, other.degree, other.module.dim):
            raise ValueError("cochain shape mismatch")

    def is_zero(self):
        return not any(self.vec)


def cochain_from_values(flavor, module, degree, value_of) -> Cochain:
    """Assemble a cochain from a function mapping basis index tuples to
    module vectors."""
    vec = []
    for t in cochain_tuples(flavor, module.algebra.dim, degree):
        v = tuple(value_of(t))
        if len(v) != module.dim:
            raise ValueError("value of wrong length")
        vec.extend(v)
    return Cochain(flavor, degree, module, tuple(vec))


def zero_cochain(flavor, module, degree) -> Cochain:
    n = len(cochain_tuples(flavor, module.algebra.dim, degree)) * module.dim
    return Cochain(flavor, degree, module, vec_zero(module.algebra.field, n))


def ce_coboundary_matrix(g, M: Representation, n: int) -> LinearMap:
    """Matrix of the CE coboundary C^n -> C^{n+1} on the increasing-tuple basis.

    First sum: signed module action terms; second sum: bracket insertion in
    the first slot, resorted into increasing order.  Degree 0 is the map
    m -> (x -> [x, m]).
    """
    field = g.field
    m = M.dim
    ins = ce_tuples(g.dim, n)
    outs = ce_tuples(g.dim, n + 1)
    tindex = {t: i for i, t in enumerate(ins)}
    grid = [[field.zero] * (len(ins) * m) for _ in range(len(outs) * m)]
    for sidx, S in enumerate(outs):
        for pos in range(n + 1):
            rest = S[:pos] + S[pos + 1:]
            cidx = tindex[rest]
            sign = 1 if pos % 2 == 0 else -1  # (-1)^{i+1}, i = pos+1
            act = M.action[S[pos]]
            for a in range(m):
                row = grid[sidx * m + a]
                arow = act.data[a]
                for b in range(m):
                    if arow[b]:
                        row[cidx * m + b] = row[cidx * m + b] + sign * arow[b]
        for pa in range(n + 1):
            for pb in range(pa + 1, n + 1):
                u = g.c[S[pa]][S[pb]]
                rest = tuple(S[t] for t in range(n + 1) if t not in (pa, pb))
                pair_sign = 1 if (pa + pb) % 2 == 0 else -1  # (-1)^{i+j}
                for k, coef in enumerate(u):
                    if not coef:
                        continue
                    merged, ssign = sort_with_sign((k,) + rest)
                    if merged is None:
                        continue
                    cidx = tindex[merged]
                    total = pair_sign * ssign
                    for a in range(m):
                        row = grid[sidx * m + a]
                        row[cidx * m + a] = row[cidx * m + a] + total * coef
    return LinearMap(Matrix(field, grid, cols=len(ins) * m))


def leibniz_coboundary_matrix(h, M: LeibnizRepresentation, n: int) -> LinearMap:
    """Matrix of the Leibniz coboundary C^n -> C^{n+1} on the tensor basis.

    Terms: left action on the first argument, signed right actions, and
    bracket substitution into the earlier slot.
    """
    field = h.field
    m = M.dim
    ins = leib_tuples(h.dim, n)
    outs = leib_tuples(h.dim, n + 1)
    tindex = {t: i for i, t in enumerate(ins)}
    grid = [[field.zero] * (len(ins) * m) for _ in range(len(outs) * m)]

    def add_block(sidx, cidx, mat, sign):
        for a in range(m):
            row = grid[sidx * m + a]
            arow = mat.data[a]
            for b in range(m):
                if arow[b]:
                    row[cidx * m + b] = row[cidx * m + b] + sign * arow[b]

    def add_scalar(sidx, cidx, coef, sign):
        for a in range(m):
            row = grid[sidx * m + a]
            row[cidx * m + a] = row[cidx * m + a] + sign * coef

    for sidx, S in enumerate(outs):
        add_block(sidx, tindex[S[1:]], M.left[S[0]], 1)
        for pos in range(1, n + 1):
            rest = S[:pos] + S[pos + 1:]
            sign = 1 if (pos + 1) % 2 == 0 else -1  # (-1)^i, i = pos+1
            add_block(sidx, tindex[rest], M.right[S[pos]], sign)
        for pa in range(n + 1):
            for pb in range(pa + 1, n + 1):
                u = h.c[S[pa]][S[pb]]
                sign = 1 if pb % 2 == 0 else -1  # (-1)^{j+1}, j = pb+1
                for k, coef in enumerate(u):
                    if not coef:
                        continue
                    merged = S[:pa] + (k,) + S[pa + 1:pb] + S[pb + 1:]
                    add_scalar(sidx, tindex[merged], coef, sign)
    return LinearMap(Matrix(field, grid, cols=len(ins) * m))


def coboundary_matrix(flavor, algebra, M, n) -> LinearMap:
    if flavor == CE:
        return ce_coboundary_matrix(algebra, M, n)
    return leibniz_coboundary_matrix(algebra, M, n)


def coboundary(z: Cochain) -> Cochain:
    d = coboundary_matrix(z.flavor, z.algebra, z.module, z.degree)
    return Cochain(z.flavor, z.degree + 1, z.module, d.apply(z.vec))


@dataclass(frozen=True)
class CohomologyClass:
    """A cohomology class with its canonical reduced representative.

    canonical is the representative vector reduced against the RREF basis of
    the coboundary image; two classes agree iff their canonicals agree.
    """

    flavor: str
    degree: int
    module: object
    representative: Cochain
    coboundary_space: Subspace
    canonical: tuple

    def is_zero(self):
        return not any(self.canonical)

    def __add__(self, other):
        self._check_like(other)
        return CohomologyClass(self.flavor, self.degree, self.module,
                               self.representative + other.representative,
                               self.coboundary_space,
                               vec_add(self.canonical, other.canonical))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CohomologyClass(self.flavor, self.degree, self.module,
                               -self.representative, self.coboundary_space,
                               tuple(-x for x in self.canonical))

    def _check_like(self, other):
        if (self.flavor, self.degree, self.module.dim) != \
                (other.flavor, other.degree, other.module.dim):
            raise ValueError("class shape mismatch")

    def __eq__(self, other):
        return (isinstance(other, CohomologyClass)
                and self.flavor == other.flavor and self.degree == other.degree
                and self.canonical == other.canonical)

    def __hash__(self):
        return hash((self.flavor, self.degree, self.canonical))


def class_of(z: Cochain) -> CohomologyClass:
    """Cohomology class of a cocycle; raises NOT_A_COCYCLE otherwise."""
    d_n = coboundary_matrix(z.flavor, z.algebra, z.module, z.degree)
    if any(d_n.apply(z.vec)):
        raise CheckFailure("NOT_A_COCYCLE", detail=f"degree {z.degree}")
    if z.degree == 0:
        b = Subspace.zero_space(z.algebra.field, len(z.vec))
    else:
        b = image(coboundary_matrix(z.flavor, z.algebra, z.module, z.degree - 1))
    return CohomologyClass(z.flavor, z.degree, z.module, z, b, b.reduce(z.vec))


def cohomology(algebra, M, n: int, flavor: str | None = None):
    """Dimension of H^n and a basis of classes with cocycle representatives."""
    flavor = flavor or _flavor_of_module(M)
    d_n = coboundary_matrix(flavor, algebra, M, n)
    z = kernel(d_n)
    if n == 0:
        b = Subspace.zero_space(algebra.field, d_n.domain_dim)
    else:
        b = image(coboundary_matrix(flavor, algebra, M, n - 1))
    classes = []
    acc = b
    for row in z.basis.data:
        red = acc.reduce(row)
        if any(red):
            rep = Cochain(flavor, n, M, tuple(row))
            classes.append(CohomologyClass(flavor, n, M, rep, b, b.reduce(row)))
            acc = acc.extended(row)
    dim_h = z.dim - b.dim
    assert dim_h == len(classes)
    return dim_h, classes


def cohomology_table(algebra, M, max_degree: int, flavor: str | None = None):
    """Rows (degree, dim C^n, rank delta_n, dim H^n) for n = 0..max_degree."""
    flavor = flavor or _flavor_of_module(M)
    rows = []
    prev_rank = 0
    for n in range(max_degree + 1):
        d_n = coboundary_matrix(flavor, algebra, M, n)
        dim_c = d_n.domain_dim
        rank_n = image(d_n).dim
        rows.append((n, dim_c, rank_n, dim_c - rank_n - prev_rank))
        prev_rank = rank_n
    return rows


def h0_invariants(algebra, M) -> Subspace:
    """Kernel of the stacked action matrices: {m | [x, m] = 0 for all x}."""
    field = algebra.field
    mats = M.left if isinstance(M, LeibnizRepresentation) else M.action
    stacked = Matrix.zero(field, 0, M.dim)
    for a in mats:
        stacked = stacked.vstack(a)
    return kernel(LinearMap(stacked))


def coboundary_witness(z: Cochain) -> Cochain | None:
    """A cochain b with delta(b) = z when [z] = 0; None when the class is
    nontrivial.  Raises NOT_A_COCYCLE when z is not closed."""
    d_n = coboundary_matrix(z.flavor, z.algebra, z.module, z.degree)
    if any(d_n.apply(z.vec)):
        raise CheckFailure("NOT_A_COCYCLE", detail=f"degree {z.degree}")
    if z.degree == 0:
        return None if any(z.vec) else z
    d_prev = coboundary_matrix(z.flavor, z.algebra, z.module, z.degree - 1)
    sol = solve(d_prev, z.vec)
    if sol is None:
        return None
    return Cochain(z.flavor, z.degree - 1, z.module, sol)


@dataclass(frozen=True)
class ShortExactSequence:
    """0 -> M -> M' -> M'' -> 0 of modules over one algebra."""

    alpha: ModuleMorphism
    beta: ModuleMorphism

    @property
    def head(self):
        return self.alpha.source

    @property
    def middle(self):
        return self.alpha.target

    @property
    def tail(self):
        return self.beta.target


def validate_ses(ses: ShortExactSequence) -> ShortExactSequence:
    validate_morphism(ses.alpha)
    validate_morphism(ses.beta)
    if ses.alpha.target is not ses.beta.source and ses.alpha.target != ses.beta.source:
        raise CheckFailure("BASE_MISMATCH", detail="middle modules differ")
    if kernel(ses.alpha.map).dim != 0:
        raise CheckFailure("EXACTNESS_FAIL", "head", "alpha is not injective")
    if image(ses.beta.map).dim != ses.tail.dim:
        raise CheckFailure("EXACTNESS_FAIL", "tail", "beta is not surjective")
    if image(ses.alpha.map) != kernel(ses.beta.map):
        raise CheckFailure("EXACTNESS_FAIL", "middle", "im(alpha) != ker(beta)")
    return ses


def map_coefficients(phi: ModuleMorphism, z: Cochain) -> Cochain:
    """Push a cochain forward along a module morphism on coefficients."""
    if z.module.dim != phi.source.dim:
        raise ValueError("cochain module mismatch")
    return cochain_from_values(z.flavor, phi.target, z.degree,
                               lambda t: phi.apply(z.value(t)))


def map_class(phi: ModuleMorphism, c: CohomologyClass) -> CohomologyClass:
    return class_of(map_coefficients(phi, c.representative))


def connecting_hom(ses: ShortExactSequence, c: CohomologyClass,
                   lift_rng=None) -> CohomologyClass:
    """Cochain-level snake lemma: lift a representative through beta, apply
    the coboundary in the middle module, pull back through alpha.

    lift_rng, when given, perturbs each lift by a random kernel(beta) element;
    the resulting class must not change (checked by property tests).
    """
    if c.module.dim != ses.tail.dim:
        raise ValueError("class is not valued in the sequence tail")
    flavor, n = c.flavor, c.degree
    algebra = ses.head.algebra
    ker_beta = kernel(ses.beta.map)
    lifted = []
    for t in cochain_tuples(flavor, algebra.dim, n):
        v = solve(ses.beta.map, c.representative.value(t))
        if v is None:
            raise CheckFailure("EXACTNESS_FAIL", "tail", "beta is not surjective")
        if lift_rng is not None and ker_beta.dim:
            coefs = [algebra.field.of(lift_rng.randint(-3, 3))
                     for _ in range(ker_beta.dim)]
            for coef, row in zip(coefs, ker_beta.basis.data):
                v = vec_add(v, vec_scale(coef, row))
        lifted.append(v)
    lift = cochain_from_values(flavor, ses.middle, n,
                               lambda t, _tab={tt: vv for tt, vv in
                                               zip(cochain_tuples(flavor, algebra.dim, n),
                                                   lifted)}: _tab[t])
    d_lift = coboundary(lift)
    def pull(t):
        m = solve(ses.alpha.map, d_lift.value(t))
        if m is None:
            raise CheckFailure("EXACTNESS_FAIL", "middle",
                               "coboundary of lift is not in image(alpha)")
        return m
    return class_of(cochain_from_values(flavor, ses.head, n + 1, pull))


def abelian_extension_from_2cocycle(g, Mpp: Representation, alpha: Cochain):
    """The Lie algebra M'' + g with bracket twisted by a 2-cocycle.

    Returns (e, inclusion of M'', projection onto g).  The bracket is
    [(m,x),(n,y)] = ([x,n] - [y,m] + alpha(x,y), [x,y]); its Jacobi identity
    is equivalent to delta(alpha) = 0, which is checked first.
    """
    from .algebra import validate_lie
    if alpha.degree != 2 or alpha.flavor != CE or alpha.module.dim != Mpp.dim:
        raise ValueError("need a degree-2 CE cochain valued in the module")
    d2 = ce_coboundary_matrix(g, Mpp, 2)
    if any(d2.apply(alpha.vec)):
        raise CheckFailure("NOT_A_COCYCLE", detail="delta(alpha) != 0")
    field = g.field
    m, d = Mpp.dim, g.dim
    n = m + d
    zero = vec_zero(field, n)
    structure = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(m):
        for j in range(d):
            act = Mpp.act_basis(j, tuple(field.one if t == i else field.zero
                                         for t in range(m)))
            structure[i][m + j] = tuple(-x for x in act) + vec_zero(field, d)
            structure[m + j][i] = tuple(act) + vec_zero(field, d)
    for i in range(d):
        for j in range(d):
            aval = alpha.value_signed((i, j))
            structure[m + i][m + j] = tuple(aval) + tuple(g.c[i][j])
    e = validate_lie(field, n, structure)
    incl_cols = [[field.one if t == i else field.zero for t in range(n)]
                 for i in range(m)]
    incl = LinearMap(Matrix.from_cols(field, incl_cols, n))
    proj_rows = [[field.one if t == m + i else field.zero for t in range(n)]
                 for i in range(d)]
    proj = LinearMap(Matrix(field, proj_rows, cols=n))
    return e, incl, proj
