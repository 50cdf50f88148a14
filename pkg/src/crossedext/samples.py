"""Fixture catalog: small named algebras, modules, and seeded random generators.

Everything here is deterministic given a seed; the property suites draw from
these generators so failures reproduce.
"""
from __future__ import annotations

import random

from .algebra import (ModuleMorphism, Representation, adjoint,
                      direct_sum_reps, leibniz_from_lie, trivial_rep,
                      validate_leibniz, validate_leibniz_module,
                      validate_lie, validate_module)
from .cohomology import (Cochain, ShortExactSequence, coboundary_matrix,
                         validate_ses)
from .crossed import (CrossedModule, Presentation, validate_crossed,
                      yoneda_crossed_module, zero_crossed_module)
from .field import QQ
from .linalg import LinearMap, Matrix, kernel


# ---------------------------------------------------------------- catalog

def abelian(field, n):
    z = field.zero
    row = [tuple(z for _ in range(n)) for _ in range(n)]
    return validate_lie(field, n, [list(row) for _ in range(n)])


def solvable2(field):
    """[x, y] = y."""
    z, o = field.zero, field.one
    return validate_lie(field, 2, [[(z, z), (z, o)], [(z, -o), (z, z)]])


def heisenberg(field):
    """[x, y] = c, c central."""
    z, o = field.zero, field.one
    zz = (z, z, z)
    return validate_lie(field, 3, [
        [zz, (z, z, o), zz],
        [(z, z, -o), zz, zz],
        [zz, zz, zz]])


def sl2(field):
    """Basis e, f, h with [h,e]=2e, [h,f]=-2f, [e,f]=h."""
    z, o = field.zero, field.one
    t = field.of(2)
    zz = (z, z, z)
    return validate_lie(field, 3, [
        [zz, (z, z, o), (-t, z, z)],
        [(z, z, -o), zz, (z, t, z)],
        [(t, z, z), (z, -t, z), zz]])


def nonlie_leibniz(field):
    """Dim 2, [y, y] = x: a Leibniz algebra that is not Lie."""
    z, o = field.zero, field.one
    zz = (z, z)
    return validate_leibniz(field, 2, [[zz, zz], [zz, (o, z)]])


LIE_CATALOG = ("abelian1", "abelian2", "abelian3", "solvable2",
               "heisenberg", "sl2")


def lie_by_name(field, name):
    if name.startswith("abelian"):
        return abelian(field, int(name[len("abelian"):]))
    return {"solvable2": solvable2, "heisenberg": heisenberg,
            "sl2": sl2}[name](field)


# ------------------------------------------------------- random generators

def random_scalar(field, rng: random.Random):
    if field is QQ:
        return field.of(rng.randint(-3, 3))
    return field.of(rng.randrange(field.p))


def random_invertible(field, n, rng: random.Random) -> Matrix:
    while True:
        m = Matrix(field, [[random_scalar(field, rng) for _ in range(n)]
                           for _ in range(n)], cols=n)
        if kernel(LinearMap(m)).dim == 0:
            return m


def _inverse(m: Matrix) -> Matrix:
    from .linalg import solve_matrix
    inv = solve_matrix(LinearMap(m), Matrix.identity(m.field, m.rows))
    assert inv is not None
    return inv


def change_basis_lie(g, P: Matrix):
    """Structure constants of g in the basis given by the columns of P."""
    field = g.field
    Pinv = _inverse(P)
    structure = []
    for i in range(g.dim):
        row = []
        for j in range(g.dim):
            w = g.bracket(P.col(i), P.col(j))
            row.append(Pinv.apply(w))
        structure.append(row)
    return validate_lie(field, g.dim, structure)


def conjugate_module(M: Representation, Q: Matrix) -> Representation:
    """Same module in a new basis of the underlying vector space."""
    Qinv = _inverse(Q)
    return validate_module(Representation(
        M.algebra, M.dim, [Qinv @ a @ Q for a in M.action]))


def random_lie(field, rng: random.Random, max_dim=5):
    name = rng.choice(LIE_CATALOG)
    g = lie_by_name(field, name)
    if g.dim > max_dim:
        g = abelian(field, max_dim)
    if rng.random() < 0.7:
        g = change_basis_lie(g, random_invertible(field, g.dim, rng))
    return g


def random_module(g, rng: random.Random, max_dim=4) -> Representation:
    """A random valid g-module of dimension <= max_dim: a direct sum of
    trivial and adjoint summands, conjugated by a random basis change."""
    field = g.field
    pieces = []
    total = 0
    while total < 1 or (total < max_dim and rng.random() < 0.5):
        kind = rng.random()
        if kind < 0.5 or g.dim > max_dim - total:
            d = rng.randint(1, max_dim - total) if max_dim > total else 1
            pieces.append(trivial_rep(g, d))
            total += d
        else:
            pieces.append(adjoint(g))
            total += g.dim
    M = pieces[0]
    for p in pieces[1:]:
        M = direct_sum_reps(M, p)
    if rng.random() < 0.7:
        M = conjugate_module(M, random_invertible(field, M.dim, rng))
    return M


def random_leibniz(field, rng: random.Random, max_dim=3):
    if rng.random() < 0.4:
        return nonlie_leibniz(field)
    g = rng.choice([abelian(field, rng.randint(1, max_dim)),
                    solvable2(field),
                    heisenberg(field) if max_dim >= 3 else solvable2(field)])
    return leibniz_from_lie(g)


def random_leibniz_module(h, rng: random.Random, max_dim=3):
    field = h.field
    if h.flavor == "leibniz" and rng.random() < 0.5:
        return trivial_rep(h, rng.randint(1, max_dim))
    # reinterpret a Lie-style pair: left = rho, right = -rho, with rho built
    # from commuting matrices (trivial blocks suffice at these sizes)
    d = rng.randint(1, max_dim)
    zero = Matrix.zero(field, d, d)
    left = [zero for _ in range(h.dim)]
    right = [zero for _ in range(h.dim)]
    from .algebra import LeibnizRepresentation
    return validate_leibniz_module(LeibnizRepresentation(h, d, left, right))


def random_module_morphism(A: Representation, B: Representation,
                           rng: random.Random) -> ModuleMorphism:
    """A random equivariant map A -> B: sample the solution space of the
    intertwining equations H rho_A(u) = rho_B(u) H."""
    field = A.algebra.field
    nvars = B.dim * A.dim

    def var(r, c):
        return r * A.dim + c

    rows = []
    for u in range(A.algebra.dim):
        for r in range(B.dim):
            for c in range(A.dim):
                row = [field.zero] * nvars
                for k in range(A.dim):
                    row[var(r, k)] = row[var(r, k)] + A.action[u].data[k][c]
                for k in range(B.dim):
                    row[var(k, c)] = row[var(k, c)] - B.action[u].data[r][k]
                rows.append(row)
    space = kernel(LinearMap(Matrix(field, rows, cols=nvars))) if rows else None
    vec = [field.zero] * nvars
    if space is None:
        vec = [random_scalar(field, rng) for _ in range(nvars)]
    else:
        for basis_row in space.basis.data:
            c = random_scalar(field, rng)
            vec = [a + c * b for a, b in zip(vec, basis_row)]
    mat = Matrix(field, [[vec[var(r, c)] for c in range(A.dim)]
                         for r in range(B.dim)], cols=A.dim)
    from .algebra import validate_morphism
    return validate_morphism(ModuleMorphism(A, B, mat))


# --------------------------------------------------- crossed-module fixtures

def identity_crossed(g) -> Presentation:
    """V = L = g acting adjointly, partial = id: induced pair is (0, 0)."""
    field = g.field
    cm = CrossedModule(g, adjoint(g), LinearMap.identity(field, g.dim))
    validate_crossed(cm)
    from .crossed import induced_pair
    return induced_pair(cm)


def nilpotent_ses(g, rng: random.Random | None = None) -> ShortExactSequence:
    """0 -> K -> K^2 -> K -> 0 with rho(e_0) the nilpotent Jordan block."""
    field = g.field
    z, o = field.zero, field.one
    rho0 = Matrix(field, [[z, o], [z, z]], cols=2)
    zero2 = Matrix.zero(field, 2, 2)
    acts = [zero2 for _ in range(g.dim)]
    if g.dim > 0:
        acts[0] = rho0
    K = trivial_rep(g, 1)
    Mp = validate_module(Representation(g, 2, acts))
    ses = ShortExactSequence(
        ModuleMorphism(K, Mp, Matrix(field, [[o], [z]], cols=1)),
        ModuleMorphism(Mp, K, Matrix(field, [[z, o]], cols=2)))
    return validate_ses(ses)


def split_ses(g, M: Representation, Mpp: Representation) -> ShortExactSequence:
    field = g.field
    mid = direct_sum_reps(M, Mpp)
    ia = Matrix.identity(field, M.dim).vstack(Matrix.zero(field, Mpp.dim, M.dim))
    pb = Matrix.zero(field, M.dim, Mpp.dim).transpose().hstack(
        Matrix.identity(field, Mpp.dim))
    return validate_ses(ShortExactSequence(
        ModuleMorphism(M, mid, ia), ModuleMorphism(mid, Mpp, pb)))


def random_2cocycle(g, M: Representation, rng: random.Random) -> Cochain:
    """Uniform draw from ker(delta_2)."""
    d2 = coboundary_matrix("ce", g, M, 2)
    Z = kernel(d2)
    field = g.field
    vec = [field.zero] * d2.domain_dim
    for row in Z.basis.data:
        c = random_scalar(field, rng)
        vec = [a + c * b for a, b in zip(vec, row)]
    return Cochain("ce", 2, M, tuple(vec))


def yoneda_fixtures(field, rng: random.Random, count=10):
    """(ses, 2-cocycle valued in the tail) pairs at dims <= 3."""
    out = []
    while len(out) < count:
        g = rng.choice([abelian(field, 2), abelian(field, 3),
                        solvable2(field), heisenberg(field)])
        ses = nilpotent_ses(g) if rng.random() < 0.7 else \
            split_ses(g, trivial_rep(g, 1), trivial_rep(g, 1))
        c = random_2cocycle(g, ses.tail, rng)
        out.append((ses, c))
    return out


def nonsplit_extension3(field):
    """A length-3 extension admitting no equivariant head retraction: splice
    a nonsplit module sequence onto the zero crossed module.

    The required retraction h would satisfy h . alpha = id and equivariance,
    forcing h ρ(e_0) = 0 while h ρ(e_0) = (0, 1); split_detect must reject."""
    from .extensions import opext_connecting
    g = abelian(field, 1)
    ses = nilpotent_ses(g)
    return opext_connecting(ses, zero_crossed_module(g, ses.tail))


def crossed_fixture_pool(field, rng: random.Random, count=20):
    """Presentations exercising partial = 0, partial = id, and Yoneda."""
    out = []
    while len(out) < count:
        kind = len(out) % 3
        if kind == 0:
            g = random_lie(field, rng, max_dim=3)
            M = random_module(g, rng, max_dim=2)
            out.append(zero_crossed_module(g, M))
        elif kind == 1:
            out.append(identity_crossed(random_lie(field, rng, max_dim=3)))
        else:
            ses, c = yoneda_fixtures(field, rng, count=1)[0]
            out.append(yoneda_crossed_module(ses, c))
    return out
