import random

import pytest

from crossedext.errors import CheckFailure
from crossedext.field import QQ
from crossedext.linalg import LinearMap, Matrix
from crossedext.algebra import ModuleMorphism, adjoint, trivial_rep
from crossedext.cohomology import cochain_from_values
from crossedext.crossed import classify2, negate_crossed, yoneda_crossed_module, \
    zero_crossed_module
from crossedext.extensions import (baer_sum, baer_sum_n2,
                                   check_extension_morphism, mediate, negate,
                                   opext_connecting, push_forward, pushout,
                                   split_detect, sum_over_g,
                                   validate_extension, zero_extension)
from crossedext import samples

Z, O = QQ.zero, QQ.one


def _zero_ext(n=3):
    g = samples.heisenberg(QQ)
    return zero_extension(g, adjoint(g), n)


def test_zero_extension_validates_all_lengths():
    for n in (3, 4, 5):
        validate_extension(_zero_ext(n))


def test_split_detect_finds_identity_on_zero_extension():
    E = _zero_ext()
    h = split_detect(E)
    assert h is not None
    assert h.matrix @ E.f.matrix == Matrix.identity(QQ, E.M.dim)


def test_split_detect_rejects_nonsplit_fixture():
    E = samples.nonsplit_extension3(QQ)
    validate_extension(E)
    assert split_detect(E) is None


def test_push_forward_keeps_splitness():
    E = _zero_ext()
    dbl = ModuleMorphism(E.M, E.M, Matrix.identity(QQ, 3).scale(QQ.of(2)))
    E2, mor = push_forward(dbl, E)
    validate_extension(E2)
    check_extension_morphism(E, E2, mor)
    assert split_detect(E2) is not None


def test_push_forward_of_nonsplit_along_zero_map_splits():
    E = samples.nonsplit_extension3(QQ)
    crush = ModuleMorphism(E.M, trivial_rep(E.g, 1),
                           Matrix.zero(QQ, 1, E.M.dim))
    E2, _ = push_forward(crush, E)
    validate_extension(E2)
    assert split_detect(E2) is not None


def test_negate_twice_is_original_chain():
    E = _zero_ext()
    assert negate(negate(E)).f.matrix == E.f.matrix
    validate_extension(negate(E))


def test_sum_over_g_dimensions():
    E = _zero_ext()
    S = sum_over_g(E, E)
    validate_extension(S)
    assert S.M.dim == 6
    assert S.base.algebra.dim == 3  # fiber product of g with itself over g


def test_baer_sum_of_zero_extensions_splits():
    E = _zero_ext()
    B = baer_sum(E, E)
    validate_extension(B)
    assert split_detect(B) is not None


def test_baer_sum_length_mismatch_rejected():
    with pytest.raises(CheckFailure) as exc:
        sum_over_g(_zero_ext(3), _zero_ext(4))
    assert exc.value.code == "LENGTH_MISMATCH"


# ------------------------------------------------------------------ pushout

@pytest.mark.parametrize("seed", range(5))
def test_pushout_universal_property(seed):
    rng = random.Random(seed)
    g = samples.random_lie(QQ, rng, max_dim=3)
    A = samples.random_module(g, rng, max_dim=2)
    B = samples.random_module(g, rng, max_dim=3)
    C = samples.random_module(g, rng, max_dim=3)
    f = samples.random_module_morphism(A, B, rng)
    h = samples.random_module_morphism(A, C, rng)
    pd = pushout(f, h)
    # every cocone factors through the pushout: build one from a random
    # equivariant map out of D and recover it through mediate
    D2 = samples.random_module(g, rng, max_dim=3)
    t = samples.random_module_morphism(pd.D, D2, rng)
    i_prime = LinearMap(t.matrix @ pd.i.matrix)
    j_prime = LinearMap(t.matrix @ pd.j.matrix)
    med = mediate(pd, i_prime, j_prime)
    assert med.matrix == t.matrix
    # triangle identities
    assert med.matrix @ pd.i.matrix == i_prime.matrix
    assert med.matrix @ pd.j.matrix == j_prime.matrix
    # pointwise formula theta((b, c) + S) = i'(b) + j'(c)
    for k in range(pd.D.dim):
        v = pd.sect.matrix.col(k)
        b, c = v[:B.dim], v[B.dim:]
        lhs = med.apply(pd.proj.apply(tuple(b) + tuple(c)))
        rhs = tuple(x + y
                    for x, y in zip(i_prime.apply(b), j_prime.apply(c)))
        assert lhs == rhs


def test_pushout_coequalizes():
    g = samples.abelian(QQ, 2)
    A = trivial_rep(g, 1)
    B = trivial_rep(g, 2)
    f = ModuleMorphism(A, B, Matrix(QQ, [[O], [Z]], cols=1))
    h = ModuleMorphism(A, B, Matrix(QQ, [[Z], [O]], cols=1))
    pd = pushout(f, h)
    assert pd.D.dim == 3
    assert pd.i.matrix @ f.matrix == pd.j.matrix @ h.matrix


def test_mediate_rejects_non_cocone():
    g = samples.abelian(QQ, 2)
    A = trivial_rep(g, 1)
    B = trivial_rep(g, 1)
    f = ModuleMorphism(A, B, Matrix.identity(QQ, 1))
    pd = pushout(f, f)
    with pytest.raises(CheckFailure) as exc:
        mediate(pd, LinearMap.identity(QQ, 1), LinearMap(Matrix(QQ, [[QQ.of(2)]], cols=1)))
    assert exc.value.code == "COCONE_MISMATCH"


# ---------------------------------------------------------------- n = 2 sums

def _yoneda_pair():
    g = samples.abelian(QQ, 3)
    ses = samples.nilpotent_ses(g)
    c1 = cochain_from_values("ce", ses.tail, 2,
                             lambda t: (O,) if t == (1, 2) else (Z,))
    c2 = cochain_from_values("ce", ses.tail, 2,
                             lambda t: (QQ.of(3),) if t == (1, 2) else (Z,))
    return yoneda_crossed_module(ses, c1), yoneda_crossed_module(ses, c2)


def test_baer_sum_n2_additive_on_classes():
    A, B = _yoneda_pair()
    assert classify2(baer_sum_n2(A, B)) == classify2(A) + classify2(B)


def test_baer_sum_n2_inverse_gives_zero():
    A, _ = _yoneda_pair()
    assert classify2(baer_sum_n2(A, negate_crossed(A))).is_zero()


def test_baer_sum_n2_with_zero_is_identity():
    A, _ = _yoneda_pair()
    zero = zero_crossed_module(A.g, A.M)
    assert classify2(baer_sum_n2(A, zero)) == classify2(A)


# ------------------------------------------------------------------- splice

def test_opext_connecting_extends_length():
    g = samples.abelian(QQ, 1)
    ses = samples.nilpotent_ses(g)
    E2 = zero_crossed_module(g, ses.tail)
    E3 = opext_connecting(ses, E2)
    assert E3.n == 3
    validate_extension(E3)
    E4 = opext_connecting(samples.split_ses(g, trivial_rep(g, 1), E3.M),
                          E3)
    assert E4.n == 4
    validate_extension(E4)


def test_opext_connecting_base_mismatch():
    g = samples.abelian(QQ, 2)
    ses = samples.nilpotent_ses(g)
    E2 = zero_crossed_module(g, trivial_rep(g, 2))
    with pytest.raises(CheckFailure) as exc:
        opext_connecting(ses, E2)
    assert exc.value.code == "BASE_MISMATCH"


def test_extension_morphism_square_failure():
    E = _zero_ext()
    from crossedext.crossed import CrossedMorphism
    mor_ids = tuple(LinearMap.identity(QQ, m.dim) for m in E.mids)
    bad_alpha = LinearMap(Matrix.zero(QQ, E.M.dim, E.M.dim))
    from crossedext.extensions import ExtensionMorphism
    mor = ExtensionMorphism(bad_alpha, mor_ids,
                            CrossedMorphism(
                                LinearMap.identity(QQ, E.base.rep.dim),
                                LinearMap.identity(QQ, E.base.algebra.dim)))
    with pytest.raises(CheckFailure) as exc:
        check_extension_morphism(E, E, mor)
    assert exc.value.code == "SQUARE_FAIL"
