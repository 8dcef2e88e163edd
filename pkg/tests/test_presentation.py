import pytest
from hypothesis import assume, given, strategies as st

from conftest import short_words, words
from oracles import brute_cyclic_equivalent, family, parse_letters
from relator_forge.dsl import parse_word
from relator_forge.errors import CommutingPair, SignatureMismatch, UnknownGenerator, ZeroExponent
from relator_forge.presentation import (
    A,
    B,
    Homomorphism,
    Presentation,
    apply_hom,
    baumslag_group,
    canonical_relator,
    check_noncommuting,
    cyclic_equivalent,
    hom_respects_relators,
    identity_hom,
    make_G,
    verify_hom_pair_inverse,
)
from relator_forge.words import Word, commutator, conjugate, exponent_sum, power

W = parse_word
nonzero = st.integers(-4, 4).filter(bool)


def test_baumslag_relator_matches_oracle():
    assert [tuple(x) for x in baumslag_group().relator] == family([("a", 1)], [("b", 1)], 1, 2)
    assert str(baumslag_group().relator) == "b^-1 a^-1 b a b^-1 a b a^-2"


def test_baumslag_is_a_equals_commutator():
    ab = conjugate(A, B)
    assert cyclic_equivalent(baumslag_group().relator, A * ~commutator(A, ab))


def test_make_G_conjugator_b_squared():
    rel = make_G(A, power(B, 2), 1, 3).relator
    assert rel == W("b^-2 a^-1 b^2 a b^-2 a b^2 a^-3")


def test_make_G_errors():
    with pytest.raises(CommutingPair):
        make_G(A, power(A, 3), 1, 2)
    with pytest.raises(ZeroExponent):
        make_G(A, B, 0, 2)
    with pytest.raises(ZeroExponent):
        make_G(A, B, 1, 0)
    with pytest.raises(UnknownGenerator):
        make_G(Word.gen("c"), B, 1, 2)


@pytest.mark.parametrize("r,w,l,k", [("a", "b", 2, 5), ("a b", "b^2 a", -1, 3), ("a^2", "b a^-1", 3, -2)])
def test_make_G_matches_oracle(r, w, l, k):
    assert [tuple(x) for x in make_G(W(r), W(w), l, k).relator] == family(parse_letters(r), parse_letters(w), l, k)


def test_check_noncommuting_examples():
    assert check_noncommuting(A, B)
    ab = W("a b")
    assert not check_noncommuting(ab, power(ab, 5))
    assert check_noncommuting(A, W("b^-1 a b^2"))


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(("a", "a"), ())
    with pytest.raises(UnknownGenerator):
        Presentation(("a",), (W("b"),))


def test_identity_hom():
    p = baumslag_group()
    h = identity_hom(p)
    w = W("a b^-1 a^3 b")
    assert apply_hom(h, w) == w
    assert hom_respects_relators(h)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_b_inverse_automorphism(n):
    for l, k in [(1, 2), (2, 3), (-1, 2)]:
        src = make_G(A, power(B, n), l, k)
        dst = make_G(A, power(B, -n), l, k)
        h = Homomorphism(src, dst, {"a": A, "b": ~B})
        assert apply_hom(h, src.relator) == dst.relator
        assert hom_respects_relators(h)


def test_exponent_map_kills_zero_sum_relators():
    z = Presentation(("z",), ())
    for l, k in [(1, 2), (3, -1)]:
        src = make_G(A, power(B, 2), l, k)
        h = Homomorphism(src, z, {"a": Word(), "b": Word.gen("z")})
        assert exponent_sum(src.relator, "b") == 0
        assert apply_hom(h, src.relator) == Word()


def test_apply_hom_unknown_generator():
    p = Presentation(("a",), ())
    h = identity_hom(p)
    with pytest.raises(UnknownGenerator):
        apply_hom(h, B)


def test_hom_pair_examples():
    for l, k in [(1, 2), (2, 3), (2, 1), (-1, -2)]:
        g1, g2 = make_G(A, B, l, k), make_G(A, B, -l, -k)
        eta = Homomorphism(g1, g2, {"a": A, "b": B})
        xi = Homomorphism(g2, g1, {"a": A, "b": B})
        assert verify_hom_pair_inverse(eta, xi)
        assert hom_respects_relators(eta) and hom_respects_relators(xi)

    one = Presentation(("a",), ())
    inv = Homomorphism(one, one, {"a": ~A})
    assert verify_hom_pair_inverse(inv, inv)

    two = Presentation(("a", "b"), ())
    h1 = Homomorphism(two, two, {"a": W("a b"), "b": B})
    h2 = Homomorphism(two, two, {"a": A, "b": B})
    assert not verify_hom_pair_inverse(h1, h2)


def test_hom_pair_signature_mismatch():
    one = Presentation(("a",), ())
    two = Presentation(("a", "b"), ())
    h1 = Homomorphism(one, two, {"a": A})
    h2 = Homomorphism(one, two, {"a": A})
    with pytest.raises(SignatureMismatch):
        verify_hom_pair_inverse(h1, h2)


def test_collapse_to_one_generator():
    src = Presentation(("a", "b"), (commutator(A, B),))
    dst = Presentation(("a",), ())
    assert hom_respects_relators(Homomorphism(src, dst, {"a": A, "b": A}))


def test_cyclic_equivalent_examples():
    for l, k in [(1, 2), (2, 3), (3, -1)]:
        assert cyclic_equivalent(make_G(A, B, l, k).relator, make_G(~A, B, k, l).relator)
    assert not cyclic_equivalent(make_G(A, B, 1, 2).relator, make_G(A, B, 2, 3).relator)


@given(words, words)
def test_cyclic_equivalent_matches_brute_force(u, v):
    assert cyclic_equivalent(u, v) == brute_cyclic_equivalent(list(u), list(v))


@given(words, words, words)
def test_cyclic_equivalence_invariances(u, v, c):
    assert cyclic_equivalent(u, u)
    assert cyclic_equivalent(u, v) == cyclic_equivalent(v, u)
    assert cyclic_equivalent(u, conjugate(u, c))
    assert cyclic_equivalent(conjugate(u, c), v) == cyclic_equivalent(u, v)
    assert cyclic_equivalent(~u, v) == cyclic_equivalent(u, v)


@given(words)
def test_canonical_relator_is_least_rotation(u):
    c = canonical_relator(u)
    assert cyclic_equivalent(c, u)
    assert canonical_relator(c) == c
    assert canonical_relator(~u) == c


@given(short_words, short_words, nonzero, nonzero)
def test_sign_flip_relators_agree(r, w, l, k):
    assume(check_noncommuting(r, w))
    assert cyclic_equivalent(make_G(r, w, l, k).relator, ~make_G(r, w, -l, -k).relator)


@given(st.sampled_from(["b", "b^2", "b a b", "b^-1 a^2 b^3", "b^2 a^-1 b"]), nonzero, nonzero, nonzero)
def test_conjugator_absorption_property(text, n, l, k):
    w = W(text)
    base = make_G(A, w, l, k).relator
    assert cyclic_equivalent(make_G(A, power(A, n) * w, l, k).relator, base)
    assert cyclic_equivalent(make_G(A, w * power(A, n), l, k).relator, base)


def test_conjugator_absorption_exact_on_left():
    # a^n on the left cancels inside r^w already in F
    assert make_G(A, W("a^2 b"), 1, 2).relator == make_G(A, B, 1, 2).relator
    right = make_G(A, W("b a^2"), 1, 2).relator
    assert right == W("a^-2 b^-1 a^-1 b a b^-1 a b")
    assert right != make_G(A, B, 1, 2).relator
    assert cyclic_equivalent(right, make_G(A, B, 1, 2).relator)


@pytest.mark.parametrize("p", [baumslag_group(), make_G(A, B, 2, 3), Presentation(("a", "b", "c"), ())])
def test_identity_hom_respects_relators(p):
    assert hom_respects_relators(identity_hom(p))
