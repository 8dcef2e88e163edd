import pytest
from hypothesis import given, strategies as st

from conftest import letters
from relator_forge.dsl import parse_word
from relator_forge.errors import NonzeroExponentSum, SplitFailure, WindowTooSmall
from relator_forge.kernel import (
    IndexedPresentation,
    IndexedWord,
    height_rewrite,
    instantiate,
    shift,
    shifted_family,
    split_mod,
    unreindex,
    unrewrite,
    z_kernel,
)
from relator_forge.presentation import A, B, make_G
from relator_forge.words import Word, conjugate, exponent_sum, power

W = parse_word
IW = IndexedWord.from_syllables
LK = [(1, 2), (2, 3), (-1, -2), (3, 1), (2, -1)]


def schema(n, l, k):
    return IW([(n, -1), (0, l), (n, 1), (0, -k)])


def test_rewrite_examples():
    for l, k in LK:
        assert height_rewrite(make_G(A, B, l, k).relator) == schema(1, l, k)
        assert height_rewrite(make_G(A, power(B, 2), l, k).relator) == schema(2, l, k)
    assert height_rewrite(Word()) == IndexedWord()


def test_rewrite_conjugated_conjugator():
    l, k = 2, 3
    x = IW([(1, -1), (0, 1), (1, 1)])
    expected = ~x * IW([(0, l)]) * x * IW([(0, -k)])
    got = z_kernel(make_G(A, W("b^-1 a b"), l, k)).schemas
    assert got == (expected,)


def test_rewrite_rejects_nonzero_b_sum():
    with pytest.raises(NonzeroExponentSum):
        height_rewrite(W("a b"))


def test_unrewrite_examples():
    assert unrewrite(IW([(0, 1)])) == A
    assert unrewrite(IW([(1, -1), (0, 1), (1, 1)])) == W("b^-1 a^-1 b a b^-1 a b")
    r = make_G(A, B, 2, 3).relator
    assert unrewrite(height_rewrite(r)) == r


def test_shift_examples():
    assert shift(IW([(0, 1)]), 5) == IW([(5, 1)])
    l, k = 2, 3
    assert shift(schema(1, l, k), 1) == IW([(2, -1), (1, l), (2, 1), (1, -k)])
    x = schema(3, 1, 2)
    assert shift(shift(x, 7), -7) == x


def test_indexed_printing():
    assert str(schema(1, 1, 2)) == "a_1^-1 a_0 a_1 a_0^-2"
    assert str(IndexedWord()) == "1"


@st.composite
def zero_sum_words(draw, max_len=40):
    w = Word(draw(st.lists(letters, max_size=max_len)))
    s = exponent_sum(w, "b")
    return w * power(B, -s)


indexed_words = st.lists(st.tuples(st.integers(-6, 6), st.sampled_from((1, -1))), max_size=20).map(IndexedWord)


@given(zero_sum_words())
def test_round_trip_words(w):
    assert unrewrite(height_rewrite(w)) == w


@given(indexed_words)
def test_round_trip_indexed(x):
    assert height_rewrite(unrewrite(x)) == x


@given(zero_sum_words(), st.integers(-5, 5))
def test_shift_equivariance(w, d):
    assert height_rewrite(conjugate(w, power(B, d))) == shift(height_rewrite(w), d)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_z_kernel_power_conjugator(n):
    for l, k in LK:
        ip = z_kernel(make_G(A, power(B, n), l, k))
        assert ip.schemas == (schema(n, l, k),)


def test_z_kernel_negative_power_normalizes():
    ip = z_kernel(make_G(A, power(B, -2), 1, 2))
    # a_-2^-1 a_0 a_-2 a_0^-2, translated up by 2
    assert ip.schemas == (IW([(0, -1), (2, 1), (0, 1), (2, -2)]),)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_split_mod_gives_identical_copies(n):
    l, k = 2, 3
    comps = split_mod(z_kernel(make_G(A, power(B, n), l, k)), n)
    base = z_kernel(make_G(A, B, l, k))
    assert len(comps) == n
    assert all(c == base for c in comps)


def test_split_mod_one_is_identity():
    ip = z_kernel(make_G(A, W("b^-1 a b"), 1, 2))
    assert split_mod(ip, 1) == [ip]


def test_split_mod_failure_reports_schema():
    ip = z_kernel(make_G(A, B, 1, 2))
    with pytest.raises(SplitFailure) as exc:
        split_mod(ip, 2)
    assert exc.value.schema == schema(1, 1, 2)
    assert exc.value.n == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_split_succeeds_exactly_for_divisors(n):
    ip = z_kernel(make_G(A, power(B, n), 1, 2))
    for m in range(1, 8):
        ok = True
        try:
            split_mod(ip, m)
        except SplitFailure:
            ok = False
        assert ok == (n % m == 0)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("N", [3, 5, 8])
def test_split_components_partition_relators(n, N):
    ip = z_kernel(make_G(A, power(B, n), 1, 2))
    comps = split_mod(ip, n)
    whole = sorted(x.letters for x in shifted_family(ip, -N, N))
    parts = []
    for j, comp in enumerate(comps):
        for x in shifted_family(comp, -3 * N, 3 * N):
            y = unreindex(x, n, j)
            if min(y.support()) >= -N and max(y.support()) <= N:
                parts.append(y.letters)
    assert sorted(parts) == whole


def test_instantiate_window_one():
    l, k = 2, 3
    p = instantiate(IndexedPresentation((schema(1, l, k),)), 1)
    assert p.generators == ("a_m1", "a_0", "a_1")
    expected = [
        IW([(0, -1), (-1, l), (0, 1), (-1, -k)]).to_word(),
        IW([(1, -1), (0, l), (1, 1), (0, -k)]).to_word(),
    ]
    assert list(p.relators) == expected


def test_instantiate_window_zero():
    with pytest.raises(WindowTooSmall):
        instantiate(IndexedPresentation((schema(1, 1, 2),)), 0)


def test_instantiate_conjugated_schema():
    ip = z_kernel(make_G(A, W("b^-1 a b"), 1, 2))
    p = instantiate(ip, 1)
    assert len(p.generators) == 3 and len(p.relators) == 2


def test_instantiate_default_window():
    ip = IndexedPresentation((schema(1, 1, 2),))
    p = instantiate(ip)
    assert len(p.generators) == 17 and len(p.relators) == 16


def test_schemas_must_be_nonempty():
    with pytest.raises(ValueError):
        IndexedPresentation((IndexedWord(),))
