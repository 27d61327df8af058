from math import gcd

import pytest
from hypothesis import given, strategies as st

from obcontact.farey import Slope
from obcontact.mcg import (
    IDENTITY, Psl2z, ReducibleForm, curve_matrix, fdtc_covered, in_pure_subgroup,
    normalize_conjugacy, parse_word, project_word, relabel, right_veering_reducible,
    twist_matrix,
)


def M(*e):
    return Psl2z(*e)


slopes = st.tuples(st.integers(-40, 40), st.integers(0, 40)).filter(
    lambda t: (t[0], t[1]) != (0, 0) and gcd(*t) == 1).map(lambda t: Slope(*t))
curves = st.sampled_from(["a1", "a2", "a3", "a4", "b", "c", "d", "e"])
words = st.lists(st.tuples(curves, st.integers(-3, 3).filter(bool)), max_size=6)


@pytest.mark.parametrize("slope,want", [
    (Slope(0, 1), (1, 2, 0, 1)),
    (Slope(1, 0), (1, 0, -2, 1)),
    (Slope(-2, 1), (5, 2, -8, -3)),
])
def test_twist_matrix(slope, want):
    assert twist_matrix(slope) == M(*want)


def test_sign_canonical():
    assert M(-1, -2, 0, -1) == M(1, 2, 0, 1)
    assert M(0, -1, 1, 0).entries() == (0, 1, -1, 0)
    with pytest.raises(ValueError):
        M(1, 1, 1, 1)


@pytest.mark.parametrize("text,want", [
    ("a1:3,a2:1", IDENTITY),
    ("b:1,e:1", M(11, 4, 8, 3)),
    ("c:-1", M(1, 0, 2, 1)),
    ("slope(0/1):1", M(1, 2, 0, 1)),
])
def test_project_word(text, want):
    assert project_word(parse_word(text)) == want


@pytest.mark.parametrize("text", ["q:1", "b:0", "b", "slope(x):1"])
def test_parse_word_rejects(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_lantern():
    assert project_word(parse_word("a1:1,a2:1,a3:1,a4:1")) == IDENTITY
    assert project_word(parse_word("b:1,c:1,d:1")) == IDENTITY


@pytest.mark.parametrize("m,want", [((1, 2, 0, 1), True), ((0, -1, 1, 0), False), ((11, 4, 8, 3), True)])
def test_pure_subgroup(m, want):
    assert in_pure_subgroup(M(*m)) is want


def test_normalize_examples():
    N, C, ex = normalize_conjugacy(M(11, 4, 8, 3))
    assert (N, C, ex) == (M(11, 4, 8, 3), IDENTITY, False)
    N, C, ex = normalize_conjugacy(M(3, 4, 2, 3))
    assert N == M(5, 2, 2, 1) and C == M(1, 1, 0, 1) and not ex
    assert normalize_conjugacy(M(1, 0, -4, 1))[2] is True
    with pytest.raises(ValueError):
        normalize_conjugacy(M(0, -1, 1, 0))


def test_right_veering_examples():
    assert right_veering_reducible((1, 1, 1, 1), -5)
    assert not right_veering_reducible((0, 1, 1, 1), -1)
    assert right_veering_reducible((0, 1, 1, 1), 3)


@pytest.mark.parametrize("text,want", [
    ("a1:2,a2:1,a3:1,a4:1,b:-3", (2, 1, 1, 1)),
    ("b:2,d:1,c:-1", (0, 0, 0, 0)),
    ("b:1,e:1", (1, 1, 1, 1)),
    ("b:1,c:1", None),
    ("b:1,e:2", None),
])
def test_fdtc_covered(text, want):
    assert fdtc_covered(parse_word(text)) == want


def test_reducible_form_word():
    f = ReducibleForm((1, 0, 2, 1), -2)
    assert project_word(f.word()) == M(1, -4, 0, 1)


def test_relabel_is_involutive():
    n = (1, 2, 3, 4)
    for perm in [(1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]:
        assert relabel(relabel(n, perm), perm) == n


@given(slopes)
def test_twists_are_parabolic(s):
    T = twist_matrix(s)
    v = (s.q, s.p)
    w = T.apply(v)
    assert w == v or w == (-v[0], -v[1])
    assert T.trace() == 2
    assert in_pure_subgroup(T)


@given(words, words)
def test_projection_is_homomorphism(u, v):
    assert project_word(u + v) == project_word(u) @ project_word(v)


@given(st.lists(st.tuples(st.sampled_from(["b", "c"]), st.integers(-4, 4).filter(bool)), max_size=8))
def test_b_c_generate_pure_elements(w):
    assert in_pure_subgroup(project_word(w))


@given(st.lists(st.tuples(st.sampled_from(["b", "c"]), st.integers(-3, 3).filter(bool)), min_size=1, max_size=6))
def test_normalize_properties(w):
    A = project_word(w)
    if A.trace() < 2:
        return
    N, C, excluded = normalize_conjugacy(A)
    assert N == C @ A @ C.inverse()
    if not excluded:
        r, s, p, q = N.entries()
        assert min(r, s, p, q) >= 0 and p > q
