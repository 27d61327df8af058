import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from obcontact.algebra import (
    BASIS, IDEMS, REEB, AlgElt, ChainComplexF2, TypeAGraph, TypeDGraph, alg_mul,
    box_ad, box_da_d, cancel_pure, expand_type_a, find_primitive, graph_from_json,
    graphs_isomorphic, homology_with_membership, label_grading, lattice_generator,
    DABimodule, left_idem, mul_basis, opposite, random_typed_graph, reduce_mod,
    relabel_13, right_idem, split_minimal, validate_structures,
)

# every nonzero product of two basis elements, written out by hand
NONZERO = {
    ("i0", "i0"): "i0", ("i1", "i1"): "i1",
    ("1", "2"): "12", ("2", "3"): "23", ("1", "23"): "123", ("12", "3"): "123",
    ("i0", "1"): "1", ("1", "i1"): "1",
    ("i1", "2"): "2", ("2", "i0"): "2",
    ("i0", "3"): "3", ("3", "i1"): "3",
    ("i0", "12"): "12", ("12", "i0"): "12",
    ("i1", "23"): "23", ("23", "i1"): "23",
    ("i0", "123"): "123", ("123", "i1"): "123",
}


def test_all_64_products():
    pairs = list(product(BASIS, repeat=2))
    assert len(pairs) == 64
    for a, b in pairs:
        assert mul_basis(a, b) == NONZERO.get((a, b)), (a, b)


def test_product_examples():
    assert alg_mul("1", "2") == "12"
    assert not alg_mul("2", "1")
    assert alg_mul("i0", "1") == "1" and not alg_mul("1", "i0")
    one = AlgElt(IDEMS)
    for b in BASIS:
        assert one * AlgElt(b) == AlgElt(b) == AlgElt(b) * one


@given(st.sampled_from(BASIS), st.sampled_from(BASIS), st.sampled_from(BASIS))
def test_associative(a, b, c):
    assert (AlgElt(a) * AlgElt(b)) * AlgElt(c) == AlgElt(a) * (AlgElt(b) * AlgElt(c))


def test_alg_elt_is_mod_two():
    assert not (AlgElt("1") + AlgElt("1"))
    with pytest.raises(ValueError):
        AlgElt("4")


def test_opposite_is_anti_automorphism():
    for a, b in product(BASIS, repeat=2):
        ab = mul_basis(a, b)
        ba = mul_basis(opposite(b), opposite(a))
        assert (ab is None and ba is None) or opposite(ab) == ba


@pytest.mark.parametrize("s,want", [
    ("232", ("23", "2")), ("32321", ("3", "23", "2", "1")), ("123", ("123",)), ("2", ("2",))])
def test_split_minimal(s, want):
    assert split_minimal(s) == want


def test_gradings_of_chords():
    assert label_grading("1") == (1, -1)
    assert label_grading("123") == (1, 1)


def test_expand_single_edge():
    g = TypeAGraph({"x": 1, "y": 0}, [("x", "y", "2")])
    assert expand_type_a(g, 4) == [("x", ("2",), "y")]


def test_expand_long_path():
    g = TypeAGraph({"x": 0, "z": 0, "y": 1}, [("x", "z", "32"), ("z", "y", "321")])
    acts = expand_type_a(g, 5)
    assert ("x", ("3", "23", "2", "1"), "y") in acts
    # max_len bounds the total length of the concatenated label string
    assert ("x", ("3", "23", "2", "1"), "y") not in expand_type_a(g, 4)


def test_expand_minimal_split():
    g = TypeAGraph({"x": 1, "z": 0, "y": 0}, [("x", "z", "2"), ("z", "y", "32")])
    assert ("x", ("23", "2"), "y") in expand_type_a(g, 3)


def test_validate_catches_idempotents():
    g = TypeAGraph({"x": 0, "y": 0}, [("x", "y", "2")])
    rep = validate_structures(g)
    assert not rep["ok"] and "idempotents" in rep["errors"][0]
    d = TypeDGraph({"x": 0, "y": 1}, [("x", "y", None)])
    assert not validate_structures(d)["ok"]


def test_validate_type_d_relation():
    # x -1-> y -2-> z gives rho_12 with nothing to cancel it
    d = TypeDGraph({"x": 0, "y": 1, "z": 0}, [("x", "y", "1"), ("y", "z", "2")])
    assert not validate_structures(d)["ok"]
    d = TypeDGraph({"x": 0, "y": 1, "z": 0}, [("x", "y", "1"), ("y", "z", "2"), ("x", "z", None)])
    assert not validate_structures(d)["ok"]
    # rho_2 rho_1 = 0, so this path is harmless
    d = TypeDGraph({"x": 1, "y": 0, "z": 1}, [("x", "y", "2"), ("y", "z", "1")])
    rep = validate_structures(d)
    assert rep["ok"] and rep["bounded"]


def test_zigzag_rule():
    D = TypeDGraph({"z": 0, "y": 1, "x": 1, "w": 0},
                   [("z", "y", "1"), ("x", "y", None), ("x", "w", "2")])
    out = cancel_pure(D)
    assert set(out.gens) == {"z", "w"}
    assert out.edges == {("z", "w", "12")}


def test_zigzag_drops_vanishing_products():
    D = TypeDGraph({"z": 1, "y": 0, "x": 0, "w": 1},
                   [("z", "y", "2"), ("x", "y", None), ("x", "w", "2")])
    out = cancel_pure(D)
    assert set(out.gens) == {"z", "w"} and not out.edges


def test_cancel_respects_protection():
    D = TypeDGraph({"a": 0, "b": 0}, [("a", "b", None)], marks={"contact": "a"})
    assert set(cancel_pure(D).gens) == {"a", "b"}
    assert not cancel_pure(D, protect_marks=False).gens


def test_homology_and_membership():
    C = ChainComplexF2("abcd", {"a": {"b"}, "c": {"b", "d"}}, distinguished={"d"})
    dims, is_bd = homology_with_membership(C)
    assert sum(dims.values()) == 0
    assert is_bd is True
    assert C.d(find_primitive(C)) == {"d"}
    C2 = ChainComplexF2("xy", {}, distinguished={"x"})
    dims, is_bd = homology_with_membership(C2)
    assert sum(dims.values()) == 2 and is_bd is False
    assert find_primitive(C2) is None


def test_distinguished_must_be_cycle():
    C = ChainComplexF2("ab", {"a": {"b"}}, distinguished={"a"})
    with pytest.raises(ValueError):
        homology_with_membership(C)


def test_relabel_13_involution():
    D = TypeDGraph({"x": 0, "y": 1, "z": 1}, [("x", "y", "1"), ("y", "z", "23")])
    A = relabel_13(D)
    assert sorted(A.edges) == [("x", "y", "3"), ("y", "z", "21")]
    assert graphs_isomorphic(relabel_13(A), D)
    with pytest.raises(ValueError):
        relabel_13(TypeDGraph({"a": 0, "b": 0}, [("a", "b", None)]))


def test_json_roundtrip():
    D = TypeDGraph({"x": 0, "y": 1}, [("x", "y", "1")], marks={"contact": "x"})
    back = graph_from_json(D.to_json())
    assert graphs_isomorphic(back, D) and back.marks == {"contact": "x"}


def test_box_ad_small():
    A = TypeAGraph({"a": 0, "b": 1}, [("a", "b", "1")], marks={"contact": "a"})
    D = TypeDGraph({"x": 0, "y": 1}, [("x", "y", "1")], marks={"contact": "x"})
    C = box_ad(A, D)
    assert set(C.gens) == {("a", "x"), ("b", "y")}
    assert C.boundary[("a", "x")] == {("b", "y")}
    assert C.d_squared_zero()


def test_identity_bimodule_is_neutral():
    gens = {"e0": (0, 0), "e1": (1, 1)}
    entries = {}
    for c in REEB:
        entries[("e%d" % left_idem(c), (c,))] = {(c, "e%d" % right_idem(c))}
    I = DABimodule(gens, entries)
    assert validate_structures(I)["ok"]
    D = TypeDGraph({"x": 0, "y": 1, "z": 1}, [("x", "y", "1"), ("y", "z", "23"), ("x", "z", "123")])
    out = box_da_d(I, D)
    assert graphs_isomorphic(out, D)


@pytest.mark.parametrize("vecs,want", [
    ([(4, 2), (8, 4)], (4, 2)), ([(0, 0)], None), ([(-6, 4), (9, -6)], (3, -2)),
])
def test_lattice_generator(vecs, want):
    assert lattice_generator(vecs) == want


def test_lattice_generator_rank_two():
    with pytest.raises(ValueError):
        lattice_generator([(1, 0), (0, 1)])


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_reduce_mod_is_canonical(x, y):
    gen = (4, 2)
    r = reduce_mod((x, y), gen)
    assert 0 <= r[0] < 4
    assert reduce_mod((x + 4, y + 2), gen) == r


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 12))
def test_random_expansion_cancels_back(seed, k):
    from obcontact.library import library_graph

    core = library_graph(2, 3, "I_III", "D")
    g = random_typed_graph(random.Random(seed), core, k)
    assert validate_structures(g)["ok"]
    for s in (seed, seed + 1):
        assert graphs_isomorphic(cancel_pure(g, rng=random.Random(s)), core)


def test_random_graph_deterministic():
    from obcontact.library import library_graph

    core = library_graph(3, 2, "II_IV", "D")
    a = random_typed_graph(random.Random(7), core, 10)
    b = random_typed_graph(random.Random(7), core, 10)
    assert a.edges == b.edges and a.gens == b.gens
