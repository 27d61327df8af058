import json
import os
from itertools import combinations

import pytest

from obcontact.algebra import homology_with_membership
from obcontact.heegaard import (
    ALPHA, BETA, DiagramError, FloerEngine, build_diagram, contact_component,
    contact_generator, differential_lead, euler_characteristic, full_complex,
    generator_sign, generators, h1_from_diagram, h1_order, hat_summary, hexagons,
    niceify, region_list,
)

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def load(name):
    with open(os.path.join(GOLDEN, name)) as fh:
        return json.load(fh)


@pytest.fixture(scope="module")
def small():
    d = build_diagram(region_list(13, 8, 8, 5))
    nice, moves = niceify(d)
    return d, nice, moves


@pytest.mark.parametrize("key", sorted(load("region_lists.json")))
def test_region_list_golden(key):
    want = load("region_lists.json")[key]
    got = region_list(*map(int, key.split(",")))
    assert json.dumps(got) == json.dumps(want)


def test_region_list_needs_unimodular():
    with pytest.raises(ValueError):
        region_list(13, 8, 8, 4)


def test_diagram_shape(small):
    d, _, _ = small
    assert d.genus == 3
    assert len(d.regions[d.basepoint]) == 16
    assert len(hexagons(d)) == 2
    assert len(d.alphas) == len(d.betas) == 3
    for i in range(3):
        assert d.on_alpha[i] == i and d.on_beta[i] == i
    # every point is a corner of exactly four region corners
    count = {}
    for R in d.regions:
        for x in R:
            count[x] = count.get(x, 0) + 1
    assert set(count.values()) == {4}


def test_sides_alternate(small):
    d, _, _ = small
    for ri in range(len(d.regions)):
        cols = [c for *_, c in d.sides(ri)]
        assert all(a != b for a, b in zip(cols, cols[1:] + cols[:1]))


def test_niceify_removes_hexagons(small):
    d, nice, moves = small
    assert nice.is_nice() and not d.is_nice()
    assert nice.genus == 3
    assert len(moves) == 2
    assert len(nice.points) > len(d.points)
    assert all(len(R) in (2, 4) for i, R in enumerate(nice.regions) if i != nice.basepoint)


def test_generator_count_brute_force(small):
    _, nice, _ = small
    want = 0
    for trip in combinations(nice.points, 3):
        if len({nice.on_alpha[x] for x in trip}) == 3 and len({nice.on_beta[x] for x in trip}) == 3:
            want += 1
    assert len(generators(nice)) == want


# b_1 = 1 for (5,2,2,1): each of the two torsion classes carries rank 2
@pytest.mark.parametrize("m,rank", [((13, 8, 8, 5), 4), ((5, 2, 2, 1), 4)])
def test_full_complex(m, rank):
    nice, _ = niceify(build_diagram(region_list(*m)))
    eng = FloerEngine(nice)
    lead = differential_lead(eng)
    C = full_complex(eng, lead)
    assert C.d_squared_zero()
    # the transpose of the lead differential is the other lead
    back = full_complex(eng, BETA if lead == ALPHA else ALPHA)
    for x in C.gens:
        for y in C.boundary[x]:
            assert x in back.boundary[y]
    assert sum(len(b) for b in C.boundary.values()) == sum(len(b) for b in back.boundary.values())
    signs = {x: generator_sign(nice, x) for x in C.gens}
    for x in C.gens:
        for y in C.boundary[x]:
            assert signs[x] == -signs[y]
    dims, _ = homology_with_membership(C)
    assert sum(dims.values()) == rank
    assert rank >= abs(euler_characteristic(nice))


def test_contact_generator_is_cycle(small):
    _, nice, _ = small
    eng = FloerEngine(nice)
    lead = differential_lead(eng)
    assert not eng.targets(contact_generator(), lead)
    C = contact_component(eng, lead)
    assert contact_generator() in C.gens
    assert C.d_squared_zero()


@pytest.mark.parametrize("m,h1,chi", [
    ((13, 8, 8, 5), [4], 4), ((5, 2, 2, 1), [0, 2], 0), ((9, 2, 4, 1), [8], 8),
    ((7, 4, 12, 7), [0, 0, 2], 0),
])
def test_h1_and_euler(m, h1, chi):
    d = build_diagram(region_list(*m))
    nice, _ = niceify(d)
    assert h1_from_diagram(d) == h1 == h1_from_diagram(nice)
    assert abs(euler_characteristic(nice)) == chi == h1_order(d)


def test_h1_matches_matrix_for_table_rows():
    # finger moves are isotopies, so H_1 cannot change
    for row in load("contact_table.json")[:6]:
        d = build_diagram(region_list(*row["matrix"]))
        nice, _ = niceify(d)
        assert h1_order(d) == h1_order(nice)


@pytest.mark.parametrize("row", [r for r in load("contact_table.json") if len(region_list(*r["matrix"])) < 84],
                         ids=lambda r: ",".join(map(str, r["matrix"])))
def test_contact_rows(row):
    assert hat_summary(region_list(*row["matrix"]))["contact_vanishes"] is row["vanishes"]


@pytest.mark.slow
@pytest.mark.parametrize("row", [r for r in load("contact_table.json") if len(region_list(*r["matrix"])) >= 84],
                         ids=lambda r: ",".join(map(str, r["matrix"])))
def test_contact_rows_large(row):
    assert hat_summary(region_list(*row["matrix"]))["contact_vanishes"] is row["vanishes"]


@pytest.mark.parametrize("m", [(1, 0, 2, 1), (3, 2, 4, 3), (5, 4, 6, 5)])
def test_degenerate_listing_rejected(m):
    with pytest.raises(DiagramError):
        build_diagram(region_list(*m))


@pytest.mark.parametrize("bad", [
    [[0, 1, 2]],
    [[0, 1], [1, 0], [0, 1]],
    [],
])
def test_bad_region_lists(bad):
    with pytest.raises(DiagramError):
        build_diagram(bad)


def test_component_limit(small):
    _, nice, _ = small
    with pytest.raises(RuntimeError):
        contact_component(FloerEngine(nice), limit=5)
