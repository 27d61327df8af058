"""
Explicit bordered modules for the complement Y(n, m) of the Lagrangian knot
in the double-lens-space model, the twist bimodule and the twisting slice.

Two framing classes are modelled, "I_III" and "II_IV".  Generators are named
T<c> (c = 0..n-1), L<r> (r = 1..m-1), G<c>_<r> (1 <= c <= n, 1 <= r <= m) and S.
"""

from itertools import product

from .algebra import (
    DABimodule, DDBimodule, TypeAGraph, TypeDGraph, box_a_dd, cancel_pure,
    lattice_generator, lift_gradings, reduce_mod, swap13,
)

FRAMINGS = ("I_III", "II_IV")


def _g(c, r):
    return "G%d_%d" % (c, r)


def _check(n, m, framing):
    if int(n) != n or int(m) != m or n < 1 or m < 1:
        raise ValueError("n and m must be positive integers")
    if framing not in FRAMINGS:
        raise ValueError("framing must be one of %s" % (FRAMINGS,))


def _type_a_edges(n, m, framing):
    e = []
    if framing == "I_III":
        for c in range(n):
            e.append(("T%d" % c, _g(c + 1, 1), "2"))
        for r in range(1, m):
            e.append(("L%d" % r, _g(1, r + 1), "2"))
        for c in range(1, n):
            for r in range(1, m):
                e.append((_g(c, r), _g(c + 1, r + 1), "32"))
        for c in range(1, n):
            e.append((_g(c, m), "T%d" % c, "321"))
        for r in range(1, m):
            e.append((_g(n, r), "L%d" % r, "321"))
        e.append((_g(n, m), "S", "321"))
        e.append(("S", "T0", "21"))
    else:
        for c in range(n):
            e.append(("T%d" % c, _g(c + 1, 1), "1"))
        for r in range(1, m):
            e.append(("L%d" % r, _g(1, r + 1), "1"))
        for c in range(1, n):
            for r in range(1, m):
                e.append((_g(c, r), _g(c + 1, r + 1), "21"))
        for c in range(1, n):
            e.append(("T%d" % c, _g(c, m), "3"))
        for r in range(1, m):
            e.append(("L%d" % r, _g(n, r), "3"))
        e.append(("S", _g(n, m), "3"))
        e.append(("T0", "S", "32"))
    return e


def _gens(n, m, framing):
    outer = 1 if framing == "I_III" else 0
    gens = {}
    for c in range(n):
        gens["T%d" % c] = outer
    for r in range(1, m):
        gens["L%d" % r] = outer
    for c in range(1, n + 1):
        for r in range(1, m + 1):
            gens[_g(c, r)] = 1 - outer
    gens["S"] = outer
    return gens


def _marks(n, m):
    return {"contact": "T0", "contact_alt": "S", "loss": [_g(1, 1), _g(n, m)]}


def library_graph(n, m, framing="I_III", flavor="A"):
    """Decorated graph of the bordered invariant of -Y(n, m).

    marks: "contact" is the consistent contact generator, "contact_alt" the
    other candidate, "loss" the two LOSS generators (consistent one first).
    """
    _check(n, m, framing)
    gens = _gens(n, m, framing)
    edges = _type_a_edges(n, m, framing)
    if flavor == "A":
        return TypeAGraph(gens, edges, _marks(n, m))
    if flavor == "D":
        return TypeDGraph(gens, [(a, b, swap13(l)) for a, b, l in edges], _marks(n, m))
    raise ValueError("flavor must be 'A' or 'D'")


def type_d_invariant_graph(n, m, framing="I_III"):
    """Type D graph with a few pure differentials left in place so that the
    contact generator survives as a single generator."""
    _check(n, m, framing)
    gens = _gens(n, m, framing)
    del gens["S"]
    edges = [(a, b, swap13(l)) for a, b, l in _type_a_edges(n, m, framing)
             if "S" not in (a, b)]
    top = _g(n, m)
    if framing == "I_III":
        gens.update(A=0, B=0, C=1, D=0, E=0)
        edges += [(top, "A", "12"), ("B", "A", None), ("B", "C", "3"),
                  ("C", "D", "2"), ("E", "D", None), ("E", "T0", "3")]
        marks = {"contact": "D", "contact_alt": top}
    else:
        gens.update(P=0, Q=1, R=1)
        edges += [("P", top, "1"), ("Q", "P", "2"), ("Q", "R", None), ("T0", "R", "1")]
        marks = {"contact": "R", "contact_alt": top}
    return TypeDGraph(gens, edges, marks)


def cfda_tau():
    """DA bimodule of a negative Dehn twist along the slope-0 curve.

    Generators p, q, s with (left, right) idempotents (0,0), (1,1), (0,1).
    Keys are (generator, input chords); values are sets of (output, target).
    """
    gens = {"p": (0, 0), "q": (1, 1), "s": (0, 1)}
    entries = {
        ("q", ("2", "1")): {("2", "s")},
        ("q", ("2", "12")): {("2", "p")},
        ("q", ("2", "123")): {("23", "q")},
        ("p", ("1",)): {("12", "s")},
        ("p", ("12",)): {("12", "p")},
        # the only output making the structure relations hold
        ("p", ("123",)): {("123", "q")},
        ("p", ("3",)): {("3", "q")},
        ("s", ()): {("1", "q")},
        ("s", ("2",)): {(None, "p")},
        ("s", ("23",)): {("3", "q")},
    }
    return DABimodule(gens, entries)


TWIST_GENS = {
    "rho123": (0, 1), "rho23": (0, 0), "rho12": (1, 1), "rho3": (0, 1),
    "rho1": (0, 1), "rho2": (1, 0), "iota1": (0, 0), "iota0": (1, 1),
}


def bsdd_tw():
    """DD bimodule of the positive twisting slice.

    delta terms are (left output, generator, right output); None is 1.
    """
    delta = {
        "rho123": {("3", "rho12", None), (None, "rho23", "1")},
        "rho23": {("3", "rho2", None), (None, "rho3", "2")},
        "rho12": {("2", "rho1", None), (None, "rho2", "1")},
        "rho3": {("3", "iota0", None), (None, "iota1", "3")},
        "rho1": {("1", "iota0", None), (None, "iota1", "1")},
        "rho2": {("2", "iota1", None), (None, "iota0", "2")},
    }
    return DDBimodule(TWIST_GENS, delta)


def cfd_via_twisting(A, reduce=False):
    """Type D structure of the same bordered manifold, obtained by tensoring
    the Type A graph with the twisting slice.

    The contact mark becomes (marked generator) x (the idempotent-compatible
    iota generator).  With reduce=True, pure differentials are cancelled
    while protecting the mark.
    """
    if "contact" not in A.marks:
        raise ValueError("Type A graph has no contact mark")
    D = box_a_dd(A, bsdd_tw())
    c = A.marks["contact"]
    partner = "iota1" if A.gens[c] == 0 else "iota0"
    D.marks = {"contact": (c, partner)}
    if reduce:
        D = cancel_pure(D)
    return D


def expected_quotient(n, m, framing):
    """Generator of the grading indeterminacy in half units."""
    from math import gcd

    g = gcd(n, m)
    if framing == "I_III":
        v = (2 * (n + m) // g, 2 * n * m // g)
    else:
        v = (2 * n * m // g, -2 * (n + m) // g)
    return lattice_generator([v])


def component_quotients(g):
    """Per weak component, the generator of its cycle lattice (half units)."""
    gr, _ = lift_gradings(g)
    comp = g.components()
    out = {}
    for k in set(comp.values()):
        members = {v for v in g.gens if comp[v] == k}
        sub = type(g)({v: g.gens[v] for v in members},
                      [e for e in g.edges if e[0] in members])
        out[k] = lattice_generator(lift_gradings(sub)[1])
    return out


def identify_distinguished_pair(g, framing):
    """The unique ordered pair (x, y) in one component with
    gr(x) - gr(y) = (1, 0) for I_III, or gr(y) - gr(x) = (0, 1) for II_IV,
    modulo that component's cycle lattice.

    Raises ValueError when no pair or several pairs qualify.
    """
    gr, _ = lift_gradings(g)
    comp = g.components()
    quot = component_quotients(g)
    target = (2, 0) if framing == "I_III" else (0, 2)
    found = []
    for x, y in product(g.gens, repeat=2):
        if x == y or comp[x] != comp[y]:
            continue
        q = quot[comp[x]]
        if framing == "I_III":
            d = (gr[x][0] - gr[y][0], gr[x][1] - gr[y][1])
        else:
            d = (gr[y][0] - gr[x][0], gr[y][1] - gr[x][1])
        if reduce_mod(d, q) == reduce_mod(target, q):
            found.append((x, y))
    if len(found) != 1:
        raise ValueError("expected one distinguished pair, found %d" % len(found))

    return found[0]
