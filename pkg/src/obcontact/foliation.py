"""
Checks on combinatorial open book foliation data of a disk.

Input format (plain dicts, e.g. loaded from JSON):

    {
      "elliptic":   [{"id": "y", "sign": "-"}, ...],
      "hyperbolic": [{"id": "h", "sign": "+",
                      "stable": ["e1", "e1"], "unstable": ["y", "boundary"],
                      "cyclic": false}, ...],
      "closed_leaves": 0,
      "boundary_outward": true
    }

A separatrix endpoint is an elliptic id, "boundary" (a fake vertex on the
boundary of the disk) or a hyperbolic id.  A hyperbolic point with a
hyperbolic endpoint, or declared cyclic, is cyclic.
"""

import networkx

SIGNS = ("+", "-")
BOUNDARY = "boundary"


def _parse(d):
    ell = {}
    for e in d.get("elliptic", []):
        if e["sign"] not in SIGNS:
            raise ValueError("bad sign %r on elliptic %r" % (e["sign"], e["id"]))
        if e["id"] in ell:
            raise ValueError("duplicate elliptic id %r" % (e["id"],))
        ell[e["id"]] = e["sign"]
    hyp = {}
    for h in d.get("hyperbolic", []):
        if h["sign"] not in SIGNS:
            raise ValueError("bad sign %r on hyperbolic %r" % (h["sign"], h["id"]))
        if h["id"] in hyp or h["id"] in ell:
            raise ValueError("duplicate id %r" % (h["id"],))
        hyp[h["id"]] = h
    for h in hyp.values():
        for key in ("stable", "unstable"):
            ends = h.get(key, [])
            if len(ends) != 2:
                raise ValueError("hyperbolic %r needs two %s separatrices" % (h["id"], key))
            for x in ends:
                if x != BOUNDARY and x not in ell and x not in hyp:
                    raise ValueError("dangling separatrix endpoint %r" % (x,))
    return ell, hyp


def _is_cyclic(h, hyp):
    if h.get("cyclic"):
        return True
    return any(x in hyp for x in list(h["stable"]) + list(h["unstable"]))


def _signed_graph(ell, hyp, sign, key):
    G = networkx.MultiGraph()
    for e, s in ell.items():
        if s == sign:
            G.add_node(e, fake=False)
    fake = 0
    for hid in sorted(hyp):
        h = hyp[hid]
        if h["sign"] != sign or _is_cyclic(h, hyp):
            continue
        ends = []
        for x in h[key]:
            if x == BOUNDARY:
                x = "fake%d" % fake
                fake += 1
                G.add_node(x, fake=True)
            elif ell[x] != sign:
                raise ValueError("separatrix of %r ends at elliptic %r of the other sign" % (hid, x))
            ends.append(x)
        G.add_edge(ends[0], ends[1], hyperbolic=hid)
    return G


def extract_signed_graphs(d):
    """(G--, G++) as networkx multigraphs.

    G-- joins negative elliptic points through the unstable separatrices of
    negative non-cyclic hyperbolic points; G++ uses the stable separatrices
    of positive ones.  Boundary endpoints become fake vertices.
    """
    ell, hyp = _parse(d)
    return _signed_graph(ell, hyp, "-", "unstable"), _signed_graph(ell, hyp, "+", "stable")


def _is_tree_without_fakes(G):
    if G.number_of_nodes() == 0:
        return False
    if any(G.nodes[v]["fake"] for v in G):
        return False
    return networkx.is_connected(G) and G.number_of_edges() == G.number_of_nodes() - 1


def _is_circle(G):
    if G.number_of_nodes() == 0:
        return False
    if any(G.degree(v) != 2 for v in G):
        return False
    return networkx.is_connected(G)


def is_transverse_ot_disk(d):
    """Returns (verdict, report) with one boolean per condition."""
    ell, hyp = _parse(d)
    gmm, gpp = extract_signed_graphs(d)
    closed = d.get("closed_leaves", 0)
    if isinstance(closed, (list, tuple)):
        closed = len(closed)
    report = {
        "g_minus_tree": _is_tree_without_fakes(gmm),
        "g_plus_circle": _is_circle(gpp),
        "no_closed_leaves_or_cyclic": closed == 0 and not any(_is_cyclic(h, hyp) for h in hyp.values()),
        "euler_count": len(ell) - len(hyp) == 1 and bool(d.get("boundary_outward", True)),
    }
    return all(report.values()), report
