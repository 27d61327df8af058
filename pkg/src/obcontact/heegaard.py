"""
Combinatorial hat Heegaard Floer homology from region lists of genus-3
diagrams of open books with four-punctured-sphere pages.

A region list is a list of regions, each a cyclic list of intersection
points read along the oriented boundary.  Consecutive corners of a region
are joined by arcs that alternate between alpha and beta curves.  The last
region holds the basepoint.  Points 0, 1, 2 are alpha_i cap beta_i.
"""

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

ALPHA, BETA = "a", "b"


def _other(color):
    return BETA if color == ALPHA else ALPHA


def region_list(r, s, p, q):
    """Region list of the diagram for pi(f) = [[r, s], [p, q]], all FDTCs 1."""
    if r * q - s * p != 1:
        raise ValueError("determinant of [[r, s], [p, q]] must be 1")
    a = 1 + q + ((r * q) // p) // 2
    b = 1 + (p - q) + ((r * (p - q)) // p) // 2
    n = 1 + p + r // 2
    last = 2 * n + q + s // 2 + 2
    rlist = [
        [3, 2, 2 * n + 1, n + a + 1, n + a + 2, 4],
        [n + 2, 2, last, a + 2, a + 3, n + 3],
        [2 * n + 1, 0, 3, 2 * n + 2],
        [last, 1, n + 2, last - 1],
        [b + n + 1, 0, n + 1, b + n + 2],
        [b + 2, 1, 2 * n, b + 3]]
    for i in range(a - 1):
        rlist.append([i + 4, 2 * n + 3 + i, 2 * n + 2 + i, i + 3])
        rlist.append([n + 3 + i, last - 2 - i, last - 1 - i, n + 2 + i])
    for i in range(b - 3):
        rlist.append([i + 4, n + a + 2 + i, n + a + 3 + i, i + 5])
        rlist.append([n + 3 + i, a + 3 + i, a + 4 + i, n + 4 + i])
    for i in range(a - 3):
        rlist.append([b + 3 + i, 2 * n - i, 2 * n - 1 - i, b + 4 + i])
    rlist.append([0, 2 * n + 1, 2, n + 2, 1, b + 2, b + 1, 2 * n, 1, last,
                  2, 3, 0, n + b + 1, n + b, n + 1])
    return rlist


def region_list_parameters(r, s, p, q):
    a = 1 + q + ((r * q) // p) // 2
    b = 1 + (p - q) + ((r * (p - q)) // p) // 2
    n = 1 + p + r // 2
    return {"a": a, "b": b, "n": n, "last": 2 * n + q + s // 2 + 2}


class DiagramError(ValueError):
    pass


@dataclass
class Diagram:
    """Closed pointed Heegaard diagram built from regions.

    regions: list of corner lists; colors[i] is the color of side 0 of
    region i (side k joins corner k to corner k+1); basepoint: index of the
    basepoint region.
    """

    regions: list
    colors: list
    basepoint: int
    alphas: list = field(default_factory=list)
    betas: list = field(default_factory=list)
    on_alpha: dict = field(default_factory=dict)
    on_beta: dict = field(default_factory=dict)
    owner: dict = field(default_factory=dict)

    def side_color(self, ri, k):
        c = self.colors[ri]
        return c if k % 2 == 0 else _other(c)

    def sides(self, ri):
        R = self.regions[ri]
        m = len(R)
        for k in range(m):
            yield k, R[k], R[(k + 1) % m], self.side_color(ri, k)

    @property
    def points(self):
        return sorted(self.on_alpha)

    @property
    def genus(self):
        V = len(self.on_alpha)
        E = sum(len(R) for R in self.regions) // 2
        F = len(self.regions)
        return (2 - (V - E + F)) // 2

    def bad_regions(self):
        return [i for i, R in enumerate(self.regions)
                if i != self.basepoint and len(R) not in (2, 4)]

    def is_nice(self):
        return not self.bad_regions()

    def to_region_list(self):
        return [list(R) for R in self.regions]


def _color_regions(regions):
    """Alternating side colors, consistent across shared arcs.

    Returns the color of side 0 of each region, with the arc 3-4 on a beta
    curve (consecutive labels along beta_0)."""
    occ = defaultdict(list)
    for ri, R in enumerate(regions):
        m = len(R)
        if m % 2:
            raise DiagramError("region %d has an odd number of corners" % ri)
        for k in range(m):
            occ[(R[k], R[(k + 1) % m])].append((ri, k))
    parity = {}
    for start in range(len(regions)):
        if start in parity:
            continue
        parity[start] = 0
        queue = deque([start])
        while queue:
            ri = queue.popleft()
            R = regions[ri]
            m = len(R)
            for k in range(m):
                u, v = R[k], R[(k + 1) % m]
                mine = (parity[ri] + k) % 2
                for rj, l in occ.get((v, u), []):
                    want = (mine + l) % 2
                    if rj in parity:
                        if parity[rj] != want and len(occ[(v, u)]) == 1:
                            raise DiagramError("inconsistent side colors at arc %r" % ((u, v),))
                    else:
                        parity[rj] = want
                        queue.append(rj)
    # parity 0 means side 0 has color X; pick X so that arc (3,4) is beta
    flip = None
    for ri, R in enumerate(regions):
        m = len(R)
        for k in range(m):
            if {R[k], R[(k + 1) % m]} == {3, 4}:
                flip = (parity[ri] + k) % 2
                break
        if flip is not None:
            break
    if flip is None:
        flip = 0
    # color(side k of ri) = BETA iff (parity + k) % 2 == flip
    return [BETA if parity[ri] % 2 == flip else ALPHA for ri in range(len(regions))]


def build_diagram(regions, colors=None, basepoint=None):
    """Validate a region list and reconstruct its curves."""
    regions = [list(R) for R in regions]
    if not regions:
        raise DiagramError("empty region list")
    for R in regions:
        if len(R) < 2 or any(not isinstance(x, int) for x in R):
            raise DiagramError("regions must be lists of at least two integer labels")
    if basepoint is None:
        basepoint = len(regions) - 1
    if colors is None:
        colors = _color_regions(regions)
    d = Diagram(regions, list(colors), basepoint)
    owner = {}
    for ri in range(len(regions)):
        for k, u, v, col in d.sides(ri):
            key = (u, v, col)
            if key in owner:
                raise DiagramError("arc %r appears twice with the same orientation" % (key,))
            owner[key] = (ri, k)
    for (u, v, col) in owner:
        if (v, u, col) not in owner:
            raise DiagramError("arc %r has no partner: not a closed surface" % ((u, v, col),))
    d.owner = owner
    corners = Counter(x for R in regions for x in R)
    bad = sorted(x for x, c in corners.items() if c != 4)
    if bad:
        raise DiagramError("points %r do not have exactly four corners" % (bad[:10],))
    for col, store, curves in ((ALPHA, d.on_alpha, d.alphas), (BETA, d.on_beta, d.betas)):
        nbrs = defaultdict(list)
        for (u, v, c) in owner:
            if c == col and u < v:
                nbrs[u].append(v)
                nbrs[v].append(u)
            elif c == col and u == v:
                raise DiagramError("degenerate arc at %r" % (u,))
        for x in corners:
            if len(nbrs[x]) != 2:
                raise DiagramError("point %r lies on %d %s-arcs" % (x, len(nbrs[x]), col))
        seen = set()
        cycles = []
        for start in sorted(corners):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            prev, cur = start, min(nbrs[start])
            while cur != start:
                cyc.append(cur)
                seen.add(cur)
                a, b = nbrs[cur]
                prev, cur = cur, (b if a == prev else a)
            cycles.append(cyc)
        # name curves by the contact point they contain
        named = {}
        for cyc in cycles:
            tags = [i for i in (0, 1, 2) if i in cyc]
            if len(tags) != 1:
                raise DiagramError("each %s-curve must contain exactly one contact point" % col)
            named[tags[0]] = cyc
        if sorted(named) != [0, 1, 2]:
            raise DiagramError("expected three %s-curves" % col)
        for i in (0, 1, 2):
            cyc = named[i]
            k = cyc.index(i)
            cyc = cyc[k:] + cyc[:k]
            curves.append(cyc)
            for x in cyc:
                store[x] = i
    for i in (0, 1, 2):
        if d.on_beta[i] != i or d.on_alpha[i] != i:
            raise DiagramError("contact point %d is not alpha_%d cap beta_%d" % (i, i, i))
    if d.genus != 3:
        raise DiagramError("surface has genus %d, expected 3" % d.genus)
    return d


def hexagons(d):
    return [i for i in d.bad_regions() if len(d.regions[i]) == 6]


# ------------------------------------------------------------ finger moves


def _across(d, ri, k):
    R = d.regions[ri]
    u, v = R[k], R[(k + 1) % len(R)]
    return d.owner[(v, u, d.side_color(ri, k))]


def _finger_chain(d, h, e):
    """Regions crossed by a finger pushed from across side e of hexagon h.

    Returns [(region, entry index, exit index), ...] ending with the tip
    region (exit None), or None when the chain hits a bad region."""
    K, _ = _across(d, h, e)
    if not (K == d.basepoint or len(d.regions[K]) == 2) or K == h:
        return None
    chain = [(h, e, (e + 3) % 6)]
    seen = {h}
    ri, k = h, (e + 3) % 6
    while True:
        nj, l = _across(d, ri, k)
        m = len(d.regions[nj])
        if nj == d.basepoint or m == 2:
            if nj in seen:
                return None
            chain.append((nj, l, None))
            return chain
        if m != 4 or nj in seen:
            return None
        seen.add(nj)
        chain.append((nj, l, (l + 2) % 4))
        ri, k = nj, (l + 2) % 4


def _apply_finger(d, chain):
    """Return new (regions, colors) after the finger move along chain."""
    regions = [list(R) for R in d.regions]
    colors = list(d.colors)
    h, e, x0 = chain[0]
    H = d.regions[h]
    P, Q = H[e], H[(e + 1) % 6]
    xcol = d.side_color(h, e)
    ycol = _other(xcol)
    K, kk = _across(d, h, e)
    nxt = max(max(R) for R in regions) + 1
    qs, ps = [], []
    for _ in range(len(chain) - 1):
        qs.append(nxt)
        ps.append(nxt + 1)
        nxt += 2
    new_regions = []  # (corners, color of side 0)
    replaced = {}

    # hexagon pieces; H rotated so that H[e] = P
    Hr = [H[(e + t) % 6] for t in range(6)]  # P, Q, c2, Fs, Fe, c5
    new_regions.append(([Q, Hr[2], Hr[3], qs[0]], ycol))
    new_regions.append(([ps[0], Hr[4], Hr[5], P], ycol))
    replaced[h] = True
    # squares crossed
    for j in range(1, len(chain) - 1):
        ri, l, _ = chain[j]
        S = d.regions[ri]
        Sr = [S[(l + t) % 4] for t in range(4)]  # v=Fe, u=Fs, Gs, Ge
        qj, pj, qn, pn = qs[j - 1], ps[j - 1], qs[j], ps[j]
        new_regions.append(([qj, Sr[1], Sr[2], qn], ycol))
        new_regions.append(([pn, Sr[3], Sr[0], pj], ycol))
        replaced[ri] = True
    # strip squares and tip bigon inside the finger
    for j in range(len(chain) - 2):
        new_regions.append(([qs[j], qs[j + 1], ps[j + 1], ps[j]], xcol))
    new_regions.append(([ps[-1], qs[-1]], ycol))
    # K: side Q->P becomes Q, q1, p1, P ; tip: Fe->Fs becomes Fe, pk, qk, Fs
    tip, tl, _ = chain[-1]
    edits = defaultdict(list)
    edits[K].append((kk, [qs[0], ps[0]]))
    edits[tip].append((tl, [ps[-1], qs[-1]]))
    out_regions, out_colors = [], []
    for ri, R in enumerate(regions):
        if ri in replaced:
            continue
        if ri in edits:
            R2, col0 = _insert_after(R, colors[ri], edits[ri])
        else:
            R2, col0 = R, colors[ri]
        out_regions.append(R2)
        out_colors.append(col0)
    base = [i for i, _ in enumerate(regions) if i not in replaced].index(d.basepoint)
    # keep the basepoint region last
    bz = out_regions.pop(base)
    bc = out_colors.pop(base)
    for R, c in new_regions:
        out_regions.append(R)
        out_colors.append(c)
    out_regions.append(bz)
    out_colors.append(bc)
    return out_regions, out_colors


def _insert_after(R, col0, edits):
    """Insert points after corner index k for each (k, points) in edits."""
    out = []
    ins = dict(edits)
    for k, x in enumerate(R):
        out.append(x)
        out.extend(ins.get(k, []))
    # two points per insertion keep side parities; a split side keeps its color
    return out, col0


def niceify(d, max_moves=8):
    """Remove hexagonal regions by finger moves pushed from the basepoint
    region (or a bigon) through the hexagon and along a strip of squares.

    Returns (nice diagram, list of moves) where each move records the chain
    of crossed regions by their corner lists."""
    moves = []
    for _ in range(max_moves):
        bad = d.bad_regions()
        if not bad:
            return d, moves
        if any(len(d.regions[i]) != 6 for i in bad):
            raise DiagramError("only hexagonal bad regions can be removed, got sizes %r"
                               % sorted({len(d.regions[i]) for i in bad}))
        best = None
        for h in bad:
            for e in range(6):
                ch = _finger_chain(d, h, e)
                if ch is None:
                    continue
                key = (len(ch), h, e)
                if best is None or key < best[0]:
                    best = (key, ch)
        if best is None:
            raise DiagramError("no admissible finger move found")
        ch = best[1]
        regions, colors = _apply_finger(d, ch)
        moves.append([list(d.regions[ri]) for ri, _, _ in ch])
        d = build_diagram(regions, colors, basepoint=len(regions) - 1)
    if d.bad_regions():
        raise DiagramError("diagram still has bad regions after %d moves" % max_moves)
    return d, moves


# ------------------------------------------------------------ generators


def intersection_table(d):
    """(i, j) -> sorted points of alpha_i cap beta_j."""
    table = defaultdict(list)
    for x in d.points:
        table[(d.on_alpha[x], d.on_beta[x])].append(x)
    return dict(table)


def generators(d):
    """All tuples (x0, x1, x2) with x_i on alpha_i, one point per beta."""
    table = intersection_table(d)
    out = []
    for perm in permutations(range(3)):
        lists = [table.get((i, perm[i]), []) for i in range(3)]
        out.extend(product(*lists))
    return out


def contact_generator():
    return (0, 1, 2)


# ------------------------------------------------------------ domains


class FloerEngine:
    """Counts empty embedded rectangles and bigons in a nice diagram.

    A domain from x to y with lead color L has oriented boundary running
    from each x corner along an L arc to a y corner, then along an arc of the
    other color to the next x corner.  The differential uses one lead color;
    domains of the other lead, read backwards, give the incoming terms.
    """

    def __init__(self, d):
        if not d.is_nice():
            raise DiagramError("diagram is not nice")
        self.d = d
        self.corners = defaultdict(list)
        for ri, R in enumerate(d.regions):
            for k, x in enumerate(R):
                self.corners[x].append((ri, k))
        self._bigons = {}
        self._rects = {}
        self._tiles = {}

    def _gen(self, pts):
        return tuple(sorted(pts, key=self.d.on_alpha.__getitem__))

    # rectangles

    def _tile_ok(self, ri):
        return ri != self.d.basepoint and len(self.d.regions[ri]) == 4

    def _tile(self, ri, k):
        t = self._tiles.get((ri, k))
        if t is None:
            R = self.d.regions[ri]
            t = self._tiles[(ri, k)] = tuple(R[(k + i) % 4] for i in range(4))
        return t

    def _right(self, tile):
        ri, k = tile
        R = self.d.regions[ri]
        nj, l = self.d.owner[(R[(k + 2) % 4], R[(k + 1) % 4], self.d.side_color(ri, k + 1))]
        return (nj, (l + 1) % 4) if self._tile_ok(nj) else None

    def _up(self, tile):
        ri, k = tile
        R = self.d.regions[ri]
        nj, l = self.d.owner[(R[(k + 3) % 4], R[(k + 2) % 4], self.d.side_color(ri, k + 2))]
        return (nj, l) if self._tile_ok(nj) else None

    def _rect_table(self, c0, lead):
        """Rectangles with first x corner c0, keyed by the opposite corner:
        c2 -> [(c1, c3, bitmask of interior points)]."""
        key = (c0, lead)
        if key in self._rects:
            return self._rects[key]
        table = defaultdict(list)
        for ri, k in self.corners[c0]:
            if not self._tile_ok(ri) or self.d.side_color(ri, k) != lead:
                continue
            bottom = [(ri, k)]
            while True:
                self._columns(bottom, table)
                nxt = self._right(bottom[-1])
                if nxt is None or nxt in bottom:
                    break
                bottom.append(nxt)
        self._rects[key] = table
        return table

    def _columns(self, bottom, table):
        w = len(bottom)
        row = list(bottom)
        used = set(bottom)
        c1 = self._tile(*bottom[-1])[1]
        interior = 0
        while True:
            top = [self._tile(*t) for t in row]
            table[top[-1][2]].append((c1, top[0][3], interior))
            for t in top[:-1]:
                interior |= 1 << t[2]
            new = []
            for t in row:
                u = self._up(t)
                if u is None or u in used:
                    return
                new.append(u)
            for i in range(w - 1):
                if self._right(new[i]) != new[i + 1]:
                    return
            used.update(new)
            row = new

    def rectangles_from(self, x, lead):
        """Targets of empty embedded rectangles out of generator x."""
        xmask = 0
        for p in x:
            xmask |= 1 << p
        out = []
        for c0 in x:
            table = self._rect_table(c0, lead)
            for c2 in x:
                # each rectangle is met from both x corners; keep the smaller
                if c2 <= c0:
                    continue
                for c1, c3, interior in table.get(c2, ()):
                    if interior & xmask or c1 in x or c3 in x or c1 == c3:
                        continue
                    out.append(self._gen([c1 if p == c0 else c3 if p == c2 else p for p in x]))
        return out

    # bigons

    def _curve(self, color, x):
        d = self.d
        return d.alphas[d.on_alpha[x]] if color == ALPHA else d.betas[d.on_beta[x]]

    def _arcs(self, color, u, v):
        """The two arcs of the color-curve through u and v, as point lists."""
        cyc = self._curve(color, u)
        n = len(cyc)
        i, j = cyc.index(u), cyc.index(v)
        fwd = [cyc[(i + t) % n] for t in range(((j - i) % n) + 1)]
        bwd = [cyc[(i - t) % n] for t in range(((i - j) % n) + 1)]
        return fwd, bwd

    def domain_of_loop(self, loop):
        """Multiplicities with boundary the loop, zero at the basepoint.

        loop is a list of (points, color) arcs, consecutive arcs sharing
        endpoints.  Returns None when the loop does not bound."""
        d = self.d
        coef = defaultdict(int)
        for pts, col in loop:
            for u, v in zip(pts, pts[1:]):
                coef[(u, v, col)] += 1
                coef[(v, u, col)] -= 1
        D = {d.basepoint: 0}
        queue = deque([d.basepoint])
        while queue:
            ri = queue.popleft()
            for k, u, v, col in d.sides(ri):
                nj, _ = d.owner[(v, u, col)]
                want = D[ri] - coef.get((u, v, col), 0)
                if nj in D:
                    if D[nj] != want:
                        return None
                else:
                    D[nj] = want
                    queue.append(nj)
        return D

    def maslov_quarter(self, D, x, y):
        """4 * (Euler measure + point measures) of the domain D."""
        d = self.d
        total = 0
        for ri, m in D.items():
            if m:
                total += m * (4 - len(d.regions[ri]))
        for p in list(x) + list(y):
            total += sum(D[ri] for ri, _ in self.corners[p])
        return total

    def _bigons_at(self, c0, lead):
        key = (c0, lead)
        if key in self._bigons:
            return self._bigons[key]
        d = self.d
        other = _other(lead)
        lcurve = set(self._curve(lead, c0))
        found = []
        for y0 in self._curve(other, c0):
            if y0 == c0 or y0 not in lcurve:
                continue
            for la in self._arcs(lead, c0, y0):
                for oa in self._arcs(other, y0, c0):
                    D = self.domain_of_loop([(la, lead), (oa, other)])
                    if D is None or min(D.values()) < 0 or max(D.values()) > 1:
                        continue
                    if self.maslov_quarter(D, (c0,), (y0,)) != 4:
                        continue
                    support = {ri for ri, m in D.items() if m}
                    touched = {p for ri in support for p in d.regions[ri]}
                    found.append((y0, touched))
        self._bigons[key] = found
        return found

    def bigons_from(self, x, lead):
        out = []
        for i, c0 in enumerate(x):
            rest = [p for p in x if p != c0]
            for y0, touched in self._bigons_at(c0, lead):
                if any(p in touched for p in rest):
                    continue
                out.append(self._gen([y0 if p == c0 else p for p in x]))
        return out

    def targets(self, x, lead):
        """Generators reached from x with odd count."""
        c = Counter(self.rectangles_from(x, lead))
        c.update(self.bigons_from(x, lead))
        return {y for y, m in c.items() if m % 2}


def differential_lead(engine):
    """Lead color for which the contact generator is a cycle."""
    ok = [L for L in (ALPHA, BETA) if not engine.targets(contact_generator(), L)]
    if not ok:
        raise DiagramError("contact generator is not a cycle in either orientation")
    return ok[0]


def contact_component(engine, lead=None, limit=None):
    """Chain complex on the connected component of the contact generator in
    the differential graph (a direct summand of CF-hat)."""
    from .algebra import ChainComplexF2

    if lead is None:
        lead = differential_lead(engine)
    back = _other(lead)
    start = contact_generator()
    seen = {start}
    queue = deque([start])
    boundary = {}
    incoming = defaultdict(set)
    while queue:
        x = queue.popleft()
        out = engine.targets(x, lead)
        boundary[x] = out
        nbrs = set(out) | engine.targets(x, back)
        for y in nbrs:
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if limit is not None and len(seen) > limit:
                    raise RuntimeError("component exceeds %d generators" % limit)
    return ChainComplexF2(sorted(seen), boundary, distinguished={start})


def full_complex(engine, lead):
    from .algebra import ChainComplexF2

    gens = generators(engine.d)
    boundary = {x: engine.targets(x, lead) for x in gens}
    return ChainComplexF2(gens, boundary)


# ------------------------------------------------------------ H_1 and signs


def _orientation_sign(d, x):
    """Local sign of alpha . beta at x with curves oriented along their
    stored cyclic order."""
    ri, k = next((ri, k) for ri, R in enumerate(d.regions) for k, p in enumerate(R) if p == x)
    R = d.regions[ri]
    m = len(R)
    prev_pt, next_pt = R[(k - 1) % m], R[(k + 1) % m]
    out_col = d.side_color(ri, k)
    if out_col == ALPHA:
        a_ray, b_ray = next_pt, prev_pt
    else:
        a_ray, b_ray = prev_pt, next_pt

    def along(cyc, ray):
        i = cyc.index(x)
        return 1 if cyc[(i + 1) % len(cyc)] == ray else -1

    sa = along(d.alphas[d.on_alpha[x]], a_ray)
    sb = along(d.betas[d.on_beta[x]], b_ray)
    return sa * sb if out_col == ALPHA else -sa * sb


def point_signs(d):
    return {x: _orientation_sign(d, x) for x in d.points}


def intersection_matrix(d):
    signs = point_signs(d)
    M = [[0] * 3 for _ in range(3)]
    for x, s in signs.items():
        M[d.on_alpha[x]][d.on_beta[x]] += s
    return M


def h1_from_diagram(d):
    """Invariant factors of H_1 = coker of the alpha-beta intersection matrix
    (0 stands for a Z summand; factors 1 are dropped)."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    S = smith_normal_form(Matrix(intersection_matrix(d)), domain=ZZ)
    facs = [abs(int(S[i, i])) for i in range(3)]
    return sorted(f for f in facs if f != 1)


def h1_order(d):
    """|H_1|, or 0 when H_1 is infinite."""
    out = 1
    for f in h1_from_diagram(d):
        out *= f
    return out


def generator_sign(d, x, signs=None):
    signs = signs or point_signs(d)
    perm = [d.on_beta[p] for p in x]
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j])
    s = -1 if inv % 2 else 1
    for p in x:
        s *= signs[p]
    return s


def euler_characteristic(d):
    signs = point_signs(d)
    return sum(generator_sign(d, x, signs) for x in generators(d))


# ------------------------------------------------------------ drivers


def hat_summary(rl, limit=None):
    """Niceify a region list and report the contact component."""
    from .algebra import homology_with_membership

    d = build_diagram(rl)
    nice, moves = niceify(d)
    eng = FloerEngine(nice)
    lead = differential_lead(eng)
    C = contact_component(eng, lead, limit=limit)
    dims, is_bd = homology_with_membership(C)
    return {
        "points": len(d.points),
        "nice_points": len(nice.points),
        "finger_moves": len(moves),
        "component_generators": len(C),
        "dims": [sum(dims.values())],
        "contact_vanishes": bool(is_bd),
        "h1": h1_from_diagram(d),
    }


def contact_vanishes_nice(rl, limit=None):
    return hat_summary(rl, limit=limit)["contact_vanishes"]
