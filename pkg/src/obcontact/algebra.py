"""
The torus algebra over F2 and decorated-graph models of modules over it.

Basis labels are strings: "i0", "i1" for the idempotents and "1", "2", "3",
"12", "23", "123" for the Reeb elements.  Type A graphs carry digit strings
on their edges; Type D graphs carry a single Reeb label or None (a pure
differential).  Everything is mod 2, so parallel edges with the same label
cancel in pairs.
"""

from collections import Counter, defaultdict, deque
import itertools
import random

REEB = ("1", "2", "3", "12", "23", "123")
IDEMS = ("i0", "i1")
BASIS = IDEMS + REEB

# (left idempotent, right idempotent) of each Reeb chord
_SIDES = {
    "1": (0, 1), "2": (1, 0), "3": (0, 1),
    "12": (0, 0), "23": (1, 1), "123": (0, 1),
}

_DIGIT_GRADING = {"1": (1, -1), "2": (1, 1), "3": (-1, 1)}  # half units


def left_idem(label):
    if label in IDEMS:
        return int(label[1])
    return _SIDES[label[0]][0]


def right_idem(label):
    if label in IDEMS:
        return int(label[1])
    return _SIDES[label[-1]][1]


def mul_basis(a, b):
    """Product of two basis labels, or None when it vanishes."""
    if a in IDEMS and b in IDEMS:
        return a if a == b else None
    if a in IDEMS:
        return b if int(a[1]) == left_idem(b) else None
    if b in IDEMS:
        return a if int(b[1]) == right_idem(a) else None
    if int(a[-1]) + 1 == int(b[0]):
        ab = a + b
        if ab in REEB:
            return ab
    return None


class AlgElt:
    """An F2 combination of basis labels."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        if isinstance(terms, str):
            terms = (terms,)
        acc = set()
        for t in terms:
            if t not in BASIS:
                raise ValueError("unknown basis element %r" % (t,))
            acc ^= {t}
        self.terms = frozenset(acc)

    def __add__(self, other):
        return AlgElt(tuple(self.terms) + tuple(other.terms))

    def __mul__(self, other):
        out = []
        for a in self.terms:
            for b in other.terms:
                c = mul_basis(a, b)
                if c is not None:
                    out.append(c)
        return AlgElt(out)

    def __eq__(self, other):
        if isinstance(other, str):
            other = AlgElt(other)
        return isinstance(other, AlgElt) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(sorted(self.terms, key=BASIS.index))


ONE = AlgElt(IDEMS)
ZERO = AlgElt()


def alg_mul(a, b):
    """Multiply two algebra elements (labels or AlgElt)."""
    if not isinstance(a, AlgElt):
        a = AlgElt(a)
    if not isinstance(b, AlgElt):
        b = AlgElt(b)
    return a * b


def label_mul(a, b):
    """Product of two edge labels where None is the identity.

    Returns (ok, label): ok is False when the product vanishes.
    """
    if a is None:
        return True, b
    if b is None:
        return True, a
    c = mul_basis(a, b)
    return c is not None, c


def split_minimal(s):
    """Split a digit string into the fewest Reeb chords.

    "232" -> ("23", "2"); "32321" -> ("3", "23", "2", "1").
    """
    parts = []
    for ch in s:
        if parts and int(parts[-1][-1]) + 1 == int(ch):
            parts[-1] += ch
        else:
            parts.append(ch)
    return tuple(parts)


def _string_ok(s):
    return all(right_idem(a) == left_idem(b) for a, b in zip(s, s[1:]))


def swap13(label):
    """Digit swap 1 <-> 3 on a label string (None stays None)."""
    if label is None:
        return None
    return label.translate(str.maketrans("13", "31"))


def opposite(label):
    """The anti-automorphism identifying the opposite algebra with A.

    Reverses a chord and swaps 1 <-> 3: rho_12 -> rho_23, rho_123 -> rho_123.
    """
    if label is None:
        return None
    if label in IDEMS:
        return "i1" if label == "i0" else "i0"
    return swap13(label)[::-1]


def label_grading(label):
    """Grading change of a Type A edge label, in half units."""
    x = y = 0
    for ch in label:
        dx, dy = _DIGIT_GRADING[ch]
        x += dx
        y += dy
    return (x, y)


def _sort_key(v):
    return repr(v)


def _has_cycle(nodes, succ):
    color = dict.fromkeys(nodes, 0)
    for root in nodes:
        if color[root]:
            continue
        stack = [(root, iter(succ.get(root, ())))]
        color[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = 2
                stack.pop()
            elif color[nxt] == 1:
                return True
            elif color[nxt] == 0:
                color[nxt] = 1
                stack.append((nxt, iter(succ.get(nxt, ()))))
    return False


def _weak_components(nodes, pairs):
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    roots = {}
    return {v: roots.setdefault(find(v), len(roots)) for v in nodes}


class TypeAGraph:
    """Decorated graph of a Type A module with no m_1.

    gens maps generator id -> idempotent (0 or 1); edges is a list of
    (source, target, digit string).
    """

    flavor = "A"

    def __init__(self, gens, edges, marks=None):
        self.gens = dict(gens)
        self.edges = [(a, b, str(lab)) for a, b, lab in edges]
        self.marks = dict(marks or {})
        self._succ = defaultdict(list)
        for a, b, lab in self.edges:
            self._succ[a].append((b, lab))

    def successors(self, x):
        return self._succ.get(x, [])

    def is_bounded(self):
        succ = {a: [b for b, _ in outs] for a, outs in self._succ.items()}
        return not _has_cycle(list(self.gens), succ)

    def components(self):
        return _weak_components(self.gens, [(a, b) for a, b, _ in self.edges])

    def strings_from(self, x, max_len=None):
        """All (concatenated label string, endpoint) over nonempty paths from x.

        Multiplicities are kept (as a Counter) so callers can reduce mod 2.
        Without max_len the graph must be acyclic.
        """
        out = Counter()
        stack = [(x, "")]
        while stack:
            node, s = stack.pop()
            for nxt, lab in self.successors(node):
                t = s + lab
                if max_len is not None and len(t) > max_len:
                    continue
                out[(t, nxt)] += 1
                stack.append((nxt, t))
        return out

    def actions(self, max_len):
        """m_{k+1}(x, ...) = y for every path of label length <= max_len.

        Returns a dict (x, tuple of chords) -> Counter of targets (mod 2).
        """
        table = defaultdict(Counter)
        for x in self.gens:
            for (s, y), c in self.strings_from(x, max_len).items():
                if c % 2:
                    table[(x, split_minimal(s))][y] += c
        for key in list(table):
            cnt = Counter({y: 1 for y, c in table[key].items() if c % 2})
            if cnt:
                table[key] = cnt
            else:
                del table[key]
        return dict(table)

    def act(self, x, chords):
        """Targets (mod 2) of m_{k+1}(x, chords) read off the graph."""
        s = "".join(chords)
        if not s or split_minimal(s) != tuple(chords):
            return Counter()
        frontier = Counter({(x, 0): 1})
        done = Counter()
        while frontier:
            nxt = Counter()
            for (node, pos), c in frontier.items():
                for tgt, lab in self.successors(node):
                    if s.startswith(lab, pos):
                        end = pos + len(lab)
                        if end == len(s):
                            done[tgt] += c
                        else:
                            nxt[(tgt, end)] += c
            frontier = nxt
        return Counter({y: 1 for y, c in done.items() if c % 2})

    def to_json(self):
        return _graph_json(self, lambda lab: lab)


def expand_type_a(g, max_len):
    """List the actions of a Type A graph as (x, chords, y) triples."""
    return sorted(
        ((x, chords, y) for (x, chords), ys in g.actions(max_len).items() for y in ys),
        key=_sort_key,
    )


class TypeDGraph:
    """Decorated graph of a Type D structure.

    Edges are stored mod 2 as a set of (source, target, label) with label a
    Reeb chord or None for a pure differential.
    """

    flavor = "D"

    def __init__(self, gens, edges, marks=None):
        self.gens = dict(gens)
        es = set()
        for a, b, lab in edges:
            es ^= {(a, b, lab)}
        self.edges = es
        self.marks = dict(marks or {})
        self._succ = defaultdict(list)
        self._pred = defaultdict(list)
        for a, b, lab in sorted(es, key=_sort_key):
            self._succ[a].append((b, lab))
            self._pred[b].append((a, lab))

    def successors(self, x):
        return self._succ.get(x, [])

    def predecessors(self, x):
        return self._pred.get(x, [])

    def pure_edges(self):
        return sorted(((a, b) for a, b, lab in self.edges if lab is None), key=_sort_key)

    def is_bounded(self):
        succ = {a: [b for b, _ in outs] for a, outs in self._succ.items()}
        return not _has_cycle(list(self.gens), succ)

    def components(self):
        return _weak_components(self.gens, [(a, b) for a, b, _ in self.edges])

    def walk(self, y, labels):
        """Endpoints (mod 2) of paths from y whose labels are exactly `labels`."""
        cur = Counter({y: 1})
        for lab in labels:
            nxt = Counter()
            for node, c in cur.items():
                for tgt, l2 in self.successors(node):
                    if l2 == lab:
                        nxt[tgt] += c
            cur = Counter({k: 1 for k, v in nxt.items() if v % 2})
            if not cur:
                break
        return cur

    def paths_from(self, y, max_len):
        """Counter over (label tuple, endpoint) for paths of length 1..max_len."""
        out = Counter()
        frontier = Counter({((), y): 1})
        for _ in range(max_len):
            nxt = Counter()
            for (labs, node), c in frontier.items():
                for tgt, lab in self.successors(node):
                    nxt[(labs + (lab,), tgt)] += c
            out.update(nxt)
            frontier = nxt
        return out

    def to_json(self):
        return _graph_json(self, lambda lab: lab)


def _graph_json(g, conv):
    ids = {v: (v if isinstance(v, str) else repr(v)) for v in g.gens}
    edges = sorted(g.edges, key=_sort_key)
    out = {
        "generators": [{"id": ids[v], "idem": g.gens[v]} for v in g.gens],
        "edges": [{"from": ids[a], "to": ids[b], "label": conv(lab)} for a, b, lab in edges],
        "marks": {},
    }
    for k, v in g.marks.items():
        if isinstance(v, list):
            out["marks"][k] = [ids[x] for x in v]
        else:
            out["marks"][k] = ids[v]
    return out


def graph_from_json(obj):
    """Inverse of to_json.  Flavor is inferred: any null label means Type D
    unless obj carries "flavor": "A"."""
    gens = {g["id"]: int(g["idem"]) for g in obj["generators"]}
    edges = [(e["from"], e["to"], e.get("label")) for e in obj["edges"]]
    marks = obj.get("marks", {})
    flavor = obj.get("flavor")
    if flavor is None:
        flavor = "D" if any(lab is None for _, _, lab in edges) else "A"
    if flavor == "A":
        return TypeAGraph(gens, edges, marks)
    return TypeDGraph(gens, edges, marks)


class DABimodule:
    """Type DA bimodule given by its nonzero structure entries.

    gens: id -> (left idem, right idem).
    entries: dict (x, tuple of input chords) -> set of (output label or None, y).
    Strict unitality m(x, 1) = 1 (x) x is implicit and never stored.
    """

    def __init__(self, gens, entries):
        self.gens = dict(gens)
        self.entries = {}
        for key, outs in entries.items():
            acc = set()
            for o in outs:
                acc ^= {o}
            if acc:
                self.entries[key] = acc
        self.max_inputs = max((len(k[1]) for k in self.entries), default=0)

    def entry_list(self):
        rows = []
        for (x, ins), outs in self.entries.items():
            for out, y in outs:
                rows.append((x, ins, out, y))
        return sorted(rows, key=_sort_key)

    def delta(self, x, ins):
        """m_{0,1,k+1}(x, ins) as a set of (label, y), with strict unitality."""
        if ins == (None,):
            return {(None, x)}
        if None in ins:
            return set()
        return self.entries.get((x, tuple(ins)), set())


class DDBimodule:
    """Type DD bimodule: delta maps x -> set of (left label, y, right label)."""

    def __init__(self, gens, delta):
        self.gens = dict(gens)
        self.delta = {}
        for x, outs in delta.items():
            acc = set()
            for o in outs:
                acc ^= {o}
            self.delta[x] = acc

    def step(self, x):
        return self.delta.get(x, set())


class ChainComplexF2:
    """Finite chain complex over F2 with sparse boundary sets.

    boundary maps each generator to the frozenset of generators in its
    boundary.  distinguished is an optional cycle given as a set of
    generators; component maps generators to a summand label.
    """

    def __init__(self, gens, boundary, distinguished=None, component=None):
        self.gens = list(gens)
        self.boundary = {g: frozenset(boundary.get(g, ())) for g in self.gens}
        self.distinguished = None if distinguished is None else frozenset(distinguished)
        self.component = dict(component) if component is not None else None

    def __len__(self):
        return len(self.gens)

    def d(self, chain):
        acc = set()
        for g in chain:
            acc ^= self.boundary[g]
        return frozenset(acc)

    def d_squared_zero(self):
        return all(not self.d(self.boundary[g]) for g in self.gens)

    def matrix(self):
        """Dense boundary matrix (numpy uint8), column j = boundary of gen j."""
        import numpy

        idx = {g: i for i, g in enumerate(self.gens)}
        m = numpy.zeros((len(self.gens), len(self.gens)), dtype=numpy.uint8)
        for g, bd in self.boundary.items():
            for h in bd:
                m[idx[h], idx[g]] ^= 1
        return m

    def components(self):
        if self.component is not None:
            return self.component
        pairs = [(g, h) for g, bd in self.boundary.items() for h in bd]
        return _weak_components(self.gens, pairs)


def reduce_complex(C, order=None):
    """Cancel every differential of C by zigzag elimination.

    Returns (surviving generators, transported distinguished chain).  The
    distinguished chain is pushed through the projection of each
    cancellation, so it reduces to the empty set exactly when it was a
    boundary.  `order` may be a random.Random used to pick pivots.
    """
    bd = {g: set(b) for g, b in C.boundary.items()}
    co = defaultdict(set)
    for g, b in bd.items():
        for h in b:
            co[h].add(g)
    alive = set(C.gens)
    mark = set(C.distinguished or ())
    pending = deque(sorted((g for g in C.gens if bd[g]), key=_sort_key))
    while True:
        if order is not None:
            cands = [g for g in alive if bd[g]]
            if not cands:
                break
            x = order.choice(sorted(cands, key=_sort_key))
        else:
            x = None
            while pending:
                g = pending.popleft()
                if g in alive and bd[g]:
                    x = g
                    break
            if x is None:
                break
        y = min(bd[x], key=_sort_key)
        rest = bd[x] - {y}
        for z in list(co[y]):
            if z == x:
                continue
            bz = bd[z]
            for w in rest:
                if w in bz:
                    bz.discard(w)
                    co[w].discard(z)
                else:
                    bz.add(w)
                    co[w].add(z)
            bz.discard(y)
            if order is None and bz:
                pending.append(z)
        if y in mark:
            mark ^= rest
            mark.discard(y)
        mark.discard(x)
        for g in (x, y):
            for h in bd[g]:
                co[h].discard(g)
            for z in co[g]:
                bd[z].discard(g)
            bd[g] = set()
            co[g] = set()
            alive.discard(g)
    return alive, frozenset(mark)


def homology_with_membership(C, order=None):
    """Homology dimensions per summand and whether the distinguished cycle
    is a boundary (None when there is no distinguished cycle)."""
    if C.distinguished is not None and C.d(C.distinguished):
        raise ValueError("distinguished element is not a cycle")
    comp = C.components()
    alive, mark = reduce_complex(C, order)
    dims = Counter(comp[g] for g in alive)
    is_bd = None if C.distinguished is None else not mark
    return dict(sorted(dims.items(), key=_sort_key)), is_bd


def find_primitive(C):
    """A chain whose boundary is the distinguished cycle, or None."""
    import numpy

    target = C.distinguished
    if target is None:
        raise ValueError("no distinguished cycle")
    sol = _f2_solve(C, target)
    if sol is None:
        return None
    chain = frozenset(sol)
    assert C.d(chain) == target
    return chain


def _f2_solve(C, target):
    # Gaussian elimination with python ints as bit rows; columns are gens
    idx = {g: i for i, g in enumerate(C.gens)}
    rows = []  # (pivot bit, vector over gens as int, combination of generators as int)
    pivots = {}
    for j, g in enumerate(C.gens):
        v = 0
        for h in C.boundary[g]:
            v ^= 1 << idx[h]
        comb = 1 << j
        while v:
            p = v.bit_length() - 1
            if p in pivots:
                pv, pc = pivots[p]
                v ^= pv
                comb ^= pc
            else:
                pivots[p] = (v, comb)
                break
    t = 0
    for h in target:
        t ^= 1 << idx[h]
    comb = 0
    while t:
        p = t.bit_length() - 1
        if p not in pivots:
            return None
        pv, pc = pivots[p]
        t ^= pv
        comb ^= pc
    return [C.gens[j] for j in range(len(C.gens)) if comb >> j & 1]


# ---------------------------------------------------------------- validation


def validate_structures(x, max_len=4):
    """Check a graph or bimodule; returns a report dict with a list of
    violations under "errors" and "ok" True when there are none."""
    if isinstance(x, TypeAGraph):
        return _validate_a(x, max_len)
    if isinstance(x, TypeDGraph):
        return _validate_d(x)
    if isinstance(x, DABimodule):
        return _validate_da(x)
    if isinstance(x, DDBimodule):
        return _validate_dd(x)
    raise TypeError("cannot validate %r" % (type(x),))


def _validate_a(g, max_len):
    errors = []
    for a, b, lab in g.edges:
        if a not in g.gens or b not in g.gens:
            errors.append("edge %r->%r references an unknown generator" % (a, b))
            continue
        if not lab or set(lab) - set("123") or not _string_ok(lab):
            errors.append("edge %r->%r has malformed label %r" % (a, b, lab))
            continue
        if left_idem(lab[0]) != g.gens[a] or right_idem(lab[-1]) != g.gens[b]:
            errors.append("edge %r->%r label %r breaks idempotents" % (a, b, lab))
    bounded = g.is_bounded()
    if not errors:
        errors.extend(_ainf_errors(g, max_len))
    return {"ok": not errors, "errors": errors, "bounded": bounded}


def _ainf_errors(g, max_len):
    """A-infinity relations of the graph's module on all input strings of
    total length <= max_len (no m_1, strictly unital, mu_2 only)."""
    errors = []
    memo = {}

    def act(x, chords):
        key = (x, chords)
        if key not in memo:
            memo[key] = g.act(x, chords)
        return memo[key]

    seqs = []
    for k in range(2, max_len + 1):
        for seq in itertools.product(REEB, repeat=k):
            if sum(map(len, seq)) > max_len:
                continue
            if all(right_idem(a) == left_idem(b) for a, b in zip(seq, seq[1:])):
                seqs.append(seq)
    for x in g.gens:
        for seq in seqs:
            if left_idem(seq[0]) != g.gens[x]:
                continue
            total = Counter()
            for i in range(1, len(seq)):
                for y in act(x, seq[:i]):
                    for z in act(y, seq[i:]):
                        total[z] += 1
            for j in range(len(seq) - 1):
                c = mul_basis(seq[j], seq[j + 1])
                if c is not None:
                    for z in act(x, seq[:j] + (c,) + seq[j + 2:]):
                        total[z] += 1
            bad = [z for z, c in total.items() if c % 2]
            if bad:
                errors.append("A-infinity relation fails at %r %r" % (x, seq))
    return errors


def _validate_d(g):
    errors = []
    for a, b, lab in g.edges:
        if a not in g.gens or b not in g.gens:
            errors.append("edge %r->%r references an unknown generator" % (a, b))
            continue
        if lab is None:
            if g.gens[a] != g.gens[b]:
                errors.append("pure edge %r->%r joins different idempotents" % (a, b))
        elif lab not in REEB:
            errors.append("edge %r->%r has label %r" % (a, b, lab))
        elif left_idem(lab) != g.gens[a] or right_idem(lab) != g.gens[b]:
            errors.append("edge %r->%r label %r breaks idempotents" % (a, b, lab))
    if not errors:
        for x in g.gens:
            total = Counter()
            for y, l1 in g.successors(x):
                for z, l2 in g.successors(y):
                    ok, c = label_mul(l1, l2)
                    if ok:
                        total[(c, z)] += 1
            bad = [k for k, c in total.items() if c % 2]
            if bad:
                errors.append("type D relation fails at %r: %r" % (x, sorted(bad, key=_sort_key)))
    return {"ok": not errors, "errors": errors, "bounded": g.is_bounded()}


def _validate_da(m):
    errors = []
    for (x, ins), outs in m.entries.items():
        lx, rx = m.gens[x]
        chain_ok = all(right_idem(a) == left_idem(b) for a, b in zip(ins, ins[1:]))
        if ins and (left_idem(ins[0]) != rx or not chain_ok):
            errors.append("entry %r %r: inputs incompatible" % (x, ins))
            continue
        end = right_idem(ins[-1]) if ins else rx
        for out, y in outs:
            ly, ry = m.gens[y]
            if ry != end:
                errors.append("entry %r %r -> %r: right idempotent mismatch" % (x, ins, (out, y)))
            lo, ro = (lx, lx) if out is None else (left_idem(out), right_idem(out))
            if lo != lx or ro != ly:
                errors.append("entry %r %r -> %r: left idempotent mismatch" % (x, ins, (out, y)))
    if not errors:
        errors.extend(_da_relation_errors(m))
    return {"ok": not errors, "errors": errors}


def _da_relation_errors(m, max_inputs=None):
    """Structure relation of a strictly unital DA bimodule with mu_1 = 0:
    sum over splittings of mu_2(out_1, out_2) plus the terms with adjacent
    inputs multiplied must vanish."""
    if max_inputs is None:
        max_inputs = m.max_inputs + 1
    errors = []
    seqs = [()]
    for k in range(1, max_inputs + 1):
        for seq in itertools.product(REEB, repeat=k):
            if all(right_idem(a) == left_idem(b) for a, b in zip(seq, seq[1:])):
                seqs.append(seq)
    for x in m.gens:
        rx = m.gens[x][1]
        for seq in seqs:
            if seq and left_idem(seq[0]) != rx:
                continue
            total = Counter()
            for i in range(len(seq) + 1):
                for o1, y in m.delta(x, seq[:i]):
                    for o2, z in m.delta(y, seq[i:]):
                        if o1 is None and o2 is None and i in (0, len(seq)):
                            pass
                        ok, c = label_mul(o1, o2)
                        if ok:
                            total[(c, z)] += 1
            for j in range(len(seq) - 1):
                c = mul_basis(seq[j], seq[j + 1])
                if c is not None:
                    for o, z in m.delta(x, seq[:j] + (c,) + seq[j + 2:]):
                        total[(o, z)] += 1
            bad = [k for k, c in total.items() if c % 2]
            if bad:
                errors.append("DA relation fails at %r %r: %r" % (x, seq, sorted(bad, key=_sort_key)))
    return errors


def _validate_dd(m):
    errors = []
    for x, outs in m.delta.items():
        lx, rx = m.gens[x]
        for a, y, b in outs:
            ly, ry = m.gens[y]
            la, ra = (lx, lx) if a is None else (left_idem(a), right_idem(a))
            lb, rb = (ry, ry) if b is None else (left_idem(b), right_idem(b))
            if la != lx or ra != ly or lb != ry or rb != rx:
                errors.append("delta(%r) term %r breaks idempotents" % (x, (a, y, b)))
    if not errors:
        for x in m.gens:
            total = Counter()
            for a1, y, b1 in m.step(x):
                for a2, z, b2 in m.step(y):
                    ok1, a = label_mul(a1, a2)
                    ok2, b = label_mul(b2, b1)
                    if ok1 and ok2:
                        total[(a, z, b)] += 1
            bad = [k for k, c in total.items() if c % 2]
            if bad:
                errors.append("DD relation fails at %r" % (x,))
    return {"ok": not errors, "errors": errors}


# ------------------------------------------------------------ box tensors


def box_ad(A, D):
    """Chain complex A [x] D from a Type A graph and a Type D graph."""
    a_bounded = A.is_bounded()
    if not a_bounded and not D.is_bounded():
        raise ValueError("box tensor needs a bounded factor")
    gens = [(x, y) for x in A.gens for y in D.gens if A.gens[x] == D.gens[y]]
    boundary = {}
    if a_bounded:
        acts = {}
        for x in A.gens:
            tbl = Counter()
            for (s, x2), c in A.strings_from(x).items():
                tbl[(split_minimal(s), x2)] += c
            acts[x] = [(k, x2) for (k, x2), c in tbl.items() if c % 2]
        for x, y in gens:
            acc = Counter()
            for y2, lab in D.successors(y):
                if lab is None:
                    acc[(x, y2)] += 1
            for chords, x2 in acts[x]:
                for y2 in D.walk(y, chords):
                    acc[(x2, y2)] += 1
            boundary[(x, y)] = {g for g, c in acc.items() if c % 2}
    else:
        depth = _longest_path(D)
        for x, y in gens:
            acc = Counter()
            for (labs, y2), c in D.paths_from(y, depth).items():
                if labs == (None,):
                    acc[(x, y2)] += c
                elif None not in labs:
                    for x2 in A.act(x, labs):
                        acc[(x2, y2)] += c
            boundary[(x, y)] = {g for g, c in acc.items() if c % 2}
    dist = None
    ca, cd = A.marks.get("contact"), D.marks.get("contact")
    if ca is not None and cd is not None and A.gens[ca] == D.gens[cd]:
        dist = {(ca, cd)}
    comp_a, comp_d = A.components(), D.components()
    component = {(x, y): (comp_a[x], comp_d[y]) for x, y in gens}
    return ChainComplexF2(gens, boundary, dist, component)


def _longest_path(g):
    order = []
    succ = {v: [b for b, _ in g.successors(v)] for v in g.gens}
    indeg = Counter(b for v in g.gens for b in succ[v])
    queue = deque(v for v in g.gens if indeg[v] == 0)
    while queue:
        v = queue.popleft()
        order.append(v)
        for b in succ[v]:
            indeg[b] -= 1
            if indeg[b] == 0:
                queue.append(b)
    best = dict.fromkeys(g.gens, 0)
    for v in reversed(order):
        for b in succ[v]:
            best[v] = max(best[v], best[b] + 1)
    return max(best.values(), default=0)


def box_da_d(B, D):
    """Type D structure B [x] D for a DA bimodule B with bounded inputs."""
    if not B.entries and not D.gens:
        return TypeDGraph({}, [])
    depth = B.max_inputs
    gens = {}
    for b, (lb, rb) in B.gens.items():
        for y, iy in D.gens.items():
            if rb == iy:
                gens[(b, y)] = lb
    edges = []
    for (b, y) in gens:
        for out, b2 in B.delta(b, ()):
            edges.append(((b, y), (b2, y), out))
        if depth:
            for (labs, y2), c in D.paths_from(y, depth).items():
                if c % 2 == 0:
                    continue
                for out, b2 in B.delta(b, labs):
                    edges.append(((b, y), (b2, y2), out))
        else:
            for y2, lab in D.successors(y):
                if lab is None:
                    edges.append(((b, y), (b, y2), None))
    return TypeDGraph(gens, edges)


def box_a_dd(A, DD):
    """Left Type D structure from a Type A graph and a DD bimodule.

    The tensor is naturally a right Type D structure; it is read as a left
    one through `opposite`, so idempotents flip and labels are reversed and
    swapped.
    """
    gens = {}
    for x, ix in A.gens.items():
        for y, (ly, ry) in DD.gens.items():
            if ly == ix:
                gens[(x, y)] = 1 - ry
    # iterated differentials of DD are finite when DD is nilpotent
    seqs = {}

    def dd_paths(y):
        if y in seqs:
            return seqs[y]
        out = Counter()
        frontier = Counter({((), y, None): 1})
        depth = 0
        while frontier:
            depth += 1
            if depth > 64:
                raise ValueError("DD bimodule is not nilpotent")
            nxt = Counter()
            for (lefts, node, right), c in frontier.items():
                for a, z, b in DD.step(node):
                    ok, r = label_mul(b, right)
                    if ok:
                        nxt[(lefts + (a,), z, r)] += c
            frontier = Counter({k: c % 2 for k, c in nxt.items() if c % 2})
            out.update(frontier)
        seqs[y] = out
        return out

    edges = []
    for (x, y) in gens:
        for (lefts, y2, right), c in dd_paths(y).items():
            if c % 2 == 0:
                continue
            if lefts == (None,):
                targets = Counter({x: 1})
            elif None in lefts:
                continue
            else:
                targets = A.act(x, lefts)
            for x2 in targets:
                if (x2, y2) in gens:
                    edges.append(((x, y), (x2, y2), opposite(right)))
    return TypeDGraph(gens, edges)


# ------------------------------------------------------------ cancellation


def cancel_pure(D, protected=(), rng=None, protect_marks=True):
    """Cancel pure differentials x -> y by the zigzag rule until none are
    cancellable.  Pure edges touching a protected generator stay.

    Pivots are taken in lexicographic order unless rng (a random.Random)
    is given.  With protect_marks, every marked generator is protected so
    marks survive unchanged.
    """
    prot = set(protected)
    marks = {k: (list(v) if isinstance(v, list) else v) for k, v in D.marks.items()}
    if protect_marks:
        for v in marks.values():
            prot.update(v if isinstance(v, list) else [v])
    gens = dict(D.gens)
    out = defaultdict(dict)  # src -> {(dst, label): 1}
    inn = defaultdict(dict)
    for a, b, lab in D.edges:
        out[a][(b, lab)] = 1
        inn[b][(a, lab)] = 1

    def toggle(a, b, lab):
        if (b, lab) in out[a]:
            del out[a][(b, lab)]
            del inn[b][(a, lab)]
        else:
            out[a][(b, lab)] = 1
            inn[b][(a, lab)] = 1

    def candidates():
        return sorted(
            ((a, b) for a in gens for (b, lab) in out[a]
             if lab is None and a != b and a not in prot and b not in prot),
            key=_sort_key,
        )

    while True:
        cands = candidates()
        if not cands:
            break
        x, y = rng.choice(cands) if rng is not None else cands[0]
        ins = [(z, lab) for (z, lab) in inn[y] if z not in (x, y)]
        outs = [(w, lab) for (w, lab) in out[x] if w not in (x, y)]
        for z, li in ins:
            for w, lj in outs:
                ok, lab = label_mul(li, lj)
                if ok:
                    toggle(z, w, lab)
        for v in (x, y):
            for (w, lab) in list(out[v]):
                toggle(v, w, lab)
            for (z, lab) in list(inn[v]):
                toggle(z, v, lab)
            del gens[v]
        for k, v in list(marks.items()):
            if isinstance(v, list):
                marks[k] = [u for u in v if u in gens]
            elif v not in gens:
                del marks[k]
    edges = [(a, b, lab) for a in gens for (b, lab) in out[a]]
    return TypeDGraph(gens, edges, marks)


def relabel_13(g):
    """Type D graph without pure edges <-> Type A graph by swapping 1 and 3."""
    if isinstance(g, TypeDGraph):
        if any(lab is None for _, _, lab in g.edges):
            raise ValueError("graph has pure differentials")
        edges = sorted(((a, b, swap13(lab)) for a, b, lab in g.edges), key=_sort_key)
        return TypeAGraph(g.gens, edges, g.marks)
    if isinstance(g, TypeAGraph):
        edges = []
        for a, b, lab in g.edges:
            d = swap13(lab)
            if d not in REEB:
                raise ValueError("label %r is not a single chord" % (lab,))
            edges.append((a, b, d))
        return TypeDGraph(g.gens, edges, g.marks)
    raise TypeError(type(g))


def graphs_isomorphic(g, h):
    """Isomorphism of decorated graphs respecting idempotents and labels."""
    import networkx
    from networkx.algorithms import isomorphism

    def to_nx(x):
        G = networkx.MultiDiGraph()
        for v, i in x.gens.items():
            G.add_node(v, idem=i)
        for a, b, lab in x.edges:
            G.add_edge(a, b, label=lab)
        return G

    if len(g.gens) != len(h.gens) or len(g.edges) != len(h.edges):
        return False
    gm = isomorphism.MultiDiGraphMatcher(
        to_nx(g), to_nx(h),
        node_match=isomorphism.categorical_node_match("idem", None),
        edge_match=isomorphism.categorical_multiedge_match("label", None),
    )
    return gm.is_isomorphic()


# ---------------------------------------------------------------- gradings


def _edge_grading(g, lab):
    if isinstance(g, TypeDGraph):
        if lab is None:
            raise ValueError("pure differentials carry no grading here")
        lab = swap13(lab)
    return label_grading(lab)


def lift_gradings(g):
    """Path-lift gradings (half units) over each weak component.

    Returns (grading dict, cycle vectors) where the cycle vectors span the
    indeterminacy lattice.
    """
    adj = defaultdict(list)
    for a, b, lab in g.edges:
        v = _edge_grading(g, lab)
        adj[a].append((b, v))
        adj[b].append((a, (-v[0], -v[1])))
    gr = {}
    cycles = []
    for root in g.gens:
        if root in gr:
            continue
        gr[root] = (0, 0)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w, (dx, dy) in adj[u]:
                val = (gr[u][0] + dx, gr[u][1] + dy)
                if w not in gr:
                    gr[w] = val
                    queue.append(w)
                elif gr[w] != val:
                    cycles.append((val[0] - gr[w][0], val[1] - gr[w][1]))
    return gr, cycles


def lattice_generator(vectors):
    """Generator of a rank <= 1 lattice of integer vectors (or None).

    Raises ValueError when the vectors span rank 2.
    """
    vs = [v for v in vectors if v != (0, 0)]
    if not vs:
        return None
    a = vs[0]
    for b in vs[1:]:
        if a[0] * b[1] - a[1] * b[0]:
            raise ValueError("grading indeterminacy has rank 2")
    from math import gcd

    # all vectors are multiples of the primitive direction of a
    g0 = gcd(abs(a[0]), abs(a[1]))
    prim = (a[0] // g0, a[1] // g0)
    k = 0
    for v in vs:
        t = v[0] // prim[0] if prim[0] else v[1] // prim[1]
        k = gcd(k, abs(t))
    gen = (prim[0] * k, prim[1] * k)
    if gen[0] < 0 or (gen[0] == 0 and gen[1] < 0):
        gen = (-gen[0], -gen[1])
    return gen


def reduce_mod(v, gen):
    """Canonical representative of v modulo the lattice Z*gen (half units)."""
    if gen is None:
        return v
    if gen[0]:
        t = v[0] // gen[0]
    else:
        t = v[1] // gen[1]
    return (v[0] - t * gen[0], v[1] - t * gen[1])


def grading_diff(g, x, y, quotient=None):
    """gr(y) - gr(x) in half units, reduced mod the quotient vector.

    quotient defaults to the cycle lattice of the component.
    """
    comp = g.components()
    if comp[x] != comp[y]:
        raise ValueError("generators lie in different components")
    gr, cycles = lift_gradings(g)
    if quotient is None:
        members = {v for v in g.gens if comp[v] == comp[x]}
        quotient = lattice_generator(
            [c for c in cycles] if len(set(comp.values())) == 1 else _component_cycles(g, members)
        )
    d = (gr[y][0] - gr[x][0], gr[y][1] - gr[x][1])
    return reduce_mod(d, quotient)


def _component_cycles(g, members):
    sub = type(g)({v: g.gens[v] for v in members},
                  [(a, b, lab) for a, b, lab in g.edges if a in members])
    return lift_gradings(sub)[1]


def _compose(f, g):
    """f after g for maps N -> A (x) N given as dicts of (label, target) sets."""
    out = {}
    for x, terms in g.items():
        acc = set()
        for a, y in terms:
            for b, z in f.get(y, ()):
                ok, c = label_mul(a, b)
                if ok:
                    acc ^= {(c, z)}
        out[x] = acc
    return out


def _chords_between(i, j):
    out = [lab for lab in REEB if left_idem(lab) == i and right_idem(lab) == j]
    if i == j:
        out.append(None)
    return out


def random_typed_graph(rng, core, expansions, changes=None):
    """A random Type D graph that cancels back to core.

    Adds `expansions` acyclic pairs x -> y, then conjugates the structure
    map by changes of basis 1 + h, each h a single term (so h^2 = 0 and the
    conjugate still squares to zero).  Every pair gets one side: either h
    runs from a core generator into y, or from x to a core generator.  With
    one-sided pairs every cancellation order returns a graph isomorphic to
    core.  Marked generators are never the source of h.
    """
    gens = dict(core.gens)
    delta = defaultdict(set)
    for a, b, lab in core.edges:
        delta[a] ^= {(lab, b)}
    marked = set()
    for v in core.marks.values():
        marked.update(v if isinstance(v, list) else [v])
    pairs = []
    for n in range(expansions):
        x, y = "x%d" % n, "y%d" % n
        gens[x] = gens[y] = rng.randrange(2)
        delta[x].add((None, y))
        pairs.append((x, y, rng.choice(("in", "out"))))
    if changes is None:
        changes = 2 * expansions
    names = sorted(gens, key=_sort_key)
    old = sorted(core.gens, key=_sort_key)
    free = [v for v in old if v not in marked]
    for _ in range(changes if pairs and free else 0):
        x, y, side = rng.choice(pairs)
        if side == "in":
            u, v = rng.choice(free), y
        else:
            u, v = x, rng.choice(old)
        lab = rng.choice(_chords_between(gens[u], gens[v]))
        phi = {w: {(None, w)} for w in names}
        phi[u] = phi[u] | {(lab, v)}
        d = {w: set(delta.get(w, ())) for w in names}
        delta = defaultdict(set, _compose(phi, _compose(d, phi)))
    edges = [(a, b, lab) for a in names for lab, b in delta.get(a, ())]
    return TypeDGraph(gens, edges, dict(core.marks))


__all__ = [
    "AlgElt", "ONE", "ZERO", "REEB", "BASIS", "alg_mul", "mul_basis", "label_mul",
    "left_idem", "right_idem", "split_minimal", "swap13", "opposite",
    "label_grading", "TypeAGraph", "TypeDGraph", "DABimodule", "DDBimodule",
    "ChainComplexF2", "expand_type_a", "validate_structures", "box_ad",
    "box_da_d", "box_a_dd", "cancel_pure", "relabel_13", "graphs_isomorphic",
    "homology_with_membership", "reduce_complex", "find_primitive",
    "graph_from_json", "lift_gradings", "lattice_generator", "reduce_mod",
    "grading_diff", "random_typed_graph",
]
