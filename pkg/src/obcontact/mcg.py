"""
Dehn twist words on the four-punctured sphere and their image in PSL(2, Z).

Curves: a1..a4 are boundary parallel (trivial image), b has slope 0, c has
slope infinity, e has slope -2, d is fixed by the lantern relation
t_a1 t_a2 t_a3 t_a4 = t_b t_c t_d, and any interior curve can be given by
its slope.  Words are lists of (curve, exponent) in function order: the
rightmost factor is applied first, so the image is the plain matrix product.
"""

from dataclasses import dataclass
from math import gcd, isqrt
import re

from .farey import Slope

BOUNDARY = ("a1", "a2", "a3", "a4")


@dataclass(frozen=True)
class Psl2z:
    """Matrix [[r, s], [p, q]] modulo sign; stored with the first nonzero
    entry positive."""

    r: int
    s: int
    p: int
    q: int

    def __post_init__(self):
        if self.r * self.q - self.s * self.p != 1:
            raise ValueError("determinant must be 1: %r" % (self.entries(),))
        first = next(v for v in self.entries() if v)
        if first < 0:
            for k in ("r", "s", "p", "q"):
                object.__setattr__(self, k, -getattr(self, k))

    def entries(self):
        return (self.r, self.s, self.p, self.q)

    def rows(self):
        return [[self.r, self.s], [self.p, self.q]]

    def __matmul__(self, other):
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return Psl2z(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self):
        return Psl2z(self.q, -self.s, -self.p, self.r)

    def trace(self):
        return abs(self.r + self.q)

    def apply(self, v):
        return (self.r * v[0] + self.s * v[1], self.p * v[0] + self.q * v[1])

    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(k)):
            out = out @ base
        return out


IDENTITY = Psl2z(1, 0, 0, 1)


def twist_matrix(slope):
    """Image of the positive twist about the curve of the given slope:
    x -> x + 2 det(v, x) v with v = (q, p)."""
    s = Slope.of(slope)
    v0, v1 = s.q, s.p
    # det(v, x) = v0 x1 - v1 x0
    return Psl2z(1 - 2 * v1 * v0, 2 * v0 * v0, -2 * v1 * v1, 1 + 2 * v0 * v1)


CURVE_SLOPES = {"b": Slope(0, 1), "c": Slope(1, 0), "e": Slope(-2, 1)}


def curve_matrix(curve):
    if curve in BOUNDARY:
        return IDENTITY
    if curve in CURVE_SLOPES:
        return twist_matrix(CURVE_SLOPES[curve])
    if curve == "d":
        return (curve_matrix("b") @ curve_matrix("c")).inverse()
    if isinstance(curve, Slope):
        return twist_matrix(curve)
    raise ValueError("unknown curve %r" % (curve,))


def parse_word(text):
    """Parse "b:1,e:1" or "a1:2,slope(-2/1):3" into [(curve, exponent)]."""
    word = []
    text = text.strip()
    if not text:
        return word
    for tok in text.split(","):
        m = re.fullmatch(r"\s*(a[1-4]|[bcde]|slope\(([^)]*)\))\s*:\s*(-?\d+)\s*", tok)
        if not m:
            raise ValueError("cannot parse word token %r" % (tok,))
        curve = m.group(1)
        if m.group(2) is not None:
            curve = Slope.of(m.group(2))
        exp = int(m.group(3))
        if exp == 0:
            raise ValueError("exponents must be nonzero")
        word.append((curve, exp))
    return word


def project_word(word):
    out = IDENTITY
    for curve, exp in word:
        out = out @ (curve_matrix(curve) ** exp)
    return out


def in_pure_subgroup(M):
    if not isinstance(M, Psl2z):
        M = Psl2z(*M)
    return M.r % 2 == 1 and M.q % 2 == 1 and M.s % 2 == 0 and M.p % 2 == 0


def _same_sign(M):
    e = M.entries()
    return all(v >= 0 for v in e) or all(v <= 0 for v in e)


def _quadratic_cf(P, Q, D, terms):
    """First continued fraction terms of (P + sqrt(D)) / Q.

    Needs D not a square and Q dividing D - P^2.
    """
    out = []
    for _ in range(terms):
        a = _floor_quadratic(P, Q, D)
        out.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    return out


def _floor_quadratic(P, Q, D):
    """floor((P + sqrt(D)) / Q) exactly."""
    # find a with a <= (P + sqrt D)/Q < a + 1
    sq = isqrt(D)
    guess = (P + sq) // Q if Q > 0 else -((P + sq) // -Q) - 1
    for a in range(guess - 2, guess + 3):
        if _le_quadratic(a, P, Q, D) and not _le_quadratic(a + 1, P, Q, D):
            return a
    raise ArithmeticError("floor search failed")


def _le_quadratic(a, P, Q, D):
    """Is a <= (P + sqrt D)/Q ?"""
    # a*Q <= P + sqrt D if Q > 0, reversed otherwise
    lhs = a * Q - P
    if Q > 0:
        return lhs <= 0 or lhs * lhs <= D
    return lhs >= 0 and lhs * lhs >= D


def _expanding_slope_cf(M, terms):
    """Continued fraction terms of the expanding eigen-slope of M.

    Slopes are y/x for eigenvectors (x, y).  They solve
    b t^2 + (a - d) t - c = 0 with M = [[a, b], [c, d]].
    """
    a, b, c, d = M.entries()
    tr = a + d
    D = tr * tr - 4
    sign = 1 if tr > 0 else -1
    if b == 0:
        raise ValueError("not hyperbolic")
    # eigenvalue l: (a - l) x + b y = 0 -> t = y/x = (l - a)/b
    # l = (tr + sign*sqrt D)/2 is the expanding one
    # t = (tr - 2a + sign*sqrt D) / (2b) = (d - a + sign*sqrt D)/(2b)
    P, Q = d - a, 2 * b
    if sign < 0:
        P, Q = -P, -Q
    # normalise so that Q divides D - P^2
    if (D - P * P) % Q:
        P, Q, D = P * abs(Q), Q * abs(Q), D * Q * Q
    return _quadratic_cf(P, Q, D, terms)


def _convergent_pairs(cf):
    h0, h1 = 1, cf[0]
    k0, k1 = 0, 1
    yield (h0, k0), (h1, k1)
    for a in cf[1:]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield (h0, k0), (h1, k1)


def _push_p_above_q(M):
    C = IDENTITY
    T = Psl2z(1, 1, 0, 1)
    while M.p <= M.q:
        if M.p == 0:
            raise ValueError("reducible matrix reached during normalisation")
        M = T @ M @ T.inverse()
        C = T @ C
    return M, C


def normalize_conjugacy(M):
    """Conjugate M into the form [[p', q'], [p, q]] with nonnegative entries
    and p > q.

    Returns (M', C, excluded) with M' = C M C^-1.  excluded is True exactly
    when M is conjugate to [[1, 0], [c, 1]] with c <= 0, the family without
    such a form.
    """
    if not isinstance(M, Psl2z):
        M = Psl2z(*M)
    if not in_pure_subgroup(M):
        raise ValueError("matrix is not in the pure subgroup")
    if M.trace() == 2:
        return _normalize_parabolic(M)
    if _same_sign(M) and M.p > M.q:
        return M, IDENTITY, False
    C = IDENTITY
    if not _same_sign(M):
        C = _bracketing_conjugator(M)
        M = C @ M @ C.inverse()
    M2, C2 = _push_p_above_q(M)
    return M2, C2 @ C, False


def _bracketing_conjugator(M):
    cf = _expanding_slope_cf(M, 64)
    best = None
    for (h0, k0), (h1, k1) in _convergent_pairs(cf):
        # slopes h/k as vectors (k, h); columns mu1, mu2 of A
        for u, v in (((k0, h0), (k1, h1)), ((k1, h1), (k0, h0))):
            for su in (1, -1):
                A = _matrix_from_columns((su * u[0], su * u[1]), v)
                if A is None:
                    continue
                Ainv = A.inverse()
                N = Ainv @ M @ A
                if _same_sign(N):
                    cand = (max(k0, k1), Ainv)
                    if best is None or cand[0] < best[0]:
                        best = cand
        if best is not None:
            return best[1]
    raise ArithmeticError("no bracketing Farey pair found")


def _matrix_from_columns(u, v):
    det = u[0] * v[1] - v[0] * u[1]
    if det == 1:
        return Psl2z(u[0], v[0], u[1], v[1])
    return None


def _normalize_parabolic(M):
    a, b, c, d = M.entries()
    if (a, b, c, d) == (1, 0, 0, 1):
        return M, IDENTITY, True
    # fixed vector: (M - I) v = 0 for the +1 representative
    if a + d < 0:
        a, b, c, d = -a, -b, -c, -d
    if b != 0:
        v = (b, 1 - a)
    else:
        v = (0, 1)
    g = gcd(*v)
    v = (v[0] // g, v[1] // g)
    # C v = (0, 1): rows (v1, -v0) and a Bezout row
    x, y = _bezout(v[0], v[1])
    C = Psl2z(v[1], -v[0], x, y)
    N = C @ M @ C.inverse()
    assert N.r == 1 and N.s == 0 and N.q == 1
    if N.p <= 0:
        return N, C, True
    return N, C, False


def _bezout(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


@dataclass(frozen=True)
class ReducibleForm:
    """t_a1^n1 t_a2^n2 t_a3^n3 t_a4^n4 t_gamma^ngamma."""

    n: tuple
    ngamma: int
    gamma: Slope = Slope(0, 1)

    def word(self):
        w = [(a, k) for a, k in zip(BOUNDARY, self.n) if k]
        if self.ngamma:
            w.append((self.gamma, self.ngamma))
        return w


def right_veering_reducible(n, ngamma):
    lo = min(n)
    return lo >= 1 or (lo >= 0 and ngamma >= 0)


def _merge(word):
    out = []
    for curve, exp in word:
        if out and out[-1][0] == curve:
            exp += out[-1][1]
            out.pop()
            if exp == 0:
                continue
        out.append((curve, exp))
    return out


def _interior_key(curve):
    if isinstance(curve, Slope):
        for name, s in CURVE_SLOPES.items():
            if s == curve:
                return name
    return curve


def fdtc_covered(word):
    """FDTC vector for the word families whose coefficients are known:
    boundary twists times one interior twist power, times
    t_b^m t_d^l t_c^-1 (m, l >= 0), or times t_b^(m+1) t_e (m >= 0).
    Returns None for every other word."""
    n = [0, 0, 0, 0]
    inner = []
    for curve, exp in word:
        if curve in BOUNDARY:
            n[BOUNDARY.index(curve)] += exp
        else:
            inner.append((_interior_key(curve), exp))
    inner = _merge(inner)
    curves = [c for c, _ in inner]
    exps = [e for _, e in inner]
    if len(inner) <= 1:
        return tuple(n)
    if curves[-1] == "c" and exps[-1] == -1:
        head = inner[:-1]
        names = [c for c, _ in head]
        if names in (["b", "d"], ["b"], ["d"]) and all(e > 0 for _, e in head):
            return tuple(n)
    if curves == ["b", "e"] and exps[0] >= 1 and exps[1] == 1:
        return tuple(k + 1 for k in n)
    return None


DOUBLE_TRANSPOSITIONS = ((1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))


def relabel(n, perm):
    """Permute a boundary-indexed vector by a double transposition."""
    return tuple(n[perm[i]] for i in range(4))
