"""
Negative continued fractions [r0, ..., rk] (all ri <= -2), the chain of
Farey neighbours from -1 down to -p/q, convergents and parity bookkeeping.

    [r0, r1, ..., rk] = r0 - 1/(r1 - 1/(... - 1/rk))
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class Slope:
    """A slope p/q in lowest terms; q >= 0 and infinity is 1/0."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(p, q)
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def of(cls, x):
        if isinstance(x, Slope):
            return x
        if isinstance(x, str):
            if x in ("inf", "oo", "1/0"):
                return cls(1, 0)
            x = Fraction(x)
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    def value(self):
        if self.q == 0:
            raise ValueError("infinite slope")
        return Fraction(self.p, self.q)

    def __str__(self):
        return "%d/%d" % (self.p, self.q)


def _check_pq(p, q):
    if int(p) != p or int(q) != q:
        raise ValueError("p and q must be integers")
    if not p > q >= 1:
        raise ValueError("need p > q >= 1, got p=%r q=%r" % (p, q))
    if gcd(p, q) != 1:
        raise ValueError("p and q must be coprime")


def evaluate(coeffs):
    """Exact value of [r0, ..., rk]."""
    if not coeffs:
        raise ValueError("empty continued fraction")
    x = Fraction(coeffs[-1])
    for r in reversed(coeffs[:-1]):
        x = r - 1 / x
    return x


def _check_coeffs(coeffs):
    if not coeffs or any(int(r) != r or r > -2 for r in coeffs):
        raise ValueError("coefficients must be integers <= -2: %r" % (coeffs,))


def neg_cfrac(p, q):
    """Expansion of -p/q with every coefficient <= -2.

    >>> neg_cfrac(10, 7)
    [-2, -2, -4]
    """
    _check_pq(p, q)
    out = []
    a, b = -p, q  # x = a/b, b > 0
    while b != 1:
        r = a // b
        out.append(r)
        # x <- -1/(x - r) = -b/(a - r b), and a - r b > 0
        a, b = -b, a - r * b
    out.append(a)
    return out


def step_down(coeffs):
    """Expansion of the previous slope in the chain: add 1 to the last
    coefficient and collapse a trailing -1 into its neighbour."""
    if list(coeffs) == [-1]:
        raise ValueError("-1 is the start of the chain")
    _check_coeffs(coeffs)
    c = list(coeffs)
    if evaluate(c) == -1:
        raise ValueError("-1 is the start of the chain")
    c[-1] += 1
    while len(c) > 1 and c[-1] == -1:
        c.pop()
        c[-1] += 1
    return c


def path_length(coeffs):
    """Closed form for the number of steps from -1 to the value of coeffs."""
    return abs(sum(r + 2 for r in coeffs[:-1]) + (coeffs[-1] + 1))


@dataclass(frozen=True)
class FareyPath:
    """s0 = -1, ..., sN = -p/q stored as reduced pairs (numerator, denominator)
    with positive denominators."""

    pairs: tuple

    @property
    def steps(self):
        return tuple(Fraction(x, y) for x, y in self.pairs)

    @property
    def length(self):
        return len(self.pairs) - 1


def farey_path(p, q):
    """The chain -1 = s0 > s1 > ... > sN = -p/q of iterated step_down.

    The value of [r0, ..., rk] is x/y for the last convergent; adding 1 to
    rk adds the previous convergent, and collapsing a trailing -1 keeps the
    value, so the chain is walked with integer pairs only."""
    _check_pq(p, q)
    c = neg_cfrac(p, q)
    n_expected = path_length(c)
    conv = [(1, 0)] + convergents(c)
    chain = [(conv[-1][0], conv[-1][1])]
    while c != [-1]:
        c[-1] += 1
        conv[-1] = (conv[-1][0] + conv[-2][0], conv[-1][1] + conv[-2][1])
        while len(c) > 1 and c[-1] == -1:
            c.pop()
            conv.pop()
            c[-1] += 1
            conv[-1] = (conv[-1][0] + conv[-2][0], conv[-1][1] + conv[-2][1])
        chain.append(conv[-1])
    # consecutive convergents are unimodular, so the pairs are already reduced
    pairs = tuple((x, y) if y > 0 else (-x, -y) for x, y in reversed(chain))
    if pairs[0] != (-1, 1) or pairs[-1] != (-p, q) or len(pairs) - 1 != n_expected:
        raise AssertionError("chain of length %d disagrees with closed form %d"
                             % (len(pairs) - 1, n_expected))
    return FareyPath(pairs)


def convergents(coeffs):
    """Pairs (x_j, y_j) with x_j / y_j = [r0, ..., rj]."""
    _check_coeffs(coeffs)
    xs, ys = [coeffs[0]], [1]
    if len(coeffs) > 1:
        xs.append(coeffs[0] * coeffs[1] - 1)
        ys.append(coeffs[1])
    for r in coeffs[2:]:
        xs.append(r * xs[-1] - xs[-2])
        ys.append(r * ys[-1] - ys[-2])
    return list(zip(xs, ys))


ALL_ODD = "AllOddDenominators"
ALTERNATING = "AlternatingFromR0"
NEITHER = "Neither"


def parity_class(coeffs):
    """Classify the parity pattern of the chain for [r0, ..., rk].

    Returns (tag, report).  AllOddDenominators: k even and every odd-index
    coefficient is -2.  AlternatingFromR0: r0 odd, k odd and every interior
    even-index coefficient is -2.
    """
    _check_coeffs(coeffs)
    k = len(coeffs) - 1
    report = {}
    if k % 2 == 0 and all(coeffs[j] == -2 for j in range(1, k, 2)):
        report["p_parity"] = sum(coeffs[0::2]) % 2
        return ALL_ODD, report
    if coeffs[0] % 2 and k % 2 and all(coeffs[j] == -2 for j in range(2, k, 2)):
        report["from_index"] = abs(coeffs[0]) - 1
        return ALTERNATING, report
    return NEITHER, report


def is_farey_edge(s, t):
    s, t = Slope.of(s), Slope.of(t)
    return abs(s.p * t.q - t.p * s.q) == 1


def fmt(x):
    """Rational as the string "p/q" (q > 0)."""
    x = Fraction(x)
    return "%d/%d" % (x.numerator, x.denominator)
