"""
Decision procedures for tightness, overtwistedness and Stein fillability of
open books with four-punctured-sphere pages.

Each verdict names the criterion that produced it.  Unknown means that no
implemented criterion applies; nothing is guessed beyond them.
"""

from dataclasses import dataclass, field

from .farey import ALL_ODD, neg_cfrac, parity_class
from .mcg import DOUBLE_TRANSPOSITIONS, Psl2z, in_pure_subgroup, relabel, right_veering_reducible

STEIN = "stein_fillable"
TIGHT = "tight"
OT_NRV = "overtwisted_not_right_veering"
OT_DISK = "overtwisted_transverse_disk"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    tag: str
    witness: str
    invariant_nonvanishing: object = None  # True, False or None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.tag == STEIN and self.invariant_nonvanishing is not True:
            raise ValueError("Stein fillable verdicts carry a nonvanishing invariant")
        if self.tag in (OT_NRV, OT_DISK) and self.invariant_nonvanishing is not False:
            raise ValueError("overtwisted verdicts carry a vanishing invariant")

    @property
    def overtwisted(self):
        return self.tag in (OT_NRV, OT_DISK)

    def to_json(self):
        out = {"verdict": self.tag, "witness": self.witness,
               "invariant_nonvanishing": self.invariant_nonvanishing}
        if self.details:
            out["details"] = self.details
        return out


def lekili_nonvanishing(n, nb):
    """Nonvanishing contact invariant for boundary twists n and nb twists
    along one interior curve."""
    return min(n) >= max(-nb, 0)


def stein_sufficient_general(n, pairs):
    """Sufficient condition for a positive factorisation of
    t_a^n * prod t_c^C_i t_b^B_i."""
    return min(n) >= sum(max(-b, -c, 0) for b, c in pairs)


def classify_reducible(n, ngamma):
    n = tuple(int(v) for v in n)
    if len(n) != 4:
        raise ValueError("need four boundary exponents")
    lo = min(n)
    nonvanishing = lekili_nonvanishing(n, ngamma)
    if nonvanishing:
        return Verdict(STEIN, "lantern_positive_factorization", True)
    if lo >= 2:
        return Verdict(TIGHT, "fdtc_greater_than_one", False)
    if not right_veering_reducible(n, ngamma):
        return Verdict(OT_NRV, "not_right_veering", False)
    # lo == 1 and ngamma <= -2: the interior curve can be taken to be c and
    # -p/q = 2 ngamma has an all-odd-denominator chain
    return Verdict(OT_DISK, "odd_denominator_chain", False)


def _check_normalized(M):
    if not isinstance(M, Psl2z):
        M = Psl2z(*M)
    r, s, p, q = M.entries()
    if min(r, s, p, q) < 0 or not p > q:
        raise ValueError("matrix is not normalized: need nonnegative entries and p > q")
    if not in_pure_subgroup(M):
        raise ValueError("matrix is not in the pure subgroup")
    return M


def _shape_odd_r0(c):
    k = len(c) - 1
    return (c[0] % 2 == 1 and k % 2 == 1 and c[1] < -3
            and all(c[j] == -2 for j in range(2, k, 2)))


def _two_term_condition(c, fdtc):
    if len(c) != 2 or c[1] != -3 or c[0] > -5 or c[0] % 2 == 0:
        return False
    bound = (abs(c[0]) - 3) // 2
    for perm in ((0, 1, 2, 3),) + DOUBLE_TRANSPOSITIONS:
        n = relabel(fdtc, perm)
        # slope-0 arcs join boundary pairs (1, 2) and (3, 4)
        if n[0] == 1 and n[1] <= bound:
            return True
    return False


def all_minus_two_factorization(M, fdtc):
    """Positive factorisation data when -p/q = [-2, ..., -2].

    pi(f) = [[k+1+2m(k+2), k+2m(k+1)], [k+2, k+1]] and
    f = t_a^(n-1) t_b^m t_d^(l+1) t_b with k = 2l.
    """
    k = M.p - 2
    m, rem = divmod(M.r - (k + 1), 2 * (k + 2))
    if rem or M.q != k + 1 or M.s != k + 2 * m * (k + 1) or k % 2:
        raise ValueError("matrix is not in the all -2 family")
    word = [(a, v - 1) for a, v in zip(("a1", "a2", "a3", "a4"), fdtc) if v - 1]
    if m:
        word.append(("b", m))
    word += [("d", k // 2 + 1), ("b", 1)]
    return {"m": m, "l": k // 2, "word": word}


def classify_pa(M, fdtc):
    """Ladder of criteria for a normalized pseudo-Anosov image M and its
    integral fractional Dehn twist coefficients."""
    M = _check_normalized(M)
    fdtc = tuple(int(v) for v in fdtc)
    lo = min(fdtc)
    c = neg_cfrac(M.p, M.q)
    if lo <= 0:
        return Verdict(OT_NRV, "nonpositive_fdtc", False)
    if lo >= 2:
        return Verdict(TIGHT, "fdtc_greater_than_one", None)
    if all(r == -2 for r in c):
        return Verdict(STEIN, "all_minus_two_factorization", True,
                       all_minus_two_factorization(M, fdtc))
    if (M.p, M.q) == (8, 3):
        return Verdict(STEIN, "eight_thirds_factorization", True)
    tag, _ = parity_class(c)
    if tag == ALL_ODD and any(r != -2 for r in c):
        return Verdict(OT_DISK, "odd_denominator_chain", False)
    if _shape_odd_r0(c):
        return Verdict(OT_DISK, "odd_leading_coefficient_chain", False)
    if _two_term_condition(c, fdtc):
        return Verdict(OT_DISK, "two_term_chain_with_twist_moves", False)
    return Verdict(UNKNOWN, "no_criterion_applies", None)
