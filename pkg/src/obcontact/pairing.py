"""
Pairing of bordered pieces into the hat complex of -Y(f) for reducible
monodromies f = t_a1^n1 t_a2^n2 t_a3^n3 t_a4^n4 t_b^nb with nb <= 0, and the
contact-invariant vanishing test.
"""

from dataclasses import dataclass

from .algebra import box_ad, box_da_d, cancel_pure, find_primitive, homology_with_membership
from .library import cfd_via_twisting, cfda_tau, library_graph


class UnsupportedTwist(ValueError):
    """Raised for positive twisting along b, which the engine does not model."""


@dataclass(frozen=True)
class PairingSpec:
    n1: int
    n2: int
    n3: int
    n4: int
    nb: int

    def __post_init__(self):
        for v in (self.n1, self.n2, self.n3, self.n4):
            if int(v) != v or v < 1:
                raise ValueError("boundary exponents must be integers >= 1")
        if int(self.nb) != self.nb:
            raise ValueError("nb must be an integer")
        if self.nb > 0:
            raise UnsupportedTwist("positive twisting along b is not supported")

    @property
    def n(self):
        return (self.n1, self.n2, self.n3, self.n4)


def left_piece(n1, n2):
    """Type A module of -Y(n1, n2) in the II/IV framing, marked."""
    return library_graph(n1, n2, "II_IV", "A")


def right_piece(n3, n4, reduce=True):
    """Type D module of -Y(n3, n4) in the I/III framing via the twisting slice.

    The twisting slice turns an alpha-type diagram into a beta-type one, so
    the contact generator fed into it is the one consistent with the
    alpha-type framing (the alternate mark of the Type A graph).
    """
    A = library_graph(n3, n4, "I_III", "A")
    A.marks = {"contact": A.marks["contact_alt"]}
    return cfd_via_twisting(A, reduce=reduce)


def twisted_piece(spec, reduce=True):
    """CFDA(tau)^{|nb|} applied to the right piece, contact = p x ... x p x y."""
    tau = cfda_tau()
    D = right_piece(spec.n3, spec.n4, reduce=reduce)
    c = D.marks["contact"]
    for _ in range(-spec.nb):
        D = box_da_d(tau, D)
        c = ("p", c)
        D.marks = {"contact": c}
        if reduce:
            D = cancel_pure(D)
    return D


def assemble_cf_hat(spec, reduce=True):
    """Chain complex with the contact cycle as its distinguished element."""
    if not isinstance(spec, PairingSpec):
        spec = PairingSpec(*spec)
    A = left_piece(spec.n1, spec.n2)
    D = twisted_piece(spec, reduce=reduce)
    C = box_ad(A, D)
    if C.distinguished is None:
        raise RuntimeError("contact generators have mismatched idempotents")
    return C


def contact_vanishes(spec, reduce=True):
    C = assemble_cf_hat(spec, reduce=reduce)
    _, is_boundary = homology_with_membership(C)
    return is_boundary


def pair_summary(spec, reduce=True):
    """Homology dimensions per summand, generator count and the verdict."""
    C = assemble_cf_hat(spec, reduce=reduce)
    dims, is_boundary = homology_with_membership(C)
    return {
        "generators": len(C),
        "dims": {"%s|%s" % k: v for k, v in dims.items()},
        "total_rank": sum(dims.values()),
        "contact_vanishes": is_boundary,
    }


def vanishing_witness(spec, reduce=True):
    """A chain whose boundary is the contact cycle, or None."""
    C = assemble_cf_hat(spec, reduce=reduce)
    return find_primitive(C)
