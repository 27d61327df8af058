"""Vanishing pattern of the contact class for reducible monodromies,
computed by pairing bordered pieces, next to the closed-form criterion."""
from itertools import product

from obcontact.classify import classify_reducible
from obcontact.pairing import PairingSpec, contact_vanishes

print("n1..n4    nb  paired  criterion  verdict")
for n in product(range(1, 3), repeat=4):
    for nb in range(-3, 1):
        got = contact_vanishes(PairingSpec(*n, nb))
        v = classify_reducible(n, nb)
        print("%s %3d  %-6s  %-9s  %s" % ("".join(map(str, n)), nb, got, not v.invariant_nonvanishing, v.tag))
