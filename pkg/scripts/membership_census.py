"""Test every element of the 1152-element group for membership in the rank-16 lattice.

Writes one CSV row per element: its coefficient vector and whether it lies in the lattice.
"""

import argparse
import csv
import sys

from quatweyl import dualquat as D
from quatweyl import groups as G
from quatweyl import lattice as L


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", help="CSV path (stdout when omitted)")
    a = p.parse_args()
    elems = G.closure(D.wf4_generators().as_list(), mul=D.dq_mul, key=lambda x: x.coeffs)
    fh = open(a.out, "w", newline="") if a.out else sys.stdout
    w = csv.writer(fh)
    w.writerow(["element", "member"])
    hits = 0
    for g in elems:
        ok = L.member(L.LAMBDA_Q8SQ, D.phi_inv(g)) is not None
        hits += ok
        w.writerow([str(g), int(ok)])
    if a.out:
        fh.close()
    print(f"{hits} of {len(elems)} elements are lattice members", file=sys.stderr)


if __name__ == "__main__":
    main()
