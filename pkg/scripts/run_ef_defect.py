#!/usr/bin/env python3
"""Compute the E/F commutator defect on x^3 (x) y^3 for each lift convention."""

import argparse

from hopfaut import action as A
from hopfaut import hopf


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show-u", action="store_true", help="print the full degree-6 element")
    args = ap.parse_args()
    for conv in sorted(A.LIFTS):
        res = A.ef_defect(convention=conv)
        c = A.defect_coefficient(res)
        print(f"{conv}: nilpotency {res.nilpotency}, u = {c} * [[x,y],y][[x,y],x] mod [T,T]")
        if args.show_u:
            print("  u =", hopf.format_element(res.u))


if __name__ == "__main__":
    main()
