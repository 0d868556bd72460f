#!/usr/bin/env python3
"""Write the H^1 obstruction table as TSV."""

import argparse
import sys

from hopfaut import cokertab


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=17, help="maximal module degree")
    ap.add_argument("--max-excess", type=int, default=1)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()
    tsv = cokertab.entries_to_tsv(cokertab.h1_table(args.max_degree, max_excess=args.max_excess))
    if args.output == "-":
        sys.stdout.write(tsv)
    else:
        with open(args.output, "w") as fh:
            fh.write(tsv)


if __name__ == "__main__":
    main()
