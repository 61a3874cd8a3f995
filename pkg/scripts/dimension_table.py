"""Print the dimension table of the three diagram algebras.

For each algebra and each k up to --max-k, reports the closed-form
dimension and (optionally) the enumerated diagram count, flagging any
disagreement.  Enumeration at k=4 is already large; the default stops
cross-checking at --check-k.
"""

import argparse
import sys
import time
from dataclasses import dataclass

from zrelalg.dalg import ALGEBRAS, basis, dim_formula


@dataclass
class Config:
    max_k: int = 3
    check_k: int = 2          # enumerate and cross-check up to here
    algebras: tuple = ALGEBRAS


def run(config):
    header = ["algebra", "k", "formula", "enumerated", "time_s"]
    print("  ".join(h.ljust(10) for h in header))
    ok = True
    for algebra in config.algebras:
        for k in range(1, config.max_k + 1):
            t0 = time.time()
            dim = dim_formula(algebra, k)
            if k <= config.check_k:
                count = len(basis(algebra, k))
                if count != dim:
                    ok = False
                shown = str(count)
            else:
                shown = "-"
            row = [algebra, str(k), str(dim), shown,
                   "%.2f" % (time.time() - t0)]
            print("  ".join(c.ljust(10) for c in row))
    return ok


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=3)
    parser.add_argument("--check-k", type=int, default=2)
    args = parser.parse_args()
    config = Config(max_k=args.max_k, check_k=args.check_k)
    sys.exit(0 if run(config) else 1)


if __name__ == "__main__":
    main()
