"""Tabulate cell-module and irreducible dimensions across evaluations.

For each algebra and k, prints the symbolic (generic) table and then the
table at chosen degenerate points -- by default x=0 and x=1 over the
rationals -- so rank drops of the Gram forms are visible side by side.
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from zrelalg.cli import format_label
from zrelalg.dalg import ALGEBRAS
from zrelalg.repn import irreducible_table


@dataclass
class Config:
    algebras: tuple = ALGEBRAS
    k: int = 1
    points: tuple = (Fraction(0), Fraction(1))
    char: int = 0


def run(config):
    for algebra in config.algebras:
        print("== %s, k=%d ==" % (algebra, config.k))
        generic = irreducible_table(algebra, config.k)
        tables = [("generic", generic)]
        for x in config.points:
            tables.append(("x=%s" % x,
                           irreducible_table(algebra, config.k,
                                             char=config.char, x_value=x)))
        labels = [row["label"] for row in generic]
        print("%-16s %6s %s" % ("label", "dim_W",
                                " ".join("%8s" % name
                                         for name, _ in tables)))
        for i, label in enumerate(labels):
            dims = " ".join("%8d" % table[i]["dim_D"]
                            for _, table in tables)
            print("%-16s %6d %s" % (format_label(label),
                                    generic[i]["dim_W"], dims))
        print()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--char", type=int, default=0,
                        help="0 or an odd prime")
    parser.add_argument("--points", default="0,1",
                        help="comma-separated rational evaluation points")
    args = parser.parse_args()
    points = tuple(Fraction(p) for p in args.points.split(","))
    run(Config(k=args.k, points=points, char=args.char))


if __name__ == "__main__":
    main()
