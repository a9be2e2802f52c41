"""Print superdimensions of K(i,k), the singular vector below the top and the
irreducible quotient at the two atypical values of k."""

import argparse

from lssa.scalars import canonical_str
from lssa.sl21 import kac_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--i-max", type=int, default=4)
    args = ap.parse_args()
    fmt = lambda p: f"{p[0]}|{p[1]}" if p else "-"
    print(f"{'i':>2} {'k':>6} {'K':>7} {'singular wt':>12} {'I':>7} {'V':>7} T- ok")
    for d in kac_grid(args.i_max):
        wt = "-" if d.singular_weight is None else f"({d.singular_weight[0]},{canonical_str(d.singular_weight[1])})"
        print(f"{d.i:>2} {canonical_str(d.k):>6} {fmt(d.superdim):>7} {wt:>12} "
              f"{fmt(d.submodule_superdim):>7} {fmt(d.irreducible_superdim):>7} "
              f"{'' if d.typical else d.t_minus_matches}")


if __name__ == "__main__":
    main()
