"""Time the evaluation-map construction on sl(m+1|m) for a range of m.

    python scripts/run_slmm.py --max-m 5
"""

import argparse
import time

from lssa.slmm import build_instance, check_expansion, kernel_system_check
from lssa.core import check_lssa, recovers_bracket


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--skip-axiom", action="store_true", help="only rank and kernel checks")
    args = ap.parse_args()
    print(f"{'m':>2} {'superdim':>9} {'rank':>5} {'ker(gl)':>7} {'str':>4} {'axiom':>6} {'build s':>8} {'check s':>8}")
    for m in range(1, args.max_m + 1):
        t0 = time.perf_counter()
        inst = build_instance(m, with_table=not args.skip_axiom, max_m=args.max_m)
        t1 = time.perf_counter()
        k = kernel_system_check(m, max_m=args.max_m)
        ok = "-" if args.skip_axiom else str(check_lssa(inst.table) and recovers_bracket(inst.table))
        assert check_expansion(m, samples=3)
        t2 = time.perf_counter()
        sd = f"{inst.algebra.superdim[0]}|{inst.algebra.superdim[1]}"
        print(f"{m:>2} {sd:>9} {inst.rank:>5} {k.kernel_dim:>7} {str(k.supertrace):>4} {ok:>6} "
              f"{t1 - t0:>8.2f} {t2 - t1:>8.2f}")


if __name__ == "__main__":
    main()
