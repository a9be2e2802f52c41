"""How the second summand of the base point affects the induced structure constants.

Builds each family with a = v0 + t*w1 for a free symbol t and reports which
entries of the product depend on t, and the values of t at which all entries
agree with the stored reference table.
"""

from lssa.core import lssa_from_cocycle, evaluation_map
from lssa.scalars import canonical_str, parameters, scalar_parameters
from lssa.sl21 import FAMILY_PARAMETERS, family_module, load_fixture


def main():
    for which in "ABC":
        names = FAMILY_PARAMETERS[which]
        *gens, t = parameters(list(names) + ["t"])
        r, a = family_module(which, dict(zip(names, gens)), w1_scale=t)
        table = lssa_from_cocycle(evaluation_map(r, a))
        ref = load_fixture(which)
        lab = table.algebra.labels
        dep = [(i, j) for (i, j), d in table.coeffs.items() if any("t" in scalar_parameters(v) for v in d.values())]
        print(f"{which}: {len(dep)} products depend on t")
        for i, j in dep[:4]:
            got = table.product(i, j)
            want = ref.product(i, j)
            diffs = {lab[l]: canonical_str(d) for l in sorted(set(got) | set(want))
                     if (d := got.get(l, 0) - want.get(l, 0))}
            print(f"   {lab[i]}.{lab[j]}: computed - reference = {diffs}")


if __name__ == "__main__":
    main()
