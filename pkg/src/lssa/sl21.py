"""sl(2|1): weights, Kac modules, and the LSSA families A_k, B_{k1,k2}, C_k."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .core import (Cocycle, NotBijective, ProductTable, check_lssa, evaluation_map,
                   lssa_from_cocycle, recovers_bracket, table_from_json, table_to_json)
from .linalg import Matrix, ONE, ZERO, max_rank_over_affine_family, fresh_names, rank
from .reps import (Representation, direct_sum, find_isomorphism, parity_shift, twist)
from .scalars import (DenominatorVanishes, RatFun, Scalar, as_scalar, canonical_str, parameters,
                      substitute)
from .superlie import (LieSuperalgebra, SuperSpace, WeightMN, make_algebra, neg_st_matrix)


class TypicalWeight(ValueError):
    pass


class ExcludedParameter(ValueError):
    pass


def sl21() -> LieSuperalgebra:
    return _sl21()


@lru_cache(maxsize=1)
def _sl21() -> LieSuperalgebra:
    return make_algebra("sl", 2, 1)


# -- weights ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Weight21:
    """lambda(h) = i, lambda(z) = k."""

    i: int
    k: object

    def __post_init__(self):
        if self.i < 0:
            raise ValueError("i must be nonnegative")
        object.__setattr__(self, "k", as_scalar(self.k))

    def as_weight(self) -> WeightMN:
        """((k+i)/2) eps1 + ((k-i)/2) eps2."""
        return WeightMN(((self.k + self.i) / 2, (self.k - self.i) / 2), (ZERO,))


def is_typical(w: Weight21) -> bool:
    k = w.k
    return k != w.i and k != -w.i - 2


def t_minus(w: Weight21) -> Weight21:
    i, k = w.i, w.k
    if k == i:
        return Weight21(i + 1, i + 1)
    if k == -i - 2:
        return Weight21(i - 1, -i - 1) if i > 0 else Weight21(0, 0)
    raise TypicalWeight(f"({i}, {k}) is typical")


def t_plus(w: Weight21) -> Weight21:
    i, k = w.i, w.k
    if k == i:
        return Weight21(i - 1, i - 1) if i > 0 else Weight21(0, -2)
    if k == -i - 2:
        return Weight21(i + 1, -i - 3)
    raise TypicalWeight(f"({i}, {k}) is typical")


@dataclass(frozen=True)
class AtypicalIndex:
    j: int

    def weight(self) -> Weight21:
        j = self.j
        return Weight21(j, j) if j >= 0 else Weight21(-j - 1, j - 1)

    @classmethod
    def of(cls, w: Weight21) -> "AtypicalIndex":
        if w.k == w.i:
            return cls(w.i)
        if w.k == -w.i - 2:
            return cls(-w.i - 1)
        raise TypicalWeight(f"({w.i}, {w.k}) is typical")


# -- induced modules -----------------------------------------------------------------------

def induced_module(alg: LieSuperalgebra, l_action: dict, l_labels: Sequence[str]) -> Representation:
    """Ind from g_0 + g_1 to g of a purely even g_0-module L (g_1 acting by zero).

    As a space this is Lambda(g_{-1}) (x) L with basis monomials y_{a1}...y_{ar} (x) u,
    a1 < ... < ar in basis order.  ``l_action`` maps each even basis index to
    its matrix on L.
    """
    low = alg.lowering_odd_indices()
    raise_ = set(alg.raising_odd_indices())
    d = len(l_labels)
    monos = [()]
    for y in low:
        monos += [mm + (y,) for mm in monos]
    monos.sort(key=lambda mm: (len(mm), mm))
    keys = [(mm, u) for mm in monos if len(mm) % 2 == 0 for u in range(d)]
    keys += [(mm, u) for mm in monos if len(mm) % 2 == 1 for u in range(d)]
    pos = {k: t for t, k in enumerate(keys)}

    def wedge(y: int, vec: dict) -> dict:
        out: dict = {}
        for (mm, u), c in vec.items():
            if y in mm:
                continue
            before = sum(1 for t in mm if t < y)
            nm = tuple(sorted(mm + (y,)))
            key = (nm, u)
            out[key] = out.get(key, ZERO) + (-c if before % 2 else c)
        return out

    cache: dict = {}

    def act(x: int, mm: tuple, u: int) -> dict:
        key = (x, mm, u)
        if key in cache:
            return cache[key]
        if not mm:
            if x in raise_:
                res = {}
            elif alg.parities[x]:
                res = {((x,), u): ONE}
            else:
                res = {((), u2): v for u2, v in l_action[x].col_dict(u).items()}
        else:
            y, rest = mm[0], mm[1:]
            res: dict = {}
            for l, c in alg.bracket(x, y).items():
                for k2, v in act(l, rest, u).items():
                    res[k2] = res.get(k2, ZERO) + c * v
            inner = act(x, rest, u)
            sign = -1 if alg.parities[x] else 1
            for k2, v in wedge(y, inner).items():
                res[k2] = res.get(k2, ZERO) + sign * v
            res = {k2: v for k2, v in res.items() if v}
        cache[key] = res
        return res

    action = []
    for x in range(alg.dim):
        cols = [{pos[k2]: v for k2, v in act(x, mm, u).items()} for (mm, u) in keys]
        action.append(Matrix.from_columns(cols, rows=len(keys)))

    def label(mm, u):
        word = "".join(alg.labels[t] for t in mm) or "1"
        return f"{word}*{l_labels[u]}"

    labels = [label(*k) for k in keys]
    ne = sum(1 for mm, _ in keys if len(mm) % 2 == 0)
    return Representation(alg, SuperSpace(tuple(labels[:ne]), tuple(labels[ne:])), tuple(action))


def sl2_irrep_action(i: int, k) -> dict:
    """S_i with z acting by k, in the sl(2|1) even basis x1=E12, x2=E21, x3=h, x4=z."""
    alg = sl21()
    d = i + 1
    e = Matrix.from_columns([{j - 1: j * (i - j + 1)} if j else {} for j in range(d)], rows=d)
    f = Matrix.from_columns([{j + 1: 1} if j + 1 < d else {} for j in range(d)], rows=d)
    h = Matrix.diagonal([i - 2 * j for j in range(d)])
    z = Matrix.identity(d).scale(k)
    return {alg.index("x1"): e, alg.index("x2"): f, alg.index("x3"): h, alg.index("x4"): z}


def kac_module(w: Weight21 | tuple) -> Representation:
    if not isinstance(w, Weight21):
        w = Weight21(*w)
    return induced_module(sl21(), sl2_irrep_action(w.i, w.k), [f"u{j}" for j in range(w.i + 1)])


def kac_double(k) -> Representation:
    """K(0,k)^(2): induced from C^2 with sl_2 trivial and z = k I + N, N c1 = c2."""
    alg = sl21()
    zero = Matrix.zeros(2, 2)
    z = Matrix.identity(2).scale(k) + Matrix.from_rows([[0, 0], [1, 0]])
    act = {alg.index("x1"): zero, alg.index("x2"): zero, alg.index("x3"): zero, alg.index("x4"): z}
    return induced_module(alg, act, ["c1", "c2"])


# -- families -------------------------------------------------------------------------------

FAMILY_PARAMETERS = {"A": ("k",), "B": ("k1", "k2"), "C": ("k",)}


def _basis_vector(r: Representation, label: str, coeff=ONE) -> list:
    v = [ZERO] * r.dim
    v[r.labels.index(label)] = as_scalar(coeff)
    return v


def _apply_word(r: Representation, word: Sequence[str], v: list) -> list:
    for x in reversed(word):
        v = r.act(x).apply(v)
    return v


@dataclass(frozen=True)
class FamilyBuild:
    which: str
    params: dict
    rep: Representation
    base_point: tuple
    cocycle: Cocycle
    table: ProductTable


def _resolve_params(which: str, params) -> dict:
    names = FAMILY_PARAMETERS[which]
    gens = dict(zip(names, parameters(names)))
    if params is None:
        return gens
    if isinstance(params, dict):
        out = dict(gens)
        for key, v in params.items():
            if key not in names:
                raise ValueError(f"family {which} has no parameter {key!r}")
            out[key] = as_scalar(v)
        return out
    params = list(params) if isinstance(params, (list, tuple)) else [params]
    if len(params) != len(names):
        raise ValueError(f"family {which} takes {len(names)} parameter(s)")
    return {n: as_scalar(v) for n, v in zip(names, params)}


# Relative scale of w1 against v0.  Any nonzero scale yields an isomorphic
# LSSA (exp(theta z) rescales the two z-eigenspaces independently); these
# values give the reference structure constants literally.
W1_SCALE = {"A": Fraction(-1, 2), "B": ONE, "C": ONE}


def family_module(which: str, params=None, w1_scale=None) -> tuple[Representation, list]:
    """The module and base point a = v0 + s*w1 of a family.

    A: K(1,k), v0 = 1*u0, w1 = E21 E31 E32 v0.
    B: PiK(0,k1) + PiK(0,k2), v0 = E32 (1*u0') and w1 = E21 E32 (1*u0'').
    C: PiK(0,k)^(2), v0 = y2*c1 (a preimage of the top of M1), w1 = E21 (y2*c2).
    """
    p = _resolve_params(which, params)
    scale = W1_SCALE[which] if w1_scale is None else as_scalar(w1_scale)
    if which == "A":
        r = kac_module(Weight21(1, p["k"]))
        v0 = _basis_vector(r, "1*u0")
        w1 = _apply_word(r, ["x2", "y1", "y2"], v0)
    elif which == "B":
        r = direct_sum(parity_shift(kac_module(Weight21(0, p["k1"]))),
                       parity_shift(kac_module(Weight21(0, p["k2"]))))
        v0 = _basis_vector(r, "y2*u0'")
        w1 = _apply_word(r, ["x2"], _basis_vector(r, "y2*u0''"))
    elif which == "C":
        r = parity_shift(kac_double(p["k"]))
        v0 = _basis_vector(r, "y2*c1")
        w1 = _apply_word(r, ["x2"], _basis_vector(r, "y2*c2"))
    else:
        raise ValueError(f"unknown family {which!r}")
    a = [x + scale * y for x, y in zip(v0, w1)]
    return r, a


EXCLUDED = {
    "A": "k in {-1, -3}",
    "B": "k1 = 0, k2 = 0 or k1 + k2 = -2",
    "C": "k in {0, -1}",
}


def build_family(which: str, params=None, w1_scale=None) -> FamilyBuild:
    """Module, base point and induced product table of family A, B or C.

    ``params`` may be omitted (fully symbolic), a sequence of values, or a
    dict binding some parameters.  Raises :class:`ExcludedParameter` when the
    evaluation map is not bijective at the requested point.
    """
    which = which.upper()
    if which not in FAMILY_PARAMETERS:
        raise ValueError(f"unknown family {which!r}")
    p = _resolve_params(which, params)
    r, a = family_module(which, p, w1_scale)
    c = evaluation_map(r, a)
    try:
        table = lssa_from_cocycle(c)
    except NotBijective as exc:
        raise ExcludedParameter(f"{which} at {_fmt(p)}: {EXCLUDED[which]}") from exc
    return FamilyBuild(which, p, r, tuple(a), c, table)


def _fmt(p: dict) -> str:
    return ", ".join(f"{k}={canonical_str(v)}" for k, v in p.items())


# -- reference tables----------------------------------------------------------------------

FIXTURES = {"A": "table_A.json", "B": "table_B.json", "C": "table_C.json"}


def load_fixture(which: str) -> ProductTable:
    text = resources.files("lssa").joinpath("fixtures", FIXTURES[which]).read_text()
    return table_from_json(json.loads(text))


@dataclass
class TableReport:
    which: str
    checked: int = 0
    matched: int = 0
    mismatches: list = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.checked > 0 and self.matched == self.checked


def compare_tables(computed: ProductTable, expected: ProductTable, which: str = "") -> TableReport:
    alg = computed.algebra
    rep = TableReport(which)
    lab = alg.labels
    for i in range(alg.dim):
        for j in range(alg.dim):
            a = {l: v for l, v in computed.product(i, j).items() if v}
            b = {l: v for l, v in expected.product(i, j).items() if v}
            rep.checked += 1
            if a == b:
                rep.matched += 1
            else:
                fmt = lambda d: " + ".join(f"({canonical_str(v)})*{lab[l]}" for l, v in sorted(d.items())) or "0"
                rep.mismatches.append((f"{lab[i]}*{lab[j]}", fmt(a), fmt(b)))
    return rep


def verify_reference_tables(bindings: dict | None = None, families: Sequence[str] = ("A", "B", "C"),
                    fixtures: dict | None = None) -> list[TableReport]:
    """Compare live constructions with the stored tables.

    With ``bindings`` the module is built at the point and compared with the
    specialised fixture; families whose parameters are not all bound are
    skipped.  ``fixtures`` overrides the stored tables (for self-tests).
    """
    out = []
    for which in families:
        expected = (fixtures or {}).get(which) or load_fixture(which)
        names = FAMILY_PARAMETERS[which]
        if bindings:
            if not all(n in bindings for n in names):
                continue
            point = {n: as_scalar(bindings[n]) for n in names}
            try:
                built = build_family(which, point)
                expected = expected.substitute(point)
            except (ExcludedParameter, DenominatorVanishes) as exc:
                out.append(TableReport(which, error=f"ExcludedParameter: {exc}"))
                continue
        else:
            built = build_family(which)
        out.append(compare_tables(built.table, expected, which))
    return out


# -- -st relations and degenerate parameters ----------------------------------------------------

def mirror_params(which: str, params: dict) -> dict:
    return {k: -2 - as_scalar(v) for k, v in params.items()}


@dataclass(frozen=True)
class RelationCheck:
    description: str
    expected: bool
    found: bool
    hom_dim: int
    generic_rank: int | None

    @property
    def ok(self) -> bool:
        return self.expected == self.found


def negst_twist(r: Representation) -> Representation:
    return twist(r, neg_st_matrix(r.algebra))


def check_twist_relation(source: Representation, target: Representation, description: str,
                         expected: bool = True, seed: int = 0) -> RelationCheck:
    cert = find_isomorphism(negst_twist(source), target, seed=seed)
    return RelationCheck(description, expected, cert.isomorphic, cert.hom_dim, cert.generic_rank)


def check_iso_relation(r1: Representation, r2: Representation, description: str,
                       expected: bool, seed: int = 0) -> RelationCheck:
    cert = find_isomorphism(r1, r2, seed=seed)
    return RelationCheck(description, expected, cert.isomorphic, cert.hom_dim, cert.generic_rank)


def verify_negst_relations(samples: Sequence[tuple] | None = None, seed: int = 0) -> list[RelationCheck]:
    """``samples``: (family, params) pairs; the -st twist of each family module is
    compared with the module at mirrored parameters (k -> -2-k)."""
    if samples is None:
        samples = [("K1", {"k": 0}), ("K1", {"k": 2}), ("K1", {"k": 5}),
                   ("A", {"k": 0}), ("A", {"k": 2}),
                   ("B", {"k1": 1, "k2": 3}), ("B", {"k1": 2, "k2": 5}),
                   ("C", {"k": 1}), ("C", {"k": 2})]
    out = []
    for which, params in samples:
        mirror = mirror_params(which, params)
        if which == "K1":
            src, tgt = kac_module(Weight21(1, params["k"])), kac_module(Weight21(1, mirror["k"]))
            desc = f"K(1,{params['k']})^-st ~ K(1,{mirror['k']})"
        else:
            src, _ = family_module(which, params)
            tgt, _ = family_module(which, mirror)
            desc = f"{which}({_fmt(params)})^-st ~ {which}({_fmt(mirror)})"
        out.append(check_twist_relation(src, tgt, desc, True, seed))
    return out


def verify_distinct_families(seed: int = 0) -> list[RelationCheck]:
    """Modules of different families at sample points are not isomorphic."""
    pairs = [(("A", {"k": 0}), ("B", {"k1": 1, "k2": 1})),
             (("A", {"k": 2}), ("C", {"k": 2})),
             (("B", {"k1": 1, "k2": 3}), ("C", {"k": 1})),
             (("B", {"k1": 1, "k2": 1}), ("C", {"k": 1}))]
    out = []
    for (f1, p1), (f2, p2) in pairs:
        r1, _ = family_module(f1, p1)
        r2, _ = family_module(f2, p2)
        out.append(check_iso_relation(r1, r2, f"{f1}({_fmt(p1)}) vs {f2}({_fmt(p2)})", False, seed))
    return out


@dataclass(frozen=True)
class DegenerateCheck:
    description: str
    generic_rank: int
    required: int

    @property
    def ok(self) -> bool:
        return self.generic_rank < self.required


def generic_ev_rank(r: Representation) -> int:
    """Rank of ev_a for a symbolic even base point a (max over all a)."""
    even = [i for i, p in enumerate(r.parities) if p == 0]
    family = [Matrix.zeros(r.dim, r.algebra.dim)]
    for i in even:
        e = [ZERO] * r.dim
        e[i] = ONE
        family.append(evaluation_map(r, e).q)
    return max_rank_over_affine_family(family)


def verify_degenerate_failures(b_samples: Sequence = (1, 3)) -> list[DegenerateCheck]:
    n = sl21().dim
    cases = [("K(1,-1)", kac_module(Weight21(1, -1)))]
    for k1 in b_samples:
        k2 = -2 - k1
        r = direct_sum(parity_shift(kac_module(Weight21(0, k1))), parity_shift(kac_module(Weight21(0, k2))))
        cases.append((f"PiK(0,{k1}) + PiK(0,{k2})", r))
    cases.append(("PiK(0,-1)^(2)", parity_shift(kac_double(-1))))
    return [DegenerateCheck(d, generic_ev_rank(r), n) for d, r in cases]


# -- Kac module data -----------------------------------------------------------------------

@dataclass(frozen=True)
class KacData:
    """Superdimensions of K(i,k), and at atypical k its maximal submodule I and V = K/I."""

    i: int
    k: object
    superdim: tuple[int, int]
    typical: bool
    singular_weight: tuple | None = None
    submodule_superdim: tuple[int, int] | None = None
    irreducible_superdim: tuple[int, int] | None = None

    @property
    def t_minus_matches(self) -> bool | None:
        if self.typical:
            return None
        expected = t_minus(Weight21(self.i, self.k))
        return self.singular_weight == (expected.i, expected.k)


def kac_data(i: int, k) -> KacData:
    from .reps import singular_vectors, submodule_generated

    w = Weight21(i, k)
    r = kac_module(w)
    if is_typical(w):
        return KacData(i, w.k, r.superdim, True, irreducible_superdim=r.superdim)
    top = r.labels.index("1*u0")
    found = [(wt, v) for wt, v in singular_vectors(r) if any(v) and not v[top]]
    if len(found) != 1:
        raise RuntimeError(f"expected one singular vector below the top of K({i},{k}), got {len(found)}")
    wt, v = found[0]
    sub = submodule_generated(r, v)
    h, z = wt
    p, q = r.superdim
    return KacData(i, w.k, r.superdim, False, (int(h), z), sub.superdim,
                   (p - sub.superdim[0], q - sub.superdim[1]))


def kac_grid(i_max: int = 4, extra_k: tuple = (7,)) -> list[KacData]:
    """K(i,k) for 0 <= i <= i_max at symbolic k, the sample values, and both atypical values."""
    (k,) = parameters("k")
    out = []
    for i in range(i_max + 1):
        for kv in (k, *extra_k, i, -i - 2):
            out.append(kac_data(i, kv))
    return out
