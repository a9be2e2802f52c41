"""Finite-dimensional representations of matrix Lie superalgebras.

A representation stores one even matrix per algebra basis element, acting
on column vectors in the even-then-odd basis of its :class:`SuperSpace`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import (Matrix, ONE, ZERO, block_diagonal, kernel, max_rank_over_affine_family,
                     rank)
from .scalars import Scalar, canonical_str, parse_scalar, scalar_parameters
from .superlie import (LieSuperalgebra, NotAnAutomorphism, SuperSpace, is_automorphism,
                       make_algebra)


class AlgebraMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Representation:
    algebra: LieSuperalgebra
    space: SuperSpace
    action: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def superdim(self) -> tuple[int, int]:
        return self.space.superdim

    @property
    def parities(self) -> list[int]:
        return self.space.parities()

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def act(self, x: int | str) -> Matrix:
        if isinstance(x, str):
            x = self.algebra.index(x)
        return self.action[x]

    def element_action(self, coeffs: Sequence) -> Matrix:
        """f(sum c_i b_i)."""
        total = Matrix.zeros(self.dim, self.dim)
        for c, a in zip(coeffs, self.action):
            if c:
                total = total + a.scale(c)
        return total

    def parameters(self) -> tuple[str, ...]:
        names: set[str] = set()
        for a in self.action:
            names.update(a.parameters())
        return tuple(sorted(names))

    def substitute(self, bindings: dict) -> "Representation":
        from .scalars import substitute
        return Representation(self.algebra, self.space,
                              tuple(a.map(lambda v: substitute(v, bindings)) for a in self.action))

    def relabel(self, fn) -> "Representation":
        sp = SuperSpace(tuple(fn(l) for l in self.space.even), tuple(fn(l) for l in self.space.odd))
        return Representation(self.algebra, sp, self.action)


def _same_algebra(*reps: Representation) -> LieSuperalgebra:
    alg = reps[0].algebra
    for r in reps[1:]:
        if r.algebra is not alg and r.algebra.name != alg.name:
            raise AlgebraMismatch(f"{alg.name} vs {r.algebra.name}")
    return alg


def is_even_operator(mat: Matrix, parities: Sequence[int], degree: int) -> bool:
    return all((parities[i] + parities[j] + degree) % 2 == 0 for i, j, _ in mat.nonzero())


def check_representation(r: Representation) -> bool:
    """Parity compatibility and f([x,y]) = f(x)f(y) - (-1)^{|x||y|} f(y)f(x)."""
    alg = r.algebra
    par = r.parities
    if len(r.action) != alg.dim:
        return False
    for a, deg in zip(r.action, alg.parities):
        if a.shape != (r.dim, r.dim) or not is_even_operator(a, par, deg):
            return False
    for i in range(alg.dim):
        fi = r.action[i]
        for j in range(i, alg.dim):
            fj = r.action[j]
            lhs = Matrix.zeros(r.dim, r.dim)
            for l, c in alg.bracket(i, j).items():
                lhs = lhs + r.action[l].scale(c)
            if alg.parities[i] and alg.parities[j]:
                rhs = fi @ fj + fj @ fi
            else:
                rhs = fi @ fj - fj @ fi
            if lhs != rhs:
                return False
    return True


# -- constructors ---------------------------------------------------------------

def trivial_rep(alg: LieSuperalgebra, label: str = "1") -> Representation:
    return Representation(alg, SuperSpace((label,), ()), tuple(Matrix.zeros(1, 1) for _ in range(alg.dim)))


def standard_rep(alg: LieSuperalgebra) -> Representation:
    m, n = alg.m, alg.n
    space = SuperSpace(tuple(f"e{i + 1}" for i in range(m)), tuple(f"xi{s + 1}" for s in range(n)))
    return Representation(alg, space, tuple(e.to_matrix() for e in alg.elements))


def dual_rep(r: Representation) -> Representation:
    """(x.phi)(v) = -(-1)^{|x||phi|} phi(x.v), written in the dual basis."""
    par = r.parities
    out = []
    for a, deg in zip(r.action, r.algebra.parities):
        rows = [dict() for _ in range(r.dim)]
        for b, a_, v in a.nonzero():  # entry f_{b a}
            rows[a_][b] = -v if not (deg and par[b]) else v
        out.append(Matrix._wrap(r.dim, r.dim, rows))
    return Representation(r.algebra, r.space, tuple(out)).relabel(lambda l: l + "*")


def parity_shift(r: Representation) -> Representation:
    """Swap the even and odd parts; matrix entries are carried over unchanged."""
    p, q = r.superdim
    perm = list(range(p, p + q)) + list(range(p))  # new position -> old index
    space = SuperSpace(r.space.odd, r.space.even)
    return Representation(r.algebra, space, tuple(a.submatrix(perm, perm) for a in r.action))


def _permute(r_dim: int, blocks: list[Matrix], perm: list[int]) -> Matrix:
    return block_diagonal(blocks).submatrix(perm, perm)


def direct_sum(*reps: Representation, tags: Sequence[str] | None = None) -> Representation:
    """Block sum; summand labels get suffixes ', '', ... unless tags are given."""
    alg = _same_algebra(*reps)
    if tags is None:
        tags = ["'" * (t + 1) for t in range(len(reps))]
    offsets, off = [], 0
    for r in reps:
        offsets.append(off)
        off += r.dim
    even_pos, odd_pos, even_lab, odd_lab = [], [], [], []
    for r, o, t in zip(reps, offsets, tags):
        p = r.superdim[0]
        even_pos += [o + i for i in range(p)]
        odd_pos += [o + i for i in range(p, r.dim)]
        even_lab += [l + t for l in r.space.even]
        odd_lab += [l + t for l in r.space.odd]
    perm = even_pos + odd_pos
    action = tuple(_permute(off, [r.action[x] for r in reps], perm) for x in range(alg.dim))
    return Representation(alg, SuperSpace(tuple(even_lab), tuple(odd_lab)), action)


def multiple(r: Representation, count: int) -> Representation:
    return direct_sum(*([r] * count), tags=[f"({t + 1})" for t in range(count)])


def _graded_basis(keys: list, parity_of) -> tuple[list, dict]:
    ordered = [k for k in keys if parity_of(k) == 0] + [k for k in keys if parity_of(k) == 1]
    return ordered, {k: i for i, k in enumerate(ordered)}


def tensor(r1: Representation, r2: Representation) -> Representation:
    """x.(u (x) v) = (x.u) (x) v + (-1)^{|x||u|} u (x) (x.v)."""
    alg = _same_algebra(r1, r2)
    p1, p2 = r1.parities, r2.parities
    keys = [(i, j) for i in range(r1.dim) for j in range(r2.dim)]
    ordered, pos = _graded_basis(keys, lambda k: (p1[k[0]] + p2[k[1]]) % 2)
    action = []
    for x in range(alg.dim):
        deg = alg.parities[x]
        a1, a2 = r1.action[x], r2.action[x]
        cols = []
        for (i, j) in ordered:
            col: dict = {}
            for i2, v in a1.col_dict(i).items():
                k = pos[(i2, j)]
                col[k] = col.get(k, ZERO) + v
            sign = -1 if deg and p1[i] else 1
            for j2, v in a2.col_dict(j).items():
                k = pos[(i, j2)]
                col[k] = col.get(k, ZERO) + sign * v
            cols.append(col)
        action.append(Matrix.from_columns(cols, rows=len(ordered)))
    lab1, lab2 = r1.labels, r2.labels
    labels = [f"{lab1[i]}@{lab2[j]}" for i, j in ordered]
    ne = sum(1 for k in ordered if (p1[k[0]] + p2[k[1]]) % 2 == 0)
    return Representation(alg, SuperSpace(tuple(labels[:ne]), tuple(labels[ne:])), tuple(action))


def _square(r: Representation, exterior: bool) -> Representation:
    """Quotient of r (x) r by uv = -(-1)^{|u||v|}vu (exterior) or +(-1)^{|u||v|}vu."""
    par = r.parities
    p = r.superdim[0]
    ev = list(range(p))
    od = list(range(p, r.dim))
    if exterior:
        keys = ([(i, j) for i in ev for j in ev if i < j] + [(s, t) for s in od for t in od if s <= t])
    else:
        keys = ([(i, j) for i in ev for j in ev if i <= j] + [(s, t) for s in od for t in od if s < t])
    keys += [(i, s) for i in ev for s in od]
    pos = {k: n for n, k in enumerate(keys)}
    n_even = len(keys) - p * len(od)
    sym = -1 if exterior else 1  # uv = sym * (-1)^{|u||v|} vu

    def reduce(a: int, b: int):
        """(sign, index) for the product b_a b_b, or None if it vanishes."""
        s = 1
        if par[a] > par[b] or (par[a] == par[b] and a > b):
            a, b = b, a
            s = sym * (-1 if par[a] and par[b] else 1)
        if a == b and sym * (-1 if par[a] else 1) == -1:
            return None
        if (a, b) not in pos:
            return None
        return s, pos[(a, b)]

    action = []
    for x in range(r.algebra.dim):
        deg = r.algebra.parities[x]
        f = r.action[x]
        cols = []
        for (a, b) in keys:
            col: dict = {}
            for a2, v in f.col_dict(a).items():
                red = reduce(a2, b)
                if red:
                    col[red[1]] = col.get(red[1], ZERO) + red[0] * v
            sign = -1 if deg and par[a] else 1
            for b2, v in f.col_dict(b).items():
                red = reduce(a, b2)
                if red:
                    col[red[1]] = col.get(red[1], ZERO) + sign * red[0] * v
            cols.append(col)
        action.append(Matrix.from_columns(cols, rows=len(keys)))
    lab = r.labels
    joiner = "^" if exterior else "."
    labels = [f"{lab[a]}{joiner}{lab[b]}" for a, b in keys]
    return Representation(r.algebra, SuperSpace(tuple(labels[:n_even]), tuple(labels[n_even:])),
                          tuple(action))


def exterior_square(r: Representation) -> Representation:
    return _square(r, True)


def symmetric_square(r: Representation) -> Representation:
    return _square(r, False)


def twist(r: Representation, theta: Matrix) -> Representation:
    """x -> f(theta(x)); theta holds the coordinates of theta(b_j) in column j."""
    if not is_automorphism(r.algebra, theta):
        raise NotAnAutomorphism("twist requires an algebra automorphism")
    cols = theta.columns()
    return Representation(r.algebra, r.space, tuple(r.element_action(c) for c in cols))


# -- intertwiners and submodules ------------------------------------------------------

def intertwiners(r1: Representation, r2: Representation) -> list[Matrix]:
    """Basis of the even maps phi: V1 -> V2 with phi f1(x) = f2(x) phi."""
    alg = _same_algebra(r1, r2)
    p1, p2 = r1.parities, r2.parities
    unknowns = [(i, j) for i in range(r2.dim) for j in range(r1.dim) if p1[j] == p2[i]]
    var = {k: t for t, k in enumerate(unknowns)}
    eqs = []
    for x in range(alg.dim):
        f1, f2 = r1.action[x], r2.action[x]
        # (phi f1)_{ij} = sum_k phi_{ik} f1_{kj};  (f2 phi)_{ij} = sum_k f2_{ik} phi_{kj}
        rows: dict = {}
        for k, j, v in f1.nonzero():
            for i in range(r2.dim):
                t = var.get((i, k))
                if t is not None:
                    d = rows.setdefault((i, j), {})
                    d[t] = d.get(t, ZERO) + v
        for i, k, v in f2.nonzero():
            for j in range(r1.dim):
                t = var.get((k, j))
                if t is not None:
                    d = rows.setdefault((i, j), {})
                    d[t] = d.get(t, ZERO) - v
        eqs.extend(d for d in rows.values() if any(d.values()))
    system = Matrix(len(eqs), len(unknowns), eqs)
    out = []
    for vec in kernel(system):
        rows = [dict() for _ in range(r2.dim)]
        for t, v in enumerate(vec):
            if v:
                i, j = unknowns[t]
                rows[i][j] = v
        out.append(Matrix._wrap(r2.dim, r1.dim, rows))
    return out


@dataclass(frozen=True)
class IsoCertificate:
    """Outcome of an isomorphism query.

    ``witness`` is an explicit invertible intertwiner when one exists;
    otherwise ``generic_rank`` is the symbolic rank of a generic intertwiner.
    """

    isomorphic: bool
    witness: Matrix | None
    hom_dim: int
    generic_rank: int | None


def find_isomorphism(r1: Representation, r2: Representation, seed: int = 0,
                     tries: int = 4) -> IsoCertificate:
    if r1.superdim != r2.superdim:
        return IsoCertificate(False, None, 0, None)
    basis = intertwiners(r1, r2)
    if not basis:
        return IsoCertificate(False, None, 0, 0)
    rng = random.Random(seed)
    for _ in range(tries):
        phi = Matrix.zeros(r2.dim, r1.dim)
        for b in basis:
            phi = phi + b.scale(Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        if rank(phi) == r1.dim:
            return IsoCertificate(True, phi, len(basis), r1.dim)
    zero = Matrix.zeros(r2.dim, r1.dim)
    g = max_rank_over_affine_family([zero] + basis)
    return IsoCertificate(g == r1.dim, None, len(basis), g)


@dataclass(frozen=True)
class Submodule:
    vectors: tuple[tuple, ...]
    superdim: tuple[int, int]

    @property
    def dim(self) -> int:
        return len(self.vectors)


def _parity_of_vector(vec, par) -> int | None:
    ps = {par[i] for i, v in enumerate(vec) if v}
    if len(ps) > 1:
        raise ValueError("vector is not homogeneous")
    return ps.pop() if ps else None


def submodule_generated(r: Representation, v: Sequence) -> Submodule:
    """Smallest invariant subspace containing the homogeneous vector ``v``."""
    par = r.parities
    v = [x if x else ZERO for x in v]
    if _parity_of_vector(v, par) is None:
        return Submodule((), (0, 0))
    basis: list[list] = []
    pivots: list[int] = []  # reduced copies for membership tests
    reduced: list[dict] = []

    def add(vec) -> bool:
        d = {i: x for i, x in enumerate(vec) if x}
        for piv, row in zip(pivots, reduced):
            c = d.get(piv)
            if c:
                for j, y in row.items():
                    nv = d.get(j, ZERO) - c * y
                    if nv:
                        d[j] = nv
                    else:
                        d.pop(j, None)
        if not d:
            return False
        piv = min(d)
        inv = ONE / d[piv]
        row = {j: y * inv for j, y in d.items()}
        for other in reduced:
            c = other.get(piv)
            if c:
                for j, y in row.items():
                    nv = other.get(j, ZERO) - c * y
                    if nv:
                        other[j] = nv
                    else:
                        other.pop(j, None)
        pivots.append(piv)
        reduced.append(row)
        basis.append(list(vec))
        return True

    add(v)
    queue = [v]
    while queue:
        w = queue.pop(0)
        for a in r.action:
            img = a.apply(w)
            if any(img) and add(img):
                queue.append(img)
    counts = [0, 0]
    for vec in basis:
        counts[_parity_of_vector(vec, par)] += 1
    return Submodule(tuple(tuple(b) for b in basis), (counts[0], counts[1]))


def _diagonal_cartan(r: Representation) -> bool:
    return all(i == j for x in r.algebra.cartan_indices() for i, j, _ in r.action[x].nonzero())


def weight_of_basis_vector(r: Representation, i: int) -> tuple:
    return tuple(r.action[x][i, i] for x in r.algebra.cartan_indices())


def _common_kernel_by_weight(r: Representation, ops: list[int], parity: int | None):
    par = r.parities
    idx = [i for i in range(r.dim) if parity is None or par[i] == parity]
    if _diagonal_cartan(r):
        groups: dict = {}
        for i in idx:
            groups.setdefault(weight_of_basis_vector(r, i), []).append(i)
    else:
        groups = {None: idx}
    out = []
    for wt, cols in groups.items():
        stacked = []
        for x in ops:
            sub = r.action[x].submatrix(range(r.dim), cols)
            stacked.extend(sub.row_dict(i) for i in range(r.dim))
        m = Matrix(len(stacked), len(cols), stacked) if stacked else Matrix.zeros(0, len(cols))
        for kv in kernel(m):
            full = [ZERO] * r.dim
            for c, val in zip(cols, kv):
                full[c] = val
            out.append((wt, full))
    return out


def even_highest_vectors(r: Representation, parity: int | None = None) -> list[tuple]:
    """Vectors killed by every positive even root vector, grouped by Cartan weight.

    Weights are tuples of eigenvalues of the Cartan basis elements (in the
    algebra's basis order) or ``None`` when the Cartan action is not diagonal.
    """
    return _common_kernel_by_weight(r, r.algebra.positive_even_indices(), parity)


def singular_vectors(r: Representation, parity: int | None = None) -> list[tuple]:
    """Vectors killed by all positive even root vectors and by the odd raising block."""
    alg = r.algebra
    return _common_kernel_by_weight(r, alg.positive_even_indices() + alg.raising_odd_indices(), parity)


# -- JSON ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def algebra_from_name(name: str) -> LieSuperalgebra:
    """Parse descriptors such as ``sl(2|1)`` or ``gl(3|0)``."""
    name = name.strip()
    try:
        kind, rest = name.split("(", 1)
        m, n = rest.rstrip(")").split("|")
        return make_algebra(kind.strip(), int(m), int(n))
    except (ValueError, TypeError) as exc:
        raise ValueError(f"bad algebra descriptor {name!r}") from exc


def rep_to_json(r: Representation) -> dict:
    return {
        "algebra": r.algebra.name,
        "parameters": list(r.parameters()),
        "even_basis": list(r.space.even),
        "odd_basis": list(r.space.odd),
        "action": {
            lab: [[i, j, canonical_str(v)] for i, j, v in a.nonzero()]
            for lab, a in zip(r.algebra.labels, r.action)
        },
    }


def rep_from_json(data: dict) -> Representation:
    alg = algebra_from_name(data["algebra"])
    names = tuple(data.get("parameters", ()))
    space = SuperSpace(tuple(data["even_basis"]), tuple(data["odd_basis"]))
    dim = space.dim
    action = []
    for lab in alg.labels:
        rows = [dict() for _ in range(dim)]
        for i, j, s in data["action"].get(lab, []):
            rows[i][j] = parse_scalar(s, names)
        action.append(Matrix._wrap(dim, dim, [{j: v for j, v in row.items() if v} for row in rows]))
    return Representation(alg, space, tuple(action))
