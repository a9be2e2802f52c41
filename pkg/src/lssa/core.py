"""Left-symmetric superalgebra structures, 1-cocycles and evaluation maps."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .linalg import Matrix, NotInvertible, ONE, ZERO, Inconsistent, inverse, kernel, rank, solve
from .reps import Representation, algebra_from_name, is_even_operator
from .scalars import canonical_str, parse_scalar
from .superlie import LieSuperalgebra, supertrace


class NotLeftSymmetric(ValueError):
    pass


class NotBijective(ValueError):
    pass


class OddBasePoint(ValueError):
    pass


@dataclass(frozen=True)
class ProductTable:
    """x_i . x_j = sum_l coeffs[(i, j)][l] x_l, stored sparsely."""

    algebra: LieSuperalgebra
    coeffs: dict

    def product(self, i: int, j: int) -> dict:
        return self.coeffs.get((i, j), {})

    def parameters(self) -> tuple[str, ...]:
        from .scalars import scalar_parameters
        names: set[str] = set()
        for d in self.coeffs.values():
            for v in d.values():
                names.update(scalar_parameters(v))
        return tuple(sorted(names))

    def left_matrix(self, i: int) -> Matrix:
        """rho(x_i)."""
        n = self.algebra.dim
        return Matrix.from_columns([self.product(i, j) for j in range(n)], rows=n)

    def multiply(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for l, c in self.product(i, j).items():
                    out[l] = out.get(l, ZERO) + a * b * c
        return {l: x for l, x in out.items() if x}

    def substitute(self, bindings: dict) -> "ProductTable":
        from .scalars import substitute
        return ProductTable(self.algebra, {
            k: {l: x for l, x in ((l, substitute(v, bindings)) for l, v in d.items()) if x}
            for k, d in self.coeffs.items()})

    def respects_parity(self) -> bool:
        p = self.algebra.parities
        return all((p[i] + p[j] + p[l]) % 2 == 0
                   for (i, j), d in self.coeffs.items() for l in d)

    def __eq__(self, other):
        if not isinstance(other, ProductTable):
            return NotImplemented
        clean = lambda t: {k: d for k, d in t.coeffs.items() if d}
        return self.algebra.name == other.algebra.name and clean(self) == clean(other)

    __hash__ = None


def _sign(alg: LieSuperalgebra, i: int, j: int) -> int:
    return -1 if alg.parities[i] and alg.parities[j] else 1


def check_lssa(p: ProductTable) -> bool:
    """The associator is supersymmetric in its first two arguments, on all basis triples.

    Checked in operator form: rho(x.y - s y.x) = rho(x)rho(y) - s rho(y)rho(x).
    """
    alg = p.algebra
    if not p.respects_parity():
        return False
    n = alg.dim
    rho = [p.left_matrix(i) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            s = _sign(alg, i, j)
            c: dict = dict(p.product(i, j))
            for l, v in p.product(j, i).items():
                c[l] = c.get(l, ZERO) - s * v
            lhs = Matrix.zeros(n, n)
            for l, v in c.items():
                if v:
                    lhs = lhs + rho[l].scale(v)
            rhs = rho[i] @ rho[j] - (rho[j] @ rho[i]).scale(s)
            if lhs != rhs:
                return False
    return True


def associator_defect(p: ProductTable, i: int, j: int, k: int) -> dict:
    """(x.y).z - x.(y.z) - s((y.x).z - y.(x.z)) for basis indices; zero in an LSSA."""
    e = lambda t: {t: ONE}
    s = _sign(p.algebra, i, j)
    out: dict = {}
    terms = [(p.multiply(p.multiply(e(i), e(j)), e(k)), 1), (p.multiply(e(i), p.multiply(e(j), e(k))), -1),
             (p.multiply(p.multiply(e(j), e(i)), e(k)), -s), (p.multiply(e(j), p.multiply(e(i), e(k))), s)]
    for d, c in terms:
        for l, v in d.items():
            out[l] = out.get(l, ZERO) + c * v
    return {l: v for l, v in out.items() if v}


def associated_bracket(p: ProductTable) -> dict:
    alg = p.algebra
    out = {}
    for i in range(alg.dim):
        for j in range(alg.dim):
            s = _sign(alg, i, j)
            d = dict(p.product(i, j))
            for l, v in p.product(j, i).items():
                d[l] = d.get(l, ZERO) - s * v
            out[(i, j)] = {l: v for l, v in d.items() if v}
    return out


def recovers_bracket(p: ProductTable) -> bool:
    b = associated_bracket(p)
    return all(b[key] == p.algebra.structure[key] for key in b)


def left_regular(p: ProductTable, check: bool = True) -> Representation:
    if check and not check_lssa(p):
        raise NotLeftSymmetric("product table violates the left-symmetry identity")
    alg = p.algebra
    return Representation(alg, alg.space, tuple(p.left_matrix(i) for i in range(alg.dim)))


def right_mul(p: ProductTable, x: int) -> Matrix:
    """y -> y . x_x."""
    n = p.algebra.dim
    return Matrix.from_columns([p.product(j, x) for j in range(n)], rows=n)


def gamma(p: ProductTable, x: int) -> Matrix:
    """rho(x) - ad(x), i.e. y -> (-1)^{|x||y|} y . x."""
    return p.left_matrix(x) - p.algebra.structure_matrix(x)


def zero_product(alg: LieSuperalgebra) -> ProductTable:
    return ProductTable(alg, {})


def associative_product(alg: LieSuperalgebra) -> ProductTable:
    """Matrix multiplication, for algebras closed under it (gl(m|n))."""
    out = {}
    for i, a in enumerate(alg.elements):
        for j, b in enumerate(alg.elements):
            c = alg.coords(a @ b)
            out[(i, j)] = {l: v for l, v in enumerate(c) if v}
    return ProductTable(alg, out)


# -- cocycles --------------------------------------------------------------------------

@dataclass(frozen=True)
class Cocycle:
    rep: Representation
    q: Matrix  # dim(rep) x dim(algebra); column j is q(b_j)


def check_cocycle(c: Cocycle) -> bool:
    """q([x,y]) = f(x)q(y) - (-1)^{|x||y|} f(y)q(x) on basis pairs, and q even."""
    alg = c.rep.algebra
    n = alg.dim
    if c.q.shape != (c.rep.dim, n):
        return False
    rp, ap = c.rep.parities, alg.parities
    if any(rp[i] != ap[j] for i, j, _ in c.q.nonzero()):
        return False
    cols = [c.q.col_dict(j) for j in range(n)]
    for i in range(n):
        fi = c.rep.action[i]
        for j in range(i, n):
            lhs = c.q.apply_sparse(alg.bracket(i, j))
            a = fi.apply_sparse(cols[j])
            b = c.rep.action[j].apply_sparse(cols[i])
            s = _sign(alg, i, j)
            for l, v in b.items():
                a[l] = a.get(l, ZERO) - s * v
            a = {l: v for l, v in a.items() if v}
            if a != {l: v for l, v in lhs.items() if v}:
                return False
    return True


def evaluation_map(f: Representation, a: Sequence) -> Cocycle:
    """The cocycle x -> f(x)a for an even vector a."""
    par = f.parities
    if any(v and par[i] for i, v in enumerate(a)):
        raise OddBasePoint("the base point must lie in the even part")
    cols = [m.apply(a) for m in f.action]
    return Cocycle(f, Matrix.from_columns(cols, rows=f.dim))


def lssa_from_cocycle(c: Cocycle) -> ProductTable:
    """x . y = q^{-1}(f(x) q(y))."""
    alg = c.rep.algebra
    q = c.q
    if q.rows != q.cols:
        raise NotBijective(f"q is {q.rows}x{q.cols}")
    try:
        qinv = inverse(q)
    except NotInvertible:
        raise NotBijective("q has a nontrivial kernel") from None
    out = {}
    for i in range(alg.dim):
        rho = qinv @ (c.rep.action[i] @ q)
        for j in range(alg.dim):
            col = rho.col_dict(j)
            if col:
                out[(i, j)] = col
    return ProductTable(alg, out)


def identity_cocycle(p: ProductTable) -> Cocycle:
    return Cocycle(left_regular(p, check=False), Matrix.identity(p.algebra.dim))


def apply_automorphism(rep: Representation, T: Matrix, x: int) -> Matrix:
    """f(T(b_x))."""
    return rep.element_action(T.col(x))


def check_equivalence(c1: Cocycle, c2: Cocycle, phi: Matrix, T: Matrix) -> bool:
    """f2(x) = phi^{-1} f1(T x) phi and q2 = phi^{-1} q1 T."""
    try:
        phinv = inverse(phi)
    except NotInvertible:
        return False
    alg = c1.rep.algebra
    for x in range(alg.dim):
        if phinv @ apply_automorphism(c1.rep, T, x) @ phi != c2.rep.action[x]:
            return False
    return phinv @ c1.q @ T == c2.q


@dataclass(frozen=True)
class RightIdentities:
    """Solutions e (even) of x.e = x for all basis x: particular + span(directions)."""

    particular: tuple | None
    directions: tuple[tuple, ...]

    @property
    def exists(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.exists and not self.directions


def find_right_identities(p: ProductTable) -> RightIdentities:
    alg = p.algebra
    n = alg.dim
    ev = alg.even_indices()
    rows, rhs = [], []
    for i in range(n):
        for r in range(n):
            rows.append({t: p.product(i, l).get(r, ZERO) for t, l in enumerate(ev)})
            rhs.append(ONE if i == r else ZERO)
    m = Matrix(len(rows), len(ev), rows)

    def lift(v):
        out = [ZERO] * n
        for t, l in enumerate(ev):
            out[l] = v[t]
        return tuple(out)

    try:
        sol = solve(m, rhs)
    except Inconsistent:
        return RightIdentities(None, ())
    return RightIdentities(lift(sol), tuple(lift(k) for k in kernel(m)))


def find_left_unit_kernel(p: ProductTable):
    """An element e with rho(e) = id, or None."""
    n = p.algebra.dim
    rows, rhs = [], []
    rho = [p.left_matrix(l) for l in range(n)]
    for i in range(n):
        for j in range(n):
            rows.append({l: rho[l][i, j] for l in range(n)})
            rhs.append(ONE if i == j else ZERO)
    try:
        return tuple(solve(Matrix(len(rows), n, rows), rhs))
    except Inconsistent:
        return None


def supertrace_of(mat: Matrix, parities: Sequence[int]) -> object:
    s = ZERO
    for i in range(mat.rows):
        v = mat[i, i]
        if v:
            s = s - v if parities[i] else s + v
    return s


def supertraces_vanish(p: ProductTable) -> bool:
    par = p.algebra.parities
    return all(not supertrace_of(p.left_matrix(x), par) and not supertrace_of(gamma(p, x), par)
               for x in range(p.algebra.dim))


# -- JSON --------------------------------------------------------------------------------

def table_to_json(p: ProductTable, parameters: Sequence[str] | None = None) -> dict:
    alg = p.algebra
    lab = alg.labels
    prods = {}
    for i in range(alg.dim):
        for j in range(alg.dim):
            d = p.product(i, j)
            if d:
                prods[f"{lab[i]}*{lab[j]}"] = {lab[l]: canonical_str(v) for l, v in sorted(d.items())}
    return {"algebra": alg.name,
            "parameters": list(parameters if parameters is not None else p.parameters()),
            "basis": list(lab), "products": prods}


def table_from_json(data: dict | str) -> ProductTable:
    if isinstance(data, str):
        data = json.loads(data)
    for key in ("algebra", "basis", "products"):
        if key not in data:
            raise ValueError(f"product table JSON lacks {key!r}")
    alg = algebra_from_name(data["algebra"])
    if list(data["basis"]) != list(alg.labels):
        raise ValueError("basis labels do not match the algebra")
    names = tuple(data.get("parameters", ()))
    out = {}
    for key, d in data["products"].items():
        left, right = key.split("*")
        i, j = alg.index(left), alg.index(right)
        out[(i, j)] = {alg.index(l): parse_scalar(s, names) for l, s in d.items()}
        out[(i, j)] = {l: v for l, v in out[(i, j)].items() if v}
    return ProductTable(alg, out)


def cocycle_space(rep: Representation, vanish_on_even: bool = False) -> list[Matrix]:
    """Basis of the even 1-cocycles q: g -> V (optionally with q = 0 on g_0)."""
    alg = rep.algebra
    n, d = alg.dim, rep.dim
    rp, ap = rep.parities, alg.parities
    unknowns = [(r, j) for j in range(n) for r in range(d)
                if rp[r] == ap[j] and not (vanish_on_even and ap[j] == 0)]
    var = {k: t for t, k in enumerate(unknowns)}
    eqs = []
    for i in range(n):
        for j in range(i, n):
            s = _sign(alg, i, j)
            rows = {}
            for l, c in alg.bracket(i, j).items():
                for r in range(d):
                    t = var.get((r, l))
                    if t is not None:
                        rows.setdefault(r, {})
                        rows[r][t] = rows[r].get(t, ZERO) + c
            for r, k, v in rep.action[i].nonzero():  # (f_i q_j)_r = sum_k f_i[r,k] q[k,j]
                t = var.get((k, j))
                if t is not None:
                    rows.setdefault(r, {})
                    rows[r][t] = rows[r].get(t, ZERO) - v
            for r, k, v in rep.action[j].nonzero():
                t = var.get((k, i))
                if t is not None:
                    rows.setdefault(r, {})
                    rows[r][t] = rows[r].get(t, ZERO) + s * v
            eqs.extend({t: v for t, v in e.items() if v} for e in rows.values())
    system = Matrix(len(eqs), len(unknowns), eqs)
    out = []
    for vec in kernel(system):
        rows = [dict() for _ in range(d)]
        for t, v in enumerate(vec):
            if v:
                r, j = unknowns[t]
                rows[r][j] = v
        out.append(Matrix._wrap(d, n, rows))
    return out


def difference_is_even_module_map(c1: Cocycle, c2: Cocycle) -> bool:
    """For cocycles with the same f agreeing on g_0, (q1 - q2) restricted to g_1
    intertwines ad and f for every even basis element."""
    alg = c1.rep.algebra
    ev, od = alg.even_indices(), alg.odd_indices()
    diff = c1.q - c2.q
    if any(diff.col_dict(j) for j in ev):
        raise ValueError("cocycles differ on the even subalgebra")
    for x in ev:
        for y in od:
            lhs = diff.apply_sparse(alg.bracket(x, y))
            rhs = c1.rep.action[x].apply_sparse(diff.col_dict(y))
            if {k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}:
                return False
    return True


def even_right_unit(p: ProductTable) -> list | None:
    """An even a with x.a = x for every even basis x, or None.

    When it exists, id - ev_a (both on the left-regular module) vanishes on g_0."""
    alg = p.algebra
    ev = alg.even_indices()
    n = alg.dim
    rows, rhs = [], []
    for x in ev:
        lm = p.left_matrix(x)
        for r in range(n):
            rows.append({c: v for c, v in lm.row_dict(r).items() if c in ev})
            rhs.append(ONE if r == x else ZERO)
    try:
        return solve(Matrix(len(rows), n, rows), rhs)
    except Inconsistent:
        return None


def transport(p: ProductTable, T: Matrix) -> ProductTable:
    """x * y = T^{-1}(T x . T y) for an automorphism T of the algebra."""
    alg = p.algebra
    tinv = inverse(T)
    n = alg.dim
    cols = [T.col_dict(j) for j in range(n)]
    out = {}
    for i in range(n):
        for j in range(n):
            acc: dict = {}
            for a, ca in cols[i].items():
                for b, cb in cols[j].items():
                    for l, v in p.product(a, b).items():
                        acc[l] = acc.get(l, ZERO) + ca * cb * v
            img = tinv.apply_sparse(acc)
            img = {l: v for l, v in img.items() if v}
            if img:
                out[(i, j)] = img
    return ProductTable(alg, out)
