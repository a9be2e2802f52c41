"""Supermatrices and the Lie superalgebras gl(m|n), sl(m|n).

Indices are 0-based internally; labels such as ``E_1_3`` are 1-based as in
the usual matrix-unit notation.  Rows and columns ``0..m-1`` are even, the
remaining ``n`` are odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import Matrix, ONE, ZERO, solve
from .scalars import Scalar, as_scalar


class MixedParityInput(ValueError):
    pass


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class SuperSpace:
    """A parity-graded space with an ordered basis, even labels first."""

    even: tuple[str, ...]
    odd: tuple[str, ...]

    def __post_init__(self):
        labels = self.even + self.odd
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be distinct")

    @property
    def labels(self) -> tuple[str, ...]:
        return self.even + self.odd

    @property
    def dim(self) -> int:
        return len(self.even) + len(self.odd)

    @property
    def superdim(self) -> tuple[int, int]:
        return len(self.even), len(self.odd)

    def parity(self, i: int) -> int:
        return 0 if i < len(self.even) else 1

    def parities(self) -> list[int]:
        return [0] * len(self.even) + [1] * len(self.odd)

    def index(self, label: str) -> int:
        return self.labels.index(label)


# -- supermatrices ------------------------------------------------------------

class SuperMatrix:
    """A sparse (m+n)x(m+n) matrix with the block structure of gl(m|n)."""

    __slots__ = ("m", "n", "entries")

    def __init__(self, m: int, n: int, entries: dict | None = None):
        self.m, self.n = m, n
        self.entries = {k: as_scalar(v) for k, v in (entries or {}).items() if v}

    @classmethod
    def unit(cls, m: int, n: int, i: int, j: int) -> "SuperMatrix":
        """The matrix unit E_ij, 1-based."""
        return cls(m, n, {(i - 1, j - 1): ONE})

    @classmethod
    def from_rows(cls, m: int, n: int, rows) -> "SuperMatrix":
        return cls(m, n, {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    @property
    def size(self) -> int:
        return self.m + self.n

    def _odd_pos(self, i: int, j: int) -> bool:
        return (i < self.m) != (j < self.m)

    @property
    def parity(self) -> str:
        ev = any(not self._odd_pos(i, j) for i, j in self.entries)
        od = any(self._odd_pos(i, j) for i, j in self.entries)
        if ev and od:
            return "mixed"
        return "odd" if od else "even"

    def degree(self) -> int:
        p = self.parity
        if p == "mixed":
            raise MixedParityInput("supermatrix is not homogeneous")
        return 1 if p == "odd" else 0

    def blocks(self) -> tuple[list, list, list, list]:
        """X1 (m x m), X2 (m x n), X3 (n x m), X4 (n x n) as nested lists."""
        m, n = self.m, self.n
        g = lambda i, j: self.entries.get((i, j), ZERO)
        x1 = [[g(i, j) for j in range(m)] for i in range(m)]
        x2 = [[g(i, m + j) for j in range(n)] for i in range(m)]
        x3 = [[g(m + i, j) for j in range(m)] for i in range(n)]
        x4 = [[g(m + i, m + j) for j in range(n)] for i in range(n)]
        return x1, x2, x3, x4

    def __getitem__(self, ij):
        return self.entries.get(ij, ZERO)

    def __add__(self, other: "SuperMatrix") -> "SuperMatrix":
        d = dict(self.entries)
        for k, v in other.entries.items():
            d[k] = d.get(k, ZERO) + v
        return SuperMatrix(self.m, self.n, d)

    def __neg__(self):
        return SuperMatrix(self.m, self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SuperMatrix":
        c = as_scalar(c)
        return SuperMatrix(self.m, self.n, {k: v * c for k, v in self.entries.items()})

    __rmul__ = lambda self, c: self.scale(c)

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        rows: dict = {}
        for (k, j), v in other.entries.items():
            rows.setdefault(k, []).append((j, v))
        d: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                d[(i, j)] = d.get((i, j), ZERO) + a * b
        return SuperMatrix(self.m, self.n, d)

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.entries == other.entries

    def __hash__(self):
        return hash((self.m, self.n, frozenset((k, str(v)) for k, v in self.entries.items())))

    def is_zero(self) -> bool:
        return not self.entries

    def to_matrix(self) -> Matrix:
        rows = [dict() for _ in range(self.size)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return Matrix(self.size, self.size, rows)

    def __repr__(self):
        terms = " + ".join(f"{v}*E_{i + 1}_{j + 1}" for (i, j), v in sorted(self.entries.items()))
        return f"SuperMatrix({self.m}|{self.n}: {terms or '0'})"


def supercommutator(x: SuperMatrix, y: SuperMatrix) -> SuperMatrix:
    sign = -1 if x.degree() * y.degree() else 1
    xy, yx = x @ y, y @ x
    return xy + yx if sign == -1 else xy - yx


def supertrace(x: SuperMatrix) -> Scalar:
    s = ZERO
    for (i, j), v in x.entries.items():
        if i == j:
            s = s + v if i < x.m else s - v
    return s


def supertranspose(x: SuperMatrix) -> SuperMatrix:
    """Blocks (X1, X2; X3, X4) -> (X1^t, X3^t; -X2^t, X4^t)."""
    m = x.m
    d = {}
    for (i, j), v in x.entries.items():
        if i < m and j >= m:  # X2 entry goes to X3 block with a sign
            d[(j, i)] = -v
        else:
            d[(j, i)] = v
    return SuperMatrix(x.m, x.n, d)


def neg_supertranspose(x: SuperMatrix) -> SuperMatrix:
    return -supertranspose(x)


# -- weights ------------------------------------------------------------------

@dataclass(frozen=True)
class WeightMN:
    """A weight sum(c_i eps_i) + sum(d_j delta_j).

    Coefficients are kept as given so that pairings with roots written in
    their natural form are meaningful; equality of sl(m|n) weights is tested
    on the canonical representative (delta_n eliminated).
    """

    eps: tuple
    delta: tuple
    special: bool = True

    def __post_init__(self):
        object.__setattr__(self, "eps", tuple(as_scalar(c) for c in self.eps))
        object.__setattr__(self, "delta", tuple(as_scalar(c) for c in self.delta))

    @classmethod
    def basis(cls, m: int, n: int, kind: str, index: int, special: bool = True) -> "WeightMN":
        eps = [ZERO] * m
        delta = [ZERO] * n
        (eps if kind == "eps" else delta)[index] = ONE
        return cls(tuple(eps), tuple(delta), special)

    def canonical(self) -> "WeightMN":
        if not self.special or not self.delta:
            return self
        c = self.delta[-1]
        if not c:
            return self
        eps = tuple(e + c for e in self.eps)
        delta = tuple(d - c for d in self.delta[:-1]) + (ZERO,)
        return WeightMN(eps, delta, self.special)

    def __add__(self, other: "WeightMN") -> "WeightMN":
        return WeightMN(tuple(a + b for a, b in zip(self.eps, other.eps)),
                        tuple(a + b for a, b in zip(self.delta, other.delta)), self.special)

    def __neg__(self):
        return WeightMN(tuple(-a for a in self.eps), tuple(-a for a in self.delta), self.special)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeightMN":
        c = as_scalar(c)
        return WeightMN(tuple(a * c for a in self.eps), tuple(a * c for a in self.delta), self.special)

    def same(self, other: "WeightMN") -> bool:
        a, b = self.canonical(), other.canonical()
        return a.eps == b.eps and a.delta == b.delta

    def __str__(self):
        parts = [f"{c}*eps{i + 1}" for i, c in enumerate(self.eps) if c]
        parts += [f"{c}*delta{j + 1}" for j, c in enumerate(self.delta) if c]
        return " + ".join(parts) or "0"


def weight_pairing(lam: WeightMN, mu: WeightMN) -> Scalar:
    """Bilinear form with (eps_i, eps_i) = 1, (delta_j, delta_j) = -1."""
    s = ZERO
    for a, b in zip(lam.eps, mu.eps):
        s = s + a * b
    for a, b in zip(lam.delta, mu.delta):
        s = s - a * b
    return s


def rho_even(m: int, n: int) -> WeightMN:
    eps = [Fraction(m - 1 - 2 * i, 2) for i in range(m)]
    delta = [Fraction(n - 1 - 2 * j, 2) for j in range(n)]
    return WeightMN(tuple(eps), tuple(delta))


def rho_odd(m: int, n: int) -> WeightMN:
    return WeightMN(tuple(Fraction(n, 2) for _ in range(m)), tuple(Fraction(-m, 2) for _ in range(n)))


def rho(m: int, n: int) -> WeightMN:
    return rho_even(m, n) - rho_odd(m, n)


# -- Lie superalgebras ----------------------------------------------------------

SL21_LABELS = ("x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")


@dataclass(frozen=True)
class LieSuperalgebra:
    """A matrix Lie superalgebra with an ordered homogeneous basis.

    ``structure[(i, j)]`` is the sparse coordinate vector of ``[b_i, b_j]``.
    """

    kind: str
    m: int
    n: int
    labels: tuple[str, ...]
    elements: tuple[SuperMatrix, ...]
    parities: tuple[int, ...]
    structure: dict = field(repr=False, compare=False)
    _coord_index: dict = field(repr=False, compare=False)
    _diag: tuple = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.kind}({self.m}|{self.n})"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def superdim(self) -> tuple[int, int]:
        odd = sum(self.parities)
        return self.dim - odd, odd

    @property
    def space(self) -> SuperSpace:
        ne = self.superdim[0]
        return SuperSpace(self.labels[:ne], self.labels[ne:])

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def unit_index(self, i: int, j: int) -> int:
        """Basis index of the off-diagonal matrix unit E_ij (1-based)."""
        return self._coord_index[(i - 1, j - 1)]

    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 1]

    def cartan_indices(self) -> list[int]:
        return list(self._diag[0])

    def _unit_positions(self) -> dict:
        return {idx: pos for pos, idx in self._coord_index.items()}

    def positive_even_indices(self) -> list[int]:
        """E_ij with i < j inside one diagonal block."""
        out = []
        for idx, (i, j) in sorted(self._unit_positions().items()):
            if i < j and (i < self.m) == (j < self.m):
                out.append(idx)
        return out

    def raising_odd_indices(self) -> list[int]:
        """The block g_1 (upper right)."""
        return [idx for idx, (i, j) in sorted(self._unit_positions().items())
                if i < self.m <= j]

    def lowering_odd_indices(self) -> list[int]:
        """The block g_{-1} (lower left)."""
        return [idx for idx, (i, j) in sorted(self._unit_positions().items())
                if j < self.m <= i]

    def root(self, idx: int) -> WeightMN:
        i, j = self._unit_positions()[idx]
        def w(t):
            return WeightMN.basis(self.m, self.n, "eps" if t < self.m else "delta",
                                  t if t < self.m else t - self.m, self.kind == "sl")
        return w(i) - w(j)

    def z_degree(self, idx: int) -> int:
        """Degree in the Z-grading: -1, 0, 1."""
        pos = self._unit_positions().get(idx)
        if pos is None:
            return 0
        i, j = pos
        if i < self.m <= j:
            return 1
        if j < self.m <= i:
            return -1
        return 0

    def coords(self, x: SuperMatrix) -> list:
        """Coordinates of ``x`` in the basis; raises ValueError if outside."""
        out = [ZERO] * self.dim
        diag = [ZERO] * (self.m + self.n)
        for (i, j), v in x.entries.items():
            if i == j:
                diag[i] = v
            else:
                out[self._coord_index[(i, j)]] = v
        if any(diag):
            idxs, dmat = self._diag
            try:
                c = solve(dmat, diag)
            except ValueError:
                raise ValueError(f"{x!r} does not lie in {self.name}") from None
            for k, v in zip(idxs, c):
                out[k] = v
        return out

    def element(self, coeffs: Sequence) -> SuperMatrix:
        total = SuperMatrix(self.m, self.n)
        for c, e in zip(coeffs, self.elements):
            if c:
                total = total + e.scale(c)
        return total

    def bracket(self, i: int, j: int) -> dict:
        return self.structure[(i, j)]

    def bracket_vectors(self, u: Sequence, v: Sequence) -> list:
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for l, c in self.structure[(i, j)].items():
                    out[l] = out[l] + a * b * c
        return out

    def structure_matrix(self, i: int) -> Matrix:
        """ad(b_i) in the basis."""
        cols = [self.structure[(i, j)] for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim)


def _build(kind, m, n, labels, elements) -> LieSuperalgebra:
    parities = tuple(e.degree() for e in elements)
    coord_index = {}
    diag_idx = []
    diag_cols = []
    for k, e in enumerate(elements):
        keys = list(e.entries)
        if len(keys) == 1 and keys[0][0] != keys[0][1]:
            coord_index[keys[0]] = k
        else:
            diag_idx.append(k)
            diag_cols.append([e.entries.get((t, t), ZERO) for t in range(m + n)])
    dmat = Matrix.from_columns(diag_cols, rows=m + n) if diag_cols else Matrix.zeros(m + n, 0)
    alg = LieSuperalgebra(kind, m, n, tuple(labels), tuple(elements), parities, {},
                          coord_index, (tuple(diag_idx), dmat))
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            c = alg.coords(supercommutator(a, b))
            alg.structure[(i, j)] = {l: v for l, v in enumerate(c) if v}
    return alg


def make_algebra(kind: str, m: int, n: int) -> LieSuperalgebra:
    """gl(m|n) or sl(m|n) with a basis of matrix units.

    Basis order: even off-diagonal units (row-major), the diagonal part,
    then the odd units of the lower-left block followed by the upper-right
    block.  sl(2|1) uses the labels x1..x4, y1..y4.
    """
    if kind not in ("gl", "sl"):
        raise ValueError(f"unknown kind {kind!r}")
    if m < 1 or n < 0 or (kind == "sl" and n < 1):
        raise ValueError("need m >= 1 and n >= 1 (n = 0 only for gl)")
    N = m + n
    E = lambda i, j: SuperMatrix(m, n, {(i, j): ONE})
    lab = lambda i, j: f"E_{i + 1}_{j + 1}"
    even_off = [(i, j) for i in range(N) for j in range(N)
                if i != j and (i < m) == (j < m)]
    lower = [(i, j) for i in range(m, N) for j in range(m)]
    upper = [(i, j) for i in range(m) for j in range(m, N)]
    labels, elems = [], []
    for i, j in even_off:
        labels.append(lab(i, j))
        elems.append(E(i, j))
    if kind == "gl":
        for i in range(N):
            labels.append(lab(i, i))
            elems.append(E(i, i))
    elif (m, n) == (2, 1):
        labels.append("h")
        elems.append(E(0, 0) - E(1, 1))
        labels.append("z")
        elems.append(E(0, 0) + E(1, 1) + E(2, 2).scale(2))
    else:
        for i in range(m - 1):
            labels.append(f"H_{i + 1}")
            elems.append(E(i, i) - E(i + 1, i + 1))
        for s in range(m, N - 1):
            labels.append(f"H_{s + 1}")
            elems.append(E(s, s) - E(s + 1, s + 1))
        labels.append(f"Z_{m}_{m + 1}")
        elems.append(E(m - 1, m - 1) + E(m, m))
    for i, j in lower + upper:
        labels.append(lab(i, j))
        elems.append(E(i, j))
    if kind == "sl" and (m, n) == (2, 1):
        labels = list(SL21_LABELS)
    return _build(kind, m, n, labels, elems)


def neg_st_matrix(alg: LieSuperalgebra) -> Matrix:
    """The automorphism -st of the algebra in its basis."""
    cols = [alg.coords(neg_supertranspose(e)) for e in alg.elements]
    return Matrix.from_columns(cols, rows=alg.dim)


def is_automorphism(alg: LieSuperalgebra, T: Matrix) -> bool:
    """Even, bracket-preserving and invertible on the basis."""
    from .linalg import rank

    if T.shape != (alg.dim, alg.dim) or rank(T) != alg.dim:
        return False
    for i, j, v in T.nonzero():
        if alg.parities[i] != alg.parities[j]:
            return False
    cols = T.columns()
    for i in range(alg.dim):
        for j in range(alg.dim):
            lhs = T.apply_sparse(alg.structure[(i, j)])
            rhs = alg.bracket_vectors(cols[i], cols[j])
            if any(rhs[l] != lhs.get(l, ZERO) for l in range(alg.dim)):
                return False
    return True


def check_super_jacobi(alg: LieSuperalgebra, triples=None) -> bool:
    """(-1)^{|x||z|}[x,[y,z]] + cyclic = 0 on basis triples."""
    d = alg.dim
    p = alg.parities
    unit = lambda i: {i: ONE}

    def br(u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for l, c in alg.structure[(i, j)].items():
                    out[l] = out.get(l, ZERO) + a * b * c
        return {l: v for l, v in out.items() if v}

    if triples is None:
        triples = ((x, y, z) for x in range(d) for y in range(d) for z in range(d))
    for x, y, z in triples:
        tot: dict = {}
        for (a, b, c) in ((x, y, z), (y, z, x), (z, x, y)):
            s = -1 if p[a] * p[c] else 1
            for l, v in br(unit(a), br(unit(b), unit(c))).items():
                tot[l] = tot.get(l, ZERO) + s * v
        if any(tot.values()):
            return False
    return True
