"""Exact dense-interface linear algebra over any scalar field.

Matrices keep their rows as sparse dictionaries ``{column: value}``; almost
every matrix met in this package (module actions, evaluation maps, regular
representations) is very sparse, and the elimination routines below only
ever touch nonzero entries.  Pivoting takes the first nonzero entry in column
order, which makes every result deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import RatFun, Scalar, as_scalar, scalar_parameters

ZERO = Fraction(0)
ONE = Fraction(1)


class Inconsistent(ValueError):
    """The linear system has no solution."""


class NotInvertible(ValueError):
    pass


def _clean(d: dict) -> dict:
    return {j: v for j, v in d.items() if v}


class Matrix:
    """An immutable ``rows x cols`` matrix of scalars."""

    __slots__ = ("rows", "cols", "_r")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self._r = tuple({} for _ in range(rows))
        else:
            data = list(data)
            if len(data) != rows:
                raise ValueError("row count mismatch")
            out = []
            for row in data:
                if isinstance(row, dict):
                    out.append({j: as_scalar(v) for j, v in row.items() if v})
                else:
                    row = list(row)
                    if len(row) != cols:
                        raise ValueError("column count mismatch")
                    out.append({j: as_scalar(v) for j, v in enumerate(row) if v})
            self._r = tuple(out)

    @classmethod
    def _wrap(cls, rows, cols, dict_rows) -> "Matrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m._r = rows, cols, tuple(dict_rows)
        return m

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(n, n, ({i: ONE} for i in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls(n, n, ({i: v} for i, v in enumerate(values)))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        columns = list(columns)
        if rows is None:
            rows = len(columns[0]) if columns else 0
        out = [dict() for _ in range(rows)]
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if v:
                    out[i][j] = as_scalar(v)
        return cls._wrap(rows, len(columns), out)

    # -- access -------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self._r[i].get(j, ZERO)

    def row_dict(self, i: int) -> dict:
        return self._r[i]

    def row(self, i: int) -> list:
        d = self._r[i]
        return [d.get(j, ZERO) for j in range(self.cols)]

    def col(self, j: int) -> list:
        return [r.get(j, ZERO) for r in self._r]

    def col_dict(self, j: int) -> dict:
        return {i: r[j] for i, r in enumerate(self._r) if j in r}

    def to_lists(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> list[list]:
        return [self.col(j) for j in range(self.cols)]

    def nonzero(self) -> Iterable[tuple[int, int, Scalar]]:
        for i, r in enumerate(self._r):
            for j, v in r.items():
                yield i, j, v

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def nnz(self) -> int:
        return sum(len(r) for r in self._r)

    def is_zero(self) -> bool:
        return not any(self._r)

    def is_rational(self) -> bool:
        return not any(isinstance(v, RatFun) for r in self._r for v in r.values())

    def parameters(self) -> tuple[str, ...]:
        names: list[str] = []
        for r in self._r:
            for v in r.values():
                for n in scalar_parameters(v):
                    if n not in names:
                        names.append(n)
        return tuple(names)

    # -- arithmetic ---------------------------------------------------
    def _check_same(self, other):
        if not isinstance(other, Matrix) or other.shape != self.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {getattr(other, 'shape', None)}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        out = []
        for a, b in zip(self._r, other._r):
            d = dict(a)
            for j, v in b.items():
                d[j] = d.get(j, ZERO) + v
            out.append(_clean(d))
        return Matrix._wrap(self.rows, self.cols, out)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(self.rows, self.cols, ({j: -v for j, v in r.items()} for r in self._r))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        if not c:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix._wrap(self.rows, self.cols, ({j: v * c for j, v in r.items()} for r in self._r))

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            orows = other._r
            out = []
            for r in self._r:
                d: dict = {}
                for k, a in r.items():
                    for j, b in orows[k].items():
                        d[j] = d.get(j, ZERO) + a * b
                out.append(_clean(d))
            return Matrix._wrap(self.rows, other.cols, out)
        return self.apply(other)

    def apply(self, vec) -> list:
        """Matrix times a column vector (a sequence of scalars)."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for r in self._r:
            s = ZERO
            for j, a in r.items():
                x = vec[j]
                if x:
                    s = s + a * x
            out.append(s)
        return out

    def apply_sparse(self, vec: dict) -> dict:
        out: dict = {}
        for i, r in enumerate(self._r):
            s = ZERO
            for j, x in vec.items():
                a = r.get(j)
                if a:
                    s = s + a * x
            if s:
                out[i] = s
        return out

    def transpose(self) -> "Matrix":
        out = [dict() for _ in range(self.cols)]
        for i, r in enumerate(self._r):
            for j, v in r.items():
                out[j][i] = v
        return Matrix._wrap(self.cols, self.rows, out)

    T = property(transpose)

    def map(self, fn) -> "Matrix":
        return Matrix(self.rows, self.cols, ({j: fn(v) for j, v in r.items()} for r in self._r))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        cpos = {c: k for k, c in enumerate(cols)}
        out = []
        for i in rows:
            out.append({cpos[j]: v for j, v in self._r[i].items() if j in cpos})
        return Matrix._wrap(len(rows), len(cols), out)

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        out = []
        for a, b in zip(self._r, other._r):
            d = dict(a)
            d.update({j + self.cols: v for j, v in b.items()})
            out.append(d)
        return Matrix._wrap(self.rows, self.cols + other.cols, out)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return Matrix._wrap(self.rows + other.rows, self.cols, self._r + other._r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self._r, other._r))

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(sorted((j, str(v)) for j, v in r.items())) for r in self._r)))

    def __repr__(self):
        if self.rows * self.cols <= 64:
            body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
            return f"Matrix({self.rows}x{self.cols}: [{body}])"
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = []
    c0 = 0
    for b in blocks:
        for r in b._r:
            out.append({j + c0: v for j, v in r.items()})
        c0 += b.cols
    return Matrix._wrap(rows, cols, out)


# -- elimination ------------------------------------------------------------

def _rref_rows(rows: list[dict], ncols: int, reduced: bool = True, stop_col: int | None = None):
    """In-place row reduction of sparse rows; returns the pivot columns.

    Only the first ``stop_col`` columns are eligible as pivots.
    """
    limit = ncols if stop_col is None else stop_col
    pivots: list[int] = []
    prow = 0
    nrows = len(rows)
    for col in range(limit):
        if prow >= nrows:
            break
        sel = None
        for i in range(prow, nrows):
            if col in rows[i]:
                sel = i
                break
        if sel is None:
            continue
        rows[prow], rows[sel] = rows[sel], rows[prow]
        piv = rows[prow]
        p = piv[col]
        if p != ONE:
            inv = ONE / p
            piv = {j: v * inv for j, v in piv.items()}
            rows[prow] = piv
        targets = range(nrows) if reduced else range(prow + 1, nrows)
        for i in targets:
            if i == prow:
                continue
            r = rows[i]
            f = r.get(col)
            if not f:
                continue
            for j, v in piv.items():
                nv = r.get(j, ZERO) - f * v
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
        pivots.append(col)
        prow += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows = [dict(r) for r in m._r]
    piv = _rref_rows(rows, m.cols)
    return Matrix._wrap(m.rows, m.cols, rows), piv


def rank(m: Matrix) -> int:
    rows = [dict(r) for r in m._r if r]
    if len(rows) > m.cols:
        # eliminate on the transpose: fewer rows to scan per pivot
        rows = [dict(r) for r in m.transpose()._r if r]
        return len(_rref_rows(rows, m.rows, reduced=False))
    return len(_rref_rows(rows, m.cols, reduced=False))


def kernel(m: Matrix) -> list[list]:
    """A basis of the right null space, one vector per free column."""
    rows = [dict(r) for r in m._r if r]
    piv = _rref_rows(rows, m.cols)
    pivset = set(piv)
    basis = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, pc in enumerate(piv):
            c = rows[r].get(f)
            if c:
                v[pc] = -c
        basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence) -> list:
    """One solution of ``m x = b``; raises :class:`Inconsistent` if none exists."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    rows = []
    for r, bi in zip(m._r, b):
        d = dict(r)
        bi = as_scalar(bi)
        if bi:
            d[m.cols] = bi
        rows.append(d)
    piv = _rref_rows(rows, m.cols + 1, stop_col=m.cols)
    for r in rows[len(piv):]:
        if r:
            raise Inconsistent("linear system has no solution")
    x = [ZERO] * m.cols
    for r, pc in enumerate(piv):
        x[pc] = rows[r].get(m.cols, ZERO)
    return x


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise NotInvertible("matrix is not square")
    n = m.rows
    rows = [dict(r) for r in m._r]
    for i in range(n):
        rows[i][n + i] = ONE
    piv = _rref_rows(rows, 2 * n, stop_col=n)
    if len(piv) < n:
        raise NotInvertible(f"matrix has rank {len(piv)} < {n}")
    return Matrix._wrap(n, n, ({j - n: v for j, v in r.items() if j >= n} for r in rows))


def fresh_names(count: int, avoid: Iterable[str] = (), stem: str = "t") -> list[str]:
    avoid = set(avoid)
    out = []
    i = 1
    while len(out) < count:
        name = f"{stem}{i}_"
        if name not in avoid:
            out.append(name)
        i += 1
    return out


def generic_combination(family: Sequence[Matrix], names: Sequence[str] | None = None) -> Matrix:
    """``B0 + sum t_i B_i`` with the ``t_i`` fresh parameters."""
    base, rest = family[0], list(family[1:])
    if names is None:
        avoid = set()
        for b in family:
            avoid.update(b.parameters())
        names = fresh_names(len(rest), avoid)
    ts = [RatFun.parameter(n, names) for n in names]
    total = base
    for t, b in zip(ts, rest):
        total = total + b.scale(t)
    return total


def max_rank_over_affine_family(family: Sequence[Matrix]) -> int:
    """Maximal rank of ``B0 + sum t_i B_i`` as the ``t_i`` range over the field.

    Computed as the rank over the function field in fresh symbols ``t_i``;
    any specialization can only lower the rank, and over an infinite field
    the generic rank is attained.
    """
    if not family:
        raise ValueError("empty family")
    return rank(generic_combination(family))


def exp_nilpotent(m: Matrix, limit: int | None = None) -> Matrix:
    """exp(m) for nilpotent m, as the terminating power series."""
    n = m.rows
    total = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, (limit or n) + 1):
        term = (term @ m).scale(Fraction(1, k))
        if term.is_zero():
            return total
        total = total + term
    raise ValueError("matrix is not nilpotent")
