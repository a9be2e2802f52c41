"""An LSSA on sl(m+1|m) from an evaluation map on U = Pi Lambda^2 W + Pi Lambda^2 W.

W = C^{m+1|m}.  The even part of U is spanned by the (parity shifted) vectors
e_i xi_s of both copies; the base point is

    a = sum_{i=1}^{m} (e'_{i+1} xi'_i + e''_i xi''_i).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .core import (Cocycle, NotBijective, ProductTable, check_lssa, evaluation_map,
                   lssa_from_cocycle, recovers_bracket, supertraces_vanish)
from .linalg import Matrix, ONE, ZERO, kernel, rank
from .reps import Representation, direct_sum, exterior_square, parity_shift, standard_rep
from .superlie import LieSuperalgebra, SuperMatrix, make_algebra, supertrace

DEFAULT_MAX_M = 6


@dataclass(frozen=True)
class SlmmInstance:
    m: int
    algebra: LieSuperalgebra
    module: Representation
    base_point: tuple
    cocycle: Cocycle
    table: ProductTable | None

    @property
    def rank(self) -> int:
        return rank(self.cocycle.q)


def build_module(alg: LieSuperalgebra) -> Representation:
    wedge = exterior_square(standard_rep(alg))
    pw = parity_shift(wedge)
    return direct_sum(pw, pw, tags=["'", "''"])


def base_point(m: int, module: Representation) -> list:
    a = [ZERO] * module.dim
    for i in range(1, m + 1):
        a[module.labels.index(f"e{i + 1}^xi{i}'")] += ONE
        a[module.labels.index(f"e{i}^xi{i}''")] += ONE
    return a


def _check_m(m: int, max_m: int) -> None:
    if m < 1:
        raise ValueError("m must be positive")
    if m > max_m:
        raise ValueError(f"m = {m} exceeds the ceiling {max_m}; raise it explicitly")


def build_instance(m: int, with_table: bool = True, max_m: int = DEFAULT_MAX_M) -> SlmmInstance:
    _check_m(m, max_m)
    alg = make_algebra("sl", m + 1, m)
    u = build_module(alg)
    a = base_point(m, u)
    c = evaluation_map(u, a)
    table = lssa_from_cocycle(c) if with_table else None
    return SlmmInstance(m, alg, u, tuple(a), c, table)


@dataclass(frozen=True)
class KernelCheck:
    m: int
    kernel_dim: int
    kernel_is_scalar_type: bool
    supertrace: object
    expected_supertrace: int
    sl_kernel_dim: int

    @property
    def ok(self) -> bool:
        return (self.kernel_dim == 1 and self.kernel_is_scalar_type
                and self.supertrace == self.expected_supertrace and self.sl_kernel_dim == 0)


def kernel_system_check(m: int, max_m: int = DEFAULT_MAX_M) -> KernelCheck:
    """ker ev_a on gl(m+1|m) is spanned by diag(I, -I); its supertrace is 2m+1."""
    _check_m(m, max_m)
    gl = make_algebra("gl", m + 1, m)
    u = build_module(gl)
    q = evaluation_map(u, base_point(m, u)).q
    ker = kernel(q)
    scalar_type = False
    st = None
    if len(ker) == 1:
        x = gl.element(ker[0])
        c = x[0, 0]
        target = SuperMatrix(m + 1, m, {(t, t): (c if t <= m else -c) for t in range(2 * m + 1)})
        scalar_type = bool(c) and x == target
        if scalar_type:
            st = supertrace(x.scale(ONE / c))
    sl_inst = build_instance(m, with_table=False, max_m=max_m)
    sl_kernel = sl_inst.algebra.dim - sl_inst.rank
    return KernelCheck(m, len(ker), scalar_type, st, 2 * m + 1, sl_kernel)


def expansion_coefficient(m: int, x: SuperMatrix, i: int, s: int) -> object:
    """The e'_i xi'_s coordinate of ev_a(X) predicted by the closed formula:
    a_{i,s+1} + [i >= 2] d_{s,i-1}, with A the even (m+1)-block and D the m-block."""
    a = x[i - 1, s]  # A_{i,s+1}
    d = x[m + s, m + i - 1] if i >= 2 else ZERO  # D_{s,i-1}
    return a + d


def check_expansion(m: int, samples: int = 20, seed: int = 0) -> bool:
    """Compare the closed coefficient formula with ev_a(X) on random X in gl(m+1|m)."""
    gl = make_algebra("gl", m + 1, m)
    u = build_module(gl)
    a = base_point(m, u)
    rng = random.Random(seed)
    for _ in range(samples):
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(gl.dim)]
        x = gl.element(coeffs)
        img = u.element_action(coeffs).apply(a)
        for i in range(1, m + 2):
            for s in range(1, m + 1):
                if img[u.labels.index(f"e{i}^xi{s}'")] != expansion_coefficient(m, x, i, s):
                    return False
    return True


@dataclass(frozen=True)
class SlmmReport:
    m: int
    superdim_module: tuple[int, int]
    superdim_algebra: tuple[int, int]
    rank: int
    lssa: bool
    bracket: bool
    supertraces: bool
    kernel: KernelCheck

    @property
    def ok(self) -> bool:
        return (self.superdim_module == self.superdim_algebra and self.rank == sum(self.superdim_algebra)
                and self.lssa and self.bracket and self.supertraces and self.kernel.ok)


def verify(m: int, max_m: int = DEFAULT_MAX_M) -> tuple[SlmmReport, SlmmInstance]:
    inst = build_instance(m, max_m=max_m)
    t = inst.table
    rep = SlmmReport(m, inst.module.superdim, inst.algebra.superdim, inst.rank,
                     check_lssa(t), recovers_bracket(t), supertraces_vanish(t),
                     kernel_system_check(m, max_m))
    return rep, inst
