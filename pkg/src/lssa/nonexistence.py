"""Obstructions to bijective evaluation maps on the candidate sl(m|1)-modules.

P_m = m C^{m|1} + m Pi(tr), Q_3 = 2 C^{3|1} + Pi Lambda^2 C^{3|1} and their duals all
have superdimension m^2 | 2m.  For each, the even base point is made fully
symbolic and a designated set of odd columns of ev_a is shown to be rank
deficient, so no a in the even part gives a bijective ev_a.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Matrix, ONE, ZERO, max_rank_over_affine_family
from .reps import (Representation, direct_sum, dual_rep, exterior_square, parity_shift,
                   standard_rep, trivial_rep)
from .superlie import make_algebra


class CertificationFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class WitnessReport:
    module: str
    superdim: tuple[int, int]
    elements: tuple[str, ...]
    certified_rank: int
    required_rank: int
    method: str

    @property
    def certified(self) -> bool:
        return self.certified_rank < self.required_rank

    def as_dict(self) -> dict:
        return {"module": self.module, "superdim": f"{self.superdim[0]}|{self.superdim[1]}",
                "elements": list(self.elements), "certified_rank": self.certified_rank,
                "required_rank": self.required_rank, "method": self.method,
                "certified": self.certified}


def _check_m(m: int) -> None:
    if m < 3:
        raise ValueError("the candidate modules are defined for m >= 3")


def odd_trivial(alg) -> Representation:
    return parity_shift(trivial_rep(alg, "t"))


def build_P(m: int) -> Representation:
    _check_m(m)
    alg = make_algebra("sl", m, 1)
    std, tr = standard_rep(alg), odd_trivial(alg)
    parts = [std] * m + [tr] * m
    return direct_sum(*parts, tags=[f"({i + 1})" for i in range(2 * m)])


def build_P_dual(m: int) -> Representation:
    return dual_rep(build_P(m))


def build_Q3() -> Representation:
    alg = make_algebra("sl", 3, 1)
    std = standard_rep(alg)
    return direct_sum(std, std, parity_shift(exterior_square(std)), tags=["(1)", "(2)", "(3)"])


def build_Q3_dual() -> Representation:
    return dual_rep(build_Q3())


def restricted_to_even(r: Representation, x: str) -> Matrix:
    """f(x) restricted to the even part (columns) of the module."""
    p = r.superdim[0]
    return r.act(x).submatrix(range(r.dim), range(p))


def generic_columns_rank(r: Representation, elements: list[str]) -> int:
    """max over even a of rank{ev_a(x) : x in elements}."""
    p = r.superdim[0]
    family = [Matrix.zeros(r.dim, len(elements))]
    mats = [r.act(x) for x in elements]
    for i in range(p):
        family.append(Matrix.from_columns([m.col_dict(i) for m in mats], rows=r.dim))
    return max_rank_over_affine_family(family)


def _unit(m: int, i: int, j: int) -> str:
    return f"E_{i}_{j}"


def certify_no_bijective_ev(r: Representation, kind: str, name: str | None = None,
                            elements: list[str] | None = None) -> WitnessReport:
    """kind: 'P' (E_{1,m+1} kills the even part), 'P*' (E_{m+1,1} does),
    'Q' (three odd columns E_{i4} have generic rank <= 2), 'Q*' (E_{4i})."""
    m = r.algebra.m
    if kind in ("P", "P*"):
        x = elements[0] if elements else (_unit(m, 1, m + 1) if kind == "P" else _unit(m, m + 1, 1))
        rk = 0 if restricted_to_even(r, x).is_zero() else generic_columns_rank(r, [x])
        rep = WitnessReport(name or kind, r.superdim, (x,), rk, 1, "annihilator")
    elif kind in ("Q", "Q*"):
        if elements is None:
            elements = ([_unit(m, i, 4) for i in (1, 2, 3)] if kind == "Q"
                        else [_unit(m, 4, i) for i in (1, 2, 3)])
        rk = generic_columns_rank(r, elements)
        rep = WitnessReport(name or kind, r.superdim, tuple(elements), rk, len(elements),
                            "generic rank")
    else:
        raise ValueError(f"unknown witness kind {kind!r}")
    if not rep.certified:
        raise CertificationFailed(f"{rep.module}: rank {rep.certified_rank} "
                                  f"is not below {rep.required_rank}")
    return rep


def certify_all(m: int) -> list[WitnessReport]:
    """P_m, P_m*, and (for m = 3) Q_3, Q_3*."""
    out = [certify_no_bijective_ev(build_P(m), "P", f"P_{m}"),
           certify_no_bijective_ev(build_P_dual(m), "P*", f"P_{m}*")]
    if m == 3:
        out.append(certify_no_bijective_ev(build_Q3(), "Q", "Q_3"))
        out.append(certify_no_bijective_ev(build_Q3_dual(), "Q*", "Q_3*"))
    return out
