"""Exact coefficient fields.

Two kinds of scalars are used throughout the package:

* :class:`fractions.Fraction` for the rationals,
* :class:`RatFun` for multivariate rational functions over the rationals in
  named parameters (``k``, ``k1``, ``k2``, or fresh symbols introduced to
  quantify over all base points).

A ``RatFun`` whose value is constant is always demoted to a ``Fraction``, so
the zero test ``not x`` is valid for every scalar.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence, Union

import flint

Scalar = Union[Fraction, "RatFun"]


class DenominatorVanishes(ZeroDivisionError):
    """A substitution hits a pole of a rational function."""


@lru_cache(maxsize=None)
def _context(names: tuple[str, ...]) -> flint.fmpq_mpoly_ctx:
    return flint.fmpq_mpoly_ctx.get(names, "deglex")


def _merge_names(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b:
        return a
    return a + tuple(x for x in b if x not in a)


def _lift(poly, names: tuple[str, ...]):
    """Re-express ``poly`` in the context over ``names`` (a superset)."""
    src = poly.context().names()
    if tuple(src) == names:
        return poly
    pos = [names.index(x) for x in src]
    data = {}
    for exps, c in poly.to_dict().items():
        e = [0] * len(names)
        for p, x in zip(pos, exps):
            e[p] = x
        data[tuple(e)] = c
    return _context(names).from_dict(data)


def _sorted_terms(poly):
    # graded lexicographic, largest monomial first
    return sorted(poly.to_dict().items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)


class RatFun:
    """A reduced quotient of polynomials with rational coefficients.

    The denominator is monic with respect to the graded lexicographic order
    and shares no common factor with the numerator.  Instances are immutable.
    """

    __slots__ = ("_num", "_den", "_names")

    def __init__(self, num, den=None, *, _reduced=False):
        names = tuple(num.context().names())
        if den is None:
            den = _context(names).from_dict({(0,) * len(names): 1})
        else:
            dn = tuple(den.context().names())
            if dn != names:
                names = _merge_names(names, dn)
                num, den = _lift(num, names), _lift(den, names)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            g = num.gcd(den)
            if not g.is_one():
                num, den = num / g, den / g
            lc = _sorted_terms(den)[0][1]
            if lc != 1:
                num, den = num / lc, den / lc
        self._num = num
        self._den = den
        self._names = names

    # -- construction -------------------------------------------------
    @classmethod
    def parameter(cls, name: str, names: Sequence[str] | None = None) -> "RatFun":
        names = tuple(names) if names else (name,)
        if name not in names:
            names = names + (name,)
        ctx = _context(names)
        return cls(ctx.gens()[names.index(name)], _reduced=True)

    @property
    def parameters(self) -> tuple[str, ...]:
        """Names actually occurring in numerator or denominator."""
        used = set()
        for p in (self._num, self._den):
            for exps in p.to_dict():
                used.update(n for n, e in zip(self._names, exps) if e)
        return tuple(n for n in self._names if n in used)

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    # -- arithmetic ---------------------------------------------------
    def _pair(self, other):
        """Numerator/denominator pairs of self and other over a common ring."""
        if isinstance(other, RatFun):
            if other._names == self._names:
                return self._num, self._den, other._num, other._den, self._names
            names = _merge_names(self._names, other._names)
            return (_lift(self._num, names), _lift(self._den, names),
                    _lift(other._num, names), _lift(other._den, names), names)
        if isinstance(other, (int, Fraction)):
            c = flint.fmpq(other.numerator, other.denominator)
            ctx = _context(self._names)
            one = ctx.from_dict({(0,) * len(self._names): 1})
            return self._num, self._den, one * c, one, self._names
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b, c, d, _ = pr
        if b == d:
            return _make(a + c, b)
        return _make(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self._num, self._den, _reduced=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b, c, d, _ = pr
        if b == d:
            return _make(a - c, b)
        return _make(a * d - c * b, b * d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b, c, d, _ = pr
        return _make(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b, c, d, _ = pr
        if c.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        return _make(a * d, b * c)

    def __rtruediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b, c, d, _ = pr
        return _make(c * b, d * a)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return 1 / (self ** (-e))
        return _make(self._num ** e, self._den ** e)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False  # constants are always demoted to Fraction
        if not isinstance(other, RatFun):
            return NotImplemented
        a, b, c, d, _ = self._pair(other)
        return a * d == b * c

    def __bool__(self):
        return True

    def __hash__(self):
        return hash(canonical_str(self))

    def __repr__(self):
        return f"RatFun({canonical_str(self)!r})"

    def __str__(self):
        return canonical_str(self)

    # -- evaluation ---------------------------------------------------
    def substitute(self, bindings: Mapping[str, object]) -> Scalar:
        vals = {n: _to_fmpq(v) for n, v in bindings.items() if n in self._names}
        if not vals:
            return self
        if len(vals) == len(self._names):
            args = [vals[n] for n in self._names]
            den = self._den(*args)
            if den == 0:
                raise DenominatorVanishes(
                    f"denominator {self._den} vanishes at {dict(bindings)}")
            q = self._num(*args) / den
            return Fraction(int(q.p), int(q.q))
        num = self._num.subs(vals)
        den = self._den.subs(vals)
        if den.is_zero():
            raise DenominatorVanishes(
                f"denominator {self._den} vanishes at {dict(bindings)}")
        return _make(num, den)


def _to_fmpq(v) -> flint.fmpq:
    v = Fraction(v)
    return flint.fmpq(v.numerator, v.denominator)


def _make(num, den) -> Scalar:
    """Build a reduced scalar, demoting constants to Fraction."""
    if num.is_zero():
        return Fraction(0)
    r = RatFun(num, den)
    if r._num.is_constant() and r._den.is_constant():
        q = r._num.leading_coefficient() / r._den.leading_coefficient()
        return Fraction(int(q.p), int(q.q))
    return r


def parameters(spec: str | Sequence[str]) -> tuple[RatFun, ...]:
    """Declare parameters in order; ``parameters("k1 k2")`` -> (k1, k2)."""
    names = tuple(spec.replace(",", " ").split()) if isinstance(spec, str) else tuple(spec)
    return tuple(RatFun.parameter(n, names) for n in names)


def as_scalar(x) -> Scalar:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"not a scalar: {x!r}")


def is_rational(x) -> bool:
    return not isinstance(x, RatFun)


def scalar_parameters(x) -> tuple[str, ...]:
    return x.parameters if isinstance(x, RatFun) else ()


def field_arithmetic(a, b, op: str) -> Scalar:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by the zero scalar")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def substitute(f, bindings: Mapping[str, object]) -> Scalar:
    """Evaluate ``f`` at the given parameter values.

    Raises :class:`DenominatorVanishes` if the binding is a pole.
    """
    if isinstance(f, RatFun):
        return f.substitute(bindings)
    return as_scalar(f)


# -- canonical strings ------------------------------------------------------

def _monomial_str(names, exps) -> str:
    parts = []
    for n, e in zip(names, exps):
        if e == 1:
            parts.append(n)
        elif e > 1:
            parts.append(f"{n}^{e}")
    return "*".join(parts)


def _int_poly_str(names, terms) -> str:
    out = []
    for i, (exps, c) in enumerate(terms):
        mono = _monomial_str(names, exps)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out) if out else "0"


def canonical_str(x) -> str:
    """The canonical text form used in JSON, e.g. ``(k^2+2*k+2)/(k+1)``.

    Numerator and denominator are expanded with coprime integer coefficients,
    monomials in graded lexicographic order (largest first).
    """
    if not isinstance(x, RatFun):
        return str(Fraction(x))
    names = x._names
    nt = [(e, Fraction(int(c.p), int(c.q))) for e, c in _sorted_terms(x._num)]
    dt = [(e, Fraction(int(c.p), int(c.q))) for e, c in _sorted_terms(x._den)]
    lcm = 1
    for _, c in nt + dt:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    nt = [(e, int(c * lcm)) for e, c in nt]
    dt = [(e, int(c * lcm)) for e, c in dt]
    g = 0
    for _, c in nt + dt:
        g = math.gcd(g, c)
    nt = [(e, c // g) for e, c in nt]
    dt = [(e, c // g) for e, c in dt]
    num = _int_poly_str(names, nt)
    if len(dt) == 1 and not any(dt[0][0]) and dt[0][1] == 1:
        return num
    if len(nt) > 1:
        num = f"({num})"
    den = _int_poly_str(names, dt)
    if len(dt) > 1 or (any(dt[0][0]) and dt[0][1] != 1):
        den = f"({den})"
    return f"{num}/{den}"


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, names: tuple[str, ...]):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse scalar {text!r} at offset {pos}")
            self.tokens.append(m.groups())
            pos = m.end()
        self.i = 0
        self.names = names

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, None)

    def take(self, op=None):
        tok = self.peek()
        if op is not None and tok[2] != op:
            raise ValueError(f"expected {op!r}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek()[2] in ("+", "-"):
            op = self.take()[2]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[2] in ("*", "/"):
            op = self.take()[2]
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs:
                    raise ZeroDivisionError("division by the zero scalar")
                val = val / rhs
        return val

    def unary(self):
        op = self.peek()[2]
        if op in ("-", "+"):
            self.take()
            v = self.unary()
            return -v if op == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[2] in ("^", "**"):
            self.take()
            sign = 1
            if self.peek()[2] == "-":
                self.take()
                sign = -1
            num = self.take()[0]
            if num is None:
                raise ValueError("exponent must be an integer literal")
            return base ** (sign * int(num))
        return base

    def atom(self):
        num, name, op = self.take()
        if num is not None:
            return Fraction(int(num))
        if name is not None:
            return RatFun.parameter(name, self.names)
        if op == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ValueError(f"unexpected token {op!r}")


def parse_scalar(text: str, names: Sequence[str] = ()) -> Scalar:
    """Parse an arithmetic expression in integers and parameter names.

    ``names`` fixes the parameter order of the result; unknown names are
    appended in order of appearance.
    """
    p = _Parser(str(text), tuple(names))
    val = p.expr()
    if p.i != len(p.tokens):
        raise ValueError(f"trailing input in scalar {text!r}")
    return as_scalar(val)
