"""Exact scalar arithmetic: sparse polynomials over Q in named formal parameters.

Every coefficient in the package is a Scalar.  A Scalar is a finite sum of
monomials in parameter names with Fraction coefficients; the constant
polynomial embeds plain rationals.  Arithmetic is exact, equality is
structural (zero terms are never stored, monomials are kept sorted), and
there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

# A monomial is a sorted tuple of (parameter name, positive exponent).
Mono = tuple


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    exps: dict = {}
    for name, e in m1:
        exps[name] = exps.get(name, 0) + e
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Scalar:
    """Element of Q[p1, p2, ...] for an open-ended set of parameter names."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms: dict mono -> Fraction, zeros dropped.  Trusted internal ctor;
        # use the classmethods below for public construction.
        self.terms = terms or {}

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Scalar":
        return cls({})

    @classmethod
    def one(cls) -> "Scalar":
        return cls({(): Fraction(1)})

    @classmethod
    def of(cls, value) -> "Scalar":
        """Coerce an int, Fraction, or Scalar."""
        if isinstance(value, Scalar):
            return value
        q = Fraction(value)
        return cls({(): q} if q else {})

    @classmethod
    def param(cls, name: str) -> "Scalar":
        return cls({((name, 1),): Fraction(1)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = Scalar.of(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar.of(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        other = Scalar.of(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Scalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        out = Scalar.one()
        for _ in range(n):
            out = out * self
        return out

    # -- predicates and comparisons ----------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_rational(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {()}:
            raise ValueError(f"not a constant: {self}")
        return self.terms[()]

    def parameters(self) -> set:
        return {name for m in self.terms for name, _ in m}

    # -- substitution -------------------------------------------------------

    def subs(self, env: dict) -> "Scalar":
        """Substitute parameters; env maps name -> int/Fraction/Scalar.
        Unlisted parameters are left alone."""
        out = Scalar.zero()
        for m, c in self.terms.items():
            term = Scalar({(): c})
            for name, e in m:
                if name in env:
                    term = term * (Scalar.of(env[name]) ** e)
                else:
                    term = term * (Scalar.param(name) ** e)
            out = out + term
        return out

    # -- rendering -----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return self.render()

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(e for _, e in m), m)):
            c = self.terms[m]
            vars_part = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in m
            )
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = vars_part
            else:
                body = f"{abs(c)}*{vars_part}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def render_compact(self) -> str:
        """Rendering suitable as a multiplicative coefficient: multi-term
        scalars are parenthesized, so `s.render_compact() + "*x#y"` reparses."""
        if len(self.terms) > 1:
            return f"({self.render()})"
        return self.render()


ZERO = Scalar.zero()
ONE = Scalar.one()
