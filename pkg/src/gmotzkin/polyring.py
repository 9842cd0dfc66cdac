"""Exact arithmetic for path-weight bookkeeping.

Weights of G-Motzkin paths live in the polynomial ring Z[a, b, c]:
horizontal steps contribute a factor ``a``, vertical drops a factor ``b``
and diagonal down-steps a factor ``c`` (up-steps weigh 1).  Everything in
this module is exact integer arithmetic:

  Monomial    -- an exponent triple (ea, eb, ec) standing for a^ea b^eb c^ec.
  Polynomial  -- a finite map from Monomial to a nonzero int coefficient.
  PowerSeries -- a truncated series in a formal variable x whose
                 coefficients are Polynomials.

Monomials are totally ordered lexicographically on (ea, eb, ec),
descending.  All textual and JSON output lists terms in that order, which
makes output byte-stable.  The JSON form of a polynomial is a list of term
records ``{"ea": int, "eb": int, "ec": int, "coeff": "<decimal string>"}``;
the coefficient travels as a decimal string so arbitrarily large values
survive JSON readers with fixed-width integers.

The series variable x is structural (the position in the coefficient
list), not a fourth ring variable.  Series arithmetic never reads or
writes beyond the truncation order.  Unique series roots of contractive
equations S = update(S) are computed by ``fixed_point``, which iterates
from the zero series and verifies the equation afterwards.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, int, int]

_VAR_INDEX = {"a": 0, "b": 1, "c": 2}


class OrderMismatchError(ValueError):
    """Two series of different truncation orders were combined."""


class NonUnitError(ValueError):
    """Series inversion was asked for a series whose constant term is not a unit."""


class DivergenceError(ArithmeticError):
    """Fixed-point iteration failed to stabilize; the update map is not contractive."""


class Polynomial:
    """An element of Z[a, b, c] in canonical form (no zero coefficients)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self._terms[mono] = coeff

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def const(cls, value: int) -> "Polynomial":
        return cls({(0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        """The polynomial a, b or c."""
        if name not in _VAR_INDEX:
            raise ValueError(f"unknown variable {name!r}, expected one of a, b, c")
        exps = [0, 0, 0]
        exps[_VAR_INDEX[name]] = 1
        return cls({(exps[0], exps[1], exps[2]): 1})

    @classmethod
    def monomial(cls, ea: int, eb: int, ec: int, coeff: int = 1) -> "Polynomial":
        if min(ea, eb, ec) < 0:
            raise ValueError("exponents must be nonnegative")
        return cls({(ea, eb, ec): coeff})

    # -- inspection --------------------------------------------------------

    def terms(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order: (ea, eb, ec) lexicographic, descending."""
        for mono in sorted(self._terms, reverse=True):
            yield mono, self._terms[mono]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == Polynomial.const(other)._terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]  # mutable mapping inside

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = Polynomial.__new__(Polynomial)
        res._terms = out
        return res

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            s = out.get(mono, 0) - coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = Polynomial.__new__(Polynomial)
        res._terms = out
        return res

    def __neg__(self) -> "Polynomial":
        res = Polynomial.__new__(Polynomial)
        res._terms = {mono: -coeff for mono, coeff in self._terms.items()}
        return res

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.scaled(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, int] = {}
        for (a1, b1, c1), k1 in self._terms.items():
            for (a2, b2, c2), k2 in other._terms.items():
                mono = (a1 + a2, b1 + b2, c1 + c2)
                s = out.get(mono, 0) + k1 * k2
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        res = Polynomial.__new__(Polynomial)
        res._terms = out
        return res

    def __rmul__(self, other: int) -> "Polynomial":
        if isinstance(other, int):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, k: int) -> "Polynomial":
        if k == 0:
            return Polynomial()
        res = Polynomial.__new__(Polynomial)
        res._terms = {mono: coeff * k for mono, coeff in self._terms.items()}
        return res

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not defined in Z[a,b,c]")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def div_exact(self, k: int) -> "Polynomial":
        """Divide every coefficient by k, requiring exact divisibility."""
        if k == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        out = {}
        for mono, coeff in self._terms.items():
            q, r = divmod(coeff, k)
            if r:
                raise ValueError(f"coefficient {coeff} of {mono} not divisible by {k}")
            out[mono] = q
        res = Polynomial.__new__(Polynomial)
        res._terms = out
        return res

    # -- evaluation and substitution ----------------------------------------

    def eval(self, va: int, vb: int, vc: int) -> int:
        """Exact value at integer point (a, b, c); negatives allowed."""
        total = 0
        for (ea, eb, ec), coeff in self._terms.items():
            total += coeff * va**ea * vb**eb * vc**ec
        return total

    def substitute(self, var: str, replacement: "Polynomial") -> "Polynomial":
        """Ring homomorphism sending ``var`` to ``replacement``, fixing the others."""
        idx = _VAR_INDEX.get(var)
        if idx is None:
            raise ValueError(f"unknown variable {var!r}, expected one of a, b, c")
        powers: list[Polynomial] = [Polynomial.const(1)]
        result = Polynomial.zero()
        for mono, coeff in self._terms.items():
            e = mono[idx]
            while len(powers) <= e:
                powers.append(powers[-1] * replacement)
            rest = list(mono)
            rest[idx] = 0
            result = result + Polynomial.monomial(rest[0], rest[1], rest[2], coeff) * powers[e]
        return result

    # -- input/output --------------------------------------------------------

    def to_json_obj(self) -> list[dict[str, object]]:
        return [
            {"ea": ea, "eb": eb, "ec": ec, "coeff": str(coeff)}
            for (ea, eb, ec), coeff in self.terms()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping[str, object]]) -> "Polynomial":
        terms: dict[Monomial, int] = {}
        for rec in obj:
            mono = (int(rec["ea"]), int(rec["eb"]), int(rec["ec"]))  # type: ignore[arg-type]
            terms[mono] = int(str(rec["coeff"]))
        return cls(terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (ea, eb, ec), coeff in self.terms():
            factors = []
            for name, e in (("a", ea), ("b", eb), ("c", ec)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


ZERO = Polynomial.zero()
ONE = Polynomial.const(1)
VAR_A = Polynomial.variable("a")
VAR_B = Polynomial.variable("b")
VAR_C = Polynomial.variable("c")


class PowerSeries:
    """A series sum(p_n x^n, n = 0..order) with Polynomial coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[Polynomial]):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Polynomial, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> Polynomial:
        return self._coeffs[n]

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([ZERO] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([ONE] + [ZERO] * order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        if order == 0:
            return cls([ZERO])
        return cls([ZERO, ONE] + [ZERO] * (order - 1))

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial], order: int) -> "PowerSeries":
        """Low-order coefficients from ``polys``, zero-padded or truncated to ``order``."""
        coeffs = list(polys[: order + 1])
        coeffs += [ZERO] * (order + 1 - len(coeffs))
        return cls(coeffs)

    @classmethod
    def from_ints(cls, values: Sequence[int], order: int) -> "PowerSeries":
        return cls.from_polys([Polynomial.const(v) for v in values], order)

    # -- structure ---------------------------------------------------------

    def truncated(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot truncate upwards; use extended()")
        return PowerSeries(self._coeffs[: order + 1])

    def extended(self, order: int) -> "PowerSeries":
        if order < self.order:
            raise ValueError("cannot extend downwards; use truncated()")
        return PowerSeries(self._coeffs + (ZERO,) * (order - self.order))

    def shift_up(self) -> "PowerSeries":
        """Multiply by x, growing the order by one."""
        return PowerSeries((ZERO,) + self._coeffs)

    def shift_down(self) -> "PowerSeries":
        """Divide by x; the constant coefficient must be zero."""
        if self._coeffs[0]:
            raise ValueError("cannot divide by x: nonzero constant term")
        if self.order == 0:
            raise ValueError("cannot divide by x: order 0")
        return PowerSeries(self._coeffs[1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None  # type: ignore[assignment]

    def _require_same_order(self, other: "PowerSeries") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._require_same_order(other)
        return PowerSeries([p + q for p, q in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._require_same_order(other)
        return PowerSeries([p - q for p, q in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-p for p in self._coeffs])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._require_same_order(other)
        n = self.order
        out = [ZERO] * (n + 1)
        for i, p in enumerate(self._coeffs):
            if not p:
                continue
            for j in range(n + 1 - i):
                q = other._coeffs[j]
                if q:
                    out[i + j] = out[i + j] + p * q
        return PowerSeries(out)

    def scaled(self, factor: Polynomial | int) -> "PowerSeries":
        if isinstance(factor, int):
            factor = Polynomial.const(factor)
        return PowerSeries([p * factor for p in self._coeffs])

    def invert(self) -> "PowerSeries":
        """Multiplicative inverse; the constant term must be 1 or -1."""
        c0 = self._coeffs[0]
        if c0 != ONE and c0 != Polynomial.const(-1):
            raise NonUnitError(f"constant term {c0} is not a unit in Z[a,b,c]")
        inv: list[Polynomial] = [c0]  # 1/1 = 1 and 1/(-1) = -1
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self._coeffs[k]:
                    acc = acc + self._coeffs[k] * inv[n - k]
            inv.append(-(c0 * acc))
        return PowerSeries(inv)

    # -- output --------------------------------------------------------------

    def evaluate(self, va: int, vb: int, vc: int) -> list[int]:
        """Coefficientwise integer evaluation at (a, b, c)."""
        return [p.eval(va, vb, vc) for p in self._coeffs]

    def __repr__(self) -> str:
        inner = ", ".join(str(p) for p in self._coeffs)
        return f"PowerSeries([{inner}])"


def fixed_point(update: Callable[[PowerSeries], PowerSeries], order: int) -> PowerSeries:
    """Solve S = update(S) for the unique truncated series root.

    ``update`` must be contractive in the x-adic sense: whenever two series
    agree through x^k, their images agree through x^(k+1).  Every defining
    equation used in this package has an explicit x factor on its
    self-referential term, which guarantees this.

    Iterates order+1 times starting from the zero series, growing the
    working truncation with the iteration count (coefficients below the
    iteration number are already exact, so early rounds stay cheap), then
    verifies S == update(S) at full order and raises DivergenceError if the
    equation does not hold.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    s = PowerSeries.zero(0)
    for k in range(order + 1):
        s = update(s.extended(k))
        if s.order != k:
            raise ValueError("update changed the truncation order")
    if s != update(s):
        raise DivergenceError("iteration did not reach a fixed point; update is not contractive")
    return s
