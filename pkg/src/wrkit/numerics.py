"""Exact arithmetic substrate: rationals and integer-coefficient polynomials.

Every scalar quantity in this package (activities, occupancy fractions,
certificate multipliers) is a ``fractions.Fraction``: arbitrary precision,
always stored reduced with a positive denominator, and serialised as
``p/q`` (or just ``p`` when the denominator is 1) -- exactly what
``str(Fraction)`` produces.  No floating point enters any computation
built on this module.

Partition polynomials come in two shapes:

  IntPolynomial        dense coefficient tuple, index k = coefficient of
                       the k-th power of the activity.  These polynomials
                       are dense of degree at most n, so a vector is the
                       right carrier.
  BivariatePolynomial  sparse map (i, j) -> coefficient of the monomial
                       with the first activity to the i and the second to
                       the j.  Two-activity polynomials are triangular
                       (i + j <= n) and sparse, so a dict is used.

Coefficients are plain Python ints (arbitrary precision); a partition
polynomial of a 20-vertex graph has coefficients of order 3**20 and must
not overflow.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import ParseError, UsageError

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or integer text into an exact Fraction.

    Only the documented exact format is accepted; decimal notation is
    rejected so imprecise inputs cannot slip in silently.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational in p/q form: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator: {text!r}") from exc


def format_rational(x: Fraction | int) -> str:
    """Serialise a rational as ``p/q`` (or ``p`` when the denominator is 1)."""
    return str(Fraction(x))


class IntPolynomial:
    """Immutable dense univariate polynomial with integer coefficients.

    The coefficient tuple never has a trailing zero; the zero polynomial
    is the empty tuple.  Instances support ``+``, ``-``, ``*`` and ``**``
    (ints are coerced to constants), formal differentiation, and exact
    Horner evaluation at rational points.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial((other,))
        return NotImplemented

    def __add__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if not isinstance(k, int) or k < 0:
            raise UsageError("polynomial exponent must be a nonnegative integer")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by the k-th power of the variable."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        """Formal derivative; drops the degree by exactly one when nonconstant."""
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def eval(self, x: Fraction | int) -> Fraction | int:
        """Exact value at x by Horner's scheme (Fraction in, Fraction out)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = eval

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)!r})"

    def to_text(self) -> str:
        """Comma-separated coefficient list, lowest degree first (``0`` for zero)."""
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in self.coeffs)

    @classmethod
    def from_text(cls, text: str) -> "IntPolynomial":
        try:
            return cls(int(part) for part in text.strip().split(","))
        except ValueError as exc:
            raise ParseError(f"bad coefficient list: {text!r}") from exc

    def pretty(self, var: str = "lam") -> str:
        """Human-readable ASCII form, e.g. ``1 + 4*lam + 2*lam^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"


def binomial_power(k: int) -> IntPolynomial:
    """The k-th power of (1 + activity), with exact binomial coefficients."""
    if k < 0:
        raise UsageError("binomial_power requires a nonnegative exponent")
    return IntPolynomial(math.comb(k, i) for i in range(k + 1))


class BivariatePolynomial:
    """Immutable sparse polynomial in two activities with integer coefficients.

    Stored as a map from exponent pairs (i, j) to nonzero coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] = ()):
        cleaned = {k: v for k, v in dict(coeffs).items() if v != 0}
        object.__setattr__(self, "coeffs", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePolynomial is immutable")

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _coerce(other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial({(0, 0): other})
        return NotImplemented

    def __add__(self, other) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __mul__(self, other) -> "BivariatePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def eval(self, x: Fraction | int, y: Fraction | int) -> Fraction | int:
        """Exact value at the point (x, y)."""
        acc = 0
        for (i, j), c in self.coeffs.items():
            acc += c * x**i * y**j
        return acc

    __call__ = eval

    def partial(self, variable_index: int) -> "BivariatePolynomial":
        """Formal partial derivative; variable_index is 1 or 2."""
        if variable_index not in (1, 2):
            raise UsageError(f"variable index must be 1 or 2, got {variable_index}")
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self.coeffs.items():
            if variable_index == 1 and i > 0:
                out[(i - 1, j)] = c * i
            elif variable_index == 2 and j > 0:
                out[(i, j - 1)] = c * j
        return BivariatePolynomial(out)

    def diagonal(self) -> IntPolynomial:
        """Collapse both variables to a single activity (set them equal)."""
        size = max((i + j for i, j in self.coeffs), default=-1) + 1
        out = [0] * size
        for (i, j), c in self.coeffs.items():
            out[i + j] += c
        return IntPolynomial(out)

    def swap_variables(self) -> "BivariatePolynomial":
        """Exchange the two activities (colour-swap)."""
        return BivariatePolynomial({(j, i): c for (i, j), c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        items = sorted(self.coeffs.items())
        return f"BivariatePolynomial({dict(items)!r})"
