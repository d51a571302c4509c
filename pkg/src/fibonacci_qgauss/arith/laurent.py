"""Sparse Laurent polynomials in q with exact integer coefficients."""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction

from fibonacci_qgauss.errors import DomainError, InexactDivisionError, ZeroBaseError

# c, q, q^e or c*q^e with ASCII digits; the sign is stripped beforehand
_TERM = re.compile(r"(?P<coef>[0-9]+)?(?:(?(coef)\*)(?P<q>q)(?:\^(?P<exp>-?[0-9]+))?)?")


class LaurentPoly:
    """Immutable finite mapping exponent -> nonzero int coefficient.

    Exponents may be negative. Terms are kept sorted by ascending exponent and
    zero coefficients are never stored, so equality is structural.
    """

    __slots__ = ("_terms",)

    _terms: dict[int, int]

    def __init__(self, terms: Mapping[int, int] | None = None) -> None:
        normalized = {e: c for e, c in sorted((terms or {}).items()) if c}
        object.__setattr__(self, "_terms", normalized)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    # Constructors

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        """Return coefficient * q^exponent."""
        return cls({exponent: coefficient})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int], start: int = 0) -> LaurentPoly:
        """Build from a dense coefficient list whose first entry multiplies q^start."""
        return cls({start + i: c for i, c in enumerate(coefficients)})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse the canonical rendering produced by ``str()``.

        Accepts terms such as ``3``, ``-q``, ``2*q^5`` or ``q^-1`` joined by
        `` + `` and `` - ``.
        """
        text = text.strip()
        if not text:
            raise DomainError("Cannot parse an empty polynomial")

        tokens = text.replace(" + ", " +").replace(" - ", " -").split(" ")
        terms: dict[int, int] = {}
        for i, token in enumerate(tokens):
            if i > 0 and token[:1] not in ("+", "-"):
                raise DomainError(f"Malformed polynomial {text!r}")
            if token.startswith("+"):
                token = token[1:]
            exponent, coefficient = _parse_term(token, text)
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return cls(terms)

    # Inspection

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exponent(self) -> int | None:
        """Lowest exponent carrying a nonzero coefficient (None for zero)."""
        return next(iter(self._terms), None)

    @property
    def degree(self) -> int | None:
        """Highest exponent carrying a nonzero coefficient (None for zero)."""
        return next(reversed(self._terms), None)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """Iterate (exponent, coefficient) pairs in ascending exponent order."""
        return iter(self._terms.items())

    def coefficients(self) -> list[int]:
        """Dense coefficient list from min_exponent to degree (empty for zero)."""
        if not self._terms:
            return []
        low, high = self.min_exponent, self.degree
        return [self._terms.get(e, 0) for e in range(low, high + 1)]

    def is_palindromic(self) -> bool:
        dense = self.coefficients()
        return dense == dense[::-1]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Arithmetic

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        total = dict(self._terms)
        for e, c in other._terms.items():
            total[e] = total.get(e, 0) + c
        return LaurentPoly(total)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            # Only units (+/- q^e) are invertible
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise DomainError(f"{self} has no inverse among Laurent polynomials")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: c ** (-n)})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, d: int) -> LaurentPoly:
        """Multiply by q^d."""
        if d == 0:
            return self
        return LaurentPoly({e + d: c for e, c in self._terms.items()})

    def evaluate(self, q0: int | Fraction) -> Fraction:
        """Exact value at q = q0.

        Raises:
            ZeroBaseError: If q0 is zero and a negative exponent is present.
        """
        base = Fraction(q0)
        if base == 0:
            if self._terms and self.min_exponent < 0:
                raise ZeroBaseError(f"{self} is undefined at q = 0")
            return Fraction(self.coefficient(0))
        return sum((c * base**e for e, c in self._terms.items()), Fraction(0))

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Quotient of an exact division by ``divisor``.

        Raises:
            InexactDivisionError: If the remainder is nonzero or the leading
                coefficient does not divide at some step.
        """
        if divisor.is_zero:
            raise InexactDivisionError("Division by the zero polynomial")
        if self.is_zero:
            return self

        lead_exp = divisor.degree
        lead = divisor.coefficient(lead_exp)
        floor = self.min_exponent - divisor.min_exponent
        remainder = dict(self._terms)
        quotient: dict[int, int] = {}

        while remainder:
            top = max(remainder)
            step = top - lead_exp
            if step < floor:
                break
            c, r = divmod(remainder[top], lead)
            if r:
                break
            quotient[step] = c
            for e, d in divisor._terms.items():
                key = e + step
                value = remainder.get(key, 0) - c * d
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)

        if remainder:
            raise InexactDivisionError(f"{self} is not divisible by {divisor}")
        return LaurentPoly(quotient)

    # Comparison and rendering

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # Constants compare equal to ints, so they must hash like them
        if not self._terms:
            return hash(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return hash(self._terms[0])
        return hash(tuple(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self._terms.items():
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if magnitude == 1 else f"{magnitude}*{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _coerce(value: object) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


def _parse_term(token: str, text: str) -> tuple[int, int]:
    """Parse one signed term into (exponent, coefficient)."""
    sign = 1
    if token.startswith("-"):
        sign, token = -1, token[1:]

    match = _TERM.fullmatch(token)
    if not token or match is None:
        raise DomainError(f"Malformed term {token!r} in {text!r}")
    coefficient = int(match["coef"]) if match["coef"] else 1
    if match["q"] is None:
        return 0, sign * coefficient
    exponent = int(match["exp"]) if match["exp"] else 1
    return exponent, sign * coefficient
