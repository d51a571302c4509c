"""Dense polynomials in x whose coefficients are Laurent polynomials in q."""

from __future__ import annotations

from collections.abc import Iterable

from fibonacci_qgauss.arith.laurent import LaurentPoly


class XPoly:
    """Immutable coefficient tuple indexed by power of x.

    Trailing zero coefficients are trimmed; the zero polynomial is a single
    zero entry and reports degree -1.
    """

    __slots__ = ("_coeffs",)

    _coeffs: tuple[LaurentPoly, ...]

    def __init__(self, coeffs: Iterable[LaurentPoly | int] = ()) -> None:
        items = [c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c) for c in coeffs]
        while len(items) > 1 and items[-1].is_zero:
            items.pop()
        if not items:
            items = [LaurentPoly.zero()]
        object.__setattr__(self, "_coeffs", tuple(items))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zero(cls) -> XPoly:
        return cls()

    @classmethod
    def one(cls) -> XPoly:
        return cls([1])

    @classmethod
    def x(cls) -> XPoly:
        return cls([0, 1])

    @classmethod
    def constant(cls, c: LaurentPoly | int) -> XPoly:
        return cls([c])

    @classmethod
    def monomial(cls, power: int, coefficient: LaurentPoly | int = 1) -> XPoly:
        """Return coefficient * x^power."""
        return cls([0] * power + [coefficient])

    @property
    def coeffs(self) -> tuple[LaurentPoly, ...]:
        return self._coeffs

    @property
    def is_zero(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0].is_zero

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> LaurentPoly:
        return self._coeffs[-1]

    def coefficient(self, power: int) -> LaurentPoly:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return LaurentPoly.zero()

    def __add__(self, other: XPoly | LaurentPoly | int) -> XPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return XPoly(self.coefficient(m) + other.coefficient(m) for m in range(size))

    __radd__ = __add__

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self._coeffs)

    def __sub__(self, other: XPoly | LaurentPoly | int) -> XPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: XPoly | LaurentPoly | int) -> XPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: XPoly | LaurentPoly | int) -> XPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return XPoly.zero()
        product = [LaurentPoly.zero()] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] = product[i + j] + a * b
        return XPoly(product)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly | int):
            other = XPoly.constant(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if len(self._coeffs) == 1:
            return hash(self._coeffs[0])
        return hash(self._coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for m, c in enumerate(self._coeffs):
            if c.is_zero:
                continue
            power = "" if m == 0 else ("x" if m == 1 else f"x^{m}")
            if not power:
                parts.append(str(c) if len(c) == 1 else f"({c})")
            elif c == 1:
                parts.append(power)
            else:
                parts.append(f"({c})*{power}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"XPoly({str(self)!r})"


def _coerce(value: object) -> XPoly:
    if isinstance(value, XPoly):
        return value
    if isinstance(value, LaurentPoly | int):
        return XPoly.constant(value)
    return NotImplemented
