"""
Integer Laurent polynomials in one formal variable.

Jones and ruling polynomials are small and sparse, so they are kept as an
exponent -> coefficient mapping with exact integer arithmetic. ``to_expr``
hands a value to sympy for display and symbolic checks.
"""

from collections.abc import Iterator
from collections.abc import Mapping
from fractions import Fraction

import sympy as sp

from grid_atlas.utils.int_utils import to_int


class LaurentPolynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms: dict[int, int] = {
            int(exponent): int(coefficient)
            for exponent, coefficient in sorted((terms or {}).items())
            if coefficient
        }

    @classmethod
    def constant(cls, value: int) -> "LaurentPolynomial":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self._terms!r})"

    def __str__(self) -> str:
        return self.format()

    # ARITHMETIC
    # --------------------------------------------------------------------------
    def _coerce(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return LaurentPolynomial.constant(other) if isinstance(other, int) else other

    def __add__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponent, coefficient in other.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.items()})

    def __sub__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other: "LaurentPolynomial | int") -> "LaurentPolynomial":
        other = self._coerce(other)
        terms: dict[int, int] = {}
        for e1, c1 in self.items():
            for e2, c2 in other.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPolynomial":
        if power < 0:
            if len(self._terms) != 1:
                error_message = "Only monomials have Laurent inverses"
                raise ArithmeticError(error_message)
            ((exponent, coefficient),) = self.items()
            if abs(coefficient) != 1:
                error_message = f"Monomial {self} is not a unit over the integers"
                raise ArithmeticError(error_message)
            return LaurentPolynomial({-exponent * -power: coefficient ** (-power)})

        result = LaurentPolynomial.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def shift(self, amount: int) -> "LaurentPolynomial":
        """Multiply by the variable raised to ``amount``."""
        return LaurentPolynomial({e + amount: c for e, c in self.items()})

    def substitute_power(self, factor: int) -> "LaurentPolynomial":
        """Replace the variable v by v**factor; factor -1 is the mirror substitution."""
        return LaurentPolynomial({e * factor: c for e, c in self.items()})

    def divide_exact(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Long division that must leave no remainder."""
        if not divisor:
            error_message = "Division by the zero polynomial"
            raise ZeroDivisionError(error_message)

        lead_exponent = divisor.max_degree
        lead_coefficient = divisor._terms[lead_exponent]
        divisor_span = divisor.max_degree - divisor.min_degree
        remainder = self
        quotient: dict[int, int] = {}
        while remainder and remainder.max_degree - remainder.min_degree >= divisor_span:
            top = remainder.max_degree
            coefficient, rest = divmod(remainder._terms[top], lead_coefficient)
            if rest:
                break
            exponent = top - lead_exponent
            quotient[exponent] = quotient.get(exponent, 0) + coefficient
            remainder = remainder - divisor.shift(exponent) * coefficient

        if remainder:
            error_message = f"{self} is not divisible by {divisor}"
            raise ArithmeticError(error_message)
        return LaurentPolynomial(quotient)

    # INSPECTION
    # --------------------------------------------------------------------------
    @property
    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    @property
    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def evaluate(self, value: int | Fraction) -> Fraction:
        return sum(
            (Fraction(value) ** exponent * coefficient for exponent, coefficient in self.items()),
            Fraction(0),
        )

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def dominates(self, other: "LaurentPolynomial") -> bool:
        """Coefficientwise self >= other."""
        exponents = set(self._terms) | set(other._terms)
        return all(self.coefficient(e) >= other.coefficient(e) for e in exponents)

    # TEXT
    # --------------------------------------------------------------------------
    def format(self, variable: str = "t") -> str:
        """Ascending powers, e.g. ``2+z^2`` or ``t+t^3-t^4``."""
        if not self._terms:
            return "0"

        pieces = []
        for exponent, coefficient in self.items():
            if exponent == 0:
                body = str(abs(coefficient))
            else:
                power = variable if exponent == 1 else f"{variable}^{exponent}"
                body = power if abs(coefficient) == 1 else f"{abs(coefficient)}{power}"
            sign = "-" if coefficient < 0 else "+"
            pieces.append((sign, body))

        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(sign + body for sign, body in pieces[1:])

    def serialize(self) -> str:
        """Space separated ``exponent:coefficient`` pairs; ``0`` for the zero polynomial."""
        if not self._terms:
            return "0"
        return " ".join(f"{e}:{c}" for e, c in self.items())

    @classmethod
    def parse(cls, text: str) -> "LaurentPolynomial":
        text = text.strip()
        if text == "0":
            return cls()

        terms: dict[int, int] = {}
        for token in text.split():
            exponent_text, _, coefficient_text = token.partition(":")
            exponent, coefficient = to_int(exponent_text), to_int(coefficient_text)
            if exponent is None or coefficient is None:
                error_message = f"Malformed polynomial term '{token}'"
                raise ValueError(error_message)
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return cls(terms)

    def to_expr(self, symbol: sp.Symbol, scale: int = 1) -> sp.Expr:
        """The sympy expression sum(c * symbol**(e / scale))."""
        return sp.Add(
            *(coefficient * symbol ** sp.Rational(exponent, scale) for exponent, coefficient in self.items()),
        )
