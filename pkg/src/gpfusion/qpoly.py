"""Laurent polynomials and truncated power series in one variable q, integer coefficients."""

from __future__ import annotations

from typing import Iterable, Mapping


class QPoly:
    """Laurent polynomial in q with integer coefficients.

    Stored as ``{exponent: coefficient}`` with no zero entries. Immutable by
    convention; every operation returns a new object.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c = {int(e): int(c) for e, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "QPoly":
        return cls({exp: coeff})

    @classmethod
    def from_list(cls, coeffs: Iterable[int], start: int = 0) -> "QPoly":
        """``from_list([1, 2, 1])`` is 1 + 2q + q^2."""
        return cls({start + i: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def low_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no low degree")
        return min(self._c)

    def to_list(self) -> list[int]:
        """Coefficients from q^0 to the top degree; requires no negative exponents."""
        if not self._c:
            return []
        if self.low_degree() < 0:
            raise ValueError("negative exponents present")
        return [self[e] for e in range(self.degree() + 1)]

    def at_one(self) -> int:
        return sum(self._c.values())

    def __call__(self, q):
        return sum(c * q**e for e, c in self._c.items())

    def invert(self) -> "QPoly":
        """Substitute q -> 1/q."""
        return QPoly({-e: c for e, c in self._c.items()})

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        return QPoly({e + k: c for e, c in self._c.items()})

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self._c.values())

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = QPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, divisor: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Long division by a divisor whose top coefficient is +-1.

        Powers of q are units, so both operands are first shifted by their
        lowest exponents; the quotient carries the difference back and the
        remainder the numerator's shift.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return QPoly(), QPoly()
        a, b = self.low_degree(), divisor.low_degree()
        num = dict(self.shift(-a)._c)
        den = divisor.shift(-b)
        dtop = den.degree()
        lead = den[dtop]
        quo: dict[int, int] = {}
        while num and max(num) >= dtop:
            top = max(num)
            c, r = divmod(num[top], lead)
            if r:
                raise ArithmeticError("quotient is not integral")
            quo[top - dtop] = c
            for e, dc in den._c.items():
                k = e + top - dtop
                num[k] = num.get(k, 0) - c * dc
                if not num[k]:
                    del num[k]
        return QPoly(quo).shift(a - b), QPoly(num).shift(a)

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        quo, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"inexact division: remainder {rem}")
        return quo

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "QPoly":
        return cls({int(e): int(c) for e, c in data.items()})

    def __repr__(self) -> str:
        return f"QPoly({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly({0: x})
    raise TypeError(f"cannot treat {type(x).__name__} as QPoly")


Q = QPoly.monomial(1)
ONE = QPoly({0: 1})


class QSeries:
    """Power series in q known exactly for exponents <= order.

    Exponents below ``low`` are zero; binary operations truncate to the
    smaller order of the two operands.
    """

    __slots__ = ("_c", "order")

    def __init__(self, coeffs: Mapping[int, int], order: int):
        self.order = int(order)
        self._c = {int(e): int(c) for e, c in coeffs.items() if c and e <= order}

    @classmethod
    def from_poly(cls, p: QPoly, order: int) -> "QSeries":
        return cls(p.coeffs, order)

    def __getitem__(self, e: int) -> int:
        if e > self.order:
            raise IndexError(f"exponent {e} beyond truncation order {self.order}")
        return self._c.get(e, 0)

    def coeff_list(self, start: int = 0) -> list[int]:
        return [self._c.get(e, 0) for e in range(start, self.order + 1)]

    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def __add__(self, other: "QSeries") -> "QSeries":
        order = min(self.order, other.order)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return QSeries(out, order)

    def __mul__(self, other) -> "QSeries":
        lo1 = min(self._c, default=0)
        if isinstance(other, QPoly):
            # a polynomial is exact to every order
            order = self.order + (other.low_degree() if not other.is_zero() else 0)
        else:
            order = min(self.order + min(other._c, default=0), other.order + lo1)
        terms = other.coeffs if isinstance(other, QPoly) else other._c
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in terms.items():
                if e1 + e2 <= order:
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QSeries(out, order)

    def inverse(self) -> "QSeries":
        """Reciprocal of a series with constant term +-1."""
        c0 = self._c.get(0, 0)
        if c0 not in (1, -1) or min(self._c) < 0:
            raise ArithmeticError("series must have unit constant term and no negative exponents")
        inv = {0: c0}
        for e in range(1, self.order + 1):
            s = sum(self._c.get(k, 0) * inv.get(e - k, 0) for k in range(1, e + 1))
            inv[e] = -s * c0
        return QSeries(inv, self.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order, other.order)
        trim = lambda d: {e: c for e, c in d.items() if e <= order}
        return trim(self._c) == trim(other._c)

    def to_json(self) -> dict:
        return {"order": str(self.order), "coefficients": {str(e): str(c) for e, c in sorted(self._c.items())}}

    def __repr__(self) -> str:
        return f"QSeries({QPoly(self._c)} + O(q^{self.order + 1}))"
