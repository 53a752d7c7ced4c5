"""Exact truncated formal power series in one and two variables.

Coefficients are `fractions.Fraction` throughout; nothing here ever touches
floating point.  A series carries an explicit truncation order and mixed-order
arithmetic truncates to the smaller order, so a result never pretends to more
precision than its inputs carry.  All algorithms are truncation-stable:
recomputing at a higher order never changes the low-order coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = int | Fraction


class SeriesError(Exception):
    """Base class for series arithmetic errors."""


class ZeroConstantTerm(SeriesError):
    """Division by a series whose constant term is zero."""


class BadConstantTerm(SeriesError):
    """Square root needs constant term 1."""


class SingularRoot(SeriesError):
    """Polynomial solving needs a simple root at the expansion point."""


class NotRevertible(SeriesError):
    """Reversion needs f(0) = 0 and f'(0) != 0."""


class NonIntegerCoefficient(SeriesError):
    """A series expected to be integer-valued has a fractional coefficient."""


def _frac(value: Rational) -> Fraction:
    # bool is an int subclass and floats are rejected outright: exactness is
    # a module invariant, not a best effort.
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class USeries:
    """A univariate power series truncated at t^order.

    Immutable.  `coeffs` always holds exactly order + 1 Fractions; short
    coefficient lists are zero-padded on construction.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = (), order: int | None = None):
        cs = [_frac(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("an empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        del cs[order + 1 :]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        """Coefficient of t^n; zero beyond the truncation order."""
        if n < 0:
            raise ValueError("negative exponent")
        return self.coeffs[n] if n <= self.order else Fraction(0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, USeries):
            n = min(self.order, other.order)
            return USeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])
        if isinstance(other, (int, Fraction)):
            head = [self.coeffs[0] + _frac(other)]
            return USeries(head + list(self.coeffs[1:]))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return USeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, USeries):
            return self + (-other)
        if isinstance(other, (int, Fraction)):
            return self + (-_frac(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, USeries):
            n = min(self.order, other.order)
            a, b = self.coeffs, other.coeffs
            out = [
                sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0))
                for k in range(n + 1)
            ]
            return USeries(out)
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return USeries([c * x for x in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        result = USeries([1], order=self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return USeries([x / c for x in self.coeffs])
        if not isinstance(other, USeries):
            return NotImplemented
        if other.coeffs[0] == 0:
            raise ZeroConstantTerm("division needs a unit constant term")
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        q: list[Fraction] = []
        for k in range(n + 1):
            acc = a[k] - sum((b[i] * q[k - i] for i in range(1, k + 1)), Fraction(0))
            q.append(acc / b[0])
        return USeries(q)

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return USeries([other], order=self.order) / self
        return NotImplemented

    # -- structural helpers ------------------------------------------------

    def truncate(self, order: int) -> "USeries":
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        return USeries(self.coeffs[: order + 1])

    def shift_up(self) -> "USeries":
        """Multiply by t.  The result is exact one order higher."""
        return USeries((Fraction(0),) + self.coeffs)

    def shift_down(self) -> "USeries":
        """Divide by t; requires a zero constant term.  Loses one order."""
        if self.coeffs[0] != 0:
            raise ValueError("shift_down needs a zero constant term")
        if self.order == 0:
            raise ValueError("order too small to shift down")
        return USeries(self.coeffs[1:])

    # -- analytic operations -----------------------------------------------

    def sqrt(self) -> "USeries":
        """The square root branch with constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("square root needs constant term 1")
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n] - sum(
                (out[i] * out[n - i] for i in range(1, n)), Fraction(0)
            )
            out.append(acc / 2)
        return USeries(out)

    def compose(self, inner: "USeries") -> "USeries":
        """self(inner(t)); requires inner(0) = 0 so truncations are exact."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs inner(0) = 0")
        n = min(self.order, inner.order)
        g = inner.truncate(n)
        acc = USeries([self.coeffs[n]], order=n)
        for i in range(n - 1, -1, -1):
            acc = acc * g + self.coeffs[i]
        return acc

    def revert(self) -> "USeries":
        """Compositional inverse: the g with self(g(t)) = t mod t^(order+1).

        Coefficients are pinned one at a time: with g known through t^(n-1),
        the t^n coefficient of self(g) is off by exactly f'(0) * g_n.
        """
        if self.order < 1 or self.coeffs[0] != 0 or self.coeffs[1] == 0:
            raise NotRevertible("reversion needs f(0) = 0 and f'(0) != 0")
        h1 = self.coeffs[1]
        g = [Fraction(0), 1 / h1]
        for n in range(2, self.order + 1):
            err = self.truncate(n).compose(USeries(g, order=n)).coeffs[n]
            g.append(-err / h1)
        return USeries(g, order=self.order)

    # -- export --------------------------------------------------------------

    def integer_coeffs(self) -> list[int]:
        """Coefficients as plain ints; a fractional one is a hard error."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient of t^{n} is {c}")
            out.append(c.numerator)
        return out

    def text(self) -> str:
        """Canonical rendering: every term, `c0 + c1*t + c2*t^2 + ...`."""
        parts = []
        for n, c in enumerate(self.coeffs):
            if n == 0:
                parts.append(str(c))
            elif n == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{n}")
        return " + ".join(parts)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"USeries([{shown}{tail}], order={self.order})"


def _newton_cap(order: int) -> int:
    # ceil(log2(order + 1)) + 2; Newton doubles correct coefficients per step.
    return order.bit_length() + 2


def _eval_poly(table: Sequence[USeries], at: USeries) -> USeries:
    acc = table[-1]
    for c in reversed(table[:-1]):
        acc = acc * at + c
    return acc


def solve_polynomial(
    poly: Sequence[Sequence[Rational]], a0: Rational, order: int
) -> USeries:
    """Solve P(A(t), t) = 0 for the series branch with A(0) = a0.

    `poly[i]` lists the t-coefficients of the A^i term.  Requires a simple
    root, P(a0, 0) = 0 with dP/dA(a0, 0) != 0; raises SingularRoot otherwise.
    Newton iteration from the constant a0, capped at ceil(log2(order+1)) + 2
    rounds, with the residual re-checked at the end.
    """
    if not poly:
        raise ValueError("empty polynomial")
    a0 = _frac(a0)
    coeffs = [USeries(p, order=order) for p in poly]
    deriv = [i * c for i, c in enumerate(coeffs)][1:]
    value0 = sum((c.coeffs[0] * a0**i for i, c in enumerate(coeffs)), Fraction(0))
    slope0 = sum(
        (c.coeffs[0] * i * a0 ** (i - 1) for i, c in enumerate(coeffs) if i),
        Fraction(0),
    )
    if value0 != 0 or slope0 == 0:
        raise SingularRoot("need P(a0, 0) = 0 with dP/dA(a0, 0) != 0")
    a = USeries([a0], order=order)
    zero = USeries([0], order=order)
    for _ in range(_newton_cap(order)):
        residual = _eval_poly(coeffs, a)
        if residual == zero:
            break
        a = a - residual / _eval_poly(deriv, a)
    if _eval_poly(coeffs, a) != zero:
        raise SingularRoot("Newton iteration did not converge to a root")
    return a


class BSeries:
    """A bivariate power series truncated to the square grid 0..order.

    `grid[n][k]` is the coefficient of x^n y^k.  Multiplication and division
    are exact on the grid: truncation to the grid is a quotient-ring map, so
    dropping out-of-grid terms never corrupts the retained ones.
    """

    __slots__ = ("grid",)

    def __init__(self, grid: Sequence[Sequence[Rational]], order: int | None = None):
        rows = [[_frac(c) for c in row] for row in grid]
        if order is None:
            if not rows:
                raise ValueError("an empty grid needs an explicit order")
            order = len(rows) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        del rows[order + 1 :]
        norm = []
        for row in rows:
            del row[order + 1 :]
            row.extend([Fraction(0)] * (order + 1 - len(row)))
            norm.append(tuple(row))
        while len(norm) < order + 1:
            norm.append(tuple([Fraction(0)] * (order + 1)))
        self.grid: tuple[tuple[Fraction, ...], ...] = tuple(norm)

    @classmethod
    def from_terms(
        cls, terms: Mapping[tuple[int, int], Rational], order: int
    ) -> "BSeries":
        """Build from {(x_power, y_power): coefficient}; off-grid terms drop."""
        grid = [[Fraction(0)] * (order + 1) for _ in range(order + 1)]
        for (n, k), c in terms.items():
            if 0 <= n <= order and 0 <= k <= order:
                grid[n][k] = _frac(c)
        return cls(grid, order)

    @property
    def order(self) -> int:
        return len(self.grid) - 1

    def entry(self, n: int, k: int) -> Fraction:
        """Coefficient of x^n y^k; zero off the grid."""
        if 0 <= n <= self.order and 0 <= k <= self.order:
            return self.grid[n][k]
        return Fraction(0)

    def __add__(self, other):
        if not isinstance(other, BSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return BSeries(
            [
                [self.grid[i][j] + other.grid[i][j] for j in range(n + 1)]
                for i in range(n + 1)
            ]
        )

    def __sub__(self, other):
        if not isinstance(other, BSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return BSeries(
            [
                [self.grid[i][j] - other.grid[i][j] for j in range(n + 1)]
                for i in range(n + 1)
            ]
        )

    def __mul__(self, other):
        if not isinstance(other, BSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            for j in range(n + 1):
                c = self.grid[i][j]
                if not c:
                    continue
                for p in range(n + 1 - i):
                    brow = other.grid[p]
                    orow = out[i + p]
                    for q in range(n + 1 - j):
                        b = brow[q]
                        if b:
                            orow[j + q] += c * b
        return BSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, BSeries):
            return NotImplemented
        if other.grid[0][0] == 0:
            raise ZeroConstantTerm("division needs a unit constant term")
        n = min(self.order, other.order)
        b00 = other.grid[0][0]
        q = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            for j in range(n + 1):
                acc = self.grid[i][j]
                for p in range(i + 1):
                    brow = other.grid[p]
                    qrow = q[i - p]
                    for r in range(1 if p == 0 else 0, j + 1):
                        b = brow[r]
                        if b:
                            acc -= b * qrow[j - r]
                q[i][j] = acc / b00
        return BSeries(q)

    def integer_rows(self) -> list[list[int]]:
        """The grid as plain ints; a fractional entry is a hard error."""
        out = []
        for n, row in enumerate(self.grid):
            ints = []
            for k, c in enumerate(row):
                if c.denominator != 1:
                    raise NonIntegerCoefficient(f"entry ({n}, {k}) is {c}")
                ints.append(c.numerator)
            out.append(ints)
        return out

    def __eq__(self, other):
        if not isinstance(other, BSeries):
            return NotImplemented
        return self.grid == other.grid

    def __hash__(self):
        return hash(self.grid)

    def __repr__(self):
        return f"BSeries(order={self.order})"
