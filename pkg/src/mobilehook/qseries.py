"""Dense polynomials in q with exact integer coefficients.

Every hook-length formula in the package ends up as a value of type
:class:`IntPoly`.  Rational expressions are always arranged so that the
final step is one exact polynomial division, which :func:`exact_div`
enforces by refusing to drop a nonzero remainder.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial division leaves a remainder."""


class IntPoly:
    """Immutable polynomial sum(c[k] q^k) over the integers.

    ``coeffs[k]`` is the coefficient of ``q**k``; trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Lowest exponent with a nonzero coefficient; -1 for zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                base = "q" if k == 1 else f"q^{k}"
                body = base if mag == 1 else f"{mag}{base}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __floordiv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def truncate(self, n: int) -> "IntPoly":
        """Drop all terms of degree greater than n."""
        return IntPoly(self.coeffs[: n + 1])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "IntPoly":
        return cls(int(x) for x in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    return None


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for k, c in enumerate(b.coeffs):
        out[k] += c
    return IntPoly(out)


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    # iterate over the sparser operand; factors like 1 - q^h have two terms
    sa = [(k, c) for k, c in enumerate(a.coeffs) if c]
    sb = [(k, c) for k, c in enumerate(b.coeffs) if c]
    if len(sa) > len(sb):
        sa, sb = sb, sa
        a, b = b, a
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    bc = b.coeffs
    for i, ci in sa:
        for j, cj in enumerate(bc):
            if cj:
                out[i + j] += ci * cj
    return IntPoly(out)


def product(polys: Iterable[IntPoly]) -> IntPoly:
    acc = ONE
    for p in polys:
        acc = mul(acc, p)
    return acc


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return c with b*c == a, or raise NonExactDivision."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    db = b.degree
    if a.degree < db:
        raise NonExactDivision(f"degree {a.degree} < divisor degree {db}")
    rem = list(a.coeffs)
    lead = b.coeffs[-1]
    bc = b.coeffs
    quot = [0] * (a.degree - db + 1)
    for k in range(len(quot) - 1, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        qk, r = divmod(top, lead)
        if r:
            raise NonExactDivision(f"leading coefficient {lead} does not divide {top}")
        quot[k] = qk
        for j, cj in enumerate(bc):
            if cj:
                rem[k + j] -= qk * cj
    if any(rem):
        raise NonExactDivision("nonzero remainder")
    return IntPoly(quot)


def one_minus_q_pow(h: int) -> IntPoly:
    """The factor 1 - q^h."""
    if h <= 0:
        raise ValueError(f"hook length must be positive, got {h}")
    c = [0] * (h + 1)
    c[0] = 1
    c[h] = -1
    return IntPoly(c)


def q_int(n: int) -> IntPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    return IntPoly([1] * n)


def q_factorial(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    return product(q_int(i) for i in range(1, n + 1))


def q_binomial(n: int, k: int) -> IntPoly:
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    return exact_div(q_factorial(n), mul(q_factorial(k), q_factorial(n - k)))


def pochhammer(n: int) -> IntPoly:
    """prod_{i=1..n} (1 - q^i)."""
    return product(one_minus_q_pow(i) for i in range(1, n + 1))


def eval_at_one(p: IntPoly) -> int:
    return sum(p.coeffs)


def series_inverse_pochhammer(n: int, N: int) -> IntPoly:
    """Truncation to degree N of prod_{i=1..n} 1/(1 - q^i)."""
    s = [1] + [0] * N
    for i in range(1, n + 1):
        for k in range(i, N + 1):
            s[k] += s[k - i]
    return IntPoly(s)
