"""Exact arithmetic in the cyclotomic field Q(zeta_e).

Elements are polynomial residues modulo the e-th cyclotomic polynomial
Phi_e, with Fraction coefficients; inversion runs the extended Euclidean
algorithm against Phi_e.  The root-of-unity sums computed here multiply
by powers of zeta as cyclic index shifts modulo x^e - 1 and reduce once
at the end: the quotient map Q[x]/(x^e - 1) -> Q[x]/(Phi_e) is a ring
homomorphism, so the reduced results are exact field values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InternalInconsistencyError, InvalidArgumentError
from .exact_arith import divisors, rational_str


def cyclotomic_poly(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, constant term first.

    Computed by exact integer division of x^e - 1 by the product of
    Phi_d over the proper divisors d of e.
    """
    if e < 1:
        raise InvalidArgumentError(f"cyclotomic_poly requires e >= 1, got {e}")
    return _cyclo_poly(e)


@lru_cache(maxsize=None)
def _cyclo_poly(e: int) -> tuple[int, ...]:
    num = [-1] + [0] * (e - 1) + [1]
    for d in divisors(e)[:-1]:
        num = _int_poly_exact_div(num, _cyclo_poly(d))
    return tuple(num)


def _int_poly_exact_div(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact long division of integer polynomials; den is monic."""
    rem = list(num)
    dn = len(den) - 1
    quot = [0] * (len(rem) - dn)
    for top in range(len(rem) - 1, dn - 1, -1):
        c = rem[top]
        if c:
            quot[top - dn] = c
            for j in range(dn + 1):
                rem[top - dn + j] -= c * den[j]
    if any(rem):
        raise InternalInconsistencyError("inexact polynomial division")
    return quot


def _poly_inverse(a: Sequence[Fraction], modulus: Sequence[int]) -> list[Fraction]:
    """Inverse of a modulo the (irreducible, monic) modulus, by extended Euclid."""
    r0 = [Fraction(c) for c in modulus]
    r1 = [Fraction(c) for c in a]
    s0: list[Fraction] = [Fraction(0)]
    s1: list[Fraction] = [Fraction(1)]
    while any(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    while r0 and not r0[-1]:
        r0.pop()
    if len(r0) != 1:
        raise ZeroDivisionError("element shares a factor with the modulus")
    c = r0[0]
    return [s / c for s in s0]


def _poly_divmod(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(num)
    dn = len(den) - 1
    while dn >= 0 and not den[dn]:
        dn -= 1
    if dn < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lead = den[dn]
    if len(rem) - 1 < dn:
        return [Fraction(0)], rem
    quot = [Fraction(0)] * (len(rem) - dn)
    for top in range(len(rem) - 1, dn - 1, -1):
        c = rem[top]
        if c:
            q = c / lead
            quot[top - dn] = q
            for j in range(dn + 1):
                rem[top - dn + j] -= q * den[j]
    return quot, rem[:dn]


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return out


@lru_cache(maxsize=None)
def cyclo_field(e: int) -> "CycloField":
    """Shared field object for Q(zeta_e); instances are cached and reused."""
    return CycloField(e)


class CycloField:
    """The field Q(zeta_e), presented as Q[x]/(Phi_e(x)).

    Power tables and inverses are memoized append-only, so a field object
    can be shared read-only across concurrent sweeps.
    """

    def __init__(self, e: int):
        if e < 1:
            raise InvalidArgumentError(f"field order must be >= 1, got {e}")
        self.e = e
        self.modulus = cyclotomic_poly(e)
        self.degree = len(self.modulus) - 1
        self._pows: list[tuple[Fraction, ...]] | None = None
        self._inv_omega: dict[int, CycloElem] = {}
        self._inv_scaled: dict[int, list[int]] = {}

    def __repr__(self) -> str:
        return f"CycloField({self.e})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CycloField) and other.e == self.e

    def __hash__(self) -> int:
        return hash(("CycloField", self.e))

    def zero(self) -> "CycloElem":
        return self.from_rational(0)

    def one(self) -> "CycloElem":
        return self.from_rational(1)

    def from_rational(self, q: Fraction | int) -> "CycloElem":
        coeffs = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return CycloElem(self, tuple(coeffs))

    def from_cover(self, coeffs: Iterable[Fraction | int]) -> "CycloElem":
        """Reduce an arbitrary-degree coefficient vector modulo Phi_e."""
        rem = list(coeffs)
        if not all(isinstance(c, int) for c in rem):
            rem = [Fraction(c) for c in rem]
        deg = self.degree
        m = self.modulus
        for top in range(len(rem) - 1, deg - 1, -1):
            c = rem[top]
            if c:
                for j in range(deg + 1):
                    rem[top - deg + j] -= c * m[j]
        rem = rem[:deg]
        rem += [Fraction(0)] * (deg - len(rem))
        return CycloElem(self, tuple(Fraction(c) for c in rem))

    def zeta(self) -> "CycloElem":
        return self.zeta_pow(1)

    def zeta_pow(self, k: int) -> "CycloElem":
        """zeta^k for any integer k, via a table of all e distinct powers."""
        if self._pows is None:
            self._pows = self._build_pows()
        return CycloElem(self, self._pows[k % self.e])

    def _build_pows(self) -> list[tuple[Fraction, ...]]:
        deg = self.degree
        m = self.modulus
        pows = []
        cur = [Fraction(1)] + [Fraction(0)] * (deg - 1)
        for _ in range(self.e):
            pows.append(tuple(cur))
            lead = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if lead:
                cur = [a - lead * m[j] for j, a in enumerate(cur)]
        return pows

    def inv_omega_minus_one(self, i: int) -> "CycloElem":
        """(zeta^i - 1)^{-1}, cached; i must not be divisible by e."""
        i %= self.e
        if i == 0:
            raise InvalidArgumentError("zeta^i - 1 vanishes for i = 0 mod e")
        inv = self._inv_omega.get(i)
        if inv is None:
            inv = (self.zeta_pow(i) - 1).inverse()
            self._inv_omega[i] = inv
        return inv

    def _inv_lift_scaled(self, i: int) -> list[int]:
        """e * (zeta^i - 1)^{-1} as an integer vector of length e.

        Scaled inverses are integral (their denominators divide e), which
        lets the identity sums below accumulate in plain int arithmetic.
        """
        cached = self._inv_scaled.get(i % self.e)
        if cached is not None:
            return cached
        inv = self.inv_omega_minus_one(i)
        scaled = []
        for c in inv.coeffs:
            s = c * self.e
            if s.denominator != 1:
                raise InternalInconsistencyError(
                    f"e * (zeta^{i} - 1)^-1 is not integral in Q(zeta_{self.e})"
                )
            scaled.append(s.numerator)
        scaled += [0] * (self.e - self.degree)
        self._inv_scaled[i % self.e] = scaled
        return scaled


@dataclass(frozen=True)
class CycloElem:
    """An element of Q(zeta_e): Fraction coefficients of 1, zeta, ..., zeta^(phi-1)."""

    field: CycloField
    coeffs: tuple[Fraction, ...]

    def _coerce(self, other: object) -> "CycloElem | None":
        if isinstance(other, CycloElem):
            if other.field.e != self.field.e:
                raise InvalidArgumentError("cannot mix elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloElem(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field.from_cover(_poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "CycloElem":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "CycloElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CycloElem":
        if not any(self.coeffs):
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        inv = _poly_inverse(self.coeffs, self.field.modulus)
        inv += [Fraction(0)] * (self.field.degree - len(inv))
        return CycloElem(self.field, tuple(inv[: self.field.degree]))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise InternalInconsistencyError(f"element is not rational: {self!r}")
        return self.coeffs[0]

    def coeff_strings(self) -> list[str]:
        """Serialized form: "p/q" strings, lowest degree first."""
        return [rational_str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"CycloElem(e={self.field.e}, coeffs={self.coeff_strings()})"


def _cyclic_shift(vec: list, k: int) -> list:
    """Multiply by x^k modulo x^e - 1: a cyclic index shift."""
    k %= len(vec)
    if k == 0:
        return list(vec)
    return vec[-k:] + vec[:-k]


def _check_sum_domain(e: int) -> CycloField:
    if e < 2:
        raise InvalidArgumentError(f"root-of-unity sums require e >= 2, got {e}")
    return cyclo_field(e)


def geometric_sum(e: int, k: int) -> Fraction:
    """Sum of zeta^(i*k) over i = 1..e-1, as an exact rational.

    Equals e - 1 when k == 0 and -1 for 0 < k < e.
    """
    field = _check_sum_domain(e)
    if not 0 <= k < e:
        raise InvalidArgumentError(f"geometric_sum requires 0 <= k < e, got k={k}")
    acc = [0] * e
    for i in range(1, e):
        acc[(i * k) % e] += 1
    return field.from_cover(acc).to_rational()


def inverse_sum(e: int) -> Fraction:
    """Sum of 1/(zeta^i - 1) over i = 1..e-1; equals -(e-1)/2."""
    field = _check_sum_domain(e)
    acc = field.zero()
    for i in range(1, e):
        acc = acc + field.inv_omega_minus_one(i)
    return acc.to_rational()


def ratio_sum(e: int, d: int) -> Fraction:
    """Sum of (zeta^(i*d) - 1)/(zeta^i - 1) over i = 1..e-1; equals e - d."""
    field = _check_sum_domain(e)
    if not 0 < d < e:
        raise InvalidArgumentError(f"ratio_sum requires 0 < d < e, got d={d}")
    acc = [0] * e
    for i in range(1, e):
        v = field._inv_lift_scaled(i)
        s = _cyclic_shift(v, (i * d) % e)
        for j in range(e):
            acc[j] += s[j] - v[j]
    return (field.from_cover(acc) * Fraction(1, e)).to_rational()


def shifted_sum(e: int, d: int) -> Fraction:
    """Sum of zeta^(i*d)/(zeta^i - 1) over i = 1..e-1; equals (e - 2d + 1)/2."""
    field = _check_sum_domain(e)
    if not 0 < d <= e:
        raise InvalidArgumentError(f"shifted_sum requires 0 < d <= e, got d={d}")
    acc = [0] * e
    for i in range(1, e):
        s = _cyclic_shift(field._inv_lift_scaled(i), (i * d) % e)
        for j in range(e):
            acc[j] += s[j]
    return (field.from_cover(acc) * Fraction(1, e)).to_rational()


def inertia_term(e: int, d: int, i: int) -> CycloElem:
    """The exact element (1/e) * zeta^(i*d) / (1 - zeta^(-i)) of Q(zeta_e).

    One inertia-component contribution; i = 0 mod e is rejected because the
    denominator vanishes there.
    """
    field = _check_sum_domain(e)
    if i % e == 0:
        raise InvalidArgumentError("inertia_term: 1 - zeta^(-i) vanishes for i = 0 mod e")
    if not 0 < i < e:
        raise InvalidArgumentError(f"inertia_term requires 0 < i < e, got i={i}")
    if not 0 <= d < e:
        raise InvalidArgumentError(f"inertia_term requires 0 <= d < e, got d={d}")
    # 1/(1 - zeta^(-i)) == -(zeta^(e-i) - 1)^(-1)
    scaled = field._inv_lift_scaled(e - i)
    shifted = field.from_cover(_cyclic_shift(scaled, (i * d) % e))
    return shifted * Fraction(-1, e * e)


def inertia_total(e: int, d: int) -> Fraction:
    """Closed form (e - 1 - 2d)/(2e) for the full inertia sum at one point.

    Equals the sum of inertia_term(e, d, i) over i = 1..e-1; the e = 1 case
    is the empty sum 0.
    """
    if e < 1:
        raise InvalidArgumentError(f"inertia_total requires e >= 1, got {e}")
    if not 0 <= d < e:
        raise InvalidArgumentError(f"inertia_total requires 0 <= d < e, got d={d}")
    return Fraction(e - 1 - 2 * d, 2 * e)
