"""Exact field arithmetic: rationals, prime fields, and simple extensions.

Every element carries a canonical representation (lowest-terms Fraction,
reduced residue, or fixed-length coefficient vector), so equality and hashing
are structural and exact.  Nothing in this package ever touches a float.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NegativeDiscriminantInput,
    NotPrime,
    ReducibleModulus,
    UnvalidatedModulusWarning,
)

LESS = -1
EQUAL = 0
GREATER = 1


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldElement:
    """A value of some Field, stored in canonical form.

    Supports the usual operators; mixing elements of distinct fields raises
    FieldMismatch, plain ints (and Fractions where meaningful) are coerced.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    def _rep(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"cannot mix {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field._coerce_rep(other)
        return None

    def __add__(self, other):
        rep = self._rep(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._rep(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.value, rep))

    def __rsub__(self, other):
        rep = self._rep(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(rep, self.value))

    def __mul__(self, other):
        rep = self._rep(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._rep(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(rep)))

    def __rtruediv__(self, other):
        rep = self._rep(other)
        if rep is None:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(rep, self.field._inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = base.inverse()
            exponent = -exponent
        result = self.field.one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field._inv(self.value))

    def __bool__(self):
        return not self.field._is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.field == self.field and other.value == self.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.field._coerce_rep(other) == self.value
            except (DivisionByZero, TypeError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return self.field.format_rep(self.value)

    def sort_key(self):
        return self.field.sort_key_rep(self.value)


class Field:
    """Common interface of the concrete field classes.

    Subclasses operate on raw canonical representations; FieldElement wraps
    them with operator syntax.  Fields compare equal when they describe the
    same construction, so elements created through independently built but
    identical handles interoperate.
    """

    characteristic: int = 0

    def element(self, value) -> FieldElement:
        return FieldElement(self, self._coerce_rep(value))

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    @property
    def order(self):
        """Number of elements, or None for infinite fields."""
        return None

    def iter_elements(self):
        raise NotImplementedError("field is not finite")

    # subclasses: _coerce_rep, _add, _sub, _mul, _neg, _inv, _is_zero,
    # format_rep, sort_key_rep, describe


class RationalField(Field):
    """The rational numbers, represented as Fraction values."""

    characteristic = 0

    def _coerce_rep(self, v):
        if isinstance(v, FieldElement):
            if v.field == self:
                return v.value
            raise FieldMismatch(f"cannot place {v!r} of {v.field} into {self}")
        if isinstance(v, (int, Fraction)):
            return Fraction(v)
        raise TypeError(f"cannot interpret {v!r} as a rational")

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in Q")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def format_rep(self, a):
        return str(a)

    def sort_key_rep(self, a):
        return (a.numerator, a.denominator)

    def describe(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    """GF(p) for prime p, represented as reduced residues."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def _coerce_rep(self, v):
        if isinstance(v, FieldElement):
            if v.field == self:
                return v.value
            raise FieldMismatch(f"cannot place {v!r} of {v.field} into {self}")
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            num = v.numerator % self.p
            den = v.denominator % self.p
            return self._mul(num, self._inv(den))
        raise TypeError(f"cannot interpret {v!r} as an element of {self}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        if a == 0:
            raise DivisionByZero(f"division by zero in {self}")
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a == 0

    def format_rep(self, a):
        return str(a)

    def sort_key_rep(self, a):
        return (a,)

    def describe(self):
        return f"GF {self.p}"

    @property
    def order(self):
        return self.p

    def iter_elements(self):
        for i in range(self.p):
            yield FieldElement(self, i)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


# ---- polynomial helpers over an arbitrary base field ----
# All work on lists of raw representations, ascending degree.

def _ptrim(field, c):
    c = list(c)
    while c and field._is_zero(c[-1]):
        c.pop()
    return c


def _pmul(field, a, b):
    if not a or not b:
        return []
    out = [field._coerce_rep(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if field._is_zero(ai):
            continue
        for j, bj in enumerate(b):
            out[i + j] = field._add(out[i + j], field._mul(ai, bj))
    return _ptrim(field, out)


def _psub(field, a, b):
    n = max(len(a), len(b))
    zero = field._coerce_rep(0)
    out = []
    for i in range(n):
        ai = a[i] if i < len(a) else zero
        bi = b[i] if i < len(b) else zero
        out.append(field._sub(ai, bi))
    return _ptrim(field, out)


def _pdivmod(field, num, den):
    den = _ptrim(field, den)
    if not den:
        raise DivisionByZero("polynomial division by zero")
    num = _ptrim(field, num)
    lead_inv = field._inv(den[-1])
    quot = [field._coerce_rep(0)] * max(len(num) - len(den) + 1, 0)
    rem = list(num)
    while len(rem) >= len(den):
        shift = len(rem) - len(den)
        coef = field._mul(rem[-1], lead_inv)
        quot[shift] = field._add(quot[shift], coef)
        for i, di in enumerate(den):
            rem[shift + i] = field._sub(rem[shift + i], field._mul(coef, di))
        rem = _ptrim(field, rem)
    return _ptrim(field, quot), rem


def _peval(field, poly, x):
    acc = field._coerce_rep(0)
    for c in reversed(poly):
        acc = field._add(field._mul(acc, x), c)
    return acc


def _pinv_mod(field, a, modulus):
    """Inverse of a modulo the given polynomial, or the nontrivial gcd found."""
    old_r, r = _ptrim(field, a), list(modulus)
    old_u, u = [field._coerce_rep(1)], []
    while r:
        q, rem = _pdivmod(field, old_r, r)
        old_r, r = r, rem
        old_u, u = u, _psub(field, old_u, _pmul(field, q, u))
    return old_r, old_u


def is_irreducible_mod_p(field: PrimeField, coeffs) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over GF(p)."""
    coeffs = [field._coerce_rep(c) for c in coeffs]
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for x in range(field.p):
        if field._is_zero(_peval(field, coeffs, x)):
            return False
    if deg <= 3:
        return True
    for j in range(2, deg // 2 + 1):
        for tail in itertools.product(range(field.p), repeat=j):
            div = list(tail) + [1]
            _, rem = _pdivmod(field, coeffs, div)
            if not rem:
                return False
    return True


def _int_divisors(n: int):
    n = abs(n)
    out = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            if f != n // f:
                out.append(n // f)
        f += 1
    return sorted(out)


def _has_rational_root(coeffs) -> bool:
    # clear denominators to a primitive integer polynomial
    from math import lcm

    denom = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * denom) for c in coeffs]
    if ints[0] == 0:
        return True
    for p in _int_divisors(ints[0]):
        for q in _int_divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                acc = Fraction(0)
                for c in reversed(ints):
                    acc = acc * cand + c
                if acc == 0:
                    return True
    return False


class ExtensionField(Field):
    """base[x]/(modulus) for a monic modulus of degree at least 2.

    Elements are fixed-length coefficient vectors over the base field.
    Irreducibility is verified exhaustively over prime fields and by the
    rational root test over Q; beyond degree 3 over Q (and always over an
    extension base) the caller's word is accepted and the handle is tagged
    unvalidated, with an UnvalidatedModulusWarning.
    """

    def __init__(self, base: Field, modulus, *, assume_irreducible: bool = False):
        self.base = base
        coeffs = tuple(base._coerce_rep(c) for c in modulus)
        if len(coeffs) < 3:
            raise ValueError("modulus degree must be at least 2")
        if coeffs[-1] != base._coerce_rep(1):
            raise ValueError("modulus must be monic")
        self.modulus = coeffs
        self.degree = len(coeffs) - 1
        self.characteristic = base.characteristic
        self.modulus_validated = True
        if assume_irreducible:
            pass
        elif isinstance(base, PrimeField):
            if not is_irreducible_mod_p(base, coeffs):
                raise ReducibleModulus(f"{self._modulus_str()} factors over {base}")
        elif isinstance(base, RationalField):
            if _has_rational_root(coeffs):
                raise ReducibleModulus(f"{self._modulus_str()} has a rational root")
            if self.degree > 3:
                self.modulus_validated = False
                warnings.warn(
                    f"irreducibility of {self._modulus_str()} over Q not verified "
                    "beyond the rational root test",
                    UnvalidatedModulusWarning,
                    stacklevel=2,
                )
        else:
            self.modulus_validated = False
            warnings.warn(
                f"irreducibility of {self._modulus_str()} over {base} not verified",
                UnvalidatedModulusWarning,
                stacklevel=2,
            )

    def _modulus_str(self):
        return "[" + ",".join(self.base.format_rep(c) for c in self.modulus) + "]"

    def _pad(self, coeffs):
        zero = self.base._coerce_rep(0)
        out = list(coeffs) + [zero] * (self.degree - len(coeffs))
        return tuple(out[: self.degree])

    def _reduce(self, coeffs):
        cc = list(coeffs)
        base = self.base
        for i in range(len(cc) - 1, self.degree - 1, -1):
            coef = cc[i]
            if base._is_zero(coef):
                continue
            off = i - self.degree
            for j, mj in enumerate(self.modulus):
                cc[off + j] = base._sub(cc[off + j], base._mul(coef, mj))
        return self._pad(cc[: self.degree])

    def _coerce_rep(self, v):
        if isinstance(v, FieldElement):
            if v.field == self:
                return v.value
            if v.field == self.base:
                return self._pad([v.value])
            raise FieldMismatch(f"cannot place {v!r} of {v.field} into {self}")
        if isinstance(v, (int, Fraction)):
            return self._pad([self.base._coerce_rep(v)])
        if isinstance(v, (list, tuple)):
            reps = [self.base._coerce_rep(c) for c in v]
            if len(reps) > self.degree:
                return self._reduce(reps)
            return self._pad(reps)
        raise TypeError(f"cannot interpret {v!r} as an element of {self}")

    def gen(self) -> FieldElement:
        """The coset of x, a root of the modulus."""
        return self.element([0, 1])

    def _add(self, a, b):
        base = self.base
        return tuple(base._add(x, y) for x, y in zip(a, b))

    def _sub(self, a, b):
        base = self.base
        return tuple(base._sub(x, y) for x, y in zip(a, b))

    def _neg(self, a):
        base = self.base
        return tuple(base._neg(x) for x in a)

    def _mul(self, a, b):
        prod = _pmul(self.base, list(a), list(b))
        return self._reduce(prod)

    def _inv(self, a):
        if self._is_zero(a):
            raise DivisionByZero(f"division by zero in {self}")
        g, u = _pinv_mod(self.base, list(a), list(self.modulus))
        if len(g) != 1:
            raise ReducibleModulus(
                f"{self._modulus_str()} shares a factor with an element; modulus is reducible"
            )
        scale = self.base._inv(g[0])
        return self._pad([self.base._mul(c, scale) for c in u])

    def _is_zero(self, a):
        return all(self.base._is_zero(c) for c in a)

    def format_rep(self, a):
        return "[" + ",".join(self.base.format_rep(c) for c in a) + "]"

    def sort_key_rep(self, a):
        return tuple(self.base.sort_key_rep(c) for c in a)

    def describe(self):
        inner = self.base.describe()
        atom = inner if inner == "Q" else f"({inner})"
        return f"EXT {atom} {self._modulus_str()}"

    @property
    def order(self):
        base_order = self.base.order
        return None if base_order is None else base_order ** self.degree

    def iter_elements(self):
        reps = [e.value for e in self.base.iter_elements()]
        for combo in itertools.product(reps, repeat=self.degree):
            yield FieldElement(self, tuple(combo))

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("EXT", self.base, self.modulus))

    def __repr__(self):
        return self.describe()


def _int_poly_div_exact(num, den):
    """Exact division of integer polynomials, den monic. Asserts zero remainder."""
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        coef = num[-1]
        quot[shift] = coef
        for i, d in enumerate(den):
            num[shift + i] -= coef * d
        while num and num[-1] == 0:
            num.pop()
    assert not any(num), "division was not exact"
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple:
    """Integer coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
    divisors of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def cyclotomic_field(n: int) -> Field:
    """Q adjoined a primitive n-th root of unity; plain Q for n in {1, 2}."""
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 2:
        return RationalField()
    return ExtensionField(RationalField(), cyclotomic_polynomial(n), assume_irreducible=True)


def compare_with_surd_mean(x, c) -> int:
    """Compare rational x with (1 + sqrt(1 + 4c))/2 without leaving Q.

    Returns LESS, EQUAL, or GREATER.  The surd is at least 1 for c >= 0, so
    any x <= 1/2 is immediately smaller; otherwise both sides of
    2x - 1 ? sqrt(1 + 4c) are nonnegative and can be squared.
    """
    x = Fraction(x)
    c = Fraction(c)
    if c < 0:
        raise NegativeDiscriminantInput(f"c = {c} is negative")
    if 2 * x <= 1:
        return LESS
    lhs = (2 * x - 1) ** 2
    rhs = 1 + 4 * c
    if lhs < rhs:
        return LESS
    if lhs == rhs:
        return EQUAL
    return GREATER
