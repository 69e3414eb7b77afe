"""Exact scalar fields: the rationals and simple extensions Q[z]/(m(z)).

Scalars are plain Python numbers whenever they are rational (``int`` or
``Fraction``) and :class:`ExtElement` otherwise.  An ``ExtElement`` always
has a nonzero coefficient in positive degree, so the representation of a
field element is canonical and ``==``/``hash`` agree across the two kinds.
Floats are rejected everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction, "ExtElement"]


class FieldError(ValueError):
    pass


class FieldMismatch(FieldError):
    pass


class ScalarParseError(FieldError):
    pass


def _rat(x) -> Union[int, Fraction]:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _rat(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    """Division of rational polynomials, coefficients low to high."""
    a = list(a)
    b = _poly_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
        a.pop()
    return _poly_trim(q), a


@dataclass(frozen=True)
class FieldSpec:
    """An exact field: ``rationals`` or ``extension`` by a monic modulus.

    ``modulus`` holds rational coefficients from low to high degree and
    its leading coefficient is 1.  ``irreducibility`` records how the
    modulus was vetted: ``"checked"``, ``"known"`` (e.g. cyclotomic), or
    ``"unchecked"``; reports carry it verbatim.
    """

    kind: str = "rationals"
    modulus: tuple = ()
    generator: str = "z"
    irreducibility: str = field(default="known", compare=False)

    def __post_init__(self):
        if self.kind == "rationals":
            if self.modulus:
                raise FieldError("rationals carry no modulus")
            return
        if self.kind != "extension":
            raise FieldError(f"unknown field kind {self.kind!r}")
        mod = tuple(_rat(c) for c in self.modulus)
        if len(mod) < 2:
            raise FieldError("extension modulus must have degree >= 1")
        if mod[-1] != 1:
            raise FieldError("extension modulus must be monic")
        object.__setattr__(self, "modulus", mod)
        if not re.fullmatch(r"[A-Za-z_]\w*", self.generator):
            raise FieldError(f"bad generator name {self.generator!r}")

    @classmethod
    def extension(cls, modulus, generator: str = "z", check_irreducible: bool = True) -> "FieldSpec":
        mod = tuple(_rat(c) for c in modulus)
        status = "unchecked"
        if check_irreducible and len(mod) > 2:
            if not is_irreducible(mod):
                raise FieldError(f"modulus {mod} is reducible over the rationals")
            status = "checked"
        elif len(mod) == 2:
            status = "checked"
        return cls("extension", mod, generator, status)

    @property
    def degree(self) -> int:
        return 1 if self.kind == "rationals" else len(self.modulus) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @cached_property
    def _reductions(self) -> list:
        # z^k reduced mod the modulus for deg <= k <= 2*deg - 2
        n = self.degree
        neg = [-c for c in self.modulus[:-1]]
        red = []
        cur = neg
        for _ in range(max(n - 1, 1)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c + top * m for c, m in zip(cur, neg)]
        return red

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    @property
    def gen(self) -> Scalar:
        if self.kind == "rationals":
            raise FieldError("the rationals have no extension generator")
        return self.element([0, 1])

    def element(self, coeffs) -> Scalar:
        """Build the field element sum coeffs[k] z^k, reducing mod the modulus."""
        cs = [_rat(c) for c in coeffs]
        if self.kind == "rationals":
            if any(cs[1:]):
                raise FieldError("rationals have no generator")
            return cs[0] if cs else 0
        return _canon(self, _reduce(self, cs))

    def coerce(self, x) -> Scalar:
        if isinstance(x, ExtElement):
            if x.field != self:
                raise FieldMismatch(f"element of {x.field.describe()} used in {self.describe()}")
            return x
        if isinstance(x, str):
            return parse_scalar(x, self)
        if isinstance(x, float):
            raise TypeError("floating point scalars are not allowed")
        return _rat(x)

    def coeffs(self, x) -> tuple:
        """Coefficient tuple of length ``degree`` (low to high)."""
        x = self.coerce(x)
        if isinstance(x, ExtElement):
            return x.coeffs
        return (x,) + (0,) * (self.degree - 1)

    def describe(self) -> dict:
        if self.kind == "rationals":
            return {"kind": "rationals"}
        return {
            "kind": "extension",
            "modulus": [str(c) for c in self.modulus],
            "generator": self.generator,
            "irreducibility": self.irreducibility,
        }

    def format(self, x) -> str:
        return format_scalar(self.coerce(x), self)


RATIONALS = FieldSpec()


def _reduce(fld: FieldSpec, cs: list) -> tuple:
    n = fld.degree
    out = list(cs[:n]) + [0] * max(0, n - len(cs))
    high = cs[n:]
    if high:
        red = fld._reductions
        if len(high) > len(red):
            # long input: fall back to polynomial division
            _, r = _poly_divmod(cs, fld.modulus)
            r = [_rat(c) for c in r]
            return tuple(r + [0] * (n - len(r)))
        for c, row in zip(high, red):
            if c:
                for k, m in enumerate(row):
                    if m:
                        out[k] += c * m
    return tuple(_rat(c) for c in out)


def _canon(fld: FieldSpec, cs: tuple) -> Scalar:
    if not any(cs[1:]):
        return cs[0]
    return ExtElement(fld, cs)


class ExtElement:
    """Element of Q[z]/(m) with a nonzero coefficient in positive degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: FieldSpec, coeffs: tuple):
        self.field = fld
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, ExtElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("arithmetic across different fields")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (other,) + (0,) * (len(self.coeffs) - 1)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _canon(self.field, tuple(_rat(a + b) for a, b in zip(self.coeffs, o)))

    __radd__ = __add__

    def __neg__(self):
        return ExtElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _canon(self.field, tuple(_rat(a - b) for a, b in zip(self.coeffs, o)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return _canon(self.field, tuple(_rat(b - a) for a, b in zip(self.coeffs, o)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return 0
            return ExtElement(self.field, tuple(_rat(a * other) for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a = self.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(o):
                    if y:
                        prod[i + j] += x * y
        return _canon(self.field, _reduce(self.field, prod))

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        # extended Euclid on (self, modulus)
        r0, r1 = list(self.field.modulus), list(self.coeffs)
        s0, s1 = [0], [1]
        _poly_trim(r1)
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            prod = _poly_mul(q, s1)
            s2 = [(s0[k] if k < len(s0) else 0) - (prod[k] if k < len(prod) else 0)
                  for k in range(max(len(s0), len(prod)))]
            r0, r1 = r1, _poly_trim(r)
            s0, s1 = s1, _poly_trim(s2) or [0]
        if not r1:
            raise ZeroDivisionError("modulus is reducible: zero divisor encountered")
        c = Fraction(1) / r1[0]
        return self.field.element([x * c for x in s1])

    def __truediv__(self, other):
        return self * inv(other)

    def __rtruediv__(self, other):
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = 1, self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return True

    def __repr__(self):
        return f"ExtElement({format_scalar(self, self.field)!r})"

    def __str__(self):
        return format_scalar(self, self.field)


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1) if a and b else [0]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def inv(x) -> Scalar:
    """Multiplicative inverse of a nonzero scalar (never a float)."""
    if isinstance(x, ExtElement):
        return x.inverse()
    if not x:
        raise ZeroDivisionError("inverse of zero")
    return _rat(Fraction(1) / x)


def div(a, b) -> Scalar:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return _rat(Fraction(a) / b)
    return a * inv(b)


# ---------------------------------------------------------------- text form

_TERM = re.compile(
    r"\s*([+-])?\s*"
    r"(?:(\d+)(?:\s*/\s*(\d+))?)?"
    r"\s*(\*)?\s*"
    r"(?:([A-Za-z_]\w*)(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_scalar(text: str, fld: FieldSpec = RATIONALS) -> Scalar:
    """Parse ``"3"``, ``"-2/4"``, or a polynomial such as ``"1/2*z^2 - z + 1"``."""
    if not isinstance(text, str):
        raise ScalarParseError(f"scalar must be a string, got {type(text).__name__}")
    s = text.strip()
    if not s:
        raise ScalarParseError("empty scalar")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, num, den, star, var, power = m.groups()
        if m.end() == pos or (num is None and var is None):
            raise ScalarParseError(f"cannot parse scalar {text!r} at position {pos}")
        if sign is None and not first:
            raise ScalarParseError(f"missing operator in {text!r} at position {pos}")
        if star and (num is None or var is None):
            raise ScalarParseError(f"dangling '*' in {text!r}")
        if num is not None and var is not None and not star:
            raise ScalarParseError(f"expected '*' between coefficient and {var!r} in {text!r}")
        if den is not None and int(den) == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        c = Fraction(int(num), int(den) if den else 1) if num is not None else Fraction(1)
        if sign == "-":
            c = -c
        deg = 0
        if var is not None:
            if fld.kind == "rationals" or var != fld.generator:
                raise ScalarParseError(f"unknown symbol {var!r} in {text!r}")
            deg = int(power) if power is not None else 1
        elif power is not None:
            raise ScalarParseError(f"exponent without generator in {text!r}")
        coeffs[deg] = coeffs.get(deg, 0) + c
        pos = m.end()
        first = False
    top = max(coeffs)
    return fld.element([coeffs.get(k, 0) for k in range(top + 1)])


def _frac_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_scalar(x, fld: FieldSpec = RATIONALS) -> str:
    """Canonical text form; round-trips through :func:`parse_scalar`."""
    if not isinstance(x, ExtElement):
        return _frac_str(x)
    parts = []
    for k in range(len(x.coeffs) - 1, -1, -1):
        c = Fraction(x.coeffs[k])
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _frac_str(a)
        else:
            mono = fld.generator if k == 1 else f"{fld.generator}^{k}"
            body = mono if a == 1 else f"{_frac_str(a)}*{mono}"
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ------------------------------------------------------------- constructors

def cyclotomic_polynomial(n: int) -> tuple:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, r = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            assert not _poly_trim(r)
    return tuple(_rat(c) for c in num)


def cyclotomic_field(n: int) -> FieldSpec:
    """Q(zeta_n); for n <= 2 this is the rationals."""
    if n <= 2:
        return RATIONALS
    return FieldSpec("extension", cyclotomic_polynomial(n), "z", "known")


def primitive_root(fld: FieldSpec, n: int) -> Scalar:
    """A primitive n-th root of unity in ``fld`` (generator for cyclotomic fields)."""
    candidates = []
    if n == 1:
        return 1
    if n == 2:
        return -1
    if fld.kind == "extension":
        z = fld.gen
        candidates = [z ** k for k in range(1, 2 * fld.degree + 1)]
        candidates += [-c for c in candidates]
    for c in candidates:
        if is_primitive_root(c, n):
            return c
    raise FieldError(f"no primitive {n}-th root of unity found in {fld.describe()}")


def is_primitive_root(zeta, n: int) -> bool:
    p = 1
    for k in range(1, n + 1):
        p = p * zeta
        if p == 1:
            return k == n
    return False


def is_irreducible(modulus) -> bool:
    """Irreducibility over Q, delegated to sympy's factorization."""
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(Fraction(c).numerator, Fraction(c).denominator)
                       for c in reversed(modulus)], x, domain="QQ")
    return bool(poly.is_irreducible)
