"""Exact arithmetic for polynomial mappings of one complex variable.

A mapping f(z) = sum c_ij * z^i * zbar^j is stored sparsely as a map from
exponent pairs (i, j) to GaussianRational coefficients, with z and zbar
treated as independent formal variables.  Zero coefficients are never
stored, so two mappings are equal exactly when their term maps are equal.
|z|^(2k) is the term (k, k) with coefficient 1; the zero mapping is the
empty map, and its degrees are 0 by convention.

Every value is immutable after construction and every operation is a pure
function, so objects can be shared freely across workers.
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Rationalish = Union[int, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex scalar with rational real and imaginary parts.

    Fraction keeps both components in lowest terms with a positive
    denominator, so structural equality is exact value equality.
    """

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other) -> "GaussianRational":
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianRational":
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = _as_scalar(other)
        if other is None:
            return NotImplemented
        norm = other.abs2()
        if not norm:
            raise ZeroDivisionError("division by zero GaussianRational")
        return self * other.conjugate() * GaussianRational(Fraction(1, 1) / norm)

    def __pow__(self, n: int) -> "GaussianRational":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = GR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _as_scalar(value) -> "GaussianRational | None":
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value))
    return None


GR_ZERO = GaussianRational(Fraction(0))
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))


def unit_circle_point(t: Rationalish) -> GaussianRational:
    """Rational point ((1-t^2) + 2t*i)/(1+t^2) on the unit circle.

    |c| = 1 holds exactly for every rational t, which keeps unit-modulus
    constants inside the coefficient field.
    """
    t = Fraction(t)
    den = 1 + t * t
    return GaussianRational((1 - t * t) / den, 2 * t / den)


class BiPoly:
    """Sparse polynomial in z and zbar over GaussianRational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], GaussianRational] = {}
        for key, coeff in items:
            i, j = key
            if not (isinstance(i, int) and isinstance(j, int)) or i < 0 or j < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {key!r}")
            c = _as_scalar(coeff)
            if c is None:
                raise TypeError(f"coefficient must be rational-like, got {coeff!r}")
            prev = acc.get((i, j))
            c = c if prev is None else prev + c
            if c.is_zero:
                acc.pop((i, j), None)
            else:
                acc[(i, j)] = c
        self._terms = acc
        self._hash = None

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): GR_ONE})

    @classmethod
    def constant(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def z(cls) -> "BiPoly":
        return cls({(1, 0): GR_ONE})

    @classmethod
    def zbar(cls) -> "BiPoly":
        return cls({(0, 1): GR_ONE})

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "BiPoly":
        return cls({(i, j): coeff})

    @property
    def terms(self) -> Mapping[tuple[int, int], GaussianRational]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def deg_z(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    @property
    def deg_zbar(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def coefficient(self, i: int, j: int) -> GaussianRational:
        return self._terms.get((i, j), GR_ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "BiPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, GR_ZERO) + c
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        return _raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "BiPoly":
        return _raw({key: -c for key, c in self._terms.items()})

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _as_scalar(other)
            if c.is_zero:
                return BiPoly.zero()
            return _raw({key: coeff * c for key, coeff in self._terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = BiPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "BiPoly":
        """Swap z and zbar and conjugate every coefficient (an involution)."""
        return _raw({(j, i): c.conjugate() for (i, j), c in self._terms.items()})

    def compose(self, inner: "BiPoly") -> "BiPoly":
        """Substitute z -> inner and zbar -> conjugate(inner).

        This computes self(inner(z)), i.e. self applied after inner.
        """
        return compose(self, inner)

    def eval_exact(self, point: GaussianRational) -> GaussianRational:
        return eval_exact(self, point)

    def __str__(self) -> str:
        return canonical_print(self)

    def __repr__(self) -> str:
        return f"BiPoly({canonical_print(self)!r})"


def _raw(terms: dict) -> BiPoly:
    # Internal constructor for already-canonical term maps.
    p = BiPoly.__new__(BiPoly)
    p._terms = terms
    p._hash = None
    return p


def _as_poly(value) -> "BiPoly | None":
    if isinstance(value, BiPoly):
        return value
    c = _as_scalar(value)
    if c is None:
        return None
    return BiPoly.constant(c)


def mul(a: BiPoly, b: BiPoly) -> BiPoly:
    """Exact product; the result is in canonical sparse form."""
    if a.is_zero or b.is_zero:
        return BiPoly.zero()
    out: dict[tuple[int, int], GaussianRational] = {}
    for (i1, j1), c1 in a._terms.items():
        for (i2, j2), c2 in b._terms.items():
            key = (i1 + i2, j1 + j2)
            c = out.get(key)
            c = c1 * c2 if c is None else c + c1 * c2
            if c.is_zero:
                out.pop(key, None)
            else:
                out[key] = c
    return _raw(out)


def conjugate(f: BiPoly) -> BiPoly:
    return f.conjugate()


def compose(f: BiPoly, inner: BiPoly) -> BiPoly:
    """Exact substitution z -> inner, zbar -> conjugate(inner) in f."""
    if f.is_zero:
        return BiPoly.zero()
    inner_bar = inner.conjugate()
    pow_z = _powers(inner, f.deg_z)
    pow_zbar = _powers(inner_bar, f.deg_zbar)
    out = BiPoly.zero()
    for (i, j), c in f._terms.items():
        out = out + mul(pow_z[i], pow_zbar[j]) * c
    return out


def _powers(base: BiPoly, upto: int) -> list[BiPoly]:
    powers = [BiPoly.one()]
    for _ in range(upto):
        powers.append(mul(powers[-1], base))
    return powers


def eval_exact(f: BiPoly, point: GaussianRational) -> GaussianRational:
    """Evaluate with z = point and zbar = conjugate(point), exactly."""
    zbar = point.conjugate()
    pow_z = _scalar_powers(point, f.deg_z)
    pow_zbar = _scalar_powers(zbar, f.deg_zbar)
    total = GR_ZERO
    for (i, j), c in f._terms.items():
        total = total + c * pow_z[i] * pow_zbar[j]
    return total


def _scalar_powers(base: GaussianRational, upto: int) -> list[GaussianRational]:
    powers = [GR_ONE]
    for _ in range(upto):
        powers.append(powers[-1] * base)
    return powers


@dataclass(frozen=True)
class AlmansiForm:
    """Ordered harmonic components [G_1, ..., G_p].

    The represented mapping is sum_k (z*zbar)^(k-1) * G_k.  An empty tuple
    represents the zero mapping.
    """

    components: tuple[BiPoly, ...]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


# ---------------------------------------------------------------------------
# Canonical text form.  This is the interchange format for the CLI and the
# parser: terms sorted by (i+j, i) ascending, coefficients in lowest terms,
# and the minus sign of pure-real/pure-imaginary coefficients folded into
# the separator.  parse(canonical_print(f)) == f for every f.
# ---------------------------------------------------------------------------


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(c: GaussianRational) -> str:
    """Standalone text for an exact complex scalar, e.g. "1/2 + 3/4*i"."""
    if c.is_zero:
        return "0"
    if not c.im:
        return format_fraction(c.re)
    imag = "i" if abs(c.im) == 1 else f"{format_fraction(abs(c.im))}*i"
    if not c.re:
        return imag if c.im > 0 else f"-{imag}"
    sep = " + " if c.im > 0 else " - "
    return format_fraction(c.re) + sep + imag


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i == 1:
        parts.append("z")
    elif i > 1:
        parts.append(f"z^{i}")
    if j == 1:
        parts.append("zbar")
    elif j > 1:
        parts.append(f"zbar^{j}")
    return "*".join(parts)


def _term_text(i: int, j: int, c: GaussianRational) -> tuple[bool, str]:
    """Return (negative, magnitude_text) for one term."""
    mono = _monomial_text(i, j)
    if not mono:
        # Constant term: print the scalar as-is; a mixed scalar keeps its
        # own internal signs and always joins with " + ".
        if c.is_real or not c.re:
            negative = (c.re or c.im) < 0
            return negative, format_scalar(-c if negative else c)
        return False, format_scalar(c)
    if c.is_real:
        mag = abs(c.re)
        coeff = "" if mag == 1 else f"{format_fraction(mag)}*"
        return c.re < 0, coeff + mono
    if not c.re:
        mag = abs(c.im)
        coeff = "i*" if mag == 1 else f"{format_fraction(mag)}*i*"
        return c.im < 0, coeff + mono
    return False, f"({format_scalar(c)})*{mono}"


def canonical_print(f: BiPoly) -> str:
    """Deterministic text for f; the zero mapping prints as "0"."""
    if f.is_zero:
        return "0"
    pieces = []
    for (i, j) in sorted(f.terms, key=lambda key: (key[0] + key[1], key[0])):
        negative, text = _term_text(i, j, f.terms[(i, j)])
        if not pieces:
            pieces.append(("-" if negative else "") + text)
        else:
            pieces.append((" - " if negative else " + ") + text)
    return "".join(pieces)
