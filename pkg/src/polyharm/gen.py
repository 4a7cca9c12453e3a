"""Seeded, reproducible instance generators for the verification suites.

All randomness flows through a splitmix-style 64-bit stream driven by pure
integer arithmetic, so identical (seed, parameters) give identical output
on every platform.  Coefficient numerators and denominators are bounded
by 16 to keep exact arithmetic tame through degree-8 compositions.

Generated instances are never trusted by the suites: class membership is
re-verified through the classify/wirtinger oracles at the point of use.
"""

from fractions import Fraction

from .bipoly import BiPoly, GaussianRational

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

COEFF_LIMIT = 16


def _mix(x: int) -> int:
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def spawn(seed: int, index: int) -> int:
    """Derive an independent per-case seed from (seed, index)."""
    return _mix((_mix(seed & _MASK) + (index + 1) * _GAMMA) & _MASK)


class SplitMix64:
    """Deterministic 64-bit stream; the only randomness source in the package."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def fraction(self, limit: int = COEFF_LIMIT, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(self.between(-limit, limit), self.between(1, limit))
            if value or not nonzero:
                return value

    def coeff(self, limit: int = COEFF_LIMIT, nonzero: bool = False) -> GaussianRational:
        while True:
            re = self.fraction(limit)
            im = self.fraction(limit) if self.chance(1, 2) else Fraction(0)
            c = GaussianRational(re, im)
            if c or not nonzero:
                return c

    def unit(self) -> float:
        return self.next_u64() / float(1 << 64)


def gen_bipoly(seed: int, max_degree: int) -> BiPoly:
    """Random nonzero mapping with deg_z <= max_degree and deg_zbar <= max_degree."""
    rng = SplitMix64(seed)
    terms = {}
    for _ in range(rng.between(1, 8)):
        key = (rng.between(0, max_degree), rng.between(0, max_degree))
        terms[key] = rng.coeff(nonzero=True)
    return BiPoly(terms)


def gen_analytic(seed: int, max_degree: int, *, exact_degree: bool = False) -> BiPoly:
    """Random analytic polynomial; the leading coefficient is forced nonzero."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    rng = SplitMix64(seed)
    degree = max_degree if exact_degree else rng.between(0, max_degree)
    terms = {}
    for n in range(degree):
        if rng.chance(5, 8):
            terms[(n, 0)] = rng.coeff()
    terms[(degree, 0)] = rng.coeff(nonzero=True)
    return BiPoly(terms)


def gen_harmonic(
    seed: int,
    max_degree: int,
    *,
    both_parts_nonconstant: bool = False,
    nonzero: bool = False,
) -> BiPoly:
    """Random harmonic mapping h + conj(g) with h, g analytic.

    With both_parts_nonconstant=True, both h and g get degree >= 1, so the
    result is neither analytic nor anti-analytic.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    rng = SplitMix64(seed)
    if both_parts_nonconstant:
        top = max(1, max_degree)
        h = gen_analytic(rng.next_u64(), rng.between(1, top), exact_degree=True)
        g = gen_analytic(rng.next_u64(), rng.between(1, top), exact_degree=True)
    else:
        h = gen_analytic(rng.next_u64(), max_degree)
        g = gen_analytic(rng.next_u64(), max_degree)
    f = h + g.conjugate()
    if nonzero and f.is_zero:
        f = f + BiPoly.one()
    return f


def gen_strict_q_harmonic(seed: int, q: int, max_degree: int) -> BiPoly:
    """Random mapping of polyharmonic order exactly q (q >= 1).

    Built as sum_k (z*zbar)^(k-1) * G_k with harmonic G_k and G_q forced
    nonzero; the top Almansi component pins the order at q.
    """
    if not isinstance(q, int) or q < 1:
        raise ValueError("q must be a positive integer")
    rng = SplitMix64(seed)
    weight = BiPoly.monomial(1, 1)
    total = BiPoly.zero()
    for k in range(1, q):
        if rng.chance(3, 4):
            total = total + weight ** (k - 1) * gen_harmonic(rng.next_u64(), max_degree)
    total = total + weight ** (q - 1) * gen_harmonic(
        rng.next_u64(), max_degree, nonzero=True
    )
    return total
