"""Wirtinger derivatives, Laplacian, polyharmonic order, Almansi split.

The Laplacian is 4 * d/dz d/dzbar, acting termwise on the sparse
representation: 4*i*j * z^(i-1) * zbar^(j-1).  The least p with
laplacian(f, p) == 0 therefore has the closed form 1 + max(min(i, j))
over the support, which makes order detection exact and decidable.
"""

from .bipoly import AlmansiForm, BiPoly
from .bipoly import _raw as _raw_poly
from .errors import NonHarmonicComponent


def d_dz(f: BiPoly) -> BiPoly:
    """Formal d/dz: c * z^i * zbar^j -> c*i * z^(i-1) * zbar^j."""
    return _raw_poly(
        {(i - 1, j): c * i for (i, j), c in f.terms.items() if i >= 1}
    )


def d_dzbar(f: BiPoly) -> BiPoly:
    """Formal d/dzbar: c * z^i * zbar^j -> c*j * z^i * zbar^(j-1)."""
    return _raw_poly(
        {(i, j - 1): c * j for (i, j), c in f.terms.items() if j >= 1}
    )


def laplacian(f: BiPoly, times: int = 1) -> BiPoly:
    """Apply 4 * d/dz d/dzbar the given number of times (times >= 1)."""
    if not isinstance(times, int) or times < 1:
        raise ValueError("times must be a positive integer")
    out = f
    for _ in range(times):
        out = _raw_poly(
            {
                (i - 1, j - 1): c * (4 * i * j)
                for (i, j), c in out.terms.items()
                if i >= 1 and j >= 1
            }
        )
    return out


def polyharmonic_order(f: BiPoly) -> int:
    """Least p with laplacian(f, p) == 0; the zero mapping has order 0."""
    if f.is_zero:
        return 0
    return 1 + max(min(i, j) for i, j in f.terms)


def is_harmonic(f: BiPoly) -> bool:
    return polyharmonic_order(f) <= 1


def almansi_decompose(f: BiPoly) -> AlmansiForm:
    """Split f into harmonic components G_k with f = sum (z*zbar)^(k-1) G_k.

    Each monomial c * z^i * zbar^j with m = min(i, j) is routed to
    component G_(m+1) as c * z^(i-m) when i >= j and as c * zbar^(j-m)
    otherwise.  The component count equals the polyharmonic order.
    """
    order = polyharmonic_order(f)
    buckets: list[dict] = [{} for _ in range(order)]
    for (i, j), c in f.terms.items():
        m = min(i, j)
        key = (i - m, 0) if i >= j else (0, j - m)
        buckets[m][key] = c
    return AlmansiForm(tuple(_raw_poly(b) for b in buckets))


def almansi_recompose(form: AlmansiForm) -> BiPoly:
    """Evaluate sum_k (z*zbar)^(k-1) * G_k exactly.

    Raises NonHarmonicComponent if any component has a mixed monomial.
    """
    out: dict = {}
    for k, g in enumerate(form.components):
        for (i, j), c in g.terms.items():
            if min(i, j) >= 1:
                raise NonHarmonicComponent(
                    f"component {k + 1} contains the mixed monomial z^{i}*zbar^{j}"
                )
            out[(i + k, j + k)] = out.get((i + k, j + k), 0) + c
    return BiPoly(out)
