"""Normalized numerators of typical highest-weight characters.

For a typical dominant weight lambda with shifted weight eta = lambda + rho,
the normalized numerator is

    U(lambda) = sum over the even Weyl group of sign(w) X^(eta+ - w eta+),

where eta+ is the dominant representative of the orbit of eta and X records
exponents in the simple-root coordinates.  U has constant term 1 and, when
the diagram splits into components, factors as the product of the analogous
sums over the component subgroups.  The exponents of the lowest-degree
monomial of each factor recover the pairings of eta against that component's
simple roots, which is what makes the factors a complete isomorphism
invariant for typical modules.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NonIntegralExponent, NotDominant, NotTypical, UnsupportedCase
from .rootdata import Dominance, RootDatum, Weight, as_weight, vadd, vsub
from .series import (
    Mono,
    Poly,
    mono_degree,
    mono_from_pairs,
    mono_pow,
    weight_monomial,
)
from .weyl import component_group, full_group


def _dominant_representative(datum: RootDatum, eta: Weight) -> Weight:
    """Orbit element with strictly positive pairing against every generator.

    Such an element exists exactly when eta is regular for the even root
    system; a weight on a chamber wall has none and is rejected.
    """
    for w in full_group(datum).elements:
        image = w.act(eta)
        if all(
            datum.pairing(image, g.vector) > 0 for g in datum.generators
        ):
            return image
    raise NotDominant(
        "shifted weight lies on a wall of the even Weyl chambers"
    )


def _check_weight(datum: RootDatum, lam: Weight) -> Weight:
    lam = as_weight(lam)
    if not datum.atypicality(lam).is_typical:
        raise NotTypical(
            "weight pairs to zero with an isotropic odd root"
        )
    if datum.is_dominant_integral(lam) is Dominance.NO:
        raise NotDominant("weight fails the even dominance test")
    return lam


def _orbit_sum(datum: RootDatum, elements: Iterable, eta: Weight) -> Poly:
    """sum of sign(w) X^(eta - w eta) over the given group elements."""
    terms: dict[Mono, Fraction] = {}
    for w in elements:
        mono = weight_monomial(datum.expand_simple(vsub(eta, w.act(eta))))
        terms[mono] = terms.get(mono, Fraction(0)) + w.sign
    return Poly({m: c for m, c in terms.items() if c != 0})


def numerator(datum: RootDatum, lam: Weight) -> Poly:
    """Normalized numerator of the typical dominant weight ``lam``."""
    lam = _check_weight(datum, lam)
    eta_plus = _dominant_representative(datum, vadd(lam, datum.rho))
    poly = _orbit_sum(datum, full_group(datum).elements, eta_plus)
    assert poly.constant_term() == 1
    return poly


def factor_numerator(datum: RootDatum, lam: Weight) -> list[Poly]:
    """Component factors of the numerator, in diagram-component order.

    Requires every generator to be an even simple root when the diagram
    has two components; extra generators would break the product law.
    """
    total = numerator(datum, lam)
    comps = datum.components
    if len(comps) == 1:
        return [total]
    if any(g.pi_index is None for g in datum.generators):
        raise UnsupportedCase(
            "component factors need every generator to be a simple root"
        )
    # With no extra generators the shifted weight is already dominant.
    eta = vadd(as_weight(lam), datum.rho)
    factors = [
        _orbit_sum(datum, component_group(datum, k).elements, eta)
        for k in range(1, len(comps) + 1)
    ]
    product = factors[0]
    for factor in factors[1:]:
        product = product * factor
    assert product == total
    return factors


def x_signature(datum: RootDatum, lam: Weight) -> tuple[tuple[int, ...], ...]:
    """Pairings of lambda + rho against the even simple roots, by component."""
    eta = vadd(as_weight(lam), datum.rho)
    out: list[tuple[int, ...]] = []
    for comp in datum.components:
        sig: list[int] = []
        for pos in comp:
            val = datum.pairing(eta, datum.simple_roots[pos].vector)
            if val.denominator != 1:
                raise NonIntegralExponent(
                    f"pairing {val} at position {pos} is not an integer"
                )
            sig.append(int(val))
        out.append(tuple(sig))
    return tuple(out)


def x_lambda(datum: RootDatum, lam: Weight) -> Mono:
    """Monomial with exponent ``<lambda+rho, alpha>`` at each even position."""
    pairs: list[tuple[int, int]] = []
    for comp, sig in zip(datum.components, x_signature(datum, lam)):
        pairs.extend(zip(comp, sig))
    return mono_from_pairs(pairs)


def normalized_character(
    datum: RootDatum, lam: Weight, bound: int
) -> Poly:
    """Character of the typical module times X^(-lambda), up to degree ``bound``.

    Multiplies the numerator by the expanded Weyl denominator: a factor
    (1 + X^gamma) for each positive odd root and a geometric series
    1/(1 - X^alpha) for each positive even root.  All coefficients of the
    result are nonnegative integers (they count weight multiplicities).
    """
    result = numerator(datum, lam).truncate_x(bound)
    for root in datum.positive_odd:
        mono = weight_monomial(datum.expand_simple(root.vector))
        factor = Poly.one() + Poly.x_monomial(mono)
        result = result.mul_trunc(factor, bound)
    for root in datum.positive_even:
        mono = weight_monomial(datum.expand_simple(root.vector))
        step = max(1, mono_degree(mono))
        terms = {
            mono_pow(mono, j): Fraction(1)
            for j in range(0, bound // step + 1)
        }
        result = result.mul_trunc(Poly(terms), bound)
    return result
