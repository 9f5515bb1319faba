"""Normalized numerators and matching for singly atypical weights.

A dominant integral weight lambda is singly atypical of type gamma when
exactly one isotropic positive odd root gamma pairs to zero against
lambda + rho.  For sl(m+1, n+1), osp(2, 2n), G(3), and F(4) such weights
carry the normalized numerator

    U(lambda) = sum over w in the Weyl group of Pi_0 of
                sign(w) * X^(w(lambda+rho) - (lambda+rho)) / (1 + Z_{w gamma})

where Z_delta is a formal symbol for each positive odd root delta and the
denominator is expanded as a truncated geometric series.  The flagged
special weights of G(3) and F(4) replace the rational prefactor by
(2 + Z_{w gamma}) / (2 (1 + Z_{w gamma})).

The central quantity is the coefficient of the monomial
X^lambda = prod X_alpha^<lambda+rho, alpha> (alpha over Pi_0) in the
formal series -log U(lambda).  This module computes it three ways: a
brute-force series oracle, a direct enumeration over graph partitions of
Pi_0, and the closed forms (a ratio driven by the reflections moving
gamma, the two-term forms for G(3) and F(4), and the alternating A-sum
over partition counts for sl(m+1, n+1) with interior type).  Products of
the numerators are compared factor by factor to test unique factorization
of tensor products of singly atypical modules of one common type.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    IndexOutOfRange,
    MixedAtypicalityTypes,
    NotDominant,
    NotSinglyAtypical,
    TruncationTooSmall,
    UnsupportedCase,
    WrongFamily,
)
from .numerator import x_lambda, x_signature
from .partitions import graph_of_datum, iter_ordered_partitions, k_partition_counts, tree_graph_gpq
from .rootdata import (
    Dominance,
    Generator,
    Root,
    RootDatum,
    Weight,
    as_weight,
    vadd,
    vscale,
    vsub,
)
from .series import Mono, Poly, ZSeries, mono_degree, neg_log, weight_monomial
from .unifac import Conclusion, FactorMatch, MatchReport
from .weyl import pi0_group

ATYPICAL_FAMILIES = ("sl", "osp", "G3", "F4")
DEFAULT_Z_TRUNCATION = 3


@dataclass(frozen=True)
class AtypicalContext:
    """A validated singly atypical weight with its series truncation.

    ``gamma`` is the atypicality type, ``gamma_index`` its position among
    the positive odd roots (the index of its Z symbol).  ``special`` marks
    the two flagged weights of G(3) and F(4) whose numerator carries the
    modified prefactor; the flag is taken on trust and never inferred.
    """

    datum: RootDatum
    lam: Weight
    gamma: Root
    gamma_index: int
    special: bool
    z_truncation: int

    def __post_init__(self):
        datum = self.datum
        if datum.family not in ATYPICAL_FAMILIES:
            raise WrongFamily(
                f"family {datum.family!r} has no singly atypical theory here; "
                f"expected one of {ATYPICAL_FAMILIES}"
            )
        if self.special and datum.family not in ("G3", "F4"):
            raise WrongFamily(
                "special weights exist only for G(3) and F(4)"
            )
        if self.z_truncation < 0:
            raise TruncationTooSmall(
                f"z truncation must be >= 0, got {self.z_truncation}"
            )
        if datum.is_dominant_integral(self.lam) is Dominance.NO:
            raise NotDominant(
                "weight fails the even dominance conditions"
            )
        vanishing = datum.atypicality(self.lam).vanishing
        if len(vanishing) != 1:
            raise NotSinglyAtypical(
                f"weight has {len(vanishing)} vanishing odd pairings; need exactly 1"
            )
        if vanishing[0] != self.gamma_index:
            raise NotSinglyAtypical(
                f"weight has atypicality type index {vanishing[0]}, "
                f"context claims {self.gamma_index}"
            )
        if datum.positive_odd[self.gamma_index] is not self.gamma:
            raise IndexOutOfRange(
                "gamma is not the positive odd root at gamma_index"
            )


def atypical_context(
    datum: RootDatum,
    lam: Weight,
    special: bool = False,
    z_truncation: int = DEFAULT_Z_TRUNCATION,
) -> AtypicalContext:
    """Build a context for ``lam``, reading off its atypicality type."""
    lam = as_weight(lam)
    if datum.family not in ATYPICAL_FAMILIES:
        raise WrongFamily(
            f"family {datum.family!r} has no singly atypical theory here; "
            f"expected one of {ATYPICAL_FAMILIES}"
        )
    vanishing = datum.atypicality(lam).vanishing
    if len(vanishing) != 1:
        raise NotSinglyAtypical(
            f"weight has {len(vanishing)} vanishing odd pairings; need exactly 1"
        )
    idx = vanishing[0]
    return AtypicalContext(
        datum=datum,
        lam=lam,
        gamma=datum.positive_odd[idx],
        gamma_index=idx,
        special=special,
        z_truncation=z_truncation,
    )


@dataclass(frozen=True)
class CoefficientValue:
    """A truncated coefficient series with its provenance.

    ``tag`` names the closed form used ("K-ratio", "M-form", "A-sum",
    "enumeration") or is ``None`` for the brute-force oracle.  ``params``
    records the ingredients of the closed form so the value can be
    reconstructed by hand.
    """

    value: ZSeries
    tag: str | None = None
    params: Mapping[str, object] = field(default_factory=dict)


def shift_to_type(datum: RootDatum, lam: Weight, odd_index: int) -> Weight:
    """Translate ``lam`` along the odd-root sum so the chosen pairing vanishes.

    The sum of positive odd roots is orthogonal to every even simple root,
    so the shift keeps the even dominance pairings intact while moving
    (lam + rho, gamma) to zero for gamma at ``odd_index``.  Whether the
    result is singly atypical still depends on the other odd pairings.
    """
    lam = as_weight(lam)
    if not 0 <= odd_index < len(datum.positive_odd):
        raise IndexOutOfRange(f"odd root index {odd_index} out of range")
    gamma = datum.positive_odd[odd_index]
    if not gamma.isotropic:
        raise NotSinglyAtypical(
            "atypicality is defined against isotropic roots only"
        )
    denom = datum.inner(datum.tau, gamma.vector)
    if denom == 0:
        raise UnsupportedCase(
            "the odd-root sum is orthogonal to this root; no shift can reach it"
        )
    t = -datum.inner(vadd(lam, datum.rho), gamma.vector) / denom
    return vadd(lam, vscale(t, datum.tau))


# -- shared machinery -------------------------------------------------------


def _pi0(datum: RootDatum):
    group = getattr(datum, "_pi0_cache", None)
    if group is None:
        group = pi0_group(datum)
        datum._pi0_cache = group
    return group


def _odd_lookup(datum: RootDatum) -> dict[Weight, int]:
    table = getattr(datum, "_odd_lookup_cache", None)
    if table is None:
        table = {r.vector: i for i, r in enumerate(datum.positive_odd)}
        datum._odd_lookup_cache = table
    return table


def _positive_odd_index(datum: RootDatum, vector: Weight) -> int:
    idx = _odd_lookup(datum).get(vector)
    # The even Weyl group of Pi_0 must keep the type inside the positive
    # odd roots; leaving them would silently corrupt every Z symbol.
    assert idx is not None, (
        f"image {vector} of the atypicality type is not a positive odd root"
    )
    return idx


def _reflect(datum: RootDatum, alpha: Weight, v: Weight) -> Weight:
    return vsub(v, vscale(datum.pairing(v, alpha), alpha))


def _one_plus(idx: int, trunc: int) -> ZSeries:
    return ZSeries.one(trunc) + ZSeries.var(idx, trunc)


def _two_plus(idx: int, trunc: int) -> ZSeries:
    return ZSeries.constant(2, trunc) + ZSeries.var(idx, trunc)


def _prefactor(ctx: AtypicalContext, idx: int) -> ZSeries:
    """Expansion of the rational coefficient attached to one group element."""
    t = ctx.z_truncation
    if ctx.special:
        return _two_plus(idx, t) * _one_plus(idx, t).inverse() * ZSeries.constant(Fraction(1, 2), t)
    return _one_plus(idx, t).inverse()


def atypical_numerator(ctx: AtypicalContext) -> Poly:
    """The normalized numerator U(lambda) with truncated series coefficients.

    One term per element of the Weyl group of Pi_0: the X monomial records
    the drop of lambda + rho, the coefficient is the expanded prefactor in
    the Z symbol of the transported type.
    """
    datum = ctx.datum
    eta = vadd(ctx.lam, datum.rho)
    terms: dict[Mono, ZSeries] = {}
    prefactors: dict[int, ZSeries] = {}
    for w in _pi0(datum):
        idx = _positive_odd_index(datum, w.act(ctx.gamma.vector))
        if idx not in prefactors:
            prefactors[idx] = _prefactor(ctx, idx)
        mono = weight_monomial(datum.expand_simple(vsub(eta, w.act(eta))))
        coeff = prefactors[idx].scale(w.sign)
        terms[mono] = terms[mono] + coeff if mono in terms else coeff
    return Poly(terms, ctx.z_truncation)


def coefficient_oracle(ctx: AtypicalContext) -> CoefficientValue:
    """Coefficient of X^lambda in -log U(lambda), by direct expansion.

    Multiplies U by the inverse of its constant coefficient so the series
    logarithm applies, then reads off the target monomial.  No closed form
    is consulted; this is the reference the closed forms are tested against.
    """
    t = ctx.z_truncation
    u = atypical_numerator(ctx)
    gi = ctx.gamma_index
    if ctx.special:
        normalizer = _one_plus(gi, t) * _two_plus(gi, t).inverse() * ZSeries.constant(2, t)
    else:
        normalizer = _one_plus(gi, t)
    target = x_lambda(ctx.datum, ctx.lam)
    series = neg_log(u.scale(normalizer), mono_degree(target) + 1)
    return CoefficientValue(
        value=series.coefficient(target),
        tag=None,
        params={"target_degree": mono_degree(target)},
    )


# -- closed forms ------------------------------------------------------------


def _movers(datum: RootDatum, gamma: Root) -> list[Generator]:
    """Diagram generators not orthogonal to gamma; only these enter the forms."""
    return [
        g
        for g in datum.generators
        if g.pi_index is not None and datum.inner(g.vector, gamma.vector) != 0
    ]


def _k_ratio(ctx: AtypicalContext) -> CoefficientValue:
    """K * (1 + Z_gamma)^d / prod (1 + Z_{s gamma}) over the d reflections moving gamma.

    K is the alternating partition number of the Pi_0 graph.  Valid for the
    one-sided special linear family and osp(2, 2n), where the generators
    moving gamma are pairwise adjacent in the diagram.
    """
    datum = ctx.datum
    t = ctx.z_truncation
    kval = k_partition_counts(graph_of_datum(datum)).k_value
    movers = _movers(datum, ctx.gamma)
    value = ZSeries.constant(kval, t)
    image_indices = []
    for g in movers:
        image = _reflect(datum, g.vector, ctx.gamma.vector)
        idx = _positive_odd_index(datum, image)
        image_indices.append(idx)
        value = value * _one_plus(ctx.gamma_index, t) * _one_plus(idx, t).inverse()
    return CoefficientValue(
        value=value,
        tag="K-ratio",
        params={
            "k_pi0": kval,
            "type_index": ctx.gamma_index,
            "image_indices": tuple(image_indices),
        },
    )


def _m_form(ctx: AtypicalContext) -> CoefficientValue:
    """Two-term closed forms for G(3) and F(4), generic and special.

    For G(3) the two-element Pi_0 admits only 2-partitions; for F(4) the
    3-partitions and the single 2-partition pairing the two orthogonal
    simple roots contribute with opposite signs.
    """
    datum = ctx.datum
    t = ctx.z_truncation
    gi = ctx.gamma_index
    simples = [g for g in datum.generators if g.pi_index is not None]
    images = [
        _positive_odd_index(datum, _reflect(datum, g.vector, ctx.gamma.vector))
        for g in simples
    ]

    def block(idx: int) -> ZSeries:
        # one factor of the partition product, generic or special
        if ctx.special:
            m = _one_plus(gi, t) * _two_plus(gi, t).inverse()
            return m * _two_plus(idx, t) * _one_plus(idx, t).inverse()
        return _one_plus(gi, t) * _one_plus(idx, t).inverse()

    if len(simples) == 2:
        value = block(images[0]) * block(images[1])
        params = {"image_indices": tuple(images), "special": ctx.special}
        return CoefficientValue(value=value, tag="M-form", params=params)

    if len(simples) != 3:
        raise UnsupportedCase(
            f"two-term closed form needs 2 or 3 simple even roots, found {len(simples)}"
        )
    pairs = [
        (i, j)
        for i, j in itertools.combinations(range(3), 2)
        if datum.inner(simples[i].vector, simples[j].vector) == 0
    ]
    if len(pairs) != 1:
        raise UnsupportedCase(
            "expected exactly one orthogonal pair among the even simple roots"
        )
    i, j = pairs[0]
    k = ({0, 1, 2} - {i, j}).pop()
    fused = _reflect(
        datum, simples[j].vector, _reflect(datum, simples[i].vector, ctx.gamma.vector)
    )
    fused_idx = _positive_odd_index(datum, fused)
    triple = block(images[0]) * block(images[1]) * block(images[2])
    double = block(fused_idx) * block(images[k])
    value = triple.scale(2) - double
    params = {
        "image_indices": tuple(images),
        "orthogonal_pair": (i, j),
        "fused_index": fused_idx,
        "special": ctx.special,
    }
    return CoefficientValue(value=value, tag="M-form", params=params)


def _block_images(
    datum: RootDatum, gamma: Root, movers: Iterable
) -> dict[int, Weight]:
    """Change of gamma under each moving generator, keyed by diagram position."""
    out: dict[int, Weight] = {}
    for g in movers:
        pos = datum.even_positions[g.gid]
        out[pos] = vsub(_reflect(datum, g.vector, gamma.vector), gamma.vector)
    return out


def _partition_factor(
    ctx: AtypicalContext, deltas: Mapping[int, Weight], block: Sequence[int]
) -> ZSeries | None:
    """Series factor of one partition block; None when the block fixes gamma."""
    moved = [deltas[v] for v in block if v in deltas]
    if not moved:
        return None
    image = ctx.gamma.vector
    for d in moved:
        image = vadd(image, d)
    idx = _positive_odd_index(ctx.datum, image)
    t = ctx.z_truncation
    if ctx.special:
        m = _one_plus(ctx.gamma_index, t) * _two_plus(ctx.gamma_index, t).inverse()
        return m * _two_plus(idx, t) * _one_plus(idx, t).inverse()
    return _one_plus(ctx.gamma_index, t) * _one_plus(idx, t).inverse()


def enumeration_coefficient(ctx: AtypicalContext) -> CoefficientValue:
    """Coefficient of X^lambda by summing over all ordered graph partitions.

    Every ordered k-partition of the Pi_0 graph contributes
    (-1)^(|Pi_0| + k) / k times the product of its block factors; blocks
    that fix gamma contribute exactly 1.  Works for every covered family
    and type, interior or boundary, and serves as the fallback closed form.
    """
    datum = ctx.datum
    graph = graph_of_datum(datum)
    total = len(graph)
    deltas = _block_images(datum, ctx.gamma, _movers(datum, ctx.gamma))
    t = ctx.z_truncation
    factor_cache: dict[frozenset[int], ZSeries | None] = {}
    acc = ZSeries.zero(t)
    for k in range(1, total + 1):
        sign = Fraction((-1) ** (total + k), k)
        for part in iter_ordered_partitions(graph, k):
            term = ZSeries.constant(sign, t)
            for block in part:
                key = frozenset(v for v in block if v in deltas)
                if key not in factor_cache:
                    factor_cache[key] = _partition_factor(ctx, deltas, tuple(key))
                factor = factor_cache[key]
                if factor is not None:
                    term = term * factor
            acc = acc + term
    return CoefficientValue(
        value=acc,
        tag="enumeration",
        params={"vertex_count": total, "mover_positions": tuple(sorted(deltas))},
    )


def _a_sum(ctx: AtypicalContext) -> CoefficientValue:
    """Alternating sum over partition counts for the interior two-chain case.

    The four generators moving gamma split two blocks, three blocks, or
    four blocks of a partition.  Within each block count the split
    patterns occur equally often, so the sum collapses to three counted
    families of series; the counts are checked against the plain partition
    numbers of the diagram graph.
    """
    datum = ctx.datum
    t = ctx.z_truncation
    graph = graph_of_datum(datum)
    total = len(graph)
    movers = _movers(datum, ctx.gamma)
    deltas = _block_images(datum, ctx.gamma, movers)
    comp_one = set(datum.components[0])
    alphas = sorted(p for p in deltas if p in comp_one)
    betas = sorted(p for p in deltas if p not in comp_one)
    if len(alphas) != 2 or len(betas) != 2:
        raise UnsupportedCase(
            "interior closed form needs two moving generators on each chain"
        )

    def grouping_key(groups: Iterable[Iterable[int]]) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(g) for g in groups)

    # the seven ways the four movers can split across independent blocks
    pair_patterns = [
        grouping_key([(alphas[0], betas[0]), (alphas[1], betas[1])]),
        grouping_key([(alphas[0], betas[1]), (alphas[1], betas[0])]),
    ]
    triple_patterns = [
        grouping_key([(a, b), (other_a,), (other_b,)])
        for a, other_a in ((alphas[0], alphas[1]), (alphas[1], alphas[0]))
        for b, other_b in ((betas[0], betas[1]), (betas[1], betas[0]))
    ]
    quad_pattern = grouping_key([(p,) for p in deltas])

    def expression(pattern: frozenset[frozenset[int]]) -> ZSeries:
        value = ZSeries.one(t)
        for group in pattern:
            factor = _partition_factor(ctx, deltas, tuple(group))
            assert factor is not None
            value = value * factor
        return value

    f_sum = expression(pair_patterns[0]) + expression(pair_patterns[1])
    g_sum = ZSeries.zero(t)
    for pat in triple_patterns:
        g_sum = g_sum + expression(pat)
    h_expr = expression(quad_pattern)

    plain_counts = k_partition_counts(graph).counts
    r_two: list[int] = []
    r_three: list[int] = []
    r_four: list[int] = []
    acc = ZSeries.zero(t)
    for k in range(2, total + 1):
        tallies: dict[frozenset[frozenset[int]], int] = {}
        for part in iter_ordered_partitions(graph, k):
            key = grouping_key(
                [g for g in (tuple(v for v in block if v in deltas) for block in part) if g]
            )
            tallies[key] = tallies.get(key, 0) + 1
        pair_counts = [tallies.get(p, 0) for p in pair_patterns]
        triple_counts = [tallies.get(p, 0) for p in triple_patterns]
        quad_count = tallies.get(quad_pattern, 0)
        # the split patterns within one shape must occur equally often
        assert pair_counts[0] == pair_counts[1], pair_counts
        assert len(set(triple_counts)) == 1, triple_counts
        covered = 2 * pair_counts[0] + 4 * triple_counts[0] + quad_count
        assert covered == plain_counts[k - 1], (k, covered, plain_counts)
        r_two.append(pair_counts[0])
        r_three.append(triple_counts[0])
        r_four.append(quad_count)
        sign = Fraction((-1) ** (total + k), k)
        term = (
            f_sum.scale(pair_counts[0])
            + g_sum.scale(triple_counts[0])
            + h_expr.scale(quad_count)
        )
        acc = acc + term.scale(sign)
    return CoefficientValue(
        value=acc,
        tag="A-sum",
        params={
            "r2": tuple(r_two),
            "r3": tuple(r_three),
            "r4": tuple(r_four),
            "k_start": 2,
        },
    )


def closed_form_coefficient(ctx: AtypicalContext) -> CoefficientValue:
    """Dispatch to the closed form covering this family and atypicality type.

    One-sided special linear and osp(2, 2n) take the moving-reflection
    ratio; G(3) and F(4) take the two-term form; the two-chain special
    linear family takes the interior alternating sum when all four
    neighboring generators exist and falls back to direct enumeration on
    boundary types.
    """
    datum = ctx.datum
    if datum.family == "osp":
        return _k_ratio(ctx)
    if datum.family in ("G3", "F4"):
        return _m_form(ctx)
    if datum.family == "sl":
        if len(datum.components) == 1:
            return _k_ratio(ctx)
        if len(_movers(datum, ctx.gamma)) == 4:
            return _a_sum(ctx)
        return enumeration_coefficient(ctx)
    raise WrongFamily(
        f"no closed form for family {datum.family!r}"
    )


def coefficient_f1(datum: RootDatum, p: int, q: int) -> Fraction:
    """Coefficient of the leading pattern in the interior alternating sum.

    Counts, for each k, the ordered k-partitions of the diagram graph that
    keep both distinguished generator pairs together, and folds them into
    the alternating sum.  The same number is the alternating partition
    value of the fused tree graph; the two routes are compared and the
    common value, always 1 for a tree, is returned.
    """
    fused = tree_graph_gpq(datum, p, q)
    tree_value = k_partition_counts(fused).k_value
    tree_counts = k_partition_counts(fused).counts

    graph = graph_of_datum(datum)
    total = len(graph)
    comps = datum.components
    pair_one = {comps[0][p - 2], comps[1][q - 2]}
    pair_two = {comps[0][p - 1], comps[1][q - 1]}
    members = pair_one | pair_two
    acc = Fraction(0)
    for k in range(2, total + 1):
        count = 0
        for part in iter_ordered_partitions(graph, k):
            groups = [set(block) & members for block in part]
            groups = [g for g in groups if g]
            if len(groups) == 2 and pair_one in groups and pair_two in groups:
                count += 1
        expected = tree_counts[k - 1] if k <= len(tree_counts) else 0
        # the pair-preserving partitions are exactly those of the fused tree
        assert count == expected, (k, count, expected)
        acc += Fraction((-1) ** k, k) * count
    direct = Fraction((-1) ** total) * acc
    assert direct == tree_value == 1, (direct, tree_value)
    return direct


def compare_values(a: CoefficientValue, b: CoefficientValue) -> bool:
    """Exact equality of two coefficient series.

    The series only carry information up to their truncation order, so
    comparing values computed at different truncations is refused rather
    than answered on the overlap.
    """
    if a.value.trunc != b.value.trunc:
        raise TruncationTooSmall(
            f"cannot compare truncation {a.value.trunc} against {b.value.trunc}; "
            "requested comparisons exceed the common truncation"
        )
    return a.value == b.value


# -- product matching --------------------------------------------------------


def _flat_signature(datum: RootDatum, lam: Weight) -> tuple[int, ...]:
    return tuple(v for comp in x_signature(datum, lam) for v in comp)


def atypical_match(
    datum: RootDatum,
    lhs: Sequence[Weight],
    rhs: Sequence[Weight],
    gamma: Root | Weight,
    z_truncation: int = DEFAULT_Z_TRUNCATION,
) -> MatchReport:
    """Compare products of singly atypical numerators of one common type.

    Every weight must be singly atypical of type ``gamma``; a different
    type anywhere is rejected, because numerators of different types carry
    different Z symbols and their equality says nothing about the weights.
    Factors are paired by their even pairing signature, which determines
    the numerator and the weight.  Equal products with a complete pairing
    conclude unique factorization; everything else reports the products as
    unequal.
    """
    gamma_vector = gamma.vector if isinstance(gamma, Root) else as_weight(gamma)
    type_index = _odd_lookup(datum).get(gamma_vector)
    if type_index is None:
        raise IndexOutOfRange(
            "gamma is not a positive odd root of this datum"
        )
    if not datum.positive_odd[type_index].isotropic:
        raise NotSinglyAtypical(
            "atypicality types are isotropic; this root is not"
        )

    def contexts(weights: Sequence[Weight]) -> list[AtypicalContext]:
        out = []
        for w in weights:
            ctx = atypical_context(datum, w, z_truncation=z_truncation)
            if ctx.gamma_index != type_index:
                raise MixedAtypicalityTypes(
                    f"weight {datum.format_weight(ctx.lam)} has type index "
                    f"{ctx.gamma_index}, expected {type_index}"
                )
            out.append(ctx)
        return out

    lhs_ctx = contexts(lhs)
    rhs_ctx = contexts(rhs)
    lhs_factors = [atypical_numerator(c) for c in lhs_ctx]
    rhs_factors = [atypical_numerator(c) for c in rhs_ctx]
    lhs_sigs = [_flat_signature(datum, c.lam) for c in lhs_ctx]
    rhs_sigs = [_flat_signature(datum, c.lam) for c in rhs_ctx]

    def product(factors: list[Poly]) -> Poly:
        out = Poly.one(z_truncation)
        for f in factors:
            out = out * f
        return out

    products_equal = product(lhs_factors) == product(rhs_factors)

    pairing: list[FactorMatch] = []
    used = [False] * len(rhs_factors)
    for i, sig in enumerate(lhs_sigs):
        for j, other in enumerate(rhs_sigs):
            if used[j] or other != sig:
                continue
            # same signature forces the same numerator
            assert lhs_factors[i] == rhs_factors[j]
            used[j] = True
            # whole numerators pair up at once; report them on component 1
            pairing.append(
                FactorMatch(component=1, lhs_index=i, rhs_index=j, signature=sig)
            )
            break

    r_equals_s = len(lhs) == len(rhs)
    complete = r_equals_s and len(pairing) == len(lhs)
    if products_equal:
        # equal products force a full matching of the factors
        assert complete, "equal numerator products with unmatched factors"
    conclusion = (
        Conclusion.UNIQUE_FACTORIZATION
        if products_equal and complete
        else Conclusion.PRODUCTS_UNEQUAL
    )
    return MatchReport(
        r_equals_s=r_equals_s,
        pairing=tuple(pairing),
        sigma_hypothesis_holds=products_equal and complete,
        module_level_conclusion=conclusion,
    )
