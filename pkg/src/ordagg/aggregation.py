"""Distribution functions, quantile correspondences, and the aggregation
functionals built from them.

The pipeline: a function's upper level sets are measured to give the
decreasing distribution function; its inverse is totalized by saturation
to give the quantile correspondence; the inner product of an increasing
commensurability function with the quantile correspondence is the
aggregated value.  Specializations recover the Sugeno integral, quantiles
and the median, and the signed symmetric/asymmetric variants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain, ChainElem, ReflChain
from .correspondences import Corr, TotalFn, inner_product, dual_product, inverse, \
    saturate, sharp_saturate, unit_corr
from .errors import ChainMismatchError, DomainError
from .intervals import Half, Interval, RInterval, negative_rinterval, \
    positive_rinterval, refl_interval, svee_intervals
from .measures import GroundSet, Measure

SHARP = "sharp"
PLAIN = "plain"
VARIANTS = (SHARP, PLAIN)


@dataclass(eq=True)
class LatticeFn:
    """A total function from a ground set into a chain or reflection chain.

    Values are ranks for a plain scale and signed ranks for a reflection
    scale, indexed by element position.
    """

    ground: GroundSet
    scale: Chain | ReflChain
    values: tuple[int, ...]

    def __post_init__(self):
        self.values = tuple(self.values)
        if len(self.values) != self.ground.size:
            raise DomainError("function table must cover the whole ground set")
        if self.is_refl():
            n = self.scale.half_size
            lo, hi = -n, n
        else:
            lo, hi = 0, self.scale.size - 1
        for v in self.values:
            if not lo <= v <= hi:
                raise DomainError(f"function value {v} outside scale {self.scale.id!r}")

    def is_refl(self) -> bool:
        return isinstance(self.scale, ReflChain)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def value_of(self, name: str) -> int:
        return self.values[self.ground.index(name)]

    def as_plain(self) -> "LatticeFn":
        """View a reflection-scale function over the carrier as a plain chain."""
        if not self.is_refl():
            return self
        n = self.scale.half_size
        return LatticeFn(self.ground, self.scale.as_chain(), tuple(v + n for v in self.values))

    @classmethod
    def constant(cls, ground: GroundSet, scale, value: int) -> "LatticeFn":
        return cls(ground, scale, (value,) * ground.size)


@dataclass(eq=True)
class CommFn:
    """An increasing total map relating the measure scale to the function scale."""

    src: Chain
    dst: Chain
    values: tuple[int, ...]

    def __post_init__(self):
        self.values = tuple(self.values)
        if len(self.values) != self.src.size:
            raise DomainError("commensurability table must cover the source chain")
        for v in self.values:
            if not 0 <= v < self.dst.size:
                raise DomainError(f"commensurability value {v} outside {self.dst.id!r}")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise DomainError("commensurability function must be increasing")

    def __call__(self, p: int) -> int:
        return self.values[p]

    def as_corr(self) -> Corr:
        table = {p: Interval(self.dst, v, v) for p, v in enumerate(self.values)}
        return Corr(self.src, self.dst, table)

    @classmethod
    def identity(cls, src: Chain, dst: Chain | None = None) -> "CommFn":
        dst = dst if dst is not None else src
        if src.size != dst.size:
            raise DomainError(
                f"identity commensurability needs equal sizes: "
                f"{src.id!r} has {src.size}, {dst.id!r} has {dst.size}"
            )
        return cls(src, dst, tuple(range(src.size)))


def level_set(f: LatticeFn, x: int, strict: bool = False) -> int:
    """Bitmask of the upper level set at threshold x."""
    if f.is_refl():
        n = f.scale.half_size
        if not -n <= x <= n:
            raise DomainError(f"level {x} outside scale {f.scale.id!r}")
    elif not 0 <= x < f.scale.size:
        raise DomainError(f"level {x} outside scale {f.scale.id!r}")
    mask = 0
    for i, v in enumerate(f.values):
        if v > x if strict else v >= x:
            mask |= 1 << i
    return mask


def level_chain(f: LatticeFn) -> list[int]:
    """The nested family of upper level sets, largest first."""
    if f.is_refl():
        n = f.scale.half_size
        levels = range(-n, n + 1)
    else:
        levels = range(f.scale.size)
    seen: list[int] = []
    for x in levels:
        mask = level_set(f, x)
        if not seen or seen[-1] != mask:
            seen.append(mask)
    return seen


def is_comonotonic(fs) -> bool:
    """Whether the functions' level sets jointly form an inclusion chain."""
    fs = list(fs)
    if not fs:
        return True
    ground, scale = fs[0].ground, fs[0].scale
    for f in fs[1:]:
        if f.ground != ground or f.scale != scale:
            raise ChainMismatchError("comonotonicity needs a shared ground set and scale")
    masks = sorted({m for f in fs for m in level_chain(f)}, key=lambda m: (m.bit_count(), m))
    return all(a & b == a for a, b in zip(masks, masks[1:]))


def _require_total_measure(m: Measure) -> None:
    if not m.is_total():
        raise DomainError(
            "aggregation needs a measure on the full powerset; "
            "apply an inner or outer extension first"
        )


def _plain(f: LatticeFn) -> LatticeFn:
    return f.as_plain() if f.is_refl() else f


def distribution(m: Measure, f: LatticeFn) -> TotalFn:
    """Measure of the upper level sets: a total decreasing function."""
    f = _plain(f)
    _require_total_measure(m)
    if m.ground != f.ground:
        raise ChainMismatchError("measure and function live on different ground sets")
    values = tuple(m.values[level_set(f, x)] for x in range(f.scale.size))
    return TotalFn(f.scale, m.scale, values)


def quantile(m: Measure, f: LatticeFn, variant: str = SHARP) -> Corr:
    """Saturated inverse of the distribution function, total and decreasing."""
    if variant not in VARIANTS:
        raise DomainError(f"unknown quantile variant {variant!r}")
    g = distribution(m, f)
    ginv = inverse(g.as_corr())
    return sharp_saturate(ginv) if variant == SHARP else saturate(ginv)


def median(m: Measure, f: LatticeFn, p0: int) -> Interval:
    """Quantile at the caller's reflection fixed point of the measure scale."""
    if not 0 <= p0 < m.scale.size:
        raise DomainError(f"rank {p0} outside measure scale {m.scale.id!r}")
    return quantile(m, f, SHARP).table[p0]


def _check_comm(m: Measure, f: LatticeFn, ell: CommFn) -> None:
    if ell.src != m.scale:
        raise ChainMismatchError(
            f"commensurability source {ell.src.id!r} differs from measure scale "
            f"{m.scale.id!r}"
        )
    if ell.dst != f.scale:
        raise ChainMismatchError(
            f"commensurability destination {ell.dst.id!r} differs from function "
            f"scale {f.scale.id!r}"
        )


def fan_sugeno(m: Measure, f: LatticeFn, ell: CommFn, variant: str = SHARP) -> Interval:
    """Inner product of the commensurability function with the quantile
    correspondence: the interval-valued aggregate of f."""
    f = _plain(f)
    _check_comm(m, f, ell)
    return inner_product(ell.as_corr(), quantile(m, f, variant))


def fan_sugeno_sup(m: Measure, f: LatticeFn, ell: CommFn, variant: str = SHARP) -> ChainElem:
    """Least upper bound of the aggregate interval (variant-independent)."""
    iv = fan_sugeno(m, f, ell, variant)
    return iv.chain.elem(iv.hi)


def fan_sugeno_dual(m: Measure, f: LatticeFn, ell: CommFn, variant: str = SHARP) -> Interval:
    """Dual-product counterpart of the aggregate."""
    f = _plain(f)
    _check_comm(m, f, ell)
    return dual_product(ell.as_corr(), quantile(m, f, variant))


def sugeno_integral(m: Measure, f: LatticeFn) -> ChainElem:
    """Join over levels of level meet distribution value.

    Fast path for equal scales and the identity commensurability; agrees
    with the quantile route.
    """
    f = _plain(f)
    _require_total_measure(m)
    if f.scale != m.scale:
        raise ChainMismatchError(
            "the direct integral needs the function and measure scales to coincide"
        )
    g = distribution(m, f)
    return m.scale.elem(max(min(x, g(x)) for x in range(m.scale.size)))


def quantile_functional(m: Measure, f: LatticeFn, p: int) -> Interval:
    """Aggregate against the unit vector at p: recovers the p-quantile."""
    f = _plain(f)
    _require_total_measure(m)
    if not 0 <= p < m.scale.size:
        raise DomainError(f"rank {p} outside measure scale {m.scale.id!r}")
    eps = unit_corr(m.scale.elem(p), f.scale)
    return inner_product(eps, quantile(m, f, SHARP))


def pos_part(f: LatticeFn) -> LatticeFn:
    """Join with the reference point, over the positive half chain."""
    if not f.is_refl():
        raise DomainError("positive part needs a reflection-scale function")
    half = f.scale.positive_half()
    return LatticeFn(f.ground, half, tuple(max(v, 0) for v in f.values))


def neg_part(f: LatticeFn) -> LatticeFn:
    """Positive part of the reflection, over the positive half chain."""
    if not f.is_refl():
        raise DomainError("negative part needs a reflection-scale function")
    half = f.scale.positive_half()
    return LatticeFn(f.ground, half, tuple(max(-v, 0) for v in f.values))


def negate_fn(f: LatticeFn) -> LatticeFn:
    """Pointwise reflection of a reflection-scale function."""
    if not f.is_refl():
        raise DomainError("negation needs a reflection-scale function")
    return LatticeFn(f.ground, f.scale, tuple(-v for v in f.values))


def symmetric_fan_sugeno(
    m: Measure,
    f: LatticeFn,
    ell_pos: CommFn,
    ell_neg_abs: CommFn | None = None,
    variant: str = SHARP,
) -> RInterval:
    """Pseudo-difference of the aggregates of the positive and negative parts.

    Both parts are aggregated on the positive half chain; the negative
    aggregate is reflected and combined with the pseudo-addition of the
    interval reflection lattice.  With one commensurability function the
    result is odd under pointwise reflection of f.
    """
    if not f.is_refl():
        raise DomainError("symmetric aggregation needs a reflection-scale function")
    k = ell_neg_abs if ell_neg_abs is not None else ell_pos
    rchain = f.scale
    sp = fan_sugeno(m, pos_part(f), ell_pos, variant)
    sn = fan_sugeno(m, neg_part(f), k, variant)
    p = positive_rinterval(rchain, sp.lo, sp.hi)
    n = refl_interval(positive_rinterval(rchain, sn.lo, sn.hi))
    return svee_intervals(p, n)


def _into_half(rchain: ReflChain, iv: Interval, designated: Half) -> RInterval:
    """Classify a plain-chain product interval as an element of the
    interval reflection lattice.

    A zero-crossing product (possible when the commensurability function
    sends the measure bottom above the reference point) is clamped to the
    designated half at the reference point.
    """
    n = rchain.half_size
    lo, hi = iv.lo - n, iv.hi - n
    if hi <= 0:
        return negative_rinterval(rchain, lo, hi)
    if lo >= 0:
        return positive_rinterval(rchain, lo, hi)
    if designated is Half.POSITIVE:
        return positive_rinterval(rchain, 0, hi)
    return negative_rinterval(rchain, lo, 0)


def asymmetric_fan_sugeno(
    m: Measure,
    f: LatticeFn,
    ell_minus: CommFn,
    ell_plus: CommFn,
    variant: str = SHARP,
) -> RInterval:
    """Pseudo-sum of aggregates of the same quantile correspondence against
    half-valued commensurability functions.

    ell_minus must map into the nonpositive half and ell_plus into the
    nonnegative half of the reflection scale viewed as a plain chain.
    """
    if not f.is_refl():
        raise DomainError("asymmetric aggregation needs a reflection-scale function")
    rchain = f.scale
    n = rchain.half_size
    fp = f.as_plain()
    _check_comm(m, fp, ell_minus)
    _check_comm(m, fp, ell_plus)
    if any(v > n for v in ell_minus.values):
        raise DomainError("negative-side commensurability must map into the lower half")
    if any(v < n for v in ell_plus.values):
        raise DomainError("positive-side commensurability must map into the upper half")
    q = quantile(m, fp, variant)
    sm = inner_product(ell_minus.as_corr(), q)
    sp = inner_product(ell_plus.as_corr(), q)
    return svee_intervals(
        _into_half(rchain, sm, Half.NEGATIVE), _into_half(rchain, sp, Half.POSITIVE)
    )
