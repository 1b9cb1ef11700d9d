"""Ordinal distances and norms built from the aggregation functionals."""

from __future__ import annotations

from .aggregation import CommFn, LatticeFn, fan_sugeno_sup
from .chains import ChainElem, dist_r
from .errors import ChainMismatchError, DomainError
from .measures import Measure, sign_measure


def pointwise_distance(f: LatticeFn, g: LatticeFn) -> LatticeFn:
    """Elementwise ordinal distance, landing on the positive half chain."""
    if not f.is_refl() or not g.is_refl():
        raise DomainError("pointwise distance needs reflection-scale functions")
    if f.ground != g.ground or f.scale != g.scale:
        raise ChainMismatchError("functions live on different ground sets or scales")
    rchain = f.scale
    half = rchain.positive_half()
    values = tuple(
        dist_r(rchain.elem(a), rchain.elem(b)).srank for a, b in zip(f.values, g.values)
    )
    return LatticeFn(f.ground, half, values)


def ordinal_distance(m: Measure, ell: CommFn, f: LatticeFn, g: LatticeFn) -> ChainElem:
    """Sup-collapsed aggregate of the pointwise distance."""
    return fan_sugeno_sup(m, pointwise_distance(f, g), ell)


def ordinal_norm(m: Measure, ell: CommFn, f: LatticeFn) -> ChainElem:
    """Distance to the constant reference-point function."""
    zero = LatticeFn.constant(f.ground, f.scale, 0)
    return ordinal_distance(m, ell, f, zero)


def _identity_comm(m: Measure, f: LatticeFn) -> CommFn:
    half = f.scale.positive_half()
    if m.scale.size != half.size:
        raise DomainError(
            "the measure scale and the function's positive half must have "
            "equal sizes to be identified"
        )
    return CommFn(m.scale, half, tuple(range(half.size)))


def kyfan_norm(m: Measure, f: LatticeFn) -> ChainElem:
    """Ordinal norm with the identity commensurability function."""
    if not f.is_refl():
        raise DomainError("the norm needs a reflection-scale function")
    return ordinal_norm(m, _identity_comm(m, f), f)


def esssup_norm(m: Measure, f: LatticeFn) -> ChainElem:
    """Ordinal norm under the sign collapse of the measure."""
    if not f.is_refl():
        raise DomainError("the norm needs a reflection-scale function")
    return ordinal_norm(sign_measure(m), _identity_comm(m, f), f)


def is_nullfunction(m: Measure, f: LatticeFn) -> bool:
    """Whether f vanishes outside a set the sign-collapsed measure ignores."""
    return esssup_norm(m, f).rank == 0
