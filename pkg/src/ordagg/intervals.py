"""Nonempty closed intervals of a chain and the interval reflection lattice.

Intervals carry the componentwise endpoint order (the set-lattice order of
Topkis restricted to intervals), which is only partial: [2,2] and [1,3]
are incomparable.  The interval reflection lattice glues interval lattices
over the two halves of a reflection chain, with the singleton reference
point shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .chains import Chain, ChainElem, ReflChain
from .errors import ChainMismatchError, DomainError


class Rel(str, Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Interval:
    """A nonempty closed interval [lo, hi] of a chain, stored by rank."""

    chain: Chain
    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo <= self.hi < self.chain.size:
            raise DomainError(
                f"invalid interval endpoints [{self.lo},{self.hi}] for chain "
                f"{self.chain.id!r} of size {self.chain.size}"
            )

    def __contains__(self, rank: int) -> bool:
        return self.lo <= rank <= self.hi

    def elements(self) -> range:
        return range(self.lo, self.hi + 1)

    def is_singleton(self) -> bool:
        return self.lo == self.hi


def singleton(x: ChainElem) -> Interval:
    return Interval(x.chain, x.rank, x.rank)


def format_interval(iv: Interval) -> str:
    c = iv.chain
    return f"[{c.label(iv.lo)},{c.label(iv.hi)}]"


def _same_interval_chain(i1: Interval, i2: Interval) -> None:
    if i1.chain != i2.chain:
        raise ChainMismatchError(
            f"intervals over different chains: {i1.chain.id!r} vs {i2.chain.id!r}"
        )


def topkis_cmp(i1: Interval, i2: Interval) -> Rel:
    """Classify two intervals under the componentwise endpoint order."""
    _same_interval_chain(i1, i2)
    le = i1.lo <= i2.lo and i1.hi <= i2.hi
    ge = i2.lo <= i1.lo and i2.hi <= i1.hi
    if le and ge:
        return Rel.EQUAL
    if le:
        return Rel.LESS
    if ge:
        return Rel.GREATER
    return Rel.INCOMPARABLE


def topkis_leq(i1: Interval, i2: Interval) -> bool:
    return topkis_cmp(i1, i2) in (Rel.LESS, Rel.EQUAL)


def sqcup(i1: Interval, i2: Interval) -> Interval:
    """Least upper bound: componentwise max of endpoints."""
    _same_interval_chain(i1, i2)
    return Interval(i1.chain, max(i1.lo, i2.lo), max(i1.hi, i2.hi))


def sqcap(i1: Interval, i2: Interval) -> Interval:
    """Greatest lower bound: componentwise min of endpoints."""
    _same_interval_chain(i1, i2)
    return Interval(i1.chain, min(i1.lo, i2.lo), min(i1.hi, i2.hi))


def sqcup_family(intervals) -> Interval:
    """Least upper bound of a nonempty family."""
    ivs = list(intervals)
    if not ivs:
        raise DomainError("join of an empty interval family")
    first = ivs[0]
    for iv in ivs[1:]:
        _same_interval_chain(first, iv)
    return Interval(first.chain, max(iv.lo for iv in ivs), max(iv.hi for iv in ivs))


def sqcap_family(intervals) -> Interval:
    """Greatest lower bound of a nonempty family."""
    ivs = list(intervals)
    if not ivs:
        raise DomainError("meet of an empty interval family")
    first = ivs[0]
    for iv in ivs[1:]:
        _same_interval_chain(first, iv)
    return Interval(first.chain, min(iv.lo for iv in ivs), min(iv.hi for iv in ivs))


def leq_via_lemma(i1: Interval, i2: Interval) -> bool:
    """Element-enumeration characterization of the interval order.

    i1 is below i2 iff every element of i1 has some element of i2 above it
    and every element of i2 has some element of i1 below it.  Serves as an
    independent oracle for topkis_cmp.
    """
    _same_interval_chain(i1, i2)
    up = all(any(a1 <= a2 for a2 in i2.elements()) for a1 in i1.elements())
    down = all(any(b1 <= b2 for b1 in i1.elements()) for b2 in i2.elements())
    return up and down


class Half(str, Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


@dataclass(frozen=True)
class RInterval:
    """An interval inside one half of a reflection chain.

    Endpoints are signed ranks.  The singleton at the reference point is
    shared between the two halves and is normalized to the neutral half.
    """

    chain: ReflChain
    half: Half
    lo: int
    hi: int

    def __post_init__(self):
        n = self.chain.half_size
        if not -n <= self.lo <= self.hi <= n:
            raise DomainError(
                f"invalid signed endpoints [{self.lo},{self.hi}] for reflection "
                f"chain {self.chain.id!r}"
            )
        if self.lo == 0 and self.hi == 0:
            object.__setattr__(self, "half", Half.NEUTRAL)
            return
        if self.half is Half.NEUTRAL:
            raise DomainError("neutral interval must be the reference-point singleton")
        if self.half is Half.POSITIVE and self.lo < 0:
            raise DomainError("positive-half interval with a negative endpoint")
        if self.half is Half.NEGATIVE and self.hi > 0:
            raise DomainError("negative-half interval with a positive endpoint")

    def is_neutral(self) -> bool:
        return self.half is Half.NEUTRAL


def positive_rinterval(chain: ReflChain, lo: int, hi: int) -> RInterval:
    return RInterval(chain, Half.POSITIVE, lo, hi)


def negative_rinterval(chain: ReflChain, lo: int, hi: int) -> RInterval:
    return RInterval(chain, Half.NEGATIVE, lo, hi)


def neutral_rinterval(chain: ReflChain) -> RInterval:
    return RInterval(chain, Half.NEUTRAL, 0, 0)


def format_rinterval(x: RInterval) -> str:
    c = x.chain
    if x.half is Half.NEGATIVE:
        return f"-[{c.label(-x.hi)},{c.label(-x.lo)}]"
    return f"[{c.label(x.lo)},{c.label(x.hi)}]"


def rinterval_sup(x: RInterval):
    """Least upper bound of the interval's elements, as a chain point."""
    return x.chain.elem(x.hi)


def rinterval_leq(x: RInterval, y: RInterval) -> bool:
    """Order of the interval reflection lattice.

    Componentwise on signed endpoints: within a half this is the half's
    own order, and everything in the negative half sits below everything
    in the positive half.
    """
    _same_rinterval_chain(x, y)
    return x.lo <= y.lo and x.hi <= y.hi


def refl_interval(x: RInterval) -> RInterval:
    """Reflection: swap halves and negate endpoints."""
    if x.half is Half.NEUTRAL:
        return x
    half = Half.NEGATIVE if x.half is Half.POSITIVE else Half.POSITIVE
    return RInterval(x.chain, half, -x.hi, -x.lo)


def abs_interval(x: RInterval) -> RInterval:
    """Map into the positive half."""
    if x.half is Half.NEGATIVE:
        return refl_interval(x)
    return x


def _same_rinterval_chain(x: RInterval, y: RInterval) -> None:
    if x.chain != y.chain:
        raise ChainMismatchError(
            f"intervals over different reflection chains: {x.chain.id!r} vs {y.chain.id!r}"
        )


def svee_intervals(x: RInterval, y: RInterval) -> RInterval:
    """Pseudo-addition on the interval reflection lattice.

    Same half: the half's own join (computed on the positive half after
    reflecting).  Opposite halves: the operand whose absolute value is
    strictly larger in the interval order; the result collapses to the
    reference point as soon as the absolute values are equal or
    incomparable.
    """
    _same_rinterval_chain(x, y)
    if x.half is Half.NEUTRAL:
        return y
    if y.half is Half.NEUTRAL:
        return x
    if x.half is y.half:
        ax, ay = abs_interval(x), abs_interval(y)
        joined = positive_rinterval(x.chain, max(ax.lo, ay.lo), max(ax.hi, ay.hi))
        return joined if x.half is Half.POSITIVE else refl_interval(joined)
    ax, ay = abs_interval(x), abs_interval(y)
    le = ax.lo <= ay.lo and ax.hi <= ay.hi
    ge = ay.lo <= ax.lo and ay.hi <= ax.hi
    if ge and not le:
        return x
    if le and not ge:
        return y
    return neutral_rinterval(x.chain)
