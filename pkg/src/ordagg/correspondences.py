"""Monotone interval-valued correspondences between chains.

A correspondence is a partial map from source ranks to intervals over the
destination chain, identified with its graph.  Monotone correspondences
are exactly the interval-valued ones, and invert to monotone
correspondences again.  The inner product and the saturations defined
here drive the aggregation functionals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import Chain, ChainElem
from .errors import ChainMismatchError, DomainError
from .intervals import Interval, Rel, sqcup_family, topkis_cmp


@dataclass(eq=True)
class Corr:
    """A partial map from source ranks to intervals over the destination.

    The table's keys are the domain; values are intervals over dst.
    Treated as immutable after construction.
    """

    src: Chain
    dst: Chain
    table: dict[int, Interval] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[int, Interval] = {}
        for x, iv in self.table.items():
            if not 0 <= x < self.src.size:
                raise DomainError(f"domain point {x} outside chain {self.src.id!r}")
            if iv.chain != self.dst:
                raise ChainMismatchError(
                    f"value at {x} lies over chain {iv.chain.id!r}, expected {self.dst.id!r}"
                )
            clean[x] = iv
        self.table = clean

    def dom(self) -> list[int]:
        return sorted(self.table)

    def is_total(self) -> bool:
        return len(self.table) == self.src.size

    def __call__(self, x: int) -> Interval:
        if x not in self.table:
            raise DomainError(f"point {x} not in the domain of the correspondence")
        return self.table[x]


@dataclass(eq=True)
class TotalFn:
    """A total function between chains, stored as a rank tuple."""

    src: Chain
    dst: Chain
    values: tuple[int, ...]

    def __post_init__(self):
        self.values = tuple(self.values)
        if len(self.values) != self.src.size:
            raise DomainError(
                f"function table has {len(self.values)} entries, "
                f"expected {self.src.size}"
            )
        for v in self.values:
            if not 0 <= v < self.dst.size:
                raise DomainError(f"value rank {v} outside chain {self.dst.id!r}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def elem(self, x: int) -> ChainElem:
        return self.dst.elem(self.values[x])

    def as_corr(self) -> Corr:
        table = {x: Interval(self.dst, v, v) for x, v in enumerate(self.values)}
        return Corr(self.src, self.dst, table)

    def image(self) -> set[int]:
        return set(self.values)

    def is_surjective(self) -> bool:
        return len(self.image()) == self.dst.size


def _check_corr_pair(c1: Corr, c2: Corr) -> None:
    if c1.src != c2.src:
        raise ChainMismatchError(
            f"correspondences with different sources: {c1.src.id!r} vs {c2.src.id!r}"
        )
    if c1.dst != c2.dst:
        raise ChainMismatchError(
            f"correspondences with different destinations: {c1.dst.id!r} vs {c2.dst.id!r}"
        )


def is_increasing(c: Corr) -> bool:
    """Pointwise interval-order check over the domain.

    For interval-valued tables this coincides with the graph rectangle
    condition restricted to domain points, so checking consecutive domain
    points suffices.
    """
    d = c.dom()
    return all(
        topkis_cmp(c.table[x1], c.table[x2]) in (Rel.LESS, Rel.EQUAL)
        for x1, x2 in zip(d, d[1:])
    )


def is_decreasing(c: Corr) -> bool:
    d = c.dom()
    return all(
        topkis_cmp(c.table[x1], c.table[x2]) in (Rel.GREATER, Rel.EQUAL)
        for x1, x2 in zip(d, d[1:])
    )


def is_sharply_monotone(c: Corr) -> bool:
    """No two distinct domain points share more than one value.

    A two-element overlap between distinct columns spans a non-degenerate
    rectangle of the graph.
    """
    d = c.dom()
    for i, x1 in enumerate(d):
        iv1 = c.table[x1]
        for x2 in d[i + 1 :]:
            iv2 = c.table[x2]
            overlap = min(iv1.hi, iv2.hi) - max(iv1.lo, iv2.lo) + 1
            if overlap > 1:
                return False
    return True


def inverse(c: Corr) -> Corr:
    """Transpose of the graph, indexed by destination ranks.

    For monotone input the transpose is interval-valued; a transpose with
    gaps (possible for non-monotone tables) is rejected.
    """
    table: dict[int, Interval] = {}
    for y in range(c.dst.size):
        xs = [x for x, iv in c.table.items() if iv.lo <= y <= iv.hi]
        if not xs:
            continue
        lo, hi = min(xs), max(xs)
        if len(xs) != hi - lo + 1:
            raise DomainError(
                f"transpose at rank {y} is not an interval; input is not monotone"
            )
        table[y] = Interval(c.src, lo, hi)
    return Corr(c.dst, c.src, table)


def _require_total(c: Corr, role: str) -> None:
    if not c.is_total():
        raise DomainError(
            f"{role} must be total; restrict or saturate it first "
            f"(domain has {len(c.table)} of {c.src.size} points)"
        )


def inner_product(phi: Corr, psi: Corr) -> Interval:
    """Join over the source of pointwise meets: the ordinal inner product."""
    _check_corr_pair(phi, psi)
    _require_total(phi, "inner product factor")
    _require_total(psi, "inner product factor")
    lo = max(min(phi.table[x].lo, psi.table[x].lo) for x in range(phi.src.size))
    hi = max(min(phi.table[x].hi, psi.table[x].hi) for x in range(phi.src.size))
    return Interval(phi.dst, lo, hi)


def dual_product(phi: Corr, psi: Corr) -> Interval:
    """Meet over the source of pointwise joins."""
    _check_corr_pair(phi, psi)
    _require_total(phi, "dual product factor")
    _require_total(psi, "dual product factor")
    lo = min(max(phi.table[x].lo, psi.table[x].lo) for x in range(phi.src.size))
    hi = min(max(phi.table[x].hi, psi.table[x].hi) for x in range(phi.src.size))
    return Interval(phi.dst, lo, hi)


def unit_corr(a: ChainElem, dst: Chain | None = None) -> Corr:
    """Indicator of the upper interval [a, top]: the unit vector at a.

    Values are the top singleton at and above a, the bottom singleton
    below.  Against any total decreasing correspondence the inner product
    picks out the value at a.
    """
    dst = dst if dst is not None else a.chain
    t, b = dst.size - 1, 0
    table = {
        x: Interval(dst, t, t) if x >= a.rank else Interval(dst, b, b)
        for x in range(a.chain.size)
    }
    return Corr(a.chain, dst, table)


def saturate(psi: Corr) -> Corr:
    """Totalize a decreasing correspondence by joins over the upper domain.

    The value at x is the join of all table values at domain points >= x
    (missing points contribute the bottom singleton, which is neutral for
    the join); with no domain point above x the value is the bottom
    singleton.  The result is total, decreasing, and extends psi.
    """
    if not is_decreasing(psi):
        raise DomainError("saturation requires a decreasing correspondence")
    d = psi.dom()
    bottom_iv = Interval(psi.dst, 0, 0)
    table: dict[int, Interval] = {}
    for x in range(psi.src.size):
        uppers = [psi.table[u] for u in d if u >= x]
        table[x] = sqcup_family(uppers) if uppers else bottom_iv
    return Corr(psi.src, psi.dst, table)


def _decreasing_across_gaps(psi: Corr) -> bool:
    """Graph-rectangle decreasingness over missing columns.

    Values on either side of a domain gap may not overlap vertically;
    otherwise the graph would owe a rectangle to the empty columns.
    Inverses of total decreasing functions always qualify.
    """
    d = psi.dom()
    for u, v in zip(d, d[1:]):
        if v > u + 1 and psi.table[v].hi >= psi.table[u].lo:
            return False
    return True


def sharp_saturate(psi: Corr) -> Corr:
    """Saturation with off-domain values collapsed to their suprema.

    Agrees with psi on its domain; elsewhere the value is the singleton at
    the top of the plain saturation.  Preserves (sharp) decreasingness,
    which needs decreasingness across domain gaps as a precondition.
    """
    if not _decreasing_across_gaps(psi):
        raise DomainError(
            "sharp saturation requires a correspondence decreasing across "
            "its domain gaps"
        )
    sat = saturate(psi)
    table = dict(sat.table)
    for x in range(psi.src.size):
        if x not in psi.table:
            hi = table[x].hi
            table[x] = Interval(psi.dst, hi, hi)
    return Corr(psi.src, psi.dst, table)
