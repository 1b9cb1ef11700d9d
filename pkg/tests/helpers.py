"""Shared generators and literal re-checkers for the test suite.

Randomized suites draw from seeded `random.Random` instances so every run
sees the same instances.
"""

from __future__ import annotations

import random

from ordagg import (
    Chain,
    CommFn,
    Corr,
    GroundSet,
    Interval,
    LatticeFn,
    Measure,
    ReflChain,
    SetFamily,
    TotalFn,
    chain_measure,
)


def monotone_envelope(ground: GroundSet, raw: dict[int, int], top: int) -> dict[int, int]:
    values = {
        a: max(raw[b] for b in ground.subsets() if b & a == b) for a in ground.subsets()
    }
    values[0] = 0
    values[ground.full_mask] = top
    return values


def rand_measure(rng: random.Random, ground: GroundSet, scale: Chain) -> Measure:
    top = scale.size - 1
    raw = {a: rng.randrange(scale.size) for a in ground.subsets()}
    raw[0] = 0
    return Measure(SetFamily.full(ground), scale, monotone_envelope(ground, raw, top))


def rand_measure_below(rng: random.Random, mu: Measure) -> Measure:
    """A random measure pointwise below mu (same family and scale)."""
    ground = mu.ground
    raw = {a: rng.randrange(v + 1) for a, v in mu.values.items()}
    raw[0] = 0
    values = monotone_envelope(ground, raw, mu.scale.size - 1)
    return Measure(mu.family, mu.scale, values)


def rand_chain_sets(rng: random.Random, ground: GroundSet) -> list[int]:
    """A random inclusion chain of subsets from the empty set to the whole set."""
    order = list(range(ground.size))
    rng.shuffle(order)
    cut = sorted(rng.sample(range(1, ground.size), rng.randrange(ground.size)))
    masks = {0, ground.full_mask}
    for c in cut:
        mask = 0
        for i in order[:c]:
            mask |= 1 << i
        masks.add(mask)
    return sorted(masks, key=lambda m: (m.bit_count(), m))


def rand_chain_measure(rng: random.Random, ground: GroundSet, scale: Chain, kind: str) -> Measure:
    sets = rand_chain_sets(rng, ground)
    top = scale.size - 1
    values = sorted(rng.choices(range(scale.size), k=len(sets)))
    values[0] = 0
    values[-1] = top
    return chain_measure(ground, scale, sets, values, kind)


def rand_partial_measure(rng: random.Random, ground: GroundSet, scale: Chain) -> Measure:
    """A monotone measure on a random subset family."""
    total = rand_measure(rng, ground, scale)
    members = {0, ground.full_mask}
    for a in ground.subsets():
        if rng.random() < 0.4:
            members.add(a)
    values = {a: total.values[a] for a in members}
    return Measure(SetFamily(ground, frozenset(members)), scale, values)


def rand_fn(rng: random.Random, ground: GroundSet, scale) -> LatticeFn:
    if isinstance(scale, ReflChain):
        n = scale.half_size
        vals = tuple(rng.randrange(-n, n + 1) for _ in range(ground.size))
    else:
        vals = tuple(rng.randrange(scale.size) for _ in range(ground.size))
    return LatticeFn(ground, scale, vals)


def rand_fn_above(rng: random.Random, f: LatticeFn) -> LatticeFn:
    if isinstance(f.scale, ReflChain):
        hi = f.scale.half_size
    else:
        hi = f.scale.size - 1
    vals = tuple(rng.randint(v, hi) for v in f.values)
    return LatticeFn(f.ground, f.scale, vals)


def rand_comm(rng: random.Random, src: Chain, dst: Chain, zero_fixed: bool = False) -> CommFn:
    vals = sorted(rng.choices(range(dst.size), k=src.size))
    if zero_fixed:
        vals[0] = 0
    return CommFn(src, dst, tuple(vals))


def rand_comm_below(rng: random.Random, ell: CommFn) -> CommFn:
    vals = []
    prev = 0
    for v in ell.values:
        prev = rng.randint(prev, v)
        vals.append(prev)
    return CommFn(ell.src, ell.dst, tuple(vals))


def join_fn(f: LatticeFn, g: LatticeFn) -> LatticeFn:
    return LatticeFn(f.ground, f.scale, tuple(max(a, b) for a, b in zip(f.values, g.values)))


def meet_fn(f: LatticeFn, g: LatticeFn) -> LatticeFn:
    return LatticeFn(f.ground, f.scale, tuple(min(a, b) for a, b in zip(f.values, g.values)))


def monotone_transform(rng: random.Random, f: LatticeFn) -> LatticeFn:
    """An increasing reparametrization of f (comonotonic with f)."""
    size = f.scale.size
    table = sorted(rng.choices(range(size), k=size))
    return LatticeFn(f.ground, f.scale, tuple(table[v] for v in f.values))


def rand_interval(rng: random.Random, chain: Chain) -> Interval:
    lo = rng.randrange(chain.size)
    hi = rng.randrange(lo, chain.size)
    return Interval(chain, lo, hi)


def rand_total_corr(rng: random.Random, src: Chain, dst: Chain) -> Corr:
    return Corr(src, dst, {x: rand_interval(rng, dst) for x in range(src.size)})


def rand_decreasing_corr(rng: random.Random, src: Chain, dst: Chain, total: bool = False) -> Corr:
    """A decreasing interval table: total with nested value caps, or the
    (possibly gappy) inverse of a random decreasing function."""
    from ordagg import inverse

    if total or rng.random() < 0.5:
        table = {}
        lo_cap = hi_cap = dst.size - 1
        for x in range(src.size):
            lo = rng.randint(0, lo_cap)
            hi = rng.randint(lo, hi_cap)
            table[x] = Interval(dst, lo, hi)
            lo_cap, hi_cap = lo, hi
        return Corr(src, dst, table)
    vals = sorted((rng.randrange(src.size) for _ in range(dst.size)), reverse=True)
    return inverse(TotalFn(dst, src, tuple(vals)).as_corr())


def rand_decreasing_surjection(rng: random.Random, src: Chain, dst: Chain) -> TotalFn:
    """A total decreasing function onto all of dst (needs src at least as big)."""
    extra = rng.choices(range(dst.size), k=src.size - dst.size)
    vals = sorted(list(range(dst.size)) + extra, reverse=True)
    return TotalFn(src, dst, tuple(vals))


def all_intervals(chain: Chain) -> list[Interval]:
    return [
        Interval(chain, lo, hi)
        for lo in range(chain.size)
        for hi in range(lo, chain.size)
    ]


def rectangle_increasing(c: Corr) -> bool:
    """Literal graph-rectangle criterion, checked on domain columns.

    For every pair of graph points (x1, y2), (x2, y1) with x1 <= x2 and
    y1 <= y2, each domain column between them must contain the whole
    value range [y1, y2].
    """
    pts = [(x, y) for x, iv in c.table.items() for y in iv.elements()]
    dom = sorted(c.table)
    for x1, y2 in pts:
        for x2, y1 in pts:
            if x1 <= x2 and y1 <= y2:
                for x in dom:
                    if x1 <= x <= x2:
                        iv = c.table[x]
                        if not (iv.lo <= y1 and y2 <= iv.hi):
                            return False
    return True


def all_monotone_measures(ground: GroundSet, scale: Chain):
    """Every monotone measure on the full powerset of the ground set."""
    masks = sorted(ground.subsets(), key=lambda m: (m.bit_count(), m))
    top = scale.size - 1
    values = {0: 0, ground.full_mask: top}
    interior = [m for m in masks if m not in (0, ground.full_mask)]

    def rec(i: int):
        if i == len(interior):
            yield Measure(SetFamily.full(ground), scale, dict(values))
            return
        a = interior[i]
        # interior masks come in popcount order, so all strict subsets of a
        # are already assigned; supersets constrain themselves later
        lo = max(values[b] for b in values if b & a == b)
        for v in range(lo, scale.size):
            values[a] = v
            yield from rec(i + 1)
        del values[a]

    yield from rec(0)
