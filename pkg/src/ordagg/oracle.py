"""Definition-literal reference implementations used to validate the
endpoint-formula code paths.

Everything here recomputes results by enumerating elements, choice
functions, set families, or candidate chains, sharing only the core data
types with the optimized implementations.  Slow on purpose.
"""

from __future__ import annotations

from itertools import product

from .aggregation import CommFn, LatticeFn
from .chains import Chain
from .correspondences import Corr
from .errors import DomainError
from .intervals import Interval, Rel
from .measures import Measure

ENUM_BUDGET = 10**6


def _set_to_interval(chain: Chain, values: set[int]) -> Interval:
    lo, hi = min(values), max(values)
    if len(values) != hi - lo + 1:
        raise DomainError(f"enumerated value set {sorted(values)} is not an interval")
    return Interval(chain, lo, hi)


def _join_sets(s1: set[int], s2: set[int]) -> set[int]:
    return {max(a, b) for a in s1 for b in s2}


def _meet_sets(s1: set[int], s2: set[int]) -> set[int]:
    return {min(a, b) for a in s1 for b in s2}


def oracle_sqcup_family(intervals) -> Interval:
    """Join of a family by enumerating all choice functions."""
    ivs = list(intervals)
    if not ivs:
        raise DomainError("join of an empty interval family")
    count = 1
    for iv in ivs:
        count *= iv.hi - iv.lo + 1
        if count > ENUM_BUDGET:
            raise DomainError("enumeration budget exceeded")
    joins = {max(choice) for choice in product(*(iv.elements() for iv in ivs))}
    return _set_to_interval(ivs[0].chain, joins)


def oracle_sqcap_family(intervals) -> Interval:
    """Meet of a family by enumerating all choice functions."""
    ivs = list(intervals)
    if not ivs:
        raise DomainError("meet of an empty interval family")
    count = 1
    for iv in ivs:
        count *= iv.hi - iv.lo + 1
        if count > ENUM_BUDGET:
            raise DomainError("enumeration budget exceeded")
    meets = {min(choice) for choice in product(*(iv.elements() for iv in ivs))}
    return _set_to_interval(ivs[0].chain, meets)


def oracle_topkis(i1: Interval, i2: Interval) -> Rel:
    """Classify two intervals by quantifying over all element pairs."""
    le = all(
        min(a, b) in i1 and max(a, b) in i2 for a in i1.elements() for b in i2.elements()
    )
    ge = all(
        min(a, b) in i2 and max(a, b) in i1 for a in i2.elements() for b in i1.elements()
    )
    if le and ge:
        return Rel.EQUAL
    if le:
        return Rel.LESS
    if ge:
        return Rel.GREATER
    return Rel.INCOMPARABLE


def _literal_product_sets(terms: list[set[int]]) -> set[int]:
    """Fold a join of element sets, starting from the bottom singleton."""
    acc = {0}
    for term in terms:
        acc = _join_sets(acc, term)
    return acc


def oracle_saturation(psi: Corr, x: int) -> Interval:
    """Value of the saturation at x, recomputed as the restricted product
    of the unit vector at x with the table."""
    top = psi.dst.size - 1
    terms: list[set[int]] = []
    for u in psi.dom():
        eps = top if u >= x else 0
        terms.append({min(eps, v) for v in psi.table[u].elements()})
    return _set_to_interval(psi.dst, _literal_product_sets(terms))


def oracle_fan_sugeno(m: Measure, f: LatticeFn, ell: CommFn, variant: str) -> Interval:
    """Aggregate recomputed from raw definitions: level sets, a literal
    graph transpose, literal saturation, and an enumerated product."""
    if f.is_refl():
        f = f.as_plain()
    lsize, msize = f.scale.size, m.scale.size
    g = []
    for x in range(lsize):
        mask = 0
        for i, v in enumerate(f.values):
            if v >= x:
                mask |= 1 << i
        g.append(m.values[mask])

    ginv: dict[int, set[int]] = {}
    for x, y in enumerate(g):
        ginv.setdefault(y, set()).add(x)

    q: dict[int, set[int]] = {}
    for p in range(msize):
        if p in ginv:
            q[p] = set(ginv[p])
            continue
        terms = [set(xs) if u >= p else {0} for u, xs in ginv.items()]
        plain = _literal_product_sets(terms)
        q[p] = plain if variant == "plain" else {max(plain)}

    terms = [{min(ell.values[p], v) for v in q[p]} for p in range(msize)]
    return _set_to_interval(f.scale, _literal_product_sets(terms))


def oracle_minitive(m: Measure) -> bool:
    """Meet-preservation under intersections for every nonempty subfamily."""
    if not m.is_total():
        raise DomainError("minitivity oracle needs a measure on the full powerset")
    ground = m.ground
    if ground.size > 4:
        raise DomainError("minitivity oracle restricted to at most 4 ground elements")
    masks = list(ground.subsets())
    k = len(masks)
    for fam in range(1, 1 << k):
        inter = ground.full_mask
        val = m.scale.size - 1
        for i in range(k):
            if fam >> i & 1:
                inter &= masks[i]
                val = min(val, m.values[masks[i]])
        if m.values[inter] != val:
            return False
    return True


def oracle_lower_chain(m: Measure) -> bool:
    """Whether some inclusion chain reproduces the measure from below.

    Searches every chain of subsets containing the endpoints and rebuilds
    the measure literally as the join over chain members contained in
    each set.
    """
    if not m.is_total():
        raise DomainError("chain oracle needs a measure on the full powerset")
    ground = m.ground
    if ground.size > 3:
        raise DomainError("chain search restricted to at most 3 ground elements")
    interior = [a for a in ground.subsets() if a not in (0, ground.full_mask)]
    k = len(interior)
    for pick in range(1 << k):
        chain = [0, ground.full_mask] + [interior[i] for i in range(k) if pick >> i & 1]
        chain.sort(key=lambda mask: (mask.bit_count(), mask))
        if any(a & b != a for a, b in zip(chain, chain[1:])):
            continue
        ok = True
        for a in ground.subsets():
            rebuilt = max(m.values[c] for c in chain if c & a == c)
            if rebuilt != m.values[a]:
                ok = False
                break
        if ok:
            return True
    return False
