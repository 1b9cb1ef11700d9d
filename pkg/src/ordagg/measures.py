"""Chain-valued monotone measures on finite ground sets.

Subsets of the ground set are encoded as bitmasks over the declared
element order.  Measures live on a subset family containing the empty set
and the whole set, are monotone, and map the empty set to the bottom and
the whole set to the top of their scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chains import Chain, ChainElem
from .errors import DomainError

MAX_GROUND_SIZE = 16


@dataclass(frozen=True)
class GroundSet:
    """An ordered finite universe whose subsets are bitmasks."""

    elements: tuple[str, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise DomainError("ground set must be nonempty")
        if len(elements) > MAX_GROUND_SIZE:
            raise DomainError(f"ground set larger than {MAX_GROUND_SIZE} elements")
        if len(set(elements)) != len(elements):
            raise DomainError("ground set elements must be distinct")

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, name: str) -> int:
        try:
            return self.elements.index(name)
        except ValueError:
            raise DomainError(f"unknown ground element {name!r}") from None

    def mask_of(self, names) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def members(self, mask: int) -> list[str]:
        return [e for i, e in enumerate(self.elements) if mask >> i & 1]

    def format_mask(self, mask: int) -> str:
        return "{" + ",".join(self.members(mask)) + "}"

    def subsets(self) -> range:
        return range(self.full_mask + 1)


@dataclass(eq=True)
class SetFamily:
    """A family of subsets containing the empty set and the whole set."""

    ground: GroundSet
    members: frozenset[int]

    def __post_init__(self):
        self.members = frozenset(self.members)
        full = self.ground.full_mask
        for m in self.members:
            if not 0 <= m <= full:
                raise DomainError(f"subset mask {m} outside the ground set")
        if 0 not in self.members or full not in self.members:
            raise DomainError("set family must contain the empty set and the whole set")

    @classmethod
    def full(cls, ground: GroundSet) -> "SetFamily":
        return cls(ground, frozenset(ground.subsets()))

    def is_full(self) -> bool:
        return len(self.members) == self.ground.full_mask + 1


@dataclass(eq=True)
class Measure:
    """A monotone set function into a chain, with fixed endpoints.

    Monotonicity is verified at construction: over the full powerset by a
    single-element sweep of the subset lattice, over partial families by
    checking all comparable member pairs.
    """

    family: SetFamily
    scale: Chain
    values: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        members = self.family.members
        if set(self.values) != set(members):
            raise DomainError("measure table must cover exactly the set family")
        for m, v in self.values.items():
            if not 0 <= v < self.scale.size:
                raise DomainError(
                    f"measure value rank {v} outside chain {self.scale.id!r}"
                )
        ground = self.family.ground
        fmt = ground.format_mask
        if self.family.is_full():
            for a in ground.subsets():
                va = self.values[a]
                for i in range(ground.size):
                    if not a >> i & 1:
                        b = a | 1 << i
                        if va > self.values[b]:
                            raise DomainError(
                                f"measure not monotone: {fmt(a)} > {fmt(b)}"
                            )
        else:
            ms = sorted(members, key=lambda m: (m.bit_count(), m))
            for i, a in enumerate(ms):
                for b in ms[i + 1 :]:
                    if a & b == a and self.values[a] > self.values[b]:
                        raise DomainError(f"measure not monotone: {fmt(a)} > {fmt(b)}")
        if self.values[0] != 0:
            raise DomainError("measure of the empty set must be the bottom")
        if self.values[ground.full_mask] != self.scale.size - 1:
            raise DomainError("measure of the whole set must be the top")

    @property
    def ground(self) -> GroundSet:
        return self.family.ground

    def is_total(self) -> bool:
        return self.family.is_full()

    def __call__(self, mask: int) -> int:
        if mask not in self.values:
            raise DomainError(
                f"subset {self.ground.format_mask(mask)} not in the measure's family"
            )
        return self.values[mask]

    def elem(self, mask: int) -> ChainElem:
        return self.scale.elem(self(mask))


def zeta(b: int, a: int, scale: Chain) -> ChainElem:
    """Containment indicator of the subset order: top iff a contains b."""
    return scale.elem(scale.size - 1 if a & b == b else 0)


def inner_extension(m: Measure) -> Measure:
    """Largest-from-below extension to the full powerset.

    The value at a set is the join of the measure over family members
    contained in it, folded one element at a time over the subset
    lattice (the empty set anchors every chain of subsets).
    """
    ground = m.ground
    arr = [-1] * (ground.full_mask + 1)
    for b, v in m.values.items():
        arr[b] = max(arr[b], v)
    for i in range(ground.size):
        bit = 1 << i
        for a in range(ground.full_mask + 1):
            if a & bit and arr[a & ~bit] > arr[a]:
                arr[a] = arr[a & ~bit]
    return Measure(SetFamily.full(ground), m.scale, dict(enumerate(arr)))


def outer_extension(m: Measure) -> Measure:
    """Smallest-from-above extension to the full powerset.

    The value at a set is the meet of the measure over family members
    containing it (the whole set anchors every chain of supersets).
    """
    ground = m.ground
    sentinel = m.scale.size
    arr = [sentinel] * (ground.full_mask + 1)
    for b, v in m.values.items():
        arr[b] = min(arr[b], v)
    for i in range(ground.size):
        bit = 1 << i
        for a in range(ground.full_mask, -1, -1):
            if not a & bit and arr[a | bit] < arr[a]:
                arr[a] = arr[a | bit]
    return Measure(SetFamily.full(ground), m.scale, dict(enumerate(arr)))


def _validate_chain_sets(ground: GroundSet, sets) -> list[int]:
    """Check that the given masks form an inclusion chain with endpoints."""
    ms = sorted(set(sets), key=lambda m: (m.bit_count(), m))
    if len(ms) != len(list(sets)):
        raise DomainError("chain contains duplicate subsets")
    if not ms or ms[0] != 0 or ms[-1] != ground.full_mask:
        raise DomainError("chain must contain the empty set and the whole set")
    for a, b in zip(ms, ms[1:]):
        if a & b != a:
            raise DomainError(
                f"sets {ground.format_mask(a)} and {ground.format_mask(b)} "
                "are not nested; not a chain"
            )
    return ms


def chain_measure(ground: GroundSet, scale: Chain, sets, values, kind: str) -> Measure:
    """Extend a monotone assignment on an inclusion chain to the powerset.

    kind "lower" takes the inner extension, "upper" the outer extension.
    """
    if kind not in ("lower", "upper"):
        raise DomainError(f"unknown chain measure kind {kind!r}")
    sets = list(sets)
    values = list(values)
    if len(sets) != len(values):
        raise DomainError("chain sets and values differ in length")
    table = dict(zip(sets, values))
    ordered = _validate_chain_sets(ground, sets)
    ranks = [table[s] for s in ordered]
    if any(a > b for a, b in zip(ranks, ranks[1:])):
        raise DomainError("chain values must be monotone along the chain")
    base = Measure(SetFamily(ground, frozenset(ordered)), scale, table)
    return inner_extension(base) if kind == "lower" else outer_extension(base)


def unanimity(ground: GroundSet, coalition: int, scale: Chain) -> Measure:
    """Top exactly on supersets of the coalition."""
    if coalition == 0:
        raise DomainError("unanimity coalition must be nonempty")
    t = scale.size - 1
    values = {a: t if a & coalition == coalition else 0 for a in ground.subsets()}
    return Measure(SetFamily.full(ground), scale, values)


def co_unanimity(ground: GroundSet, coalition: int, scale: Chain) -> Measure:
    """Top exactly on sets meeting the coalition."""
    if coalition == 0:
        raise DomainError("co-unanimity coalition must be nonempty")
    t = scale.size - 1
    values = {a: t if a & coalition else 0 for a in ground.subsets()}
    return Measure(SetFamily.full(ground), scale, values)


def _require_total(m: Measure, op: str) -> None:
    if not m.is_total():
        raise DomainError(f"{op} is defined for measures on the full powerset only")


def is_minitive(m: Measure) -> bool:
    """Whether the measure turns intersections into meets.

    On a full powerset the pairwise condition is equivalent to the value
    at every set being the meet of the values at the co-singletons of the
    missing elements; that form is checked here, the literal pairwise
    condition lives in the oracle module.
    """
    _require_total(m, "minitivity check")
    ground = m.ground
    full = ground.full_mask
    coatom = [m.values[full & ~(1 << i)] for i in range(ground.size)]
    for a in ground.subsets():
        if a == full:
            continue
        expect = min(coatom[i] for i in range(ground.size) if not a >> i & 1)
        if m.values[a] != expect:
            return False
    return True


def is_maxitive(m: Measure) -> bool:
    """Whether the measure turns unions into joins (dual check on atoms)."""
    _require_total(m, "maxitivity check")
    ground = m.ground
    atom = [m.values[1 << i] for i in range(ground.size)]
    for a in ground.subsets():
        if a == 0:
            continue
        expect = max(atom[i] for i in range(ground.size) if a >> i & 1)
        if m.values[a] != expect:
            return False
    return True


def minitive_chain(m: Measure) -> list[int]:
    """Defining chain of a minitive measure.

    For each scale rank, intersect all sets whose measure reaches it;
    together with the endpoints these sets form an inclusion chain whose
    lower chain measure reproduces the input.  The reconstruction is
    verified before returning.
    """
    if not is_minitive(m):
        raise DomainError("measure is not minitive")
    ground = m.ground
    ks = {0, ground.full_mask}
    for x in range(m.scale.size):
        k = ground.full_mask
        for b, v in m.values.items():
            if v >= x:
                k &= b
        ks.add(k)
    sets = sorted(ks, key=lambda mask: (mask.bit_count(), mask))
    rebuilt = chain_measure(ground, m.scale, sets, [m.values[s] for s in sets], "lower")
    if rebuilt.values != m.values:
        raise DomainError("defining chain failed to reproduce the measure")
    return sets


def verify_chain(m: Measure, sets, kind: str) -> bool:
    """Whether rebuilding from the restriction to the chain reproduces m."""
    _require_total(m, "chain verification")
    ordered = _validate_chain_sets(m.ground, list(sets))
    rebuilt = chain_measure(
        m.ground, m.scale, ordered, [m.values[s] for s in ordered], kind
    )
    return rebuilt.values == m.values


def sign_measure(m: Measure) -> Measure:
    """Collapse to a two-valued measure: top wherever the value is above bottom."""
    t = m.scale.size - 1
    values = {a: t if v > 0 else 0 for a, v in m.values.items()}
    return Measure(m.family, m.scale, values)
