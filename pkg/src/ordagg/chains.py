"""Finite linear lattices (chains) and reflection lattices.

A chain of size n carries ranks 0..n-1; rank 0 is the bottom and rank n-1
the top.  A reflection chain glues two order-dual copies of a chain at a
shared reference point, giving signed ranks -n..n with 0 fixed under
reflection.  Finite chains are complete and completely distributive, so
every lattice operation reduces to integer comparisons on ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ChainMismatchError, DomainError

# All algorithms are linear-to-quadratic in chain size; this bound keeps
# desk-scale guarantees.
MAX_CHAIN_SIZE = 10_000


@dataclass(frozen=True)
class Chain:
    """A finite totally ordered scale, identified by name and size."""

    id: str
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise DomainError(f"chain {self.id!r}: size must be a positive integer")
        if self.size > MAX_CHAIN_SIZE:
            raise DomainError(
                f"chain {self.id!r}: size {self.size} exceeds the maximum {MAX_CHAIN_SIZE}"
            )
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise DomainError(
                    f"chain {self.id!r}: expected {self.size} labels, got {len(labels)}"
                )
            if len(set(labels)) != len(labels):
                raise DomainError(f"chain {self.id!r}: labels must be pairwise distinct")

    def label(self, rank: int) -> str:
        if self.labels is not None:
            return self.labels[rank]
        return str(rank)

    def rank_of_label(self, text: str) -> int | None:
        """Resolve a display label back to its rank, or None."""
        for rank in range(self.size):
            if self.label(rank) == text:
                return rank
        return None

    def elem(self, rank: int) -> "ChainElem":
        return ChainElem(self, rank)


@dataclass(frozen=True)
class ChainElem:
    """A point of a chain, identified by rank."""

    chain: Chain
    rank: int

    def __post_init__(self):
        if not 0 <= self.rank < self.chain.size:
            raise DomainError(
                f"rank {self.rank} out of range for chain {self.chain.id!r} "
                f"of size {self.chain.size}"
            )

    def __str__(self):
        return self.chain.label(self.rank)


def _same_chain(x: ChainElem, y: ChainElem) -> None:
    if x.chain != y.chain:
        raise ChainMismatchError(
            f"elements of different chains: {x.chain.id!r} vs {y.chain.id!r}"
        )


def join(x: ChainElem, y: ChainElem) -> ChainElem:
    """Least upper bound: the max-rank element."""
    _same_chain(x, y)
    return x if x.rank >= y.rank else y


def meet(x: ChainElem, y: ChainElem) -> ChainElem:
    """Greatest lower bound: the min-rank element."""
    _same_chain(x, y)
    return x if x.rank <= y.rank else y


def top(c: Chain) -> ChainElem:
    return c.elem(c.size - 1)


def bottom(c: Chain) -> ChainElem:
    return c.elem(0)


def leq(x: ChainElem, y: ChainElem) -> bool:
    _same_chain(x, y)
    return x.rank <= y.rank


@dataclass(frozen=True)
class ReflChain:
    """Two order-dual copies of a chain glued at a shared reference point.

    The carrier has 2*half_size + 1 points with signed ranks in
    [-half_size, half_size]; signed rank 0 is the reference point, fixed
    under reflection.  Labels, when given, name the nonnegative points;
    negative points display with a leading minus.
    """

    id: str
    half_size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.half_size, int) or self.half_size < 1:
            raise DomainError(f"reflection chain {self.id!r}: half_size must be >= 1")
        if 2 * self.half_size + 1 > MAX_CHAIN_SIZE:
            raise DomainError(
                f"reflection chain {self.id!r}: carrier exceeds the maximum size"
            )
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.half_size + 1:
                raise DomainError(
                    f"reflection chain {self.id!r}: expected {self.half_size + 1} "
                    f"labels for the nonnegative half, got {len(labels)}"
                )
            if len(set(labels)) != len(labels):
                raise DomainError(
                    f"reflection chain {self.id!r}: labels must be pairwise distinct"
                )

    @property
    def size(self) -> int:
        return 2 * self.half_size + 1

    def label(self, srank: int) -> str:
        base = self.labels[abs(srank)] if self.labels is not None else str(abs(srank))
        return base if srank >= 0 else "-" + base

    def srank_of_label(self, text: str) -> int | None:
        for srank in range(-self.half_size, self.half_size + 1):
            if self.label(srank) == text:
                return srank
        return None

    def elem(self, srank: int) -> "ReflElem":
        return ReflElem(self, srank)

    def positive_half(self) -> Chain:
        """The nonnegative half as a chain in its own right."""
        return Chain(self.id + "+", self.half_size + 1, self.labels)

    def as_chain(self) -> Chain:
        """The whole carrier viewed as a plain chain of size 2n+1."""
        labels = tuple(self.label(s) for s in range(-self.half_size, self.half_size + 1))
        return Chain(self.id + "#", self.size, labels)


@dataclass(frozen=True)
class ReflElem:
    """A point of a reflection chain, identified by signed rank."""

    chain: ReflChain
    srank: int

    def __post_init__(self):
        n = self.chain.half_size
        if not -n <= self.srank <= n:
            raise DomainError(
                f"signed rank {self.srank} out of range for reflection chain "
                f"{self.chain.id!r} of half size {n}"
            )

    def __str__(self):
        return self.chain.label(self.srank)


def _same_refl(x: ReflElem, y: ReflElem) -> None:
    if x.chain != y.chain:
        raise ChainMismatchError(
            f"elements of different reflection chains: {x.chain.id!r} vs {y.chain.id!r}"
        )


def refl(x: ReflElem) -> ReflElem:
    """Order-reversing reflection at the reference point."""
    return x.chain.elem(-x.srank)


def absolute(x: ReflElem) -> ReflElem:
    """x itself if nonnegative, its reflection otherwise."""
    return x if x.srank >= 0 else refl(x)


def sign(x: ReflElem) -> ReflElem:
    """Top, reference point, or reflected top, by the sign of x."""
    n = x.chain.half_size
    if x.srank > 0:
        return x.chain.elem(n)
    if x.srank < 0:
        return x.chain.elem(-n)
    return x.chain.elem(0)


def svee(x: ReflElem, y: ReflElem) -> ReflElem:
    """Pseudo-addition: the absolutely larger operand.

    On the nonnegative half this is the join, on the nonpositive half the
    meet.  Operands of strictly opposite signs with equal absolute value
    cancel to the reference point.
    """
    _same_refl(x, y)
    a, b = x.srank, y.srank
    if a >= 0 and b >= 0:
        return x if a >= b else y
    if a <= 0 and b <= 0:
        return x if a <= b else y
    # strictly opposite signs
    if abs(a) > abs(b):
        return x
    if abs(a) < abs(b):
        return y
    return x.chain.elem(0)


def striangle(x: ReflElem, y: ReflElem) -> ReflElem:
    """Pseudo-multiplication: meet of absolute values with the sign rule.

    The result is negative exactly when the operands have strictly
    opposite signs; a reference-point operand yields the reference point
    either way.
    """
    _same_refl(x, y)
    a, b = x.srank, y.srank
    m = min(abs(a), abs(b))
    if (a > 0 and b < 0) or (a < 0 and b > 0):
        return x.chain.elem(-m)
    return x.chain.elem(m)


def dist_r(x: ReflElem, y: ReflElem) -> ReflElem:
    """Ordinal distance: reference point if equal, else join of absolute values."""
    _same_refl(x, y)
    if x.srank == y.srank:
        return x.chain.elem(0)
    return x.chain.elem(max(abs(x.srank), abs(y.srank)))
