"""Finite multi-valued sets.

A :class:`XiSet` is a value that equals several ordinary finite sets at
once; its components are kept deduplicated in first-appearance order, and
its class is the number of distinct components.  An ordinary set embeds as
the class-1 case.  Equality between xi-sets ignores component order.

The two forming functions come from evaluating an infinite alternating
intersection/union chain under its two natural bracketings:

    cap_xi(A, B) -> A || (A cap B)        cup_xi(A, B) -> (A cup B) || A

:func:`eval_chain` replays that mechanism at finite length: the Aligned
bracketing consumes the tokens as (G cap P) groups, the Shifted bracketing
regroups them as G cap (P cup G) cap ... and leaves a final partner operand
dangling -- the same move that reassigns Grandi's series a different sum.
The divergence between the two is demonstrated, never asserted as an
equality of sets: an empty partner yields theta one way and G the other.

Operations on xi-sets act pairwise over the Cartesian product of components,
so the class of a result is at most the product of the operand classes.
Infinite classes have no finite data model and are out of scope.

All values are immutable; everything here is pure.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable

__all__ = [
    "FiniteSet",
    "EMPTY_SET",
    "XiSet",
    "xi_cap",
    "xi_cup",
    "xi_union",
    "xi_intersection",
    "xi_difference",
    "MembershipMode",
    "MembershipReport",
    "membership",
    "ChainStrategy",
    "SetExprChain",
    "ChainResult",
    "eval_chain",
    "grandi_demo",
    "format_finite_set",
]

FiniteSet = frozenset
EMPTY_SET: frozenset = frozenset()


def _atom_key(atom):
    if isinstance(atom, int):
        return (0, atom, "")
    return (1, 0, str(atom))


def format_finite_set(s: Iterable[Hashable]) -> str:
    """Render a finite set in the expression-language syntax; theta is ``0``."""
    items = sorted(s, key=_atom_key)
    if not items:
        return "0"
    return "{" + ",".join(str(a) for a in items) + "}"


@dataclass(frozen=True, eq=False)
class XiSet:
    """An ordered, deduplicated tuple of component sets."""

    components: tuple[frozenset, ...]

    def __post_init__(self):
        normalized = tuple(dict.fromkeys(frozenset(c) for c in self.components))
        if not normalized:
            raise ValueError("a xi-set needs at least one component")
        object.__setattr__(self, "components", normalized)

    @classmethod
    def of(cls, *components: Iterable[Hashable]) -> "XiSet":
        return cls(tuple(components))

    @property
    def xi_class(self) -> int:
        return len(self.components)

    # equality is extensional and order-insensitive (components are already
    # deduplicated, so comparing them as sets loses nothing)
    def __eq__(self, other):
        if not isinstance(other, XiSet):
            return NotImplemented
        return frozenset(self.components) == frozenset(other.components)

    def __hash__(self):
        return hash(frozenset(self.components))

    def __or__(self, other: "XiSet") -> "XiSet":
        return xi_union(self, other)

    def __and__(self, other: "XiSet") -> "XiSet":
        return xi_intersection(self, other)

    def __sub__(self, other: "XiSet") -> "XiSet":
        return xi_difference(self, other)

    def __str__(self):
        return " || ".join(format_finite_set(c) for c in self.components)

    def __repr__(self):
        return f"XiSet[{self}]"


def xi_cap(a: Iterable[Hashable], b: Iterable[Hashable]) -> XiSet:
    """Forming function: the chain A cap B cup A cap B cup ... evaluates to
    A under one bracketing and to A cap B under the other, so its value is
    the xi-set A || (A cap B).  Class 1 exactly when A is a subset of B."""
    a, b = frozenset(a), frozenset(b)
    return XiSet.of(a, a & b)


def xi_cup(a: Iterable[Hashable], b: Iterable[Hashable]) -> XiSet:
    """Forming function: (A cup B) || A, by the dual bracketing argument."""
    a, b = frozenset(a), frozenset(b)
    return XiSet.of(a | b, a)


def _pairwise(x: XiSet, y: XiSet, op) -> XiSet:
    return XiSet(tuple(op(cx, cy) for cx in x.components for cy in y.components))


def xi_union(x: XiSet, y: XiSet) -> XiSet:
    """Pairwise union over the component product (class at most m * n)."""
    return _pairwise(x, y, frozenset.__or__)


def xi_intersection(x: XiSet, y: XiSet) -> XiSet:
    return _pairwise(x, y, frozenset.__and__)


def xi_difference(x: XiSet, y: XiSet) -> XiSet:
    return _pairwise(x, y, frozenset.__sub__)


class MembershipMode(enum.Enum):
    ALL = "all"
    SOME = "some"
    NONE = "none"


@dataclass(frozen=True)
class MembershipReport:
    """Which components (1-based indices) contain the atom."""

    atom: Hashable
    index_set: frozenset
    mode: MembershipMode


def membership(atom: Hashable, x: XiSet) -> MembershipReport:
    """Indexed membership: T = { i : atom in component i }.

    mode is ALL when T covers every component, NONE when T is empty (the
    traditional "not a member"), SOME otherwise.
    """
    indices = frozenset(i for i, c in enumerate(x.components, start=1) if atom in c)
    if not indices:
        mode = MembershipMode.NONE
    elif len(indices) == x.xi_class:
        mode = MembershipMode.ALL
    else:
        mode = MembershipMode.SOME
    return MembershipReport(atom=atom, index_set=indices, mode=mode)


class ChainStrategy(enum.Enum):
    ALIGNED = "aligned"
    SHIFTED = "shifted"


@dataclass(frozen=True)
class SetExprChain:
    """A finite alternating chain  G cap P cup G cap P cup ... cap P.

    ``length`` counts the (G cap P) operand pairs, i.e. the number of cap
    tokens; unions alternate between them.
    """

    base: frozenset
    partner: frozenset
    length: int
    strategy: ChainStrategy

    def __post_init__(self):
        object.__setattr__(self, "base", frozenset(self.base))
        object.__setattr__(self, "partner", frozenset(self.partner))
        if self.length < 1:
            raise ValueError(f"chain length must be >= 1, got {self.length!r}")


@dataclass(frozen=True)
class ChainResult:
    """Chain value plus the bookkeeping that makes the regrouping auditable.

    ``dangling`` is the trailing partner operand the Shifted bracketing
    leaves unconsumed (None for Aligned, which consumes every token).
    """

    value: frozenset
    strategy: ChainStrategy
    groups: int
    dangling: frozenset | None


def eval_chain(chain: SetExprChain) -> ChainResult:
    """Evaluate the chain under its bracketing strategy, by actual folding.

    Aligned groups as (G cap P) cup (G cap P) cup ... and returns G cap P.
    Shifted regroups as G cap (P cup G) cap (P cup G) ... with the final P
    left dangling; since G is contained in P cup G this returns G -- in
    particular G itself for an empty partner, where Aligned returns theta.
    """
    g, p = chain.base, chain.partner
    if chain.strategy is ChainStrategy.ALIGNED:
        acc = g & p
        for _ in range(chain.length - 1):
            acc = acc | (g & p)
        return ChainResult(acc, chain.strategy, chain.length, None)
    acc = g
    for _ in range(chain.length - 1):
        acc = acc & (p | g)
    return ChainResult(acc, chain.strategy, chain.length - 1, p)


def grandi_demo(k: int) -> tuple[list[int], Fraction]:
    """Partial sums of 1 - 1 + 1 - 1 + ... and their exact Cesaro mean.

    The sums alternate 1, 0, 1, 0, ...; the mean of the first k of them is
    ceil(k/2) / k, which tends to 1/2 -- the summation value the alternating
    chain analogy is built on.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k!r}")
    sums: list[int] = []
    acc = 0
    for n in range(k):
        acc += 1 if n % 2 == 0 else -1
        sums.append(acc)
    return sums, Fraction(sum(sums), k)
