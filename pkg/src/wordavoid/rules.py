"""Succession rules with jumps and marks.

A rule grows a labelled tree: the axiom sits at level 0 and every node
labelled k spawns, for each production, a list of children whose level is
the parent's plus the production's jump.  Marks act as signs: a marked
label on an unmarked parent makes a marked child, and two marks cancel, so
a node's sign is the parity of marks along its ancestry.  The census of a
level records, for each label value, the number of unmarked nodes minus
the number of marked ones; marked nodes annihilate unmarked ones with the
same value on the same level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Callable

PLAIN = "plain"
ZERO1 = "zero1"
ZERO2 = "zero2"

_VARIANTS = (PLAIN, ZERO1, ZERO2)


@dataclass(frozen=True)
class Label:
    """A rule label: a value, an optional zero-variant tag, and a mark."""

    value: int
    variant: str = PLAIN
    marked: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("label values are non-negative")
        if self.variant not in _VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant != PLAIN and self.value != 0:
            raise ValueError("zero variants must carry value 0")

    def flipped(self) -> "Label":
        return replace(self, marked=not self.marked)


@dataclass(frozen=True)
class Production:
    """One production arm: children `labels` at the parent's level + `jump`."""

    jump: int
    labels: tuple[Label, ...]

    def __post_init__(self):
        if self.jump < 1:
            raise ValueError("jumps must be >= 1")


@dataclass(frozen=True)
class RuleSpec:
    """A named rule: axiom plus the productions for each label value."""

    name: str
    axiom: Label
    produce: Callable[[int], tuple[Production, ...]]


class LevelCensus:
    """Signed label counts per level: unmarked minus marked occurrences."""

    __slots__ = ("max_level", "counts")

    def __init__(self, max_level: int, counts: dict[tuple[int, int], int]):
        self.max_level = max_level
        self.counts = {key: c for key, c in counts.items() if c != 0}

    def count(self, level: int, value: int) -> int:
        return self.counts.get((level, value), 0)

    def level_values(self, level: int) -> list[int]:
        return sorted(v for (lv, v) in self.counts if lv == level)

    def level_total(self, level: int) -> int:
        return sum(c for (lv, _), c in self.counts.items() if lv == level)

    def totals(self) -> list[int]:
        return [self.level_total(lv) for lv in range(self.max_level + 1)]

    def max_value(self) -> int:
        return max((v for (_, v) in self.counts), default=0)

    def matrix(self) -> list[list[int]]:
        width = self.max_value() + 1
        return [
            [self.count(lv, v) for v in range(width)]
            for lv in range(self.max_level + 1)
        ]

    def triangle_rows(self) -> list[list[int]]:
        """Row n restricted to values 0..n, the layout of a lower triangle."""
        return [
            [self.count(lv, v) for v in range(lv + 1)]
            for lv in range(self.max_level + 1)
        ]

    def to_csv(self) -> str:
        return "".join(",".join(map(str, row)) + "\n" for row in self.matrix())

    def to_json(self) -> str:
        return json.dumps(self.matrix(), separators=(",", ":"))

    def __eq__(self, other):
        if not isinstance(other, LevelCensus):
            return NotImplemented
        return self.max_level == other.max_level and self.counts == other.counts

    def __repr__(self):
        return f"LevelCensus(max_level={self.max_level})"


def expand(rule: RuleSpec, levels: int) -> LevelCensus:
    """Census the rule's tree down to `levels` by dynamic programming.

    Signs distribute over the per-level net counts: a parent with net
    count c contributes c to an unmarked child's value and -c to a marked
    child's, so nodes are never materialized.
    """
    if levels < 0:
        raise ValueError("levels must be non-negative")
    per_level: list[dict[int, int]] = [{} for _ in range(levels + 1)]
    per_level[0][rule.axiom.value] = -1 if rule.axiom.marked else 1
    productions: dict[int, tuple[Production, ...]] = {}
    for lv in range(levels + 1):
        for value, c in sorted(per_level[lv].items()):
            if c == 0:
                continue
            if value not in productions:
                productions[value] = rule.produce(value)
            for prod in productions[value]:
                target = lv + prod.jump
                if target > levels:
                    continue
                bucket = per_level[target]
                for lab in prod.labels:
                    delta = -c if lab.marked else c
                    bucket[lab.value] = bucket.get(lab.value, 0) + delta
    counts = {
        (lv, value): c
        for lv, bucket in enumerate(per_level)
        for value, c in bucket.items()
    }
    return LevelCensus(levels, counts)


def expand_exhaustive(
    rule: RuleSpec, levels: int, max_nodes: int = 10_000_000
) -> LevelCensus:
    """Census by materializing every node of the tree, one stack entry per
    node.  Exponential; exists to cross-check `expand`."""
    if levels < 0:
        raise ValueError("levels must be non-negative")
    counts: dict[tuple[int, int], int] = {}
    productions: dict[int, tuple[Production, ...]] = {}
    stack = [(0, rule.axiom.value, rule.axiom.marked)]
    seen = 0
    while stack:
        level, value, parity = stack.pop()
        seen += 1
        if seen > max_nodes:
            raise ValueError(f"expansion exceeds {max_nodes} nodes")
        key = (level, value)
        counts[key] = counts.get(key, 0) + (-1 if parity else 1)
        if value not in productions:
            productions[value] = rule.produce(value)
        for prod in productions[value]:
            target = level + prod.jump
            if target > levels:
                continue
            for lab in prod.labels:
                stack.append((target, lab.value, parity != lab.marked))
    return LevelCensus(levels, counts)


# -- built-in rules -----------------------------------------------------------


def catalan_plain_rule() -> RuleSpec:
    """Axiom (2); a node (k) makes (2)(3)...(k)(k+1) one level down."""

    def produce(k: int) -> tuple[Production, ...]:
        labels = tuple(Label(v) for v in range(2, k + 1)) + (Label(k + 1),)
        return (Production(1, labels),)

    return RuleSpec("catalan-plain", Label(2), produce)


def catalan_marked_rule() -> RuleSpec:
    """The marked rewriting of the Catalan rule: (2)(3)...(k)(k+1)(k) plus
    a marked (k) that cancels the duplicate."""

    def produce(k: int) -> tuple[Production, ...]:
        grown = tuple(Label(v) for v in range(2, k + 1)) + (Label(k + 1), Label(k))
        return (
            Production(1, grown),
            Production(1, (Label(k, marked=True),)),
        )

    return RuleSpec("catalan-marked", Label(2), produce)


def motzkin_jump_rule() -> RuleSpec:
    """Axiom (1); (k) makes (1)...(k-1)(k+1) one level down and a copy of
    itself two levels down."""

    def produce(k: int) -> tuple[Production, ...]:
        near = tuple(Label(v) for v in range(1, k)) + (Label(k + 1),)
        return (Production(1, near), Production(2, (Label(k),)))

    return RuleSpec("motzkin-jump", Label(1), produce)


def avoid_rule(j: int) -> RuleSpec:
    """The rule whose census triangle counts avoiders of 1^(j+1) 0^j.

    Axiom (0); a node (k) makes k+3 children (0_1)(0_2)(1)...(k+1) one
    level down, and the same k+3 labels all marked j+1 levels down.
    """
    if j < 1:
        raise ValueError("the family parameter j must be >= 1")

    def produce(k: int) -> tuple[Production, ...]:
        labels = (Label(0, ZERO1), Label(0, ZERO2)) + tuple(
            Label(v) for v in range(1, k + 2)
        )
        return (
            Production(1, labels),
            Production(j + 1, tuple(lab.flipped() for lab in labels)),
        )

    return RuleSpec(f"avoid-j{j}", Label(0), produce)
