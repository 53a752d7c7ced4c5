"""Signed lattice-path construction of the avoider tree.

A word maps to a path: '1' is a rise step (1, 1), '0' a fall step (1, -1).
Growing all paths by the avoid rule of module `rules` requires a geometric
action per label.  Most children just append a rise and some falls; the
zero-sub-1 child, which must end on the axis with a rise as its last step,
is produced by a cut-and-paste rearrangement (`zero1_forward`) that this
module also inverts.  Marked blocks are indivisible occurrences of the
forbidden factor '1' * (j+1) + '0' * j dropped in by the rule's jumping
production; a node's sign is the parity of its marked blocks, and summing
signs per word annihilates every word containing the factor while leaving
each avoider exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rules import PLAIN, ZERO1, ZERO2, Label, LevelCensus


class TooLarge(Exception):
    """Tree expansion refused: the level guard was exceeded."""


class MalformedInput(Exception):
    """The path cannot occur where the construction needs it."""


class NotInImage(Exception):
    """The path is not an output of the forward rearrangement."""


class InconsistentCensus(Exception):
    """A word's net signed multiplicity is neither 0 nor 1."""


_COMPLEMENT = str.maketrans("01", "10")


def complement(word: str) -> str:
    """Swap rises and falls."""
    return word.translate(_COMPLEMENT)


def _ordinates(steps: str) -> list[int]:
    out = [0]
    for ch in steps:
        out.append(out[-1] + (1 if ch == "1" else -1))
    return out


@dataclass(frozen=True)
class AnnotatedPath:
    """A path plus the start indices of its marked blocks.

    A marked block spans steps s .. s + 2j and must spell the forbidden
    factor exactly; blocks are pairwise disjoint and cannot be cut.  Point
    m is the lattice point between steps m - 1 and m; a point strictly
    inside a block is one between two of the block's steps.
    """

    j: int
    steps: str
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        if self.j < 1:
            raise ValueError("the family parameter j must be >= 1")
        if set(self.steps) - {"0", "1"}:
            raise ValueError("steps must be a string over 0/1")
        marks = tuple(sorted(self.marks))
        object.__setattr__(self, "marks", marks)
        span = self.span
        block = self.block
        prev_end = None
        for s in marks:
            if s < 0 or s + span > len(self.steps):
                raise ValueError(f"marked block at {s} leaves the path")
            if self.steps[s : s + span] != block:
                raise ValueError(f"steps at {s} do not spell the factor")
            if prev_end is not None and s < prev_end:
                raise ValueError("marked blocks overlap")
            prev_end = s + span

    @property
    def span(self) -> int:
        return 2 * self.j + 1

    @property
    def block(self) -> str:
        return "1" * (self.j + 1) + "0" * self.j

    @property
    def rises(self) -> int:
        return self.steps.count("1")

    @property
    def endpoint(self) -> int:
        return 2 * self.steps.count("1") - len(self.steps)

    def ordinates(self) -> list[int]:
        return _ordinates(self.steps)

    def is_interior_point(self, m: int) -> bool:
        return any(s < m < s + self.span for s in self.marks)

    def step_in_mark(self, i: int) -> bool:
        return any(s <= i < s + self.span for s in self.marks)


def _rearranged(path: AnnotatedPath, pieces, error) -> AnnotatedPath:
    # pieces: (a, b) step ranges of the old path, or literal unmarked step
    # strings; marks travel with their range and must never be cut.
    span = path.span
    out = []
    new_marks = []
    offset = 0
    for piece in pieces:
        if isinstance(piece, str):
            out.append(piece)
            offset += len(piece)
            continue
        a, b = piece
        out.append(path.steps[a:b])
        for s in path.marks:
            if s + span <= a or s >= b:
                continue
            if a <= s and s + span <= b:
                new_marks.append(offset + s - a)
            else:
                raise error("a cut would split a marked block")
        offset += b - a
    return AnnotatedPath(path.j, "".join(out), tuple(new_marks))


def zero1_forward(path: AnnotatedPath) -> AnnotatedPath:
    """Rearrange a path ending at ordinate 1 into its zero-sub-1 child.

    Write the input as v + phi with phi the rightmost suffix starting on
    the axis and staying strictly above it.  Without marked blocks in phi
    the child is v + complement(phi) + rise.  With marked blocks, take the
    rightmost highest marked peak in phi, let T be the ordinate of the
    highest uncut point from that block's end rightwards, cut phi at z,
    the leftmost highest uncut point with ordinate at least T, and emit
    v + fall + phi[z:] + phi[:z].  Mark count is preserved either way.
    """
    ords = _ordinates(path.steps)
    if not path.steps or ords[-1] != 1:
        raise MalformedInput("input must end at ordinate 1")
    i = max(m for m, o in enumerate(ords) if o <= 0)
    # a unit-step path above the axis afterwards forces an exact axis hit
    assert ords[i] == 0
    if path.is_interior_point(i):
        raise MalformedInput("suffix would start inside a marked block")
    n = len(path.steps)
    in_phi = [s for s in path.marks if s >= i]
    if not in_phi:
        head = path.steps[:i]
        return AnnotatedPath(path.j, head + complement(path.steps[i:]) + "1", path.marks)
    peak = path.j + 1
    r_span = max(in_phi, key=lambda s: (ords[s + peak], s))
    block_end = r_span + path.span
    t_ord = max(ords[m] for m in range(block_end, n + 1) if not path.is_interior_point(m))
    z_points = [
        m
        for m in range(i, n + 1)
        if ords[m] >= t_ord and not path.is_interior_point(m)
    ]
    top = max(ords[m] for m in z_points)
    z = min(m for m in z_points if ords[m] == top)
    return _rearranged(path, [(0, i), "0", (z, n), (i, z)], MalformedInput)


def zero1_inverse(path: AnnotatedPath) -> AnnotatedPath:
    """Undo `zero1_forward`.

    Find d, the rightmost uncut fall step starting on the axis with every
    marked peak to its right at ordinate at most j.  If marked blocks lie
    right of d, drop d, cut the rest at its rightmost lowest point l, and
    swap the halves: head + rest[l:] + rest[:l].  Otherwise the last step
    must be a rise; drop it and complement the mark-free suffix hanging
    from the last axis point.
    """
    ords = _ordinates(path.steps)
    if not path.steps or ords[-1] != 0:
        raise NotInImage("image paths end on the axis")
    n = len(path.steps)
    d = None
    for step in range(n - 1, -1, -1):
        if path.steps[step] != "0" or ords[step] != 0 or path.step_in_mark(step):
            continue
        if all(ords[s + path.j + 1] <= path.j for s in path.marks if s > step):
            d = step
            break
    if d is None:
        raise NotInImage("no cut step qualifies")
    if any(s > d for s in path.marks):
        base = d + 1
        low = min(ords[m] for m in range(base, n + 1))
        l = max(m for m in range(base, n + 1) if ords[m] == low)
        return _rearranged(path, [(0, d), (l, n), (base, l)], NotInImage)
    if path.steps[-1] != "1":
        raise NotInImage("an image without late marks ends with a rise")
    start = max(m for m in range(n) if ords[m] == 0)
    if any(s + path.span > start for s in path.marks):
        raise NotInImage("marks would be complemented")
    head = path.steps[:start]
    return AnnotatedPath(path.j, head + complement(path.steps[start : n - 1]), path.marks)


@dataclass(frozen=True)
class ConstructionNode:
    """A tree node: its path, its rule label, and its level."""

    path: AnnotatedPath
    label: Label
    level: int

    def __post_init__(self):
        if self.level != self.path.rises:
            raise ValueError("level must equal the number of rise steps")
        if self.label.value != self.path.endpoint:
            raise ValueError("label value must equal the endpoint ordinate")
        if self.label.marked != (len(self.path.marks) % 2 == 1):
            raise ValueError("label mark must match the block parity")

    @property
    def sign(self) -> int:
        return -1 if self.label.marked else 1


def _children(node: ConstructionNode, appended_marks: tuple[int, ...], body: str,
              jump: int) -> list[ConstructionNode]:
    path = node.path
    j, k = path.j, node.label.value
    adds_mark = len(appended_marks) % 2 == 1
    child_marked = node.label.marked != adds_mark
    level = node.level + jump
    marks = path.marks + appended_marks
    kids = []
    hook = AnnotatedPath(j, path.steps + body + "0" * k, marks)
    kids.append(
        ConstructionNode(zero1_forward(hook), Label(0, ZERO1, child_marked), level)
    )
    for h in range(k + 2):
        grown = AnnotatedPath(j, path.steps + body + "0" * (k + 1 - h), marks)
        variant = ZERO2 if h == 0 else PLAIN
        kids.append(ConstructionNode(grown, Label(h, variant, child_marked), level))
    return kids


def produce_plain(node: ConstructionNode) -> list[ConstructionNode]:
    """The k+3 children one level down: a rise and a tail of falls, with
    the axis-rise child routed through `zero1_forward`."""
    return _children(node, (), "1", 1)


def produce_marked(node: ConstructionNode) -> list[ConstructionNode]:
    """The k+3 children j+1 levels down, each gaining one marked block."""
    start = len(node.path.steps)
    return _children(node, (start,), node.path.block, node.path.j + 1)


def build_tree(j: int, max_level: int) -> list[list[ConstructionNode]]:
    """Materialize the whole tree, nodes grouped by level 0..max_level."""
    if j < 1:
        raise ValueError("the family parameter j must be >= 1")
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    limit = 9 if j == 1 else 8
    if max_level > limit:
        raise TooLarge(f"levels beyond {limit} for j={j} are too big to build")
    levels: list[list[ConstructionNode]] = [[] for _ in range(max_level + 1)]
    root = ConstructionNode(AnnotatedPath(j, ""), Label(0), 0)
    levels[0].append(root)
    for lv in range(max_level + 1):
        for node in levels[lv]:
            if lv + 1 <= max_level:
                levels[lv + 1].extend(produce_plain(node))
            if lv + j + 1 <= max_level:
                levels[lv + j + 1].extend(produce_marked(node))
    return levels


def word_census(nodes) -> dict[str, tuple[int, int]]:
    """Per word: (even-mark-parity node count, odd-mark-parity count)."""
    out: dict[str, tuple[int, int]] = {}
    for node in nodes:
        even, odd = out.get(node.path.steps, (0, 0))
        if len(node.path.marks) % 2:
            out[node.path.steps] = (even, odd + 1)
        else:
            out[node.path.steps] = (even + 1, odd)
    return out


def survivors(j: int, n: int) -> set[str]:
    """Words at level n with net signed multiplicity +1.

    Every other word must net to 0; anything else is a construction bug
    and raises InconsistentCensus.
    """
    levels = build_tree(j, n)
    out = set()
    for word, (even, odd) in word_census(levels[n]).items():
        net = even - odd
        if net == 1:
            out.add(word)
        elif net != 0:
            raise InconsistentCensus(f"word {word} has net multiplicity {net}")
    return out


def copies_census(j: int, n: int) -> dict[str, tuple[int, int]]:
    """The (even, odd) node counts of every word at level n."""
    return word_census(build_tree(j, n)[n])


def signed_census(levels: list[list[ConstructionNode]]) -> LevelCensus:
    """Fold materialized levels into the signed label census."""
    counts: dict[tuple[int, int], int] = {}
    for nodes in levels:
        for node in nodes:
            key = (node.level, node.label.value)
            counts[key] = counts.get(key, 0) + node.sign
    return LevelCensus(len(levels) - 1, counts)


def occurrence_count(word: str, j: int) -> int:
    """Occurrences of the forbidden factor in a word."""
    block = "1" * (j + 1) + "0" * j
    return sum(
        1 for i in range(len(word) - len(block) + 1) if word[i : i + len(block)] == block
    )


def node_json(node: ConstructionNode) -> dict:
    """The stable serialized form of a node."""
    return {
        "word": node.path.steps,
        "marks": list(node.path.marks),
        "label": {
            "value": node.label.value,
            "variant": node.label.variant,
            "marked": node.label.marked,
        },
        "level": node.level,
    }
