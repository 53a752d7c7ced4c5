"""Cross-module consistency checks.

Everything here ties two independent routes to the same numbers: the
closed-form triangle against its defining recurrences, the rule census
against the triangle, the materialized tree against the census, survivor
words against brute-force avoider sets, and the cut-and-paste mapping
against its inverse.  Each check reports pass/fail with a short detail
string instead of raising, so a caller can run the whole battery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pattern import avoider_table, avoiding_words
from .paths import (
    AnnotatedPath,
    build_tree,
    occurrence_count,
    signed_census,
    word_census,
    zero1_forward,
    zero1_inverse,
)
from .riordan import (
    a_sequence_from_h,
    d_from_z,
    family_a,
    family_d,
    family_h,
    family_triangle,
    family_z,
    triangles_from_table,
    verify_a_matrix,
    verify_a_sequence,
    verify_column_doubling,
    verify_recurrence,
)
from .rules import avoid_rule, expand


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _result(name: str, passed: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, passed, "" if passed else detail)


def run_checks(j: int, levels: int, triangle_order: int = 12) -> list[CheckResult]:
    """Run the battery for one family parameter.

    `levels` bounds the materialized tree (and so the survivor scales);
    `triangle_order` bounds the series and triangle checks.
    """
    if j < 1:
        raise ValueError("the family parameter j must be >= 1")
    if levels < 0 or triangle_order < max(levels, j + 1):
        raise ValueError("need triangle_order >= levels and > j")
    out = []
    pattern = "1" * (j + 1) + "0" * j

    triangle = family_triangle(j, triangle_order)
    bad = verify_recurrence(triangle, j)
    out.append(_result("row-recurrence", not bad, f"{len(bad)} violations"))
    out.append(_result("column-doubling", verify_column_doubling(triangle)))
    out.append(_result("two-row-recurrence", verify_a_matrix(triangle, j)))

    a_poly = family_a(j, triangle_order - 1)
    a_h = a_sequence_from_h(family_h(j, triangle_order))
    bad = verify_a_sequence(triangle, a_poly)
    out.append(
        _result(
            "a-sequence",
            a_poly == a_h and not bad,
            f"routes agree: {a_poly == a_h}; {len(bad)} row violations",
        )
    )

    rebuilt = d_from_z(1, family_z(j, triangle_order - 1), family_h(j, triangle_order))
    out.append(_result("z-sequence", rebuilt == family_d(j, triangle_order)))

    lower, _ = triangles_from_table(avoider_table(pattern, triangle_order))
    out.append(_result("table-agreement", lower == triangle))

    census = expand(avoid_rule(j), levels)
    rows = [triangle.rows[n] for n in range(levels + 1)]
    got = [tuple(r) for r in census.triangle_rows()]
    out.append(_result("rule-census", got == rows, "census differs from triangle"))

    tree = build_tree(j, levels)
    out.append(
        _result("construction-census", signed_census(tree) == census,
                "tree census differs from rule census")
    )

    bad_words = []
    for n in range(levels + 1):
        wanted = set()
        for k in range(n + 1):
            wanted |= avoiding_words(pattern, n, k)
        net_one = set()
        for word, (even, odd) in word_census(tree[n]).items():
            net = even - odd
            if net == 1:
                net_one.add(word)
            elif net != 0:
                bad_words.append((n, word, net))
        if net_one != wanted:
            bad_words.append((n, "survivor-set-mismatch", 0))
    out.append(_result("survivors", not bad_words, f"first issues: {bad_words[:3]}"))

    bad_words = []
    for n in range(levels + 1):
        for word, (even, odd) in word_census(tree[n]).items():
            c = occurrence_count(word, j)
            want = (1, 0) if c == 0 else (2 ** (c - 1), 2 ** (c - 1))
            if (even, odd) != want:
                bad_words.append((n, word, even, odd))
    out.append(_result("copies-law", not bad_words, f"first issues: {bad_words[:3]}"))

    bad_trips = _roundtrip_violations(tree, j, levels)
    out.append(_result("round-trip", not bad_trips, f"first issues: {bad_trips[:3]}"))
    return out


def _roundtrip_violations(tree, j: int, levels: int) -> list[str]:
    """Apply forward-then-inverse to every axis-rise production input the
    tree ever feeds to the rearrangement, mirroring the build's gating."""
    out = []
    for lv, nodes in enumerate(tree):
        for node in nodes:
            hooks = []
            k = node.label.value
            if lv + 1 <= levels:
                hooks.append(
                    AnnotatedPath(j, node.path.steps + "1" + "0" * k, node.path.marks)
                )
            if lv + j + 1 <= levels:
                hooks.append(
                    AnnotatedPath(
                        j,
                        node.path.steps + node.path.block + "0" * k,
                        node.path.marks + (len(node.path.steps),),
                    )
                )
            for hook in hooks:
                if zero1_inverse(zero1_forward(hook)) != hook:
                    out.append(hook.steps)
    return out
