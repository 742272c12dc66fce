"""Resolvable pair packings on square point sets, and the two generators used here.

A 2-(n,k,1) packing puts n points into size-k blocks so that every point
pair appears in at most one block; resolvable means the blocks split into
parallel classes, each partitioning the points. On n = k^2 points any two
blocks from different classes meet in exactly one point, which is the
property the multipartite construction consumes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class ResolvablePacking:
    point_count: int
    block_size: int
    classes: tuple[tuple[frozenset[int], ...], ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_json(self) -> str:
        doc = {
            "point_count": self.point_count,
            "block_size": self.block_size,
            "classes": [[sorted(b) for b in cls] for cls in self.classes],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResolvablePacking":
        doc = json.loads(text)
        classes = tuple(
            tuple(frozenset(block) for block in cls_blocks)
            for cls_blocks in doc["classes"]
        )
        return cls(int(doc["point_count"]), int(doc["block_size"]), classes)


def verify_packing(p: ResolvablePacking) -> bool:
    """Check block sizes, the pair condition, resolvability, and unit cross-class meets."""
    points = frozenset(range(p.point_count))
    if p.block_size < 2 or p.point_count != p.block_size ** 2:
        return False
    all_blocks = [b for cls in p.classes for b in cls]
    if any(len(b) != p.block_size or not b <= points for b in all_blocks):
        return False
    seen_pairs = set()
    for b in all_blocks:
        for pair in itertools.combinations(sorted(b), 2):
            if pair in seen_pairs:
                return False
            seen_pairs.add(pair)
    for cls in p.classes:
        covered = [x for b in cls for x in b]
        if len(covered) != p.point_count or set(covered) != points:
            return False
    for c1, c2 in itertools.combinations(p.classes, 2):
        for b1 in c1:
            for b2 in c2:
                if len(b1 & b2) != 1:
                    return False
    return True


def is_design(p: ResolvablePacking) -> bool:
    """True when every point pair is covered exactly once (not just at most once)."""
    if not verify_packing(p):
        return False
    covered = sum(len(b) * (len(b) - 1) // 2 for cls in p.classes for b in cls)
    return covered == p.point_count * (p.point_count - 1) // 2


def packing_three_classes(k: int) -> ResolvablePacking:
    """Rows, columns, and broken diagonals of a k x k grid; works for every k >= 2."""
    if k < 2:
        raise ValueError("need k >= 2")
    rows = tuple(frozenset(k * r + c for c in range(k)) for r in range(k))
    cols = tuple(frozenset(k * r + c for r in range(k)) for c in range(k))
    diags = tuple(frozenset(k * r + (r + d) % k for r in range(k)) for d in range(k))
    return ResolvablePacking(k * k, k, (rows, cols, diags))


def affine_plane(k: int) -> ResolvablePacking:
    """Affine plane of prime order k: k+1 classes, every pair in exactly one block.

    Lines over Z_k x Z_k: one class per slope m (lines y = m x + c) plus the
    vertical class. Point (x, y) is numbered k*x + y.
    """
    if k < 2 or any(k % d == 0 for d in range(2, k)):
        raise ValueError(
            f"order {k} is not prime; the prime-power construction is unsupported")
    classes = []
    for m in range(k):
        classes.append(tuple(
            frozenset(k * x + (m * x + c) % k for x in range(k)) for c in range(k)))
    classes.append(tuple(
        frozenset(k * c + y for y in range(k)) for c in range(k)))
    return ResolvablePacking(k * k, k, tuple(classes))
