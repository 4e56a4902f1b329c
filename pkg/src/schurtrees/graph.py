"""Edges of the graded graphs G_U, G_U' and G_D and the two-step path sets.

Families are the strings ``"U"`` (nodes added right-strictly), ``"U'"``
(nodes added left-strictly) and ``"D"`` (chain detachment).  Up-edges go from
the smaller tree to the larger one; a D-edge of degree ``i`` is the pair
``(detach_chain(T, i), T)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .errors import LimitExceeded
from .trees import (
    EMPTY,
    LEFT,
    RIGHT,
    ROOT,
    Tree,
    detach_chain,
    enumerate_trees,
    removal_chain,
    trees_up_to,
)

UP_FAMILIES = ("U", "U'")
FAMILIES = ("U", "U'", "D")
DOT_MAX_NODES = 8


def check_family(family: str, allowed=FAMILIES) -> str:
    if family not in allowed:
        raise ValueError(f"unknown family {family!r}; expected one of {allowed}")
    return family


# (letter that starts a chain, letter that continues it) for each slot kind
_CHAIN_LETTERS = {
    "U": {"left": (LEFT, LEFT), "right": (RIGHT, LEFT), "root": (None, LEFT)},
    "U'": {"left": (LEFT, RIGHT), "right": (RIGHT, RIGHT), "root": (None, RIGHT)},
}


def _is_added_form(family: str, w: str, base: Tree) -> bool:
    # U: w = v 1^n or v 2 1^n with v in base; U': letters swapped
    cont = LEFT if family == "U" else RIGHT
    turn = RIGHT if family == "U" else LEFT
    if not base:
        return set(w) <= {cont}
    stem = w.rstrip(cont)
    if stem in base and stem != w:
        return True
    return stem.endswith(turn) and stem[:-1] in base


def up_edge_degree(family: str, small: Tree, large: Tree) -> Optional[int]:
    """Degree of the up-edge ``(small, large)``, or ``None`` if it is not an edge."""
    check_family(family, UP_FAMILIES)
    if not small.nodes <= large.nodes:
        return None
    for w in large.nodes - small.nodes:
        if not _is_added_form(family, w, small):
            return None
    return len(large) - len(small)


def _slots(tree: Tree) -> list[tuple[str, str]]:
    if not tree:
        return [("root", ROOT)]
    out = []
    for v in tree.sorted_nodes():
        if v + LEFT not in tree.nodes:
            out.append(("left", v))
        if v + RIGHT not in tree.nodes:
            out.append(("right", v))
    return out


def _weak_compositions(total: int, parts: int):
    # stars and bars
    for bars in combinations(range(total + parts - 1), parts - 1):
        prev = -1
        comp = []
        for b in bars:
            comp.append(b - prev - 1)
            prev = b
        comp.append(total + parts - 2 - prev)
        yield comp


def _chain(family: str, kind: str, v: str, length: int) -> list[str]:
    first, cont = _CHAIN_LETTERS[family][kind]
    out = []
    w = v + first if first else v
    for _ in range(length):
        out.append(w)
        w += cont
    return out


@lru_cache(maxsize=None)
def up_successors(tree: Tree, i: int, family: str = "U") -> tuple[Tree, ...]:
    """All trees ``T'`` with ``(tree, T')`` an up-edge of degree ``i``.

    Each empty child slot of ``tree`` receives a chain of new nodes (left
    chains or right-then-left chains for U, the mirror image for U'); the
    degree is distributed over the slots in every possible way.
    """
    check_family(family, UP_FAMILIES)
    if i < 0:
        raise ValueError("degree must be non-negative")
    slots = _slots(tree)
    out = []
    for comp in _weak_compositions(i, len(slots)):
        nodes = set(tree.nodes)
        for (kind, v), length in zip(slots, comp):
            nodes.update(_chain(family, kind, v, length))
        out.append(Tree(nodes))
    return tuple(sorted(out, key=Tree.sort_key))


def up_successors_by_filter(tree: Tree, i: int, family: str = "U") -> tuple[Tree, ...]:
    return tuple(t for t in enumerate_trees(len(tree) + i) if up_edge_degree(family, tree, t) == i)


@lru_cache(maxsize=None)
def up_predecessors(tree: Tree, i: int, family: str = "U") -> tuple[Tree, ...]:
    """All ``T''`` with ``(T'', tree)`` an up-edge of degree ``i``."""
    if i > len(tree):
        return ()
    return tuple(t for t in enumerate_trees(len(tree) - i) if up_edge_degree(family, t, tree) == i)


def down_image(tree: Tree, i: int) -> Optional[Tree]:
    """``D_i tree``: the unique lower end of a D-edge of degree ``i``, if any."""
    if i < 0 or i > len(removal_chain(tree)):
        return None
    return detach_chain(tree, i)


@lru_cache(maxsize=None)
def down_preimages(tree: Tree, i: int) -> tuple[Tree, ...]:
    return tuple(t for t in enumerate_trees(len(tree) + i) if down_image(t, i) == tree)


@dataclass(frozen=True)
class PathPair:
    """A two-step path through ``mid``.

    N-variant: ``start -U-> mid`` then ``end = D mid``.
    S-variant: ``mid = D start`` then ``mid -U-> end``.
    """

    variant: str
    family: str
    start: Tree
    mid: Tree
    end: Tree
    up_degree: int
    down_degree: int

    def is_valid(self) -> bool:
        if self.variant == "N":
            return (
                up_edge_degree(self.family, self.start, self.mid) == self.up_degree
                and down_image(self.mid, self.down_degree) == self.end
            )
        return (
            down_image(self.start, self.down_degree) == self.mid
            and up_edge_degree(self.family, self.mid, self.end) == self.up_degree
        )


def paths_N(start: Tree, end: Tree, i: int, j: int, family: str = "U") -> list[PathPair]:
    out = []
    for mid in up_successors(start, i, family):
        if down_image(mid, j) == end:
            out.append(PathPair("N", family, start, mid, end, i, j))
    return out


def k_bound(family: str, i: int, j: int) -> int:
    return min(i, j) if family == "U" else min(1, i, j)


def paths_S_tilde(start: Tree, end: Tree, j: int, i: int, family: str = "U") -> list[tuple[int, PathPair]]:
    """Tagged disjoint union over ``k`` of S-variant paths of degrees ``(i-k, j-k)``."""
    check_family(family, UP_FAMILIES)
    out = []
    for k in range(k_bound(family, i, j) + 1):
        mid = down_image(start, j - k)
        if mid is not None and up_edge_degree(family, mid, end) == i - k:
            out.append((k, PathPair("S", family, start, mid, end, i - k, j - k)))
    return out


def edges(family: str, i: int, max_nodes: int) -> list[tuple[Tree, Tree]]:
    """Edges ``(lower, upper)`` of degree ``i`` among trees of at most ``max_nodes`` nodes."""
    check_family(family)
    out = []
    for t in trees_up_to(max_nodes):
        if family == "D":
            low = down_image(t, i)
            if low is not None:
                out.append((low, t))
        elif len(t) + i <= max_nodes:
            out.extend((t, u) for u in up_successors(t, i, family))
    out.sort(key=lambda e: (e[0].sort_key(), e[1].sort_key()))
    return out


def _check_limit(max_nodes, unsafe):
    if max_nodes > DOT_MAX_NODES and not unsafe:
        raise LimitExceeded(f"max_nodes {max_nodes} exceeds {DOT_MAX_NODES}")


def _oriented(family, lower, upper):
    # arrows follow the operator: up-edges climb, D-edges descend
    return (upper, lower) if family == "D" else (lower, upper)


def export_dot(family: str, i: int, max_nodes: int, unsafe: bool = False) -> str:
    _check_limit(max_nodes, unsafe)
    name = family.replace("'", "p")
    lines = [f'digraph "G_{name}_{i}" {{']
    for t in trees_up_to(max_nodes):
        lines.append(f'  "{t}";')
    for lower, upper in edges(family, i, max_nodes):
        a, b = _oriented(family, lower, upper)
        lines.append(f'  "{a}" -> "{b}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_jsonl(family: str, i: int, max_nodes: int, unsafe: bool = False) -> str:
    _check_limit(max_nodes, unsafe)
    out = []
    for lower, upper in edges(family, i, max_nodes):
        a, b = _oriented(family, lower, upper)
        out.append(json.dumps({"from": str(a), "to": str(b), "family": family, "degree": i}))
    return "".join(line + "\n" for line in out)


__all__ = [
    "EMPTY",
    "PathPair",
    "down_image",
    "down_preimages",
    "edges",
    "export_dot",
    "export_jsonl",
    "k_bound",
    "paths_N",
    "paths_S_tilde",
    "up_edge_degree",
    "up_predecessors",
    "up_successors",
]
