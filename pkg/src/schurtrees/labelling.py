"""Monotone labellings of trees and their identification with graph paths.

Three kinds of labelling ``T -> {1..m}`` are supported:

* ``RIGHT_STRICT``: weakly increasing into left subtrees, strictly into right ones;
* ``LEFT_STRICT``: strictly increasing into left subtrees, weakly into right ones;
* ``BINARY_SEARCH``: left subtree labels are ``<=``, right subtree labels ``>``.

All conditions quantify over whole subtrees, not just children.  Right- and
left-strict labellings correspond to paths of G_U and G_U' (label ``i`` marks
the nodes added at step ``i``), binary-searching labellings to paths of G_D
(the nodes carrying the top label form a prefix of the removal chain).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidLabelling, MalformedPath, ParseError
from .graph import down_image, up_edge_degree
from .trees import (
    EMPTY,
    LEFT,
    Tree,
    detach_chain,
    format_word,
    include_chain,
    parse_word,
    removal_chain,
    validate_tree,
)


class Kind(enum.Enum):
    RIGHT_STRICT = "right-strict"
    LEFT_STRICT = "left-strict"
    BINARY_SEARCH = "binary-search"

    @property
    def path_kind(self) -> str:
        return {"right-strict": "U", "left-strict": "U'", "binary-search": "D"}[self.value]

    @classmethod
    def for_path_kind(cls, kind: str) -> Kind:
        return {"U": cls.RIGHT_STRICT, "U'": cls.LEFT_STRICT, "D": cls.BINARY_SEARCH}[kind]


def _pair_ok(kind: Kind, upper: int, lower: int, letter: str) -> bool:
    # upper is the label at w, lower the label at some v in T_{w letter}
    if kind is Kind.RIGHT_STRICT:
        return upper <= lower if letter == LEFT else upper < lower
    if kind is Kind.LEFT_STRICT:
        return upper < lower if letter == LEFT else upper <= lower
    return upper >= lower if letter == LEFT else upper < lower


@dataclass(frozen=True)
class Labelling:
    """Labels are stored in the shortlex order of ``tree.sorted_nodes()``."""

    tree: Tree
    kind: Kind
    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        if len(self.values) != len(self.tree):
            raise InvalidLabelling("labelling must assign a value to every node")
        if any(not 1 <= x <= self.m for x in self.values):
            raise InvalidLabelling(f"labels must lie in 1..{self.m}")

    @classmethod
    def from_map(cls, tree: Tree, kind: Kind, mapping: dict, m: int | None = None) -> Labelling:
        if set(mapping) != set(tree.nodes):
            raise InvalidLabelling("labelling must be total on the tree")
        values = tuple(mapping[w] for w in tree.sorted_nodes())
        if m is None:
            m = max(values, default=0)
        return cls(tree, kind, values, m)

    @property
    def label_map(self) -> dict:
        return dict(zip(self.tree.sorted_nodes(), self.values))

    def __str__(self):
        body = ", ".join(f"{format_word(w)}:{x}" for w, x in zip(self.tree.sorted_nodes(), self.values))
        return f"{self.kind.value}; {{{body}}}"

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> Labelling:
        try:
            kind_text, body = text.split(";", 1)
            kind = Kind(kind_text.strip())
        except ValueError as exc:
            raise ParseError(f"bad labelling text: {text!r}") from exc
        body = body.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ParseError(f"bad labelling text: {text!r}")
        mapping = {}
        for item in filter(None, (p.strip() for p in body[1:-1].split(","))):
            word, _, label = item.partition(":")
            mapping[parse_word(word)] = int(label)
        return cls.from_map(validate_tree(mapping), kind, mapping, m)


def validate_labelling(lab: Labelling) -> bool:
    """Check the kind's conditions over every pair (node, node in a child subtree)."""
    phi = lab.label_map
    for w, x in phi.items():
        for v, y in phi.items():
            if len(v) > len(w) and v.startswith(w):
                if not _pair_ok(lab.kind, x, y, v[len(w)]):
                    return False
    return True


def validate_labelling_local(lab: Labelling) -> bool:
    """Parent-child check only.  Equivalent to the full check for the two strict kinds."""
    phi = lab.label_map
    for v, y in phi.items():
        if v:
            if not _pair_ok(lab.kind, phi[v[:-1]], y, v[-1]):
                return False
    return True


def enumerate_labellings(tree: Tree, kind: Kind, m: int) -> list[Labelling]:
    """Every valid labelling by ``{1..m}``, in lexicographic order of the values."""
    return [Labelling(tree, kind, vals, m) for vals in _labelling_values(tree, kind, m)]


@lru_cache(maxsize=None)
def _labelling_values(tree: Tree, kind: Kind, m: int) -> tuple[tuple[int, ...], ...]:
    nodes = tree.sorted_nodes()
    index = {w: n for n, w in enumerate(nodes)}
    # constraints on node n come from its proper prefixes, which precede it
    ancestors = [[(index[v[:p]], v[p]) for p in range(len(v))] for v in nodes]
    out = []
    current = [0] * len(nodes)

    def extend(n):
        if n == len(nodes):
            out.append(tuple(current))
            return
        for x in range(1, m + 1):
            if all(_pair_ok(kind, current[a], x, letter) for a, letter in ancestors[n]):
                current[n] = x
                extend(n + 1)

    extend(0)
    return tuple(out)


def weight(lab: Labelling, n: int) -> tuple[int, ...]:
    if any(x > n for x in lab.values):
        raise ValueError(f"labels exceed the {n} available variables")
    exps = [0] * n
    for x in lab.values:
        exps[x - 1] += 1
    return tuple(exps)


@dataclass(frozen=True)
class Path:
    """A walk ``(EMPTY = T^0, ..., T^m)`` in G_U, G_U' or G_D; steps may have degree 0."""

    kind: str
    trees: tuple[Tree, ...]

    @property
    def length(self) -> int:
        return len(self.trees) - 1

    @property
    def end(self) -> Tree:
        return self.trees[-1]

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(b) - len(a) for a, b in zip(self.trees, self.trees[1:]))

    def validate(self) -> None:
        if not self.trees or self.trees[0] != EMPTY:
            raise MalformedPath(0, "paths start at the empty tree")
        for step, (a, b) in enumerate(zip(self.trees, self.trees[1:]), start=1):
            deg = len(b) - len(a)
            if deg < 0:
                raise MalformedPath(step, "tree shrinks")
            if self.kind == "D":
                ok = down_image(b, deg) == a
            else:
                ok = up_edge_degree(self.kind, a, b) == deg
            if not ok:
                raise MalformedPath(step)

    def to_json(self) -> list[str]:
        return [str(t) for t in self.trees]


def labelling_to_path(lab: Labelling) -> Path:
    if not validate_labelling(lab):
        raise InvalidLabelling(str(lab))
    phi = lab.label_map
    kind = lab.kind.path_kind
    if kind != "D":
        trees = tuple(Tree(w for w, x in phi.items() if x <= i) for i in range(lab.m + 1))
        return Path(kind, trees)
    trees = [lab.tree]
    tree = lab.tree
    for top in range(lab.m, 0, -1):
        marked = {w for w, x in phi.items() if x == top}
        k = len(marked)
        if set(removal_chain(tree)[:k]) != marked:
            raise InvalidLabelling(f"label {top} is not carried by a prefix of the removal chain")
        lower = detach_chain(tree, k)
        phi = {v: phi[include_chain(tree, k, v)] for v in lower.nodes}
        tree = lower
        trees.append(tree)
    return Path("D", tuple(reversed(trees)))


def path_to_labelling(path: Path) -> Labelling:
    path.validate()
    kind = Kind.for_path_kind(path.kind)
    m = path.length
    if path.kind != "D":
        phi = {}
        for i, t in enumerate(path.trees[1:], start=1):
            for w in t.nodes:
                phi.setdefault(w, i)
        return Labelling.from_map(path.end, kind, phi, m)
    phi = {}
    for i in range(1, m + 1):
        lower, upper = path.trees[i - 1], path.trees[i]
        k = len(upper) - len(lower)
        lifted = {include_chain(upper, k, v): phi[v] for v in lower.nodes}
        lifted.update((w, i) for w in removal_chain(upper)[:k])
        phi = lifted
    return Labelling.from_map(path.end, kind, phi, m)
