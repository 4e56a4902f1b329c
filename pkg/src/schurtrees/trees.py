"""Rooted planar binary trees as prefix-closed sets of words over {1, 2}.

A word is stored as a ``str`` made of the characters ``"1"`` (left) and
``"2"`` (right); the root is the empty string and is written ``"0"`` in the
text form.  A :class:`Tree` is an immutable, hashable set of such words.

The removal machinery lives here as well: the set of right-childless nodes,
the spine, the removal chain, detaching a node (its left subtree is promoted
into its place) and the inclusion maps that send the detached tree back into
the original one.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    ChainTooShort,
    NotInDetachedTree,
    NotPrefixClosed,
    NotRightChildless,
    ParseError,
)

LEFT = "1"
RIGHT = "2"
ROOT = ""


def shortlex(word: str) -> tuple[int, str]:
    return (len(word), word)


def is_prefix(u: str, w: str) -> bool:
    """Prefix order on words: ``u <= w`` iff ``u`` is an initial segment of ``w``."""
    return w.startswith(u)


def format_word(word: str) -> str:
    return word or "0"


def parse_word(text: str) -> str:
    text = text.strip()
    if text == "0":
        return ROOT
    if not text or set(text) - {LEFT, RIGHT}:
        raise ParseError(f"not a word over {{1,2}}: {text!r}")
    return text


class Tree:
    """A finite prefix-closed set of words.

    Construct with :func:`validate_tree` or :meth:`Tree.parse`; the raw
    constructor does not check prefix-closure.
    """

    __slots__ = ("nodes", "_hash", "_sorted")

    def __init__(self, nodes: Iterable[str] = ()):
        self.nodes = frozenset(nodes)
        self._hash = hash(self.nodes)
        self._sorted = None

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self._hash == other._hash and self.nodes == other.nodes

    def __len__(self):
        return len(self.nodes)

    def __contains__(self, word):
        return word in self.nodes

    def __iter__(self) -> Iterator[str]:
        return iter(self.sorted_nodes())

    def __bool__(self):
        return bool(self.nodes)

    def __repr__(self):
        return f"Tree({str(self)!r})"

    def __str__(self):
        return "{" + ",".join(format_word(w) for w in self.sorted_nodes()) + "}"

    def sorted_nodes(self) -> tuple[str, ...]:
        """Nodes in shortlex order (parents always precede children)."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self.nodes, key=shortlex))
        return self._sorted

    def sort_key(self) -> tuple[int, str]:
        text = str(self)
        return (len(text), text)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    @classmethod
    def parse(cls, text: str) -> Tree:
        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ParseError(f"tree must be written as a brace list: {text!r}")
        body = text[1:-1].strip()
        if not body:
            return EMPTY
        return validate_tree(parse_word(part) for part in body.split(","))


EMPTY = Tree()


def validate_tree(words: Iterable[str]) -> Tree:
    nodes = frozenset(words)
    for w in sorted(nodes, key=shortlex):
        if set(w) - {LEFT, RIGHT}:
            raise ParseError(f"not a word over {{1,2}}: {w!r}")
        if w and w[:-1] not in nodes:
            raise NotPrefixClosed(w)
    return Tree(nodes)


def _trees_of_size(n: int, at: str) -> list[frozenset]:
    if n == 0:
        return [frozenset()]
    out = []
    for k in range(n):
        for left in _trees_of_size(k, at + LEFT):
            for right in _trees_of_size(n - 1 - k, at + RIGHT):
                out.append(left | right | {at})
    return out


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Tree, ...]:
    """All trees with exactly ``n`` nodes, sorted by serialized shortlex."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(sorted((Tree(s) for s in _trees_of_size(n, ROOT)), key=Tree.sort_key))


def trees_up_to(n: int) -> Iterator[Tree]:
    for size in range(n + 1):
        yield from enumerate_trees(size)


def subtree(tree: Tree, v: str) -> frozenset:
    """Nodes of ``tree`` having ``v`` as a prefix (absolute words)."""
    return frozenset(w for w in tree.nodes if w.startswith(v))


def right_childless(tree: Tree) -> frozenset:
    return frozenset(w for w in tree.nodes if w + RIGHT not in tree.nodes)


def spine_set(tree: Tree) -> frozenset:
    """Nodes ``w`` such that ``v2`` is absent whenever ``w = v1w'``."""
    nodes = tree.nodes
    out = set()
    for w in nodes:
        if all(w[:p] + RIGHT not in nodes for p, c in enumerate(w) if c == LEFT):
            out.add(w)
    return frozenset(out)


@lru_cache(maxsize=None)
def removal_chain(tree: Tree) -> tuple[str, ...]:
    """The chain of right-childless spine nodes, topmost first."""
    chain = right_childless(tree) & spine_set(tree)
    return tuple(sorted(chain, key=len))


def detach_one(tree: Tree, w: str) -> Tree:
    """Remove ``w`` and promote its left subtree into its place."""
    nodes = tree.nodes
    if w not in nodes or w + RIGHT in nodes:
        raise NotRightChildless(w)
    cut = len(w) + 1
    wl = w + LEFT
    out = {u for u in nodes if not u.startswith(w)}
    out.update(w + u[cut:] for u in nodes if u.startswith(wl))
    return Tree(out)


@lru_cache(maxsize=None)
def detach_chain(tree: Tree, i: int) -> Tree:
    """Detach the ``i`` topmost chain nodes, deepest of them first."""
    chain = removal_chain(tree)
    if i > len(chain):
        raise ChainTooShort(len(chain), i)
    for w in reversed(chain[:i]):
        tree = detach_one(tree, w)
    return tree


def lift(w: str, u: str) -> str:
    """Single-node inclusion extended to all words: ``wv -> w1v``, else identity."""
    if u.startswith(w):
        return w + LEFT + u[len(w):]
    return u


def extended_include(tree: Tree, i: int, u: str) -> str:
    """Extend the chain inclusion to arbitrary words.

    The word is lifted through each removed chain node in turn, topmost node
    first.  On nodes of the detached tree this is the chain inclusion; in
    general it is injective and never hits a removed node.
    """
    chain = removal_chain(tree)
    if i > len(chain):
        raise ChainTooShort(len(chain), i)
    for w in chain[:i]:
        u = lift(w, u)
    return u


def include_chain(tree: Tree, i: int, u: str) -> str:
    if u not in detach_chain(tree, i):
        raise NotInDetachedTree(u)
    return extended_include(tree, i, u)


def insert_node(tree: Tree, w: str) -> Tree:
    """Inverse of :func:`detach_one`: put ``w`` back, pushing ``tree_w`` to ``w1``."""
    if w and w[:-1] not in tree.nodes:
        raise NotPrefixClosed(w)
    return Tree({lift(w, u) for u in tree.nodes} | {w})


def insert_all(tree: Tree, words: Iterable[str]) -> Tree:
    """Insert words topmost first; undoes detaching them deepest first."""
    for w in words:
        tree = insert_node(tree, w)
    return tree
