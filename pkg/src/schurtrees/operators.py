"""Integer linear combinations of trees and the up/down operators acting on them.

``apply`` knows six symbols: ``U``, ``U'`` and ``D`` and their transposes
``U*``, ``U'*`` and ``D*`` with respect to the pairing that makes the trees
an orthonormal basis.  Generating functions ``X(t) = sum_i X_i t^i`` act on
:class:`PolyLinComb` values, whose coefficients are polynomials in
``t_1..t_n`` stored as exponent tuples.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import check_family, down_image, k_bound, up_successors
from .report import Report
from .trees import Tree, enumerate_trees, removal_chain, trees_up_to

SYMBOLS = ("U", "U'", "D", "U*", "U'*", "D*")


class LinComb:
    """A finite formal Z-combination of trees.  Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {t: c for t, c in (terms or {}).items() if c}

    @classmethod
    def basis(cls, tree: Tree) -> LinComb:
        return cls({tree: 1})

    @classmethod
    def zero(cls) -> LinComb:
        return cls()

    @classmethod
    def from_trees(cls, trees: Iterable[Tree]) -> LinComb:
        acc = defaultdict(int)
        for t in trees:
            acc[t] += 1
        return cls(acc)

    def __getitem__(self, tree: Tree) -> int:
        return self.terms.get(tree, 0)

    def __iter__(self) -> Iterator[tuple[Tree, int]]:
        return iter(self.items())

    def items(self) -> list[tuple[Tree, int]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def support(self) -> set:
        return set(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: LinComb) -> LinComb:
        acc = dict(self.terms)
        for t, c in other.terms.items():
            acc[t] = acc.get(t, 0) + c
        return LinComb(acc)

    def __neg__(self) -> LinComb:
        return LinComb({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: LinComb) -> LinComb:
        return self + (-other)

    def __mul__(self, scalar: int) -> LinComb:
        return LinComb({t: scalar * c for t, c in self.terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        return f"LinComb({str(self)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(t) if mag == 1 else f"{mag}*{t}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def lin_sum(vectors: Iterable[LinComb]) -> LinComb:
    acc = defaultdict(int)
    for v in vectors:
        for t, c in v.terms.items():
            acc[t] += c
    return LinComb(acc)


@lru_cache(maxsize=None)
def _up_inverse_index(size: int, i: int, family: str) -> dict:
    index = defaultdict(list)
    for s in enumerate_trees(size):
        for t in up_successors(s, i, family):
            index[t].append(s)
    return {t: tuple(v) for t, v in index.items()}


@lru_cache(maxsize=None)
def _down_inverse_index(size: int, i: int) -> dict:
    index = defaultdict(list)
    for t in enumerate_trees(size):
        low = down_image(t, i)
        if low is not None:
            index[low].append(t)
    return {t: tuple(v) for t, v in index.items()}


def image_of_tree(symbol: str, i: int, tree: Tree) -> tuple[Tree, ...]:
    """Trees occurring (each with coefficient one) in ``symbol_i tree``."""
    if i < 0:
        return ()
    if symbol in ("U", "U'"):
        return up_successors(tree, i, symbol)
    if symbol == "D":
        low = down_image(tree, i)
        return () if low is None else (low,)
    if symbol in ("U*", "U'*"):
        if i > len(tree):
            return ()
        return _up_inverse_index(len(tree) - i, i, symbol[:-1]).get(tree, ())
    if symbol == "D*":
        return _down_inverse_index(len(tree) + i, i).get(tree, ())
    raise ValueError(f"unknown operator {symbol!r}; expected one of {SYMBOLS}")


def apply(symbol: str, i: int, v: LinComb | Tree) -> LinComb:
    if isinstance(v, Tree):
        v = LinComb.basis(v)
    acc = defaultdict(int)
    for t, c in v.terms.items():
        for u in image_of_tree(symbol, i, t):
            acc[u] += c
    return LinComb(acc)


def apply_total(symbol: str, v: LinComb | Tree) -> LinComb:
    """``sum_i symbol_i v``; finite because each tree has bounded degree range.

    Only meaningful for the degree-lowering symbols ``D``, ``U*`` and ``U'*``.
    """
    if symbol not in ("D", "U*", "U'*"):
        raise ValueError(f"{symbol} has no finite total on a tree")
    if isinstance(v, Tree):
        v = LinComb.basis(v)
    return lin_sum(apply(symbol, i, LinComb.basis(t)) * c
                   for t, c in v.terms.items() for i in range(len(t) + 1))


def pairing(a: LinComb, b: LinComb) -> int:
    if len(b.terms) < len(a.terms):
        a, b = b, a
    return sum(c * b.terms.get(t, 0) for t, c in a.terms.items())


class PolyLinComb:
    """A finite map ``(tree, exponent tuple) -> int`` over ``nvars`` variables."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {key: c for key, c in (terms or {}).items() if c}

    @classmethod
    def from_lincomb(cls, v: LinComb | Tree, nvars: int) -> PolyLinComb:
        if isinstance(v, Tree):
            v = LinComb.basis(v)
        zero = (0,) * nvars
        return cls({(t, zero): c for t, c in v.terms.items()}, nvars)

    def coefficient(self, tree: Tree) -> dict:
        """The polynomial multiplying ``tree``, as ``{exponents: int}``."""
        return {e: c for (t, e), c in self.terms.items() if t == tree}

    def trees(self) -> set:
        return {t for t, _ in self.terms}

    def max_degree(self) -> int:
        return max((sum(e) for _, e in self.terms), default=0)

    def __eq__(self, other):
        if isinstance(other, PolyLinComb):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __repr__(self):
        return f"PolyLinComb({len(self.terms)} terms, nvars={self.nvars})"


def apply_gen(symbol: str, var_index: int, v: PolyLinComb, cap: int, max_size: int | None = None) -> PolyLinComb:
    """Apply ``sum_{i<=cap} symbol_i t_{var_index}^i`` (variables are 1-based).

    ``max_size`` optionally drops terms whose tree exceeds that many nodes,
    which keeps up-operator products finite when only a bounded target
    matters.
    """
    if not 1 <= var_index <= v.nvars:
        raise ValueError(f"variable t{var_index} out of range 1..{v.nvars}")
    if cap < 0:
        raise ValueError("cap must be non-negative")
    pos = var_index - 1
    acc = defaultdict(int)
    for (t, e), c in v.terms.items():
        top = cap
        if symbol == "D":
            top = min(cap, len(removal_chain(t)))
        for i in range(top + 1):
            if i:
                e2 = e[:pos] + (e[pos] + i,) + e[pos + 1:]
            else:
                e2 = e
            for u in image_of_tree(symbol, i, t):
                if max_size is None or len(u) <= max_size:
                    acc[(u, e2)] += c
    return PolyLinComb(acc, v.nvars)


def commutation_rhs(family: str, i: int, j: int, tree: Tree) -> LinComb:
    return lin_sum(apply(family, i - k, apply("D", j - k, tree)) for k in range(k_bound(family, i, j) + 1))


def check_commutation(family: str, max_nodes: int, max_i: int, max_j: int) -> Report:
    """Check ``D_j X_i T == sum_k X_{i-k} D_{j-k} T`` on every tree up to ``max_nodes``."""
    check_family(family, ("U", "U'"))
    name = "D_j U_i = sum_{k<=min(i,j)} U_{i-k} D_{j-k}" if family == "U" else \
        "D_j U'_i = sum_{k<=min(1,i,j)} U'_{i-k} D_{j-k}"
    report = Report(name, {"family": family, "max_nodes": max_nodes, "max_i": max_i, "max_j": max_j})
    for t in trees_up_to(max_nodes):
        for i in range(max_i + 1):
            up = apply(family, i, t)
            for j in range(max_j + 1):
                lhs = apply("D", j, up)
                rhs = commutation_rhs(family, i, j, t)
                report.tick()
                if lhs != rhs:
                    report.fail(tree=t, i=i, j=j, lhs=lhs, rhs=rhs)
    return report


def check_dual_graph(max_nodes: int) -> Report:
    """``D_1 U_1 - U_1 D_1 = I``."""
    report = Report("D_1 U_1 - U_1 D_1 = I", {"max_nodes": max_nodes})
    for t in trees_up_to(max_nodes):
        diff = apply("D", 1, apply("U", 1, t)) - apply("U", 1, apply("D", 1, t))
        report.tick()
        if diff != LinComb.basis(t):
            report.fail(tree=t, value=diff)
    return report


def check_total_down(max_nodes: int) -> Report:
    """``D U_1 - U_1 D = D`` with ``D`` the sum of all ``D_j``."""
    report = Report("D U_1 - U_1 D = D", {"max_nodes": max_nodes})
    for t in trees_up_to(max_nodes):
        lhs = apply_total("D", apply("U", 1, t)) - apply("U", 1, apply_total("D", t))
        rhs = apply_total("D", t)
        report.tick()
        if lhs != rhs:
            report.fail(tree=t, lhs=lhs, rhs=rhs)
    return report


def check_adjoint_total(max_nodes: int) -> Report:
    """``U* D_1* - D_1* U* = U*`` tested as pairings against every target tree."""
    report = Report("U* D_1* - D_1* U* = U*", {"max_nodes": max_nodes})
    targets = list(trees_up_to(max_nodes))
    for a in targets:
        lhs = apply_total("U*", apply("D*", 1, a)) - apply("D*", 1, apply_total("U*", a))
        rhs = apply_total("U*", a)
        for b in targets:
            report.tick()
            bv = LinComb.basis(b)
            if pairing(lhs, bv) != pairing(rhs, bv):
                report.fail(source=a, target=b, lhs=pairing(lhs, bv), rhs=pairing(rhs, bv))
    return report


def check_transposed_schur(family: str, max_nodes: int, max_i: int, max_j: int) -> Report:
    """``X_i* D_j* = sum_k D_{j-k}* X_{i-k}*``, the transpose of the commutation relation."""
    check_family(family, ("U", "U'"))
    star = family + "*"
    report = Report(f"{star}(t')D*(t) = a(tt') D*(t){star}(t')",
                    {"family": family, "max_nodes": max_nodes, "max_i": max_i, "max_j": max_j})
    for t in trees_up_to(max_nodes):
        for i in range(max_i + 1):
            for j in range(max_j + 1):
                lhs = apply(star, i, apply("D*", j, t))
                rhs = lin_sum(apply("D*", j - k, apply(star, i - k, t))
                              for k in range(k_bound(family, i, j) + 1))
                report.tick()
                if lhs != rhs:
                    report.fail(tree=t, i=i, j=j, lhs=lhs, rhs=rhs)
    return report


def check_adjointness(max_nodes: int, max_deg: int) -> Report:
    report = Report("<X_i a, b> = <a, X_i* b>", {"max_nodes": max_nodes, "max_deg": max_deg})
    trees = list(trees_up_to(max_nodes))
    by_size = defaultdict(list)
    for t in trees:
        by_size[len(t)].append(t)
    for symbol in ("U", "U'", "D"):
        for i in range(max_deg + 1):
            for a in trees:
                image = apply(symbol, i, a)
                shift = i if symbol != "D" else -i
                for b in by_size.get(len(a) + shift, ()):
                    report.tick()
                    left = image[b]
                    right = apply(symbol + "*", i, b)[a]
                    if left != right:
                        report.fail(symbol=symbol, i=i, a=a, b=b, left=left, right=right)
    return report
