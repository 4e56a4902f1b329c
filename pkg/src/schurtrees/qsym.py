"""Quasi-symmetric generating polynomials attached to the tree operators."""

from __future__ import annotations

import json
from collections import defaultdict
from itertools import combinations

from .graph import check_family
from .labelling import Kind, enumerate_labellings, weight
from .operators import PolyLinComb, apply_gen
from .report import Report
from .trees import EMPTY, Tree, enumerate_trees

KIND_FOR_SYMBOL = {"D": Kind.BINARY_SEARCH, "U": Kind.RIGHT_STRICT, "U'": Kind.LEFT_STRICT}


class Polynomial:
    """Integer polynomial in ``t1..tn``; terms map exponent tuples to coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} does not have {nvars} entries")
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def one(cls, nvars: int) -> Polynomial:
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def monomial(cls, exps, coeff: int = 1) -> Polynomial:
        return cls({tuple(exps): coeff}, len(exps))

    def __getitem__(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: Polynomial) -> Polynomial:
        self._same_ring(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(acc, self.nvars)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + other.scale(-1)

    def scale(self, c: int) -> Polynomial:
        return Polynomial({e: c * v for e, v in self.terms.items()}, self.nvars)

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._same_ring(other)
        acc = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(acc, self.nvars)

    def _same_ring(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"polynomials over {self.nvars} and {other.nvars} variables")

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def homogeneous_part(self, degree: int) -> Polynomial:
        return Polynomial({e: c for e, c in self.terms.items() if sum(e) == degree}, self.nvars)

    def total(self) -> int:
        """Sum of all coefficients, i.e. the value at ``t = (1, ..., 1)``."""
        return sum(self.terms.values())

    def swap(self, a: int, b: int) -> Polynomial:
        """Exchange variables ``t_a`` and ``t_b`` (1-based)."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[a - 1], e[b - 1] = e[b - 1], e[a - 1]
            out[tuple(e)] = c
        return Polynomial(out, self.nvars)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        # graded lex: higher total degree first, then t1 > t2 > ...
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for n, (e, c) in enumerate(self.sorted_terms()):
            mono = " ".join(f"t{v + 1}" + (f"^{x}" if x > 1 else "") for v, x in enumerate(e) if x)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if n == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"

    def to_json(self) -> str:
        return json.dumps([{"exponents": list(e), "coeff": c} for e, c in self.sorted_terms()])


def schur_poly(symbol: str, tree: Tree, lower: Tree = EMPTY, n: int = 1) -> Polynomial:
    """``<D(t1)...D(tn) T, T'>`` for ``D``; ``<X(tn)...X(t1) T', T>`` for up symbols.

    ``D(tn)`` is applied first; for the up symbols ``X(t1)`` is applied first.
    """
    check_family(symbol)
    gap = len(tree) - len(lower)
    if gap < 0:
        return Polynomial({}, n)
    if symbol == "D":
        v = PolyLinComb.from_lincomb(tree, n)
        for var in range(n, 0, -1):
            v = apply_gen("D", var, v, gap)
        target = lower
    else:
        v = PolyLinComb.from_lincomb(lower, n)
        for var in range(1, n + 1):
            v = apply_gen(symbol, var, v, gap, max_size=len(tree))
        target = tree
    return Polynomial(v.coefficient(target), n)


def labelling_sum(tree: Tree, kind: Kind, n: int) -> Polynomial:
    acc = defaultdict(int)
    for lab in enumerate_labellings(tree, kind, n):
        acc[weight(lab, n)] += 1
    return Polynomial(acc, n)


def is_quasisymmetric(p: Polynomial) -> bool:
    """Coefficients depend only on the sequence of nonzero exponents."""
    n = p.nvars
    seen = {}
    for e, c in p.terms.items():
        comp = tuple(x for x in e if x)
        seen.setdefault(comp, c)
    for comp, c in seen.items():
        for places in combinations(range(n), len(comp)):
            e = [0] * n
            for v, x in zip(places, comp):
                e[v] = x
            if p[e] != c:
                return False
    return True


def cauchy_kernel(family: str, p: int, q: int, degree: int) -> Polynomial:
    """Bidegree-``(degree, degree)`` part of ``prod a(x_i y_j)`` in variables ``x1..xp, y1..yq``.

    ``a(z) = 1/(1-z)`` for U and ``1+z`` for U'.  Expanded factor by factor
    with truncation at x-degree ``degree``.
    """
    check_family(family, ("U", "U'"))
    nv = p + q
    acc = {(0,) * nv: 1}
    for i in range(p):
        for j in range(q):
            top = degree if family == "U" else 1
            nxt = defaultdict(int)
            for e, c in acc.items():
                used = sum(e[:p])
                for m in range(min(top, degree - used) + 1):
                    e2 = list(e)
                    e2[i] += m
                    e2[p + j] += m
                    nxt[tuple(e2)] += c
            acc = nxt
    return Polynomial({e: c for e, c in acc.items() if sum(e[:p]) == degree}, nv)


def _embed(poly: Polynomial, offset: int, nv: int) -> Polynomial:
    out = {}
    for e, c in poly.terms.items():
        full = [0] * nv
        full[offset:offset + len(e)] = e
        out[tuple(full)] = c
    return Polynomial(out, nv)


def cauchy_sum(family: str, p: int, q: int, degree: int) -> Polynomial:
    """``sum_{T in T_degree} S^X_T(x) S^D_T(y)`` in variables ``x1..xp, y1..yq``."""
    nv = p + q
    total = Polynomial({}, nv)
    for t in enumerate_trees(degree):
        up = _embed(schur_poly(family, t, EMPTY, p), 0, nv)
        down = _embed(schur_poly("D", t, EMPTY, q), p, nv)
        total = total + up * down
    return total


def cauchy_check(family: str, p: int, q: int, max_degree: int) -> Report:
    report = Report(f"sum_T S^{family}_T(x) S^D_T(y) = prod a(x_i y_j)",
                    {"family": family, "p": p, "q": q, "max_degree": max_degree})
    for n in range(max_degree + 1):
        lhs = cauchy_sum(family, p, q, n)
        rhs = cauchy_kernel(family, p, q, n)
        report.tick()
        if lhs != rhs:
            report.fail(degree=n, lhs=str(lhs), rhs=str(rhs))
    return report


def labelling_sum_check(max_nodes: int, max_vars: int) -> Report:
    report = Report("S^X_T = sum over labellings of t^phi",
                    {"max_nodes": max_nodes, "max_vars": max_vars})
    for size in range(max_nodes + 1):
        for t in enumerate_trees(size):
            for n in range(max_vars + 1):
                for symbol, kind in KIND_FOR_SYMBOL.items():
                    report.tick()
                    a, b = schur_poly(symbol, t, EMPTY, n), labelling_sum(t, kind, n)
                    if a != b:
                        report.fail(symbol=symbol, tree=t, n=n, operator=str(a), labellings=str(b))
    return report


def quasisymmetry_check(max_nodes: int, max_vars: int) -> Report:
    report = Report("S^X_T is quasi-symmetric", {"max_nodes": max_nodes, "max_vars": max_vars})
    for size in range(max_nodes + 1):
        for t in enumerate_trees(size):
            for n in range(max_vars + 1):
                for symbol in KIND_FOR_SYMBOL:
                    report.tick()
                    poly = schur_poly(symbol, t, EMPTY, n)
                    if not is_quasisymmetric(poly):
                        report.fail(symbol=symbol, tree=t, n=n, poly=str(poly))
    return report
