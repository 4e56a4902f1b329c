"""Growth-diagram RSK built from the local path bijection.

The diagram is a ``(p+1) x (q+1)`` grid of trees ``tau[i][j]`` with the
bottom row and left column empty.  Moving right along a row is an up-edge
(family U or U'), moving up a column is a D-edge with the smaller tree below.
Cell ``(i, j)`` carries the matrix entry ``M[j-1][i-1]`` (row ``j`` of the
matrix, column ``i``): its lower-left, upper-left and lower-right corners
form an S-path, the entry is the tag ``k``, and the upper-right corner is
the middle tree of the matching N-path.

The top row is the U-path ``P`` and the right column the D-path ``Q``.
Step ``i`` of ``P`` adds as many nodes as column ``i`` of ``M`` sums to;
step ``j`` of ``Q`` adds row ``j``'s sum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import correspondence
from .errors import BinaryViolation, CellFailure, MalformedPath, NoPreimage, ShapeMismatch
from .graph import PathPair, check_family
from .labelling import Kind, Path, enumerate_labellings, labelling_to_path, path_to_labelling, weight
from .report import Report
from .trees import EMPTY, Tree, enumerate_trees

Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    m = tuple(tuple(int(x) for x in row) for row in rows)
    if len({len(r) for r in m}) > 1:
        raise ValueError("matrix rows have different lengths")
    if any(x < 0 for r in m for x in r):
        raise ValueError("matrix entries must be non-negative")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    """``(p, q)``: number of columns and rows."""
    return (len(m[0]) if m else 0, len(m))


@dataclass(frozen=True)
class GrowthDiagram:
    family: str
    tau: tuple[tuple[Tree, ...], ...]  # tau[i][j], 0 <= i <= p, 0 <= j <= q

    @property
    def p(self) -> int:
        return len(self.tau) - 1

    @property
    def q(self) -> int:
        return len(self.tau[0]) - 1

    def top_row(self) -> Path:
        return Path(self.family, tuple(self.tau[i][self.q] for i in range(self.p + 1)))

    def right_column(self) -> Path:
        return Path("D", tuple(self.tau[self.p][j] for j in range(self.q + 1)))

    def to_json(self) -> list[list[str]]:
        return [[str(t) for t in col] for col in self.tau]


def _cell_grow(family, k, lower_left, upper_left, lower_right):
    s = PathPair("S", family, upper_left, lower_left, lower_right,
                 len(lower_right) - len(lower_left), len(upper_left) - len(lower_left))
    return correspondence.inverse(family, k, s).mid


def rsk_forward(matrix, family: str = "U", order: str = "column") -> tuple[Path, Path, GrowthDiagram]:
    check_family(family, ("U", "U'"))
    m = as_matrix(matrix)
    if family == "U'" and any(x > 1 for r in m for x in r):
        raise BinaryViolation("family U' takes 0/1 matrices only")
    p, q = shape(m)
    tau = [[EMPTY] * (q + 1) for _ in range(p + 1)]
    if order == "column":
        cells = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    elif order == "row":
        cells = [(i, j) for j in range(1, q + 1) for i in range(1, p + 1)]
    else:
        raise ValueError(f"unknown fill order {order!r}")
    for i, j in cells:
        tau[i][j] = _cell_grow(family, m[j - 1][i - 1], tau[i - 1][j - 1], tau[i - 1][j], tau[i][j - 1])
    diagram = GrowthDiagram(family, tuple(tuple(col) for col in tau))
    return diagram.top_row(), diagram.right_column(), diagram


def rsk_inverse(P: Path, Q: Path, family: str = "U") -> Matrix:
    check_family(family, ("U", "U'"))
    if P.kind != family or Q.kind != "D":
        raise MalformedPath(0, f"expected a {family}-path and a D-path")
    P.validate()
    Q.validate()
    if P.end != Q.end:
        raise ShapeMismatch(f"paths end at {P.end} and {Q.end}")
    p, q = P.length, Q.length
    tau = [[None] * (q + 1) for _ in range(p + 1)]
    for i in range(p + 1):
        tau[i][q] = P.trees[i]
    for j in range(q + 1):
        tau[p][j] = Q.trees[j]
    entries = [[0] * p for _ in range(q)]
    for i in range(p, 0, -1):
        for j in range(q, 0, -1):
            upper_left, upper_right, lower_right = tau[i - 1][j], tau[i][j], tau[i][j - 1]
            n = PathPair("N", family, upper_left, upper_right, lower_right,
                         len(upper_right) - len(upper_left), len(upper_right) - len(lower_right))
            if not n.is_valid():
                raise CellFailure(f"cell ({i},{j}) is not an N-path")
            k, s = correspondence.forward(family, n)
            entries[j - 1][i - 1] = k
            tau[i - 1][j - 1] = s.mid
    if any(tau[0][j] != EMPTY for j in range(q + 1)) or any(tau[i][0] != EMPTY for i in range(p + 1)):
        raise CellFailure("boundary of the growth diagram is not empty")
    return tuple(tuple(r) for r in entries)


def matrices(p: int, q: int, total: int, binary: bool = False):
    """All ``q x p`` matrices with entry sum exactly ``total``."""
    top = 1 if binary else total
    for flat in itertools.product(range(top + 1), repeat=p * q):
        if sum(flat) == total:
            yield tuple(tuple(flat[r * p:(r + 1) * p]) for r in range(q))


def path_pairs(family: str, p: int, q: int, size: int) -> set:
    """Every (up-path of length p, D-path of length q) pair ending at a common tree."""
    kind = Kind.for_path_kind(family)
    out = set()
    for t in enumerate_trees(size):
        ups = [labelling_to_path(lab) for lab in enumerate_labellings(t, kind, p)]
        downs = [labelling_to_path(lab) for lab in enumerate_labellings(t, Kind.BINARY_SEARCH, q)]
        out.update(itertools.product(ups, downs))
    return out


def check_rsk(family: str, p: int, q: int, max_total: int) -> Report:
    report = Report(f"RSK bijection ({family})", {"family": family, "p": p, "q": q, "max_total": max_total})
    for total in range(max_total + 1):
        image = set()
        for m in matrices(p, q, total, binary=family == "U'"):
            report.tick()
            try:
                P, Q, diagram = rsk_forward(m, family)
                back = rsk_inverse(P, Q, family)
            except (NoPreimage, CellFailure, MalformedPath, ShapeMismatch) as exc:
                report.fail(matrix=m, problem=str(exc))
                continue
            if back != m:
                report.fail(matrix=m, problem="round trip", back=back)
            if P.end != Q.end or len(P.end) != total:
                report.fail(matrix=m, problem="shape", P=P.end, Q=Q.end)
            col_sums = tuple(sum(r[i] for r in m) for i in range(p))
            row_sums = tuple(sum(r) for r in m)
            if P.degrees() != col_sums or Q.degrees() != row_sums:
                report.fail(matrix=m, problem="content", P=P.degrees(), Q=Q.degrees())
            if weight(path_to_labelling(P), p) != col_sums or weight(path_to_labelling(Q), q) != row_sums:
                report.fail(matrix=m, problem="labelling weight")
            if (P, Q) in image:
                report.fail(matrix=m, problem="forward map not injective")
            image.add((P, Q))
        expected = path_pairs(family, p, q, total)
        report.tick()
        if image != expected:
            report.fail(total=total, problem="image is not every path pair",
                        image=len(image), expected=len(expected))
    return report
