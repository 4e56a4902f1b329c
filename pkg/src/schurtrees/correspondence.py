"""Bijections between up-then-down and down-then-up two-step paths.

For trees ``T``, ``T'`` and degrees ``i``, ``j`` the N-set holds paths
``T -U_i-> T'' -D_j-> T'`` and the tagged S-set holds paths
``T -D_{j-k}-> mid -U_{i-k}-> T'`` for ``0 <= k <= min(i, j)`` (at most one
for the U' family).  :func:`forward` maps the first set to the second;
:func:`inverse` rebuilds ``T''`` by re-inserting the words that ``D_j``
detached, and :func:`inverse_by_search` is the exhaustive reference it is
checked against.

How the chain of ``T''`` grows over that of ``T``: it keeps a prefix of
``r_T`` and continues with freshly added nodes (the tail).  ``k`` is the
number of tail nodes that ``D_j`` removes, so the words removed from ``T''``
are ``r_{T, j-k}`` followed by the first ``k`` tail words, and the tail
only depends on ``T``, ``k`` and, for U', one chain length read off ``T'``.
"""

from __future__ import annotations

from .errors import AmbiguousPreimage, NoPreimage
from .graph import PathPair, check_family, down_image, k_bound, paths_N, paths_S_tilde, up_successors
from .report import Report
from .trees import LEFT, RIGHT, Tree, detach_chain, insert_all, removal_chain, trees_up_to


def forward(family: str, n_elem: PathPair) -> tuple[int, PathPair]:
    check_family(family, ("U", "U'"))
    if n_elem.variant != "N" or not n_elem.is_valid():
        raise ValueError(f"not a valid N-path: {n_elem}")
    t, t2, t1 = n_elem.start, n_elem.mid, n_elem.end
    i, j = n_elem.up_degree, n_elem.down_degree
    kept = len(set(removal_chain(t2)[:j]) & set(removal_chain(t)))
    k = j - kept
    mid = detach_chain(t, kept)
    return k, PathPair("S", family, t, mid, t1, i - k, kept)


def _first_absent(tree: Tree, start: str, step: str) -> str:
    w = start
    while w in tree:
        w += step
    return w


def _tail(family: str, tree: Tree, kept: int, k: int, partial: Tree) -> list[str]:
    """The ``k`` fresh chain words of ``T''`` that ``D_j`` detaches, topmost first.

    ``partial`` is ``T'`` with ``r_{T, kept}`` already re-inserted.
    """
    if k == 0:
        return []
    chain = removal_chain(tree)
    if family == "U":
        if not chain:
            return [LEFT * m for m in range(k)]
        if kept < len(chain):
            # right chain grown at the first surviving chain node
            return [chain[kept] + RIGHT + LEFT * m for m in range(k)]
        return [chain[-1] + LEFT * m for m in range(1, k + 1)]
    # U': the tail is a single leaf at the end of a straight right run
    if not chain:
        return [_first_absent(partial, "", RIGHT)]
    if kept < len(chain):
        return [_first_absent(partial, chain[kept] + RIGHT, RIGHT)]
    return [_first_absent(partial, chain[-1] + LEFT, RIGHT)]


def inverse(family: str, k: int, s_elem: PathPair) -> PathPair:
    """Rebuild the N-path whose image under :func:`forward` is ``(k, s_elem)``."""
    check_family(family, ("U", "U'"))
    if s_elem.variant != "S" or not s_elem.is_valid():
        raise NoPreimage(f"not a valid S-path: {s_elem}")
    t, t1 = s_elem.start, s_elem.end
    kept = s_elem.down_degree
    i, j = s_elem.up_degree + k, kept + k
    if not 0 <= k <= k_bound(family, i, j):
        raise NoPreimage(f"k={k} outside the admissible range for {family}")
    partial = insert_all(t1, removal_chain(t)[:kept])
    t2 = insert_all(partial, _tail(family, t, kept, k, partial))
    n_elem = PathPair("N", family, t, t2, t1, i, j)
    if not n_elem.is_valid() or forward(family, n_elem) != (k, s_elem):
        raise NoPreimage(f"reconstruction failed for k={k}, {s_elem}")
    return n_elem


def inverse_by_search(family: str, k: int, s_elem: PathPair) -> PathPair:
    """Reference inverse: scan every N-path with matching ends for the preimage."""
    i, j = s_elem.up_degree + k, s_elem.down_degree + k
    hits = [n for n in paths_N(s_elem.start, s_elem.end, i, j, family) if forward(family, n) == (k, s_elem)]
    if not hits:
        raise NoPreimage(f"no N-path maps to k={k}, {s_elem}")
    if len(hits) > 1:
        raise AmbiguousPreimage(f"{len(hits)} N-paths map to k={k}, {s_elem}")
    return hits[0]


def _n_paths_by_end(family, tree, i, j):
    buckets = {}
    for t2 in up_successors(tree, i, family):
        t1 = down_image(t2, j)
        if t1 is not None:
            buckets.setdefault(t1, []).append(PathPair("N", family, tree, t2, t1, i, j))
    return buckets


def check_bijection(family: str, max_nodes: int, max_deg: int, constructive: bool = True) -> Report:
    check_family(family, ("U", "U'"))
    report = Report(f"N_{{i,j}}(T,T') <-> S~_{{j,i}}(T,T') ({family})",
                    {"family": family, "max_nodes": max_nodes, "max_deg": max_deg})
    trees = list(trees_up_to(max_nodes))
    for t in trees:
        for i in range(max_deg + 1):
            for j in range(max_deg + 1):
                buckets = _n_paths_by_end(family, t, i, j)
                for t1 in trees:
                    _check_cell(report, family, t, t1, i, j, buckets.get(t1, []), constructive)
    return report


def _check_cell(report, family, t, t1, i, j, n_set, constructive):
    s_set = paths_S_tilde(t, t1, j, i, family)
    report.tick()
    cell = {"T": t, "T'": t1, "i": i, "j": j}
    if len(n_set) != len(s_set):
        report.fail(**cell, n=len(n_set), s=len(s_set))
        return
    images = [forward(family, n) for n in n_set]
    if len(set(images)) != len(images) or set(images) != set(s_set):
        report.fail(**cell, problem="forward is not a bijection onto S~")
        return
    for n, image in zip(n_set, images):
        k, s = image
        try:
            oracle = inverse_by_search(family, k, s)
        except (NoPreimage, AmbiguousPreimage) as exc:
            report.fail(**cell, problem=str(exc))
            continue
        if oracle != n:
            report.fail(**cell, problem="oracle inverse is not the original N-path", k=k)
        if constructive:
            try:
                built = inverse(family, k, s)
            except NoPreimage as exc:
                report.fail(**cell, problem=str(exc), k=k)
                continue
            if built != oracle:
                report.fail(**cell, problem="constructive inverse disagrees with the oracle",
                            k=k, built=built.mid, oracle=oracle.mid)


def trace(family: str, max_nodes: int, max_deg: int):
    """Yield ``{n, k, s}`` records for every N-path with both ends in range."""
    for t in trees_up_to(max_nodes):
        for i in range(max_deg + 1):
            for j in range(max_deg + 1):
                for t1, n_set in sorted(_n_paths_by_end(family, t, i, j).items(), key=lambda kv: kv[0].sort_key()):
                    if len(t1) > max_nodes:
                        continue
                    for n in n_set:
                        k, s = forward(family, n)
                        yield {
                            "T": str(t), "T'": str(t1), "i": i, "j": j,
                            "via": str(n.mid), "k": k, "mid": str(s.mid),
                        }
