"""Finite tree posets and brute-force DSC counting.

This module is the ground truth for the recurrence and the series
solver: it builds truncated ``n``-ary trees, walks their maximal
antichains explicitly and colours them with the Stirling formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .combinatorics import compositions, stirling2
from .exceptions import ResourceCapExceeded

__all__ = [
    "TreePoset",
    "Antichain",
    "SiblingDecomposition",
    "DEFAULT_MAX_NODES",
    "DEFAULT_MAX_ANTICHAINS",
    "build_nary_truncation",
    "count_maximal_antichains",
    "maximal_antichains",
    "maximal_antichains_forest",
    "lower_antichains",
    "sibling_decomposition",
    "count_dsc_on_antichain",
    "census_lower_dsc",
    "census_total_dsc",
]

DEFAULT_MAX_NODES = 10**6
DEFAULT_MAX_ANTICHAINS = 10**7


class TreePoset:
    """Rooted tree given by a parent array; ``parents[root] is None``.

    Node ids are ``0..len(parents)-1``. Children keep the order in which
    they appear in the parent array. The root is the maximum of the order
    and leaves are the minimal elements.
    """

    def __init__(self, parents: Sequence[int | None]):
        size = len(parents)
        if size == 0:
            raise ValueError("tree must have at least one node")
        roots = [i for i, p in enumerate(parents) if p is None]
        if len(roots) != 1:
            raise ValueError(f"expected exactly one root, found {len(roots)}")
        children: list[list[int]] = [[] for _ in range(size)]
        for i, p in enumerate(parents):
            if p is not None:
                if not 0 <= p < size:
                    raise ValueError(f"node {i} has invalid parent {p}")
                children[p].append(i)

        depth = [-1] * size
        root = roots[0]
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for c in children[v]:
                depth[c] = depth[v] + 1
                stack.append(c)
        if min(depth) < 0:
            raise ValueError("parent array contains a cycle or detached nodes")

        self.root = root
        self.parents: tuple[int | None, ...] = tuple(parents)
        self.children: tuple[tuple[int, ...], ...] = tuple(tuple(c) for c in children)
        self.depth: tuple[int, ...] = tuple(depth)

    def __len__(self):
        return len(self.parents)

    @property
    def nodes(self) -> range:
        return range(len(self.parents))

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def ancestors(self, v: int) -> Iterator[int]:
        """Strict ancestors of ``v``, nearest first."""
        p = self.parents[v]
        while p is not None:
            yield p
            p = self.parents[p]

    def comparable(self, a: int, b: int) -> bool:
        if a == b:
            return True
        return a in self.ancestors(b) or b in self.ancestors(a)

    def leaves(self, v: int | None = None) -> list[int]:
        start = self.root if v is None else v
        out, stack = [], [start]
        while stack:
            x = stack.pop()
            if self.children[x]:
                stack.extend(reversed(self.children[x]))
            else:
                out.append(x)
        return out

    def max_depth(self) -> int:
        return max(self.depth)


@dataclass(frozen=True)
class Antichain:
    elements: frozenset[int]
    maximal: bool = False

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self):
        return len(self.elements)

    def __contains__(self, v):
        return v in self.elements

    @staticmethod
    def certify(tree: TreePoset, elements: Iterable[int]) -> "Antichain":
        """Build an antichain, setting ``maximal`` iff every leaf-to-root
        path meets it. Raises if two elements are comparable."""
        elems = frozenset(elements)
        for v in elems:
            if any(a in elems for a in tree.ancestors(v)):
                raise ValueError(f"not an antichain: {v} lies below another element")
        maximal = bool(elems) and all(
            leaf in elems or any(a in elems for a in tree.ancestors(leaf))
            for leaf in tree.leaves())
        return Antichain(elems, maximal)


@dataclass(frozen=True)
class SiblingDecomposition:
    groups: tuple[tuple[int, ...], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    def __len__(self):
        return len(self.groups)

    def __iter__(self):
        return iter(self.groups)


def build_nary_truncation(n: int, depth: int, *, max_nodes: int = DEFAULT_MAX_NODES) -> TreePoset:
    """Complete ``n``-ary tree whose leaves all sit at ``depth``.

    Nodes are numbered breadth first, so the children of node ``i`` are
    ``n*i + 1 .. n*i + n``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    size = depth + 1 if n == 1 else (n ** (depth + 1) - 1) // (n - 1)
    if size > max_nodes:
        raise ResourceCapExceeded(
            f"tree with n={n}, depth={depth} has {size} nodes (cap {max_nodes})")
    parents: list[int | None] = [None] + [(i - 1) // n for i in range(1, size)]
    return TreePoset(parents)


def count_maximal_antichains(tree: TreePoset, v: int | None = None) -> int:
    """``|MA(D[v])| = 1 + prod |MA(D[child])|``, leaves giving 1."""
    start = tree.root if v is None else v
    order = []
    stack = [start]
    while stack:
        x = stack.pop()
        order.append(x)
        stack.extend(tree.children[x])
    count: dict[int, int] = {}
    for x in reversed(order):
        kids = tree.children[x]
        if kids:
            prod = 1
            for c in kids:
                prod *= count[c]
            count[x] = 1 + prod
        else:
            count[x] = 1
    return count[start]


def _ma_below(tree: TreePoset, v: int) -> Iterator[tuple[int, ...]]:
    yield (v,)
    kids = tree.children[v]
    if kids:
        yield from _ma_forest(tree, kids)


def _ma_forest(tree: TreePoset, roots: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not roots:
        yield ()
        return
    head, rest = roots[0], roots[1:]
    for first in _ma_below(tree, head):
        for tail in _ma_forest(tree, rest):
            yield first + tail


def maximal_antichains(tree: TreePoset, v: int | None = None, *,
                       cap: int = DEFAULT_MAX_ANTICHAINS) -> Iterator[Antichain]:
    """Every maximal antichain of the down-set of ``v`` (default: root).

    Each antichain is either ``{v}`` or a union of maximal antichains of
    the child subtrees, so generation is linear in the output. Raises
    ``ResourceCapExceeded`` up front if the total would exceed ``cap``.
    """
    start = tree.root if v is None else v
    total = count_maximal_antichains(tree, start)
    if total > cap:
        raise ResourceCapExceeded(
            f"{total} maximal antichains exceed the cap {cap}")
    for elems in _ma_below(tree, start):
        yield Antichain(frozenset(elems), True)


def maximal_antichains_forest(tree: TreePoset, roots: Sequence[int], *,
                              cap: int = DEFAULT_MAX_ANTICHAINS) -> Iterator[Antichain]:
    """Maximal antichains of the disjoint union of the subtrees at ``roots``."""
    total = 1
    for r in roots:
        total *= count_maximal_antichains(tree, r)
    if total > cap:
        raise ResourceCapExceeded(f"{total} maximal antichains exceed the cap {cap}")
    for elems in _ma_forest(tree, tuple(roots)):
        yield Antichain(frozenset(elems), True)


def lower_antichains(tree: TreePoset, *, max_groups: int | None = None,
                     frontier: int | None = None,
                     cap: int = DEFAULT_MAX_ANTICHAINS) -> Iterator[Antichain]:
    """Maximal antichains of the tree other than ``{root}``.

    Antichains containing a node of depth ``>= frontier`` are skipped, as
    are those with more than ``max_groups`` sibling groups (they admit no
    colouring with fewer colours). Both filters prune during generation.
    """
    if frontier is None:
        frontier = tree.max_depth() + 1
    budget = len(tree) if max_groups is None else max_groups
    emitted = 0
    for elems, _ in _lower_below(tree, tree.root, budget, frontier):
        emitted += 1
        if emitted > cap:
            raise ResourceCapExceeded(f"more than {cap} antichains enumerated")
        yield Antichain(frozenset(elems), True)


def _lower_below(tree, v, budget, frontier):
    # Maximal antichains of D[v] - {v}, with their sibling-group count.
    # Children of v taken directly share one group.
    kids = tree.children[v]
    if not kids or budget <= 0:
        return
    yield from _lower_children(tree, kids, 0, (), 0, False, budget, frontier)


def _lower_children(tree, kids, i, elems, groups, taken, budget, frontier):
    if groups + (1 if taken else 0) > budget:
        return
    if i == len(kids):
        yield elems, groups + (1 if taken else 0)
        return
    c = kids[i]
    if tree.depth[c] < frontier:
        yield from _lower_children(tree, kids, i + 1, elems + (c,), groups, True,
                                   budget, frontier)
    if tree.children[c]:
        room = budget - groups - (1 if taken else 0)
        for sub, g in _lower_below(tree, c, room, frontier):
            yield from _lower_children(tree, kids, i + 1, elems + sub, groups + g,
                                       taken, budget, frontier)


def sibling_decomposition(tree: TreePoset, antichain: Iterable[int]) -> SiblingDecomposition:
    """Group the elements by parent; groups ordered by their smallest id."""
    buckets: dict[object, list[int]] = {}
    for v in sorted(antichain):
        key = tree.parents[v]
        if key is None:
            key = ("root", v)
        buckets.setdefault(key, []).append(v)
    groups = sorted((tuple(g) for g in buckets.values()), key=lambda g: g[0])
    return SiblingDecomposition(tuple(groups))


def count_dsc_on_antichain(groups: SiblingDecomposition | Sequence[Sequence[int]] | Sequence[int],
                           k: int) -> int:
    """Number of ``k``-coloured DSCs on an antichain, up to relabelling.

    ``groups`` may be a :class:`SiblingDecomposition`, a list of groups, or
    a list of group sizes. Each group is split into ``k_i >= 1`` colour
    classes, with disjoint colours across groups.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if isinstance(groups, SiblingDecomposition):
        sizes = groups.sizes
    else:
        sizes = tuple(g if isinstance(g, int) else len(g) for g in groups)
    total = 0
    for comp in compositions(k, len(sizes), 1):
        prod = 1
        for size, ki in zip(sizes, comp):
            prod *= stirling2(size, ki)
            if not prod:
                break
        total += prod
    return total


def census_lower_dsc(n: int, k: int, depth: int, *, max_nodes: int = DEFAULT_MAX_NODES,
                     max_antichains: int = DEFAULT_MAX_ANTICHAINS) -> int:
    """Brute-force count of lower ``k``-coloured DSCs in the depth-``depth``
    truncation of the ``n``-ary tree, ignoring antichains that touch the
    truncation frontier. Equals ``f_n(k)`` once ``depth >= k + 1``.
    """
    if n < 2:
        raise ValueError(f"branching factor must satisfy n >= 2, got {n}")
    if k < 1 or depth < 1:
        raise ValueError("k and depth must be positive")
    tree = build_nary_truncation(n, depth, max_nodes=max_nodes)
    total = 0
    for S in lower_antichains(tree, max_groups=k, frontier=depth, cap=max_antichains):
        total += count_dsc_on_antichain(sibling_decomposition(tree, S.elements), k)
    return total


def census_total_dsc(n: int, k: int, depth: int, convention: str = "k1", **caps) -> int:
    """All DSCs including the root singleton.

    ``"k1"`` colours ``{root}`` with its single colour and so adds it at
    ``k = 1``; ``"k0"`` adds one object at ``k = 0`` instead.
    """
    if convention == "k1":
        if k < 1:
            raise ValueError("k must be positive")
        return census_lower_dsc(n, k, depth, **caps) + count_dsc_on_antichain([1], k)
    if convention == "k0":
        if k == 0:
            return 1
        return census_lower_dsc(n, k, depth, **caps)
    raise ValueError(f"unknown convention {convention!r}")

