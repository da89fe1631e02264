"""Rooted trees of Coe-semigroups.

Every Coe-semigroup S other than N has the parent S + {F(S)-1, F(S)}, which
is again Coe. Following parents always ends at N, so the Coe-semigroups form
a tree rooted at N. The son rules below invert the parent map; each tree
family restricts which sons are allowed.

Edges are emitted parent -> child (the direction traversal needs), even
though the defining relation reads child -> parent.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator

from .coe import is_coe
from .core import FULL, NumericalSemigroup, remove_element, remove_pair
from .errors import (
    BadArguments,
    FrobExceeded,
    GenusExceeded,
    KNotMember,
    NotCoe,
    UnboundedInfiniteFamily,
)


@dataclass(frozen=True)
class TreeEdge:
    parent: NumericalSemigroup
    child: NumericalSemigroup
    removed: tuple[int, ...]


@dataclass(frozen=True)
class TreeNode:
    semigroup: NumericalSemigroup
    depth: int
    edge: TreeEdge | None = None

    @property
    def parent(self) -> NumericalSemigroup | None:
        return self.edge.parent if self.edge else None

    @property
    def removed(self) -> tuple[int, ...] | None:
        return self.edge.removed if self.edge else None


def _require_coe(S: NumericalSemigroup) -> None:
    if not is_coe(S):
        raise NotCoe(f"{S} is not a Coe-semigroup")


def _sons(S: NumericalSemigroup, allowed: Callable[[int], bool], with_pair: bool) -> list[TreeEdge]:
    f = S.frobenius
    gens = [x for x in S.msg if allowed(x)]
    edges = [TreeEdge(S, remove_element(S, x), (x,)) for x in gens if x % 2 and x > f]
    if with_pair and f + 1 in gens and f + 2 in gens:
        edges.append(TreeEdge(S, remove_pair(S, f + 1), (f + 1, f + 2)))
    edges.sort(key=lambda e: e.removed[0])
    return edges


def sons_all(S: NumericalSemigroup) -> list[TreeEdge]:
    """Sons of S in the tree of all Coe-semigroups."""
    _require_coe(S)
    return _sons(S, lambda x: True, with_pair=True)


def sons_contains_k(S: NumericalSemigroup, k: int) -> list[TreeEdge]:
    """Sons of S in the tree of Coe-semigroups containing k."""
    _require_coe(S)
    if k not in S:
        raise KNotMember(f"{k} is not an element of {S}")
    return _sons(S, lambda x: x != k, with_pair=True)


def sons_frob_bounded(S: NumericalSemigroup, F: int) -> list[TreeEdge]:
    """Sons of S in the tree of Coe-semigroups with Frobenius number at most F."""
    _require_coe(S)
    if S.frobenius > F:
        raise FrobExceeded(f"F{S} = {S.frobenius} > {F}")
    return _sons(S, lambda x: x <= F, with_pair=True)


def sons_genus_bounded(S: NumericalSemigroup, g: int) -> list[TreeEdge]:
    """Sons of S in the tree of Coe-semigroups with genus at most g.

    A single removal raises the genus by one and a pair removal by two, so
    near the cap only some sons survive.
    """
    _require_coe(S)
    slack = g - S.genus
    if slack < 0:
        raise GenusExceeded(f"g{S} = {S.genus} > {g}")
    if slack == 0:
        return []
    return _sons(S, lambda x: True, with_pair=slack >= 2)


class Family(Enum):
    ALL = "all"
    CONTAINS_K = "contains-k"
    FROB_AT_MOST = "frob"
    GENUS_AT_MOST = "genus"


@dataclass(frozen=True)
class EnumerationBound:
    """Stopping rule for a traversal.

    ``max_genus`` prunes any child of larger genus, ``max_depth`` stops
    expanding at that depth (root is depth 0) and ``max_nodes`` cuts the
    emission after that many vertices in BFS order.
    """

    max_genus: int | None = None
    max_depth: int | None = None
    max_nodes: int | None = None

    @property
    def unlimited(self) -> bool:
        return self.max_genus is None and self.max_depth is None and self.max_nodes is None


@dataclass(frozen=True)
class TreeSpec:
    family: Family
    param: int | None = None
    bound: EnumerationBound = field(default_factory=EnumerationBound)

    def __post_init__(self) -> None:
        if self.family is Family.ALL:
            if self.param is not None:
                raise BadArguments("the 'all' family takes no parameter")
        elif self.param is None or self.param <= 0:
            raise BadArguments(f"family {self.family.value!r} needs a positive integer parameter")
        if not self.is_finite and self.bound.unlimited:
            raise UnboundedInfiniteFamily(
                f"family {self.family.value!r} with parameter {self.param} is infinite; set a bound"
            )

    @property
    def is_finite(self) -> bool:
        if self.family is Family.ALL:
            return False
        if self.family is Family.CONTAINS_K:
            return self.param % 2 == 1
        return True

    def sons(self, S: NumericalSemigroup) -> list[TreeEdge]:
        if self.family is Family.ALL:
            return sons_all(S)
        if self.family is Family.CONTAINS_K:
            return sons_contains_k(S, self.param)
        if self.family is Family.FROB_AT_MOST:
            return sons_frob_bounded(S, self.param)
        return sons_genus_bounded(S, self.param)


def enumerate_tree(spec: TreeSpec, *, threads: int = 1, check_unique: bool = False) -> Iterator[TreeNode]:
    """Breadth-first traversal from N, root first.

    Siblings come in increasing order of their smallest removed element, so
    the output is deterministic. With ``threads > 1`` each level's sons are
    computed concurrently and re-serialized in the same order.
    """
    bound = spec.bound
    if bound.max_nodes is not None and bound.max_nodes <= 0:
        return
    root = TreeNode(FULL, 0)
    yield root
    emitted = 1
    seen = {FULL} if check_unique else None
    level = [root]
    pool = ThreadPoolExecutor(threads) if threads > 1 else None

    def expand(node: TreeNode) -> list[TreeEdge]:
        if bound.max_depth is not None and node.depth >= bound.max_depth:
            return []
        return spec.sons(node.semigroup)

    try:
        while level:
            son_lists = pool.map(expand, level) if pool else map(expand, level)
            nxt = []
            for node, edges in zip(level, son_lists):
                for edge in edges:
                    if bound.max_genus is not None and edge.child.genus > bound.max_genus:
                        continue
                    if bound.max_nodes is not None and emitted >= bound.max_nodes:
                        return
                    if seen is not None:
                        assert edge.child not in seen, f"{edge.child} generated twice"
                        seen.add(edge.child)
                    child = TreeNode(edge.child, node.depth + 1, edge)
                    yield child
                    emitted += 1
                    nxt.append(child)
            level = nxt
    finally:
        if pool:
            pool.shutdown(wait=False, cancel_futures=True)


def count_by_genus(g_max: int, *, threads: int = 1) -> dict[int, int]:
    """Number of Coe-semigroups of each genus 0..g_max."""
    spec = TreeSpec(Family.ALL, bound=EnumerationBound(max_genus=g_max))
    counts = Counter(node.semigroup.genus for node in enumerate_tree(spec, threads=threads))
    return {g: counts.get(g, 0) for g in range(g_max + 1)}


def _angle(S: NumericalSemigroup) -> str:
    return "⟨" + ",".join(map(str, S.msg)) + "⟩"


def to_dot(nodes: Iterable[TreeNode], name: str = "coe") -> str:
    """Graphviz digraph, parent -> child, nodes labelled by their msg."""
    lines = [f"digraph {name} {{"]
    ids: dict[NumericalSemigroup, str] = {}
    edges = []
    for node in nodes:
        nid = f"n{len(ids)}"
        ids[node.semigroup] = nid
        lines.append(f'  {nid} [label="{_angle(node.semigroup)}"];')
        if node.edge is not None:
            label = "{" + ",".join(map(str, node.edge.removed)) + "}"
            edges.append(f'  {ids[node.edge.parent]} -> {nid} [label="{label}"];')
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def node_record(node: TreeNode) -> dict[str, object]:
    S = node.semigroup
    return {
        "msg": list(S.msg),
        "genus": S.genus,
        "frobenius": S.frobenius,
        "parent_msg": list(node.parent.msg) if node.parent is not None else None,
        "removed": list(node.removed) if node.removed is not None else None,
    }


def to_jsonl(nodes: Iterable[TreeNode]) -> str:
    return "".join(json.dumps(node_record(n), separators=(",", ":")) + "\n" for n in nodes)
