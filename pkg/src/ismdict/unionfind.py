"""Disjoint-set forest used to group names into variant components."""

from __future__ import annotations

from typing import Hashable, Iterable

__all__ = ["DisjointSet"]


class DisjointSet:
    """Union-find with path compression and union by rank."""

    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        self.rank: dict = {}
        for item in items:
            self.add(item)

    def add(self, item) -> None:
        """Register ``item`` as its own singleton set; no-op if present."""
        if item not in self.parent:
            self.parent[item] = item
            self.rank[item] = 0

    def find(self, item):
        """Return the representative of ``item``'s set."""
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:  # compress the walked path
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, x, y) -> None:
        """Merge the sets containing ``x`` and ``y``."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1

    def groups(self) -> dict:
        """Map each representative to the list of its members."""
        out: dict = {}
        for item in self.parent:
            out.setdefault(self.find(item), []).append(item)
        return out
