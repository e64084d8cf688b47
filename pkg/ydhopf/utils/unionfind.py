"""
Union-find and orbit enumeration for finite group actions.
"""

from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Set, TypeVar

X = TypeVar("X", bound=Hashable)
Gen = TypeVar("Gen")


class UnionFind:
    """Disjoint sets over a fixed finite set, by rank with path compression."""

    def __init__(self, items: Iterable[X]):
        items = list(items)
        self.parent: Dict[X, X] = {x: x for x in items}
        self.rank: Dict[X, int] = {x: 0 for x in items}
        self.size: Dict[X, int] = {x: 1 for x in items}

    def find(self, x: X) -> X:
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x: X, y: X) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        self.size[x] += self.size[y]
        del self.rank[y]

    def reps(self) -> Set[X]:
        return set(self.rank)

    def __len__(self) -> int:
        return len(self.rank)

    def __iter__(self) -> Iterator[X]:
        return iter(self.reps())


def find_orbits(gens: Iterable[Gen], space: List[X], action: Callable[[Gen, X], X]) -> Dict[X, List[X]]:
    """Orbits of the group generated by gens, keyed by their smallest point; each orbit sorted."""
    uf = UnionFind(space)
    for g in gens:
        for x in space:
            uf.union(x, action(g, x))
    orbits: Dict[X, List[X]] = {}
    for x in space:
        orbits.setdefault(uf.find(x), []).append(x)
    return {min(points): sorted(points) for points in orbits.values()}
