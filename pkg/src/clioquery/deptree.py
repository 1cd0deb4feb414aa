"""Dependency-tree structure used by sentence shortening."""

from dataclasses import dataclass, field

ROOT = -1


class DepTreeError(ValueError):
    """Raised when a head array does not describe a single rooted tree."""


@dataclass
class DepTree:
    """A dependency parse: one node per token, ``heads[i]`` is the parent
    of token i (0-based) or ``ROOT``.

    Subtrees of a valid tree are either nested or disjoint, which is what
    clause deletion relies on.
    """

    heads: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    _children: list[list[int]] | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_heads(cls, heads, labels=None) -> "DepTree":
        """Build and validate a tree from 0-based heads (ROOT = -1)."""
        tree = cls(tuple(heads), tuple(labels) if labels is not None else None)
        tree.validate()
        return tree

    @classmethod
    def from_conllu_heads(cls, heads, labels=None) -> "DepTree":
        """Build from 1-based heads where 0 marks the root."""
        return cls.from_heads(tuple(h - 1 for h in heads), labels)

    @property
    def n(self) -> int:
        return len(self.heads)

    @property
    def root(self) -> int:
        return self.heads.index(ROOT)

    def validate(self) -> None:
        n = self.n
        if n == 0:
            raise DepTreeError("empty tree")
        if self.labels is not None and len(self.labels) != n:
            raise DepTreeError("label count does not match node count")
        roots = [i for i, h in enumerate(self.heads) if h == ROOT]
        if len(roots) != 1:
            raise DepTreeError(f"expected exactly one root, found {len(roots)}")
        for i, h in enumerate(self.heads):
            if h != ROOT and not 0 <= h < n:
                raise DepTreeError(f"head of node {i} out of range: {h}")
            if h == i:
                raise DepTreeError(f"node {i} is its own head")
        # Every node must reach the root without revisiting a node.
        for i in range(n):
            seen = set()
            j = i
            while j != ROOT:
                if j in seen:
                    raise DepTreeError(f"head cycle involving node {j}")
                seen.add(j)
                j = self.heads[j]

    def children(self) -> list[list[int]]:
        if self._children is None:
            kids: list[list[int]] = [[] for _ in range(self.n)]
            for i, h in enumerate(self.heads):
                if h != ROOT:
                    kids[h].append(i)
            self._children = kids
        return self._children

    def subtree(self, i: int) -> tuple[int, ...]:
        """All token indices in the subtree rooted at i, sorted."""
        kids = self.children()
        stack = [i]
        out = []
        while stack:
            j = stack.pop()
            out.append(j)
            stack.extend(kids[j])
        return tuple(sorted(out))

    def ancestors(self, i: int) -> tuple[int, ...]:
        """Strict ancestors of i, from parent up to the root."""
        out = []
        j = self.heads[i]
        while j != ROOT:
            out.append(j)
            j = self.heads[j]
        return tuple(out)
