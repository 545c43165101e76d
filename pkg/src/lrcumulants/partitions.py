"""Set partitions of {1..n}, the reverse-refinement order, and permutation actions.

Everything here is 1-based and exact.  A partition is stored in canonical
form (blocks sorted by their minimum, elements ascending inside a block),
so structural equality is partition equality and partitions can be used
as dictionary keys.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

#: Enumeration functions reject n above this bound (Bell(11) = 678570
#: objects is the largest batch we are willing to materialize).
MAX_GROUND_SET = 11


def _check_ground_set(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ground-set size must be a positive integer, got {n!r}")
    if n > MAX_GROUND_SET:
        raise ValueError(f"ground-set size {n} exceeds the supported limit {MAX_GROUND_SET}")


class Partition:
    """A partition of {1..n} into disjoint non-empty blocks.

    Blocks are canonicalized on construction; two Partition objects are
    equal iff they describe the same partition.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"partition ground-set size must be >= 1, got {n!r}")
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        seen: set[int] = set()
        total = 0
        for block in canon:
            if not block:
                raise ValueError("partition blocks must be non-empty")
            total += len(block)
            seen.update(block)
        if total != n or seen != set(range(1, n + 1)):
            raise ValueError(f"blocks {canon!r} do not partition {{1..{n}}}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def _unchecked(cls, n: int, canonical_blocks: Tuple[Tuple[int, ...], ...]) -> "Partition":
        # Fast path for enumeration: caller guarantees canonical valid blocks.
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", canonical_blocks)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __lt__(self, other: "Partition"):
        # Deterministic total order used only for sorting output lists.
        return self.blocks < other.blocks

    def __repr__(self):
        return f"Partition({self.n}, {[list(b) for b in self.blocks]})"

    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, m: int) -> Tuple[int, ...]:
        """The block containing m."""
        for block in self.blocks:
            if m in block:
                return block
        raise ValueError(f"{m} is not in the ground set 1..{self.n}")

    def block_index(self) -> List[int]:
        """List mapping element m (1-based) to the index of its block."""
        idx = [0] * (self.n + 1)
        for k, block in enumerate(self.blocks):
            for m in block:
                idx[m] = k
        return idx

    def to_json(self) -> List[List[int]]:
        return [list(b) for b in self.blocks]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "Partition":
        n = sum(len(b) for b in data)
        return cls(n, data)


def singletons(n: int) -> Partition:
    """The minimum of the reverse-refinement order: all blocks are singletons."""
    return Partition._unchecked(n, tuple((m,) for m in range(1, n + 1)))


def one_block(n: int) -> Partition:
    """The maximum of the reverse-refinement order: a single block {1..n}."""
    return Partition._unchecked(n, (tuple(range(1, n + 1)),))


class Permutation:
    """A permutation of {1..n} in one-line notation."""

    __slots__ = ("n", "images")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n < 1 or sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{images!r} is not a permutation of 1..{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        """m -> n + 1 - m."""
        return cls(range(n, 0, -1))

    def __call__(self, m: int) -> int:
        return self.images[m - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(m) = self(other(m))."""
        if self.n != other.n:
            raise ValueError("cannot compose permutations of different sizes")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for m, img in enumerate(self.images, start=1):
            inv[img - 1] = m
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def to_json(self) -> List[int]:
        return list(self.images)


def enumerate_partitions(n: int) -> List[Partition]:
    """All partitions of {1..n}, each exactly once, in canonical form.

    The result has Bell(n) entries.
    """
    _check_ground_set(n)
    out: List[Partition] = []
    blocks: List[List[int]] = []

    def extend(m: int) -> None:
        if m > n:
            out.append(Partition._unchecked(n, tuple(tuple(b) for b in blocks)))
            return
        for b in blocks:
            b.append(m)
            extend(m + 1)
            b.pop()
        blocks.append([m])
        extend(m + 1)
        blocks.pop()

    extend(1)
    return out


def is_noncrossing(p: Partition) -> bool:
    """True iff no two blocks of p cross.

    Blocks V and W cross when there are a < b < c < d with a, c in V and
    b, d in W.  Equivalently the blocks are properly nested, which is what
    this single scan with a stack of open blocks checks.
    """
    idx = p.block_index()
    mins = {min(b): k for k, b in enumerate(p.blocks)}
    maxs = {max(b): k for k, b in enumerate(p.blocks)}
    stack: List[int] = []
    for m in range(1, p.n + 1):
        k = idx[m]
        if m in mins and mins[m] == k:
            stack.append(k)
        elif stack[-1] != k:
            return False
        if m in maxs and maxs[m] == k:
            stack.pop()
    return True


def enumerate_noncrossing(n: int) -> List[Partition]:
    """The non-crossing partitions of {1..n}; there are Catalan(n) of them."""
    _check_ground_set(n)
    return [p for p in enumerate_partitions(n) if is_noncrossing(p)]


def leq(p: Partition, q: Partition) -> bool:
    """Reverse refinement: every block of p is contained in a block of q."""
    if p.n != q.n:
        raise ValueError("cannot compare partitions of different ground sets")
    qidx = q.block_index()
    for block in p.blocks:
        k = qidx[block[0]]
        for m in block[1:]:
            if qidx[m] != k:
                return False
    return True


def meet(p: Partition, q: Partition) -> Partition:
    """Greatest lower bound in reverse refinement.

    Blocks are the non-empty pairwise intersections of a block of p with a
    block of q.
    """
    if p.n != q.n:
        raise ValueError("cannot meet partitions of different ground sets")
    pidx = p.block_index()
    qidx = q.block_index()
    groups: dict[tuple[int, int], list[int]] = {}
    for m in range(1, p.n + 1):
        groups.setdefault((pidx[m], qidx[m]), []).append(m)
    return Partition(p.n, groups.values())


def act(t: Permutation, p: Partition) -> Partition:
    """Apply t to every element of every block, then re-canonicalize."""
    if t.n != p.n:
        raise ValueError("permutation and partition sizes differ")
    images = t.images
    return Partition(p.n, ([images[m - 1] for m in block] for block in p.blocks))


def opposite(p: Partition) -> Partition:
    """The image of p under the order-reversing map m -> n + 1 - m."""
    n = p.n
    return Partition(n, ([n + 1 - m for m in block] for block in p.blocks))
