"""Lukasiewicz paths stored as rise-vectors, and the partition/path correspondence.

A path with n steps is kept as its rise-vector (q_1, ..., q_n): each
q_m >= -1, every partial sum is >= 0, and the total sum is 0.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence

from .partitions import Partition, _check_ground_set


class InvalidRiseVector(ValueError):
    """Raised when an integer sequence is not the rise-vector of a path.

    ``prefix`` is the 1-based length of the first offending prefix, or None
    when the total sum (rather than a prefix) is at fault.
    """

    def __init__(self, message: str, prefix: int | None = None):
        super().__init__(message)
        self.prefix = prefix


class LukPath:
    """A lattice path with steps rising by q_m in {-1, 0, 1, 2, ...}.

    The path starts and ends at height 0 and never dips below it.
    """

    __slots__ = ("n", "rise")

    def __init__(self, rise: Iterable[int]):
        rise = tuple(rise)
        _validate(rise)
        object.__setattr__(self, "n", len(rise))
        object.__setattr__(self, "rise", rise)

    def __setattr__(self, name, value):
        raise AttributeError("LukPath is immutable")

    def __eq__(self, other):
        return isinstance(other, LukPath) and self.rise == other.rise

    def __hash__(self):
        return hash(self.rise)

    def __repr__(self):
        return f"LukPath({list(self.rise)})"

    def heights(self) -> List[int]:
        """Heights after each step; always non-negative, final height 0."""
        out = []
        h = 0
        for q in self.rise:
            h += q
            out.append(h)
        return out

    def to_json(self) -> List[int]:
        return list(self.rise)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "LukPath":
        return cls(data)


def _validate(rise: tuple) -> None:
    if not rise:
        raise InvalidRiseVector("rise-vector must be non-empty")
    for k, q in enumerate(rise, start=1):
        if not isinstance(q, int) or q < -1:
            raise InvalidRiseVector(
                f"entry {q!r} at position {k} is not an integer >= -1", prefix=k
            )
    total = 0
    for k, q in enumerate(rise, start=1):
        total += q
        if total < 0:
            raise InvalidRiseVector(
                f"partial sum of the first {k} entries is {total} < 0", prefix=k
            )
    if total != 0:
        raise InvalidRiseVector(f"entries sum to {total}, expected 0")


def validate_rise(q: Sequence[int]) -> LukPath:
    """Check the path conditions and wrap q as a LukPath.

    Raises InvalidRiseVector naming the first failing prefix, or the
    non-zero total.
    """
    return LukPath(q)


def enumerate_luk(n: int) -> List[LukPath]:
    """All paths with n steps, each exactly once; there are Catalan(n)."""
    _check_ground_set(n)
    out: List[LukPath] = []
    rise: List[int] = []

    def extend(m: int, height: int) -> None:
        if m > n:
            out.append(LukPath(rise))
            return
        # From height h with n - m + 1 steps left, the next rise q must keep
        # h + q >= 0 and leave h + q <= steps remaining afterwards.
        for q in range(max(-1, -height), n - m - height + 1):
            rise.append(q)
            extend(m + 1, height + q)
            rise.pop()

    extend(1, 0)
    return out


def psi(p: Partition) -> LukPath:
    """The canonical path of a partition.

    The rise at each block minimum is the block size minus one; every
    other rise is -1.  This map is onto the set of paths, and restricts to
    a bijection on non-crossing partitions.
    """
    rise = [-1] * p.n
    for block in p.blocks:
        rise[block[0] - 1] = len(block) - 1
    return LukPath(rise)


def phi(l: LukPath) -> Partition:
    """The unique non-crossing partition whose canonical path is l.

    Computed by replaying l as a last-in-first-out stack process: at step m
    push the next rise_m + 1 balls, then pop one ball; balls pushed in the
    same step form a block of pop times.
    """
    n = l.n
    stack: List[int] = []
    next_ball = 1
    exit_time = [0] * (n + 1)
    batches: List[tuple[int, int]] = []  # (first ball, last ball) per push step
    for t, q in enumerate(l.rise, start=1):
        p = q + 1
        if p:
            batches.append((next_ball, next_ball + p - 1))
            for _ in range(p):
                stack.append(next_ball)
                next_ball += 1
        exit_time[stack.pop()] = t
    blocks = [
        sorted(exit_time[ball] for ball in range(lo, hi + 1)) for lo, hi in batches
    ]
    return Partition(n, blocks)
