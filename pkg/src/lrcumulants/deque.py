"""Double-ended-queue scenarios and the partition families they generate.

A scenario pushes n labelled balls through a double-ended queue: step m
inserts the next ``rise_m + 1`` balls at one end (chosen by a word chi over
{l, r}) and then emits one ball from that same end.  Grouping emission
times by insertion batch yields the output-time partition of the scenario;
collecting these over all paths for a fixed chi yields a family of
partitions that is also the orbit of the non-crossing partitions under an
explicit permutation ``sigma_chi``.
"""

from __future__ import annotations

import collections
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

from .lukasiewicz import LukPath, enumerate_luk
from .partitions import (
    Partition,
    Permutation,
    _check_ground_set,
    act,
    enumerate_noncrossing,
)

LEFT = "l"
RIGHT = "r"


class ChiWord:
    """A word over {l, r} choosing the active end of each step.

    Keeps the positions of the l-steps (``m_ell``) and of the r-steps
    (``m_r``), both in increasing order.
    """

    __slots__ = ("n", "letters", "m_ell", "m_r")

    def __init__(self, letters: "str | Iterable[str]"):
        word = "".join(letters)
        if not word:
            raise ValueError("chi word must be non-empty")
        bad = set(word) - {LEFT, RIGHT}
        if bad:
            raise ValueError(f"chi word may only contain 'l' and 'r', got {sorted(bad)}")
        object.__setattr__(self, "n", len(word))
        object.__setattr__(self, "letters", word)
        object.__setattr__(
            self, "m_ell", tuple(m for m, h in enumerate(word, 1) if h == LEFT)
        )
        object.__setattr__(
            self, "m_r", tuple(m for m, h in enumerate(word, 1) if h == RIGHT)
        )

    def __setattr__(self, name, value):
        raise AttributeError("ChiWord is immutable")

    def __eq__(self, other):
        return isinstance(other, ChiWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"ChiWord({self.letters!r})"

    def __str__(self):
        return self.letters

    def to_json(self) -> str:
        return self.letters


def _chi_str(chi: "ChiWord | str") -> str:
    if isinstance(chi, ChiWord):
        return chi.letters
    return ChiWord(chi).letters


class DequeScenario:
    """A path paired with an end-choice word of the same length."""

    __slots__ = ("path", "chi")

    def __init__(self, path: LukPath, chi: ChiWord):
        if path.n != chi.n:
            raise ValueError(
                f"path has {path.n} steps but chi word has {chi.n} letters"
            )
        object.__setattr__(self, "path", path)
        object.__setattr__(self, "chi", chi)

    def __setattr__(self, name, value):
        raise AttributeError("DequeScenario is immutable")


class ScenarioTrace:
    """What a scenario run produces.

    ``output_partition`` groups emission times by insertion batch;
    ``exit_order`` lists ball labels by emission time; ``insertion_times``
    is the sorted tuple of steps that insert at least one ball.
    """

    __slots__ = ("output_partition", "exit_order", "insertion_times")

    def __init__(
        self,
        output_partition: Partition,
        exit_order: Tuple[int, ...],
        insertion_times: Tuple[int, ...],
    ):
        object.__setattr__(self, "output_partition", output_partition)
        object.__setattr__(self, "exit_order", exit_order)
        object.__setattr__(self, "insertion_times", insertion_times)

    def __setattr__(self, name, value):
        raise AttributeError("ScenarioTrace is immutable")


def simulate(s: DequeScenario) -> ScenarioTrace:
    """Replay the scenario on an explicit queue of labelled balls.

    Step m with insertion count p and side h: the next p balls (in label
    order) are inserted one by one at side h, then one ball is emitted from
    side h.  Emission times grouped by insertion batch give the
    output-time partition.
    """
    n = s.path.n
    pipe: collections.deque[int] = collections.deque()
    next_ball = 1
    exit_order: List[int] = []
    exit_time = [0] * (n + 1)
    batches: List[Tuple[int, int, int]] = []  # (step, first ball, last ball)
    for t, (q, h) in enumerate(zip(s.path.rise, s.chi.letters), start=1):
        p = q + 1
        if p == 0 and not pipe:
            raise RuntimeError(f"step {t} would emit from an empty queue")
        if p:
            batches.append((t, next_ball, next_ball + p - 1))
        for _ in range(p):
            if h == LEFT:
                pipe.appendleft(next_ball)
            else:
                pipe.append(next_ball)
            next_ball += 1
        ball = pipe.popleft() if h == LEFT else pipe.pop()
        exit_order.append(ball)
        exit_time[ball] = t
    if pipe or next_ball != n + 1:
        raise RuntimeError("scenario did not move every ball to the output")
    blocks = [
        sorted(exit_time[ball] for ball in range(lo, hi + 1)) for _, lo, hi in batches
    ]
    return ScenarioTrace(
        Partition(n, blocks),
        tuple(exit_order),
        tuple(t for t, _, _ in batches),
    )


def output_partition(path: LukPath, chi: ChiWord) -> Partition:
    """The output-time partition of the scenario (path, chi)."""
    return simulate(DequeScenario(path, chi)).output_partition


def pchi_by_enumeration(chi: ChiWord) -> List[Partition]:
    """The family of output-time partitions over all paths, for fixed chi.

    The scenario map is injective, so the family has Catalan(n) members;
    a duplicate would mean the simulator is broken and raises.
    """
    _check_ground_set(chi.n)
    family = [output_partition(path, chi) for path in enumerate_luk(chi.n)]
    if len(set(family)) != len(family):
        raise RuntimeError(
            f"duplicate output partition for chi={chi.letters!r}; simulator bug"
        )
    return sorted(family)


def sigma_chi(chi: ChiWord) -> Permutation:
    """The permutation sending slot q to the q-th l-position for q <= u,
    and slot u + j to the (v + 1 - j)-th r-position (l-positions in order,
    then r-positions reversed)."""
    return Permutation(chi.m_ell + tuple(reversed(chi.m_r)))


def pchi_by_sigma(chi: ChiWord) -> List[Partition]:
    """The same family as ``pchi_by_enumeration``, built as the image of the
    non-crossing partitions under the action of ``sigma_chi``."""
    _check_ground_set(chi.n)
    sigma = sigma_chi(chi)
    return sorted(act(sigma, p) for p in enumerate_noncrossing(chi.n))


def insertion_standings(
    path: LukPath, chi: ChiWord
) -> List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    """Per insertion time i: (i, V_i, W_i).

    V_i collects the l-standings q with the q-th l-position in the block
    of i, W_i the r-standings likewise.  V_i or W_i may be empty, never
    both.
    """
    trace = simulate(DequeScenario(path, chi))
    ell_standing = {m: q for q, m in enumerate(chi.m_ell, 1)}
    r_standing = {m: q for q, m in enumerate(chi.m_r, 1)}
    out = []
    for i, block in zip(trace.insertion_times, trace.output_partition.blocks):
        v = tuple(sorted(ell_standing[m] for m in block if m in ell_standing))
        w = tuple(sorted(r_standing[m] for m in block if m in r_standing))
        out.append((i, v, w))
    return out


def standings_partitions(
    path: LukPath, chi: ChiWord
) -> Tuple[Optional[Partition], Optional[Partition]]:
    """(left, right) standings partitions; None on a side chi never uses.

    The left partition lives on {1..u} (u = number of l-steps) and groups
    standings whose l-positions share a block of the output-time
    partition; the right partition is the mirror statement on {1..v}.
    """
    data = insertion_standings(path, chi)
    u = len(chi.m_ell)
    v = len(chi.m_r)
    left = None
    if u:
        left = Partition(u, [vi for _, vi, _ in data if vi])
    right = None
    if v:
        right = Partition(v, [wi for _, _, wi in data if wi])
    return left, right


def combined_standings(path: LukPath, chi: ChiWord) -> Partition:
    """Merge both standings into one partition of {1..n}.

    Block for insertion time i: V_i united with the reflection
    {n + 1 - q : q in W_i}.  The result is always non-crossing.
    """
    n = chi.n
    blocks = [
        sorted(vi + tuple(n + 1 - q for q in wi))
        for _, vi, wi in insertion_standings(path, chi)
    ]
    return Partition(n, blocks)


def chi_opposite(chi: ChiWord) -> ChiWord:
    """The word read in reverse."""
    return ChiWord(chi.letters[::-1])


def tau_u(n: int, u: int) -> Permutation:
    """The permutation reversing {1..u} and {u+1..n} separately.

    q -> u + 1 - q for q <= u, and q -> n + u + 1 - q for q > u.  For
    u = 0 or u = n it is the full reversal.
    """
    if not 0 <= u <= n:
        raise ValueError(f"u must be in 0..{n}, got {u}")
    return Permutation(
        [u + 1 - q for q in range(1, u + 1)]
        + [n + u + 1 - q for q in range(u + 1, n + 1)]
    )


# ---------------------------------------------------------------------------
# Cached per-chi data used by the cumulant recursion and the moment sums.
# ---------------------------------------------------------------------------

BlockData = Tuple[Tuple[int, ...], str]  # (0-based positions, restricted chi)
PartitionData = Tuple[Tuple[BlockData, ...], ...]


@lru_cache(maxsize=None)
def restriction_data(chi_str: str) -> PartitionData:
    """For every partition in the family of chi: its blocks as 0-based
    position tuples paired with the restriction of chi to the block.

    Partitions appear in canonical sorted order; within a partition,
    blocks in canonical order.  Cached per chi since the family is reused
    heavily by recursions over sub-words.
    """
    chi = ChiWord(chi_str)
    data = []
    for p in pchi_by_enumeration(chi):
        data.append(
            tuple(
                (
                    tuple(m - 1 for m in block),
                    "".join(chi_str[m - 1] for m in block),
                )
                for block in p.blocks
            )
        )
    return tuple(data)
