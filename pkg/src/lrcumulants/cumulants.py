"""Left-right cumulant functionals of a noncommutative probability space.

A moment functional is any callable mapping non-empty words of opaque
element ids to scalars in an exact commutative ring (rationals or
polynomial scalars).  For each word chi over {l, r} the chi-cumulant is
defined by subtracting, from the moment of the whole word, the products
of cumulants of restricted words over all non-trivial members of the
scenario partition family of chi.  Summing cumulant products over the
full family recovers the moment.

When chi is constant the family is the non-crossing lattice and the
chi-cumulants reduce to the free cumulants.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Sequence, Tuple

from .deque import ChiWord, _chi_str, restriction_data

MomentFunctional = Callable[[tuple], object]
CumulantFunctional = Callable[[str, tuple], object]


class CumulantEngine:
    """Evaluates chi-cumulants for one moment functional, with memoization.

    The memo is keyed by (chi letters, word); repeated and nested calls
    on restrictions of the same words are computed once.
    """

    def __init__(self, phi: MomentFunctional):
        self.phi = phi
        self._memo: Dict[Tuple[str, tuple], object] = {}

    def cumulant(self, chi: "ChiWord | str", word: Sequence) -> object:
        chi_str = _chi_str(chi)
        word = tuple(word)
        if len(chi_str) != len(word):
            raise ValueError(
                f"chi has {len(chi_str)} letters but the word has {len(word)} entries"
            )
        return self._kappa(chi_str, word)

    def _kappa(self, chi_str: str, word: tuple) -> object:
        memo = self._memo
        key = (chi_str, word)
        value = memo.get(key)
        if value is not None:
            return value
        value = self.phi(word)
        if len(word) > 1:
            for blocks in restriction_data(chi_str):
                if len(blocks) == 1:  # the one-block partition defines the rest
                    continue
                prod = None
                for positions, sub in blocks:
                    sub_key = (sub, tuple(word[p] for p in positions))
                    factor = memo.get(sub_key)
                    if factor is None:
                        factor = self._kappa(*sub_key)
                    prod = factor if prod is None else prod * factor
                value = value - prod
        memo[key] = value
        return value

    def moment(self, chi: "ChiWord | str", word: Sequence) -> object:
        """Sum of cumulant products over the full partition family of chi."""
        return moment_from_cumulants(chi, word, self._kappa)


def lr_cumulant(chi: "ChiWord | str", word: Sequence, phi: MomentFunctional) -> object:
    """The chi-cumulant of the word under the moment functional phi.

    For repeated evaluations against the same phi, build one
    :class:`CumulantEngine` and reuse it.
    """
    return CumulantEngine(phi).cumulant(chi, word)


def moment_from_cumulants(
    chi: "ChiWord | str", word: Sequence, kappa: CumulantFunctional
) -> object:
    """Assemble a moment from a cumulant evaluator.

    ``kappa`` is called as kappa(chi_letters, restricted_word); the result
    is the sum over the partition family of chi of the per-block products.
    """
    chi_str = _chi_str(chi)
    word = tuple(word)
    if len(chi_str) != len(word):
        raise ValueError(
            f"chi has {len(chi_str)} letters but the word has {len(word)} entries"
        )
    total = None
    for blocks in restriction_data(chi_str):
        prod = None
        for positions, sub in blocks:
            factor = kappa(sub, tuple(word[p] for p in positions))
            prod = factor if prod is None else prod * factor
        total = prod if total is None else total + prod
    return total


def free_cumulant(word: Sequence, phi: MomentFunctional) -> object:
    """The length-n free cumulant: the chi-cumulant for the constant
    all-"l" word (the all-"r" word gives the same value)."""
    word = tuple(word)
    return lr_cumulant("l" * len(word), word, phi)


def is_combinatorially_bifree_upto(
    pairs: Sequence[Tuple[object, object]],
    phi: MomentFunctional,
    max_n: int,
) -> Tuple[bool, List[Tuple[str, Tuple[int, ...], object]]]:
    """Check that every mixed-index cumulant of the paired family vanishes.

    ``pairs[i - 1] = (a_i, b_i)`` names the left and right element of the
    i-th pair.  For every word length 2..max_n, every chi, and every
    index word using at least two distinct indices, the chi-cumulant of
    the word picking a_i at "l" letters and b_i at "r" letters must be 0.

    Returns (all_zero, violations) where each violation is
    (chi letters, index word, non-zero value).
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    from itertools import product

    engine = CumulantEngine(phi)
    d = len(pairs)
    violations: List[Tuple[str, Tuple[int, ...], object]] = []
    for n in range(2, max_n + 1):
        for chi in product("lr", repeat=n):
            chi_str = "".join(chi)
            for idx in product(range(1, d + 1), repeat=n):
                if len(set(idx)) < 2:
                    continue
                word = tuple(
                    pairs[i - 1][0] if h == "l" else pairs[i - 1][1]
                    for i, h in zip(idx, chi)
                )
                value = engine.cumulant(chi_str, word)
                if value != 0:
                    violations.append((chi_str, idx, value))
    return not violations, violations
