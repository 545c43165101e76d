"""Exact symbolic engine for canonical operators on the full Fock space over C^d.

Basis words are tuples over {1..d} (the empty tuple is the vacuum).
Vectors are sparse dicts word -> scalar, where a scalar is either an
exact rational (``fractions.Fraction`` / int) or a :class:`PolyScalar`,
a polynomial over the rationals in formal coefficient symbols a[...]
and b[...].  All scalar rings in use are fixed by complex conjugation,
so adjoints never conjugate anything.

The canonical operator for index i on side h is "annihilate one letter
at side h" composed after "create at side h with every coefficient of
the side's symbol polynomial".  Its vacuum moments are the object of
study; :class:`VacuumMoments` evaluates them by sequentially applying
the operators to the vacuum vector.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .deque import ChiWord, restriction_data

Word = Tuple[int, ...]
Symbol = Tuple[str, Word]  # ("a" | "b", index word)
Monomial = Tuple[Symbol, ...]  # sorted multiset of symbols

ALPHA = "a"
BETA = "b"

VACUUM: Word = ()


def _symbol_key(sym: Symbol):
    kind, word = sym
    return (kind, len(word), word)


def symbol_str(sym: Symbol) -> str:
    kind, word = sym
    return f"{kind}[{','.join(map(str, word))}]"


def _monomial_key(mono: Monomial):
    return (len(mono), tuple(_symbol_key(s) for s in mono))


class PolyScalar:
    """Sparse exact polynomial in coefficient symbols, over the rationals.

    Monomials are multisets of symbols, stored as tuples sorted by
    (kind, word length, word); zero coefficients are never stored.
    Supports +, -, * with other PolyScalar values, ints and Fractions,
    and equality against the same.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Fraction]] = None):
        object.__setattr__(self, "terms", dict(terms) if terms else {})

    def __setattr__(self, name, value):
        raise AttributeError("PolyScalar is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "PolyScalar":
        return cls()

    @classmethod
    def const(cls, value) -> "PolyScalar":
        value = Fraction(value)
        return cls({(): value} if value else None)

    @classmethod
    def symbol(cls, kind: str, word: Iterable[int]) -> "PolyScalar":
        word = tuple(word)
        if kind not in (ALPHA, BETA) or not word:
            raise ValueError(f"bad symbol ({kind!r}, {word!r})")
        return cls({((kind, word),): Fraction(1)})

    @staticmethod
    def _coerce(value) -> "PolyScalar":
        if isinstance(value, PolyScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return PolyScalar.const(value)
        return NotImplemented  # type: ignore[return-value]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return PolyScalar(terms)

    __radd__ = __add__

    def __neg__(self):
        return PolyScalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return PolyScalar()
            return PolyScalar({m: c * other for m, c in self.terms.items()})
        if not isinstance(other, PolyScalar):
            return NotImplemented
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2, key=_symbol_key))
                s = terms.get(mono, 0) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    del terms[mono]
        return PolyScalar(terms)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, PolyScalar):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- presentation ------------------------------------------------------

    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _monomial_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = "*".join(symbol_str(s) for s in mono)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append(f"-{factors}")
            else:
                parts.append(f"{c}*{factors}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"PolyScalar<{self}>"

    def to_json(self) -> List[dict]:
        return [
            {"coeff": str(c), "monomial": [symbol_str(s) for s in mono]}
            for mono, c in self.sorted_terms()
        ]


def scalar_to_json(value):
    """JSON form of a scalar: string for rationals, term list for polynomials."""
    if isinstance(value, PolyScalar):
        return value.to_json()
    return str(Fraction(value))


# ---------------------------------------------------------------------------
# Coefficient tables
# ---------------------------------------------------------------------------


class CoefficientTable:
    """The coefficient families of the two symbol polynomials.

    ``kind`` "a" indexes the left side, "b" the right side.  In symbolic
    mode every coefficient of word length <= n_o is an independent formal
    symbol; in concrete mode the coefficients are stored rationals
    (missing entries are zero) and they vanish beyond length n_o by
    construction.
    """

    __slots__ = ("d", "n_o", "mode", "alpha", "beta", "_creator_cache")

    def __init__(
        self,
        d: int,
        n_o: int,
        mode: str = "symbolic",
        alpha: Optional[Mapping[Word, Fraction]] = None,
        beta: Optional[Mapping[Word, Fraction]] = None,
    ):
        if d < 1 or n_o < 1:
            raise ValueError("d and n_o must be positive")
        if mode not in ("symbolic", "concrete"):
            raise ValueError(f"unknown table mode {mode!r}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "n_o", n_o)
        object.__setattr__(self, "mode", mode)
        for name, table in (("alpha", alpha), ("beta", beta)):
            if mode == "symbolic":
                if table is not None:
                    raise ValueError("symbolic tables carry no stored values")
                object.__setattr__(self, name, None)
            else:
                cleaned: Dict[Word, Fraction] = {}
                for word, value in (table or {}).items():
                    word = tuple(word)
                    if not word or len(word) > n_o:
                        raise ValueError(
                            f"{name} entry {word} outside word lengths 1..{n_o}"
                        )
                    if any(not 1 <= i <= d for i in word):
                        raise ValueError(f"{name} entry {word} has letters outside 1..{d}")
                    value = Fraction(value)
                    if value:
                        cleaned[word] = value
                object.__setattr__(self, name, cleaned)
        object.__setattr__(self, "_creator_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientTable is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def symbolic(cls, d: int, n_o: int) -> "CoefficientTable":
        return cls(d, n_o, "symbolic")

    @classmethod
    def random(cls, d: int, n_o: int, seed: int) -> "CoefficientTable":
        """Every coefficient of length <= n_o drawn from small rationals."""
        rng = random.Random(seed)

        def draw() -> Fraction:
            num = rng.randint(-9, 9)
            return Fraction(num if num else 1, rng.randint(1, 4))

        alpha = {}
        beta = {}
        for p in range(1, n_o + 1):
            for word in product(range(1, d + 1), repeat=p):
                alpha[word] = draw()
                beta[word] = draw()
        return cls(d, n_o, "concrete", alpha, beta)

    @classmethod
    def separated_random(cls, d: int, n_o: int, seed: int) -> "CoefficientTable":
        """Random table whose only non-zero coefficients sit on constant words.

        This is the shape produced by a sum of single-variable symbol
        polynomials, one per index.
        """
        rng = random.Random(seed)

        def draw() -> Fraction:
            num = rng.randint(1, 9) * rng.choice((1, -1))
            return Fraction(num, rng.randint(1, 4))

        alpha = {}
        beta = {}
        for p in range(1, n_o + 1):
            for i in range(1, d + 1):
                word = (i,) * p
                alpha[word] = draw()
                beta[word] = draw()
        return cls(d, n_o, "concrete", alpha, beta)

    def with_entry(self, kind: str, word: Iterable[int], value) -> "CoefficientTable":
        """A copy of a concrete table with one coefficient replaced."""
        if self.mode != "concrete":
            raise ValueError("with_entry only applies to concrete tables")
        alpha = dict(self.alpha)
        beta = dict(self.beta)
        target = alpha if kind == ALPHA else beta
        word = tuple(word)
        value = Fraction(value)
        if value:
            target[word] = value
        else:
            target.pop(word, None)
        return CoefficientTable(self.d, self.n_o, "concrete", alpha, beta)

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        obj = {"d": self.d, "n_o": self.n_o, "mode": self.mode}
        if self.mode == "concrete":
            for name, table in (("alpha", self.alpha), ("beta", self.beta)):
                obj[name] = {
                    ",".join(map(str, word)): str(value)
                    for word, value in sorted(table.items(), key=lambda kv: (len(kv[0]), kv[0]))
                }
        return obj

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "CoefficientTable":
        d = obj["d"]
        n_o = obj["n_o"]
        mode = obj.get("mode")
        if mode is None:
            mode = "concrete" if ("alpha" in obj or "beta" in obj) else "symbolic"
        if mode == "symbolic":
            return cls.symbolic(d, n_o)

        def parse(table: Mapping[str, str]) -> Dict[Word, Fraction]:
            out = {}
            for key, value in table.items():
                word = tuple(int(part) for part in key.split(","))
                out[word] = Fraction(value)
            return out

        return cls(d, n_o, "concrete", parse(obj.get("alpha", {})), parse(obj.get("beta", {})))

    @classmethod
    def from_file(cls, path: str) -> "CoefficientTable":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_json_obj(json.load(handle))

    # -- coefficient access --------------------------------------------------

    def coeff(self, kind: str, word: Word):
        """The coefficient for (kind, word): a symbol, a rational, or 0."""
        if len(word) > self.n_o:
            return 0
        if self.mode == "symbolic":
            return PolyScalar.symbol(kind, word)
        table = self.alpha if kind == ALPHA else self.beta
        return table.get(word, 0)

    def creator_entries(self, kind: str, i: int):
        """Used when applying a canonical operator for index i.

        Entry list indexed by m = p - 1 (0 .. n_o - 1): the non-zero
        coefficients of words of length p ending in i, as triples
        (word prefix m, reversed prefix, coefficient value).
        """
        key = (kind, i)
        cached = self._creator_cache.get(key)
        if cached is not None:
            return cached
        entries: List[List[Tuple[Word, Word, object]]] = []
        if self.mode == "symbolic":
            for pm1 in range(self.n_o):
                level = []
                for m in product(range(1, self.d + 1), repeat=pm1):
                    level.append((m, m[::-1], PolyScalar.symbol(kind, m + (i,))))
                entries.append(level)
        else:
            table = self.alpha if kind == ALPHA else self.beta
            by_len: Dict[int, List[Tuple[Word, Word, object]]] = {}
            for word, value in table.items():
                if word[-1] == i:
                    m = word[:-1]
                    by_len.setdefault(len(m), []).append((m, m[::-1], value))
            entries = [sorted(by_len.get(pm1, []), key=lambda e: e[0]) for pm1 in range(self.n_o)]
        self._creator_cache[key] = entries
        return entries


# ---------------------------------------------------------------------------
# Vectors and elementary generators
# ---------------------------------------------------------------------------

FockVector = Dict[Word, object]


def vacuum_vector() -> FockVector:
    return {VACUUM: 1}


def apply_generator(gen: Tuple[str, int], vec: FockVector) -> FockVector:
    """Apply one creation/annihilation generator to a vector.

    ``gen`` is (op, i) with op one of "L", "R", "L*", "R*": create at the
    head, create at the tail, annihilate at the head, annihilate at the
    tail.  Annihilation kills words whose end letter differs from i, and
    kills the vacuum.
    """
    op, i = gen
    out: FockVector = {}
    if op == "L":
        for word, c in vec.items():
            out[(i,) + word] = c
    elif op == "R":
        for word, c in vec.items():
            out[word + (i,)] = c
    elif op == "L*":
        for word, c in vec.items():
            if word and word[0] == i:
                key = word[1:]
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
    elif op == "R*":
        for word, c in vec.items():
            if word and word[-1] == i:
                key = word[:-1]
                prev = out.get(key)
                out[key] = c if prev is None else prev + c
    else:
        raise ValueError(f"unknown generator {gen!r}")
    return out


_STARS = {"L": "L*", "L*": "L", "R": "R*", "R*": "R"}


def add_vectors(v: FockVector, w: FockVector) -> FockVector:
    out = dict(v)
    for word, c in w.items():
        s = out.get(word, 0) + c
        if s:
            out[word] = s
        else:
            out.pop(word, None)
    return out


def inner_product(v: FockVector, w: FockVector):
    """Sum over common words of the coefficient products (real scalars,
    so no conjugation)."""
    total = 0
    for word, c in v.items():
        other = w.get(word)
        if other is not None:
            total = total + c * other
    return total


class OperatorExpr:
    """A finite formal sum of scalar multiples of generator products.

    Each term is (coefficient, generators) with the generators listed in
    product order; applying a term to a vector runs the generators
    right-to-left.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Tuple[object, Tuple[Tuple[str, int], ...]]] = ()):
        object.__setattr__(self, "terms", tuple(terms))

    def __setattr__(self, name, value):
        raise AttributeError("OperatorExpr is immutable")

    @classmethod
    def identity(cls) -> "OperatorExpr":
        return cls(((1, ()),))

    @classmethod
    def zero(cls) -> "OperatorExpr":
        return cls()

    @classmethod
    def generator(cls, op: str, i: int) -> "OperatorExpr":
        return cls(((1, ((op, i),)),))

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return OperatorExpr(self.terms + other.terms)

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return OperatorExpr(
                (c1 * c2, g1 + g2)
                for c1, g1 in self.terms
                for c2, g2 in other.terms
            )
        return OperatorExpr((other * c, g) for c, g in self.terms)

    def __rmul__(self, other):
        return OperatorExpr((other * c, g) for c, g in self.terms)

    def adjoint(self) -> "OperatorExpr":
        """Reverse every product and star every generator.  Coefficients
        are fixed (conjugation is the identity on the rings in use)."""
        return OperatorExpr(
            (c, tuple((_STARS[op], i) for op, i in reversed(gens)))
            for c, gens in self.terms
        )

    def apply(self, vec: FockVector) -> FockVector:
        out: FockVector = {}
        for c, gens in self.terms:
            cur = vec
            for gen in reversed(gens):
                cur = apply_generator(gen, cur)
                if not cur:
                    break
            for word, value in cur.items():
                scaled = value if c == 1 else c * value
                prev = out.get(word)
                s = scaled if prev is None else prev + scaled
                if s:
                    out[word] = s
                else:
                    out.pop(word, None)
        return out


def adjoint(op: OperatorExpr) -> OperatorExpr:
    return op.adjoint()


def x_op(p: int, h: str, table: CoefficientTable) -> OperatorExpr:
    """The degree-p creation block on side h.

    p = 0 is the identity; for p >= 1 it is the sum over words w of
    length p of coeff(w) times the creators for w applied innermost
    letter first.  Beyond the table's degree bound the block is zero.
    """
    if p == 0:
        return OperatorExpr.identity()
    if p > table.n_o:
        return OperatorExpr.zero()
    kind, create = (ALPHA, "L") if h == "l" else (BETA, "R")
    terms = []
    for word in product(range(1, table.d + 1), repeat=p):
        c = table.coeff(kind, word)
        if isinstance(c, (int, Fraction)) and not c:
            continue
        gens = tuple((create, letter) for letter in reversed(word))
        terms.append((c, gens))
    return OperatorExpr(terms)


def s_op(i: int, h: str) -> OperatorExpr:
    """The creator for basis index i on side h."""
    return OperatorExpr.generator("L" if h == "l" else "R", i)


def canonical_operator(i: int, h: str, table: CoefficientTable) -> OperatorExpr:
    """Annihilate one letter at side h after creating with every block.

    For h = "l" this is the left canonical operator of index i, for
    h = "r" the right one.
    """
    star = "L*" if h == "l" else "R*"
    terms = [(1, ((star, i),))]
    for p in range(1, table.n_o + 1):
        for c, gens in x_op(p, h, table).terms:
            terms.append((c, ((star, i),) + gens))
    return OperatorExpr(terms)


def vacuum_expectation(ops: Sequence[OperatorExpr]):
    """Coefficient of the vacuum in (ops[0] ... ops[-1]) applied to the
    vacuum, the rightmost operator acting first.  Empty product gives 1."""
    vec = vacuum_vector()
    for op in reversed(ops):
        vec = op.apply(vec)
        if not vec:
            return 0
    return vec.get(VACUUM, 0)


# ---------------------------------------------------------------------------
# Bi-mixtures
# ---------------------------------------------------------------------------


def reverse_bimixture_symbol(omega: Word, chi: "ChiWord | str") -> Symbol:
    """Symbol assembled from an index word by the first letter of chi.

    First letter "l": kind "a", word = indices at r-positions ascending
    then at l-positions descending.  First letter "r": kind "b", word =
    indices at l-positions ascending then at r-positions descending.
    """
    chi = chi if isinstance(chi, ChiWord) else ChiWord(chi)
    if len(omega) != chi.n:
        raise ValueError("index word and chi word lengths differ")
    if chi.letters[0] == "l":
        word = tuple(omega[m - 1] for m in chi.m_r) + tuple(
            omega[m - 1] for m in reversed(chi.m_ell)
        )
        return (ALPHA, word)
    word = tuple(omega[m - 1] for m in chi.m_ell) + tuple(
        omega[m - 1] for m in reversed(chi.m_r)
    )
    return (BETA, word)


def bimixture_symbol(omega: Word, chi: "ChiWord | str") -> Symbol:
    """Symbol assembled from an index word by the last letter of chi.

    Last letter "l": kind "a", word = indices at r-positions descending
    then at l-positions ascending.  Last letter "r": kind "b", word =
    indices at l-positions descending then at r-positions ascending.
    Equals the reverse-mixture of the reversed bi-word.
    """
    chi = chi if isinstance(chi, ChiWord) else ChiWord(chi)
    if len(omega) != chi.n:
        raise ValueError("index word and chi word lengths differ")
    if chi.letters[-1] == "l":
        word = tuple(omega[m - 1] for m in reversed(chi.m_r)) + tuple(
            omega[m - 1] for m in chi.m_ell
        )
        return (ALPHA, word)
    word = tuple(omega[m - 1] for m in reversed(chi.m_ell)) + tuple(
        omega[m - 1] for m in chi.m_r
    )
    return (BETA, word)


def reverse_bimixture(omega: Word, chi: "ChiWord | str", table: CoefficientTable):
    kind, word = reverse_bimixture_symbol(tuple(omega), chi)
    return table.coeff(kind, word)


def bimixture(omega: Word, chi: "ChiWord | str", table: CoefficientTable):
    kind, word = bimixture_symbol(tuple(omega), chi)
    return table.coeff(kind, word)


# ---------------------------------------------------------------------------
# Single-track products: annihilation blocks alternating with creators
# ---------------------------------------------------------------------------


def lemma67_vector(
    path, chi: ChiWord, omega: Word, table: CoefficientTable
) -> FockVector:
    """Apply  X*_{p_1;h_1} S_{i_1;h_1} ... X*_{p_n;h_n} S_{i_n;h_n}  to the
    vacuum, where (p_m - 1) is the path's rise-vector.

    Each step keeps the state a scalar multiple of a single basis word:
    the creator appends/prepends a letter, and the adjoint block strips a
    fixed number of letters from the matching side while multiplying by
    the stripped word's coefficient.  The result is always a multiple of
    the vacuum; the multiple factors over the scenario's output-time
    partition as a product of reverse-mixtures.
    """
    n = chi.n
    if len(omega) != n or path.n != n:
        raise ValueError("path, chi and omega must have equal lengths")
    coeff: object = 1
    word: Word = ()
    for m in range(n, 0, -1):
        h = chi.letters[m - 1]
        i = omega[m - 1]
        word = ((i,) + word) if h == "l" else (word + (i,))
        p = path.rise[m - 1] + 1
        if p:
            if p > len(word):
                return {}
            if h == "l":
                value = table.coeff(ALPHA, word[:p][::-1])
                word = word[p:]
            else:
                value = table.coeff(BETA, word[-p:])
                word = word[:-p]
            if isinstance(value, (int, Fraction)) and not value:
                return {}
            coeff = coeff * value if coeff != 1 else value
    return {word: coeff}


# ---------------------------------------------------------------------------
# Vacuum moments of canonical-operator words
# ---------------------------------------------------------------------------

CWord = Tuple[Tuple[int, str], ...]  # ((index, side), ...)


class VacuumMoments:
    """Memoized vacuum moments of products of canonical operators.

    Callable on a word of (index, side) pairs.  Moments are evaluated by
    applying the operators to the vacuum right-to-left; since every
    canonical operator lowers word length by at most one, intermediate
    words longer than the number of operators still to come are dropped.
    """

    def __init__(self, table: CoefficientTable):
        self.table = table
        self._memo: Dict[CWord, object] = {}
        self._precomputed = 0

    def __call__(self, cword: CWord):
        value = self._memo.get(cword)
        if value is None:
            vec = vacuum_vector()
            n = len(cword)
            for j in range(n - 1, -1, -1):
                i, h = cword[j]
                vec = self._apply(vec, i, h, j)
                if not vec:
                    break
            value = vec.get(VACUUM, 0)
            self._memo[cword] = value
        return value

    def _apply(self, vec: FockVector, i: int, h: str, max_len: int) -> FockVector:
        """One canonical operator; keep only words of length <= max_len."""
        entries = self.table.creator_entries(ALPHA if h == "l" else BETA, i)
        left = h == "l"
        out: FockVector = {}
        for z, c in vec.items():
            length = len(z)
            if length:  # annihilation-only branch
                if left:
                    if z[0] == i:
                        key = z[1:]
                        prev = out.get(key)
                        out[key] = c if prev is None else prev + c
                elif z[-1] == i:
                    key = z[:-1]
                    prev = out.get(key)
                    out[key] = c if prev is None else prev + c
            top = min(len(entries), max_len - length + 1)
            for pm1 in range(top):
                for m, mrev, value in entries[pm1]:
                    key = mrev + z if left else z + m
                    scaled = value * c
                    prev = out.get(key)
                    out[key] = scaled if prev is None else prev + scaled
        return out

    def precompute(self, n: int) -> None:
        """Fill the memo with every moment of length <= n over all sides.

        Runs one depth-first sweep per side word, so states shared by all
        index words with a common tail are computed once.
        """
        d = self.table.d
        memo = self._memo
        for k in range(self._precomputed + 1, n + 1):
            for chi in product("lr", repeat=k):
                self._sweep(k, chi, d, memo)
        self._precomputed = max(self._precomputed, n)

    def _sweep(self, k: int, chi: Tuple[str, ...], d: int, memo) -> None:
        def descend(j: int, vec: FockVector, tail: CWord) -> None:
            if j == k:
                memo[tail] = vec.get(VACUUM, 0)
                return
            h = chi[k - 1 - j]
            remaining = k - 1 - j
            for i in range(1, d + 1):
                nxt = self._apply(vec, i, h, remaining)
                descend(j + 1, nxt, ((i, h),) + tail)

        descend(0, vacuum_vector(), ())


def operator_word_functional(operators: Mapping[object, OperatorExpr]):
    """Vacuum-moment functional over words of named operators.

    ``operators`` maps opaque element ids to operator expressions; the
    returned callable evaluates the vacuum moment of the corresponding
    product, memoized per word.  General but unpruned; meant for modest
    word lengths.
    """
    memo: Dict[Tuple, object] = {}

    def phi(word: Tuple) -> object:
        value = memo.get(word)
        if value is None:
            value = vacuum_expectation([operators[x] for x in word])
            memo[word] = value
        return value

    return phi


def moment_via_pchi(omega: Word, chi: "ChiWord | str", table: CoefficientTable):
    """Vacuum moment computed as the partition-family sum.

    Sum over the scenario family of chi; each partition contributes the
    product of the mixtures of the restricted bi-words of its blocks.
    """
    chi_str = _letters(chi)
    omega = tuple(omega)
    if len(omega) != len(chi_str):
        raise ValueError("index word and chi word lengths differ")
    coeff = table.coeff
    total = 0
    for pblocks in mixture_plan(chi_str):
        prod: object = None
        for kind, order in pblocks:
            value = coeff(kind, tuple(omega[p] for p in order))
            if isinstance(value, (int, Fraction)) and not value:
                prod = 0
                break
            prod = value if prod is None else prod * value
        if prod:
            total = total + prod
    return total


def _letters(chi: "ChiWord | str") -> str:
    return chi.letters if isinstance(chi, ChiWord) else ChiWord(chi).letters


@lru_cache(maxsize=None)
def bimixture_template(chi_str: str) -> Tuple[str, Tuple[int, ...]]:
    """(kind, 0-based position order) such that the mixture word for any
    omega is omega picked at those positions in that order."""
    n = len(chi_str)
    kind, word = bimixture_symbol(tuple(range(n)), chi_str)
    return kind, word


@lru_cache(maxsize=None)
def reverse_bimixture_template(chi_str: str) -> Tuple[str, Tuple[int, ...]]:
    """Like :func:`bimixture_template`, for the reverse mixture."""
    n = len(chi_str)
    kind, word = reverse_bimixture_symbol(tuple(range(n)), chi_str)
    return kind, word


@lru_cache(maxsize=None)
def mixture_plan(chi_str: str):
    """Per partition of the family of chi: (kind, absolute position order)
    for every block, precomputed so a partition-family moment sum is a
    chain of table lookups."""
    plan = []
    for blocks in restriction_data(chi_str):
        pblocks = []
        for positions, sub in blocks:
            kind, order = bimixture_template(sub)
            pblocks.append((kind, tuple(positions[j] for j in order)))
        plan.append(tuple(pblocks))
    return tuple(plan)


@lru_cache(maxsize=None)
def reverse_mixture_plan_for_blocks(blocks_and_sub: Tuple[Tuple[Word, str], ...]):
    """Reverse-mixture lookup plan for a fixed block decomposition
    ((absolute 0-based positions, restricted chi), ...)."""
    plan = []
    for positions, sub in blocks_and_sub:
        kind, order = reverse_bimixture_template(sub)
        plan.append((kind, tuple(positions[j] for j in order)))
    return tuple(plan)
