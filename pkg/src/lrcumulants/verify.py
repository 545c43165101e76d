"""Exhaustive verification suites behind the command-line ``verify`` command.

Every suite sweeps a stated range of instances, compares two independently
computed values per instance, and returns a :class:`SuiteResult` whose
checks aggregate instances into readable units (one check per word or per
cell).  Counterexamples are recorded in full so a failure can be replayed
with the ``simulate``/``moment``/``cumulant`` commands.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Dict, List, Optional, Tuple

from .cumulants import CumulantEngine, is_combinatorially_bifree_upto
from .deque import (
    ChiWord,
    DequeScenario,
    chi_opposite,
    combined_standings,
    insertion_standings,
    pchi_by_enumeration,
    pchi_by_sigma,
    sigma_chi,
    simulate,
    tau_u,
)
from .fock import (
    CoefficientTable,
    PolyScalar,
    VacuumMoments,
    bimixture_template,
    lemma67_vector,
    moment_via_pchi,
    reverse_mixture_plan_for_blocks,
)
from .lukasiewicz import enumerate_luk, psi
from .partitions import (
    Permutation,
    act,
    enumerate_noncrossing,
    enumerate_partitions,
    is_noncrossing,
    leq,
    meet,
    one_block,
    opposite,
    singletons,
)


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    ok: bool


@dataclass
class SuiteResult:
    suite: str
    parameters: dict
    checks: List[Check] = field(default_factory=list)
    instances: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        # an empty sweep is a failure: it verified nothing
        return self.instances > 0 and bool(self.checks) and all(c.ok for c in self.checks)

    def add(self, name: str, expected, actual, ok: Optional[bool] = None) -> None:
        self.checks.append(Check(name, expected, actual, ok if ok is not None else expected == actual))


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))


def all_chi(n: int) -> List[ChiWord]:
    return [ChiWord("".join(w)) for w in product("lr", repeat=n)]


# ---------------------------------------------------------------------------
# shared tables and moment caches (concrete tables are pure functions of
# (d, n_o, seed), so suites can share the expensive memoized moments)
# ---------------------------------------------------------------------------

_TABLES: Dict[tuple, CoefficientTable] = {}
_MOMENTS: Dict[int, VacuumMoments] = {}


def shared_table(kind: str, d: int, n_o: int, seed: Optional[int] = None) -> CoefficientTable:
    key = (kind, d, n_o, seed)
    table = _TABLES.get(key)
    if table is None:
        if kind == "symbolic":
            table = CoefficientTable.symbolic(d, n_o)
        elif kind == "random":
            table = CoefficientTable.random(d, n_o, seed)
        elif kind == "separated":
            table = CoefficientTable.separated_random(d, n_o, seed)
        else:
            raise ValueError(f"unknown table kind {kind!r}")
        _TABLES[key] = table
    return table


def shared_moments(table: CoefficientTable) -> VacuumMoments:
    vm = _MOMENTS.get(id(table))
    if vm is None:
        vm = VacuumMoments(table)
        _MOMENTS[id(table)] = vm
    return vm


def _fock_cells(max_n: int, d: int) -> List[Tuple[str, int, int]]:
    """(mode, n, d) cells every operator-model suite sweeps.

    Symbolic cells stay small (full formal expansion); concrete cells with
    seeded random rationals cover the full requested range.
    """
    cells: List[Tuple[str, int, int]] = []
    for n in range(1, min(max_n, 4) + 1):
        cells.append(("symbolic", n, min(d, 2)))
    if max_n >= 5:
        cells.append(("symbolic", 5, 1))
    for dd in range(1, d + 1):
        for n in range(1, max_n + 1):
            cells.append(("random", n, dd))
    return cells


def _cell_table(mode: str, n: int, d: int, max_n: int, seed: int) -> CoefficientTable:
    if mode == "symbolic":
        return shared_table("symbolic", d, n)
    # one table per d covering every length keeps the moment memos shared
    return shared_table("random", d, max_n, seed)


# ---------------------------------------------------------------------------
# combinatorial suites
# ---------------------------------------------------------------------------


def suite_thm49(max_n: int = 6, **_) -> SuiteResult:
    """Scenario-enumeration route and permutation-action route build the
    same partition family, of Catalan size, for every chi."""
    result = SuiteResult("thm49", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for chi in all_chi(n):
            by_enum = pchi_by_enumeration(chi)
            by_sigma = pchi_by_sigma(chi)
            ok = by_enum == by_sigma and len(by_enum) == catalan(n)
            detail = f"{len(by_enum)} partitions via both routes"
            if not ok:
                only_enum = [p.to_json() for p in by_enum if p not in by_sigma]
                only_sigma = [p.to_json() for p in by_sigma if p not in by_enum]
                detail = f"enumeration-only={only_enum} sigma-only={only_sigma}"
            result.add(
                f"n={n} chi={chi}",
                f"{catalan(n)} partitions via both routes",
                detail,
                ok,
            )
            result.instances += 1
    return result


def suite_prop46(max_n: int = 6, **_) -> SuiteResult:
    """Per scenario: the combined-standings partition is non-crossing, its
    last-insertion block is an interval, and the output-time partition maps
    back to the path."""
    result = SuiteResult("prop46", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for chi in all_chi(n):
            failures = []
            count = 0
            for path in enumerate_luk(n):
                count += 1
                trace = simulate(DequeScenario(path, chi))
                rho = combined_standings(path, chi)
                if not is_noncrossing(rho):
                    failures.append(f"rise={list(path.rise)}: crossing {rho.to_json()}")
                data = insertion_standings(path, chi)
                i, v, w = data[-1]
                block = sorted(v + tuple(n + 1 - q for q in w))
                if block != list(range(block[0], block[-1] + 1)):
                    failures.append(f"rise={list(path.rise)}: block {block} not an interval")
                if psi(trace.output_partition) != path:
                    failures.append(f"rise={list(path.rise)}: wrong canonical path")
            result.add(
                f"n={n} chi={chi}",
                f"{count} scenarios, all non-crossing/interval/path-consistent",
                failures or f"{count} scenarios, all non-crossing/interval/path-consistent",
                not failures,
            )
            result.instances += count
    return result


def suite_lemma48(max_n: int = 6, **_) -> SuiteResult:
    """The chi permutation carries the combined-standings partition onto
    the output-time partition, for every scenario."""
    result = SuiteResult("lemma48", {"max_n": max_n})
    for n in range(1, max_n + 1):
        for chi in all_chi(n):
            sigma = sigma_chi(chi)
            failures = []
            count = 0
            for path in enumerate_luk(n):
                count += 1
                image = act(sigma, combined_standings(path, chi))
                out = simulate(DequeScenario(path, chi)).output_partition
                if image != out:
                    failures.append(
                        f"rise={list(path.rise)}: {image.to_json()} != {out.to_json()}"
                    )
            result.add(
                f"n={n} chi={chi}",
                f"{count} scenarios mapped onto their output partitions",
                failures or f"{count} scenarios mapped onto their output partitions",
                not failures,
            )
            result.instances += count
    return result


def suite_prop413(max_n: int = 6, **_) -> SuiteResult:
    """Reversing chi mirrors the family; the reversed-word permutation
    factors through the two-sided reversal; the block-reversal permutation
    stabilizes the non-crossing family."""
    result = SuiteResult("prop413", {"max_n": max_n})
    for n in range(1, max_n + 1):
        nc = set(enumerate_noncrossing(n))
        for u in range(n + 1):
            image = {act(tau_u(n, u), p) for p in nc}
            result.add(
                f"n={n} u={u} reversal stabilizes non-crossing family",
                "stable",
                "stable" if image == nc else sorted(p.to_json() for p in image - nc),
                image == nc,
            )
            result.instances += 1
        rev = Permutation.reversal(n)
        for chi in all_chi(n):
            opp = chi_opposite(chi)
            mirrored = sorted(opposite(p) for p in pchi_by_enumeration(chi))
            ok = mirrored == pchi_by_enumeration(opp)
            result.add(
                f"n={n} chi={chi} mirrored family",
                "families agree",
                "families agree" if ok else "families differ",
                ok,
            )
            u = len(chi.m_ell)
            lhs = sigma_chi(opp)
            rhs = rev.compose(sigma_chi(chi)).compose(tau_u(n, u))
            result.add(
                f"n={n} chi={chi} permutation factorization",
                list(lhs.images),
                list(rhs.images),
            )
            result.instances += 2
    return result


def suite_cor410(max_n: int = 5, **_) -> SuiteResult:
    """Families contain the extremes and every partition one merge away
    from singletons; the permutation action is an order isomorphism; meets
    stay inside the family."""
    result = SuiteResult("cor410", {"max_n": max_n})
    for n in range(1, max_n + 1):
        nc = enumerate_noncrossing(n)
        almost_discrete = [
            p for p in enumerate_partitions(n) if p.block_count() == n - 1
        ]
        for chi in all_chi(n):
            fam = set(pchi_by_enumeration(chi))
            missing = [
                p.to_json()
                for p in [singletons(n), one_block(n), *almost_discrete]
                if p not in fam
            ]
            result.add(
                f"n={n} chi={chi} membership",
                "extremes and near-discrete partitions present",
                missing or "extremes and near-discrete partitions present",
                not missing,
            )
            sigma = sigma_chi(chi)
            order_bad = 0
            for p in nc:
                image_p = act(sigma, p)
                for q in nc:
                    if leq(p, q) != leq(image_p, act(sigma, q)):
                        order_bad += 1
            result.add(
                f"n={n} chi={chi} order isomorphism",
                f"{len(nc) ** 2} comparisons preserved",
                f"{len(nc) ** 2 - order_bad} comparisons preserved",
                order_bad == 0,
            )
            fam_sorted = sorted(fam)
            meet_bad = [
                (p.to_json(), q.to_json())
                for p in fam_sorted
                for q in fam_sorted
                if meet(p, q) not in fam
            ]
            result.add(
                f"n={n} chi={chi} meet closure",
                "closed under block-intersection meets",
                meet_bad[:3] or "closed under block-intersection meets",
                not meet_bad,
            )
            result.instances += 1 + len(nc) ** 2 + len(fam) ** 2
    return result


# ---------------------------------------------------------------------------
# operator-model suites
# ---------------------------------------------------------------------------


def suite_lemma67(max_n: int = 4, d: int = 2, seed: int = 0, **_) -> SuiteResult:
    """Alternating annihilation-block/creator products applied to the
    vacuum give the product of reverse-mixtures over the scenario's
    output-time partition."""
    result = SuiteResult("lemma67", {"max_n": max_n, "d": d, "seed": seed})
    cells = _fock_cells(max_n, d)
    if max_n >= 5 and d >= 2:
        cells.insert(0, ("symbolic", 5, 2))  # single-track products stay cheap
    for mode, n, dd in cells:
        table = _cell_table(mode, n, dd, max_n, seed)
        coeff = table.coeff
        cell_fail = []
        cell_count = 0
        for chi in all_chi(n):
            chi_str = chi.letters
            for path in enumerate_luk(n):
                partition = simulate(DequeScenario(path, chi)).output_partition
                blocks = tuple(
                    (
                        tuple(m - 1 for m in block),
                        "".join(chi_str[m - 1] for m in block),
                    )
                    for block in partition.blocks
                )
                plan = reverse_mixture_plan_for_blocks(blocks)
                for omega in product(range(1, dd + 1), repeat=n):
                    expected: object = None
                    for kind, order in plan:
                        value = coeff(kind, tuple(omega[p] for p in order))
                        expected = value if expected is None else expected * value
                    vec = lemma67_vector(path, chi, omega, table)
                    actual = vec.get((), 0) if len(vec) <= 1 else "not a vacuum multiple"
                    cell_count += 1
                    if actual != expected or set(vec) - {()}:
                        cell_fail.append(
                            f"chi={chi_str} rise={list(path.rise)} omega={list(omega)}: "
                            f"expected {expected}, got {actual}"
                        )
        result.add(
            f"{mode} n={n} d={dd}",
            f"{cell_count} products collapse to the vacuum multiple",
            cell_fail[:3] or f"{cell_count} products collapse to the vacuum multiple",
            not cell_fail,
        )
        result.instances += cell_count
    return result


def suite_prop610(max_n: int = 4, d: int = 2, seed: int = 0, **_) -> SuiteResult:
    """Sequentially computed vacuum moments of canonical-operator words
    equal the partition-family mixture sums."""
    result = SuiteResult("prop610", {"max_n": max_n, "d": d, "seed": seed})
    for mode, n, dd in _fock_cells(max_n, d):
        table = _cell_table(mode, n, dd, max_n, seed)
        vm = shared_moments(table)
        if mode == "random":
            vm.precompute(n)
        cell_fail = []
        cell_count = 0
        for chi in all_chi(n):
            chi_str = chi.letters
            for omega in product(range(1, dd + 1), repeat=n):
                lhs = vm(tuple(zip(omega, chi_str)))
                rhs = moment_via_pchi(omega, chi_str, table)
                cell_count += 1
                if lhs != rhs:
                    cell_fail.append(
                        f"chi={chi_str} omega={list(omega)}: engine {lhs} != family sum {rhs}"
                    )
        result.add(
            f"{mode} n={n} d={dd}",
            f"{cell_count} moments agree across routes",
            cell_fail[:3] or f"{cell_count} moments agree across routes",
            not cell_fail,
        )
        result.instances += cell_count
    return result


def suite_thm65(max_n: int = 4, d: int = 2, seed: int = 0, **_) -> SuiteResult:
    """Every chi-cumulant of a canonical-operator word collapses to the
    single mixture coefficient of its bi-word."""
    result = SuiteResult("thm65", {"max_n": max_n, "d": d, "seed": seed})
    engines: Dict[int, CumulantEngine] = {}
    for mode, n, dd in _fock_cells(max_n, d):
        table = _cell_table(mode, n, dd, max_n, seed)
        vm = shared_moments(table)
        if mode == "random":
            vm.precompute(n)
        engine = engines.setdefault(id(table), CumulantEngine(vm))
        cell_fail = []
        cell_count = 0
        for chi in all_chi(n):
            chi_str = chi.letters
            kind, order = bimixture_template(chi_str)
            for omega in product(range(1, dd + 1), repeat=n):
                kappa = engine.cumulant(chi_str, tuple(zip(omega, chi_str)))
                expected = table.coeff(kind, tuple(omega[p] for p in order))
                cell_count += 1
                if kappa != expected:
                    cell_fail.append(
                        f"chi={chi_str} omega={list(omega)}: cumulant {kappa} != mixture {expected}"
                    )
        result.add(
            f"{mode} n={n} d={dd}",
            f"{cell_count} cumulants equal their mixture coefficient",
            cell_fail[:3] or f"{cell_count} cumulants equal their mixture coefficient",
            not cell_fail,
        )
        result.instances += cell_count
    return result


# ---------------------------------------------------------------------------
# golden length-4 identities
# ---------------------------------------------------------------------------


def interleaved_moment_terms(i1: int, i2: int, i3: int, i4: int) -> PolyScalar:
    """Golden 14-term expansion of the vacuum moment of the word
    (left i1)(right i2)(left i3)(right i4), kept as a fixed oracle."""

    def a(*w):
        return PolyScalar.symbol("a", w)

    def b(*w):
        return PolyScalar.symbol("b", w)

    return (
        b(i3, i1, i2, i4)
        + a(i1) * b(i3, i2, i4)
        + b(i2) * b(i3, i1, i4)
        + a(i3) * b(i1, i2, i4)
        + a(i2, i1, i3) * b(i4)
        + b(i1, i2) * b(i3, i4)
        + a(i1, i3) * b(i2, i4)
        + b(i1, i2) * a(i3) * b(i4)
        + a(i1, i3) * b(i2) * b(i4)
        + b(i1, i4) * b(i2) * a(i3)
        + a(i1) * a(i2, i3) * b(i4)
        + a(i1) * b(i2, i4) * a(i3)
        + a(i1) * b(i2) * b(i3, i4)
        + a(i1) * b(i2) * a(i3) * b(i4)
    )


def interleaved_free_cumulant_terms(i1: int, i2: int, i3: int, i4: int) -> PolyScalar:
    """Golden 3-term free cumulant of the same word."""

    def a(*w):
        return PolyScalar.symbol("a", w)

    def b(*w):
        return PolyScalar.symbol("b", w)

    return b(i3, i1, i2, i4) + a(i1, i3) * b(i2, i4) - a(i2, i3) * b(i1, i4)


def suite_eq12x(**_) -> SuiteResult:
    """The symbolic vacuum moment of (left)(right)(left)(right) words at
    two indices matches the golden 14-term sum, by both routes."""
    result = SuiteResult("eq12x", {})
    table = shared_table("symbolic", 2, 4)
    vm = shared_moments(table)
    for omega in product((1, 2), repeat=4):
        expected = interleaved_moment_terms(*omega)
        cword = tuple(zip(omega, "lrlr"))
        engine_value = vm(cword)
        family_value = moment_via_pchi(omega, "lrlr", table)
        ok = engine_value == expected == family_value
        result.add(
            f"omega={list(omega)}",
            str(expected),
            str(engine_value) if engine_value == family_value else
            f"engine={engine_value} family={family_value}",
            ok,
        )
        result.instances += 1
    return result


def suite_eq12y(**_) -> SuiteResult:
    """The length-4 free cumulant of the interleaved word matches the
    golden 3-term sum."""
    result = SuiteResult("eq12y", {})
    table = shared_table("symbolic", 2, 4)
    engine = CumulantEngine(shared_moments(table))
    for omega in product((1, 2), repeat=4):
        expected = interleaved_free_cumulant_terms(*omega)
        actual = engine.cumulant("rrrr", tuple(zip(omega, "lrlr")))
        result.add(f"omega={list(omega)}", str(expected), str(actual))
        result.instances += 1
    return result


def suite_bifree(max_n: int = 4, d: int = 2, seed: int = 0, **_) -> SuiteResult:
    """With per-index separated symbols every mixed cumulant vanishes;
    injecting one mixed coefficient produces a pinpointed violation."""
    result = SuiteResult("bifree", {"max_n": max_n, "d": d, "seed": seed})
    table = shared_table("separated", d, max_n, seed)
    pairs = [((i, "l"), (i, "r")) for i in range(1, d + 1)]
    ok, violations = is_combinatorially_bifree_upto(pairs, shared_moments(table), max_n)
    checked = sum(2 ** n * (d ** n - d) for n in range(2, max_n + 1))
    result.add(
        "separated symbols",
        "all mixed cumulants vanish",
        "all mixed cumulants vanish" if ok else [
            f"chi={chi} omega={list(idx)} value={value}" for chi, idx, value in violations[:3]
        ],
        ok,
    )
    result.instances += checked

    patched = table.with_entry("a", (1, 2), Fraction(1))
    ok2, violations2 = is_combinatorially_bifree_upto(pairs, VacuumMoments(patched), 2)
    hits = {(chi, idx): value for chi, idx, value in violations2}
    witness = hits.get(("ll", (1, 2)))
    result.add(
        "injected mixed coefficient",
        "violation at chi=ll omega=[1, 2] value=1",
        f"violation at chi=ll omega=[1, 2] value={witness}" if not ok2 else "no violation",
        (not ok2) and witness == 1,
    )
    result.instances += 4 * (d ** 2 - d)
    return result


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "thm49": suite_thm49,
    "prop46": suite_prop46,
    "lemma48": suite_lemma48,
    "prop413": suite_prop413,
    "cor410": suite_cor410,
    "lemma67": suite_lemma67,
    "prop610": suite_prop610,
    "thm65": suite_thm65,
    "eq12x": suite_eq12x,
    "eq12y": suite_eq12y,
    "bifree": suite_bifree,
}

_DEFAULTS: Dict[str, dict] = {
    "thm49": {"max_n": 6},
    "prop46": {"max_n": 6},
    "lemma48": {"max_n": 6},
    "prop413": {"max_n": 6},
    "cor410": {"max_n": 5},
    "lemma67": {"max_n": 4, "d": 2, "seed": 0},
    "prop610": {"max_n": 4, "d": 2, "seed": 0},
    "thm65": {"max_n": 4, "d": 2, "seed": 0},
    "eq12x": {},
    "eq12y": {},
    "bifree": {"max_n": 4, "d": 2, "seed": 0},
}


def run_suite(
    name: str,
    max_n: Optional[int] = None,
    d: Optional[int] = None,
    seed: Optional[int] = None,
) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    params = dict(_DEFAULTS[name])
    for key, value in (("max_n", max_n), ("d", d), ("seed", seed)):
        if value is not None and key in params:
            params[key] = value
    start = time.perf_counter()
    result = SUITES[name](**params)
    result.elapsed = time.perf_counter() - start
    return result
