"""Operator engine: generators, canonical operators, mixtures, vacuum moments."""

import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrcumulants.deque import ChiWord, DequeScenario, simulate
from lrcumulants.fock import (
    CoefficientTable,
    OperatorExpr,
    PolyScalar,
    VacuumMoments,
    adjoint,
    apply_generator,
    bimixture,
    bimixture_symbol,
    canonical_operator,
    inner_product,
    lemma67_vector,
    moment_via_pchi,
    reverse_bimixture,
    reverse_bimixture_symbol,
    s_op,
    scalar_to_json,
    vacuum_expectation,
    vacuum_vector,
    x_op,
)
from lrcumulants.lukasiewicz import LukPath, enumerate_luk


def sym(kind, *word):
    return PolyScalar.symbol(kind, word)


# -- PolyScalar ----------------------------------------------------------------

SYMBOLS = [("a", (1,)), ("a", (2, 1)), ("b", (1,)), ("b", (1, 2))]


@st.composite
def polys(draw):
    terms = draw(
        st.lists(
            st.tuples(
                st.lists(st.sampled_from(SYMBOLS), max_size=3),
                st.integers(min_value=-5, max_value=5),
            ),
            max_size=4,
        )
    )
    total = PolyScalar.zero()
    for mono, coeff in terms:
        part = PolyScalar.const(coeff)
        for kind, word in mono:
            part = part * PolyScalar.symbol(kind, word)
        total = total + part
    return total


@settings(max_examples=80, deadline=None)
@given(polys(), polys(), polys())
def test_polyscalar_ring_laws(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + PolyScalar.zero() == x
    assert x * PolyScalar.const(1) == x
    assert x - x == PolyScalar.zero()
    assert x - x == 0


def test_polyscalar_number_interop():
    x = sym("a", 1)
    assert 1 + x - 1 == x
    assert 2 * x == x + x
    assert Fraction(1, 2) * (x + x) == x
    assert PolyScalar.const(0) == 0
    assert PolyScalar.const(Fraction(3, 4)) == Fraction(3, 4)
    assert x != 0


def test_polyscalar_rendering_and_json():
    value = sym("b", 3) * sym("a", 1, 2) + PolyScalar.const(Fraction(-3, 4))
    assert str(value) == "-3/4 + a[1,2]*b[3]"
    assert value.to_json() == [
        {"coeff": "-3/4", "monomial": []},
        {"coeff": "1", "monomial": ["a[1,2]", "b[3]"]},
    ]
    assert scalar_to_json(Fraction(1, 3)) == "1/3"


def test_monomials_sorted_by_kind_length_word():
    m = sym("b", 1) * sym("a", 2) * sym("a", 1, 1)
    (mono,) = m.terms
    assert mono == (("a", (2,)), ("a", (1, 1)), ("b", (1,)))


# -- generators -----------------------------------------------------------------


def test_generator_actions():
    assert apply_generator(("L", 2), vacuum_vector()) == {(2,): 1}
    assert apply_generator(("R", 2), vacuum_vector()) == {(2,): 1}
    assert apply_generator(("L*", 1), {(1,): 1}) == {(): 1}
    assert apply_generator(("L*", 1), {(2,): 1}) == {}
    assert apply_generator(("L*", 1), vacuum_vector()) == {}
    assert apply_generator(("R", 4), {(5,): 1}) == {(5, 4): 1}
    assert apply_generator(("R*", 3), {(1, 2, 3): 1}) == {(1, 2): 1}
    with pytest.raises(ValueError):
        apply_generator(("Q", 1), vacuum_vector())


def test_cuntz_relations_on_spanning_words():
    d = 2
    words = [
        w for k in range(0, 7) for w in itertools.product(range(1, d + 1), repeat=k)
    ]
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            for creator, annihilator in (("L", "L*"), ("R", "R*")):
                for w in words:
                    vec = {w: 1}
                    out = apply_generator(
                        (annihilator, i), apply_generator((creator, j), vec)
                    )
                    assert out == (vec if i == j else {})


def test_creator_products_have_zero_vacuum_moment():
    # products of creators followed by annihilators never return to the vacuum
    for m in range(3):
        for n in range(3):
            if m + n == 0:
                continue
            ops = [OperatorExpr.generator("L", 1)] * m + [
                OperatorExpr.generator("L*", 1)
            ] * n
            assert vacuum_expectation(ops) == 0


# -- operator expressions ---------------------------------------------------------


def test_x_op_shapes():
    table = CoefficientTable.symbolic(1, 3)
    assert x_op(0, "l", table).terms == ((1, ()),)
    (term,) = x_op(2, "l", table).terms
    assert term[0] == sym("a", 1, 1)
    assert term[1] == (("L", 1), ("L", 1))
    assert x_op(4, "l", table).terms == ()  # beyond the degree bound


def test_canonical_operator_first_moments():
    table = CoefficientTable.symbolic(2, 3)
    for i in (1, 2):
        assert vacuum_expectation([canonical_operator(i, "l", table)]) == sym("a", i)
        assert vacuum_expectation([canonical_operator(i, "r", table)]) == sym("b", i)
    assert vacuum_expectation([]) == 1


def test_canonical_operator_factors_as_annihilator_times_blocks():
    table = CoefficientTable.random(2, 3, seed=8)
    vectors = [{(): 1}, {(1,): 1, (2, 1): Fraction(1, 2)}, {(1, 2, 2): 1}]
    for i in (1, 2):
        for h in "lr":
            blocks = x_op(0, h, table)
            for p in range(1, table.n_o + 1):
                blocks = blocks + x_op(p, h, table)
            factored = adjoint(s_op(i, h)) * blocks
            direct = canonical_operator(i, h, table)
            for vec in vectors:
                assert factored.apply(vec) == direct.apply(vec)


def test_canonical_operator_with_zero_symbols_annihilates():
    table = CoefficientTable(2, 3, "concrete", {}, {})
    for chi in itertools.product("lr", repeat=3):
        ops = [canonical_operator(1, h, table) for h in chi]
        assert vacuum_expectation(ops) == 0


def test_adjoint_basics():
    L = OperatorExpr.generator("L", 1)
    assert adjoint(L).terms == ((1, (("L*", 1),)),)
    table = CoefficientTable.symbolic(2, 2)
    op = canonical_operator(1, "l", table)
    assert adjoint(adjoint(op)).terms == op.terms


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_adjoint_is_the_inner_product_adjoint(data):
    rng_words = st.lists(
        st.tuples(
            st.lists(st.integers(min_value=1, max_value=2), max_size=3),
            st.integers(min_value=-3, max_value=3),
        ),
        max_size=3,
    )
    table = CoefficientTable.random(2, 2, seed=data.draw(st.integers(0, 5)))
    op = canonical_operator(data.draw(st.integers(1, 2)), data.draw(st.sampled_from("lr")), table)
    x = {tuple(w): Fraction(c) for w, c in data.draw(rng_words) if c}
    y = {tuple(w): Fraction(c) for w, c in data.draw(rng_words) if c}
    assert inner_product(op.apply(x), y) == inner_product(x, adjoint(op).apply(y))


# -- mixtures ---------------------------------------------------------------------


def test_reverse_bimixture_worked_examples():
    assert reverse_bimixture_symbol((1, 2, 4), "rlr") == ("b", (2, 4, 1))
    assert reverse_bimixture_symbol((3, 5), "ll") == ("a", (5, 3))
    assert reverse_bimixture_symbol((7,), "l") == ("a", (7,))
    table = CoefficientTable.symbolic(9, 4)
    assert reverse_bimixture((1, 2, 4), "rlr", table) == sym("b", 2, 4, 1)


def test_bimixture_worked_examples():
    assert bimixture_symbol((1, 2, 3, 4), "lrlr") == ("b", (3, 1, 2, 4))
    assert bimixture_symbol((5,), "r") == ("b", (5,))
    table = CoefficientTable.symbolic(5, 4)
    assert bimixture((1, 2, 3, 4), "lrlr", table) == sym("b", 3, 1, 2, 4)
    with pytest.raises(ValueError):
        bimixture((1, 2), "lrl", table)


def test_bimixture_is_reversed_reverse_bimixture():
    for n in range(1, 6):
        for chi in itertools.product("lr", repeat=n):
            chi_str = "".join(chi)
            for omega in itertools.product((1, 2), repeat=n):
                assert bimixture_symbol(omega, chi_str) == reverse_bimixture_symbol(
                    omega[::-1], chi_str[::-1]
                )


# -- single-track products ---------------------------------------------------------


def test_lemma67_worked_example():
    table = CoefficientTable.symbolic(5, 5)
    vec = lemma67_vector(
        LukPath([2, -1, 1, -1, -1]), ChiWord("rllrl"), (1, 2, 3, 4, 5), table
    )
    assert vec == {(): sym("a", 5, 3) * sym("b", 2, 4, 1)}


def test_lemma67_flat_path_multiplies_singletons():
    table = CoefficientTable.symbolic(2, 4)
    vec = lemma67_vector(LukPath([0, 0, 0]), ChiWord("lrl"), (1, 2, 2), table)
    assert vec == {(): sym("a", 1) * sym("b", 2) * sym("a", 2)}


def test_lemma67_single_batch_all_left():
    table = CoefficientTable.symbolic(2, 4)
    vec = lemma67_vector(LukPath([3, -1, -1, -1]), ChiWord("llll"), (1, 2, 1, 2), table)
    # one batch: the whole word is stripped at the first block, reversed
    assert vec == {(): sym("a", 2, 1, 2, 1)}


def test_lemma67_factors_over_output_partition():
    table = CoefficientTable.symbolic(2, 4)
    for n in range(1, 5):
        for chi_letters in itertools.product("lr", repeat=n):
            chi = ChiWord("".join(chi_letters))
            for path in enumerate_luk(n):
                partition = simulate(DequeScenario(path, chi)).output_partition
                for omega in itertools.product((1, 2), repeat=n):
                    expected = PolyScalar.const(1)
                    for block in partition.blocks:
                        sub_omega = tuple(omega[m - 1] for m in block)
                        sub_chi = "".join(chi.letters[m - 1] for m in block)
                        expected = expected * reverse_bimixture(
                            sub_omega, sub_chi, table
                        )
                    assert lemma67_vector(path, chi, omega, table) == {(): expected}


# -- vacuum moments of canonical words ----------------------------------------------


def test_sequential_moments_match_explicit_operator_route():
    table = CoefficientTable.symbolic(2, 3)
    vm = VacuumMoments(table)
    for n in range(1, 4):
        for chi in itertools.product("lr", repeat=n):
            for omega in itertools.product((1, 2), repeat=n):
                cword = tuple(zip(omega, chi))
                ops = [canonical_operator(i, h, table) for i, h in cword]
                assert vm(cword) == vacuum_expectation(ops)


def test_sequential_moments_match_partition_sums():
    for table in (
        CoefficientTable.symbolic(2, 4),
        CoefficientTable.random(2, 4, seed=3),
    ):
        vm = VacuumMoments(table)
        for n in range(1, 5):
            for chi in itertools.product("lr", repeat=n):
                chi_str = "".join(chi)
                for omega in itertools.product((1, 2), repeat=n):
                    assert vm(tuple(zip(omega, chi))) == moment_via_pchi(
                        omega, chi_str, table
                    )


def test_precompute_fills_the_same_values():
    table = CoefficientTable.random(2, 3, seed=1)
    vm = VacuumMoments(table)
    vm.precompute(3)
    fresh = VacuumMoments(table)
    for cword, value in vm._memo.items():
        assert fresh(cword) == value


# -- coefficient tables ---------------------------------------------------------------


def test_table_json_round_trip(tmp_path):
    table = CoefficientTable.random(2, 3, seed=0)
    obj = table.to_json()
    back = CoefficientTable.from_json_obj(obj)
    assert back.alpha == table.alpha and back.beta == table.beta
    path = tmp_path / "table.json"
    path.write_text(json.dumps(obj))
    again = CoefficientTable.from_file(str(path))
    assert again.alpha == table.alpha

    sym_obj = {"d": 2, "n_o": 4, "mode": "symbolic"}
    sym_table = CoefficientTable.from_json_obj(sym_obj)
    assert sym_table.mode == "symbolic"
    assert sym_table.to_json() == sym_obj


def test_table_validation():
    with pytest.raises(ValueError):
        CoefficientTable(2, 2, "concrete", {(1, 2, 1): 1}, {})  # beyond n_o
    with pytest.raises(ValueError):
        CoefficientTable(2, 2, "concrete", {(3,): 1}, {})  # letter out of range
    with pytest.raises(ValueError):
        CoefficientTable(2, 2, "weird")
    with pytest.raises(ValueError):
        CoefficientTable.symbolic(0, 2)


def test_separated_table_vanishes_off_diagonal():
    table = CoefficientTable.separated_random(2, 3, seed=0)
    assert table.coeff("a", (1, 2)) == 0
    assert table.coeff("a", (1, 1)) != 0
    assert table.coeff("b", (2, 2, 2)) != 0
    assert table.coeff("b", (1, 2, 1)) == 0


def test_with_entry_overrides():
    table = CoefficientTable.separated_random(2, 2, seed=0)
    patched = table.with_entry("a", (1, 2), Fraction(1))
    assert patched.coeff("a", (1, 2)) == 1
    assert table.coeff("a", (1, 2)) == 0
    assert patched.coeff("b", (2, 2)) == table.coeff("b", (2, 2))
