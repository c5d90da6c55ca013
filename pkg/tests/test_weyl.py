"""Tests for signed permutations and the classical root data."""

import random

import pytest

from patternmap.base.errors import DatumMismatchError, InputError, NotARootError, UnsupportedTypeError
from patternmap.base.symbolic import LinearForm
from patternmap.weyl import WeylElem, datum_for_group, inverse, make_root_datum, multiply, parse_group


def _w(text, n=None):
    return WeylElem.parse(text, n)


def _make_bruhat_closure(datum):
    """Upper sets of Bruhat order, built as the transitive closure of w < w·t with ℓ going up by one."""
    covers = {
        v: [v * t for t in datum.reflections.values() if datum.length(v * t) == datum.length(v) + 1]
        for v in datum.elements()
    }
    above = {}
    for v in reversed(datum.elements()):
        reach = {v}
        for w in covers[v]:
            reach |= above[w]
        above[v] = reach
    return above


class TestWeylElem:
    def test_parse_forms_agree(self):
        expected = WeylElem((3, -1, 4, 2))
        assert _w("3,-1,4,2") == expected
        assert _w("3 -1 4 2") == expected
        assert _w("31b42") == expected
        assert _w("3,1b,4,2") == expected
        assert _w("21b3") == WeylElem((2, -1, 3))
        assert _w("2 1 3") == WeylElem((2, 1, 3))

    def test_str(self):
        assert str(_w("2143")) == "2143"
        assert str(_w("3,-1,4,2")) == "3,-1,4,2"

    @pytest.mark.parametrize("text", ["1123", "125", "1,x,3", ""])
    def test_bad_windows(self, text):
        with pytest.raises(InputError):
            _w(text)

    def test_wrong_length(self):
        with pytest.raises(InputError, match="expected 4"):
            _w("213", 4)

    def test_composition_convention(self):
        u, v = _w("2134"), _w("1324")
        # (u·v)(i) = u(v(i))
        assert (u * v).window == (2, 3, 1, 4)
        assert (v * u).window == (3, 1, 2, 4)
        assert multiply(u, v) == u * v
        assert multiply(inverse(v), v).is_identity

    def test_signed_evaluation(self):
        w = _w("3,-1,4,2")
        assert w(2) == -1
        assert w(-2) == 1
        assert w.negatives == frozenset({2})

    def test_inverse(self):
        w = _w("3,-1,4,2")
        assert (w * w.inverse()).is_identity
        assert w.inverse().window == (-2, 4, 1, 3)

    def test_rank_mismatch(self):
        with pytest.raises(DatumMismatchError):
            _w("21") * _w("213")

    def test_action_on_forms(self):
        w = _w("3,-1,2")
        assert w.act(LinearForm.basis(2, 3)).coeffs == (-1, 0, 0)
        assert w.act(LinearForm.basis(1, 3)).coeffs == (0, 0, 1)


class TestRootDatum:
    @pytest.mark.parametrize("group,order,top", [
        ("A1", 2, 1), ("A2", 6, 3), ("A3", 24, 6),
        ("B2", 8, 4), ("C3", 48, 9), ("D3", 24, 6), ("D4", 192, 12),
    ])
    def test_orders_and_longest_length(self, group, order, top):
        datum = datum_for_group(group)
        assert datum.order == order
        assert datum.length(datum.longest_element) == top
        assert len(datum.positive_roots) == top

    def test_parse_group(self):
        assert parse_group("A3") == ("A", 4)
        assert parse_group("c4") == ("C", 4)
        with pytest.raises(UnsupportedTypeError):
            parse_group("E6")
        with pytest.raises(InputError):
            parse_group("three")

    def test_cached_instances(self):
        assert make_root_datum("C", 3) is datum_for_group("C3")

    def test_signed_lengths(self):
        c4 = datum_for_group("C4")
        assert c4.length(_w("3,-1,4,2")) == 4
        assert c4.length(_w("-2,-3,4,1")) == 7
        assert c4.length(_w("-2,-1,3,4")) == 3

    def test_type_b_and_c_share_lengths(self):
        b3, c3 = datum_for_group("B3"), datum_for_group("C3")
        for w in c3.elements():
            assert b3.length(w) == c3.length(w)

    def test_type_d_even_sign_changes(self):
        d4 = datum_for_group("D4")
        assert all(len(w.negatives) % 2 == 0 for w in d4.elements())

    def test_elements_sorted_by_length(self):
        a3 = datum_for_group("A3")
        lengths = [a3.length(w) for w in a3.elements()]
        assert lengths == sorted(lengths)
        assert a3.elements()[0].is_identity
        assert a3.length_distribution() == [1, 3, 5, 6, 5, 3, 1]

    def test_descents(self):
        a3 = datum_for_group("A3")
        w = _w("2143")
        assert sorted(a3.right_descents(w)) == [1, 3]
        assert sorted(a3.left_descents(w)) == [1, 3]
        assert a3.reduced_word(w) == (1, 3)

    def test_simple_labels(self):
        c2 = datum_for_group("C2")
        assert c2.simple_root(0).coeffs == (2, 0)
        assert c2.simple_reflection(0).window == (-1, 2)
        with pytest.raises(InputError):
            c2.simple_root(5)

    def test_reflections(self):
        a3 = datum_for_group("A3")
        alpha = LinearForm.difference(1, 3, 4)
        assert a3.reflection(alpha).window == (3, 2, 1, 4)
        with pytest.raises(NotARootError):
            a3.reflection(LinearForm((1, 1, 0, 0)))

    def test_bruhat_order(self):
        a3 = datum_for_group("A3")
        e, w0 = a3.identity, a3.longest_element
        for w in a3.elements():
            assert a3.bruhat_leq(e, w)
            assert a3.bruhat_leq(w, w0)
        assert a3.bruhat_leq(_w("2143"), _w("3412"))
        assert not a3.bruhat_leq(_w("2143"), _w("1342"))
        assert not a3.bruhat_leq(_w("3412"), _w("2143"))

    @pytest.mark.parametrize("group", ["A3", "C2"])
    def test_bruhat_order_matches_cover_closure(self, group):
        datum = datum_for_group(group)
        above = _make_bruhat_closure(datum)
        for v in datum.elements():
            for w in datum.elements():
                assert datum.bruhat_leq(v, w) == (w in above[v]), (str(v), str(w))

    @pytest.mark.parametrize("group", ["A3", "C2", "C3"])
    def test_reduced_words_every_element(self, group):
        datum = datum_for_group(group)
        for w in datum.elements():
            word = datum.reduced_word(w)
            assert len(word) == datum.length(w)
            assert datum.from_word(word) == w

    def test_reduced_words_random_c4(self):
        c4 = datum_for_group("C4")
        rng = random.Random(20240611)
        elements = c4.elements()
        for _ in range(1000):
            w = rng.choice(elements)
            word = c4.reduced_word(w)
            assert len(word) == c4.length(w)
            assert c4.from_word(word) == w

    @pytest.mark.parametrize("group", ["A3", "B3", "C3", "D4"])
    def test_simple_reflection_changes_length_by_one(self, group):
        datum = datum_for_group(group)
        for w in datum.elements():
            for i, s in datum.simple_reflections.items():
                step = datum.length(w * s) - datum.length(w)
                assert step == (-1 if i in datum.right_descents(w) else 1)

    def test_membership(self):
        d3 = datum_for_group("D3")
        assert _w("-1,-2,3") in d3
        assert _w("-1,2,3") not in d3
        with pytest.raises(InputError):
            d3.parse_element("-1,2,3")

    def test_cartan_matrix_type_c(self):
        assert datum_for_group("C2").cartan_matrix() == [[2, -2], [-1, 2]]
