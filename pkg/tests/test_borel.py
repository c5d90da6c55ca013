"""Tests for the type-A Borel presentation."""

import pytest

from patternmap.base.config import Mode
from patternmap.base.errors import RankMismatchError, UnsupportedTypeError
from patternmap.base.symbolic import PolyS, borel_names
from patternmap.borel import (
    DoublePoly,
    borel_relations,
    double_grothendieck,
    double_schubert,
    eval_borel,
    expand_pullback_via_borel,
    localize_representative,
    pullback_borel,
    representative,
)
from patternmap.gkm import schubert_class, structure_sheaf_class
from patternmap.pattern import levi_from_cocharacter, parse_eta
from patternmap.weyl import WeylElem, datum_for_group


def _w(text):
    return WeylElem.parse(text)


def _b(text, n=4):
    return PolyS.from_text(text, names=borel_names(n))


class TestRepresentatives:
    def test_top_polynomial(self):
        a2 = datum_for_group("A2")
        top = double_schubert(a2, _w("321"))
        assert top.poly == _b("(z1 - t1)*(z1 - t2)*(z2 - t1)", 3)

    def test_small_classes(self):
        a3 = datum_for_group("A3")
        assert double_schubert(a3, a3.identity).poly == 1
        assert double_schubert(a3, _w("2134")).poly == _b("z1 - t1")
        assert double_schubert(a3, _w("1243")).poly == _b("z1 + z2 + z3 - t1 - t2 - t3")
        assert double_schubert(a3, _w("2143")).poly == _b("(z1 - t1)*(z1 + z2 + z3 - t1 - t2 - t3)")

    def test_grothendieck_identity_is_one(self):
        a2 = datum_for_group("A2")
        assert double_grothendieck(a2, a2.identity).poly == 1

    def test_type_a_only(self):
        c2 = datum_for_group("C2")
        with pytest.raises(UnsupportedTypeError):
            double_schubert(c2, c2.identity)

    def test_dict_round_trip(self):
        a2 = datum_for_group("A2")
        rep = representative(a2, _w("231"), "K")
        assert DoublePoly.from_dict(rep.to_dict()) == rep


class TestEvaluation:
    def test_eval_at_3412(self):
        p = double_schubert(datum_for_group("A3"), _w("2143"))
        assert eval_borel(p, _w("3412")) == PolyS.from_text("(t3 - t1)*(t4 - t2)", 4)

    @pytest.mark.parametrize("group", ["A2", "A3"])
    def test_schubert_localization_matches_gkm(self, group):
        datum = datum_for_group(group)
        for v in datum.elements():
            assert localize_representative(datum, double_schubert(datum, v)) == schubert_class(datum, v)

    def test_grothendieck_localization_matches_gkm(self):
        a2 = datum_for_group("A2")
        for v in a2.elements():
            assert localize_representative(a2, double_grothendieck(a2, v)) == structure_sheaf_class(a2, v)

    def test_relations_vanish_at_fixed_points(self):
        a2 = datum_for_group("A2")
        for relation in borel_relations(3):
            for w in a2.elements():
                assert eval_borel(DoublePoly(relation, 3), w) == 0

    def test_rank_mismatch(self):
        p = double_schubert(datum_for_group("A2"), _w("213"))
        with pytest.raises(RankMismatchError):
            eval_borel(p, _w("2134"))


class TestPullbackBorel:
    def test_substitution(self):
        p = double_schubert(datum_for_group("A3"), _w("2143"))
        pulled = pullback_borel(p, _w("3412"))
        assert pulled.poly == _b("(z3 - t1)*(z3 + z4 + z1 - t1 - t2 - t3)")

    def test_agrees_modulo_relations(self):
        p = double_schubert(datum_for_group("A3"), _w("2143"))
        pulled = pullback_borel(p, _w("3412")).poly
        reduced = _b("(z3 - t1)*(t4 - z2)")
        assert pulled - reduced == _b("z3 - t1") * borel_relations(4)[0]

    @pytest.mark.parametrize("sigma,expected", [
        ("1324", {"2143": "1"}),
        ("1342", {"2134": "t4 - t1"}),
        ("3412", {"1234": "(t3 - t1)*(t4 - t2)", "2134": "t3 - t1", "1243": "t4 - t2", "2143": "1"}),
    ])
    def test_expansion_matches_localization(self, sigma, expected):
        a3 = datum_for_group("A3")
        levi = levi_from_cocharacter(a3, parse_eta("1,1,-1,-1"))
        u = _w("2143")
        expansion = expand_pullback_via_borel(levi, double_schubert(a3, u), _w(sigma), against=u, mode=Mode.CHECKED)
        assert dict(expansion.items()) == {_w(k): PolyS.from_text(v, 4) for k, v in expected.items()}

    def test_k_theory_route(self):
        a3 = datum_for_group("A3")
        levi = levi_from_cocharacter(a3, parse_eta("1,1,-1,-1"))
        u = _w("2143")
        for sigma in levi.reps:
            expand_pullback_via_borel(levi, double_grothendieck(a3, u), sigma, against=u, mode=Mode.CHECKED)
