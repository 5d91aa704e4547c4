import pytest

from lexgram import (
    ComplementSpec,
    FormId,
    PlacementError,
    attach_complements,
    complement_slots,
    derive_form,
    family_of,
    load_families,
)
from conftest import entry_of


def attach(lex, lemma, base, n0, adj, pairs, cls_value=None, adj_anchor=None):
    entry = entry_of(lex, lemma, cls_value, adj_anchor)
    form = FormId(base)
    s = derive_form(entry, form, n0, adj)
    specs = []
    for kind, filler in pairs:
        spec = entry.essential_spec() if kind == "essential_napp" else ComplementSpec(kind)
        specs.append((spec, filler))
    return [str(x) for x in attach_complements(s, specs, entry, form)]


class TestComplementSlots:
    def test_essential_napp_banned_in_f2(self, lex):
        det = entry_of(lex, "détermination")
        assert complement_slots(det, FormId("F2"), "essential_napp") == []

    def test_adverbial_survives_f2(self, lex):
        att = entry_of(lex, "attitude")
        placements = complement_slots(att, FormId("F2"), "adverbial_napp")
        assert len(placements) == 1 and placements[0].anchor == "clause_end"

    def test_essential_adj_one_placement_every_form(self, lex):
        peau = entry_of(lex, "peau")
        for base in ("A", "B", "C", "D", "E", "F1", "F2"):
            placements = complement_slots(peau, FormId(base), "essential_adj")
            assert len(placements) == 1
            assert placements[0].anchor == "after_adj"

    def test_propos_dislocated_only(self, lex):
        propos = entry_of(lex, "propos")
        for base in ("B", "C", "D", "E"):
            placements = complement_slots(propos, FormId(base), "essential_napp")
            assert len(placements) == 1
            assert placements[0].dislocated

    def test_essential_requires_entry_spec(self, lex):
        with pytest.raises(PlacementError):
            complement_slots(entry_of(lex, "acoustique"), FormId("B"), "essential_napp")

    def test_unknown_kind(self, lex):
        with pytest.raises(PlacementError):
            complement_slots(entry_of(lex, "acoustique"), FormId("B"), "nope")

    def test_rang_survives_f2(self, lex):
        rang = entry_of(lex, "rang")
        placements = complement_slots(rang, FormId("F2"), "essential_napp")
        assert len(placements) == 1

    def test_both_analysis_gives_two_variants_in_b_to_e(self, lex):
        det = entry_of(lex, "détermination")
        for base in ("B", "C", "D", "E"):
            assert len(complement_slots(det, FormId(base), "essential_napp")) == 2


class TestAttach:
    def test_attitude_d(self, lex):
        out = attach(lex, "attitude", "D", "Luc", "ferme", [("adverbial_napp", "avec:Léa")])
        assert out[0] == "Napp[attitude] que N0[Luc] Vsup[avoir] W1[avec:Léa] être Adj[ferme]"

    def test_allure_e_w2(self, lex):
        out = attach(
            lex, "allure", "E", "Luc", "louche", [("adverbial_adj", "aux_yeux_de:Léa")],
            adj_anchor="louche",
        )
        assert out[0] == "Napp[allure] de N0[Luc] être Adj[louche] W2[aux_yeux_de:Léa]"

    def test_empty_specs_identity(self, lex):
        ac = entry_of(lex, "acoustique")
        s = derive_form(ac, FormId("E"), "salle", "mat")
        assert attach_complements(s, [], ac, FormId("E")) == [s]

    def test_rang_f2(self, lex):
        out = attach(lex, "rang", "F2", "Luc", "subalterne", [("essential_napp", "dans:hiérarchie")])
        assert out == ["N0[Luc] être Adj[subalterne] W[dans:hiérarchie]"]

    def test_peau_f2_essential_adj(self, lex):
        out = attach(lex, "peau", "F2", "Luc", "moite", [("essential_adj", "de:sueur")])
        assert out == ["N0[Luc] être Adj[moite] W[de:sueur]"]

    def test_essential_on_f2_empty(self, lex):
        out = attach(lex, "détermination", "F2", "Luc", "inflexible", [("essential_napp", "à:partir")])
        assert out == []

    def test_fronted_w2_in_b(self, lex):
        out = attach(
            lex, "allure", "B", "Luc", "louche", [("adverbial_adj", "aux_yeux_de:Léa")],
            adj_anchor="louche",
        )
        assert out[1] == (
            "N0[Luc] Vsup[avoir] W2[aux_yeux_de:Léa] Det[un] Napp[allure] qui être Adj[louche]"
        )

    def test_w1_and_w2_combined_f2(self, lex):
        out = attach(
            lex, "attitude", "F2", "Luc", "courtois",
            [("adverbial_napp", "envers:Léa"), ("adverbial_adj", "aux_yeux_de:Jo")],
        )
        # Both complements survive; the adjective-side one comes first.
        assert out == ["N0[Luc] être Adj[courtois] W2[aux_yeux_de:Jo] W1[envers:Léa]"]

    def test_w1_w2_placements_in_d(self, lex):
        out = attach(
            lex, "attitude", "D", "Luc", "courtois",
            [("adverbial_napp", "envers:Léa"), ("adverbial_adj", "aux_yeux_de:Jo")],
        )
        prefix = "Napp[attitude] que N0[Luc] "
        # Dislocated analysis first, the adjective-side complement after Adj.
        assert out[0] == prefix + "Vsup[avoir] W1[envers:Léa] être Adj[courtois] W2[aux_yeux_de:Jo]"
        # Both complements may also land before the copula, noun-side first.
        assert prefix + "Vsup[avoir] W1[envers:Léa] W2[aux_yeux_de:Jo] être Adj[courtois]" in out

    def test_each_complement_exactly_once(self, lex):
        for lemma, kind, filler in [
            ("détermination", "essential_napp", "à:partir"),
            ("attitude", "adverbial_napp", "avec:Léa"),
            ("allure", "adverbial_adj", "aux_yeux_de:Léa"),
        ]:
            entry = entry_of(lex, lemma, "NAPP")
            for form in ("A", "B", "C", "D", "E", "F1", "F2"):
                outs = attach(lex, lemma, form, "Luc", entry.adjectives[0].split()[0], [(kind, filler)])
                for out in outs:
                    assert out.count(filler) == 1


class TestFamilies:
    def test_table(self):
        families = load_families()
        assert {f.name for f in families} == {
            "envers", "avec", "aux_yeux_de", "devant", "sur", "scenic_locative",
        }

    def test_family_of(self):
        assert family_of("envers").name == "envers"
        assert family_of("face_à").name == "devant"
        assert family_of("dans").name == "scenic_locative"
        assert family_of("xyz") is None
