import io

import pytest

from lexgram import (
    LexiconError,
    NounClass,
    dump_lexicon,
    load_lexicon,
    validate_lexicon,
)
from lexgram.lexicon import _data_text


def _load_text(text, cls=NounClass.NAPP):
    return load_lexicon(io.StringIO(text), cls)


def test_bundled_counts(lex):
    assert lex.count(NounClass.NPB) == 11
    assert lex.count(NounClass.NAPP) == 267
    assert lex.count(NounClass.NSUP) == 18


def test_empty_stream():
    assert len(_load_text("")) == 0


def test_arity_mismatch_rejected():
    # 12 bits instead of the 14 the class requires
    line = "acoustique\tNAPP\tmat,réverbérant\t-++++-+---++\t\t\n"
    with pytest.raises(LexiconError, match="length"):
        _load_text(line)


def test_bad_property_characters():
    line = "x\tNAPP\ta\t-++++-+---+?++\t\t\n"
    with pytest.raises(LexiconError, match="characters"):
        _load_text(line)


def test_wrong_column_count():
    with pytest.raises(LexiconError, match="columns"):
        _load_text("a\tNAPP\tb\t--------------\t\n")


def test_unknown_class_tag():
    with pytest.raises(LexiconError, match="class tag"):
        _load_text("a\tNOPE\tb\t--------------\t\t\n")


def test_class_tag_must_match_table():
    with pytest.raises(LexiconError, match="class tag"):
        _load_text("a\tNSUP\tb\t+-+--++---+\t\t\n", cls=NounClass.NAPP)


def test_query_duplicate_lemmas(lex):
    gouts = [e for e in lex.query("goût") if e.cls is NounClass.NAPP]
    assert len(gouts) == 2
    assert gouts[0].adjectives == ("sobre",)
    assert "acide" in gouts[1].adjectives
    for lemma in ("allure", "standing"):
        assert len([e for e in lex.query(lemma) if e.cls is NounClass.NAPP]) == 2


def test_query_wrong_class_and_unknown(lex):
    assert [e for e in lex.query("cœur") if e.cls is NounClass.NSUP] == []
    assert lex.query("zzz") == []


def test_query_is_exact_on_code_points(lex):
    assert lex.query("coeur") == []  # the entry is spelled with the ligature
    assert len([e for e in lex.query("cœur") if e.cls is NounClass.NAPP]) == 1


def test_multiword_lemmas_kept_verbatim(lex):
    assert lex.query("mode d'emploi")
    assert lex.query("mode de fonctionn.")
    assert lex.query("mode_d'emploi")  # underscore form accepted in queries


def test_trailing_preposition_becomes_complement_spec(lex):
    for lemma, prep in [
        ("détermination", "à"),
        ("datation", "par"),
        ("volonté", "de"),
        ("usage", "auprès de"),
    ]:
        entry = next(e for e in lex.query(lemma) if e.essential_spec())
        assert entry.essential_spec().prep == prep
    rang = lex.query("rang")[0]
    assert rang.essential_spec().surface.startswith("Loc")
    assert rang.essential_spec().survives_f2
    det = next(e for e in lex.query("détermination"))
    assert not det.essential_spec().survives_f2
    propos = lex.query("propos")[0]
    assert propos.essential_spec().analysis == "dislocated"


def test_number_fixed(lex):
    assert lex.query("agissements")[0].number_fixed == "plural_only"
    assert lex.query("mœurs")[0].number_fixed == "plural_only"
    acoustique = lex.query("acoustique")[0]
    assert acoustique.number_fixed == "singular_only"


def test_every_entry_has_adjective_and_subject_bit(lex):
    for e in lex:
        assert e.adjectives
        assert e.bit("nhum") or e.bit("nonhum")


def test_validate_bundled_no_errors(lex):
    diags = validate_lexicon(lex)
    assert [d for d in diags if d.severity == "error"] == []
    warnings = {(d.entry.lemma, d.message) for d in diags}
    assert ("état", "no Vsup bit set") in warnings


def test_validate_npb_rows_hand_check(lex):
    # Independent hand-check of the 11 part-of-body rows against the
    # class invariants the validator enforces.
    rows = [e for e in lex if e.cls is NounClass.NPB]
    assert len(rows) == 11
    for e in rows:
        assert len(e.props.bits) == 5
        assert e.props.plus(1) or e.props.plus(2)
        assert e.props.plus(3) or e.props.plus(4)
        assert e.adjectives
    assert not any(d.entry.cls is NounClass.NPB for d in validate_lexicon(lex) if d.entry)


def test_validate_unattested_nsup_gate():
    line = "x\tNSUP\ta\t+-+--++-+--\t\t\n"  # (B) minus with (D) plus
    lexicon = _load_text(line, cls=NounClass.NSUP)
    diags = validate_lexicon(lexicon)
    assert any("unattested gate combination" in d.message for d in diags)


def test_nsup_gate_pair_census(lex):
    # Oracle for the unattested-combination rule: count rows per (B, D) pair.
    census = {}
    for e in lex:
        if e.cls is NounClass.NSUP:
            pair = (e.bit("form_b"), e.bit("form_d"))
            census[pair] = census.get(pair, 0) + 1
    assert census == {(True, True): 5, (True, False): 3, (False, False): 10}
    assert (False, True) not in census


def test_prose_consistency_coeur_dehors(lex):
    coeur = next(e for e in lex.query("cœur") if e.cls is NounClass.NAPP)
    assert not coeur.bit("form_a") and not coeur.bit("form_d")
    dehors = next(e for e in lex.query("dehors") if e.cls is NounClass.NAPP)
    assert not dehors.bit("form_a") and dehors.bit("form_d")


def test_reserialization_is_identity(lex):
    for cls, name in [(NounClass.NPB, "npb.tsv"), (NounClass.NAPP, "napp.tsv"), (NounClass.NSUP, "nsup.tsv")]:
        original = [
            line.rstrip()
            for line in _data_text(name).splitlines()
            if line.strip() and not line.startswith("#")
        ]
        dumped = [line.rstrip() for line in dump_lexicon(lex, cls).splitlines() if line]
        assert dumped == original


def test_comments_and_blank_lines_skipped():
    text = "# comment\n\nx\tNAPP\ta\t-+------------\t\t\n"
    assert len(_load_text(text)) == 1
