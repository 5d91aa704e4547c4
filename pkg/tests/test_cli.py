import json

from lexgram import parse_schematic
from lexgram.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestStats:
    def test_counts_line(self, capsys):
        code, out, _ = run(capsys, "stats")
        assert code == 0
        assert out.splitlines()[0] == "NPB 11, NAPP 267, NSUP 18"

    def test_machine(self, capsys):
        code, out, _ = run(capsys, "stats", "--machine")
        assert code == 0
        assert json.loads(out.splitlines()[1]) == {"NPB": 11, "NAPP": 267, "NSUP": 18}


class TestGenerate:
    def test_acoustique_seven_lines(self, capsys):
        code, out, _ = run(capsys, "generate", "acoustique", "--n0", "salle", "--adj", "mat")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 7
        assert [l.split("\t")[0] for l in lines] == ["A", "B", "C", "D", "E", "F1", "F2"]

    def test_unlicensed_form_exit_3(self, capsys):
        code, _, err = run(capsys, "generate", "coeur", "--form", "A", "--n0", "Luc", "--adj", "tendre")
        assert code == 3
        assert "form A not licensed (bit 11 = -)" in err

    def test_unknown_lemma_exit_2(self, capsys):
        code, _, err = run(capsys, "generate", "zzz", "--n0", "x", "--adj", "y")
        assert code == 2
        assert "unknown lemma" in err

    def test_f2_drops_essential_with_warning(self, capsys):
        code, out, err = run(
            capsys, "generate", "determination", "--form", "F2", "--w", "à:partir",
            "--n0", "Luc", "--adj", "inflexible",
        )
        assert code == 0
        assert "essential complement dropped in F2" in err
        assert out.splitlines() == ["F2\tok\tN0[Luc] être Adj[inflexible]"]

    def test_f2_drop_is_error_under_strict(self, capsys):
        code, _, err = run(
            capsys, "generate", "determination", "--form", "F2", "--w", "à:partir",
            "--n0", "Luc", "--adj", "inflexible", "--strict",
        )
        assert code == 3
        assert "essential complement dropped in F2" in err

    def test_machine_record_fields_and_roundtrip(self, capsys):
        code, out, _ = run(
            capsys, "generate", "acoustique", "--n0", "salle", "--adj", "mat", "--machine"
        )
        assert code == 0
        for line in out.splitlines():
            record = json.loads(line)
            assert sorted(record) == ["derivation_path", "form", "grade", "lemma", "tokens"]
            reparsed = parse_schematic(record["tokens"])
            assert " ".join(t.render() for t in reparsed.tokens) == record["tokens"]

    def test_variant_via_form_flag(self, capsys):
        code, out, _ = run(
            capsys, "generate", "race", "--form", "D@etre_de", "--n0", "chien", "--adj", "bâtard"
        )
        assert code == 0
        assert out.strip() == "D@etre_de\tok\tNapp[race] dont être N0[chien] être Adj[bâtard]"

    def test_variants_flag_expands(self, capsys):
        _, base_out, _ = run(capsys, "generate", "acoustique", "--n0", "s", "--adj", "mat")
        _, var_out, _ = run(capsys, "generate", "acoustique", "--n0", "s", "--adj", "mat", "--variants")
        assert len(var_out.splitlines()) > len(base_out.splitlines())
        assert any(l.startswith("A@il_y_avoir") for l in var_out.splitlines())

    def test_no_grades_filters(self, capsys):
        _, out, _ = run(capsys, "generate", "visage", "--n0", "Luc", "--adj", "imberbe", "--no-grades")
        forms = [l.split("\t")[0] for l in out.splitlines()]
        assert "A" not in forms and "D" not in forms and "C" in forms

    def test_complement_attachment(self, capsys):
        code, out, _ = run(
            capsys, "generate", "attitude", "--form", "D", "--n0", "Luc", "--adj", "courtois",
            "--w1", "avec:Léa",
        )
        assert code == 0
        assert out.splitlines()[0] == (
            "D/disloc\tok\tNapp[attitude] que N0[Luc] Vsup[avoir] W1[avec:Léa] être Adj[courtois]"
        )


class TestRecognizeCmd:
    def test_multi_match(self, capsys):
        code, out, _ = run(capsys, "recognize", "N0[Luc] être Adj[louche]")
        assert code == 0
        assert len(out.splitlines()) >= 2

    def test_no_match_exit_4(self, capsys):
        code, _, err = run(capsys, "recognize", "N0[vols] Vsup[avoir] Det[le] X[air] Adj[fréquent]")
        assert code == 4
        assert "no match" in err

    def test_malformed_exit_1(self, capsys):
        code, _, err = run(capsys, "recognize", "N0[salle] être Adj[")
        assert code == 1

    def test_machine_output(self, capsys):
        code, out, _ = run(capsys, "recognize", "N0[convoi] être Adj[rapide]", "--machine")
        assert code == 0
        records = [json.loads(l) for l in out.splitlines()]
        assert any(r["lemma"] == "progression" and r["form"] == "F2" for r in records)


class TestNormalizeCmd:
    def test_normalize(self, capsys):
        code, out, _ = run(capsys, "normalize", "N0[salle] être Adj[mat]")
        assert code == 0
        assert any("Napp[acoustique]" in l and "Det[un_certain]" in l for l in out.splitlines())

    def test_no_match(self, capsys):
        code, _, _ = run(capsys, "normalize", "N0[x] être Adj[zzzz]")
        assert code == 4


class TestFormsCmd:
    def test_forms(self, capsys):
        code, out, _ = run(capsys, "forms", "pâte")
        assert code == 0
        lines = dict(l.split("\t")[:2] for l in out.splitlines())
        assert set(lines) >= {"B@etre_de", "C@etre_de", "F2"}


class TestValidateCmd:
    def test_bundled_ok_with_warnings(self, capsys):
        code, out, _ = run(capsys, "validate")
        assert code == 0
        assert "no Vsup bit set" in out

    def test_strict_turns_warnings_into_failure(self, capsys):
        code, _, _ = run(capsys, "validate", "--strict")
        assert code == 5

    def test_corrupted_file_exit_5(self, capsys, tmp_path):
        (tmp_path / "napp.tsv").write_text("broken line\n", encoding="utf-8")
        code, _, err = run(capsys, "validate", "--lexicon", str(tmp_path))
        assert code == 5

    def test_missing_dir_is_io_error_elsewhere(self, capsys, tmp_path):
        code, _, _ = run(capsys, "stats", "--lexicon", str(tmp_path / "nope"))
        assert code == 1


class TestCustomLexicon:
    def test_lexicon_dir(self, capsys, tmp_path):
        (tmp_path / "napp.tsv").write_text(
            "zinzin\tNAPP\tfou\t+-+---+---++-+\t\t\n", encoding="utf-8"
        )
        code, out, _ = run(
            capsys, "generate", "zinzin", "--n0", "Luc", "--adj", "fou", "--lexicon", str(tmp_path)
        )
        assert code == 0
        assert any(l.startswith("A\t") for l in out.splitlines())
