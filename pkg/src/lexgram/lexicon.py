"""Lexicon tables of French appropriate nouns and their distributional properties.

Three noun classes are covered, each with its own fixed property-vector
layout:

* Npb  - nouns of parts of the body or of things (5 properties)
* Napp - nouns fitting ``Det Napp de Det N0 être Adj`` (14 properties)
* Nsup - support nouns for an adjective (11 properties)

Entries are loaded from TSV files, one entry per line, 6 columns::

    lemma <TAB> class <TAB> adjectives <TAB> properties <TAB> tables <TAB> complements

``adjectives`` and ``tables`` are comma/space separated lists; ``properties``
is a +/- string whose length is fixed by the class; ``complements`` is a
semicolon-separated list of ``kind:analysis:surface`` mini-specs. Lines
starting with '#' are comments. A lemma may occur in several entries.
"""

from __future__ import annotations

import io
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator, Optional, TextIO, Union


class LexiconError(ValueError):
    """Raised on malformed lexicon files."""


class NounClass(Enum):
    NPB = "NPB"
    NAPP = "NAPP"
    NSUP = "NSUP"

    @property
    def arity(self) -> int:
        return {"NPB": 5, "NAPP": 14, "NSUP": 11}[self.value]

    @property
    def role(self) -> str:
        """Slot role label used in schematic sentences."""
        return {"NPB": "Npb", "NAPP": "Napp", "NSUP": "Nsup"}[self.value]


# Positions (1-based) of the named properties inside each class's vector.
BIT_INDEX = {
    NounClass.NPB: {
        "nhum": 1,
        "nonhum": 2,
        "sing": 3,
        "plur": 4,
        "f1_prep": 5,
    },
    NounClass.NAPP: {
        "nhum": 1,
        "nonhum": 2,
        "avoir": 3,
        "etre_de": 4,
        "regner_loc": 5,
        "faire": 6,
        "sing": 7,
        "plur": 8,
        "intensive_de_le": 9,
        "intensive_des": 10,
        "form_a": 11,
        "form_d": 12,
        "quelque_chose": 13,
        "f1_prep": 14,
    },
    NounClass.NSUP: {
        "nhum": 1,
        "nonhum": 2,
        "avoir": 3,
        "etre_de": 4,
        "faire": 5,
        "sing": 6,
        "plur": 7,
        "form_b": 8,
        "form_d": 9,
        "quelque_chose": 10,
        "f1_prep": 11,
    },
}

BIT_LEGEND = {
    NounClass.NPB: (
        "N0 =: Nhum",
        "N0 =: N-hum",
        "Npb sing",
        "Npb plur",
        "Det N0 être Adj Prep Det Npb",
    ),
    NounClass.NAPP: (
        "N0 =: Nhum",
        "N0 =: N-hum",
        "Vsup =: avoir",
        "Vsup =: être de",
        "Vsup =: régner Loc",
        "Vsup =: faire",
        "Napp sing",
        "Napp plur",
        "Det N0 Vsup de le Napp sing",
        "Det N0 Vsup des Napp plur",
        "(A)",
        "(D)",
        "Det N0 Vsup quelque chose de Adj",
        "Det N0 être Adj Prep Det Napp",
    ),
    NounClass.NSUP: (
        "N0 =: Nhum",
        "N0 =: N-hum",
        "Vsup =: avoir",
        "Vsup =: être de",
        "Vsup =: faire",
        "Nsup sing",
        "Nsup plur",
        "(B)",
        "(D)",
        "Det N0 Vsup quelque chose de Adj",
        "Det N0 être Adj Prep Det Nsup",
    ),
}


@dataclass(frozen=True)
class PropertyVector:
    bits: tuple[bool, ...]

    @classmethod
    def parse(cls, text: str, arity: int) -> "PropertyVector":
        if len(text) != arity:
            raise LexiconError(f"property string {text!r} has length {len(text)}, expected {arity}")
        if any(ch not in "+-" for ch in text):
            raise LexiconError(f"property string {text!r} contains characters other than '+'/'-'")
        return cls(tuple(ch == "+" for ch in text))

    def plus(self, position: int) -> bool:
        """1-based property test, matching the published numbering."""
        return self.bits[position - 1]

    def __str__(self) -> str:
        return "".join("+" if b else "-" for b in self.bits)


COMPLEMENT_KINDS = ("essential_adj", "essential_napp", "adverbial_napp", "adverbial_adj")
ANALYSES = ("joint", "dislocated", "both")


@dataclass(frozen=True)
class ComplementSpec:
    """A prepositional complement slot attached to an entry or supplied ad hoc.

    ``surface`` is preposition material plus a filler placeholder, e.g.
    "à Vinf", "envers Nhum", "Loc Nloc". A "Loc" surface marks the rang-type
    locatives: essential interpretation but adverb-like mobility, preserved
    even in the short restructured form.
    """

    kind: str
    analysis: str = "both"
    surface: str = ""

    def __post_init__(self) -> None:
        if self.kind not in COMPLEMENT_KINDS:
            raise LexiconError(f"unknown complement kind: {self.kind!r}")
        if self.analysis not in ANALYSES:
            raise LexiconError(f"unknown complement analysis: {self.analysis!r}")

    @property
    def survives_f2(self) -> bool:
        return self.kind != "essential_napp" or self.surface.startswith("Loc")

    @property
    def prep(self) -> Optional[str]:
        """Fixed preposition of the surface, None for the abstract locative."""
        if not self.surface:
            return None
        words = self.surface.split()
        if words[0] == "Loc":
            return None
        if words[-1] in ("N", "Nhum", "Nloc", "Nnr", "Vinf"):
            words = words[:-1]
        return " ".join(words) or None

    @classmethod
    def parse(cls, text: str) -> "ComplementSpec":
        parts = text.split(":")
        if len(parts) != 3:
            raise LexiconError(f"bad complement spec {text!r}, expected kind:analysis:surface")
        kind, analysis, surface = (p.strip() for p in parts)
        return cls(kind, analysis or "both", surface)

    def render(self) -> str:
        return f"{self.kind}:{self.analysis}:{self.surface}"


@dataclass(frozen=True)
class LexicalEntry:
    lemma: str
    cls: NounClass
    adjectives: tuple[str, ...]
    props: PropertyVector
    complements: tuple[ComplementSpec, ...] = ()
    table_codes: tuple[str, ...] = ()
    index: int = 0  # position in the source file; keeps duplicate lemmas apart
    grade_overrides: tuple[tuple[str, str], ...] = ()
    f1_preps: tuple[str, ...] = ("de",)

    def __post_init__(self) -> None:
        if len(self.props.bits) != self.cls.arity:
            raise LexiconError(
                f"{self.lemma}: {len(self.props.bits)} properties for class "
                f"{self.cls.value} (expected {self.cls.arity})"
            )
        if not self.adjectives:
            raise LexiconError(f"{self.lemma}: entry has no example adjective")

    def bit(self, name: str) -> bool:
        """Named property lookup; absent names (e.g. 'avoir' on Npb) are False."""
        pos = BIT_INDEX[self.cls].get(name)
        return False if pos is None else self.props.plus(pos)

    def bit_position(self, name: str) -> Optional[int]:
        return BIT_INDEX[self.cls].get(name)

    @property
    def number_fixed(self) -> Optional[str]:
        sing, plur = self.bit("sing"), self.bit("plur")
        if sing and not plur:
            return "singular_only"
        if plur and not sing:
            return "plural_only"
        return None

    @property
    def plural_only(self) -> bool:
        return self.number_fixed == "plural_only"

    def essential_spec(self) -> Optional[ComplementSpec]:
        for spec in self.complements:
            if spec.kind == "essential_napp":
                return spec
        return None

    def grade_override(self, form_label: str) -> Optional[str]:
        for key, grade in self.grade_overrides:
            if key == form_label:
                return grade
        return None

    def matches_adjective(self, adj: str) -> bool:
        """True if ``adj`` is one of the listed example adjectives.

        Listed adjectives may carry complement material ("moite de",
        "antérieur à de"); the bare adjective matches too.
        """
        want = _nfc(adj.replace("_", " "))
        for listed in self.adjectives:
            listed = _nfc(listed)
            if want == listed:
                return True
            stripped = listed.split()
            while stripped and stripped[-1] in ("à", "de", "par", "Advm"):
                stripped = stripped[:-1]
            if stripped and want == " ".join(stripped):
                return True
        return False

    def describe(self) -> str:
        return f"{self.lemma} ({self.cls.value} {self.props})"


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


@dataclass
class Lexicon:
    entries: list[LexicalEntry] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._by_lemma: dict[str, list[LexicalEntry]] = {}
        for entry in self.entries:
            self._by_lemma.setdefault(entry.lemma, []).append(entry)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LexicalEntry]:
        return iter(self.entries)

    def query(self, lemma: str) -> list[LexicalEntry]:
        """All entries for a lemma, in file order; accents compare exactly."""
        return list(self._by_lemma.get(_nfc(lemma.replace("_", " ")), []))

    def count(self, cls: NounClass) -> int:
        return sum(1 for e in self.entries if e.cls is cls)

    def merged(self, other: "Lexicon") -> "Lexicon":
        return Lexicon(self.entries + other.entries)


Source = Union[str, Path, TextIO, BinaryIO]


def _readlines(source: Source) -> list[str]:
    if isinstance(source, (str, Path)):
        return Path(source).read_text(encoding="utf-8").splitlines()
    data = source.read()
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return data.splitlines()


def load_lexicon(
    source: Source,
    cls: NounClass,
    *,
    grade_table: Optional[dict] = None,
    f1_table: Optional[dict] = None,
    start_index: int = 0,
) -> Lexicon:
    """Load one class table. Raises LexiconError on malformed lines."""
    entries: list[LexicalEntry] = []
    grade_table = grade_table or {}
    f1_table = f1_table or {}
    for lineno, raw in enumerate(_readlines(source), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 6:
            raise LexiconError(f"line {lineno}: expected 6 columns, got {len(cols)}")
        lemma, tag, adjectives, props, codes, compl = (c.strip() for c in cols)
        try:
            file_cls = NounClass(tag)
        except ValueError:
            raise LexiconError(f"line {lineno}: unknown class tag {tag!r}") from None
        if file_cls is not cls:
            raise LexiconError(f"line {lineno}: class tag {tag} in a {cls.value} table")
        lemma = _nfc(lemma)
        adjs = tuple(_nfc(a.strip()) for a in adjectives.split(",") if a.strip())
        specs = tuple(
            ComplementSpec.parse(part) for part in compl.split(";") if part.strip()
        )
        try:
            entry = LexicalEntry(
                lemma=lemma,
                cls=cls,
                adjectives=adjs,
                props=PropertyVector.parse(props, cls.arity),
                complements=specs,
                table_codes=tuple(codes.split()) if codes else (),
                index=start_index + len(entries),
                grade_overrides=_overrides_for(grade_table, cls, lemma, adjs),
                f1_preps=f1_table.get((cls, lemma), ("de",)),
            )
        except LexiconError as exc:
            raise LexiconError(f"line {lineno}: {exc}") from None
        entries.append(entry)
    return Lexicon(entries)


def _overrides_for(grade_table: dict, cls: NounClass, lemma: str, adjs: tuple) -> tuple:
    out = []
    for (ocls, olemma), rows in grade_table.items():
        if ocls is cls and olemma == lemma:
            for form_label, grade, anchor in rows:
                if anchor and not any(anchor in a for a in adjs):
                    continue
                out.append((form_label, grade))
    return tuple(out)


def _load_grade_table(lines: Iterable[str]) -> dict:
    table: dict = {}
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) not in (4, 5):
            raise LexiconError(f"bad grade override line: {line!r}")
        lemma, tag, form_label, grade = cols[:4]
        anchor = cols[4] if len(cols) == 5 else ""
        key = (NounClass(tag), _nfc(lemma))
        table.setdefault(key, []).append((form_label, grade, anchor))
    return table


def _load_f1_table(lines: Iterable[str]) -> dict:
    table: dict = {}
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise LexiconError(f"bad restructuring-preposition line: {line!r}")
        lemma, tag, preps = cols
        table[(NounClass(tag), _nfc(lemma))] = tuple(p.strip() for p in preps.split(","))
    return table


_DATA_FILES = {NounClass.NPB: "npb.tsv", NounClass.NAPP: "napp.tsv", NounClass.NSUP: "nsup.tsv"}


def _data_text(name: str) -> str:
    return resources.files("lexgram.data").joinpath(name).read_text(encoding="utf-8")


def load_bundled() -> Lexicon:
    """Load the bundled three-table corpus, with its override tables applied."""
    grade_table = _load_grade_table(_data_text("grades.tsv").splitlines())
    f1_table = _load_f1_table(_data_text("f1preps.tsv").splitlines())
    lex = Lexicon([])
    offset = 0
    for cls in (NounClass.NPB, NounClass.NAPP, NounClass.NSUP):
        part = load_lexicon(
            io.StringIO(_data_text(_DATA_FILES[cls])),
            cls,
            grade_table=grade_table,
            f1_table=f1_table,
            start_index=offset,
        )
        offset += len(part)
        lex = lex.merged(part)
    return lex


def load_directory(path: Union[str, Path]) -> Lexicon:
    """Load npb.tsv / napp.tsv / nsup.tsv (those present) from a directory."""
    path = Path(path)
    grade_file = path / "grades.tsv"
    f1_file = path / "f1preps.tsv"
    grade_table = (
        _load_grade_table(grade_file.read_text(encoding="utf-8").splitlines())
        if grade_file.exists()
        else {}
    )
    f1_table = (
        _load_f1_table(f1_file.read_text(encoding="utf-8").splitlines())
        if f1_file.exists()
        else {}
    )
    lex = Lexicon([])
    offset = 0
    found = False
    for cls, name in _DATA_FILES.items():
        fp = path / name
        if not fp.exists():
            continue
        found = True
        part = load_lexicon(fp, cls, grade_table=grade_table, f1_table=f1_table, start_index=offset)
        offset += len(part)
        lex = lex.merged(part)
    if not found:
        raise LexiconError(f"no lexicon tables found in {path}")
    return lex


def dump_lexicon(lex: Lexicon, cls: NounClass) -> str:
    """Serialize one class back to TSV (inverse of load, minus comments)."""
    lines = []
    for e in lex.entries:
        if e.cls is not cls:
            continue
        lines.append(
            "\t".join(
                [
                    e.lemma,
                    e.cls.value,
                    ", ".join(e.adjectives),
                    str(e.props),
                    " ".join(e.table_codes),
                    ";".join(s.render() for s in e.complements),
                ]
            )
        )
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    entry: Optional[LexicalEntry]
    message: str

    def __str__(self) -> str:
        where = f" [{self.entry.describe()}]" if self.entry else ""
        return f"{self.severity}: {self.message}{where}"


def validate_lexicon(lex: Lexicon) -> list[Diagnostic]:
    """Check invariants; errors are violations, warnings are attested oddities."""
    out: list[Diagnostic] = []
    for e in lex.entries:
        if not (e.bit("nhum") or e.bit("nonhum")):
            out.append(Diagnostic("error", e, "neither Nhum nor N-hum subject allowed"))
        if not e.adjectives:
            out.append(Diagnostic("error", e, "no example adjective"))
        if not (e.bit("sing") or e.bit("plur")):
            out.append(Diagnostic("warning", e, "neither singular nor plural number bit set"))
        if e.cls in (NounClass.NAPP, NounClass.NSUP):
            vsups = ("avoir", "etre_de", "regner_loc", "faire")
            if not any(e.bit(v) for v in vsups):
                out.append(Diagnostic("warning", e, "no Vsup bit set"))
        if e.cls is NounClass.NSUP and not e.bit("form_b") and e.bit("form_d"):
            out.append(Diagnostic("warning", e, "unattested gate combination (B)=- with (D)=+"))
        if e.cls is NounClass.NAPP and e.bit("form_a") and not e.bit("form_d"):
            out.append(Diagnostic("warning", e, "unattested gate combination (A)=+ with (D)=-"))
    return out
