"""Legal complement placements per construction form, and attachment.

Four complement kinds are placed:

* essential complements of the adjective (role ``W``): immediately after the
  adjective in every form;
* essential complements of the noun (role ``W``): next to the noun under the
  joint analysis, or extracted separately under the dislocated analysis;
  absent from the short restructured form F2 (except for rang-type locatives,
  which keep adverbial mobility);
* adverbial complements selected by the noun (role ``W1``) and by the
  adjective (role ``W2``): present in every form including F2, with the
  movement possibilities of adverbs.

Fillers are written ``preposition:content``, e.g. ``avec:Léa``.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Optional, Sequence

from .lexicon import ComplementSpec, LexicalEntry, LexiconError
from .schema import FormId, SchematicSentence, Token, slot


class PlacementError(ValueError):
    """Complement kind incompatible with the entry or form."""


ROLE_OF_KIND = {
    "essential_adj": "W",
    "essential_napp": "W",
    "adverbial_napp": "W1",
    "adverbial_adj": "W2",
}

# Insertion priority when several complements land on the same anchor
# position: smaller goes first.
_PRIORITY = {
    "after_adj": {"essential_adj": 0, "adverbial_adj": 1, "adverbial_napp": 2, "essential_napp": 3},
    "clause_end": {"essential_adj": 0, "adverbial_adj": 1, "adverbial_napp": 2, "essential_napp": 3},
    "before_copula": {"adverbial_napp": 0, "adverbial_adj": 1, "essential_napp": 2, "essential_adj": 3},
}


@dataclass(frozen=True)
class Placement:
    """One legal position for one complement in one form."""

    form: FormId
    anchor: str  # after_noun | after_adj | before_copula | clause_end | before_det
    dislocated: bool = False
    grade: str = "ok"

    @property
    def slot_positions(self) -> tuple[tuple[int, str], ...]:
        return ((0, self.anchor),)


def _essential_napp_slots(entry: LexicalEntry, form: FormId, spec: ComplementSpec) -> list[Placement]:
    base = form.base
    analysis = spec.analysis
    disloc_flag = analysis == "dislocated"
    if base == "A":
        return [Placement(form, "after_noun", disloc_flag)]
    if base == "F1":
        return [Placement(form, "after_noun", disloc_flag)]
    if base == "F2":
        if spec.survives_f2:
            return [Placement(form, "clause_end", True)]
        return []
    if base in ("B", "C"):
        joint = Placement(form, "after_noun", False)
        disloc = Placement(form, "clause_end", True, grade="?" if base == "B" else "ok")
    else:  # D, E
        joint = Placement(form, "after_noun", False)
        disloc = Placement(form, "before_copula", True)
    if analysis == "joint":
        return [joint]
    if analysis == "dislocated":
        return [disloc]
    return [joint, disloc]


def _adverbial_napp_slots(form: FormId) -> list[Placement]:
    base = form.base
    if base == "A":
        return [Placement(form, "after_noun")]
    if base in ("B", "C"):
        return [Placement(form, "after_noun"), Placement(form, "clause_end", True)]
    if base in ("D", "E"):
        return [Placement(form, "before_copula", True), Placement(form, "after_noun")]
    if base == "F1":
        return [Placement(form, "after_noun")]
    return [Placement(form, "clause_end", True)]  # F2


def _adverbial_adj_slots(form: FormId) -> list[Placement]:
    base = form.base
    if base in ("B", "C"):
        return [Placement(form, "after_adj"), Placement(form, "before_det", True)]
    if base in ("D", "E"):
        return [Placement(form, "after_adj"), Placement(form, "before_copula", True)]
    return [Placement(form, "after_adj")]  # A, F1, F2


def complement_slots(entry: LexicalEntry, form: FormId, kind: str) -> list[Placement]:
    """All legal placements of one complement kind in one form.

    The empty list means the complement cannot appear there (essential noun
    complements in F2); an incompatible kind raises PlacementError.
    """
    if kind not in ROLE_OF_KIND:
        raise PlacementError(f"unknown complement kind: {kind!r}")
    if form.variant is not None and form.variant not in (None, "etre_de", "regner_loc", "faire"):
        raise PlacementError(f"complements are not placed in the {form.variant} variant")
    if kind == "essential_adj":
        return [Placement(form, "after_adj")]
    if kind == "essential_napp":
        spec = entry.essential_spec()
        if spec is None:
            raise PlacementError(f"{entry.lemma}: entry has no essential complement")
        return _essential_napp_slots(entry, form, spec)
    if kind == "adverbial_napp":
        return _adverbial_napp_slots(form)
    return _adverbial_adj_slots(form)


def _clause_of(form: FormId, anchor: str, n_clauses: int) -> int:
    if n_clauses == 1:
        return 0
    # Two-clause (A): noun-side anchors go to the support clause, the
    # adjective-side anchor to the adjectival clause.
    return 1 if anchor in ("after_adj",) else 0


def _anchor_position(clause: Sequence[Token], anchor: str) -> int:
    def index_of(pred) -> int:
        for i, tok in enumerate(clause):
            if pred(tok):
                return i
        return -1

    if anchor == "after_noun":
        i = index_of(lambda t: t.kind == "slot" and t.value in ("Npb", "Napp", "Nsup"))
        if i < 0:
            raise PlacementError("form has no noun slot")
        return i + 1
    if anchor == "after_adj":
        i = index_of(lambda t: t.kind == "slot" and t.value == "Adj")
        if i < 0:
            raise PlacementError("form has no adjective slot")
        return i + 1
    if anchor == "before_copula":
        adj = index_of(lambda t: t.kind == "slot" and t.value == "Adj")
        best = -1
        for i, tok in enumerate(clause):
            if tok.kind == "lex" and tok.value == "être" and (adj < 0 or i < adj):
                best = i
        if best < 0:
            raise PlacementError("form has no copula")
        return best
    if anchor == "before_det":
        i = index_of(lambda t: t.kind == "det")
        if i < 0:
            raise PlacementError("form has no determiner")
        return i
    if anchor == "clause_end":
        return len(clause)
    raise PlacementError(f"unknown anchor: {anchor!r}")


def _insert_all(
    s: SchematicSentence, inserts: list[tuple[int, int, int, int, Token]]
) -> SchematicSentence:
    clauses = [list(c) for c in s.clauses]
    for ci, pos, _prio, _seq, tok in sorted(inserts, key=lambda x: (x[0], x[1], x[2], x[3]), reverse=True):
        clauses[ci].insert(pos, tok)
    return SchematicSentence(tuple(tuple(c) for c in clauses), s.form_hint)


def attach_complements(
    s: SchematicSentence,
    specs: Sequence[tuple[ComplementSpec, str]],
    entry: LexicalEntry,
    form: FormId,
) -> list[SchematicSentence]:
    """Attach complements to a derived sentence, one output per placement combination.

    ``specs`` pairs each complement spec with its filler ("prep:content").
    An empty spec list returns the sentence unchanged; a complement with no
    legal placement in this form (essential noun complement in F2) makes the
    result empty.
    """
    if not specs:
        return [s]
    per_spec: list[list[Placement]] = []
    for spec, _filler in specs:
        per_spec.append(complement_slots(entry, form, spec.kind))
    out: list[SchematicSentence] = []
    for combo in product(*per_spec):
        inserts = []
        for seq, ((spec, filler), placement) in enumerate(zip(specs, combo)):
            tok = slot(ROLE_OF_KIND[spec.kind], filler)
            ci = _clause_of(form, placement.anchor, len(s.clauses))
            pos = _anchor_position(s.clauses[ci], placement.anchor)
            prio = _PRIORITY.get(placement.anchor, {}).get(spec.kind, seq)
            inserts.append((ci, pos, prio, seq, tok))
        out.append(_insert_all(s, inserts))
    return out


def attachment_grade(combo: Sequence[Placement]) -> str:
    from .schema import worst_grade

    grade = "ok"
    for placement in combo:
        grade = worst_grade(grade, placement.grade)
    return grade


def placement_combinations(
    entry: LexicalEntry, form: FormId, specs: Sequence[tuple[ComplementSpec, str]]
) -> list[tuple[Placement, ...]]:
    """The placement combinations underlying :func:`attach_complements` outputs."""
    per_spec = [complement_slots(entry, form, spec.kind) for spec, _ in specs]
    return list(product(*per_spec))


@dataclass(frozen=True)
class Family:
    name: str
    prepositions: tuple[str, ...]


def load_families() -> list[Family]:
    """The adverbial preposition families shipped with the corpus."""
    text = resources.files("lexgram.data").joinpath("families.tsv").read_text(encoding="utf-8")
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 2:
            raise LexiconError(f"bad family line: {line!r}")
        out.append(Family(cols[0], tuple(p.strip() for p in cols[1].split(","))))
    return out


def family_of(preposition: str, families: Optional[list[Family]] = None) -> Optional[Family]:
    families = families if families is not None else load_families()
    for family in families:
        if preposition in family.prepositions:
            return family
    return None
