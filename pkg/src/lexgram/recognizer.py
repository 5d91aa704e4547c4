"""Match schematic sentences against the lexicon; recover source constructions.

Recognition is structural: a sentence matches an (entry, form) pair when
re-generating that form with the sentence's own fillers reproduces it, up to
free determiners. Ambiguity is returned in full - one adjectival sentence may
instantiate several appropriate nouns - in lexicon order, then form order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .complements import (
    PlacementError,
    attach_complements,
    attachment_grade,
    placement_combinations,
)
from .derivation import (
    DerivationError,
    derive_form,
    grade_of,
    licensed_forms,
    vsup_variants,
)
from .lexicon import ComplementSpec, LexicalEntry, Lexicon, NounClass
from .schema import (
    FormId,
    NOUN_ROLES,
    SchematicSentence,
    VSUP_VARIANTS,
    equal_modulo_free_dets,
    worst_grade,
)


@dataclass(frozen=True)
class Bindings:
    n0: str
    adj: Optional[str]
    complements: tuple[tuple[str, str], ...] = ()  # (kind, filler)


@dataclass(frozen=True)
class Match:
    entry: LexicalEntry
    form: FormId
    bindings: Bindings
    grade: str


def _extract(s: SchematicSentence):
    noun = n0 = adj = None
    ws: list[tuple[str, str]] = []
    for tok in s.tokens:
        if tok.kind != "slot":
            continue
        if tok.value in NOUN_ROLES and noun is None:
            noun = (tok.value, tok.filler)
        elif tok.value == "N0" and n0 is None:
            n0 = tok.filler
        elif tok.value == "Adj" and adj is None:
            adj = tok.filler
        elif tok.value in ("W", "W1", "W2"):
            ws.append((tok.value, tok.filler))
    return noun, n0, adj, ws


def _adjective_index(lex: Lexicon) -> dict[str, list[LexicalEntry]]:
    index = getattr(lex, "_adj_index", None)
    if index is None:
        index = {}
        for entry in lex:
            seen = set()
            for adj in entry.adjectives:
                for key in (adj, _strip_prep(adj)):
                    key = key.replace(" ", "_")
                    if key and key not in seen:
                        seen.add(key)
                        index.setdefault(key, []).append(entry)
        lex._adj_index = index
    return index


def _strip_prep(adj: str) -> str:
    words = adj.split()
    while words and words[-1] in ("à", "de", "par", "Advm"):
        words = words[:-1]
    return " ".join(words)


def _spec_options(entry: LexicalEntry, role: str) -> list[ComplementSpec]:
    """Complement specs a W token of this role could instantiate."""
    if role == "W1":
        return [ComplementSpec("adverbial_napp")]
    if role == "W2":
        return [ComplementSpec("adverbial_adj")]
    options = []
    essential = entry.essential_spec()
    if essential is not None:
        options.append(essential)
    options.append(ComplementSpec("essential_adj"))
    return options


def _assignments(entry: LexicalEntry, ws: Sequence[tuple[str, str]]):
    """All ways of typing the sentence's W tokens as complement specs."""
    if not ws:
        yield []
        return
    role, filler = ws[0]
    for rest in _assignments(entry, ws[1:]):
        for spec in _spec_options(entry, role):
            yield [(spec, filler)] + rest


def _numbers(entry: LexicalEntry) -> list[str]:
    if entry.plural_only:
        return ["plur"]
    out = ["sing"]
    if entry.bit("plur"):
        out.append("plur")
    return out


def _try_form(
    s: SchematicSentence,
    entry: LexicalEntry,
    form: FormId,
    n0: str,
    adj: Optional[str],
    ws: Sequence[tuple[str, str]],
    base_grade: str,
) -> Optional[Match]:
    needs_adj = form.variant not in (
        "intensive_de_le",
        "intensive_des",
        "locative_literary",
        "binding_avoir",
        "il_y_avoir",
    )
    if needs_adj != (adj is not None):
        return None
    n_clauses = 2 if form.base == "A" and form.variant in VSUP_VARIANTS else 1
    if len(s.clauses) != n_clauses:
        return None
    f1_preps = entry.f1_preps if form.base == "F1" else (None,)
    for number in _numbers(entry):
        for f1_prep in f1_preps:
            try:
                base = derive_form(entry, form, n0, adj, number=number, f1_prep=f1_prep)
            except DerivationError:
                continue
            if not ws:
                if equal_modulo_free_dets(s, base):
                    return Match(entry, form, Bindings(n0, adj), worst_grade(base_grade, grade_of(entry, form)))
                continue
            if form.variant is not None and form.variant not in VSUP_VARIANTS:
                continue
            for specs in _assignments(entry, ws):
                try:
                    candidates = attach_complements(base, specs, entry, form)
                    combos = placement_combinations(entry, form, specs)
                except PlacementError:
                    continue
                for candidate, combo in zip(candidates, combos):
                    if equal_modulo_free_dets(s, candidate):
                        grade = worst_grade(base_grade, grade_of(entry, form), attachment_grade(combo))
                        bindings = Bindings(n0, adj, tuple((sp.kind, f) for sp, f in specs))
                        dislocated = any(p.dislocated for p in combo)
                        return Match(entry, FormId(form.base, form.variant, dislocated), bindings, grade)
    return None


def recognize(
    s: SchematicSentence, lex: Lexicon, *, allow_free_adj: bool = False
) -> list[Match]:
    """All (entry, form, bindings) whose re-generation reproduces ``s``."""
    noun, n0, adj, ws = _extract(s)
    if n0 is None:
        return []
    if noun is not None:
        role, lemma = noun
        candidates = [e for e in lex.query(lemma) if e.cls.role == role]
    elif adj is not None:
        candidates = list(_adjective_index(lex).get(adj, []))
    else:
        return []
    out: list[Match] = []
    for entry in candidates:
        adj_grade = "ok"
        if adj is not None and not entry.matches_adjective(adj):
            if not allow_free_adj:
                continue
            adj_grade = "?"
        for form in licensed_forms(entry):
            m = _try_form(s, entry, form, n0, adj, ws, adj_grade)
            if m is not None:
                out.append(m)
    return out


def source_form(entry: LexicalEntry) -> FormId:
    """The construction this entry normalizes to."""
    if entry.cls is NounClass.NSUP:
        base = "C"
    elif entry.cls is NounClass.NPB or entry.bit("form_a"):
        base = "A"
    elif entry.bit("form_d"):
        base = "D"
    else:
        base = "E"
    variant = vsup_variants(entry)[0] if base in ("A", "B", "C", "D") else None
    return FormId(base, variant)


def normalize(s: SchematicSentence, lex: Lexicon, *, allow_free_adj: bool = False) -> list[SchematicSentence]:
    """Re-expand a sentence to the source construction of each recognized entry."""
    out: list[SchematicSentence] = []
    seen: set[str] = set()
    for m in recognize(s, lex, allow_free_adj=allow_free_adj):
        if m.bindings.adj is None:
            continue
        entry = m.entry
        target = source_form(entry)
        try:
            base = derive_form(entry, target, m.bindings.n0, m.bindings.adj)
        except DerivationError:
            continue
        specs = []
        for kind, filler in m.bindings.complements:
            spec = entry.essential_spec() if kind == "essential_napp" else ComplementSpec(kind)
            if spec is None:
                continue
            specs.append((spec, filler))
        try:
            attached = attach_complements(base, specs, entry, target)
        except PlacementError:
            attached = [base]
        if not attached:
            continue
        rendered = str(attached[0])
        if rendered not in seen:
            seen.add(rendered)
            out.append(attached[0])
    return out
