"""Schematic-sentence token model and its textual serialization.

A schematic sentence is a lemma-level, slot-tagged representation of a French
construction, e.g.::

    N0[salle] Vsup[avoir] Det[un_certain] Napp[acoustique] , Det[ce] Napp[acoustique] être Adj[mat]

Slots are written ``ROLE[filler]``, determiners ``Det[value]``, prepositions
``Prep[value]``; fixed function words (qui, que, être, de, ...) stand alone.
Free determiners are omitted from canonical renderings and are skipped when
sentences are compared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional


class SchemaError(ValueError):
    """Raised on malformed schematic-sentence text or ill-formed tokens."""


DET_VALUES = (
    "un",
    "un_certain",
    "certains",
    "le",
    "ce",
    "de_le",
    "des",
    "possessive",
    "free",
)

# Function words allowed as bare tokens.
LEX_WORDS = ("qui", "que", "être", "de", "dont", "en", "lui", "il_y", "quelque_chose", ",")

NOUN_ROLES = ("Npb", "Napp", "Nsup")

FORM_BASES = ("A", "B", "C", "D", "E", "F1", "F2")

FORM_VARIANTS = (
    "etre_de",
    "regner_loc",
    "faire",
    "intensive_de_le",
    "intensive_des",
    "quelque_chose",
    "locative_literary",
    "binding_avoir",
    "il_y_avoir",
)

# Vsup variants multiply the Vsup-bearing constructions A-D; the others are
# isolated modifier-substitute constructions.
VSUP_VARIANTS = (None, "etre_de", "regner_loc", "faire")

GRADES = ("ok", "?", "?*", "*")


def worst_grade(*grades: str) -> str:
    """Combine acceptability grades, keeping the worst one."""
    return max(grades, key=GRADES.index)


@dataclass(frozen=True)
class Token:
    kind: str  # det | slot | lex | prep
    value: str  # determiner value, slot role, function word, or preposition
    filler: Optional[str] = None

    def render(self) -> str:
        if self.kind == "det":
            return f"Det[{self.value}]"
        if self.kind == "prep":
            return f"Prep[{self.value}]"
        if self.kind == "slot":
            return f"{self.value}[{self.filler}]"
        return self.value

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        return self.render()


def det(value: str) -> Token:
    if value not in DET_VALUES:
        raise SchemaError(f"unknown determiner value: {value!r}")
    return Token("det", value)


def slot(role: str, filler: str) -> Token:
    if not filler:
        raise SchemaError(f"empty filler for slot {role}")
    return Token("slot", role, canonical_filler(filler))


def lex(word: str) -> Token:
    return Token("lex", word)


def prep(value: str) -> Token:
    return Token("prep", value)


COMMA = lex(",")


def canonical_filler(filler: str) -> str:
    """Fillers never contain whitespace; inner spaces become underscores."""
    return "_".join(filler.split())


@dataclass(frozen=True)
class FormId:
    """Identity of a construction form: base node plus optional variant tag.

    ``variant`` is either a support-verb alternant (etre_de, regner_loc,
    faire; None means avoir) or one of the isolated modifier-substitute
    constructions. ``dislocated`` flags outputs whose complement placement
    follows the dislocated analysis.
    """

    base: str
    variant: Optional[str] = None
    dislocated: bool = False

    def __post_init__(self) -> None:
        if self.base not in FORM_BASES:
            raise SchemaError(f"unknown form base: {self.base!r}")
        if self.variant is not None and self.variant not in FORM_VARIANTS:
            raise SchemaError(f"unknown form variant: {self.variant!r}")

    @property
    def label(self) -> str:
        out = self.base
        if self.variant:
            out += f"@{self.variant}"
        if self.dislocated:
            out += "/disloc"
        return out

    @property
    def has_vsup(self) -> bool:
        return self.base in ("A", "B", "C", "D") and self.variant in VSUP_VARIANTS

    def plain(self) -> "FormId":
        """Same form without the dislocation flag."""
        return FormId(self.base, self.variant)

    def sort_key(self) -> tuple:
        variants = (None,) + FORM_VARIANTS
        return (variants.index(self.variant), FORM_BASES.index(self.base), self.dislocated)

    @classmethod
    def parse(cls, label: str) -> "FormId":
        dislocated = label.endswith("/disloc")
        if dislocated:
            label = label[: -len("/disloc")]
        base, _, variant = label.partition("@")
        return cls(base, variant or None, dislocated)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SchematicSentence:
    """One or two clauses of tokens; two clauses only for the A construction."""

    clauses: tuple[tuple[Token, ...], ...]
    form_hint: Optional[FormId] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not self.clauses or any(len(c) == 0 for c in self.clauses):
            raise SchemaError("sentence must have at least one non-empty clause")

    @property
    def tokens(self) -> tuple[Token, ...]:
        """Flat token sequence with the clause-separating comma restored."""
        out: list[Token] = []
        for i, clause in enumerate(self.clauses):
            if i:
                out.append(COMMA)
            out.extend(clause)
        return tuple(out)

    def __str__(self) -> str:
        return render_schematic(self)


def sentence(tokens: Iterable[Token], form_hint: Optional[FormId] = None) -> SchematicSentence:
    """Build a sentence from a flat token stream, splitting clauses on ','."""
    clauses: list[tuple[Token, ...]] = []
    current: list[Token] = []
    for tok in tokens:
        if tok.kind == "lex" and tok.value == ",":
            if not current:
                raise SchemaError("empty clause before ','")
            clauses.append(tuple(current))
            current = []
        else:
            current.append(tok)
    if not current:
        raise SchemaError("empty clause at end of sentence")
    clauses.append(tuple(current))
    return SchematicSentence(tuple(clauses), form_hint)


_BRACKET_TOKEN = re.compile(r"^([A-Z][A-Za-z0-9]*)\[([^\[\]]*)\]$")


def _parse_token(text: str) -> Token:
    if text == ",":
        return COMMA
    if "[" in text or "]" in text:
        m = _BRACKET_TOKEN.match(text)
        if not m:
            raise SchemaError(f"unbalanced bracket in token: {text!r}")
        head, inner = m.group(1), m.group(2)
        if not inner:
            raise SchemaError(f"empty filler in token: {text!r}")
        if head == "Det":
            return det(inner)
        if head == "Prep":
            return prep(inner)
        # Any other capitalized head is a slot role; unknown roles parse fine
        # but will simply never be matched by the recognizer.
        return slot(head, inner)
    if text in LEX_WORDS:
        return lex(text)
    raise SchemaError(f"unknown token: {text!r}")


def _split_tokens(text: str) -> list[str]:
    """Split on whitespace, except inside [...] where spaces are data."""
    parts: list[str] = []
    current: list[str] = []
    depth = 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise SchemaError("unbalanced bracket: stray ']'")
        if ch.isspace() and depth == 0:
            if current:
                parts.append("".join(current))
                current = []
        else:
            current.append(ch)
    if depth != 0:
        raise SchemaError("unbalanced bracket: missing ']'")
    if current:
        parts.append("".join(current))
    return parts


def parse_schematic(text: str) -> SchematicSentence:
    """Parse schematic notation; canonicalizes spacing and bracket fillers."""
    parts = _split_tokens(text)
    if not parts:
        raise SchemaError("empty sentence")
    toks = [_parse_token(p) for p in parts]
    s = sentence(toks)
    return SchematicSentence(s.clauses, guess_form(s))


def render_schematic(s: SchematicSentence) -> str:
    return " ".join(tok.render() for tok in s.tokens)


def _find(clause: tuple[Token, ...], kind: str, value: Optional[str] = None) -> int:
    for i, tok in enumerate(clause):
        if tok.kind == kind and (value is None or tok.value == value):
            return i
    return -1


def _has_noun(clause: tuple[Token, ...]) -> bool:
    return any(t.kind == "slot" and t.value in NOUN_ROLES for t in clause)


def guess_form(s: SchematicSentence) -> Optional[FormId]:
    """Heuristic, lexicon-free shape classification used as a parsing hint."""
    if len(s.clauses) == 2:
        return FormId("A")
    if len(s.clauses) != 1:
        return None
    c = s.clauses[0]
    if c[0].kind == "lex" and c[0].value == "il_y":
        return FormId("A", "il_y_avoir")
    if any(t.kind == "lex" and t.value == "quelque_chose" for t in c):
        return FormId("C", "quelque_chose")
    if any(t.kind == "det" and t.value == "de_le" for t in c):
        return FormId("A", "intensive_de_le")
    if any(t.kind == "lex" and t.value == "lui" for t in c):
        return FormId("A", "binding_avoir")
    first_noun = next((i for i, t in enumerate(c) if t.kind == "slot" and t.value in NOUN_ROLES), -1)
    has_vsup = _find(c, "slot", "Vsup") >= 0
    if first_noun in (0, 1) and not (first_noun == 1 and has_vsup):
        # Noun-initial constructions (a free determiner may precede).
        rest = c[first_noun + 1 :]
        if _find(rest, "lex", "que") >= 0 or _find(rest, "lex", "dont") >= 0:
            return FormId("D")
        if _find(rest, "lex", "qui") >= 0 and _find(rest, "slot", "Vsup") >= 0:
            return FormId("D")
        if _find(rest, "lex", "de") >= 0:
            return FormId("E")
        if _find(rest, "lex", "être") >= 0 and _find(rest, "prep") >= 0:
            return FormId("A", "locative_literary")
        return None
    if has_vsup:
        if _find(c, "lex", "qui") >= 0:
            return FormId("B")
        if _has_noun(c) and _find(c, "slot", "Adj") >= 0:
            return FormId("C")
        return None
    if _find(c, "lex", "être") >= 0 and _find(c, "slot", "Adj") >= 0:
        if _has_noun(c):
            return FormId("F1")
        return FormId("F2")
    return None


def _tokens_match(a: Token, b: Token) -> bool:
    if a.kind != b.kind or a.value != b.value:
        return False
    if a.kind == "slot":
        return canonical_filler(a.filler or "") == canonical_filler(b.filler or "")
    return True


def equal_modulo_free_dets(observed: SchematicSentence, canonical: SchematicSentence) -> bool:
    """Structural equality of an observed sentence against a canonical one.

    Canonical renderings omit free determiners entirely, so a determiner in
    the observed sentence standing right before a noun slot that carries no
    determiner in the canonical form is skipped; an explicit ``Det[free]``
    also matches any fixed determiner. Fixed determiners (un, un certain,
    ce, ...) remain obligatory.
    """
    ta, tb = list(observed.tokens), list(canonical.tokens)
    i = j = 0
    while i < len(ta):
        a = ta[i]
        b = tb[j] if j < len(tb) else None
        if b is not None and _tokens_match(a, b):
            i += 1
            j += 1
            continue
        if a.kind == "det":
            if b is not None and b.kind == "det" and a.value == "free":
                i += 1
                j += 1
                continue
            before_noun = i + 1 < len(ta) and ta[i + 1].kind == "slot" and ta[i + 1].value in NOUN_ROLES
            if before_noun and (b is None or b.kind != "det"):
                i += 1
                continue
        return False
    return j == len(tb)
