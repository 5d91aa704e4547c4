"""Per-entry derivation graphs and generation of all licensed construction forms.

Every lexicon entry selects a directed acyclic graph over the construction
forms A..F2; edges are named transformations ([qui être z.], [Red. Vsup],
restructuration, support substitution, the binding operator avoir, ...).
Forms are generated either directly from templates (``derive_form``) or by
token-level rewriting along graph edges (``apply_transform``); the two routes
must agree, which the test suite checks by brute-force closure.

Form inventory per class:

* Npb and Napp entries accepting construction (A) use the full graph
  A -> B -> C, A -> D -> E -> F1/F2.
* Napp entries rejecting (A) but accepting (D) take D as the source, with a
  binding-operator edge D -> B.
* Napp entries rejecting both take E as the source, with E -> B.
* Nsup entries use B -> C -> F (when (B) holds, plus B -> D when (D) holds)
  or just C -> F.

Support-verb alternants (être de, régner Loc, faire) multiply the
Vsup-bearing forms A-D. The intensive, "quelque chose de Adj" and locative
constructions are isolated variants with no incoming derivation edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .lexicon import LexicalEntry, NounClass
from .schema import (
    COMMA,
    FORM_BASES,
    FormId,
    SchematicSentence,
    Token,
    VSUP_VARIANTS,
    det,
    lex,
    prep,
    sentence,
    slot,
    worst_grade,
)


class DerivationError(ValueError):
    """Base class for generation errors."""


class UnlicensedFormError(DerivationError):
    """Requested form is not licensed by the entry's property vector."""


class NumberError(DerivationError):
    """Requested number clashes with the entry's number properties."""


class TransformError(DerivationError):
    """Sentence does not match the transformation's source shape."""


TRANSFORMATIONS = (
    "relativize_into_first",
    "relativize_into_second",
    "reduce_relative",
    "reduce_vsup",
    "restructure",
    "substitute_support",
    "bind_avoir",
    "locative_swap",
    "il_y_insert",
)

# Isolated modifier-substitute variants and their licensing bits.
ISOLATED_VARIANTS = (
    ("intensive_de_le", "A"),
    ("intensive_des", "A"),
    ("quelque_chose", "C"),
    ("locative_literary", "A"),
    ("binding_avoir", "A"),
    ("il_y_avoir", "A"),
)

VSUP_WORD = {None: "avoir", "etre_de": "être_de", "regner_loc": "régner", "faire": "faire"}
WORD_VSUP = {v: k for k, v in VSUP_WORD.items()}


@dataclass(frozen=True)
class DerivationGraph:
    source: FormId
    nodes: frozenset[FormId]
    edges: frozenset[tuple[FormId, str, FormId]]

    def successors(self, form: FormId) -> list[tuple[str, FormId]]:
        out = [(name, dst) for src, name, dst in self.edges if src == form]
        out.sort(key=lambda e: (e[1].sort_key(), e[0]))
        return out

    def in_degree(self, form: FormId) -> int:
        return sum(1 for _, _, dst in self.edges if dst == form)

    def path_to(self, form: FormId) -> Optional[list[str]]:
        """Transformation names along a shortest path from the source."""
        if form == self.source:
            return []
        frontier = [(self.source, [])]
        seen = {self.source}
        while frontier:
            nxt = []
            for node, path in frontier:
                for name, dst in self.successors(node):
                    if dst == form:
                        return path + [name]
                    if dst not in seen:
                        seen.add(dst)
                        nxt.append((dst, path + [name]))
            frontier = nxt
        return None

    def base_nodes(self) -> list[str]:
        return [b for b in FORM_BASES if FormId(b) in self.nodes]


@lru_cache(maxsize=None)
def build_graph(entry: LexicalEntry) -> DerivationGraph:
    """Select the entry's derivation graph from its class and gate bits.

    Entries are immutable, so graphs are memoized; the cache is shared and
    thread-safe, and results are identical regardless of interleaving.
    """
    A, B, C, D, E, F1, F2 = (FormId(b) for b in FORM_BASES)
    edges: set[tuple[FormId, str, FormId]] = set()
    has_f1 = entry.bit("f1_prep")

    def restructure_edges(src: FormId, name: str) -> None:
        edges.add((src, name, F2))
        if has_f1:
            edges.add((src, name, F1))

    if entry.cls is NounClass.NSUP:
        if entry.bit("form_b"):
            source = B
            edges.add((B, "reduce_relative", C))
            if entry.bit("form_d"):
                edges.add((B, "relativize_into_second", D))
        else:
            source = C
        restructure_edges(C, "substitute_support")
    elif entry.cls is NounClass.NPB or entry.bit("form_a"):
        source = A
        edges.add((A, "relativize_into_first", B))
        edges.add((A, "relativize_into_second", D))
        edges.add((B, "reduce_relative", C))
        edges.add((D, "reduce_vsup", E))
        restructure_edges(E, "restructure")
    elif entry.bit("form_d"):
        source = D
        edges.add((D, "bind_avoir", B))
        edges.add((B, "reduce_relative", C))
        edges.add((D, "reduce_vsup", E))
        restructure_edges(E, "restructure")
    else:
        source = E
        edges.add((E, "bind_avoir", B))
        edges.add((B, "reduce_relative", C))
        restructure_edges(E, "restructure")

    nodes = {source}
    for src, _, dst in edges:
        nodes.add(src)
        nodes.add(dst)
    return DerivationGraph(source, frozenset(nodes), frozenset(edges))


def vsup_variants(entry: LexicalEntry) -> list[Optional[str]]:
    """Licensed support-verb alternants; None stands for avoir.

    Entries whose table row sets no Vsup bit at all (an attested oddity) fall
    back to avoir, graded '?'.
    """
    if entry.cls is NounClass.NPB:
        return [None]
    out: list[Optional[str]] = []
    if entry.bit("avoir"):
        out.append(None)
    if entry.bit("etre_de"):
        out.append("etre_de")
    if entry.cls is NounClass.NAPP and entry.bit("regner_loc"):
        out.append("regner_loc")
    if entry.bit("faire"):
        out.append("faire")
    return out or [None]


def _vsup_fallback(entry: LexicalEntry) -> bool:
    if entry.cls is NounClass.NPB:
        return False
    return not any(entry.bit(b) for b in ("avoir", "etre_de", "regner_loc", "faire"))


def variant_gate(entry: LexicalEntry, variant: str) -> tuple[bool, Optional[str]]:
    """Gate check for an isolated variant; returns (licensed, bit name)."""
    if variant in ("intensive_de_le", "intensive_des"):
        name = variant
        return entry.cls is NounClass.NAPP and entry.bit(name), name
    if variant == "quelque_chose":
        if entry.cls is NounClass.NPB:
            return False, None
        return entry.bit("quelque_chose"), "quelque_chose"
    if variant in ("locative_literary", "binding_avoir", "il_y_avoir"):
        return entry.cls is NounClass.NAPP and entry.bit("avoir"), "avoir"
    raise DerivationError(f"unknown variant: {variant!r}")


@lru_cache(maxsize=None)
def licensed_forms(entry: LexicalEntry) -> tuple[FormId, ...]:
    """All licensed (form, variant) pairs, in canonical order."""
    graph = build_graph(entry)
    out: list[FormId] = []
    for base in graph.base_nodes():
        if base in ("A", "B", "C", "D"):
            out.extend(FormId(base, v) for v in vsup_variants(entry))
        else:
            out.append(FormId(base))
    for variant, base in ISOLATED_VARIANTS:
        ok, _ = variant_gate(entry, variant)
        if ok:
            out.append(FormId(base, variant))
    out.sort(key=FormId.sort_key)
    return tuple(out)


def is_licensed(entry: LexicalEntry, form: FormId) -> bool:
    return form.plain() in licensed_forms(entry)


def gate_reason(entry: LexicalEntry, form: FormId) -> str:
    """Human-readable reason why a form is not licensed."""
    form = form.plain()
    if form.variant and form.variant not in VSUP_VARIANTS:
        ok, bit_name = variant_gate(entry, form.variant)
        if not ok and bit_name:
            pos = entry.bit_position(bit_name)
            if pos and not entry.bit(bit_name):
                return f"form {form.label} not licensed (bit {pos} = -)"
        return f"form {form.label} not licensed for class {entry.cls.value}"
    if form.variant in ("etre_de", "regner_loc", "faire") and not entry.bit(form.variant):
        pos = entry.bit_position(form.variant)
        return f"form {form.label} not licensed (bit {pos} = -)"
    checks = {
        NounClass.NAPP: {"A": "form_a", "D": "form_d", "F1": "f1_prep"},
        NounClass.NSUP: {"B": "form_b", "D": "form_d", "F1": "f1_prep"},
        NounClass.NPB: {"F1": "f1_prep"},
    }[entry.cls]
    bit_name = checks.get(form.base)
    if bit_name and not entry.bit(bit_name):
        pos = entry.bit_position(bit_name)
        return f"form {form.base} not licensed (bit {pos} = -)"
    return f"form {form.label} not licensed for this entry"


def grade_of(entry: LexicalEntry, form: FormId, *, free_adj: bool = False) -> str:
    """Acceptability grade of a licensed form for this entry."""
    override = entry.grade_override(form.plain().label)
    if override:
        return override
    grade = "ok"
    if entry.cls is NounClass.NPB:
        if form.base == "A":
            grade = worst_grade(grade, "?*")
        elif form.base == "D":
            grade = worst_grade(grade, "?")
        elif form.base == "F1":
            grade = worst_grade(grade, "?")
    if form.variant in ("locative_literary", "binding_avoir", "il_y_avoir"):
        grade = worst_grade(grade, "?")
    if form.variant == "faire" and form.base == "D":
        grade = worst_grade(grade, "?")
    if form.has_vsup and form.variant is None and _vsup_fallback(entry):
        grade = worst_grade(grade, "?")
    if free_adj:
        grade = worst_grade(grade, "?")
    return grade


def _effective_number(entry: LexicalEntry, number: Optional[str]) -> str:
    if number not in (None, "sing", "plur"):
        raise NumberError(f"unknown number: {number!r}")
    if entry.plural_only:
        if number == "sing":
            raise NumberError(f"{entry.lemma}: plural-only entry requested singular")
        return "plur"
    if number == "plur":
        if not entry.bit("plur"):
            raise NumberError(f"{entry.lemma}: entry does not pluralize")
        return "plur"
    return "sing"


def _dets(entry: LexicalEntry, number: str) -> tuple[str, str]:
    """(determiner of the source A clause, determiner of B/C)."""
    if entry.cls is NounClass.NPB:
        det_a = "des" if number == "plur" else "un"
    else:
        det_a = "certains" if number == "plur" else "un_certain"
    det_bc = "des" if number == "plur" else "un"
    return det_a, det_bc


def derive_form(
    entry: LexicalEntry,
    form: FormId,
    n0: str,
    adj: Optional[str] = None,
    *,
    number: Optional[str] = None,
    f1_prep: Optional[str] = None,
) -> SchematicSentence:
    """Render one licensed form as a schematic sentence.

    ``adj`` may be omitted only for the modifier-substitute variants that do
    not contain the adjective (intensive and locative constructions).
    """
    plain = form.plain()
    if not is_licensed(entry, plain):
        raise UnlicensedFormError(gate_reason(entry, plain))
    num = _effective_number(entry, number)
    det_a, det_bc = _dets(entry, num)
    noun = slot(entry.cls.role, entry.lemma)
    n0_tok = slot("N0", n0)
    needs_adj = plain.variant not in (
        "intensive_de_le",
        "intensive_des",
        "locative_literary",
        "binding_avoir",
        "il_y_avoir",
    )
    if needs_adj and not adj:
        raise DerivationError(f"form {plain.label} requires an adjective")
    adj_tok = slot("Adj", adj) if adj else None
    etre = lex("être")

    variant = plain.variant
    base = plain.base

    if variant in (None, "etre_de", "faire") or (variant == "regner_loc"):
        vsup = slot("Vsup", VSUP_WORD[variant])
    else:
        vsup = slot("Vsup", "avoir")

    toks: list[Token]
    if variant == "intensive_de_le":
        toks = [n0_tok, vsup, det("de_le"), noun]
    elif variant == "intensive_des":
        toks = [n0_tok, vsup, det("des"), noun]
    elif variant == "quelque_chose":
        toks = [n0_tok, vsup, lex("quelque_chose"), lex("de"), adj_tok]
    elif variant == "locative_literary":
        toks = [det(det_a), noun, etre, prep("en"), n0_tok]
    elif variant == "binding_avoir":
        toks = [n0_tok, vsup, det(det_a), noun, prep("en"), lex("lui")]
    elif variant == "il_y_avoir":
        toks = [lex("il_y"), vsup, det(det_a), noun, prep("en"), n0_tok]
    elif variant == "regner_loc":
        loc = prep("Loc")
        if base == "A":
            toks = [det(det_a), noun, vsup, loc, n0_tok, COMMA, det("ce"), noun, etre, adj_tok]
        elif base == "B":
            toks = [det(det_bc), noun, lex("qui"), etre, adj_tok, vsup, loc, n0_tok]
        elif base == "C":
            toks = [det(det_bc), noun, adj_tok, vsup, loc, n0_tok]
        else:  # D
            toks = [noun, lex("qui"), vsup, loc, n0_tok, etre, adj_tok]
    elif base == "A":
        toks = [n0_tok, vsup, det(det_a), noun, COMMA, det("ce"), noun, etre, adj_tok]
    elif base == "B":
        toks = [n0_tok, vsup, det(det_bc), noun, lex("qui"), etre, adj_tok]
    elif base == "C":
        toks = [n0_tok, vsup, det(det_bc), noun, adj_tok]
    elif base == "D":
        if variant == "etre_de":
            toks = [noun, lex("dont"), etre, n0_tok, etre, adj_tok]
        else:
            toks = [noun, lex("que"), n0_tok, vsup, etre, adj_tok]
    elif base == "E":
        toks = [noun, lex("de"), n0_tok, etre, adj_tok]
    elif base == "F1":
        p = f1_prep or entry.f1_preps[0]
        toks = [n0_tok, etre, adj_tok, prep(p), noun]
    else:  # F2
        toks = [n0_tok, etre, adj_tok]

    return sentence(toks, form_hint=form)


@dataclass(frozen=True)
class Paraphrase:
    form: FormId
    sent: SchematicSentence
    grade: str


def paraphrase_set(
    entry: LexicalEntry,
    n0: str,
    adj: str,
    *,
    number: Optional[str] = None,
) -> list[Paraphrase]:
    """One sentence per licensed derivation-graph form.

    Ordered A, B, C, D, E, F1, F2, then support-verb alternants; the
    restructured F1 yields one sentence per stored preposition. The isolated
    variants are produced by :func:`variant_forms`, not here: they are not
    reachable from the source by any transformation.
    """
    free = not entry.matches_adjective(adj)
    out: list[Paraphrase] = []
    for form in licensed_forms(entry):
        if form.variant is not None and form.variant not in VSUP_VARIANTS:
            continue
        grade = grade_of(entry, form, free_adj=free)
        if form.base == "F1":
            for p in entry.f1_preps:
                out.append(Paraphrase(form, derive_form(entry, form, n0, adj, number=number, f1_prep=p), grade))
        else:
            out.append(Paraphrase(form, derive_form(entry, form, n0, adj, number=number), grade))
    return out


def variant_forms(
    entry: LexicalEntry,
    n0: str,
    adj: Optional[str] = None,
    *,
    number: Optional[str] = None,
) -> list[Paraphrase]:
    """The gated isolated variants (intensive, quelque chose, locative family)."""
    free = bool(adj) and not entry.matches_adjective(adj)
    out: list[Paraphrase] = []
    for variant, base in ISOLATED_VARIANTS:
        ok, _ = variant_gate(entry, variant)
        if not ok:
            continue
        form = FormId(base, variant)
        if variant == "quelque_chose":
            if not adj:
                continue
            s = derive_form(entry, form, n0, adj, number=number)
        else:
            s = derive_form(entry, form, n0, number=number)
        out.append(Paraphrase(form, s, grade_of(entry, form, free_adj=free and variant == "quelque_chose")))
    return out


def derivation_path(entry: LexicalEntry, form: FormId) -> list[str]:
    """Transformation names leading from the entry's source to this form."""
    plain = form.plain()
    if plain.variant in VSUP_VARIANTS:
        path = build_graph(entry).path_to(FormId(plain.base))
        if path is None:
            raise UnlicensedFormError(gate_reason(entry, plain))
        return path
    return {
        "intensive_de_le": [],
        "intensive_des": [],
        "quelque_chose": [],
        "locative_literary": ["locative_swap"],
        "binding_avoir": ["locative_swap", "bind_avoir"],
        "il_y_avoir": ["locative_swap", "il_y_insert"],
    }[plain.variant]


# ---------------------------------------------------------------------------
# Token-level transformations
# ---------------------------------------------------------------------------


def _is_noun(tok: Token) -> bool:
    return tok.kind == "slot" and tok.value in ("Npb", "Napp", "Nsup")


def _is_w(tok: Token) -> bool:
    return tok.kind == "slot" and tok.value in ("W", "W1", "W2")


def _noun_index(toks: tuple[Token, ...]) -> int:
    for i, tok in enumerate(toks):
        if _is_noun(tok):
            return i
    raise TransformError("no noun slot in clause")


def _after_w(toks: tuple[Token, ...], i: int) -> int:
    """Index just past the noun at i and any complements glued to it."""
    j = i + 1
    while j < len(toks) and _is_w(toks[j]):
        j += 1
    return j


def _vsup_of(toks: Iterable[Token]) -> Optional[str]:
    for tok in toks:
        if tok.kind == "slot" and tok.value == "Vsup":
            return tok.filler
    return None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise TransformError(message)


def _check_target(entry: LexicalEntry, base: str) -> None:
    if FormId(base) not in build_graph(entry).nodes:
        raise TransformError(f"form {base} is not in the derivation graph of {entry.lemma}")


def _find_slot(toks: Iterable[Token], role: str, message: str) -> Token:
    for tok in toks:
        if tok.kind == "slot" and tok.value == role:
            return tok
    raise TransformError(message)


def _a_clauses(s: SchematicSentence) -> tuple[tuple[Token, ...], tuple[Token, ...]]:
    _require(len(s.clauses) == 2, "source is not a two-clause (A) sentence")
    c1, c2 = s.clauses
    _require(len(c2) >= 4 and c2[0].kind == "det" and c2[0].value == "ce", "second clause must open with Det[ce]")
    _require(_is_noun(c2[1]), "second clause must repeat the noun")
    return c1, c2


def _bc_det(entry: LexicalEntry, source_det: str) -> str:
    if source_det in ("certains", "des"):
        return "des"
    return "un"


def _relativize_into_first(s: SchematicSentence, entry: LexicalEntry) -> SchematicSentence:
    _check_target(entry, "B")
    c1, c2 = _a_clauses(s)
    i = _noun_index(c1)
    j = _after_w(c1, i)
    head = [tok for tok in c1[:j]]
    rest = list(c1[j:])
    for k, tok in enumerate(head):
        if tok.kind == "det":
            head[k] = det(_bc_det(entry, tok.value))
    toks = head + [lex("qui")] + list(c2[2:]) + rest
    variant = WORD_VSUP.get(_vsup_of(c1) or "avoir")
    return sentence(toks, FormId("B", variant))


def _relativize_into_second(s: SchematicSentence, entry: LexicalEntry) -> SchematicSentence:
    _check_target(entry, "D")
    if len(s.clauses) == 2:
        c1, c2 = _a_clauses(s)
        tail = list(c2[2:])
    else:
        # Support-noun path: (B) hosts the relative directly.
        _require(entry.cls is NounClass.NSUP, "a one-clause relativization source must be a support-noun (B)")
        clause = s.clauses[0]
        qui = next((k for k, t in enumerate(clause) if t.kind == "lex" and t.value == "qui"), -1)
        _require(qui > 0, "source is neither (A) nor a relative (B)")
        _require(
            qui + 1 < len(clause) and clause[qui + 1].kind == "lex" and clause[qui + 1].value == "être",
            "relative clause must be 'qui être ...'",
        )
        c1, tail = clause[:qui], [lex("être")] + list(clause[qui + 2 :])
    vsup_word = _vsup_of(c1)
    i = _noun_index(c1)
    j = _after_w(c1, i)
    noun_part = list(c1[i:j])
    if vsup_word == "être_de":
        n0 = _find_slot(c1, "N0", "source clause lacks N0")
        toks = noun_part + [lex("dont"), lex("être"), n0] + tail
    elif vsup_word == "régner":
        after = [tok for tok in c1[j:] if tok.kind in ("slot", "prep")]
        _require(len(after) >= 3, "régner clause must carry Loc N0")
        toks = noun_part + [lex("qui")] + after + tail
    else:
        n0 = _find_slot(c1, "N0", "source clause lacks N0")
        vsup = _find_slot(c1, "Vsup", "source clause lacks a support verb")
        toks = noun_part + [lex("que"), n0, vsup] + tail
    return sentence(toks, FormId("D", WORD_VSUP.get(vsup_word or "avoir")))


def _reduce_relative(s: SchematicSentence, entry: LexicalEntry) -> SchematicSentence:
    _check_target(entry, "C")
    _require(len(s.clauses) == 1, "(B) is a one-clause form")
    clause = s.clauses[0]
    for k in range(len(clause) - 1):
        if (
            clause[k].kind == "lex"
            and clause[k].value == "qui"
            and clause[k + 1].kind == "lex"
            and clause[k + 1].value == "être"
        ):
            toks = list(clause[:k]) + list(clause[k + 2 :])
            variant = WORD_VSUP.get(_vsup_of(clause) or "avoir")
            return sentence(toks, FormId("C", variant))
    raise TransformError("no 'qui être' sequence to delete")


def _reduce_vsup(s: SchematicSentence, entry: LexicalEntry) -> SchematicSentence:
    _check_target(entry, "E")
    _require(len(s.clauses) == 1, "(D) is a one-clause form")
    clause = list(s.clauses[0])
    _require(clause and _is_noun(clause[0]), "(D) opens with the noun")
    for k, tok in enumerate(clause):
        if tok.kind == "lex" and tok.value == "que":
            out = clause[:k] + [lex("de")]
            rest = clause[k + 1 :]
            rest = [t for t in rest if not (t.kind == "slot" and t.value == "Vsup")]
            return sentence(out + rest, FormId("E"))
        if tok.kind == "lex" and tok.value == "dont":
            _require(
                k + 1 < len(clause) and clause[k + 1].kind == "lex" and clause[k + 1].value == "être",
                "'dont' must be followed by 'être'",
            )
            return sentence(clause[:k] + [lex("de")] + clause[k + 2 :], FormId("E"))
        if tok.kind == "lex" and tok.value == "qui":
            rest = clause[k + 1 :]
            _require(
                rest and rest[0].kind == "slot" and rest[0].value == "Vsup",
                "locative relative must be 'qui Vsup Loc N0'",
            )
            _require(len(rest) >= 2 and rest[1].kind == "prep", "locative relative lacks its preposition")
            return sentence(clause[:k] + [lex("de")] + rest[2:], FormId("E"))
    raise TransformError("no relative marker to reduce")


def _n0_and_tail(clause: list[Token], start: int) -> tuple[Token, list[Token]]:
    n0 = clause[start]
    _require(n0.kind == "slot" and n0.value == "N0", "expected the N0 slot")
    return n0, clause[start + 1 :]


def _restructure(
    s: SchematicSentence, entry: LexicalEntry, target_base: str, f1_prep: Optional[str]
) -> SchematicSentence:
    _require(len(s.clauses) == 1, "(E) is a one-clause form")
    clause = list(s.clauses[0])
    _require(clause and _is_noun(clause[0]), "(E) opens with the noun")
    i = _noun_index(tuple(clause))
    j = _after_w(tuple(clause), i)
    noun_part = clause[i:j]
    _require(j < len(clause) and clause[j].kind == "lex" and clause[j].value == "de", "(E) requires 'de N0'")
    n0, tail = _n0_and_tail(clause, j + 1)
    etre_idx = next((k for k, t in enumerate(tail) if t.kind == "lex" and t.value == "être"), -1)
    _require(etre_idx >= 0, "(E) requires 'être Adj'")
    adj_part = tail[etre_idx:]
    if target_base == "F2":
        return sentence([n0] + adj_part, FormId("F2"))
    if not entry.bit("f1_prep"):
        raise TransformError(gate_reason(entry, FormId("F1")))
    p = f1_prep or entry.f1_preps[0]
    return sentence([n0] + adj_part + [prep(p)] + noun_part, FormId("F1"))


def _substitute_support(
    s: SchematicSentence, entry: LexicalEntry, target_base: str, f1_prep: Optional[str]
) -> SchematicSentence:
    _require(entry.cls is NounClass.NSUP, "support substitution only applies to support nouns")
    _require(len(s.clauses) == 1, "(C) is a one-clause form")
    clause = list(s.clauses[0])
    _require(clause and clause[0].kind == "slot" and clause[0].value == "N0", "(C) opens with N0")
    i = _noun_index(tuple(clause))
    j = _after_w(tuple(clause), i)
    rest = clause[j:]
    _require(rest and rest[0].kind == "slot" and rest[0].value == "Adj", "(C) requires 'Nsup Adj'")
    n0 = clause[0]
    if target_base == "F2":
        return sentence([n0, lex("être")] + rest, FormId("F2"))
    if not entry.bit("f1_prep"):
        raise TransformError(gate_reason(entry, FormId("F1")))
    p = f1_prep or entry.f1_preps[0]
    return sentence([n0, lex("être")] + rest + [prep(p)] + clause[i:j], FormId("F1"))


def _bind_avoir(
    s: SchematicSentence, entry: LexicalEntry, target_variant: Optional[str]
) -> SchematicSentence:
    _require(len(s.clauses) == 1, "binding applies to one-clause forms")
    _check_target(entry, "B")
    clause = list(s.clauses[0])
    det_bc = "des" if entry.plural_only else "un"
    # Literary locative 'Det N être Loc N0' -> Det N0 avoir un certain N Loc lui.
    if (
        len(clause) == 5
        and clause[0].kind == "det"
        and _is_noun(clause[1])
        and clause[2].kind == "lex"
        and clause[2].value == "être"
        and clause[3].kind == "prep"
        and clause[4].kind == "slot"
        and clause[4].value == "N0"
    ):
        toks = [clause[4], slot("Vsup", "avoir"), clause[0], clause[1], clause[3], lex("lui")]
        return sentence(toks, FormId("A", "binding_avoir"))
    _require(clause and _is_noun(clause[0]), "binding source opens with the noun")
    i = _noun_index(tuple(clause))
    j = _after_w(tuple(clause), i)
    noun_part = clause[i:j]
    marker = clause[j] if j < len(clause) else None
    _require(marker is not None and marker.kind == "lex", "binding source must be (D) or (E)")
    if target_variant == "keep":
        if marker.value == "que":
            target_variant = WORD_VSUP.get(_vsup_of(clause) or "avoir")
        elif marker.value == "dont":
            target_variant = "etre_de"
        else:
            target_variant = vsup_variants(entry)[0]
        if target_variant == "regner_loc":
            target_variant = None
    if marker.value == "que":  # (D) Napp que N0 Vsup être Adj
        n0, tail = _n0_and_tail(clause, j + 1)
        tail = [t for t in tail if not (t.kind == "slot" and t.value == "Vsup")]
    elif marker.value == "dont":  # (D) Napp dont être N0 être Adj
        _require(
            j + 2 < len(clause) and clause[j + 1].kind == "lex" and clause[j + 1].value == "être",
            "'dont' must be followed by 'être'",
        )
        n0, tail = _n0_and_tail(clause, j + 2)
    elif marker.value == "de":  # (E) Napp de N0 être Adj
        n0, tail = _n0_and_tail(clause, j + 1)
    else:
        raise TransformError("binding source must be (D) or (E)")
    _require(tail and tail[0].kind == "lex" and tail[0].value == "être", "binding target keeps 'être Adj'")
    if target_variant == "etre_de":
        vsup = slot("Vsup", "être_de")
    elif target_variant == "faire":
        vsup = slot("Vsup", "faire")
    else:
        target_variant = None
        vsup = slot("Vsup", "avoir")
    toks = [n0, vsup, det(det_bc)] + noun_part + [lex("qui")] + tail
    return sentence(toks, FormId("B", target_variant))


def _locative_swap(s: SchematicSentence, entry: LexicalEntry) -> SchematicSentence:
    ok, _bit = variant_gate(entry, "locative_literary")
    _require(ok, "locative variant requires an avoir-entry of the Napp class")
    c1, _ = _a_clauses(s)
    _require(_vsup_of(c1) == "avoir", "locative variant requires Vsup avoir")
    i = _noun_index(c1)
    det_tok = next((t for t in c1 if t.kind == "det"), None)
    n0 = next(t for t in c1 if t.kind == "slot" and t.value == "N0")
    _require(det_tok is not None, "source clause lacks a determiner")
    toks = [det_tok, c1[i], lex("être"), prep("en"), n0]
    return sentence(toks, FormId("A", "locative_literary"))


def _il_y_insert(s: SchematicSentence, entry: LexicalEntry) -> SchematicSentence:
    _require(len(s.clauses) == 1, "source must be the literary locative")
    clause = list(s.clauses[0])
    _require(
        len(clause) == 5
        and clause[0].kind == "det"
        and _is_noun(clause[1])
        and clause[2].kind == "lex"
        and clause[2].value == "être"
        and clause[3].kind == "prep",
        "source must be 'Det N être Loc N0'",
    )
    toks = [lex("il_y"), slot("Vsup", "avoir"), clause[0], clause[1], clause[3], clause[4]]
    return sentence(toks, FormId("A", "il_y_avoir"))


def apply_transform(
    s: SchematicSentence,
    transformation: str,
    entry: LexicalEntry,
    *,
    target_base: Optional[str] = None,
    target_variant: Optional[str] = "keep",
    f1_prep: Optional[str] = None,
) -> SchematicSentence:
    """Token-level rewrite of ``s`` along one named transformation.

    Raises TransformError when ``s`` does not have the source shape. The
    restructuring and support-substitution steps produce F2 by default;
    pass ``target_base='F1'`` for the variant retaining the noun. The binding
    operator reattaches the entry's first licensed support verb by default;
    pass ``target_variant`` to select another licensed alternant.
    """
    if transformation == "relativize_into_first":
        return _relativize_into_first(s, entry)
    if transformation == "relativize_into_second":
        return _relativize_into_second(s, entry)
    if transformation == "reduce_relative":
        return _reduce_relative(s, entry)
    if transformation == "reduce_vsup":
        return _reduce_vsup(s, entry)
    if transformation == "restructure":
        return _restructure(s, entry, target_base or "F2", f1_prep)
    if transformation == "substitute_support":
        return _substitute_support(s, entry, target_base or "F2", f1_prep)
    if transformation == "bind_avoir":
        return _bind_avoir(s, entry, target_variant)
    if transformation == "locative_swap":
        return _locative_swap(s, entry)
    if transformation == "il_y_insert":
        return _il_y_insert(s, entry)
    raise DerivationError(f"unknown transformation: {transformation!r}")
