"""Command-line front end: batch generation, recognition, lexicon QA.

Exit codes: 0 success; 1 I/O or malformed input; 2 unknown lemma;
3 unlicensed form (or, under --strict, a dropped complement); 4 no match;
5 lexicon validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .complements import attach_complements, attachment_grade, placement_combinations
from .derivation import (
    vsup_variants,
    DerivationError,
    derivation_path,
    gate_reason,
    grade_of,
    is_licensed,
    licensed_forms,
    paraphrase_set,
    variant_forms,
)
from .lexicon import (
    BIT_LEGEND,
    ComplementSpec,
    LexiconError,
    NounClass,
    load_bundled,
    load_directory,
    validate_lexicon,
)
from .recognizer import normalize, recognize
from .schema import FormId, SchemaError, parse_schematic, render_schematic, worst_grade

EXIT_OK = 0
EXIT_IO = 1
EXIT_UNKNOWN_LEMMA = 2
EXIT_UNLICENSED = 3
EXIT_NO_MATCH = 4
EXIT_INVALID = 5


def _load(args):
    if args.lexicon:
        return load_directory(args.lexicon)
    return load_bundled()


def _fold(text: str) -> str:
    import unicodedata

    text = text.replace("œ", "oe").replace("æ", "ae")
    decomposed = unicodedata.normalize("NFD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def _find_entries(lex, lemma: str):
    """Exact lookup first; fall back to accent/ligature-insensitive matching."""
    entries = lex.query(lemma)
    if entries:
        return entries
    want = _fold(lemma.replace("_", " "))
    return [e for e in lex if _fold(e.lemma) == want]


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit(record: dict, machine: bool, human_line: str) -> None:
    if machine:
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(human_line)


def _complement_specs(entry, args) -> tuple[list, list[str]]:
    """Build (spec, filler) pairs from --w/--w1/--w2 options."""
    specs = []
    warnings = []
    for filler in args.w or []:
        essential = entry.essential_spec()
        if essential is not None:
            prep = filler.split(":", 1)[0]
            if essential.prep is not None and prep != essential.prep:
                warnings.append(
                    f"complement preposition {prep!r} differs from the entry's {essential.prep!r}"
                )
            specs.append((essential, filler))
        else:
            specs.append((ComplementSpec("essential_adj"), filler))
    for filler in args.w1 or []:
        specs.append((ComplementSpec("adverbial_napp"), filler))
    for filler in args.w2 or []:
        specs.append((ComplementSpec("adverbial_adj"), filler))
    return specs, warnings


def cmd_generate(args) -> int:
    try:
        lex = _load(args)
    except (LexiconError, OSError) as exc:
        return _fail(str(exc), EXIT_IO)
    entries = _find_entries(lex, args.lemma)
    if not entries:
        return _fail(f"unknown lemma: {args.lemma!r}", EXIT_UNKNOWN_LEMMA)

    form_filter: Optional[FormId] = None
    filter_has_variant = False
    if args.form:
        try:
            form_filter = FormId.parse(args.form)
            filter_has_variant = "@" in args.form
        except SchemaError as exc:
            return _fail(str(exc), EXIT_UNLICENSED)

    printed = 0
    for entry in entries:
        specs, warnings = _complement_specs(entry, args)
        for w in warnings:
            _warn(w)
        try:
            items = paraphrase_set(entry, args.n0, args.adj, number=args.number)
            items += variant_forms(entry, args.n0, args.adj, number=args.number)
        except DerivationError as exc:
            return _fail(str(exc), EXIT_UNLICENSED)
        primary = vsup_variants(entry)[0]
        if form_filter is not None:
            if filter_has_variant:
                items = [it for it in items if it.form.plain() == form_filter.plain()]
            else:
                items = [
                    it
                    for it in items
                    if it.form.base == form_filter.base
                    and (args.variants or it.form.variant in (primary, None) or it.form.base not in "ABCD")
                ]
            if not items:
                if len(entries) == 1 or all(
                    not is_licensed(e, form_filter) for e in entries
                ):
                    return _fail(gate_reason(entry, form_filter), EXIT_UNLICENSED)
                continue
        elif not args.variants:
            # One line per construction: the primary support verb for A-D,
            # plus the Vsup-free forms. --variants expands the alternants.
            items = [
                it
                for it in items
                if it.form.variant == primary
                or (it.form.variant is None and it.form.base in ("E", "F1", "F2"))
            ]
        if not args.machine and len(entries) > 1:
            print(f"# {entry.lemma} ({entry.cls.value}) {', '.join(entry.adjectives)}")
        for item in items:
            out_specs = specs
            if item.form.variant is not None and item.form.variant not in (None, "etre_de", "regner_loc", "faire"):
                out_specs = []
            dropped = []
            if item.form.base == "F2":
                kept = []
                for spec, filler in out_specs:
                    if spec.kind == "essential_napp" and not spec.survives_f2:
                        dropped.append(filler)
                    else:
                        kept.append((spec, filler))
                out_specs = kept
            if dropped:
                if args.strict:
                    return _fail("essential complement dropped in F2", EXIT_UNLICENSED)
                _warn("essential complement dropped in F2")
            attached = attach_complements(item.sent, out_specs, entry, item.form) if out_specs else [item.sent]
            combos = placement_combinations(entry, item.form, out_specs) if out_specs else [()]
            for sent, combo in zip(attached, combos):
                grade = worst_grade(item.grade, attachment_grade(combo))
                if args.no_grades and grade != "ok":
                    continue
                dislocated = any(p.dislocated for p in combo)
                form = FormId(item.form.base, item.form.variant, dislocated)
                _emit(
                    {
                        "lemma": entry.lemma,
                        "form": form.label,
                        "grade": grade,
                        "tokens": render_schematic(sent),
                        "derivation_path": derivation_path(entry, item.form),
                    },
                    args.machine,
                    f"{form.label}\t{grade}\t{render_schematic(sent)}",
                )
                printed += 1
    return EXIT_OK if printed else EXIT_UNLICENSED


def cmd_recognize(args) -> int:
    try:
        lex = _load(args)
    except (LexiconError, OSError) as exc:
        return _fail(str(exc), EXIT_IO)
    try:
        s = parse_schematic(args.sentence)
    except SchemaError as exc:
        return _fail(str(exc), EXIT_IO)
    matches = recognize(s, lex, allow_free_adj=args.free_adj)
    for m in matches:
        bindings = {"n0": m.bindings.n0, "adj": m.bindings.adj}
        if m.bindings.complements:
            bindings["complements"] = [list(c) for c in m.bindings.complements]
        human = (
            f"{m.entry.lemma}\t{m.entry.cls.value}\t{m.form.label}\t{m.grade}\t"
            + " ".join(f"{k}={v}" for k, v in bindings.items() if v)
        )
        _emit(
            {
                "lemma": m.entry.lemma,
                "class": m.entry.cls.value,
                "form": m.form.label,
                "grade": m.grade,
                "bindings": bindings,
            },
            args.machine,
            human,
        )
    if not matches:
        print("no match", file=sys.stderr)
        return EXIT_NO_MATCH
    return EXIT_OK


def cmd_normalize(args) -> int:
    try:
        lex = _load(args)
    except (LexiconError, OSError) as exc:
        return _fail(str(exc), EXIT_IO)
    try:
        s = parse_schematic(args.sentence)
    except SchemaError as exc:
        return _fail(str(exc), EXIT_IO)
    sentences = normalize(s, lex, allow_free_adj=args.free_adj)
    for sent in sentences:
        _emit({"tokens": render_schematic(sent)}, args.machine, render_schematic(sent))
    if not sentences:
        print("no match", file=sys.stderr)
        return EXIT_NO_MATCH
    return EXIT_OK


def cmd_forms(args) -> int:
    try:
        lex = _load(args)
    except (LexiconError, OSError) as exc:
        return _fail(str(exc), EXIT_IO)
    entries = _find_entries(lex, args.lemma)
    if not entries:
        return _fail(f"unknown lemma: {args.lemma!r}", EXIT_UNKNOWN_LEMMA)
    for entry in entries:
        if not args.machine and len(entries) > 1:
            print(f"# {entry.lemma} ({entry.cls.value}) {', '.join(entry.adjectives)}")
        for form in licensed_forms(entry):
            path = derivation_path(entry, form)
            grade = grade_of(entry, form)
            _emit(
                {
                    "lemma": entry.lemma,
                    "form": form.label,
                    "grade": grade,
                    "derivation_path": path,
                },
                args.machine,
                f"{form.label}\t{grade}\t{' . '.join(path) if path else '-'}",
            )
    return EXIT_OK


def cmd_validate(args) -> int:
    try:
        lex = _load(args)
    except (LexiconError, OSError) as exc:
        return _fail(str(exc), EXIT_INVALID)
    diagnostics = validate_lexicon(lex)
    for d in diagnostics:
        _emit(
            {
                "severity": d.severity,
                "lemma": d.entry.lemma if d.entry else None,
                "message": d.message,
            },
            args.machine,
            str(d),
        )
    errors = [d for d in diagnostics if d.severity == "error"]
    if errors or (args.strict and diagnostics):
        return EXIT_INVALID
    return EXIT_OK


def cmd_stats(args) -> int:
    try:
        lex = _load(args)
    except (LexiconError, OSError) as exc:
        return _fail(str(exc), EXIT_IO)
    counts = {cls: lex.count(cls) for cls in NounClass}
    print(", ".join(f"{cls.value} {counts[cls]}" for cls in NounClass))
    if args.machine:
        print(json.dumps({cls.value: counts[cls] for cls in NounClass}, ensure_ascii=False))
        return EXIT_OK
    for cls in NounClass:
        entries = [e for e in lex if e.cls is cls]
        if not entries:
            continue
        print(f"{cls.value} property frequencies:")
        for position, legend in enumerate(BIT_LEGEND[cls], start=1):
            plus = sum(1 for e in entries if e.props.plus(position))
            print(f"  {position:2d} {legend}: {plus}/{len(entries)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", metavar="DIR", help="load lexicon tables from DIR instead of the bundled corpus")
    common.add_argument("--machine", action="store_true", help="line-delimited JSON output")
    common.add_argument("--strict", action="store_true", help="treat warnings as errors")
    grades = common.add_mutually_exclusive_group()
    grades.add_argument("--grades", dest="no_grades", action="store_false", default=False,
                        help="include ?/?* graded forms (default)")
    grades.add_argument("--no-grades", dest="no_grades", action="store_true",
                        help="only fully acceptable forms")
    common.add_argument("--variants", action="store_true",
                        help="include intensive/literary variant constructions")

    parser = argparse.ArgumentParser(
        prog="lexgram",
        description="Generate and recognize French appropriate-noun constructions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="print all licensed forms of an entry")
    p.add_argument("lemma")
    p.add_argument("--n0", required=True, help="subject filler")
    p.add_argument("--adj", required=True, help="adjective filler")
    p.add_argument("--form", help="only this form (e.g. A, D@etre_de)")
    p.add_argument("--number", choices=["sing", "plur"])
    p.add_argument("--w", action="append", metavar="PREP:FILLER", help="essential complement")
    p.add_argument("--w1", action="append", metavar="PREP:FILLER", help="adverbial complement of the noun")
    p.add_argument("--w2", action="append", metavar="PREP:FILLER", help="adverbial complement of the adjective")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("recognize", parents=[common], help="match a schematic sentence against the lexicon")
    p.add_argument("sentence")
    p.add_argument("--free-adj", action="store_true", help="accept adjectives not listed for the entry")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("normalize", parents=[common], help="re-expand a sentence to its source constructions")
    p.add_argument("sentence")
    p.add_argument("--free-adj", action="store_true")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("forms", parents=[common], help="list licensed forms of an entry")
    p.add_argument("lemma")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("validate", parents=[common], help="check the lexicon tables")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", parents=[common], help="corpus counts and property frequencies")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
        sys.stderr.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
