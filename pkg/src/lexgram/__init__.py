"""lexgram: a lexicon-grammar engine for French appropriate-noun constructions.

Given one of the ~300 lexicon entries (nouns of parts of the body, nouns
fitting ``Det Napp de Det N0 être Adj``, and support nouns) and slot fillers,
the engine generates every licensed construction form - support-verb
sentence, relative, reduced relative, restructured adjectival sentence - with
correct complement placement, and conversely recognizes which entry and form
a schematic sentence instantiates.
"""

__version__ = "0.1.0"

from .complements import (
    Family,
    Placement,
    PlacementError,
    attach_complements,
    complement_slots,
    family_of,
    load_families,
)
from .derivation import (
    DerivationError,
    DerivationGraph,
    NumberError,
    Paraphrase,
    TransformError,
    TRANSFORMATIONS,
    UnlicensedFormError,
    apply_transform,
    build_graph,
    derivation_path,
    derive_form,
    grade_of,
    licensed_forms,
    paraphrase_set,
    variant_forms,
    vsup_variants,
)
from .lexicon import (
    ComplementSpec,
    Diagnostic,
    LexicalEntry,
    Lexicon,
    LexiconError,
    NounClass,
    PropertyVector,
    dump_lexicon,
    load_bundled,
    load_directory,
    load_lexicon,
    validate_lexicon,
)
from .recognizer import Bindings, Match, normalize, recognize, source_form
from .schema import (
    FormId,
    SchemaError,
    SchematicSentence,
    Token,
    equal_modulo_free_dets,
    parse_schematic,
    render_schematic,
)

__all__ = [
    "Bindings",
    "ComplementSpec",
    "DerivationError",
    "DerivationGraph",
    "Diagnostic",
    "Family",
    "FormId",
    "LexicalEntry",
    "Lexicon",
    "LexiconError",
    "Match",
    "NounClass",
    "NumberError",
    "Paraphrase",
    "Placement",
    "PlacementError",
    "PropertyVector",
    "SchemaError",
    "SchematicSentence",
    "Token",
    "TRANSFORMATIONS",
    "TransformError",
    "UnlicensedFormError",
    "apply_transform",
    "attach_complements",
    "build_graph",
    "complement_slots",
    "derivation_path",
    "derive_form",
    "dump_lexicon",
    "equal_modulo_free_dets",
    "family_of",
    "grade_of",
    "licensed_forms",
    "load_bundled",
    "load_directory",
    "load_families",
    "load_lexicon",
    "normalize",
    "paraphrase_set",
    "parse_schematic",
    "recognize",
    "render_schematic",
    "source_form",
    "validate_lexicon",
    "variant_forms",
    "vsup_variants",
]
