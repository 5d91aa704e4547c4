import pytest

from lexgram import load_bundled


@pytest.fixture(scope="session")
def lex():
    return load_bundled()


@pytest.fixture(scope="session")
def napp_entries(lex):
    from lexgram import NounClass

    return [e for e in lex if e.cls is NounClass.NAPP]


def entry_of(lex, lemma, cls_value=None, adj_anchor=None):
    """First entry for a lemma, optionally narrowed by class or adjective."""
    hits = lex.query(lemma)
    if cls_value:
        hits = [e for e in hits if e.cls.value == cls_value]
    if adj_anchor:
        hits = [e for e in hits if any(adj_anchor in a for a in e.adjectives)]
    assert hits, f"no entry for {lemma}"
    return hits[0]
