import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordindex import parse_class, parse_diagram, parse_file, serialize_diagram
from chordindex.errors import (
    DiagramFormatError,
    DuplicatePassage,
    MalformedToken,
    MissingGenusHeader,
    NonInteger,
    SideIndexOutOfRange,
    SignMismatch,
    UnpairedPassage,
    WrongLength,
)
from chordindex.moves import random_diagram

from corpus import catalog


def test_empty_walk():
    d = parse_diagram("genus 0\nwalk")
    assert d.genus == 0 and d.n_crossings == 0 and d.events == ()
    assert serialize_diagram(d) == "genus 0\nwalk"


def test_single_kink():
    d = parse_diagram("genus 1\nwalk O1+ U1+")
    assert d.genus == 1 and d.crossings == {1: 1}
    assert serialize_diagram(d) == "genus 1\nwalk O1+ U1+"


def test_whitespace_comments_and_continuation():
    text = """
    # a comment line
    genus   2
    walk O1+ a1+   U2-   # trailing comment
      b1- U1+
    O2-
    class 1 0 0 -2
    """
    d, alpha = parse_file(text)
    assert [str(e) for e in d.events] == ["O1+", "a1+", "U2-", "b1-", "U1+", "O2-"]
    assert alpha == (1, 0, 0, -2)


def test_ids_need_not_be_consecutive():
    d = parse_diagram("genus 0\nwalk O7- U7- O30+ U30+")
    assert d.crossings == {7: -1, 30: 1}


def test_kishino_round_trip_keeps_tokens():
    d, alpha, text = catalog()["kishino"]
    walk = next(l for l in text.splitlines() if l.startswith("walk"))
    assert serialize_diagram(d, alpha).splitlines()[1] == walk
    assert parse_file(serialize_diagram(d, alpha)) == (d, alpha)


@settings(max_examples=150, deadline=None)
@given(
    genus=st.integers(0, 3),
    n=st.integers(0, 8),
    m=st.integers(0, 10),
    seed=st.integers(0, 10**6),
)
def test_round_trip(genus, n, m, seed):
    d = random_diagram(genus, n, 0 if genus == 0 else m, seed)
    assert parse_diagram(serialize_diagram(d)) == d


# -- rejection: every malformed input raises a typed error ---------------------------

BAD_DIAGRAMS = [
    ("walk O1+ U1+", MissingGenusHeader),
    ("", MissingGenusHeader),
    ("genus 1\nwalk O1+ U1+ O1-", DuplicatePassage),
    ("genus 1\nwalk U1+ O1+ U1+", DuplicatePassage),
    ("genus 1\nwalk O1+ U1-", SignMismatch),
    ("genus 1\nwalk O1+ a2+ U1+", SideIndexOutOfRange),
    ("genus 0\nwalk a1+", SideIndexOutOfRange),
    ("genus 1\nwalk O1+ X1+ U1+", MalformedToken),
    ("genus 1\nwalk O1 U1", MalformedToken),
    ("genus 1\nwalk O0+ U0+", MalformedToken),
    ("genus 1\nwalk a0+", MalformedToken),
    ("genus x\nwalk", MalformedToken),
    ("genus -1\nwalk", MalformedToken),
    ("genus 1 2\nwalk", MalformedToken),
    ("genus 1", MalformedToken),
    ("genus 1\ngenus 1\nwalk", MalformedToken),
    ("genus 1\nwalk O1+ U1+\nwalk", MalformedToken),
    ("genus 1\nwalk O1+\n", UnpairedPassage),
    ("genus 1\nwalk U2-", UnpairedPassage),
    ("genus 1\nwalk\nclass 0 0\nclass 0 0", MalformedToken),
    ("genus 1\nwalk\nclass 0 0\nO1+ U1+", MalformedToken),
    ("genus 1\nwalk\nclass 0", WrongLength),
    ("genus 1\nwalk\nclass 0 x", NonInteger),
]


@pytest.mark.parametrize("text,error", BAD_DIAGRAMS)
def test_malformed_inputs_raise_typed_errors(text, error):
    with pytest.raises(error):
        parse_file(text)
    assert issubclass(error, DiagramFormatError)


def test_parse_class_examples():
    assert parse_class("0 0", 1) == (0, 0)
    assert parse_class("1 0 0 -2", 2) == (1, 0, 0, -2)
    assert parse_class("", 0) == ()


def test_parse_class_errors():
    with pytest.raises(WrongLength):
        parse_class("1 0", 2)
    with pytest.raises(NonInteger):
        parse_class("1 0.5", 1)
