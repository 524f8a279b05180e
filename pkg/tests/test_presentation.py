import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pcgroups import corpus
from pcgroups.errors import ParseError, PresentationError
from pcgroups.presentation import (PcPresentation, Word, candidate_order,
                                   parse, parse_word, render)

EX1_TEXT = """\
# three generators, c central
p = 3
gens a b c
orders a:3 b:3 c:9
rel a^3 = 1
rel [b,a] = c^3
"""


def test_parse_basic_fields():
    P = parse(EX1_TEXT, name="ex1")
    assert P.p == 3
    assert P.names == ("a", "b", "c")
    assert P.rel_orders == (1, 1, 2)
    assert P.name == "ex1"
    assert candidate_order(P) == 81
    assert P.power_rels.get(1, Word(())).letters == ()
    assert P.comm_rels[(2, 1)] == Word(((3, 3),))


def test_parse_matches_corpus_constructor():
    assert parse(EX1_TEXT, name="example1(3)") == corpus.example1(3)


def test_low_commutator_orientation_stores_inverse():
    # [a,b] given with a of lower index; stored as [b,a] = rhs^-1
    text = EX1_TEXT.replace("[b,a] = c^3", "[a,b] = c^6")
    assert parse(text) == parse(EX1_TEXT)


def test_rhs_words_are_collected():
    text = EX1_TEXT.replace("c^3", "c^12")  # 12 = 3 mod 9
    assert parse(text) == parse(EX1_TEXT)


def test_candidate_order_trivial():
    P = PcPresentation(5, [], [])
    assert candidate_order(P) == 1
    assert parse(render(P)) == P


@pytest.mark.parametrize("text,line,frag", [
    ("gens a\norders a:3", None, "missing 'p"),
    ("p = 3\norders a:3", None, "missing 'gens'"),
    ("p = 3\ngens a", None, "missing 'orders'"),
    ("p = 4\ngens a\norders a:4", None, "not prime"),
    ("p = 3\np = 3\ngens a\norders a:3", 2, "duplicate p"),
    ("p = 3\ngens a\ngens b\norders a:3", 3, "duplicate gens"),
    ("p = 3\ngens a a\norders a:3", 2, "duplicate generator"),
    ("p = 3\ngens a b\norders a:3", None, "no order declared for b"),
    ("p = 3\ngens a\norders a:3 a:9", 3, "duplicate order"),
    ("p = 3\ngens a\norders b:3", 3, "unknown generator"),
    ("p = 3\ngens a\norders a:6", 3, "not a power of p"),
    ("p = 3\ngens a\norders a:1", 3, "not a power of p"),
    ("p = 3\ngens a\norders a:x", 3, "cannot parse order entry"),
    ("p = 3\ngens a\norders a:3\nrel a^9 = 1", 4, "must equal the declared order"),
    ("p = 3\ngens a b\norders a:3 b:3\nrel [a,a] = 1", 4, "with itself"),
    ("p = 3\ngens a b\norders a:3 b:3\nrel [b,a] = a", 4, "index restriction"),
    ("p = 3\ngens a b\norders a:3 b:3\nrel [b,a] = b", 4, "index restriction"),
    ("p = 3\ngens a b\norders a:3 b:3\nrel a^3 = a", 4, "index restriction"),
    ("p = 3\ngens a b c\norders a:3 b:3 c:9\nrel [b,a]=c^3\nrel [a,b]=c^3", 5,
     "duplicate relation"),
    ("p = 3\ngens a\norders a:3\nrel a^3 = d", 4, "unknown generator"),
    ("p = 3\ngens a\norders a:3\nrel a = 1", 4, "left-hand side"),
    ("p = 3\ngens a\norders a:3\nwat", 4, "unrecognized line"),
    ("p = 3\ngens a\norders a:3\nrel a^3", 4, "needs '='"),
])
def test_parse_errors(text, line, frag):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert frag in str(err.value)
    if line is not None:
        assert err.value.line == line


def test_parse_word_forms(ex1_3):
    P = ex1_3.presentation
    w = parse_word("a^2*b*c^-1", P)
    assert ex1_3.evaluate(w).to_tuple() == (2, 1, 8)
    assert parse_word("1", P).letters == ()
    with pytest.raises(ParseError):
        parse_word("z", P)
    with pytest.raises(ParseError):
        parse_word("a^^2", P)
    with pytest.raises(ParseError):
        parse_word("[a,b]", P, allow_commutators=False)


def test_parse_word_commutators(ex1_3):
    P = ex1_3.presentation
    e = ex1_3.evaluate(parse_word("[b,a]", P, allow_commutators=True))
    assert e.to_tuple() == (0, 0, 3)
    e = ex1_3.evaluate(parse_word("[b,a]^-1", P, allow_commutators=True))
    assert e.to_tuple() == (0, 0, 6)
    e = ex1_3.evaluate(parse_word("[a,b]", P, allow_commutators=True))
    assert e.to_tuple() == (0, 0, 6)


def test_validation_rejects_bad_structures():
    with pytest.raises(PresentationError):
        PcPresentation(6, ["a"], [1])
    with pytest.raises(PresentationError):
        PcPresentation(3, ["a", "a"], [1, 1])
    with pytest.raises(PresentationError):
        PcPresentation(3, ["a"], [0])
    with pytest.raises(PresentationError):
        PcPresentation(3, ["a"], [1, 1])
    with pytest.raises(PresentationError):
        PcPresentation(3, ["2bad"], [1])
    with pytest.raises(PresentationError):
        # power relation word may not touch the generator itself
        PcPresentation(3, ["a", "b"], [1, 1], power_rels={1: Word(((1, 1),))})
    with pytest.raises(PresentationError):
        # commutator key must have j > i
        PcPresentation(3, ["a", "b"], [1, 1], comm_rels={(1, 2): Word(())})
    with pytest.raises(PresentationError):
        # exponent out of [1, q)
        PcPresentation(3, ["a", "b"], [1, 1], power_rels={1: Word(((2, 3),))})


def test_render_round_trip_corpus():
    for P in corpus.standard_corpus():
        assert parse(render(P), name=P.name) == P


@settings(max_examples=60, deadline=None)
@given(p=st.sampled_from([2, 3, 5]),
       parts=st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_render_round_trip_abelian(p, parts):
    P = corpus.abelian(p, parts)
    assert parse(render(P), name=P.name) == P


@settings(max_examples=60, deadline=None)
@given(alpha=st.integers(1, 3), beta=st.integers(1, 3),
       gamma=st.integers(1, 4), data=st.data())
def test_render_round_trip_family(alpha, beta, gamma, data):
    lo = max(gamma - min(alpha, beta), 0)
    delta = data.draw(st.integers(lo, gamma))
    P = corpus.family(3, alpha, beta, gamma, delta)
    assert parse(render(P), name=P.name) == P


@settings(max_examples=100, deadline=None)
@given(exps=st.lists(st.tuples(st.integers(1, 3), st.integers(-20, 20)),
                     max_size=6))
def test_word_render_parse_round_trip(exps, ex1_3):
    g = ex1_3
    P = g.presentation
    w = Word(tuple((i, e) for i, e in exps if e != 0))
    e1 = g.evaluate(w)
    text = P.render_word(e1.as_word())
    e2 = g.evaluate(parse_word(text, P))
    assert e1 == e2
