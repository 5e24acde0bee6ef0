import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvass.errors import ParseError
from bvass.explore import explore
from bvass.model import Config, parse_bvass
from bvass.periodic import PeriodicSet
from bvass.semilinear import (LinearSetEntry, SemilinearPresentation, assemble,
                              enumerate_box, from_json, from_text, loads, member_config,
                              normalize, to_json, to_text)
from oracles import linear_box

P = PeriodicSet.of
L = LinearSetEntry
SELFLOOP = parse_bvass("rule p <- : 0 0\nrule p <- p : 1 0\n")


def test_assemble_selfloop_normalizes_to_one_entry():
    e, _, _ = explore(SELFLOOP)
    s = assemble(e)
    assert s.entries == (L("p", (0, 0), P((1, 0))),)


def test_assemble_empty():
    e, _, _ = explore(parse_bvass("rule p <- p : 1 0"))
    assert assemble(e).entries == ()


def test_different_states_are_kept():
    kept = normalize([L("p", (0, 0), P((1, 0))), L("q", (1, 0), P((1, 0)))])
    assert len(kept) == 2


def test_normalize_chains_and_incomparable():
    a = L("p", (0, 0), P((1, 0), (0, 1)))
    b = L("p", (2, 2), P((1, 0)))
    c = L("p", (3, 2), P())
    d = L("q", (1, 1), P((0, 2)))
    e = L("q", (1, 2), P((0, 2)))
    assert normalize([c, b, a, d, e]) == [a, d, e]


@pytest.mark.parametrize("config, expected", [
    (Config("p", (7, 0)), 0),
    (Config("p", (0, 1)), None),
    (Config("zz", (0, 0)), None),
])
def test_member_config(config, expected):
    s = SemilinearPresentation((L("p", (0, 0), P((1, 0))),))
    assert member_config(s, config) == expected


def test_enumerate_box_examples():
    s = SemilinearPresentation((L("p", (0, 0), P((1, 0))),))
    assert enumerate_box(s, 3) == {Config("p", (i, 0)) for i in range(4)}
    assert enumerate_box(SemilinearPresentation(), 5) == set()
    far = SemilinearPresentation((L("p", (2, 2), P()),))
    assert enumerate_box(far, 1) == set()


def test_text_format():
    s = SemilinearPresentation((L("p", (0, 0), P((1, 0))), L("q", (4, 4), P())), "abc")
    assert to_text(s) == "linear p : 0 0 ; 1 0\nlinear q : 4 4\n"
    assert from_text(to_text(s), "abc") == s


def test_json_format_is_canonical():
    s = SemilinearPresentation((L("q", (1, 2), P((0, 3), (1, 0))),), "ff")
    text = to_json(s)
    assert text.index('"model_hash"') < text.index('"reach"')
    assert text.index('"state"') < text.index('"base"') < text.index('"periods"')
    assert from_json(text) == s
    assert loads(text) == s


@pytest.mark.parametrize("text", [
    "{not json", '{"reach": [{"state": "p", "base": [1], "periods": []}]}',
    '{"reach": [{"state": "p", "base": [0, 0], "periods": [[-1, 0]]}]}', "[]",
    "linear p : 1", "line p : 1 2", "linear p : 1 2 ; a b",
])
def test_bad_presentations(text):
    with pytest.raises(ParseError):
        loads(text)


vec = st.tuples(st.integers(0, 5), st.integers(0, 5))
entries = st.lists(st.builds(L, st.sampled_from("pq"), vec,
                             st.lists(vec, max_size=2).map(lambda g: PeriodicSet(tuple(g)))),
                   max_size=5)


@settings(max_examples=100, deadline=None)
@given(entries)
def test_normalize_preserves_semantics(es):
    raw = SemilinearPresentation(tuple(es))
    norm = SemilinearPresentation(tuple(normalize(es)))
    assert enumerate_box(raw, 20) == enumerate_box(norm, 20)


@settings(max_examples=100, deadline=None)
@given(entries)
def test_box_enumeration_matches_definition_and_membership(es):
    s = SemilinearPresentation(tuple(es))
    k = 12
    truth = set()
    for e in es:
        truth |= linear_box(e.state, e.base, e.periods.generators, k)
    got = enumerate_box(s, k)
    assert {(c.state, c.point) for c in got} == truth
    for q in "pq":
        for x in range(k + 1):
            for y in range(0, k + 1, 3):
                c = Config(q, (x, y))
                assert (member_config(s, c) is not None) == (c in got)


@settings(max_examples=100, deadline=None)
@given(entries)
def test_serialization_round_trip(es):
    s = SemilinearPresentation(tuple(es), "h")
    assert from_json(to_json(s)) == s
    assert from_text(to_text(s), "h") == s
