import pytest
from hypothesis import given, strategies as st

from chromsurf.coloring import Coloring
from chromsurf.io import (ParseError, RunRecord, append_run, digest, format_coloring, format_complex,
                          format_permutation, parse_coloring, parse_permutation, read_complex_text, read_runs,
                          split_library)
from chromsurf.library import torus7
from chromsurf.perm import Permutation


def test_complex_roundtrip():
    T = torus7()
    back = read_complex_text(format_complex(T, ["a comment"]))
    assert back.facets == T.facets and back.name == T.name


@pytest.mark.parametrize("text,line,col", [("[[1,2,3],\n [1,x,3]]", 2, 5), ("[[1,2,3]", 1, 9),
                                           ("# c\n[]", 2, 2), ("[[1,2,3]] junk", 1, 11)])
def test_parse_error_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        read_complex_text(text)
    assert (info.value.line, info.value.column) == (line, col)


@given(st.dictionaries(st.integers(1, 200), st.integers(1, 6), min_size=1))
def test_coloring_roundtrip(assignment):
    c = Coloring(assignment, 6)
    assert parse_coloring(format_coloring(c)) == c


@given(st.permutations(list(range(9))))
def test_permutation_roundtrip(images):
    T = Permutation(images)
    assert parse_permutation(format_permutation(T, "0..8")) == T


def test_bad_permutation():
    with pytest.raises(ParseError):
        parse_permutation("T: [0, 0, 1]")


@given(st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=40))
def test_run_record_roundtrip(cmd):
    r = RunRecord("2026-01-01T00:00:00", cmd, digest("x"), "k=3", "colorable", 12, 0.5)
    assert RunRecord.from_line(r.to_line()) == r


def test_run_log_file(tmp_path):
    log = tmp_path / "runs.log"
    r = RunRecord("t", "color a b", digest(b"abc"), "k=4", "not_colorable", 7, 1.25)
    append_run(r, log)
    append_run(r, log)
    assert read_runs(log) == [r, r]


def test_library_format():
    text = ("manifold_a=[[1,2,3],[1,2,4],\n  [1,3,4],[2,3,4]]\n\n"
            "manifold_b_#1=[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]\n")
    chunks = split_library(text)
    assert len(chunks) == 2
    K = read_complex_text(chunks[0])
    assert K.name == "manifold_a" and len(K.facets) == 4
