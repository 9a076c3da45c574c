import pytest
from hypothesis import given, strategies as st

from helpers import FIXTURES
from maxdensity import NoFeasibleSegment
from maxdensity.ingest import (DECIMAL_SCALE, InputFormat, ParseError, iter_fasta_gc,
                               iter_pairs, iter_rle, parse_fasta_gc, parse_pairs,
                               parse_rle, read_input, scale_bounds)


def test_pairs_basic():
    seq = parse_pairs("1\t1\n0\t1\n")
    assert seq.a == [1, 0] and seq.w == [1, 1]
    assert (seq.a_scale, seq.w_scale) == (1, 1)


def test_pairs_decimal_scaling():
    seq = parse_pairs("0.5\n")
    assert seq.a == [500000] and seq.w == [1]
    assert seq.a_scale == DECIMAL_SCALE


def test_pairs_comments_and_default_width():
    seq = parse_pairs("# header\n\n3\t2\n-1\n")
    assert seq.a == [3, -1] and seq.w == [2, 1]


@pytest.mark.parametrize("text, line", [
    ("x\t1\n", 1),
    ("1\t1\n2\t0\n", 2),
    ("1\t-2\n", 1),
    ("1\t2\t3\n", 1),
    ("0.1234567\n", 1),
])
def test_pairs_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_pairs(text)
    assert exc.value.line == line


def test_pairs_out_of_range():
    with pytest.raises(ParseError):
        parse_pairs(f"{2**31 + 1}\n")


def test_fasta_examples():
    assert parse_fasta_gc(">x\nGCAT\n").a == [1, 1, 0, 0]
    assert parse_fasta_gc(">x\nggcc\n").a == [1, 1, 1, 1]
    seq = parse_fasta_gc(">x\nNNNN\n")
    assert seq.a == [0, 0, 0, 0] and seq.ambiguous == 4


def test_fasta_records_and_length():
    seq = parse_fasta_gc((FIXTURES / "two_records.fa").read_text())
    assert [(r.name, r.start, r.end) for r in seq.records] == [
        ("chr_a sample", 1, 20), ("chr_b", 21, 31)]
    assert len(seq) == 31
    assert seq.ambiguous == 2
    assert seq.a[20:27] == [1, 1, 1, 1, 1, 1, 0]   # ccgcgS then W


def test_fasta_errors():
    with pytest.raises(ParseError) as exc:
        parse_fasta_gc(">x\nGCXA\n")
    assert (exc.value.line, exc.value.column) == (2, 3)
    with pytest.raises(ParseError):
        parse_fasta_gc("GCAT\n")


def test_rle_examples():
    rls = parse_rle("1\t2\n0\t4\n")
    assert rls.runs == ((1, 2), (0, 4)) and rls.n == 4
    assert parse_rle("1\t3\n1\t5\n").runs == ((1, 3), (1, 5))
    with pytest.raises(ParseError) as exc:
        parse_rle("1\t4\n0\t4\n")
    assert exc.value.line == 2


def test_rle_decimal_values():
    rls = parse_rle("0.25\t2\n1\t3\n")
    assert rls.a_scale == DECIMAL_SCALE
    assert rls.runs == ((250000, 2), (1000000, 3))


def test_streaming_readers_match_batch():
    text = (FIXTURES / "small.pairs").read_text()
    seq = parse_pairs(text)
    assert list(iter_pairs(text.splitlines(), 1, 1)) == list(zip(seq.a, seq.w))
    fa = (FIXTURES / "two_records.fa").read_text()
    assert [a for a, _ in iter_fasta_gc(fa.splitlines())] == parse_fasta_gc(fa).a
    rle = (FIXTURES / "runs.rle").read_text()
    assert [a for a, _ in iter_rle(rle.splitlines(), 1)] == parse_rle(rle).expand()
    with pytest.raises(ParseError):
        list(iter_rle(["1\t3", "2\t2"]))


def test_scale_bounds():
    assert scale_bounds("1.5", "2.5", 1) == (2, 2)
    assert scale_bounds("0.5", None, DECIMAL_SCALE) == (500000, None)
    assert scale_bounds("0.2", "3", 1) == (1, 3)


def test_instance_rounding():
    seq = parse_pairs("1\t1\n2\t1\n")
    inst = seq.instance("1", "2")
    assert (inst.w_min, inst.w_max) == (1, 2)
    with pytest.raises(NoFeasibleSegment):
        seq.instance("1.2", "1.8")


def test_read_input_dispatch():
    assert read_input("1\t2\n", InputFormat.RLE).n == 2
    assert read_input(">x\nA\n", "fasta").a == [0]
    assert read_input("3\n", "pairs").a == [3]


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(1, 4)), min_size=1, max_size=20))
def test_rle_text_round_trip(runs):
    lines = []
    end = 0
    values = []
    for v, ln in runs:
        end += ln
        lines.append(f"{v}\t{end}")
        values.extend([v] * ln)
    rls = parse_rle("\n".join(lines) + "\n")
    assert rls.expand() == values
