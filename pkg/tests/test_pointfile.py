import pytest

from shiftred.freegroup import parse_word
from shiftred.labelings import FinSupport, QuotientPeriodic, equal_points, Equal
from shiftred.pointfile import PointFileError, format_point, load_point, parse_point
from shiftred.sampling import GROUPS


def test_fin_support():
    x = parse_point("""
        # a point
        labeling fin-support k=2 alphabet=2 default=0
        set ab 1
        set B 1   # trailing comment
    """)
    assert isinstance(x, FinSupport)
    assert x.eval(parse_word("ab", 2)) == 1 and x.eval(parse_word("b", 2)) == 0


def test_quotient_cyclic_and_table():
    x = parse_point("labeling quotient k=2 alphabet=2\ngroup cyclic 3\nhom b=2 a=1\n"
                    "label 0 0\nlabel 1 1\nlabel 2 0\n")
    assert isinstance(x, QuotientPeriodic)
    assert x.images == (1, 2)
    assert x.eval(parse_word("a", 2)) == 1
    y = parse_point("labeling quotient k=2 alphabet=2\ngroup table 2\n0 1\n1 0\n"
                    "hom a=1 b=0\nlabel 0 0\nlabel 1 1\n")
    assert y.eval(parse_word("aa", 2)) == 0


def test_roundtrip(tmp_path):
    fin = FinSupport.from_dict(3, 9, 2, {parse_word("Abc", 3): 5})
    per = QuotientPeriodic(2, 2, dict(GROUPS)["S3"], (1, 3), (0, 1, 1, 0, 0, 1))
    for x in (fin, per):
        path = tmp_path / "p.pt"
        path.write_text(format_point(x))
        assert equal_points(load_point(path), x) == Equal()


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("labeling blob k=2 alphabet=2", 1),
    ("labeling fin-support k=4 alphabet=2", 1),
    ("labeling fin-support k=2 alphabet=2\nset ab 1\nset ax 1", 3),
    ("labeling fin-support k=2 alphabet=2\n\nset ab 2", 3),
    ("labeling fin-support k=2 alphabet=2\nset ab 1\nset ab 0", 3),
    ("labeling fin-support k=2 alphabet=2\nput ab 1", 2),
    ("labeling quotient k=2 alphabet=2\ngroup cyclic 2\nhom a=1\nlabel 0 0\nlabel 1 0", 3),
    ("labeling quotient k=2 alphabet=2\ngroup table 2\n0 1\n1 1\nhom a=1 b=0\nlabel 0 0\nlabel 1 0", 7),
    ("labeling quotient k=2 alphabet=2\ngroup table 2\n0 1\nhom a=1 b=0", 4),
    ("labeling quotient k=2 alphabet=2\ngroup cyclic 2\nhom a=1 b=0\nlabel 0 0", 4),
    ("labeling quotient k=2 alphabet=2\ngroup cyclic x", 2),
])
def test_errors_name_lines(text, line):
    with pytest.raises(PointFileError) as e:
        parse_point(text)
    assert e.value.line == line
    assert str(e.value).startswith(f"line {line}:")
