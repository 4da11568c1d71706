import pytest

from prismatoids.exact import QQ
from prismatoids.formats import (
    FormatError,
    HFile,
    VFile,
    emit_hfile,
    emit_vfile,
    parse_hfile,
    parse_vfile,
)
from prismatoids.geometry import Hyperplane, VPolytope
from prismatoids.prismatoid import gallery


def test_vfile_roundtrip_byte_exact():
    P = gallery("q20")
    text = emit_vfile(VFile("q20", P))
    again = emit_vfile(parse_vfile(text))
    assert text == again


def test_vfile_q28_parses():
    text = emit_vfile(VFile("q28", gallery("q28")))
    vf = parse_vfile(text)
    assert vf.polytope.n == 28 and vf.polytope.dim == 5


def test_vfile_bad_token_reports_line():
    text = "bad\nV-representation\nbegin\n1 3 rational\n1 2 x\nend\n"
    with pytest.raises(FormatError) as err:
        parse_vfile(text)
    assert "line 5" in str(err.value)


def test_vfile_count_mismatch():
    text = "bad\nV-representation\nbegin\n2 3 rational\n1 2 3\nend\n"
    with pytest.raises(FormatError):
        parse_vfile(text)


def test_vfile_arity_mismatch():
    text = "bad\nV-representation\nbegin\n1 3 rational\n1 2\nend\n"
    with pytest.raises(FormatError) as err:
        parse_vfile(text)
    assert "expected 3 entries" in str(err.value)


def test_hfile_roundtrip():
    planes = [Hyperplane((1, 0), QQ(3, 2)), Hyperplane((0, -2), 5)]
    text = emit_hfile(HFile("test", 2, planes))
    hf = parse_hfile(text)
    assert emit_hfile(hf) == text
    assert hf.planes[0].value((QQ(3, 2), 0)) == hf.planes[0].offset


def test_hfile_rows_mean_b_minus_ax():
    # row "b a1 a2" encodes b - a.x >= 0, i.e. <a, x> <= b
    text = "t\nH-representation\nbegin\n1 3 rational\n4 1 1\nend\n"
    hf = parse_hfile(text)
    pl = hf.planes[0]
    assert pl.value((2, 2)) == pl.offset
    assert pl.value((1, 1)) < pl.offset


def test_rationals_survive_roundtrip():
    P = VPolytope(2, ((QQ(1, 3), QQ(-5, 7)), (QQ(2), 0), (0, QQ(9, 2))))
    vf = parse_vfile(emit_vfile(VFile("frac", P)))
    assert set(vf.polytope.vertices) == set(P.vertices)
