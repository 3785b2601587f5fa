import pytest
from hypothesis import given
from hypothesis import strategies as st

from hadamard_kit.constructions import sylvester
from hadamard_kit.errors import HmatParseError
from hadamard_kit.hmat import format_hmat, parse_hmat, read_hmat, write_hmat
from hadamard_kit.matrix_core import SignMatrix


def test_format_example():
    text = format_hmat(sylvester(2), ["built by hand"])
    assert text == "# built by hand\nHMAT 2 2\n++\n+-\n"


def test_file_roundtrip(tmp_path):
    path = tmp_path / "h.hmat"
    write_hmat(path, sylvester(16))
    assert read_hmat(path) == sylvester(16)


@given(st.integers(1, 12), st.integers(1, 40), st.data())
def test_roundtrip(r, n, data):
    rows = [data.draw(st.text(alphabet="+-", min_size=n, max_size=n)) for _ in range(r)]
    m = SignMatrix.from_rows(rows)
    assert parse_hmat(format_hmat(m, ["x"])) == m


def test_crlf_and_trailing_blank_lines():
    assert parse_hmat("HMAT 1 2\r\n+-\r\n\n\n") == SignMatrix.from_rows(["+-"])


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("HMAT 2 2\n++\n+0\n", 3, "invalid character '0'"),
        ("# c\nHMAT 2 2\n++\n+\n", 4, "expected 2"),
        ("HMAT 2 2\n++\n", None, "expected 2 matrix rows"),
        ("HMAT 1 2\n++\n--\n", 3, "extra line"),
        ("HMAT 2\n++\n", 1, "header"),
        ("HMAT a 2\n", 1, "integers"),
        ("HMAT 0 2\n", 1, "positive"),
        ("# only comments\n", None, "missing"),
        ("HMAT 2 2\n+ +\n--\n", 2, "invalid character ' '"),
        ("HMAT 2 2\n++\n\n--\n", 3, "row has 0 entries"),
    ],
)
def test_parse_errors(text, lineno, fragment):
    with pytest.raises(HmatParseError) as exc:
        parse_hmat(text)
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)
