import pytest

from topogen.address import Address, canonicalize, format_word, parse_word


def test_text_form():
    a = Address.parse("011(10)")
    assert a.preperiod == (0, 1, 1) and a.period == (1, 0)
    assert str(a) == "011(10)"


@pytest.mark.parametrize("text,canon", [
    ("011(10)", "011(10)"),
    ("0110(10)", "01(10)"),
    ("(0101)", "(01)"),
    ("1(0)", "1(0)"),
    ("10(0)", "1(0)"),
    ("(00)", "(0)"),
    ("2(12)", "(21)"),
])
def test_canonical_forms(text, canon):
    assert str(Address.parse(text)) == canon


def test_canonicalize_idempotent():
    pre, per = canonicalize((1, 2, 1, 2), (1, 2, 1, 2))
    assert canonicalize(pre, per) == (pre, per)


def test_bad_text():
    with pytest.raises(ValueError):
        Address.parse("0110")
    with pytest.raises(ValueError):
        Address.parse("0()")


def test_shift_and_prepend():
    a = Address.parse("01(2)")
    assert a.shift(1) == Address.parse("1(2)")
    assert a.shift(5) == Address.parse("(2)")
    assert a.shift(1).prepend((0,)) == a


def test_wide_digits_round_trip():
    w = (0, 12, 3)
    assert parse_word(format_word(w)) == w
    a = Address((11,), (0, 10))
    assert Address.parse(str(a)) == a
