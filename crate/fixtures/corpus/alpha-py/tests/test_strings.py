import pytest

from alpha.strings import count_words, is_palindrome, slugify, truncate


def test_slugify_basic():
    assert slugify("Hello World") == "hello-world"


def test_slugify_collapses_symbols():
    assert slugify("a -- b!!") == "a-b"


def test_truncate_short_text_unchanged():
    assert truncate("abc", 5) == "abc"


def test_truncate_adds_suffix():
    assert truncate("abcdefgh", 6) == "abc..."


@pytest.mark.parametrize("text,expected", [("", 0), ("one two", 2), ("  a  ", 1)])
def test_count_words(text, expected):
    assert count_words(text) == expected


def test_is_palindrome():
    assert is_palindrome("A man, a plan, a canal: Panama")
    assert not is_palindrome("abc")
