import pytest
from hypothesis import given, strategies as st

from koverbs import hangul_codec as hc
from koverbs.errors import NonHangulInput, Uncomposable

syllables = st.integers(min_value=hc.SYLLABLE_BASE, max_value=hc.SYLLABLE_LAST).map(chr)
syllable_text = st.text(alphabet=st.integers(
    min_value=hc.SYLLABLE_BASE, max_value=hc.SYLLABLE_LAST).map(chr), max_size=6)


def test_decompose_keeps_letter_order():
    assert hc.decompose("그렇") == ("ㄱ", "ㅡ", "ㄹ", "ㅓ", "ㅎ")
    assert hc.decompose("어야") == ("ㅇ", "ㅓ", "ㅇ", "ㅑ")


def test_decompose_splits_cluster_finals_only():
    assert hc.decompose("없") == ("ㅇ", "ㅓ", "ㅂ", "ㅅ")
    assert hc.decompose("앉") == ("ㅇ", "ㅏ", "ㄴ", "ㅈ")
    # doubled consonants and compound vowels stay whole
    assert hc.decompose("있") == ("ㅇ", "ㅣ", "ㅆ")
    assert hc.decompose("왜") == ("ㅇ", "ㅙ")


def test_decompose_lone_jamo():
    assert hc.decompose("ㅂ니다") == ("ㅂ", "ㄴ", "ㅣ", "ㄷ", "ㅏ")
    assert hc.decompose("ㄱ") == ("ㄱ",)
    assert hc.decompose("ㅏ") == ("ㅏ",)
    # a lone cluster jamo splits like a final would
    assert hc.decompose("ㅄ") == ("ㅂ", "ㅅ")


@pytest.mark.parametrize("text,position", [
    ("a", 0),
    ("그a", 1),
    ("그 렇", 1),
    ("가", 0),  # conjoining jamo are rejected, not normalized
])
def test_decompose_rejects_non_hangul(text, position):
    with pytest.raises(NonHangulInput) as exc:
        hc.decompose(text)
    assert exc.value.position == position


def test_compose_packs_greedily():
    assert hc.compose(("ㄱ", "ㅡ", "ㄹ", "ㅐ", "ㅇ", "ㅑ")) == "그래야"
    # the first ㄹ becomes a final because the second ㄹ is not pre-vowel
    assert hc.compose(("ㅁ", "ㅗ", "ㄹ", "ㄹ", "ㅏ")) == "몰라"
    assert hc.compose(("ㅇ", "ㅜ", "ㄹ", "ㅇ", "ㅓ")) == "울어"
    assert hc.compose(("ㅇ", "ㅏ", "ㄴ", "ㅈ", "ㄱ", "ㅓ")) == "앉거"
    assert hc.compose(("ㅇ", "ㅏ", "ㄴ", "ㅈ", "ㅏ")) == "안자"


@pytest.mark.parametrize("letters,position", [
    (("ㅏ", "ㄱ"), 0),                      # leading vowel
    (("ㅁ", "ㅓ", "ㄱ", "ㄴ", "ㄷ", "ㅏ"), 3),  # ㄱㄴ is no cluster, ㄴㄷ no syllable
    (("ㅁ", "ㅓ", "ㄸ"), 2),               # ㄸ cannot be a final
    (("ㄱ", "ㅏ", "ㅏ"), 2),               # adjacent vowels
    ((), None),
])
def test_compose_rejects_impossible_sequences(letters, position):
    if letters == ():
        assert hc.compose(letters) == ""
        return
    with pytest.raises(Uncomposable) as exc:
        hc.compose(letters)
    assert exc.value.position == position


def test_cluster_split_and_merge_are_inverse():
    for cluster, (a, b) in hc.CLUSTER_FINALS.items():
        syllable = hc.compose(("ㄱ", "ㅏ", a, b))
        assert hc.decompose(syllable) == ("ㄱ", "ㅏ", a, b)
        rel = ord(syllable) - hc.SYLLABLE_BASE
        assert hc.FINALS[rel % 28] == cluster


def test_classify():
    assert hc.classify("ㅏ") == "vowel(light)"
    assert hc.classify("ㅓ") == "vowel(dark)"
    assert hc.classify("ㄹ") == "consonant"
    assert sum(1 for v in hc.VOWELS if hc.classify(v) == "vowel(light)") == 7
    assert all(hc.classify(c) == "consonant" for c in hc.ONSETS)
    with pytest.raises(NonHangulInput):
        hc.classify("x")


def test_letter_alphabet_size():
    assert len(hc.LETTERS) == 40
    assert len(hc.ONSETS) == 19
    assert len(hc.VOWELS) == 21


@given(syllables)
def test_round_trip_single_syllable(s):
    assert hc.compose(hc.decompose(s)) == s


@given(syllable_text)
def test_round_trip_text(text):
    assert hc.compose(hc.decompose(text)) == text


@given(syllable_text)
def test_decompose_is_normal_form(text):
    letters = hc.decompose(text)
    assert hc.decompose(hc.compose(letters)) == letters
