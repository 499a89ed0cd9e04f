"""Acceptance gate: one test per release criterion, each printing its
own pass line with the measured figure so `pytest -v` doubles as the
release checklist. Timing limits are generous on purpose; they catch
accidental quadratic blowups, not micro-regressions.
"""

import random
import time

import pytest

from koverbs import (
    apply_rule,
    build_index,
    conjugate,
    hangul_codec,
    lemmatize,
    load_expectations,
    load_lexicon,
    parse_rule,
    validate,
)
from koverbs.errors import MalformedRule
from koverbs.lexicon import load as load_data
from koverbs.ruleset import IDENTITY_RULE, Rule, load_template

from conftest import shipped_paths
from oracle import brute_force, flatten_paradigm

ENDINGS_PATH, VERBS_PATH, TEMPLATE_PATH = shipped_paths()


def report(label, detail):
    print(f"PASS {label}: {detail}")


def test_01_worked_example_under_1ms(lexicon):
    verb = hangul_codec.decompose("그렇")
    ending = hangul_codec.decompose("어야")
    rule = parse_rule("-2,ㅐ,2")
    apply_rule(verb, ending, rule)  # warm up imports and caches
    start = time.perf_counter()
    text = apply_rule(verb, ending, rule)
    elapsed = time.perf_counter() - start
    assert text == "그래야"
    assert elapsed < 0.001
    report("worked example", f"그렇+어야 -> {text} in {elapsed * 1e6:.0f} us")


def test_02_template_fidelity():
    template = load_template(TEMPLATE_PATH)
    rows = {v for (v, _), _ in template.cells()}
    cols = {e for (_, e), _ in template.cells()}
    assert rows == set(range(1, 47))
    assert cols == set(range(1, 25))
    assert template.serialize() == TEMPLATE_PATH.read_text(encoding="utf-8")
    assert template.lookup(1, 1) == IDENTITY_RULE
    assert template.lookup(8, 3) == Rule(-2, ("ㅐ",), 2)
    assert template.lookup(1, 2) is None
    assert len(template) == 412  # locked when the grid was transcribed
    report("template fidelity", "46x24 grid, 412 rules, serialization byte-identical")


def test_03_syllable_round_trip_under_1s():
    start = time.perf_counter()
    for code in range(0xAC00, 0xD7A4):
        syllable = chr(code)
        assert hangul_codec.compose(hangul_codec.decompose(syllable)) == syllable
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report("syllable round trip", f"11172 syllables in {elapsed:.3f} s")


def test_04_irregular_spot_checks():
    # Hand-run traces for both irregulars live in test_conjugator.py
    # (HAND_TRACES); this gate re-runs the end result.
    assert apply_rule(
        hangul_codec.decompose("모르"),
        hangul_codec.decompose("아"),
        parse_rule("-2,ㄹㄹㅏ,2"),
    ) == "몰라"
    assert apply_rule(
        hangul_codec.decompose("돕"),
        hangul_codec.decompose("아"),
        parse_rule("-1,ㅇㅘ,2"),
    ) == "도와"
    report("irregular spot checks", "모르+아 -> 몰라, 돕+아 -> 도와")


def test_05_oracle_equivalence_under_5s(lexicon):
    start = time.perf_counter()
    for verb in lexicon.verbs:
        assert flatten_paradigm(conjugate(lexicon, verb)) == brute_force(lexicon, verb)
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report("oracle equivalence", f"{len(lexicon.verbs)} paradigms in {elapsed:.3f} s")


def test_06_lemmatizer_inverse_under_10s(lexicon):
    start = time.perf_counter()
    index = build_index(lexicon)

    # Completeness: every generated form points back at its sources.
    generated = 0
    for verb in lexicon.verbs:
        for ending_entry, forms in conjugate(lexicon, verb).entries:
            for form in forms:
                generated += 1
                candidates = lemmatize(index, form.text)
                assert any(
                    c.verb == verb and c.ending == ending_entry.surface
                    for c in candidates
                )

    # Soundness: every candidate regenerates the form it indexes.
    checked = 0
    for text, candidates in index.items():
        for cand in candidates:
            checked += 1
            rule = lexicon.template.lookup(cand.verb_class, cand.ending_class)
            assert rule is not None
            regenerated = apply_rule(
                hangul_codec.decompose(cand.verb),
                hangul_codec.decompose(cand.ending),
                rule,
            )
            assert regenerated == text

    elapsed = time.perf_counter() - start
    assert elapsed < 10.0
    report(
        "lemmatizer inverse",
        f"{generated} forms complete, {checked} candidates sound, {elapsed:.3f} s",
    )


def test_07_validator_soundness(tmp_path, lexicon, expectations):
    assert validate(lexicon, expectations) == []

    def clone(name, text):
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return target

    # Wrong final consonant: 먹 declared in an ends-with-ㄹ class.
    verbs = clone("verbs.tsv", VERBS_PATH.read_text(encoding="utf-8")
                  .replace("먹\t18\n", "먹\t18,16\n"))
    seeded = load_data(ENDINGS_PATH, verbs, TEMPLATE_PATH)
    violations = validate(seeded, expectations)
    assert [(v.surface, v.class_id, v.check) for v in violations] == \
        [("먹", 16, "ends-with-ㄹ")]

    # Vowel-initial ending misfiled into a consonant-initial class.
    endings = clone("endings.tsv",
                    ENDINGS_PATH.read_text(encoding="utf-8") + "어야\t1\n")
    seeded = load_data(endings, VERBS_PATH, TEMPLATE_PATH)
    violations = validate(seeded, expectations)
    assert [(v.surface, v.class_id, v.check) for v in violations] == \
        [("어야", 1, "starts-with-vowel")]

    # Malformed rule is a hard load error, not a report item.
    template = clone("template.tsv", TEMPLATE_PATH.read_text(encoding="utf-8")
                     .replace("-2,ㅐ,2", "-2,ㅐ", 1))
    with pytest.raises(MalformedRule):
        load_data(ENDINGS_PATH, VERBS_PATH, template)

    report("validator soundness", "clean data 0 violations, 3 seeded fixtures behave")


def test_08_synthetic_70k_verb_load_under_2s(tmp_path):
    rng = random.Random(20260814)
    onsets = hangul_codec.ONSETS
    vowels = hangul_codec.VOWELS
    finals = hangul_codec.FINALS

    def syllable():
        return chr(
            0xAC00
            + (rng.randrange(len(onsets)) * 21 + rng.randrange(len(vowels))) * 28
            + rng.randrange(len(finals))
        )

    surfaces = set()
    while len(surfaces) < 70000:
        surfaces.add(syllable() + syllable())  # two syllables clears every rule's slice
    lines = [
        f"{surface}\t{rng.randrange(1, 47)}\n"
        for surface in sorted(surfaces)
    ]
    verbs = tmp_path / "verbs.tsv"
    verbs.write_text("".join(lines), encoding="utf-8")

    start = time.perf_counter()
    lex = load_data(ENDINGS_PATH, verbs, TEMPLATE_PATH)
    elapsed = time.perf_counter() - start
    assert len(lex.verbs) == 70000
    assert elapsed < 2.0
    report("synthetic load", f"70000 stems in {elapsed:.3f} s")
