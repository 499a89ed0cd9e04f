"""TSV lexicon loading, class-indexed views, and feature validation.

Three data files make up a lexicon:

  endings.tsv   surface TAB ending class id (one class per line; the
                same surface may recur under several classes)
  verbs.tsv     stem surface TAB comma-separated verb class ids
                (stems are unique; one stem may carry several classes)
  template.tsv  the rule grid, see ruleset

A fourth optional file, expectations.tsv, drives validate(): each line
is scope TAB class id TAB check TAB true/false, where check is one of
the surface predicates below. Violations are reported, never raised.
"""

from dataclasses import dataclass
from pathlib import Path

from . import hangul_codec, ruleset
from .errors import DuplicateVerb, NonHangulInput, ParseError, RangeError

ENDINGS_FILE = "endings.tsv"
VERBS_FILE = "verbs.tsv"
TEMPLATE_FILE = "template.tsv"
EXPECTATIONS_FILE = "expectations.tsv"

CHECKS = (
    "ends-with-consonant",
    "ends-with-ㄹ",
    "ends-with-하",
    "ends-with-ㄷ",
    "ends-with-ㅂ",
    "ends-with-ㅅ",
    "ends-with-르",
    "ends-with-ㅎ",
    "last-vowel-is-light",
    "starts-with-vowel",
)


@dataclass(frozen=True)
class EndingEntry:
    surface: str
    class_id: int


@dataclass(frozen=True)
class VerbEntry:
    surface: str
    class_ids: tuple


@dataclass(frozen=True)
class FeatureExpectation:
    scope: str  # "verb" or "ending"
    class_id: int
    check: str
    expected: bool


@dataclass(frozen=True)
class Violation:
    scope: str
    surface: str
    class_id: int
    check: str
    expected: bool


class Lexicon:
    """Immutable bundle of endings, verbs, and the rule template."""

    def __init__(self, endings, verbs, template):
        self.endings = tuple(endings)
        self.verbs = {v.surface: v for v in verbs}
        self.template = template
        by_class = {e: [] for e in range(1, ruleset.ENDING_CLASS_COUNT + 1)}
        for entry in self.endings:
            by_class[entry.class_id].append(entry)
        self._by_class = {k: tuple(v) for k, v in by_class.items()}

    def endings_of_class(self, ending_class):
        """Endings of one class, in file order; empty tuple if unpopulated."""
        if not 1 <= ending_class <= ruleset.ENDING_CLASS_COUNT:
            raise RangeError(ending_class, 1, ruleset.ENDING_CLASS_COUNT)
        return self._by_class[ending_class]


def default_data_dir():
    """Directory holding the sample data installed with the package."""
    return Path(__file__).parent / "data"


def _data_lines(path):
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if line:
                yield line_no, line


def _letter_count(surface, path, line_no):
    try:
        return len(hangul_codec.decompose(surface))
    except NonHangulInput as err:
        raise ParseError(path, line_no, f"surface {surface!r}: {err}") from None


def _load_endings(path):
    entries = []
    for line_no, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(path, line_no, f"expected 2 tab-separated fields, got {len(fields)}")
        surface, raw_class = fields
        try:
            class_id = int(raw_class)
        except ValueError:
            raise ParseError(path, line_no, f"class id {raw_class!r} is not an integer") from None
        if not 1 <= class_id <= ruleset.ENDING_CLASS_COUNT:
            raise RangeError(class_id, 1, ruleset.ENDING_CLASS_COUNT)
        length = _letter_count(surface, path, line_no)
        entries.append((line_no, length, EndingEntry(surface, class_id)))
    return entries


def _load_verbs(path):
    entries = []
    seen = set()
    for line_no, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError(path, line_no, f"expected 2 tab-separated fields, got {len(fields)}")
        surface, raw_classes = fields
        if surface in seen:
            raise DuplicateVerb(surface)
        seen.add(surface)
        class_ids = []
        for piece in raw_classes.split(","):
            try:
                class_id = int(piece)
            except ValueError:
                raise ParseError(path, line_no, f"class id {piece!r} is not an integer") from None
            if not 1 <= class_id <= ruleset.VERB_CLASS_COUNT:
                raise RangeError(class_id, 1, ruleset.VERB_CLASS_COUNT)
            if class_id in class_ids:
                raise ParseError(path, line_no, f"class id {class_id} repeated")
            class_ids.append(class_id)
        if not class_ids:
            raise ParseError(path, line_no, "no class ids")
        length = _letter_count(surface, path, line_no)
        entries.append((line_no, length, VerbEntry(surface, tuple(class_ids))))
    return entries


def _slice_needs(template):
    """Per class, the deepest slice any of its rules would take."""
    verb_need = {}
    ending_need = {}
    for (verb_class, ending_class), rule in template.cells():
        if rule.verb_stop is not None:
            need = -rule.verb_stop
            if need > verb_need.get(verb_class, 0):
                verb_need[verb_class] = need
        if rule.ending_start is not None:
            if rule.ending_start > ending_need.get(ending_class, 0):
                ending_need[ending_class] = rule.ending_start
    return verb_need, ending_need


def load(endings_path, verbs_path, template_path):
    """Load and cross-validate the three data files into a Lexicon.

    Besides per-line format checks, every entry's letter count is
    checked against the deepest slice its classes' rules can take, so
    a rule can never reach past an entry's letters at conjugation time.
    """
    template = ruleset.load_template(template_path)
    raw_endings = _load_endings(endings_path)
    raw_verbs = _load_verbs(verbs_path)

    verb_need, ending_need = _slice_needs(template)
    for line_no, length, entry in raw_endings:
        need = ending_need.get(entry.class_id, 0)
        if length < need:
            raise ParseError(
                endings_path, line_no,
                f"ending {entry.surface!r} has {length} letters but class "
                f"{entry.class_id} rules slice {need}",
            )
    for line_no, length, entry in raw_verbs:
        for class_id in entry.class_ids:
            need = verb_need.get(class_id, 0)
            if length < need:
                raise ParseError(
                    verbs_path, line_no,
                    f"stem {entry.surface!r} has {length} letters but class "
                    f"{class_id} rules slice {need}",
                )

    return Lexicon(
        (entry for _, _, entry in raw_endings),
        (entry for _, _, entry in raw_verbs),
        template,
    )


def load_expectations(path):
    expectations = []
    for line_no, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 4:
            raise ParseError(path, line_no, f"expected 4 tab-separated fields, got {len(fields)}")
        scope, raw_class, check, raw_expected = fields
        if scope not in ("verb", "ending"):
            raise ParseError(path, line_no, f"scope must be verb or ending, got {scope!r}")
        high = ruleset.VERB_CLASS_COUNT if scope == "verb" else ruleset.ENDING_CLASS_COUNT
        try:
            class_id = int(raw_class)
        except ValueError:
            raise ParseError(path, line_no, f"class id {raw_class!r} is not an integer") from None
        if not 1 <= class_id <= high:
            raise RangeError(class_id, 1, high)
        if check not in CHECKS:
            raise ParseError(path, line_no, f"unknown check {check!r}")
        if raw_expected not in ("true", "false"):
            raise ParseError(path, line_no, f"expected must be true or false, got {raw_expected!r}")
        expectations.append(FeatureExpectation(scope, class_id, check, raw_expected == "true"))
    return expectations


def run_check(check, surface):
    """Evaluate one surface predicate on a stem or ending surface."""
    letters = hangul_codec.decompose(surface)
    if check == "ends-with-consonant":
        return hangul_codec.is_consonant(letters[-1])
    if check == "last-vowel-is-light":
        vowels = [l for l in letters if hangul_codec.is_vowel(l)]
        return bool(vowels) and hangul_codec.is_light_vowel(vowels[-1])
    if check == "starts-with-vowel":
        # Orthographically: the first syllable's onset is the silent ㅇ.
        return letters[0] == "ㅇ" and len(letters) > 1 and hangul_codec.is_vowel(letters[1])
    if check.startswith("ends-with-"):
        tail = check[len("ends-with-"):]
        if tail in hangul_codec.LETTERS:
            return letters[-1] == tail
        return surface.endswith(tail)  # whole-syllable checks like 하 or 르
    raise ValueError(f"unknown check {check!r}")


def validate(lexicon, expectations):
    """Check every entry against the expectations for its declared classes.

    Returns a list of Violation records, empty when all entries conform.
    """
    violations = []
    for exp in expectations:
        if exp.scope == "verb":
            surfaces = [
                v.surface for v in lexicon.verbs.values()
                if exp.class_id in v.class_ids
            ]
        else:
            surfaces = [e.surface for e in lexicon.endings if e.class_id == exp.class_id]
        for surface in surfaces:
            if run_check(exp.check, surface) != exp.expected:
                violations.append(
                    Violation(exp.scope, surface, exp.class_id, exp.check, exp.expected)
                )
    return violations
