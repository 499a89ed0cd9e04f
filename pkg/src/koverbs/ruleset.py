"""Combination rules and the verb-class by ending-class template.

A rule is three comma-separated fields: a negative stop index for
slicing the verb's letters from the tail, a (possibly empty) run of
postfix letters, and a positive start index for slicing the ending's
letters from the head. The literal word "None" marks an absent index.
The template is a partial 46 x 24 grid of such rules; a blank cell
means the two classes never combine.
"""

from dataclasses import dataclass

from . import hangul_codec
from .errors import MalformedRule, ParseError, RangeError

VERB_CLASS_COUNT = 46
ENDING_CLASS_COUNT = 24


@dataclass(frozen=True)
class Rule:
    verb_stop: int | None
    postfix: tuple
    ending_start: int | None


IDENTITY_RULE = Rule(None, (), None)


def parse_rule(text):
    """Parse a 3-field rule string like "-2,ㅐ,2" into a Rule."""
    fields = text.split(",")
    if len(fields) != 3:
        raise MalformedRule(text, f"expected 3 comma-separated fields, got {len(fields)}")
    raw_stop, raw_postfix, raw_start = fields

    if raw_stop == "None":
        verb_stop = None
    else:
        try:
            verb_stop = int(raw_stop)
        except ValueError:
            raise MalformedRule(text, f"verb stop {raw_stop!r} is not an integer") from None
        if verb_stop >= 0:
            raise MalformedRule(text, "verb stop must be negative")

    for ch in raw_postfix:
        if ch not in hangul_codec.LETTERS:
            raise MalformedRule(text, f"postfix character {ch!r} is not a jamo letter")

    if raw_start == "None":
        ending_start = None
    else:
        try:
            ending_start = int(raw_start)
        except ValueError:
            raise MalformedRule(text, f"ending start {raw_start!r} is not an integer") from None
        if ending_start < 1:
            raise MalformedRule(text, "ending start must be positive")

    return Rule(verb_stop, tuple(raw_postfix), ending_start)


def serialize_rule(rule):
    """Render a Rule back to its canonical 3-field string."""
    stop = "None" if rule.verb_stop is None else str(rule.verb_stop)
    start = "None" if rule.ending_start is None else str(rule.ending_start)
    return "%s,%s,%s" % (stop, "".join(rule.postfix), start)


def _check_class_ids(verb_class, ending_class):
    if not 1 <= verb_class <= VERB_CLASS_COUNT:
        raise RangeError(verb_class, 1, VERB_CLASS_COUNT)
    if not 1 <= ending_class <= ENDING_CLASS_COUNT:
        raise RangeError(ending_class, 1, ENDING_CLASS_COUNT)


class Template:
    """Immutable partial grid (verb class, ending class) -> Rule."""

    __slots__ = ("_cells",)

    def __init__(self, cells):
        checked = {}
        for (verb_class, ending_class), rule in dict(cells).items():
            _check_class_ids(verb_class, ending_class)
            checked[(verb_class, ending_class)] = rule
        self._cells = checked

    def lookup(self, verb_class, ending_class):
        """Return the Rule for a cell, or None when the cell is blank."""
        _check_class_ids(verb_class, ending_class)
        return self._cells.get((verb_class, ending_class))

    def cells(self):
        """All populated cells as ((verb_class, ending_class), Rule) pairs."""
        return self._cells.items()

    def __len__(self):
        return len(self._cells)

    def serialize(self):
        """Render the grid back to TSV, byte-identical to the shipped file."""
        header = "\t".join([""] + [str(e) for e in range(1, ENDING_CLASS_COUNT + 1)])
        lines = [header]
        for verb_class in range(1, VERB_CLASS_COUNT + 1):
            row = [str(verb_class)]
            for ending_class in range(1, ENDING_CLASS_COUNT + 1):
                rule = self._cells.get((verb_class, ending_class))
                row.append("" if rule is None else serialize_rule(rule))
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


def parse_template(text, source="<template>"):
    """Parse template TSV text: a header row of ending class ids, then
    one row per verb class with the class id in the first column."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != VERB_CLASS_COUNT + 1:
        raise ParseError(source, 1, f"expected {VERB_CLASS_COUNT + 1} rows, got {len(lines)}")

    expected_header = [""] + [str(e) for e in range(1, ENDING_CLASS_COUNT + 1)]
    if lines[0].split("\t") != expected_header:
        raise ParseError(source, 1, "header must be blank then ending class ids 1..24")

    cells = {}
    for line_no, line in enumerate(lines[1:], start=2):
        fields = line.split("\t")
        if len(fields) != ENDING_CLASS_COUNT + 1:
            raise ParseError(source, line_no, f"expected {ENDING_CLASS_COUNT + 1} columns, got {len(fields)}")
        verb_class = line_no - 1
        if fields[0] != str(verb_class):
            raise ParseError(source, line_no, f"row label {fields[0]!r}, expected {verb_class}")
        for ending_class, cell in enumerate(fields[1:], start=1):
            if cell == "":
                continue
            cells[(verb_class, ending_class)] = parse_rule(cell)
    return Template(cells)


def load_template(path):
    with open(path, encoding="utf-8") as fh:
        return parse_template(fh.read(), source=path)
