"""Command-line front end.

Shared options pick the output format and the data files; they are
accepted before or after the subcommand:

    koverbs [--format F] [--data-dir D | --endings/--verbs/--template P]
            {conjugate,pair,lemmatize,validate,classes} ...

(`classes` is the one exception: its own --verbs/--endings select which
listing to print, so its file overrides go before the subcommand.)

Exit codes: 0 success, 1 empty result or not found, 2 data or usage
errors. The KOVERBS_DATA environment variable names a directory that
replaces the installed sample data; explicit path flags win over it.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from . import conjugator, lemmatizer, lexicon, ruleset
from .errors import KoverbsError, NotFound

DATA_ENV = "KOVERBS_DATA"

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_DATA = 2


def _add_common_options(parser, suppress=False, paths=True):
    """Attach the shared options. They live on the top-level parser and
    again on each subparser (with SUPPRESS defaults, so a subparser never
    overwrites a value that was given before the subcommand)."""
    absent = argparse.SUPPRESS
    parser.add_argument("--format", choices=("table", "json", "tsv"),
                        default=absent if suppress else "table",
                        help="output format (default: table)")
    parser.add_argument("--data-dir", metavar="DIR",
                        default=absent if suppress else None,
                        help=f"directory with the data TSVs (default: ${DATA_ENV} "
                             "or the installed sample data)")
    if paths:
        parser.add_argument("--endings", metavar="PATH",
                            default=absent if suppress else None,
                            help="endings file override")
        parser.add_argument("--verbs", metavar="PATH",
                            default=absent if suppress else None,
                            help="verbs file override")
        parser.add_argument("--template", metavar="PATH",
                            default=absent if suppress else None,
                            help="template file override")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="koverbs",
        description="Conjugate Korean verb stems, probe stem/ending pairs, "
                    "lemmatize surface forms, and validate lexicon data.",
    )
    _add_common_options(parser)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("conjugate", help="print every surface form of a stem")
    p.add_argument("stem")
    _add_common_options(p, suppress=True)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("pair", help="combine one stem with one ending")
    p.add_argument("stem")
    p.add_argument("ending")
    _add_common_options(p, suppress=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("lemmatize", help="find the stems behind a conjugated form")
    p.add_argument("form")
    p.add_argument("--scope", action="append", metavar="STEM",
                   help="index only these stems (repeatable; default: all)")
    _add_common_options(p, suppress=True)
    p.set_defaults(func=cmd_lemmatize)

    p = sub.add_parser("validate", help="check lexicon entries against class expectations")
    p.add_argument("--expectations", metavar="PATH", help="expectations file override")
    _add_common_options(p, suppress=True)
    p.set_defaults(func=cmd_validate)

    # --verbs/--endings mean "select that listing" here, so the file
    # override flags for classes go before the subcommand.
    p = sub.add_parser("classes", help="list class members")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--verbs", dest="verbs_only", action="store_true",
                       help="verb classes only")
    group.add_argument("--endings", dest="endings_only", action="store_true",
                       help="ending classes only")
    _add_common_options(p, suppress=True, paths=False)
    p.set_defaults(func=cmd_classes)

    return parser


def data_paths(args):
    if args.data_dir:
        base = Path(args.data_dir)
    elif os.environ.get(DATA_ENV):
        base = Path(os.environ[DATA_ENV])
    else:
        base = lexicon.default_data_dir()
    return (
        Path(args.endings) if args.endings else base / lexicon.ENDINGS_FILE,
        Path(args.verbs) if args.verbs else base / lexicon.VERBS_FILE,
        Path(args.template) if args.template else base / lexicon.TEMPLATE_FILE,
        base,
    )


def load_lexicon(args):
    endings_path, verbs_path, template_path, _ = data_paths(args)
    return lexicon.load(endings_path, verbs_path, template_path)


# -- payload builders ------------------------------------------------
# Every command renders from a plain JSON-able dict, so the json format
# is just the payload and tsv/table are views of it.

def paradigm_payload(paradigm, class_ids):
    return {
        "verb": paradigm.verb,
        "classes": list(class_ids),
        "paradigm": [
            {
                "ending": ending_entry.surface,
                "ending_class": ending_entry.class_id,
                "forms": [form_payload(form) for form in forms],
            }
            for ending_entry, forms in paradigm.entries
        ],
    }


def form_payload(form):
    return {
        "text": form.text,
        "sources": [
            {"verb_class": verb_class, "rule": ruleset.serialize_rule(rule)}
            for verb_class, rule in form.provenance
        ],
    }


def pair_payload(verb, ending, forms):
    return {
        "verb": verb,
        "ending": ending,
        "forms": [
            dict(form_payload(form), ending_class=form.ending_class)
            for form in forms
        ],
    }


def lemmatize_payload(form, candidates):
    return {
        "form": form,
        "candidates": [
            {
                "verb": c.verb,
                "ending": c.ending,
                "verb_class": c.verb_class,
                "ending_class": c.ending_class,
            }
            for c in candidates
        ],
    }


def validate_payload(violations):
    return {
        "violations": [
            {
                "scope": v.scope,
                "surface": v.surface,
                "class": v.class_id,
                "check": v.check,
                "expected": v.expected,
            }
            for v in violations
        ],
    }


def classes_payload(lex, verbs_only, endings_only):
    payload = {}
    if not endings_only:
        members = {c: [] for c in range(1, ruleset.VERB_CLASS_COUNT + 1)}
        for entry in lex.verbs.values():
            for class_id in entry.class_ids:
                members[class_id].append(entry.surface)
        payload["verb_classes"] = [
            {"id": c, "members": members[c]} for c in sorted(members)
        ]
    if not verbs_only:
        payload["ending_classes"] = [
            {"id": c, "members": [e.surface for e in lex.endings_of_class(c)]}
            for c in range(1, ruleset.ENDING_CLASS_COUNT + 1)
        ]
    return payload


# -- renderers --------------------------------------------------------

def render_json(payload):
    return json.dumps(payload, ensure_ascii=False, indent=2)


def render_paradigm_tsv(payload):
    lines = ["ending_class\tending\tform\tverb_class\trule"]
    for block in payload["paradigm"]:
        for form in block["forms"]:
            for source in form["sources"]:
                lines.append(
                    f"{block['ending_class']}\t{block['ending']}\t{form['text']}"
                    f"\t{source['verb_class']}\t{source['rule']}"
                )
    return "\n".join(lines)


def render_paradigm_table(payload):
    classes = ",".join(str(c) for c in payload["classes"])
    lines = [f"{payload['verb']}  (verb class {classes})"]
    current = None
    for block in payload["paradigm"]:
        if block["ending_class"] != current:
            current = block["ending_class"]
            lines.append(f"[ending class {current}]")
        for form in block["forms"]:
            lines.append(f"  {block['ending']}\t{form['text']}")
    return "\n".join(lines)


def render_pair_tsv(payload):
    lines = ["ending_class\tending\tform\tverb_class\trule"]
    for form in payload["forms"]:
        for source in form["sources"]:
            lines.append(
                f"{form['ending_class']}\t{payload['ending']}\t{form['text']}"
                f"\t{source['verb_class']}\t{source['rule']}"
            )
    return "\n".join(lines)


def render_pair_table(payload):
    lines = [f"{payload['verb']} + {payload['ending']}"]
    for form in payload["forms"]:
        for source in form["sources"]:
            lines.append(
                f"  {form['text']}\t(verb class {source['verb_class']}, "
                f"rule {source['rule']})"
            )
    return "\n".join(lines)


def render_lemmatize_tsv(payload):
    lines = ["verb\tending\tverb_class\tending_class"]
    for c in payload["candidates"]:
        lines.append(f"{c['verb']}\t{c['ending']}\t{c['verb_class']}\t{c['ending_class']}")
    return "\n".join(lines)


def render_lemmatize_table(payload):
    lines = [payload["form"]]
    for c in payload["candidates"]:
        lines.append(
            f"  {c['verb']} + {c['ending']}\t(verb class {c['verb_class']}, "
            f"ending class {c['ending_class']})"
        )
    return "\n".join(lines)


def render_validate_tsv(payload):
    lines = ["scope\tclass\tsurface\tcheck\texpected"]
    for v in payload["violations"]:
        expected = "true" if v["expected"] else "false"
        lines.append(f"{v['scope']}\t{v['class']}\t{v['surface']}\t{v['check']}\t{expected}")
    return "\n".join(lines)


def render_validate_table(payload):
    if not payload["violations"]:
        return "ok: no violations"
    lines = [f"{len(payload['violations'])} violation(s)"]
    for v in payload["violations"]:
        expected = "true" if v["expected"] else "false"
        lines.append(
            f"  {v['scope']} {v['surface']} (class {v['class']}): "
            f"expected {v['check']}={expected}"
        )
    return "\n".join(lines)


def render_classes_tsv(payload):
    lines = ["kind\tclass\tmembers"]
    for kind, key in (("verb", "verb_classes"), ("ending", "ending_classes")):
        for block in payload.get(key, ()):
            lines.append(f"{kind}\t{block['id']}\t{','.join(block['members'])}")
    return "\n".join(lines)


def render_classes_table(payload):
    lines = []
    for title, key in (("verb classes", "verb_classes"), ("ending classes", "ending_classes")):
        if key not in payload:
            continue
        lines.append(title)
        for block in payload[key]:
            members = " ".join(block["members"]) or "-"
            lines.append(f"  {block['id']:>2}  {members}")
    return "\n".join(lines)


def emit(payload, fmt, tsv_renderer, table_renderer):
    if fmt == "json":
        print(render_json(payload))
    elif fmt == "tsv":
        print(tsv_renderer(payload))
    else:
        print(table_renderer(payload))


# -- commands ---------------------------------------------------------

def cmd_conjugate(args):
    lex = load_lexicon(args)
    paradigm = conjugator.conjugate(lex, args.stem)
    payload = paradigm_payload(paradigm, lex.verbs[args.stem].class_ids)
    emit(payload, args.format, render_paradigm_tsv, render_paradigm_table)
    return EXIT_OK


def cmd_pair(args):
    lex = load_lexicon(args)
    forms = conjugator.conjugate_pair(lex, args.stem, args.ending)
    payload = pair_payload(args.stem, args.ending, forms)
    emit(payload, args.format, render_pair_tsv, render_pair_table)
    return EXIT_OK if forms else EXIT_EMPTY


def cmd_lemmatize(args):
    lex = load_lexicon(args)
    index = lemmatizer.build_index(lex, args.scope)
    candidates = lemmatizer.lemmatize(index, args.form)
    payload = lemmatize_payload(args.form, candidates)
    emit(payload, args.format, render_lemmatize_tsv, render_lemmatize_table)
    if not candidates:
        print("Not Found", file=sys.stderr)
        return EXIT_EMPTY
    return EXIT_OK


def cmd_validate(args):
    lex = load_lexicon(args)
    _, _, _, base = data_paths(args)
    expectations_path = Path(args.expectations) if args.expectations \
        else base / lexicon.EXPECTATIONS_FILE
    expectations = lexicon.load_expectations(expectations_path)
    violations = lexicon.validate(lex, expectations)
    payload = validate_payload(violations)
    emit(payload, args.format, render_validate_tsv, render_validate_table)
    return EXIT_OK if not violations else EXIT_EMPTY


def cmd_classes(args):
    lex = load_lexicon(args)
    payload = classes_payload(lex, args.verbs_only, args.endings_only)
    emit(payload, args.format, render_classes_tsv, render_classes_table)
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotFound:
        print("Not Found", file=sys.stderr)
        return EXIT_EMPTY
    except (KoverbsError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
