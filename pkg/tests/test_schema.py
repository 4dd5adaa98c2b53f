from __future__ import annotations

from pathlib import Path

import pytest
import yaml

from conftest import CORPUS_FILES, I_COME, INVALID, noun, simple_doc, verb_phrase
from nlom.errors import NlomError
from nlom.markup import parse_markup, resolve_path
from nlom.schema import ISSUE_CODES, Schema, load_schema, validate_schema

ROOT = Path(__file__).resolve().parent.parent


def issues(text: str):
    return validate_schema(parse_markup(text)).issues


def codes(text: str) -> set[str]:
    return {i.code for i in issues(text)}


def test_i_come_is_valid():
    report = validate_schema(parse_markup(I_COME))
    assert report.ok and report.issues == ()


def test_bad_mood_path():
    bad = I_COME.replace("<mood>statement</mood>", "<mood>greeting</mood>")
    assert [(i.path, i.code) for i in issues(bad)] == [("nlml/mood", "BadEnumValue")]


def test_single_verb_phrase_part_is_arity_error():
    vp = verb_phrase("come", tag="verb_phrase_part")
    doc = simple_doc(f"<subject>{noun('Tom')}</subject><verb_phrase><verb_phrase_connector>and</verb_phrase_connector>{vp}</verb_phrase>")
    assert "ConnectorArity" in codes(doc)


def test_parts_without_connector():
    parts = verb_phrase("sings", tag="verb_phrase_part") * 2
    doc = simple_doc(f"<subject>{noun('Tom')}</subject><verb_phrase>{parts}</verb_phrase>")
    assert "ConnectorArity" in codes(doc)


def test_two_nouns_without_connector():
    doc = simple_doc(f"<subject>{noun('Tom')}{noun('Mary')}</subject>{verb_phrase('sing')}")
    assert [(i.path, i.code) for i in issues(doc)] == [("nlml/subject", "ConnectorArity")]


def test_query_adv_is_case_insensitive():
    doc = simple_doc(f"<subject>{noun('he')}</subject>{verb_phrase('comes')}<query_adv>When</query_adv>", "question")
    assert codes(doc) == set()


@pytest.mark.parametrize(
    "mood, body, code",
    [
        ("order", f"<subject>{noun('you')}</subject>" + verb_phrase("go"), "UnknownTag"),
        ("statement", verb_phrase("go"), "MissingChild"),
        ("np", f"<subject>{noun('you')}</subject>", "MissingChild"),
        ("adj", "<adj><word>nice</word></adj>" + verb_phrase("go"), "UnknownTag"),
        ("circumstances", "", "MissingChild"),
        ("subcircum", f"<subject>{noun('it')}</subject>" + verb_phrase("rains"), "MissingChild"),
    ],
)
def test_mood_requirements(mood, body, code):
    assert code in codes(simple_doc(body, mood))


def test_complex_requires_layout():
    doc = "<mood>statement</mood><complexity>complex</complexity><subordinator>if</subordinator>"
    assert [(i.code, i.message) for i in issues(doc)] == [
        ("MissingChild", "<nlml> requires <sub>"), ("MissingChild", "<nlml> requires <main>")]


def test_body_tags_not_allowed_at_complex_root():
    sub = f"<sub><subject>{noun('it')}</subject>{verb_phrase('rains')}</sub>"
    main = f"<main><subject>{noun('I', 'first')}</subject>{verb_phrase('stay', person='first')}</main>"
    doc = ("<mood>statement</mood><complexity>complex</complexity><subordinator>if</subordinator>"
           f"{sub}{main}<subject>{noun('x')}</subject>")
    assert [(i.path, i.code) for i in issues(doc)] == [("nlml/subject", "UnknownTag")]


def test_circum_type_must_match_payload():
    circ = "<circum><type>prep_phrase</type><adv><word>here</word></adv></circum>"
    doc = simple_doc(f"<subject>{noun('he')}</subject>{verb_phrase('comes')}{circ}")
    assert "MissingChild" in codes(doc)


def test_extent_adverb_conflicts_with_compare():
    adj = ("<adj><word>tall</word><adv><type>too_to</type><word>tall</word><np>" + noun("reach") + "</np></adv></adj>")
    pred = f"<predicate><type>adjective</type>{adj}<compare><type>than</type><np>{noun('Tom')}</np></compare></predicate>"
    doc = simple_doc(f"<subject>{noun('he')}</subject>{verb_phrase('is', verb_type='be', extra=pred)}")
    assert any(i.code == "BadEnumValue" and i.path.endswith("/adv/type") for i in issues(doc))


def test_placeholder_tags_are_not_input():
    doc = simple_doc(f"<subject><noun><type>noun_clause</type><clause_ref>0</clause_ref></noun></subject>{verb_phrase('is')}")
    assert "UnknownTag" in codes(doc)


def test_validation_is_total():
    bad = (simple_doc(f"<subject><noun><word></word></noun></subject>"
                      f"{verb_phrase('come', verb_type='flying')}<colour>red</colour>", "greeting"))
    assert {"EmptyRequired", "BadEnumValue", "UnknownTag"} <= codes(bad)


def _well_formed(path: Path) -> bool:
    try:
        parse_markup(path.read_text(encoding="utf-8"))
    except NlomError:
        return False
    return True


@pytest.mark.parametrize("path", [p for p in sorted(INVALID.glob("*.nlml")) if _well_formed(p)] + CORPUS_FILES,
                         ids=lambda p: p.stem)
def test_issue_paths_resolve(path):
    root = parse_markup(path.read_text(encoding="utf-8"))
    for issue in validate_schema(root).issues:
        assert issue.code in ISSUE_CODES
        assert resolve_path(root, issue.path) is not None, issue


@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.stem)
def test_corpus_is_valid(path):
    assert validate_schema(parse_markup(path.read_text(encoding="utf-8"))).ok


def test_schema_doc_matches_packaged_table():
    doc_schema = load_schema(ROOT / "docs" / "nlml-schema.md")
    packaged = load_schema(ROOT / "src" / "nlom" / "schema.yaml")
    assert doc_schema == packaged


def test_env_override(monkeypatch, tmp_path):
    data = yaml.safe_load((ROOT / "src" / "nlom" / "schema.yaml").read_text())
    data["enums"]["mood"].append("greeting")
    alt = tmp_path / "alt.md"
    alt.write_text("# alternate\n\n```yaml\n" + yaml.safe_dump(data) + "```\n")
    greeting = I_COME.replace("<mood>statement</mood>", "<mood>greeting</mood>")
    monkeypatch.setenv("NLOM_SCHEMA", str(alt))
    assert "greeting" in load_schema().enums["mood"]
    assert "BadEnumValue" not in {i.code for i in validate_schema(parse_markup(greeting)).issues}
    monkeypatch.delenv("NLOM_SCHEMA")
    assert "BadEnumValue" in codes(greeting)


def test_schema_groups_expand():
    s = Schema.from_mapping({"groups": {"g": ["a", "b"]}, "elements": {"x": ["@g", "c"]}, "leaves": ["a", "b", "c"]})
    assert set(s.elements["x"]) == {"a", "b", "c"}
