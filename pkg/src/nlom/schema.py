"""Structural and contextual validation of NLML trees.

The element table and enumerations live in ``schema.yaml`` (or in the file
named by ``NLOM_SCHEMA``, which may be YAML or a Markdown document whose
first ```yaml block holds the table). Rules that depend on mood, complexity
or connector arity are coded here.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

import yaml

from .markup import ROOT_TAG, MarkupNode, child_path

ISSUE_CODES = ("UnknownTag", "MissingChild", "BadEnumValue", "ConnectorArity", "EmptyRequired")

EXTENT_TYPES = frozenset({"so_that", "so_as", "enough_to", "too_to", "adv_than"})
NP_MOODS = frozenset({"np", "about", "what terse exclamation"})
ADJ_MOODS = frozenset({"adj", "how terse exclamation"})
FULL_MOODS = frozenset({"statement", "question", "full exclamation", "subcircum"})
COMPLEXITY_TAGS = {
    "simple": frozenset(),
    "complex": frozenset({"subordinator", "sub", "main"}),
    "compound": frozenset({"coordinator", "complete_sentence"}),
    "compound_complex": frozenset({"subordinator", "sub", "and_or"}),
}
_BODY_ONLY = frozenset({"subject", "neg", "verb_phrase", "circum", "np", "adj", "query_adv"})


@dataclass(frozen=True)
class Issue:
    path: str
    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code} {self.path}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.issues

    def codes(self) -> set[str]:
        return {i.code for i in self.issues}


@dataclass(frozen=True)
class Schema:
    elements: dict[str, frozenset[str]]
    leaves: frozenset[str]
    optional_empty: frozenset[str]
    enums: dict[str, tuple[str, ...]]
    case_insensitive: frozenset[str]
    extensions: frozenset[str]

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> Schema:
        groups = data.get("groups", {})
        elements: dict[str, frozenset[str]] = {}
        for tag, children in data["elements"].items():
            expanded: set[str] = set()
            for c in children:
                if c.startswith("@"):
                    expanded.update(groups[c[1:]])
                else:
                    expanded.add(c)
            elements[tag] = frozenset(expanded)
        return cls(
            elements=elements,
            leaves=frozenset(data["leaves"]),
            optional_empty=frozenset(data.get("optional_empty", ())),
            enums={k: tuple(v) for k, v in data.get("enums", {}).items()},
            case_insensitive=frozenset(data.get("case_insensitive", ())),
            extensions=frozenset(data.get("extensions", ())),
        )

    def enum_for(self, parent: str, tag: str) -> tuple[str, ...] | None:
        return self.enums.get(f"{parent}/{tag}", self.enums.get(tag))

    def known(self, tag: str) -> bool:
        return tag in self.elements or tag in self.leaves


def _yaml_from_document(text: str) -> dict[str, Any]:
    m = re.search(r"```yaml\n(.*?)```", text, re.S)
    return yaml.safe_load(m.group(1) if m else text)


def load_schema(path: str | os.PathLike | None = None) -> Schema:
    """Load a schema file; defaults to ``$NLOM_SCHEMA`` or the packaged table."""
    if path is None:
        path = os.environ.get("NLOM_SCHEMA")
    if path is None:
        return default_schema()
    return Schema.from_mapping(_yaml_from_document(Path(path).read_text(encoding="utf-8")))


@lru_cache(maxsize=1)
def default_schema() -> Schema:
    text = resources.files(__package__).joinpath("schema.yaml").read_text(encoding="utf-8")
    return Schema.from_mapping(yaml.safe_load(text))


class _Validator:
    def __init__(self, schema: Schema) -> None:
        self.schema = schema
        self.issues: list[Issue] = []

    def add(self, path: str, code: str, message: str) -> None:
        self.issues.append(Issue(path, code, message))

    # -- generic structure ------------------------------------------------

    def structure(self, node: MarkupNode, path: str, parent: str | None) -> None:
        s = self.schema
        if node.tag in s.leaves:
            for c in node.children:
                self.add(child_path(path, node, c), "UnknownTag", f"<{c.tag}> inside leaf <{node.tag}>")
            self.leaf(node, path, parent or "")
            return
        allowed = s.elements.get(node.tag, frozenset())
        for c in node.children:
            cpath = child_path(path, node, c)
            if c.tag not in allowed:
                what = "unknown tag" if not s.known(c.tag) else f"not allowed inside <{node.tag}>"
                self.add(cpath, "UnknownTag", f"<{c.tag}>: {what}")
                continue
            self.structure(c, cpath, node.tag)

    def leaf(self, node: MarkupNode, path: str, parent: str) -> None:
        s = self.schema
        if not node.text:
            if node.tag not in s.optional_empty:
                self.add(path, "EmptyRequired", f"<{node.tag}> must not be empty")
            return
        values = s.enum_for(parent, node.tag)
        if values is None:
            return
        text = node.text.lower() if node.tag in s.case_insensitive else node.text
        if text not in values:
            self.add(path, "BadEnumValue", f"{node.text!r} is not one of {', '.join(values)}")

    # -- contextual rules -------------------------------------------------

    def require(self, node: MarkupNode, path: str, *tags: str) -> bool:
        ok = True
        for t in tags:
            if not node.has(t):
                self.add(path, "MissingChild", f"<{node.tag}> requires <{t}>")
                ok = False
        return ok

    def forbid(self, node: MarkupNode, path: str, tags: frozenset[str], why: str) -> None:
        for c in node.children:
            if c.tag in tags:
                self.add(child_path(path, node, c), "UnknownTag", f"<{c.tag}> not allowed: {why}")

    def document(self, root: MarkupNode) -> None:
        path = root.tag
        self.require(root, path, "mood", "complexity")
        mood = root.value("mood", "statement")
        complexity = root.value("complexity")
        if complexity not in COMPLEXITY_TAGS:
            self.walk_children(root, path)
            return
        extra = frozenset().union(*COMPLEXITY_TAGS.values()) - COMPLEXITY_TAGS[complexity]
        if complexity == "simple":
            extra -= {"subordinator"}
        self.forbid(root, path, extra, f"complexity is {complexity}")
        if complexity == "simple":
            self.body(root, path, mood)
            return
        self.forbid(root, path, _BODY_ONLY, f"complexity is {complexity}")
        if complexity == "complex":
            self.require(root, path, "subordinator", "sub", "main")
            self.clause_pair(root, path, mood)
        elif complexity == "compound":
            self.require(root, path, "coordinator")
            self.complete_list(root, path, mood)
        else:
            self.require(root, path, "subordinator", "sub", "and_or")
            self.clause_pair(root, path, mood)
            and_or = root.child("and_or")
            if and_or is not None:
                apath = child_path(path, root, and_or)
                self.require(and_or, apath, "coordinator")
                self.complete_list(and_or, apath, mood)

    def clause_pair(self, node: MarkupNode, path: str, mood: str) -> None:
        for tag in ("sub", "main"):
            c = node.child(tag)
            if c is not None:
                own = c.value("mood") or ("statement" if tag == "sub" else mood)
                self.body(c, child_path(path, node, c), own)

    def complete_list(self, node: MarkupNode, path: str, mood: str) -> None:
        parts = node.all("complete_sentence")
        if len(parts) < 2:
            self.add(path, "ConnectorArity", f"coordinator needs at least 2 complete sentences, found {len(parts)}")
        for c in parts:
            cpath = child_path(path, node, c)
            self.require(c, cpath, "main")
            if c.has("sub") != c.has("subordinator"):
                self.require(c, cpath, "sub", "subordinator")
            self.clause_pair(c, cpath, mood)

    def body(self, node: MarkupNode, path: str, mood: str, clause: bool = False) -> None:
        if clause:
            self.require(node, path, "verb_phrase")
        elif mood in NP_MOODS:
            self.require(node, path, "np")
            self.forbid(node, path, frozenset({"subject", "verb_phrase"}), f"mood is {mood}")
        elif mood in ADJ_MOODS:
            self.require(node, path, "adj")
            self.forbid(node, path, frozenset({"subject", "verb_phrase"}), f"mood is {mood}")
        elif mood == "circumstances":
            self.require(node, path, "circum")
        elif mood == "order":
            self.require(node, path, "verb_phrase")
            self.forbid(node, path, frozenset({"subject"}), "order sentences have an implicit subject")
        elif mood in FULL_MOODS:
            self.require(node, path, "subject", "verb_phrase")
            if mood == "subcircum":
                self.require(node, path, "subordinator")
        self.walk_children(node, path)

    def walk_children(self, node: MarkupNode, path: str) -> None:
        for c in node.children:
            self.element(c, child_path(path, node, c))

    def element(self, node: MarkupNode, path: str) -> None:
        tag = node.tag
        if tag in ("subject", "direct_object", "indirect_object", "np", "object"):
            self.noun_container(node, path)
        elif tag == "verb_phrase":
            self.verb_phrase(node, path)
        elif tag == "noun":
            self.require(node, path, "word")
        elif tag == "adj":
            self.require(node, path, "word")
        elif tag == "adv":
            self.adverb(node, path)
        elif tag == "circum":
            self.circumstance(node, path)
        elif tag == "prep_phrase":
            self.require(node, path, "prep", "object")
        elif tag == "predicate":
            self.predicate(node, path)
        elif tag == "compare":
            self.require(node, path, "type", "np")
        elif tag == "noun_clause":
            self.require(node, path, "type")
            self.body(node, path, "statement", clause=True)
            return
        elif tag == "relative_clause":
            self.body(node, path, "statement", clause=True)
            return
        self.walk_children(node, path)

    def noun_container(self, node: MarkupNode, path: str) -> None:
        parts = len(node.all("noun")) + len(node.all("noun_clause"))
        connector = node.value("part_connector")
        if parts == 0:
            self.add(path, "MissingChild", f"<{node.tag}> requires <noun> or <noun_clause>")
        elif parts >= 2 and connector is None:
            self.add(path, "ConnectorArity", f"{parts} parts but no part_connector")
        elif parts == 1 and connector is not None:
            self.add(path, "ConnectorArity", f"part_connector {connector!r} joins a single part")

    def verb_phrase(self, node: MarkupNode, path: str) -> None:
        connector = node.value("verb_phrase_connector")
        parts = node.all("verb_phrase_part")
        if connector is not None:
            if len(parts) < 2:
                self.add(path, "ConnectorArity",
                         f"verb_phrase_connector {connector!r} with {len(parts)} verb_phrase_part")
            content = {c.tag for c in node.children} - {"verb_phrase_connector", "verb_phrase_part"}
            for c in node.children:
                if c.tag in content and self.schema.known(c.tag):
                    self.add(child_path(path, node, c), "UnknownTag",
                             f"<{c.tag}> belongs inside <verb_phrase_part> when a connector is set")
            for p in parts:
                self.vp_content(p, child_path(path, node, p))
        elif parts:
            self.add(path, "ConnectorArity", f"{len(parts)} verb_phrase_part without verb_phrase_connector")
            for p in parts:
                self.vp_content(p, child_path(path, node, p))
        else:
            self.vp_content(node, path)

    def vp_content(self, node: MarkupNode, path: str) -> None:
        self.require(node, path, "verb", "verb_type")
        vtype = node.value("verb_type")
        if vtype == "be":
            self.require(node, path, "predicate")
        elif vtype == "ditransitive":
            self.require(node, path, "direct_object", "indirect_object")
        if node.tag == "verb_phrase_part":
            self.walk_children(node, path)
        else:
            for c in node.children:
                if c.tag != "verb_phrase_part":
                    self.element(c, child_path(path, node, c))

    def adverb(self, node: MarkupNode, path: str) -> None:
        self.require(node, path, "word")
        kind = node.value("type", "normal")
        if kind in EXTENT_TYPES:
            self.require(node, path, "np")
        elif node.has("np"):
            self.add(child_path(path, node, node.child("np")), "UnknownTag",
                     f"<np> only follows adverbs of type {', '.join(sorted(EXTENT_TYPES))}")
        self.walk_children(node, path)

    def circumstance(self, node: MarkupNode, path: str) -> None:
        if self.require(node, path, "type"):
            payload = {"adverb": "adv", "prep_phrase": "prep_phrase", "clause": "noun_clause"}.get(
                node.value("type", ""))
            if payload is not None:
                self.require(node, path, payload)
        self.walk_children(node, path)

    def predicate(self, node: MarkupNode, path: str) -> None:
        kind = node.value("type")
        if self.require(node, path, "type"):
            payload = {"adjective": "adj", "noun_phrase": "np", "prep_phrase": "prep_phrase"}.get(kind or "")
            if payload is not None:
                self.require(node, path, payload)
        compare = node.child("compare")
        if compare is not None:
            if kind != "adjective":
                self.add(child_path(path, node, compare), "UnknownTag",
                         "<compare> is only allowed for adjective predicates")
            adj = node.child("adj")
            if adj is not None:
                apath = child_path(path, node, adj)
                for adv in adj.all("adv"):
                    if adv.value("type") in EXTENT_TYPES:
                        vpath = child_path(apath, adj, adv) + "/type"
                        self.add(vpath, "BadEnumValue",
                                 "extent adverb cannot co-occur with a predicate comparison")
        self.walk_children(node, path)


def validate_schema(root: MarkupNode, schema: Schema | None = None) -> ValidationReport:
    """Check a parsed document against the schema. Never raises on bad input."""
    v = _Validator(schema or load_schema())
    v.structure(root, root.tag, None)
    if root.tag == ROOT_TAG:
        v.document(root)
    # structural and contextual passes may report the same location twice
    seen: dict[tuple[str, str, str], Issue] = {}
    for issue in v.issues:
        seen.setdefault((issue.path, issue.code, issue.message), issue)
    return ValidationReport(tuple(seen.values()))
