"""Sentence hierarchy, basic-sentence grids and decomposition.

``parse_sentence`` dispatches on the ``complexity`` tag. Every variant ends
in :class:`SimpleSentence` objects, which split their coordinated subjects
and verb phrases into a grid of :class:`BasicSentence` cells.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import EmptyVerbPhrases, SchemaError, UnsupportedComplexity
from .markup import MarkupNode, parse_markup, serialize
from .phrases import (
    Adjective,
    Circumstance,
    NounPhrase,
    PhraseCore,
    VerbPhrase,
    Adverb,
    agree,
    complements,
    join_parts,
    noun_query_text,
    parse_adjective,
    parse_circumstance,
    parse_noun_phrase,
    parse_verb_phrase,
    split_auxiliary,
    split_noun_phrase,
    verb_chain,
)
from .realizer import (
    PHRASE_MOODS,
    RealizationPlan,
    find_focus,
    negate_verb_phrase,
    place_circumstances,
    realize_basic,
    realize_fragment,
    terminal_punctuation,
)
from .schema import FULL_MOODS, Schema, validate_schema

GRID_MOODS = FULL_MOODS | {"order"}
INDEPENDENT = "independent"
SINGLE_CHOICE = "single_choice"


@dataclass
class SentenceCore:
    mood: str
    text: str = ""
    nlml: str = ""
    description: str = ""
    input: str | None = None
    user: str | None = None


class _Accessors:
    """Read access shared by every sentence variant."""

    core: SentenceCore

    @property
    def mood(self) -> str:
        return self.core.mood

    @property
    def text(self) -> str:
        return self.core.text

    @property
    def nlml(self) -> str:
        return self.core.nlml

    @property
    def description(self) -> str:
        return self.core.description

    def __str__(self) -> str:
        return self.core.description


@dataclass(eq=True)
class BasicSentence(_Accessors):
    core: SentenceCore
    verb_phrase: VerbPhrase
    subject: NounPhrase | None = None
    circumstances: list[Circumstance] = field(default_factory=list)
    neg: str | None = None
    query_adv: str | None = None
    subordinator: str | None = None
    negated: bool = False


@dataclass
class BasicSentenceGrid:
    rows: int
    cols: int
    cells: list[list[BasicSentence]]
    relation: str = INDEPENDENT

    def __iter__(self) -> Iterator[BasicSentence]:
        for row in self.cells:
            yield from row

    def __len__(self) -> int:
        return self.rows * self.cols

    def texts(self) -> list[str]:
        return [bs.core.text for bs in self]


@dataclass(eq=True)
class SimpleSentence(_Accessors):
    core: SentenceCore
    sid: str = "s"
    subjects: list[NounPhrase] = field(default_factory=list)
    subject_phrase: NounPhrase | None = None
    verb_phrases: list[VerbPhrase] = field(default_factory=list)
    verb_phrase_connector: str | None = None
    circumstances: list[Circumstance] = field(default_factory=list)
    np: NounPhrase | None = None
    adj: Adjective | None = None
    subordinator: str | None = None
    noun_clauses: list = field(default_factory=list)
    relative_clauses: list = field(default_factory=list)
    query_adv: str | None = None
    query_noun_phrase: NounPhrase | None = None
    neg: str | None = None
    is_clause: bool = False
    basic_sentences: BasicSentenceGrid | None = None
    parent_id: str | None = None
    parent: SimpleSentence | None = field(default=None, compare=False, repr=False, metadata={"dump": False})


@dataclass
class CompleteSentence:
    main: SimpleSentence
    subordinator: str | None = None
    sub: SimpleSentence | None = None

    def __post_init__(self) -> None:
        if (self.sub is None) != (self.subordinator is None):
            raise SchemaError("complete sentence needs both subordinator and sub, or neither")

    @property
    def text(self) -> str:
        if self.sub is None:
            return self.main.core.text
        return f"{self.subordinator} {self.sub.core.text}, {self.main.core.text}"


@dataclass
class AndOrSentence:
    coordinator: str
    complete_sentences: list[CompleteSentence]

    def __post_init__(self) -> None:
        if len(self.complete_sentences) < 2:
            raise SchemaError("coordination needs at least two complete sentences")

    @property
    def text(self) -> str:
        return coordinate([c.text for c in self.complete_sentences], self.coordinator)


@dataclass(eq=True)
class CompoundSentence(_Accessors):
    core: SentenceCore
    coordinator: str
    complete_sentences: list[CompleteSentence]

    def __post_init__(self) -> None:
        if len(self.complete_sentences) < 2:
            raise SchemaError("compound sentence needs at least two complete sentences")


@dataclass(eq=True)
class ComplexSentence(_Accessors):
    core: SentenceCore
    subordinator: str
    sub: SimpleSentence
    main: Union[SimpleSentence, ComplexSentence]

    def __post_init__(self) -> None:
        if not self.subordinator:
            raise SchemaError("the subordinator of a complex sentence can not be empty")


@dataclass(eq=True)
class CompoundComplexSentence(_Accessors):
    core: SentenceCore
    subordinator: str
    sub: SimpleSentence
    main: AndOrSentence

    def __post_init__(self) -> None:
        if not self.subordinator:
            raise SchemaError("the subordinator of a compound-complex sentence can not be empty")


Sentence = Union[SimpleSentence, ComplexSentence, CompoundSentence, CompoundComplexSentence, BasicSentence]


@dataclass
class DecomposedSentence:
    complexity: str  # complex or simple
    value: Union[ComplexSentence, SimpleSentence]

    @property
    def text(self) -> str:
        return self.value.core.text


@dataclass
class DecompositionResult:
    sentences: list[DecomposedSentence]
    relation: str = INDEPENDENT

    def __post_init__(self) -> None:
        if not self.sentences:
            raise ValueError("decomposition produced no sentences")

    def texts(self) -> list[str]:
        return [s.text for s in self.sentences]


# -- helpers ---------------------------------------------------------------------


def coordinate(texts: list[str], coordinator: str) -> str:
    """Join clause texts: "A, and B" / "A, B, or C"."""
    return ", ".join(texts[:-1]) + f", {coordinator} {texts[-1]}"


def _capitalize(word: str) -> str:
    return word[:1].upper() + word[1:]


def relation_for(*connectors: str | None) -> str:
    return SINGLE_CHOICE if "or" in connectors else INDEPENDENT


# -- clause preprocessing ----------------------------------------------------------

_ROLE_BY_CONTAINER = {
    "subject": "subject",
    "direct_object": "object",
    "indirect_object": "object",
    "np": "object",
    "predicate": "object",
    "object": "prep_object",
    "circum": "prep_object",
}


def preprocess_clauses(node: MarkupNode, ss: SimpleSentence) -> MarkupNode:
    """Parse embedded clauses into ``ss`` and swap them for placeholders.

    Each top-level ``noun_clause`` becomes ``<noun><type>noun_clause</type>
    <clause_ref>i</clause_ref></noun>`` and each ``relative_clause`` becomes
    ``<relative_ref>i</relative_ref>``; ``i`` indexes ``ss.noun_clauses`` or
    ``ss.relative_clauses``. Clauses nested inside those clauses are left
    for the clause's own parse.
    """
    from .clauses import parse_noun_clause, parse_relative_clause

    def walk(n: MarkupNode, role: str) -> MarkupNode:
        if not any(_contains_clause(c) for c in n.children):
            return n
        children = []
        for c in n.children:
            if c.tag == "noun_clause":
                idx = len(ss.noun_clauses)
                ss.noun_clauses.append(parse_noun_clause(c, ss, role=role))
                children.append(MarkupNode("noun", "", (MarkupNode("type", "noun_clause"),
                                                        MarkupNode("clause_ref", str(idx)))))
            elif c.tag == "relative_clause":
                idx = len(ss.relative_clauses)
                ss.relative_clauses.append(parse_relative_clause(c, ss))
                children.append(MarkupNode("relative_ref", str(idx)))
            else:
                children.append(walk(c, _ROLE_BY_CONTAINER.get(c.tag, role)))
        return n.replace_children(children)

    return walk(node, "object")


def _contains_clause(node: MarkupNode) -> bool:
    return any(n.tag in ("noun_clause", "relative_clause") for n in node.iter())


# -- simple sentences ----------------------------------------------------------------


def build_simple(node: MarkupNode, mood: str, sid: str = "s", *, parent: SimpleSentence | None = None,
                 clause: bool = False, nlml: str | None = None, input: str | None = None,
                 user: str | None = None) -> SimpleSentence:
    """Build a simple sentence from a body element (document root, sub, main or clause)."""
    inner = nlml if nlml is not None else "".join(serialize(c, root=False) for c in node.children)
    ss = SimpleSentence(SentenceCore(mood, nlml=inner, input=input, user=user), sid=sid, is_clause=clause,
                        parent=parent, parent_id=parent.sid if parent is not None else None)
    body = preprocess_clauses(node, ss)

    ss.neg = body.value("neg")
    ss.subordinator = body.value("subordinator")
    if body.has("subject"):
        ss.subject_phrase = parse_noun_phrase(body.child("subject"), ss)
        ss.subjects = split_noun_phrase(ss.subject_phrase)
        if noun_query_text(ss.subject_phrase) is not None:
            ss.query_noun_phrase = ss.subject_phrase
    vp_node = body.child("verb_phrase")
    if vp_node is not None:
        ss.verb_phrase_connector = vp_node.value("verb_phrase_connector")
        parts = vp_node.all("verb_phrase_part") if ss.verb_phrase_connector else [vp_node]
        ss.verb_phrases = [parse_verb_phrase(p, ss) for p in parts]
    ss.circumstances = [parse_circumstance(c, ss) for c in body.all("circum")]
    if body.has("np"):
        ss.np = parse_noun_phrase(body.child("np"), ss)
    if body.has("adj"):
        ss.adj = parse_adjective(body.child("adj"), ss)
    ss.query_adv = _query_adverb(body, ss)

    if not clause:
        _check_mood(ss)
    if mood in GRID_MOODS or clause:
        ss.basic_sentences = construct_basic_sentences(ss)
    ss.core.text = realize_simple(ss)
    ss.core.description = describe_simple(ss)
    return ss


def _query_adverb(body: MarkupNode, ss: SimpleSentence) -> str | None:
    declared = body.value("query_adv")
    for c in ss.circumstances:
        if c.query_adv and (declared is None or c.query_adv.lower() == declared.lower()):
            return c.query_adv
    if declared is None:
        return None
    # declared without a matching circumstance: supply one at the front
    adv = Adverb(PhraseCore(text=declared, type="query", kernel=declared, query_text=declared,
                            description=f"adverb {declared!r} (query, abso)", parent_id=ss.sid))
    circ = Circumstance(PhraseCore(text=declared, type="adverb", kernel=declared, query_text=declared,
                                   description=f"circumstance {declared!r}: adverb, pre position, other",
                                   parent_id=ss.sid),
                        circum_type="adverb", position="pre", attribute="other", payload=adv, query_adv=declared)
    ss.circumstances.insert(0, circ)
    return declared


def _check_mood(ss: SimpleSentence) -> None:
    mood = ss.core.mood
    if mood in ("np", "about", "what terse exclamation"):
        ok = ss.np is not None and not ss.subjects and not ss.verb_phrases
    elif mood in ("adj", "how terse exclamation"):
        ok = ss.adj is not None
    elif mood == "circumstances":
        ok = bool(ss.circumstances)
    elif mood == "order":
        ok = not ss.subjects and bool(ss.verb_phrases)
    else:
        ok = bool(ss.subjects) and bool(ss.verb_phrases) and (mood != "subcircum" or bool(ss.subordinator))
    if not ok:
        raise SchemaError(f"sentence content does not fit mood {mood!r}")


def construct_basic_sentences(ss: SimpleSentence) -> BasicSentenceGrid:
    """Combine subject parts and verb phrases into a grid of basic sentences.

    ``and`` gives independent cells, ``or`` a single choice among them, and
    ``neither_nor`` independent cells whose verb phrase is negated. Every
    cell receives all circumstances.
    """
    if not ss.verb_phrases:
        raise EmptyVerbPhrases(f"sentence {ss.sid} has no verb phrase")
    subj_conn = ss.subject_phrase.part_connector if ss.subject_phrase is not None else None
    vp_conn = ss.verb_phrase_connector
    negate = "neither_nor" in (subj_conn, vp_conn)
    mood = "statement" if ss.is_clause else ss.core.mood
    subjects: list[NounPhrase | None] = list(ss.subjects) or [None]
    split = len(subjects) > 1

    cells: list[list[BasicSentence]] = []
    for subject in subjects:
        row = []
        for vp in ss.verb_phrases:
            if split and subject is not None:
                vp = agree(vp, subject.personality, subject.number)
            if negate:
                vp = negate_verb_phrase(vp)
            bs = BasicSentence(SentenceCore(mood, user=ss.core.user), verb_phrase=vp, subject=subject,
                               circumstances=list(ss.circumstances), neg=ss.neg, query_adv=ss.query_adv,
                               subordinator=ss.subordinator if mood == "subcircum" else None,
                               negated=negate)
            bs.core.text = realize_basic(bs)
            bs.core.description = describe_basic(bs)
            row.append(bs)
        cells.append(row)
    return BasicSentenceGrid(len(subjects), len(ss.verb_phrases), cells, relation_for(subj_conn, vp_conn))


def realize_simple(ss: SimpleSentence, punctuate: bool = False) -> str:
    """Text of the whole simple sentence, coordinations kept together."""
    mood = ss.core.mood
    if mood in PHRASE_MOODS and not ss.is_clause:
        return realize_fragment(mood, np=ss.np, adj=ss.adj, circumstances=ss.circumstances, punctuate=punctuate)
    grid = ss.basic_sentences
    if grid is None:
        raise EmptyVerbPhrases(f"sentence {ss.sid} has no verb phrase")
    if len(grid) == 1:
        return realize_basic(grid.cells[0][0], punctuate) if punctuate else grid.cells[0][0].core.text
    cell_mood = grid.cells[0][0].core.mood
    probe = BasicSentence(SentenceCore(cell_mood), verb_phrase=ss.verb_phrases[0], subject=ss.subject_phrase,
                          circumstances=list(ss.circumstances), neg=ss.neg, query_adv=ss.query_adv,
                          subordinator=grid.cells[0][0].subordinator)
    if len(ss.verb_phrases) == 1:
        return realize_basic(probe, punctuate)
    if cell_mood == "full exclamation":
        return join_parts(grid.texts(), ss.verb_phrase_connector)
    focus = find_focus(probe)
    subject = [ss.subject_phrase.core.text] if ss.subject_phrase is not None else []
    neg = [ss.neg] if ss.neg else []
    fronted = [focus.text] if focus.text else []
    if probe.subordinator:
        fronted.insert(0, probe.subordinator)
    if cell_mood == "question" and not focus.subject and subject:
        aux, first_rest = split_auxiliary(ss.verb_phrases[0], exclude=focus.vp_item)
        rests = [" ".join(first_rest)]
        for vp in ss.verb_phrases[1:]:
            other_aux, rest = split_auxiliary(vp, exclude=focus.vp_item)
            rests.append(" ".join(rest if other_aux.lower() == aux.lower() else [other_aux] + rest))
        head = [aux] + subject + neg
        core = head + [join_parts(rests, ss.verb_phrase_connector)]
    else:
        head = subject + neg
        vps = [" ".join(verb_chain(vp) + complements(vp, exclude=focus.vp_item)) for vp in ss.verb_phrases]
        core = head + [join_parts(vps, ss.verb_phrase_connector)]
    circs = [c for c in ss.circumstances if c is not focus.circumstance]
    plan = place_circumstances(circs, RealizationPlan(fronted, core, [], len(head)))
    return plan.join(terminal_punctuation(cell_mood, punctuate))


def describe_basic(bs: BasicSentence) -> str:
    subject = bs.subject.core.text if bs.subject is not None else "(you)" if bs.core.mood == "order" else "-"
    bits = [f"basic sentence ({bs.core.mood})", f"subject {subject!r}", f"verb {bs.verb_phrase.core.text!r}"]
    if bs.circumstances:
        bits.append("circumstances " + ", ".join(repr(c.core.text) for c in bs.circumstances))
    if bs.negated:
        bits.append("negated")
    return "; ".join(bits)


def describe_simple(ss: SimpleSentence) -> str:
    kind = "clause body" if ss.is_clause else "simple sentence"
    lines = [f"{kind} {ss.sid}, mood {ss.core.mood}: {ss.core.text!r}"]
    if ss.subject_phrase is not None:
        lines.append(f"  subject: {ss.subject_phrase.core.description}")
    for vp in ss.verb_phrases:
        lines.append(f"  {vp.core.description}")
    for c in ss.circumstances:
        lines.append(f"  {c.core.description}")
    if ss.np is not None:
        lines.append(f"  {ss.np.core.description}")
    if ss.adj is not None:
        lines.append(f"  {ss.adj.core.description}")
    if ss.query_adv:
        lines.append(f"  query adverb {ss.query_adv!r}")
    grid = ss.basic_sentences
    if grid is not None and len(grid) > 1:
        lines.append(f"  {grid.rows}x{grid.cols} basic sentences ({grid.relation}): "
                     + " | ".join(grid.texts()))
    for nc in ss.noun_clauses:
        lines.append(f"  noun clause ({nc.clause_type}, {nc.grammatical_role}): {nc.surface_text!r}")
    for rc in ss.relative_clauses:
        lines.append(f"  relative clause ({rc.form}): {rc.surface_text!r}")
    return "\n".join(lines)


# -- document level ---------------------------------------------------------------------


def _body_mood(node: MarkupNode, default: str) -> str:
    return node.value("mood") or default


def _complete(node: MarkupNode, mood: str, sid: str) -> CompleteSentence:
    main = build_simple(node.child("main"), _body_mood(node.child("main"), mood), f"{sid}.main")
    sub_node = node.child("sub")
    if sub_node is None:
        return CompleteSentence(main)
    sub = build_simple(sub_node, _body_mood(sub_node, "statement"), f"{sid}.sub")
    return CompleteSentence(main, node.value("subordinator"), sub)


def complex_text(subordinator: str, sub: SimpleSentence, main_text: str) -> str:
    return f"{_capitalize(subordinator)} {sub.core.text}, {main_text}"


def build_sentence(root: MarkupNode, input: str | None = None, user: str | None = None) -> Sentence:
    """Build the sentence object for a validated document tree."""
    mood = root.value("mood", "statement")
    complexity = root.value("complexity", "simple")
    nlml = serialize(root)
    if complexity == "simple":
        sentence: Sentence = build_simple(root, mood, "s", nlml=nlml, input=input, user=user)
    elif complexity == "complex":
        sub = build_simple(root.child("sub"), _body_mood(root.child("sub"), "statement"), "s.sub")
        main = build_simple(root.child("main"), _body_mood(root.child("main"), mood), "s.main")
        subordinator = root.value("subordinator", "")
        core = SentenceCore(mood, complex_text(subordinator, sub, main.core.text) if subordinator else "",
                            nlml, input=input, user=user)
        sentence = ComplexSentence(core, subordinator, sub, main)
    elif complexity == "compound":
        parts = [_complete(c, mood, f"s.cs{i}") for i, c in enumerate(root.all("complete_sentence"))]
        coordinator = root.value("coordinator", "and")
        core = SentenceCore(mood, coordinate([p.text for p in parts], coordinator) if len(parts) > 1 else "",
                            nlml, input=input, user=user)
        sentence = CompoundSentence(core, coordinator, parts)
    elif complexity == "compound_complex":
        sub = build_simple(root.child("sub"), _body_mood(root.child("sub"), "statement"), "s.sub")
        and_or_node = root.child("and_or")
        parts = [_complete(c, mood, f"s.cs{i}") for i, c in enumerate(and_or_node.all("complete_sentence"))]
        and_or = AndOrSentence(and_or_node.value("coordinator", "and"), parts)
        subordinator = root.value("subordinator", "")
        core = SentenceCore(mood, complex_text(subordinator, sub, and_or.text) if subordinator else "",
                            nlml, input=input, user=user)
        sentence = CompoundComplexSentence(core, subordinator, sub, and_or)
    else:
        raise UnsupportedComplexity(f"complexity {complexity!r}")
    if not isinstance(sentence, SimpleSentence):
        sentence.core.description = describe_sentence(sentence)
    from .clauses import refresh_implied

    for ss in iter_simple_sentences(sentence):
        refresh_implied(ss)
    return sentence


def parse_sentence(nlml: str, input: str | None = None, *, user: str | None = None,
                   schema: Schema | None = None) -> Sentence:
    """Parse and validate an NLML document into its sentence object.

    ``input`` is the original user text when there is one; clauses and other
    sentences known only through their markup leave it out.
    """
    root = parse_markup(nlml)
    report = validate_schema(root, schema)
    if not report.ok:
        raise SchemaError("; ".join(str(i) for i in report.issues), report.issues)
    return build_sentence(root, input, user)


def describe_sentence(s: Sentence) -> str:
    if isinstance(s, SimpleSentence):
        return s.core.description
    if isinstance(s, ComplexSentence):
        head = f"complex sentence, mood {s.core.mood}: {s.core.text!r}"
        return "\n".join([head, f"  subordinator {s.subordinator!r}", _indent(s.sub.core.description),
                          _indent(s.main.core.description)])
    if isinstance(s, CompoundSentence):
        head = f"compound sentence, mood {s.core.mood}, coordinator {s.coordinator!r}: {s.core.text!r}"
        return "\n".join([head] + [_indent(_describe_complete(c)) for c in s.complete_sentences])
    if isinstance(s, CompoundComplexSentence):
        head = f"compound-complex sentence, mood {s.core.mood}: {s.core.text!r}"
        return "\n".join([head, f"  subordinator {s.subordinator!r}", _indent(s.sub.core.description),
                          f"  coordinator {s.main.coordinator!r}"]
                         + [_indent(_describe_complete(c)) for c in s.main.complete_sentences])
    return s.core.description


def _describe_complete(c: CompleteSentence) -> str:
    if c.sub is None:
        return c.main.core.description
    return "\n".join([f"complete sentence with subordinator {c.subordinator!r}", _indent(c.sub.core.description),
                      _indent(c.main.core.description)])


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.splitlines())


def top_simple_sentences(s: Sentence) -> list[SimpleSentence]:
    """Simple sentences that make up ``s`` (clause bodies excluded), in text order."""
    if isinstance(s, SimpleSentence):
        return [s]
    if isinstance(s, ComplexSentence):
        return [s.sub] + top_simple_sentences(s.main)
    if isinstance(s, CompoundSentence):
        return [x for c in s.complete_sentences for x in ([c.sub] if c.sub else []) + [c.main]]
    if isinstance(s, CompoundComplexSentence):
        return [s.sub] + [x for c in s.main.complete_sentences for x in ([c.sub] if c.sub else []) + [c.main]]
    return []


def iter_simple_sentences(s: Sentence) -> Iterator[SimpleSentence]:
    """Every simple sentence including clause bodies, outermost first."""
    seen: set[int] = set()

    def walk(ss: SimpleSentence) -> Iterator[SimpleSentence]:
        if id(ss) in seen:
            return
        seen.add(id(ss))
        yield ss
        for nc in ss.noun_clauses:
            yield from walk(nc.base)
        for rc in ss.relative_clauses:
            yield from walk(rc.base)

    for top in top_simple_sentences(s):
        yield from walk(top)


def decompose(s: Sentence) -> DecompositionResult:
    """Split a sentence into independent complex or simple sentences.

    A compound-complex sentence yields one complex sentence per coordinated
    clause, each sharing the subordinate clause.
    """
    if isinstance(s, CompoundComplexSentence):
        out = [DecomposedSentence("complex", _attach(s.core, s.subordinator, s.sub, c))
               for c in s.main.complete_sentences]
        return DecompositionResult(out, relation_for(s.main.coordinator))
    if isinstance(s, CompoundSentence):
        out = []
        for c in s.complete_sentences:
            if c.sub is None:
                out.append(DecomposedSentence("simple", c.main))
            else:
                out.append(DecomposedSentence("complex", _complex_from(s.core, c)))
        return DecompositionResult(out, relation_for(s.coordinator))
    if isinstance(s, ComplexSentence):
        return DecompositionResult([DecomposedSentence("complex", s)])
    if isinstance(s, SimpleSentence):
        return DecompositionResult([DecomposedSentence("simple", s)])
    raise TypeError(f"cannot decompose {type(s).__name__}")


def _complex_nlml(mood: str, subordinator: str, sub: SimpleSentence, main: SimpleSentence | ComplexSentence) -> str:
    main_inner = main.core.nlml if isinstance(main, SimpleSentence) else main.core.nlml
    return (f"<mood>{mood}</mood><complexity>complex</complexity><subordinator>{subordinator}</subordinator>"
            f"<sub>{sub.core.nlml}</sub><main>{main_inner}</main>")


def _complex_from(core: SentenceCore, c: CompleteSentence) -> ComplexSentence:
    text = complex_text(c.subordinator, c.sub, c.main.core.text)
    cx = ComplexSentence(SentenceCore(core.mood, text, _complex_nlml(core.mood, c.subordinator, c.sub, c.main),
                                      user=core.user), c.subordinator, c.sub, c.main)
    cx.core.description = describe_sentence(cx)
    return cx


def _attach(core: SentenceCore, subordinator: str, sub: SimpleSentence, c: CompleteSentence) -> ComplexSentence:
    main: SimpleSentence | ComplexSentence = c.main if c.sub is None else _complex_from(core, c)
    text = complex_text(subordinator, sub, c.text)
    cx = ComplexSentence(SentenceCore(core.mood, text, _complex_nlml(core.mood, subordinator, sub, main),
                                      user=core.user), subordinator, sub, main)
    cx.core.description = describe_sentence(cx)
    return cx


def parse_file_text(text: str) -> Sentence:
    return parse_sentence(text)
