"""Noun clauses and relative clauses with their implied sentences.

A clause owns a body (a :class:`~nlom.sentences.SimpleSentence` marked as a
clause) and knows its host sentence. The implied text restates the clause as
an independent sentence: a question for query clauses, a statement with a
borrowed or generic subject for infinitive clauses, and a statement with the
modified noun phrase substituted in for relative clauses.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING

from . import morphology as morph
from .errors import AlreadySet, MissingModifiedNP, MissingParent, UnknownClauseType
from .markup import MarkupNode
from .phrases import (
    Circumstance,
    Modifier,
    NounPhrase,
    PhraseCore,
    PrepPhrase,
    VerbPhrase,
    make_noun_phrase,
    nominative,
    noun_query_text,
    predicate_query_text,
    render_part,
    simple_noun_phrase,
    with_objects,
    with_verb_words,
)
from .realizer import realize_basic

if TYPE_CHECKING:
    from .sentences import BasicSentence, SimpleSentence

NOUN_CLAUSE_TYPES = ("that", "whether", "whether_or_not", "query_clause", "query_to", "normal_to")
ROLES = ("subject", "object", "prep_object")

# verbs whose infinitive complement expresses an obligation or a wish
OBLIGATION_VERBS = frozenset({"tell", "order", "ask", "require", "force", "advise", "urge", "command",
                              "instruct", "remind", "warn"})
FUTURE_VERBS = frozenset({"want", "expect", "wish", "like", "prefer", "intend", "plan", "hope", "allow",
                          "permit", "invite", "encourage", "persuade", "need"})
_REL_PREP = {"where": "in", "when": "at", "why": "for"}


@dataclass
class NounClause:
    base: SimpleSentence
    clause_type: str
    parent_id: str
    grammatical_role: str = "object"
    implied_text: str = ""
    surface_text: str = ""
    parent: SimpleSentence | None = field(default=None, compare=False, repr=False, metadata={"dump": False})

    def __post_init__(self) -> None:
        if self.clause_type not in NOUN_CLAUSE_TYPES:
            raise UnknownClauseType(f"noun clause type {self.clause_type!r}")

    @property
    def text(self) -> str:
        return self.surface_text


@dataclass
class RelativeClause:
    base: SimpleSentence
    parent_id: str
    form: str = "full"  # full or terse
    relative_word: str = "which"
    terse_kind: str | None = None
    modified_noun_phrase: NounPhrase | None = None
    implied_statement: str = ""
    surface_text: str = ""
    parent: SimpleSentence | None = field(default=None, compare=False, repr=False, metadata={"dump": False})

    @property
    def text(self) -> str:
        return self.surface_text

    def set_modified_noun_phrase(self, np: NounPhrase) -> None:
        set_modified_noun_phrase(self, np)


def set_modified_noun_phrase(rc: RelativeClause, np: NounPhrase) -> None:
    """Attach the noun phrase this clause modifies; allowed exactly once."""
    if rc.modified_noun_phrase is not None:
        raise AlreadySet(f"relative clause {rc.base.sid} already has a modified noun phrase")
    rc.modified_noun_phrase = np
    rc.implied_statement = implied_statement(rc)


# -- noun clauses ------------------------------------------------------------------


def parse_noun_clause(node: MarkupNode, parent: SimpleSentence, *, role: str = "object") -> NounClause:
    from .sentences import build_simple

    clause_type = node.value("type", "")
    if clause_type not in NOUN_CLAUSE_TYPES:
        raise UnknownClauseType(f"noun clause type {clause_type!r}")
    sid = f"{parent.sid}/nc{len(parent.noun_clauses)}"
    base = build_simple(node, "statement", sid, parent=parent, clause=True)
    if clause_type == "whether_or_not":
        base.core.text += " or not"
    nc = NounClause(base, clause_type, parent.sid, role, parent=parent)
    nc.surface_text = surface_text(nc)
    if clause_type in ("that", "whether", "whether_or_not", "query_clause"):
        nc.implied_text = implied_text(nc)
    return nc


def surface_text(nc: NounClause) -> str:
    text = nc.base.core.text
    if nc.clause_type == "that":
        return f"that {text}"
    if nc.clause_type.startswith("whether"):
        return f"whether {text}"
    return text


def implied_text(nc: NounClause, parent: SimpleSentence | None = None) -> str:
    """The clause restated as an independent sentence.

    ``that``/``whether`` clauses imply their own body; query clauses imply a
    question; ``query_to`` clauses imply a question whose subject is taken
    from the nearest enclosing sentence (or "a person"); ``normal_to``
    clauses with a separate doer ("I want him to come") imply a statement
    about that doer.
    """
    kind = nc.clause_type
    if kind in ("that", "whether", "whether_or_not"):
        return nc.base.core.text
    if kind == "query_clause":
        return _join(realize_basic(_as(bs, "question")) for bs in nc.base.basic_sentences)
    host = parent if parent is not None else nc.parent
    if host is None:
        raise MissingParent(f"{kind} clause {nc.base.sid} needs its host sentence")
    if kind == "query_to":
        if nc.grammatical_role == "subject":
            subject = simple_noun_phrase("person", article="a")
        else:
            subject = borrowed_subject(host)
        out = []
        for bs in nc.base.basic_sentences:
            vp = finite_from_infinitive(bs.verb_phrase, subject.personality, subject.number)
            out.append(realize_basic(_as(bs, "question", subject=subject, verb_phrase=vp)))
        return _join(out)
    # normal_to
    host_vp = _host_verb_phrase(nc, host)
    if host_vp is None or host_vp.indirect_object is None:
        return nc.base.core.text
    doer = nominative(host_vp.indirect_object)
    out = []
    for bs in nc.base.basic_sentences:
        vp = modal_from_infinitive(bs.verb_phrase, host_vp, doer)
        out.append(realize_basic(_as(bs, "statement", subject=doer, verb_phrase=vp)))
    return _join(out)


def refresh_implied(ss: SimpleSentence) -> None:
    """Recompute implied texts of the clauses owned by ``ss`` once the tree is complete."""
    for nc in ss.noun_clauses:
        nc.implied_text = implied_text(nc)


def _join(texts) -> str:
    return "; ".join(texts)


def _as(bs: BasicSentence, mood: str, **changes) -> BasicSentence:
    return replace(bs, core=replace(bs.core, mood=mood, text=""), **changes)


def borrowed_subject(host: SimpleSentence) -> NounPhrase:
    """Subject of the nearest enclosing sentence that has one.

    An order has the implicit subject "you"; without any subject the
    generic "a person" stands in.
    """
    s: SimpleSentence | None = host
    while s is not None:
        if s.subject_phrase is not None and noun_query_text(s.subject_phrase) is None:
            return nominative(s.subject_phrase)
        if s.core.mood == "order" and not s.is_clause:
            return simple_noun_phrase("you", person="second", kernel_type="perspronoun")
        s = s.parent
    return simple_noun_phrase("person", article="a")


def _strip_to(words: list[str]) -> list[str]:
    return words[1:] if words and words[0].lower() == "to" and len(words) > 1 else list(words)


def finite_from_infinitive(vp: VerbPhrase, person: str, number: str) -> VerbPhrase:
    """"to finish" -> "finishes"/"finish", "to be done" -> "is done"."""
    words = _strip_to(vp.verb_words)
    first = words[0].lower()
    if first == "be":
        words[0] = morph.be_form(person, number)
    elif first == "have" and len(words) > 1:
        words[0] = morph.have_form(person, number)
    else:
        words[0] = morph.finite_form(first if len(words) > 1 else (vp.base or first), person, number)
    return with_verb_words(vp, words, personality=person, number=number, tense="present",
                           kernel_tense="present" if len(words) == 1 else vp.kernel_tense)


def _lemma(vp: VerbPhrase) -> str:
    return (vp.base or morph.base_form(vp.core.kernel, vp.kernel_tense)[0]).lower()


def choose_modal(host_vp: VerbPhrase) -> str:
    lemma = _lemma(host_vp)
    past = host_vp.tense.startswith("past") or host_vp.kernel_tense == "past"
    if lemma in OBLIGATION_VERBS:
        return "should"
    if lemma in FUTURE_VERBS or not past:
        return "would" if past else "will"
    return "would"


def modal_from_infinitive(vp: VerbPhrase, host_vp: VerbPhrase, doer: NounPhrase) -> VerbPhrase:
    """"to come" under "want" -> "will come"; aspect follows the host verb."""
    words = _strip_to(vp.verb_words)
    tense = host_vp.tense
    lemma = _lemma(host_vp)
    if lemma not in OBLIGATION_VERBS | FUTURE_VERBS and tense in ("progressive", "past_progressive"):
        head = morph.be_form(doer.personality, doer.number, tense)
        new = [head, morph.present_participle(words[0].lower())] + words[1:]
    elif lemma not in OBLIGATION_VERBS | FUTURE_VERBS and tense in ("perfect", "past_perfect"):
        head = morph.have_form(doer.personality, doer.number, tense)
        new = [head, morph.past_participle(words[0].lower())] + words[1:]
    else:
        new = [choose_modal(host_vp)] + words
    return with_verb_words(vp, new, personality=doer.personality, number=doer.number)


def _host_verb_phrase(nc: NounClause, host: SimpleSentence) -> VerbPhrase | None:
    idx = host.noun_clauses.index(nc) if nc in host.noun_clauses else None
    for vp in host.verb_phrases:
        obj = vp.direct_object
        if obj is not None and any(p.kernel_type == "noun_clause" and p.clause_index == idx for p in obj.parts):
            return vp
    return None


# -- relative clauses -------------------------------------------------------------------


def parse_relative_clause(node: MarkupNode, parent: SimpleSentence) -> RelativeClause:
    from .sentences import build_simple

    sid = f"{parent.sid}/rc{len(parent.relative_clauses)}"
    base = build_simple(node, "statement", sid, parent=parent, clause=True)
    full = base.subject_phrase is not None
    rc = RelativeClause(base, parent.sid, form="full" if full else "terse", parent=parent)
    if full:
        rc.relative_word = relative_word(base) or "which"
    else:
        rc.relative_word = ""
        rc.terse_kind = terse_kind(base.verb_phrases[0])
    rc.surface_text = base.core.text
    return rc


def terse_kind(vp: VerbPhrase) -> str:
    if vp.voice == "passive" and vp.tense == "future":
        return "passive_infinitive"
    if vp.voice == "passive":
        return "past_participle"
    return "present_participle"


def _first_query_word(text: str | None) -> str | None:
    if not text:
        return None
    for w in text.split():
        if morph.is_query_word(w):
            return w
    return None


def relative_word(base: SimpleSentence) -> str | None:
    """The relative pronoun or adverb carried by the clause body, if any."""
    if base.subject_phrase is not None:
        w = _first_query_word(noun_query_text(base.subject_phrase))
        if w:
            return w
    for vp in base.verb_phrases:
        for text in (noun_query_text(vp.direct_object), noun_query_text(vp.indirect_object),
                     predicate_query_text(vp.predicate)):
            w = _first_query_word(text)
            if w:
                return w
    for c in base.circumstances:
        if c.query_adv:
            return c.query_adv
        w = _first_query_word(c.core.query_text)
        if w:
            return w
    return base.query_adv


def implied_statement(rc: RelativeClause) -> str:
    """The clause as a statement about the noun phrase it modifies.

    "whom you met yesterday" on "the man" gives "you met the man yesterday";
    "running in the park" on "the boy" gives "the boy is running in the park".
    """
    np = rc.modified_noun_phrase
    if np is None:
        raise MissingModifiedNP(f"relative clause {rc.base.sid} has no modified noun phrase")
    out = []
    for bs in rc.base.basic_sentences:
        if rc.form == "terse":
            vp = _terse_verb(bs.verb_phrase, rc.terse_kind, np)
            out.append(realize_basic(_as(bs, "statement", subject=np, verb_phrase=vp)))
        else:
            out.append(realize_basic(_substitute(bs, np)))
    return _join(out)


def _terse_verb(vp: VerbPhrase, kind: str | None, np: NounPhrase) -> VerbPhrase:
    words = list(vp.verb_words)
    if kind == "passive_infinitive":
        new = ["should"] + _strip_to(words)
    elif kind == "past_participle":
        new = [morph.be_form(np.personality, np.number, "past")] + words
    else:
        new = [morph.be_form(np.personality, np.number, "present")] + words
    return with_verb_words(vp, new, personality=np.personality, number=np.number)


def _replace_in_np(target: NounPhrase, np: NounPhrase) -> NounPhrase:
    """Put ``np`` where the query word of ``target`` is."""
    parts = []
    for p in target.parts:
        if morph.is_query_word(p.kernel):
            parts.extend(_with_case(np, p.case_).parts)
            continue
        mods = list(p.pre_modifiers)
        for i, m in enumerate(mods):
            if m.modifier_type in ("determiner", "quantifier", "article") and morph.is_query_word(m.text.split()[0]):
                word = m.text.split()[0].lower()
                text = f"{np.core.text}'s" if word == "whose" else np.core.text
                mods[i] = Modifier("determiner", text)
                q = replace(p, pre_modifiers=mods)
                q.text = render_part(q)
                p = q
                break
        parts.append(p)
    return make_noun_phrase(parts, target.core.part_connector, parent_id=target.core.parent_id)


def _with_case(np: NounPhrase, case: str) -> NounPhrase:
    if np.case_ == case:
        return np
    parts = [replace(p, case_=case) for p in np.parts]
    return make_noun_phrase(parts, np.core.part_connector, parent_id=np.core.parent_id)


def _pp_circumstance(prep: str, np: NounPhrase, c: Circumstance) -> Circumstance:
    pp = PrepPhrase(PhraseCore(text=f"{prep} {np.core.text}", type="prep_phrase", kernel=prep,
                               description=f"prepositional phrase {prep!r} + {np.core.text!r}"),
                    prep=prep, object_np=np)
    text = pp.core.text
    return Circumstance(replace(c.core, text=text, type="prep_phrase", kernel=prep, query_text=None,
                                description=f"circumstance {text!r}: prep_phrase, post position, {c.attribute}"),
                        circum_type="prep_phrase", position="post", attribute=c.attribute, payload=pp)


def _substitute(bs: BasicSentence, np: NounPhrase) -> BasicSentence:
    vp = bs.verb_phrase
    if bs.subject is not None and noun_query_text(bs.subject) is not None:
        return _as(bs, "statement", subject=_replace_in_np(bs.subject, np))
    for name in ("direct_object", "indirect_object"):
        obj = getattr(vp, name)
        if noun_query_text(obj) is not None:
            vp2 = with_objects(vp, **{name: _replace_in_np(obj, _with_case(np, "acc"))})
            return _as(bs, "statement", verb_phrase=vp2)
    pred = vp.predicate
    if pred is not None and isinstance(pred.payload, NounPhrase) and noun_query_text(pred.payload) is not None:
        payload = _replace_in_np(pred.payload, np)
        pred2 = replace(pred, core=replace(pred.core, text=payload.core.text, query_text=None), payload=payload)
        return _as(bs, "statement", verb_phrase=with_objects(vp, predicate=pred2))
    circs = list(bs.circumstances)
    for i, c in enumerate(circs):
        if c.query_adv:
            circs[i] = _pp_circumstance(_REL_PREP.get(c.query_adv.lower(), "in"), _with_case(np, "acc"), c)
            return _as(bs, "statement", circumstances=circs, query_adv=None)
        if isinstance(c.payload, PrepPhrase) and noun_query_text(c.payload.object_np) is not None:
            obj = _replace_in_np(c.payload.object_np, _with_case(np, "acc"))
            circs[i] = _pp_circumstance(c.payload.prep, obj, c)
            return _as(bs, "statement", circumstances=circs)
    if vp.direct_object is None and vp.verb_type in ("transitive", "ditransitive"):
        return _as(bs, "statement", verb_phrase=with_objects(vp, direct_object=_with_case(np, "acc")))
    return _as(bs, "statement")
