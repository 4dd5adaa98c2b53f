"""Phrase classes built from NLML subtrees.

Every phrase carries a :class:`PhraseCore` with its source fragment, its
realized text and a short description. Text is rendered once at parse time;
helpers that derive a new phrase (agreement, substitution) re-render it.

Clauses are not parsed here. By the time a noun container is read, the
host sentence has replaced each ``noun_clause`` with a placeholder ``noun``
carrying a ``clause_ref`` index, and each ``relative_clause`` with a
``relative_ref`` index into ``host.relative_clauses``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Union

from . import morphology as morph
from .errors import SchemaError
from .markup import MarkupNode, serialize

if TYPE_CHECKING:
    from .sentences import SimpleSentence

EXTENT_TYPES = ("so_that", "so_as", "enough_to", "too_to", "adv_than")
VERB_TYPES = ("be", "intransitive", "transitive", "ditransitive", "mental_to", "link")
CONNECTORS = ("and", "or", "neither_nor")


@dataclass
class PhraseCore:
    nlml: str = ""
    text: str = ""
    description: str = ""
    type: str = ""
    part_connector: str | None = None
    kernel: str = ""
    query_text: str | None = None
    parent_id: str | None = None


@dataclass
class Adverb:
    core: PhraseCore
    grad: str = "abso"
    extent_np: NounPhrase | None = None

    def __post_init__(self) -> None:
        if (self.extent_np is not None) != (self.core.type in EXTENT_TYPES):
            raise SchemaError(f"adverb of type {self.core.type!r} and extent phrase do not match")


@dataclass
class Adjective:
    core: PhraseCore
    grad: str = "abso"
    advs: list[Adverb] = field(default_factory=list)


@dataclass
class PrepPhrase:
    core: PhraseCore
    prep: str
    object_np: NounPhrase


@dataclass
class NounClauseRef:
    """Placeholder for a noun clause owned by the host sentence."""

    index: int
    text: str


@dataclass
class Modifier:
    modifier_type: str  # article, determiner, quantifier, adjective, prep_phrase, relative_clause
    text: str
    payload: Union[Adjective, PrepPhrase, int, None] = None


@dataclass
class NounPart:
    kernel: str
    kernel_type: str
    text: str
    pre_modifiers: list[Modifier] = field(default_factory=list)
    post_modifiers: list[Modifier] = field(default_factory=list)
    personality: str = "third"
    number: str = "sing"
    case_: str = "nom"
    sex: str = "unknown"
    clause_index: int | None = None


@dataclass
class NounPhrase:
    core: PhraseCore
    parts: list[NounPart]
    personality: str = "third"
    number: str = "sing"
    case_: str = "nom"
    sex: str = "unknown"

    def __post_init__(self) -> None:
        if not self.parts:
            raise SchemaError("noun phrase without parts")
        if (self.core.part_connector is not None) != (len(self.parts) >= 2):
            raise SchemaError("part_connector must be present exactly when there are several parts")

    @property
    def part_connector(self) -> str | None:
        return self.core.part_connector

    @property
    def text(self) -> str:
        return self.core.text


@dataclass
class Circumstance:
    core: PhraseCore
    circum_type: str  # adverb, prep_phrase, clause
    position: str
    attribute: str
    payload: Union[Adverb, PrepPhrase, NounClauseRef]
    query_adv: str | None = None

    @property
    def text(self) -> str:
        return self.core.text


@dataclass
class Comparative:
    connector: str  # as_as, than, too_to, enough_to, so_that
    complement: NounPhrase


@dataclass
class PredicatePhrase:
    core: PhraseCore
    predicate_type: str  # adjective, noun_phrase, prep_phrase
    payload: Union[Adjective, NounPhrase, PrepPhrase]
    comparative: Comparative | None = None

    def __post_init__(self) -> None:
        if self.comparative is not None and self.predicate_type != "adjective":
            raise SchemaError("comparison complements need an adjective predicate")


@dataclass
class VerbPhrase:
    core: PhraseCore
    verb_words: list[str]
    verb_type: str = "intransitive"
    personality: str = "third"
    number: str = "sing"
    voice: str = "active"
    tense: str = "present"
    kernel_tense: str = "base"
    direct_object: NounPhrase | None = None
    indirect_object: NounPhrase | None = None
    predicate: PredicatePhrase | None = None
    neg: str | None = None
    circumstances: list[Circumstance] = field(default_factory=list)
    base: str | None = None

    def __post_init__(self) -> None:
        if not self.verb_words:
            raise SchemaError("verb phrase without verb words")
        if self.verb_type == "be" and self.predicate is None:
            raise SchemaError("verb_type be requires a predicate")
        if self.verb_type == "ditransitive" and (self.direct_object is None or self.indirect_object is None):
            raise SchemaError("ditransitive verb phrase needs direct and indirect objects")

    @property
    def text(self) -> str:
        return self.core.text


Phrase = Union[Adverb, Adjective, PrepPhrase, NounPhrase, Circumstance, PredicatePhrase, VerbPhrase]


# -- rendering ---------------------------------------------------------------


def join_parts(texts: list[str], connector: str | None) -> str:
    """Join coordinated parts: "A and B", "A, B or C", "neither A nor B"."""
    if len(texts) == 1 or connector is None:
        return " ".join(texts)
    if connector == "neither_nor":
        return "neither " + " nor ".join(texts)
    if len(texts) == 2:
        return f"{texts[0]} {connector} {texts[1]}"
    return ", ".join(texts[:-1]) + f" {connector} {texts[-1]}"


def _to(text: str) -> str:
    return text if text.startswith("to ") else f"to {text}"


def render_adverb(adv: Adverb) -> str:
    word = adv.core.kernel
    if adv.extent_np is None:
        return word
    np = adv.extent_np.core.text
    return {
        "so_that": f"so {word} that {np}",
        "so_as": f"so {word} as {np}",
        "enough_to": f"{word} enough {_to(np)}",
        "too_to": f"too {word} {_to(np)}",
        "adv_than": f"{word} than {np}",
    }[adv.core.type]


def render_adjective(adj: Adjective) -> str:
    return " ".join([a.core.text for a in adj.advs] + [adj.core.kernel])


def render_part(part: NounPart) -> str:
    if part.kernel_type == "noun_clause":
        return part.text
    words = [m.text for m in part.pre_modifiers] + [part.kernel] + [m.text for m in part.post_modifiers]
    return " ".join(w for w in words if w)


def render_noun_phrase(np: NounPhrase) -> str:
    return join_parts([render_part(p) for p in np.parts], np.core.part_connector)


def render_predicate(pred: PredicatePhrase) -> str:
    head = pred.payload.core.text
    if pred.comparative is None:
        return head
    other = pred.comparative.complement.core.text
    return {
        "as_as": f"as {head} as {other}",
        "than": f"{head} than {other}",
        "too_to": f"too {head} {_to(other)}",
        "enough_to": f"{head} enough {_to(other)}",
        "so_that": f"so {head} that {other}",
    }[pred.comparative.connector]


def _is_past(vp: VerbPhrase) -> bool:
    return vp.tense.startswith("past") or vp.kernel_tense == "past"


def _non_finite(vp: VerbPhrase) -> bool:
    first = vp.verb_words[0].lower()
    if first == "to" or vp.tense == "infinitive":
        return True
    return len(vp.verb_words) == 1 and vp.kernel_tense in ("pres_part", "past_part")


def verb_base(vp: VerbPhrase, word: str | None = None) -> str:
    """Base form of the first verb word (or ``word``)."""
    w = word if word is not None else vp.verb_words[0]
    if word is None and vp.base and len(vp.verb_words) == 1:
        return vp.base
    if w.lower() == vp.core.kernel.lower() and vp.base:
        return vp.base
    return morph.base_form(w, vp.kernel_tense)[0]


def verb_chain(vp: VerbPhrase) -> list[str]:
    """Verb words with any negation folded in."""
    words = list(vp.verb_words)
    neg = vp.neg
    if not neg:
        return words
    followed = len(words) > 1
    if "n't" in neg.lower():
        if morph.is_auxiliary(words[0], followed=followed):
            return [neg] + words[1:]
        return [neg, verb_base(vp)] + words[1:]
    if _non_finite(vp):
        return [neg] + words
    if morph.is_auxiliary(words[0], followed=followed):
        return [words[0], neg] + words[1:]
    return [morph.do_form(vp.personality, vp.number, "past" if _is_past(vp) else "present"), neg,
            verb_base(vp)] + words[1:]


def complements(vp: VerbPhrase, exclude: object = None) -> list[str]:
    """Objects, predicate and verb-internal circumstances, in realization order."""
    out = []
    for item in (vp.indirect_object, vp.direct_object, vp.predicate, *vp.circumstances):
        if item is not None and item is not exclude:
            out.append(item.core.text)
    return out


def render_verb_phrase(vp: VerbPhrase) -> str:
    return " ".join(verb_chain(vp) + complements(vp))


def split_auxiliary(vp: VerbPhrase, exclude: object = None) -> tuple[str, list[str]]:
    """Split off the word that inverts with the subject in a question.

    An auxiliary, modal or be-form in first position fronts itself;
    otherwise do-support supplies do/does/did and the main verb drops to
    its base form. The remainder includes objects, predicate and
    verb-internal circumstances (minus ``exclude``).
    """
    chain = verb_chain(vp)
    if chain[0].lower() == "to":
        chain = chain[1:]
    rest = complements(vp, exclude)
    if morph.is_auxiliary(chain[0], followed=len(chain) > 1):
        return chain[0], chain[1:] + rest
    aux = morph.do_form(vp.personality, vp.number, "past" if _is_past(vp) else "present")
    return aux, [verb_base(vp, chain[0])] + chain[1:] + rest


# -- query helpers -------------------------------------------------------------


def _part_query(part: NounPart) -> str | None:
    if part.kernel_type == "noun_clause":
        return None
    if morph.is_query_word(part.kernel):
        return render_part(part)
    for m in part.pre_modifiers:
        if m.modifier_type in ("determiner", "quantifier", "article") and morph.is_query_word(m.text.split()[0]):
            return render_part(part)
    return None


def noun_query_text(np: NounPhrase | None) -> str | None:
    """Interrogative surface form of a noun phrase, or None."""
    if np is None:
        return None
    for part in np.parts:
        q = _part_query(part)
        if q is not None:
            return q
    return None


def predicate_query_text(pred: PredicatePhrase | None) -> str | None:
    if pred is None:
        return None
    payload = pred.payload
    if isinstance(payload, NounPhrase):
        return noun_query_text(payload)
    if isinstance(payload, Adjective):
        return payload.core.text if morph.is_query_word(payload.core.kernel) else None
    return payload.core.query_text


def verb_query_text(vp: VerbPhrase) -> str | None:
    """Query text of the direct object, indirect object or predicate, in that order."""
    return query_item(vp)[1]


def query_item(vp: VerbPhrase) -> tuple[object, str | None]:
    """The constituent of ``vp`` that holds a query word, with its text."""
    for obj in (vp.direct_object, vp.indirect_object):
        q = noun_query_text(obj)
        if q is not None:
            return obj, q
    q = predicate_query_text(vp.predicate)
    if q is not None:
        return vp.predicate, q
    return None, None


def get_query_text(phrase: NounPhrase | VerbPhrase) -> str | None:
    if isinstance(phrase, VerbPhrase):
        return verb_query_text(phrase)
    return noun_query_text(phrase)


# -- descriptions ----------------------------------------------------------------


def _describe_np(np: NounPhrase) -> str:
    parts = "; ".join(f"{p.kernel_type} {p.kernel or p.text!r}" for p in np.parts)
    conn = f" joined by {np.core.part_connector}" if np.core.part_connector else ""
    query = ", query" if np.core.query_text else ""
    return f"noun phrase [{parts}]{conn}: {np.personality} person, {np.number}, {np.case_}{query}"


def _describe_vp(vp: VerbPhrase, warning: str | None = None) -> str:
    bits = [f"verb phrase {vp.verb_type}", f"{vp.tense} {vp.voice}",
            f"{vp.personality} person {vp.number}", f"words {' '.join(vp.verb_words)!r}"]
    if vp.neg:
        bits.append(f"negated by {vp.neg!r}")
    if vp.direct_object is not None:
        bits.append(f"direct object {vp.direct_object.core.text!r}")
    if vp.indirect_object is not None:
        bits.append(f"indirect object {vp.indirect_object.core.text!r}")
    if vp.predicate is not None:
        bits.append(f"predicate {vp.predicate.core.text!r}")
    if warning:
        bits.append(f"warning: {warning}")
    return "; ".join(bits)


# -- parsing -------------------------------------------------------------------------


def _core(node: MarkupNode, parent: SimpleSentence | None, **kw) -> PhraseCore:
    return PhraseCore(nlml=serialize(node, root=False), parent_id=parent.sid if parent is not None else None, **kw)


def parse_adverb(node: MarkupNode, parent: SimpleSentence | None = None) -> Adverb:
    kind = node.value("type", "normal")
    word = node.value("word", "")
    extent = None
    if kind in EXTENT_TYPES:
        np_node = node.child("np")
        if np_node is None:
            raise SchemaError(f"adverb of type {kind} needs an <np>")
        extent = parse_noun_phrase(np_node, parent)
    query = word if morph.is_query_word(word) else None
    adv = Adverb(_core(node, parent, type=kind, kernel=word, query_text=query),
                 grad=node.value("grad", "abso"), extent_np=extent)
    adv.core.text = render_adverb(adv)
    adv.core.description = f"adverb {word!r} ({kind}, {adv.grad})"
    return adv


def parse_adjective(node: MarkupNode, parent: SimpleSentence | None = None) -> Adjective:
    word = node.value("word", "")
    adj = Adjective(_core(node, parent, type="adjective", kernel=word,
                          query_text=word if morph.is_query_word(word) else None),
                    grad=node.value("grad", "abso"),
                    advs=[parse_adverb(a, parent) for a in node.all("adv")])
    adj.core.text = render_adjective(adj)
    mods = f" modified by {', '.join(a.core.text for a in adj.advs)}" if adj.advs else ""
    adj.core.description = f"adjective {word!r} ({adj.grad}){mods}"
    return adj


def parse_prep_phrase(node: MarkupNode, parent: SimpleSentence | None = None) -> PrepPhrase:
    prep = node.value("prep")
    obj = node.child("object")
    if not prep or obj is None:
        raise SchemaError("prepositional phrase needs <prep> and <object>")
    np = parse_noun_phrase(obj, parent)
    pp = PrepPhrase(_core(node, parent, type="prep_phrase", kernel=prep), prep=prep, object_np=np)
    pp.core.text = f"{prep} {np.core.text}"
    if np.core.query_text:
        pp.core.query_text = pp.core.text
    pp.core.description = f"prepositional phrase {prep!r} + {np.core.text!r}"
    return pp


def _resolve_clause_ref(node: MarkupNode, parent: SimpleSentence | None) -> NounClauseRef:
    if parent is None:
        raise SchemaError("clause placeholder outside a host sentence")
    idx = int(node.value("clause_ref", "-1"))
    if not 0 <= idx < len(parent.noun_clauses):
        raise SchemaError(f"dangling noun clause reference {idx}")
    return NounClauseRef(idx, parent.noun_clauses[idx].surface_text)


def parse_circumstance(node: MarkupNode, parent: SimpleSentence | None = None) -> Circumstance:
    kind = node.value("type")
    position = node.value("position", "post")
    attribute = node.value("attribute", "other")
    query_adv = None
    if kind == "adverb" and node.has("adv"):
        payload: Adverb | PrepPhrase | NounClauseRef = parse_adverb(node.child("adv"), parent)
        word = payload.core.kernel
        if word.lower() in morph.QUERY_ADVERBS:
            query_adv = word
        text = payload.core.text
    elif kind == "prep_phrase" and node.has("prep_phrase"):
        payload = parse_prep_phrase(node.child("prep_phrase"), parent)
        text = payload.core.text
    elif kind == "clause" and node.has("noun"):
        payload = _resolve_clause_ref(node.child("noun"), parent)
        text = payload.text
    else:
        raise SchemaError(f"circumstance of type {kind!r} lacks its payload")
    query_text = query_adv or (payload.core.query_text if isinstance(payload, PrepPhrase) else None)
    circ = Circumstance(_core(node, parent, type=kind, kernel=text.split()[0] if text else "",
                              text=text, query_text=query_text),
                        circum_type=kind, position=position, attribute=attribute, payload=payload,
                        query_adv=query_adv)
    circ.core.description = f"circumstance {text!r}: {kind}, {position} position, {attribute}"
    return circ


def _parse_part(node: MarkupNode, parent: SimpleSentence | None) -> tuple[NounPart, list[int]]:
    """One ``noun`` element. Also returns relative-clause indices found on it."""
    if node.value("type") == "noun_clause" and node.has("clause_ref"):
        ref = _resolve_clause_ref(node, parent)
        return NounPart(kernel="", kernel_type="noun_clause", text=ref.text, clause_index=ref.index), []
    word = node.value("word")
    if not word:
        raise SchemaError("noun without <word>")
    pre: list[Modifier] = []
    post: list[Modifier] = []
    rel: list[int] = []
    for c in node.children:
        if c.tag in ("article", "determiner", "quantifier"):
            pre.append(Modifier(c.tag, c.text))
        elif c.tag == "adj":
            adj = parse_adjective(c, parent)
            pre.append(Modifier("adjective", adj.core.text, adj))
        elif c.tag == "prep_phrase":
            pp = parse_prep_phrase(c, parent)
            post.append(Modifier("prep_phrase", pp.core.text, pp))
        elif c.tag == "relative_ref":
            idx = int(c.text)
            if parent is None or not 0 <= idx < len(parent.relative_clauses):
                raise SchemaError(f"dangling relative clause reference {idx}")
            post.append(Modifier("relative_clause", parent.relative_clauses[idx].surface_text, idx))
            rel.append(idx)
        elif c.tag == "relative_clause":
            raise SchemaError("relative clause must be preprocessed by its host sentence")
    part = NounPart(kernel=word, kernel_type=node.value("type", "noun"), text="",
                    pre_modifiers=pre, post_modifiers=post,
                    personality=node.value("pers", "third"), number=node.value("numb", "sing"),
                    case_=node.value("case", "nom"), sex=node.value("sex", "unknown"))
    part.text = render_part(part)
    return part, rel


def _agreement(parts: list[NounPart], connector: str | None) -> tuple[str, str]:
    if len(parts) == 1:
        return parts[0].personality, parts[0].number
    if connector == "and":
        persons = {p.personality for p in parts}
        person = "first" if "first" in persons else "second" if "second" in persons else "third"
        return person, "plur"
    # or / neither_nor agree with the nearest part
    return parts[-1].personality, parts[-1].number


def make_noun_phrase(parts: list[NounPart], connector: str | None = None, *,
                     nlml: str = "", parent_id: str | None = None) -> NounPhrase:
    if not parts:
        raise SchemaError("noun phrase without parts")
    person, number = _agreement(parts, connector)
    np = NounPhrase(PhraseCore(nlml=nlml, type=parts[0].kernel_type, part_connector=connector,
                               kernel=parts[0].kernel, parent_id=parent_id),
                    parts=parts, personality=person, number=number, case_=parts[0].case_,
                    sex=parts[0].sex if len(parts) == 1 else "unknown")
    np.core.text = render_noun_phrase(np)
    np.core.query_text = noun_query_text(np)
    np.core.description = _describe_np(np)
    return np


def simple_noun_phrase(word: str, *, article: str | None = None, person: str = "third",
                       number: str = "sing", case: str = "nom", kernel_type: str = "countable_noun") -> NounPhrase:
    """Build a one-word noun phrase such as "a person" without markup."""
    pre = [Modifier("article", article)] if article else []
    part = NounPart(kernel=word, kernel_type=kernel_type, text="", pre_modifiers=pre,
                    personality=person, number=number, case_=case)
    part.text = render_part(part)
    return make_noun_phrase([part])


def parse_noun_phrase(node: MarkupNode, parent: SimpleSentence | None = None) -> NounPhrase:
    """Parse a noun container (subject, direct_object, indirect_object, np, object)."""
    parts: list[NounPart] = []
    relatives: list[tuple[int, list[int]]] = []
    for c in node.children:
        if c.tag == "noun":
            part, rel = _parse_part(c, parent)
            if rel:
                relatives.append((len(parts), rel))
            parts.append(part)
        elif c.tag == "noun_clause":
            raise SchemaError("noun clause must be preprocessed by its host sentence")
    if not parts:
        raise SchemaError(f"<{node.tag}> has no noun part")
    connector = node.value("part_connector")
    if (connector is not None) != (len(parts) >= 2):
        raise SchemaError(f"<{node.tag}>: part_connector does not match {len(parts)} part(s)")
    np = make_noun_phrase(parts, connector, nlml=serialize(node, root=False),
                          parent_id=parent.sid if parent is not None else None)
    for part_index, indices in relatives:
        part = parts[part_index]
        bare = replace(part, post_modifiers=[m for m in part.post_modifiers if m.modifier_type != "relative_clause"])
        bare.text = render_part(bare)
        modified = make_noun_phrase([bare], parent_id=np.core.parent_id)
        for idx in indices:
            parent.relative_clauses[idx].set_modified_noun_phrase(modified)
    return np


def parse_predicate(node: MarkupNode, parent: SimpleSentence | None = None) -> PredicatePhrase:
    kind = node.value("type")
    if kind == "adjective" and node.has("adj"):
        payload: Adjective | NounPhrase | PrepPhrase = parse_adjective(node.child("adj"), parent)
    elif kind == "noun_phrase" and node.has("np"):
        payload = parse_noun_phrase(node.child("np"), parent)
    elif kind == "prep_phrase" and node.has("prep_phrase"):
        payload = parse_prep_phrase(node.child("prep_phrase"), parent)
    else:
        raise SchemaError(f"predicate of type {kind!r} lacks its payload")
    comparative = None
    cmp_node = node.child("compare")
    if cmp_node is not None:
        if isinstance(payload, Adjective) and any(a.extent_np is not None for a in payload.advs):
            raise SchemaError("extent adverb cannot co-occur with a predicate comparison")
        np_node = cmp_node.child("np")
        if np_node is None or not cmp_node.value("type"):
            raise SchemaError("<compare> needs <type> and <np>")
        comparative = Comparative(cmp_node.value("type"), parse_noun_phrase(np_node, parent))
    pred = PredicatePhrase(_core(node, parent, type=kind, kernel=payload.core.kernel),
                           predicate_type=kind, payload=payload, comparative=comparative)
    pred.core.text = render_predicate(pred)
    pred.core.query_text = predicate_query_text(pred)
    pred.core.description = f"predicate ({kind}) {pred.core.text!r}"
    return pred


def _kernel_verb(words: list[str]) -> str:
    content = [w for w in words if w.lower() != "to"]
    return content[-1] if content else words[-1]


def parse_verb_phrase(node: MarkupNode, parent: SimpleSentence | None = None) -> VerbPhrase:
    """Parse a ``verb_phrase`` (single) or ``verb_phrase_part`` element.

    Agreement and tense tags are read first, then the pattern parts selected
    by ``verb_type``, then the verb words.
    """
    verb_type = node.value("verb_type", "intransitive")
    if verb_type not in VERB_TYPES:
        raise SchemaError(f"unsupported verb_type {verb_type!r}")
    attrs = dict(personality=node.value("pers", "third"), number=node.value("numb", "sing"),
                 voice=node.value("voice", "active"), tense=node.value("tense", "present"),
                 kernel_tense=node.value("kernel_tense", "base"))

    direct = indirect = None
    predicate = None
    if node.has("predicate"):
        predicate = parse_predicate(node.child("predicate"), parent)
    elif verb_type == "be":
        raise SchemaError("verb_type be requires a predicate")
    if node.has("direct_object"):
        direct = parse_noun_phrase(node.child("direct_object"), parent)
    if node.has("indirect_object"):
        indirect = parse_noun_phrase(node.child("indirect_object"), parent)
    circs = [parse_circumstance(c, parent) for c in node.all("circum")]

    words = [v.text for v in node.all("verb") if v.text]
    if not words:
        raise SchemaError("verb phrase without <verb> words")
    kernel = _kernel_verb(words)
    base = node.value("base")
    warning = None
    if base is None:
        kt = attrs["kernel_tense"] if kernel == words[-1] else "base"
        base, warning = morph.base_form(kernel, kt)
    vp = VerbPhrase(_core(node, parent, type=verb_type, kernel=kernel), verb_words=words,
                    verb_type=verb_type, direct_object=direct, indirect_object=indirect,
                    predicate=predicate, neg=node.value("neg"), circumstances=circs, base=base, **attrs)
    return _refresh_vp(vp, warning)


def _refresh_vp(vp: VerbPhrase, warning: str | None = None) -> VerbPhrase:
    vp.core.text = render_verb_phrase(vp)
    vp.core.query_text = verb_query_text(vp)
    vp.core.description = _describe_vp(vp, warning)
    return vp


def with_verb_words(vp: VerbPhrase, words: list[str], **changes) -> VerbPhrase:
    """Copy of ``vp`` with new verb words (and other field changes), re-rendered."""
    new = replace(vp, core=replace(vp.core), verb_words=list(words), **changes)
    return _refresh_vp(new)


def with_objects(vp: VerbPhrase, **changes) -> VerbPhrase:
    """Copy of ``vp`` with objects/predicate/circumstances replaced, re-rendered."""
    new = replace(vp, core=replace(vp.core), **changes)
    return _refresh_vp(new)


def agree(vp: VerbPhrase, person: str, number: str) -> VerbPhrase:
    """Re-inflect the finite verb of ``vp`` for a new subject."""
    if (vp.personality, vp.number) == (person, number):
        return vp
    words = list(vp.verb_words)
    first = words[0]
    low = first.lower()
    tense = "past" if _is_past(vp) else "present"
    followed = len(words) > 1
    neg = vp.neg
    if low in morph.BE_FINITE:
        words[0] = morph.be_form(person, number, tense)
    elif low in morph.HAVE_FORMS and tense == "present":
        words[0] = morph.have_form(person, number)
    elif low in morph.DO_FORMS and followed:
        words[0] = morph.do_form(person, number, tense)
    elif low in morph.MODALS or _non_finite(vp) or tense == "past" or (neg and "n't" in neg.lower()):
        pass
    elif vp.kernel_tense in ("base", "present"):
        words[0] = morph.finite_form(verb_base(vp, first), person, number)
    if neg and neg.lower() in ("don't", "doesn't"):
        neg = "doesn't" if (number == "sing" and person == "third") else "don't"
    return with_verb_words(vp, words, personality=person, number=number, neg=neg)


def split_noun_phrase(np: NounPhrase) -> list[NounPhrase]:
    """One single-part noun phrase per coordinated part."""
    if len(np.parts) == 1:
        return [np]
    return [make_noun_phrase([p], parent_id=np.core.parent_id) for p in np.parts]


def nominative(np: NounPhrase) -> NounPhrase:
    """Copy of a pronoun noun phrase in nominative case (him -> he)."""
    parts = []
    changed = False
    for p in np.parts:
        word = morph.to_nominative(p.kernel) if p.kernel else p.kernel
        if word != p.kernel:
            changed = True
            q = replace(p, kernel=word, case_="nom")
            q.text = render_part(q)
            parts.append(q)
        else:
            parts.append(p)
    if not changed:
        return np
    return make_noun_phrase(parts, np.core.part_connector, parent_id=np.core.parent_id)
