"""Linearization of basic sentences into surface text.

Word order is decided per mood and collected in a :class:`RealizationPlan`
(fronted words, core slots, trailing words) before being joined with single
spaces. Circumstances are slotted by their ``position``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from . import morphology as morph
from .errors import MissingObject, MissingPredicateAdjective, UnrealizableMood
from .phrases import (
    Adjective,
    Circumstance,
    NounPhrase,
    VerbPhrase,
    complements,
    noun_query_text,
    query_item,
    split_auxiliary,
    verb_base,
    verb_chain,
    with_verb_words,
)

if TYPE_CHECKING:
    from .sentences import BasicSentence

PHRASE_MOODS = frozenset({"np", "about", "what terse exclamation", "adj", "how terse exclamation", "circumstances"})
TERMINAL = {"question": "?", "full exclamation": "!", "what terse exclamation": "!",
            "how terse exclamation": "!", "about": "?"}


@dataclass
class RealizationPlan:
    fronted: list[str] = field(default_factory=list)
    core_slots: list[str] = field(default_factory=list)
    trailing: list[str] = field(default_factory=list)
    mid_at: int | None = None  # core slot index where mid circumstances go

    def tokens(self) -> list[str]:
        return [t for t in self.fronted + self.core_slots + self.trailing if t]

    def join(self, punctuation: str = "") -> str:
        text = " ".join(" ".join(self.tokens()).split())
        return text + punctuation if text else text


def place_circumstances(circs: list[Circumstance], plan: RealizationPlan) -> RealizationPlan:
    """Slot circumstances into ``plan`` by position, keeping document order."""
    if not circs:
        return plan
    fronted = list(plan.fronted)
    core = list(plan.core_slots)
    trailing = list(plan.trailing)
    mid_at = plan.mid_at if plan.mid_at is not None else len(core)
    for c in circs:
        if c.position == "pre":
            fronted.append(c.core.text)
        elif c.position == "mid":
            core.insert(mid_at, c.core.text)
            mid_at += 1
        else:
            trailing.append(c.core.text)
    return RealizationPlan(fronted, core, trailing, mid_at)


def terminal_punctuation(mood: str, punctuate: bool = False) -> str:
    return TERMINAL.get(mood, "." if punctuate else "")


def negate_verb_phrase(vp: VerbPhrase) -> VerbPhrase:
    """Add one negation: "will go" -> "will not go", "comes" -> "does not come"."""
    words = list(vp.verb_words)
    first = words[0]
    if morph.is_auxiliary(first, followed=len(words) > 1) and not first.lower().endswith("n't"):
        new = [first, "not"] + words[1:]
    elif first.lower() == "to" or vp.tense == "infinitive" or (
        len(words) == 1 and vp.kernel_tense in ("pres_part", "past_part")
    ):
        new = ["not"] + words
    elif first.lower().endswith("n't"):
        new = [first, "not"] + words[1:]
    else:
        tense = "past" if vp.tense.startswith("past") or vp.kernel_tense == "past" else "present"
        new = [morph.do_form(vp.personality, vp.number, tense), "not", verb_base(vp)] + words[1:]
        return with_verb_words(vp, new, kernel_tense="base")
    return with_verb_words(vp, new)


def negation_count(text: str) -> int:
    return sum(1 for t in text.split() if t.lower() in morph.NEGATIONS or t.lower().endswith("n't"))


# -- query focus -----------------------------------------------------------------


@dataclass
class _Focus:
    text: str | None = None
    vp_item: object = None
    circumstance: Circumstance | None = None
    subject: bool = False


def find_focus(bs: BasicSentence) -> _Focus:
    """Which constituent carries the query word, if any."""
    if bs.subject is not None and noun_query_text(bs.subject) is not None:
        return _Focus(subject=True)
    if bs.query_adv:
        for c in bs.circumstances:
            if c.query_adv and c.query_adv.lower() == bs.query_adv.lower():
                return _Focus(text=c.core.text, circumstance=c)
        return _Focus(text=bs.query_adv)
    for c in bs.circumstances:
        if c.query_adv:
            return _Focus(text=c.core.text, circumstance=c)
    item, text = query_item(bs.verb_phrase)
    if text is not None:
        return _Focus(text=text, vp_item=item)
    for c in bs.circumstances:
        if c.core.query_text:
            return _Focus(text=c.core.text, circumstance=c)
    return _Focus()


def _is_aux_chain(chain: list[str]) -> bool:
    return morph.is_auxiliary(chain[0], followed=len(chain) > 1)


def build_plan(bs: BasicSentence) -> RealizationPlan:
    mood = bs.core.mood
    vp = bs.verb_phrase
    focus = find_focus(bs)
    fronted = [focus.text] if focus.text else []
    circs = [c for c in bs.circumstances if c is not focus.circumstance]
    subject = [bs.subject.core.text] if bs.subject is not None else []
    neg = [bs.neg] if bs.neg else []

    if mood == "question" and not focus.subject and bs.subject is not None:
        aux, rest = split_auxiliary(vp, exclude=focus.vp_item)
        core = [aux] + subject + neg + rest
        mid_at = 1 + len(subject) + len(neg)
    else:
        chain = verb_chain(vp)
        if mood == "question" and bs.subject is None and chain[0].lower() == "to":
            chain = chain[1:]
        head = subject + neg
        core = head + chain + complements(vp, exclude=focus.vp_item)
        mid_at = len(head) + (1 if _is_aux_chain(chain) else 0)
    if bs.subordinator:
        fronted.insert(0, bs.subordinator)
    plan = RealizationPlan(fronted, core, [], mid_at)
    return place_circumstances(circs, plan)


def realize_basic(bs: BasicSentence, punctuate: bool = False) -> str:
    """Surface text of a basic sentence according to its mood."""
    mood = bs.core.mood
    if mood in PHRASE_MOODS:
        raise UnrealizableMood(f"mood {mood!r} is realized from its phrase, not a basic sentence")
    if mood == "full exclamation":
        return realize_exclamation(bs, exclamation_opener(bs.verb_phrase))
    return build_plan(bs).join(terminal_punctuation(mood, punctuate))


def exclamation_opener(vp: VerbPhrase) -> str:
    if vp.direct_object is not None:
        return "what"
    if vp.predicate is not None and isinstance(vp.predicate.payload, Adjective):
        return "how"
    return "what"


def realize_exclamation(bs: BasicSentence, opener: str) -> str:
    """"what" + object + subject + rest, or "how" + adjective + subject + rest."""
    vp = bs.verb_phrase
    if opener == "what":
        focus = vp.direct_object
        if focus is None and vp.predicate is not None and isinstance(vp.predicate.payload, NounPhrase):
            focus = vp.predicate
        if focus is None:
            raise MissingObject("what-exclamation needs an object phrase")
    else:
        if vp.predicate is None or not isinstance(vp.predicate.payload, Adjective):
            raise MissingPredicateAdjective("how-exclamation needs a predicate adjective")
        focus = vp.predicate
    subject = [bs.subject.core.text] if bs.subject is not None else []
    chain = verb_chain(vp)
    core = subject + chain + complements(vp, exclude=focus)
    plan = RealizationPlan([opener, focus.core.text], core, [],
                           len(subject) + (1 if _is_aux_chain(chain) else 0))
    return place_circumstances(bs.circumstances, plan).join("!")


def realize_fragment(mood: str, *, np: NounPhrase | None = None, adj: Adjective | None = None,
                     circumstances: list[Circumstance] | None = None, punctuate: bool = False) -> str:
    """Text of the phrase-only moods (np, adj, circumstances and their exclamations)."""
    punct = terminal_punctuation(mood, punctuate)
    if mood in ("np", "what terse exclamation", "about"):
        if np is None:
            raise UnrealizableMood(f"mood {mood!r} needs a noun phrase")
        opener = {"np": [], "what terse exclamation": ["what"], "about": ["what", "about"]}[mood]
        return RealizationPlan(opener, [np.core.text]).join(punct)
    if mood in ("adj", "how terse exclamation"):
        if adj is None:
            raise UnrealizableMood(f"mood {mood!r} needs an adjective")
        opener = ["how"] if mood == "how terse exclamation" else []
        return RealizationPlan(opener, [adj.core.text]).join(punct)
    if mood == "circumstances":
        return place_circumstances(circumstances or [], RealizationPlan()).join(punct)
    raise UnrealizableMood(f"mood {mood!r} is not a phrase mood")
