"""Small English verb morphology: auxiliaries, do-support and inflection.

Only what the realizer needs. Irregular forms come from a fixed table;
anything else goes through regular spelling rules, and base-form recovery
reports when it had to guess.
"""

from __future__ import annotations

import re

MODALS = frozenset({"will", "would", "shall", "should", "can", "could", "may", "might", "must", "ought"})
BE_FINITE = frozenset({"am", "is", "are", "was", "were"})
HAVE_FORMS = frozenset({"have", "has", "had"})
DO_FORMS = frozenset({"do", "does", "did"})
NEGATIONS = frozenset({"not", "never"})

QUERY_WORDS = frozenset({"who", "whom", "whose", "what", "which", "where", "when", "why", "how"})
QUERY_ADVERBS = frozenset({"where", "when", "why", "how"})

# base: (past, past participle)
IRREGULAR: dict[str, tuple[str, str]] = {
    "be": ("was", "been"), "have": ("had", "had"), "do": ("did", "done"),
    "go": ("went", "gone"), "come": ("came", "come"), "meet": ("met", "met"),
    "see": ("saw", "seen"), "get": ("got", "got"), "make": ("made", "made"),
    "take": ("took", "taken"), "give": ("gave", "given"), "know": ("knew", "known"),
    "think": ("thought", "thought"), "find": ("found", "found"), "tell": ("told", "told"),
    "say": ("said", "said"), "write": ("wrote", "written"), "read": ("read", "read"),
    "run": ("ran", "run"), "eat": ("ate", "eaten"), "buy": ("bought", "bought"),
    "bring": ("brought", "brought"), "leave": ("left", "left"), "feel": ("felt", "felt"),
    "keep": ("kept", "kept"), "begin": ("began", "begun"), "sing": ("sang", "sung"),
    "speak": ("spoke", "spoken"), "stand": ("stood", "stood"), "sit": ("sat", "sat"),
    "put": ("put", "put"), "let": ("let", "let"), "set": ("set", "set"),
    "cut": ("cut", "cut"), "hit": ("hit", "hit"), "hold": ("held", "held"),
    "hear": ("heard", "heard"), "lose": ("lost", "lost"), "pay": ("paid", "paid"),
    "send": ("sent", "sent"), "build": ("built", "built"), "spend": ("spent", "spent"),
    "teach": ("taught", "taught"), "catch": ("caught", "caught"), "fight": ("fought", "fought"),
    "sleep": ("slept", "slept"), "win": ("won", "won"), "break": ("broke", "broken"),
    "choose": ("chose", "chosen"), "drive": ("drove", "driven"), "fall": ("fell", "fallen"),
    "forget": ("forgot", "forgotten"), "grow": ("grew", "grown"), "fly": ("flew", "flown"),
    "swim": ("swam", "swum"), "drink": ("drank", "drunk"), "wear": ("wore", "worn"),
    "become": ("became", "become"), "understand": ("understood", "understood"),
    "lead": ("led", "led"), "mean": ("meant", "meant"), "rise": ("rose", "risen"),
    "ride": ("rode", "ridden"), "throw": ("threw", "thrown"), "draw": ("drew", "drawn"),
    "show": ("showed", "shown"), "sell": ("sold", "sold"), "learn": ("learned", "learned"),
}

# regular verbs known to the lexicon, used to disambiguate base recovery
REGULAR = frozenset({
    "agree", "allow", "answer", "arrive", "ask", "believe", "call", "change", "close",
    "dance", "decide", "discuss", "enjoy", "expect", "finish", "help", "hope", "intend",
    "invite", "like", "live", "look", "love", "move", "need", "open", "order", "plan",
    "play", "prefer", "rain", "rest", "smile", "start", "stay", "stop", "study", "talk",
    "try", "use", "visit", "wait", "walk", "want", "watch", "wish", "work", "advise",
    "urge", "require", "force", "remind", "warn", "persuade", "encourage", "permit",
    "command", "instruct", "wonder", "like", "cry", "carry", "worry", "fix", "miss",
    "push", "wash", "kiss", "reach", "touch", "die", "lie", "tie", "shop", "hate",
    "promise", "refuse", "offer", "attempt", "fail", "manage", "learn", "listen",
    "happen", "visit", "enter", "travel", "climb", "clean", "cook", "laugh", "jump",
})

_PAST_TO_BASE = {past: base for base, (past, _) in IRREGULAR.items()}
_PART_TO_BASE = {part: base for base, (_, part) in IRREGULAR.items()}
_THIRD_IRREGULAR = {"be": "is", "have": "has", "do": "does", "go": "goes"}
_THIRD_TO_BASE = {v: k for k, v in _THIRD_IRREGULAR.items()}
_DOUBLING = frozenset({"begin", "forget", "occur", "prefer", "refer", "admit", "commit", "permit", "travel"})
_CVC = re.compile(r"^[^aeiou]*[aeiou][^aeiouwxy]$")
_VOWELS = "aeiou"

_LEXICON = frozenset(IRREGULAR) | REGULAR


def is_query_word(word: str | None) -> bool:
    return bool(word) and word.lower() in QUERY_WORDS


def is_auxiliary(word: str, *, followed: bool = True) -> bool:
    """Can ``word`` front a question or take ``not``?

    Modals and finite be-forms always can; have/do forms only when another
    verb word follows. Contracted negations ("don't", "won't") count.
    """
    w = word.lower()
    if w in MODALS or w in BE_FINITE or w.endswith("n't"):
        return True
    if w in HAVE_FORMS or w in DO_FORMS:
        return followed
    return False


def third_singular(base: str) -> str:
    if base in _THIRD_IRREGULAR:
        return _THIRD_IRREGULAR[base]
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ies"
    if re.search(r"(s|sh|ch|x|z|o)$", base):
        return base + "es"
    return base + "s"


def _needs_doubling(base: str) -> bool:
    return base in _DOUBLING or bool(_CVC.match(base))


def past(base: str) -> str:
    if base in IRREGULAR:
        return IRREGULAR[base][0]
    return _ed(base)


def past_participle(base: str) -> str:
    if base in IRREGULAR:
        return IRREGULAR[base][1]
    return _ed(base)


def _ed(base: str) -> str:
    if base.endswith("e"):
        return base + "d"
    if re.search(r"[^aeiou]y$", base):
        return base[:-1] + "ied"
    if _needs_doubling(base):
        return base + base[-1] + "ed"
    return base + "ed"


def present_participle(base: str) -> str:
    if base.endswith("ie"):
        return base[:-2] + "ying"
    if base.endswith("e") and base not in ("be", "see", "agree", "flee") and not base.endswith("ee"):
        return base[:-1] + "ing"
    if _needs_doubling(base):
        return base + base[-1] + "ing"
    return base + "ing"


def be_form(person: str, number: str, tense: str = "present") -> str:
    if tense.startswith("past"):
        return "was" if number == "sing" and person != "second" else "were"
    if number == "sing" and person == "first":
        return "am"
    if number == "sing" and person == "third":
        return "is"
    return "are"


def have_form(person: str, number: str, tense: str = "present") -> str:
    if tense.startswith("past"):
        return "had"
    return "has" if number == "sing" and person == "third" else "have"


def do_form(person: str, number: str, tense: str = "present") -> str:
    """do/does/did for do-support."""
    if tense.startswith("past"):
        return "did"
    return "does" if number == "sing" and person == "third" else "do"


def _pick(candidates: list[str]) -> str | None:
    for c in candidates:
        if c in _LEXICON:
            return c
    return None


def base_form(word: str, kernel_tense: str | None = None) -> tuple[str, str | None]:
    """Recover the base form of an inflected verb.

    Returns ``(base, warning)``; ``warning`` is set when the form was not
    recognized and the word is passed through (or guessed) unchanged.
    """
    w = word.lower()
    if w in _LEXICON:
        return _keep_case(word, w), None
    if w in BE_FINITE or w in ("been", "being"):
        return _keep_case(word, "be"), None
    if w in _THIRD_TO_BASE:
        return _keep_case(word, _THIRD_TO_BASE[w]), None
    if w in _PAST_TO_BASE:
        return _keep_case(word, _PAST_TO_BASE[w]), None
    if w in _PART_TO_BASE:
        return _keep_case(word, _PART_TO_BASE[w]), None

    candidates: list[str] = []
    if w.endswith("ies"):
        candidates += [w[:-3] + "y"]
    if w.endswith("es"):
        candidates += [w[:-2]]
    if w.endswith("s"):
        candidates += [w[:-1]]
    if w.endswith("ied"):
        candidates += [w[:-3] + "y"]
    if w.endswith("ed"):
        stem = w[:-2]
        candidates += [stem, stem + "e", w[:-1]]
        if len(stem) > 2 and stem[-1] == stem[-2]:
            candidates += [stem[:-1]]
    if w.endswith("ying"):
        candidates += [w[:-4] + "ie"]
    if w.endswith("ing"):
        stem = w[:-3]
        candidates += [stem, stem + "e"]
        if len(stem) > 2 and stem[-1] == stem[-2]:
            candidates += [stem[:-1]]
    found = _pick(candidates)
    if found is not None:
        return _keep_case(word, found), None

    if kernel_tense in (None, "base"):
        return word, None
    guess = _regular_guess(w, kernel_tense)
    if guess is None:
        return word, f"unrecognized {kernel_tense} form {word!r} passed through unchanged"
    return _keep_case(word, guess), f"base form of {word!r} guessed as {guess!r}"


def _regular_guess(w: str, kernel_tense: str) -> str | None:
    if kernel_tense == "present" and w.endswith("s"):
        if w.endswith("ies"):
            return w[:-3] + "y"
        if re.search(r"(ss|sh|ch|x|z|o)es$", w):
            return w[:-2]
        return w[:-1]
    if kernel_tense in ("past", "past_part") and w.endswith("ed"):
        if w.endswith("ied"):
            return w[:-3] + "y"
        stem = w[:-2]
        if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "lsfz":
            return stem[:-1]
        return stem
    if kernel_tense == "pres_part" and w.endswith("ing"):
        stem = w[:-3]
        if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "lsfz":
            return stem[:-1]
        return stem
    return None


def _keep_case(original: str, word: str) -> str:
    if original[:1].isupper():
        return word[:1].upper() + word[1:]
    return word


def finite_form(base: str, person: str, number: str, tense: str = "present") -> str:
    """Finite form of ``base`` agreeing with the given subject features."""
    if base == "be":
        return be_form(person, number, tense)
    if base == "have":
        return have_form(person, number, tense)
    if tense.startswith("past"):
        return past(base)
    if number == "sing" and person == "third":
        return third_singular(base)
    return base


NOMINATIVE = {"me": "I", "him": "he", "her": "she", "us": "we", "them": "they", "whom": "who"}


def to_nominative(word: str) -> str:
    low = word.lower()
    if low not in NOMINATIVE:
        return word
    nom = NOMINATIVE[low]
    return nom if nom == "I" else _keep_case(word, nom)
