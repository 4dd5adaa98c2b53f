from __future__ import annotations

import json
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
INVALID = Path(__file__).resolve().parent / "fixtures" / "invalid"

CORPUS_FILES = sorted(CORPUS.glob("*.nlml"))


def read_fixture(name: str) -> str:
    return (CORPUS / f"{name}.nlml").read_text(encoding="utf-8")


def expected(name: str) -> dict:
    return json.loads((CORPUS / f"{name}.expected.json").read_text(encoding="utf-8"))


I_COME = (
    "<mood>statement</mood><complexity>simple</complexity>"
    "<subject><noun><type>perspronoun</type><word>I</word><numb>sing</numb><pers>first</pers><case>nom</case></noun></subject>"
    "<verb_phrase><verb_type>intransitive</verb_type><tense>present</tense><kernel_tense>present</kernel_tense>"
    "<voice>active</voice><pers>first</pers><numb>sing</numb><verb>come</verb></verb_phrase>"
)


def simple_doc(body: str, mood: str = "statement") -> str:
    return f"<mood>{mood}</mood><complexity>simple</complexity>{body}"


def noun(word: str, person: str = "third", number: str = "sing", kind: str = "countable_noun", extra: str = "") -> str:
    return f"<noun><type>{kind}</type><word>{word}</word><numb>{number}</numb><pers>{person}</pers>{extra}</noun>"


def verb_phrase(*words: str, verb_type: str = "intransitive", tense: str = "present", kernel_tense: str = "present",
                person: str = "third", number: str = "sing", extra: str = "", tag: str = "verb_phrase") -> str:
    verbs = "".join(f"<verb>{w}</verb>" for w in words)
    return (f"<{tag}><verb_type>{verb_type}</verb_type><tense>{tense}</tense><kernel_tense>{kernel_tense}</kernel_tense>"
            f"<pers>{person}</pers><numb>{number}</numb>{verbs}{extra}</{tag}>")


@pytest.fixture
def i_come() -> str:
    return I_COME
