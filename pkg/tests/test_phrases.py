from __future__ import annotations

import pytest

from conftest import noun
from nlom import morphology as morph
from nlom.errors import SchemaError
from nlom.markup import parse_markup
from nlom.phrases import (
    agree,
    get_query_text,
    join_parts,
    make_noun_phrase,
    nominative,
    parse_adverb,
    parse_circumstance,
    parse_noun_phrase,
    parse_prep_phrase,
    parse_verb_phrase,
    simple_noun_phrase,
    split_auxiliary,
    split_noun_phrase,
    verb_chain,
)


def node(text: str):
    return parse_markup(text).children[0]


def vp(words, verb_type="intransitive", tense="present", kernel_tense="present", person="third", number="sing",
       extra=""):
    verbs = "".join(f"<verb>{w}</verb>" for w in words)
    return parse_verb_phrase(node(
        f"<verb_phrase><verb_type>{verb_type}</verb_type><tense>{tense}</tense><kernel_tense>{kernel_tense}</kernel_tense>"
        f"<pers>{person}</pers><numb>{number}</numb>{verbs}{extra}</verb_phrase>"))


class TestNounPhrase:
    def test_pronoun_i(self):
        np = parse_noun_phrase(node("<subject><noun><type>perspronoun</type><word>I</word><numb>sing</numb>"
                                    "<pers>first</pers><case>nom</case></noun></subject>"))
        assert (np.personality, np.number, np.case_) == ("first", "sing", "nom")
        assert [p.kernel for p in np.parts] == ["I"]
        assert np.part_connector is None and np.text == "I"

    def test_two_parts_and_is_plural(self):
        np = parse_noun_phrase(node(f"<subject><part_connector>and</part_connector>{noun('Tom')}{noun('Mary')}</subject>"))
        assert len(np.parts) == 2 and np.part_connector == "and" and np.number == "plur"
        assert np.text == "Tom and Mary"

    def test_or_agrees_with_nearest(self):
        np = parse_noun_phrase(node(f"<subject><part_connector>or</part_connector>{noun('Tom')}"
                                    f"{noun('we', 'first', 'plur')}</subject>"))
        assert (np.personality, np.number) == ("first", "plur")

    def test_pre_and_post_modifiers(self):
        np = parse_noun_phrase(node(
            "<np><noun><word>book</word><article>the</article><adj><word>red</word></adj>"
            "<prep_phrase><prep>on</prep><object><noun><word>table</word><article>the</article></noun></object></prep_phrase>"
            "</noun></np>"))
        assert np.text == "the red book on the table"

    def test_connector_arity_is_enforced(self):
        with pytest.raises(SchemaError):
            parse_noun_phrase(node(f"<subject><part_connector>and</part_connector>{noun('Tom')}</subject>"))

    def test_split_and_nominative(self):
        np = parse_noun_phrase(node(f"<subject><part_connector>neither_nor</part_connector>{noun('Tom')}"
                                    f"{noun('Mary')}</subject>"))
        assert np.text == "neither Tom nor Mary"
        assert [p.text for p in split_noun_phrase(np)] == ["Tom", "Mary"]
        assert nominative(simple_noun_phrase("him", case="acc")).text == "he"


class TestQueryText:
    @pytest.mark.parametrize(
        "body, expected",
        [
            ("<noun><word>who</word></noun>", "who"),
            ("<noun><word>man</word><article>the</article></noun>", None),
            ("<noun><word>books</word><determiner>what</determiner></noun>", "what books"),
        ],
    )
    def test_noun_phrase(self, body, expected):
        assert get_query_text(parse_noun_phrase(node(f"<np>{body}</np>"))) == expected

    def test_verb_phrase_object(self):
        v = vp(["do"], "transitive", extra="<direct_object><noun><word>what</word></noun></direct_object>")
        assert get_query_text(v) == "what"
        assert get_query_text(vp(["come"])) is None

    def test_predicate_noun_phrase(self):
        pred = ("<predicate><type>noun_phrase</type><np><noun><word>book</word><determiner>whose</determiner></noun>"
                "</np></predicate>")
        assert get_query_text(vp(["is"], "be", extra=pred)) == "whose book"

    def test_query_text_matches_core(self):
        np = parse_noun_phrase(node("<np><noun><word>whom</word></noun></np>"))
        assert (get_query_text(np) is not None) == bool(np.core.query_text)


class TestVerbPhrase:
    def test_come(self):
        v = vp(["come"], person="first")
        assert v.verb_words == ["come"] and v.tense == "present" and v.verb_type == "intransitive"

    def test_be_needs_predicate(self):
        with pytest.raises(SchemaError):
            vp(["is"], "be")

    def test_be_with_adjective(self):
        v = vp(["is"], "be", extra="<predicate><type>adjective</type><adj><word>tall</word></adj></predicate>")
        assert v.predicate is not None and v.direct_object is None and v.text == "is tall"

    def test_met_the_man(self):
        v = vp(["met"], "transitive", "past", "past", "second",
               extra=f"<direct_object>{noun('man', extra='<article>the</article>')}</direct_object>")
        assert v.direct_object.text == "the man" and v.base == "meet"

    @pytest.mark.parametrize(
        "words, person, number, tense, kt, expected",
        [
            (["will", "come"], "second", "sing", "future", "base", ("will", ["come"])),
            (["is"], "third", "sing", "present", "present", ("is", [])),
            (["to", "do"], "first", "sing", "infinitive", "base", ("do", ["do"])),
            (["comes"], "third", "sing", "present", "present", ("does", ["come"])),
            (["went"], "first", "plur", "past", "past", ("did", ["go"])),
            (["has", "gone"], "third", "sing", "perfect", "past_part", ("has", ["gone"])),
        ],
    )
    def test_split_auxiliary(self, words, person, number, tense, kt, expected):
        aux, rest = split_auxiliary(vp(words, tense=tense, kernel_tense=kt, person=person, number=number))
        assert (aux, rest) == expected and aux

    def test_split_auxiliary_keeps_complements(self):
        here = "<circum><type>adverb</type><adv><word>here</word></adv></circum>"
        assert split_auxiliary(vp(["will", "come"], tense="future", kernel_tense="base", extra=here)) == ("will", ["come", "here"])

    @pytest.mark.parametrize(
        "words, neg, expected",
        [
            (["come"], "not", ["do", "not", "come"]),
            (["will", "go"], "not", ["will", "not", "go"]),
            (["know"], "don't", ["don't", "know"]),
            (["to", "go"], "not", ["not", "to", "go"]),
        ],
    )
    def test_negation_folds_into_chain(self, words, neg, expected):
        v = vp(words, person="first", extra=f"<neg>{neg}</neg>")
        assert verb_chain(v) == expected

    @pytest.mark.parametrize(
        "words, source, target, expected",
        [
            (["sings"], ("third", "sing"), ("first", "sing"), ["sing"]),
            (["sing"], ("first", "plur"), ("third", "sing"), ["sings"]),
            (["are"], ("third", "plur"), ("third", "sing"), ["is"]),
            (["has", "gone"], ("third", "sing"), ("first", "plur"), ["have", "gone"]),
            (["will", "go"], ("third", "plur"), ("third", "sing"), ["will", "go"]),
            (["went"], ("third", "plur"), ("third", "sing"), ["went"]),
        ],
    )
    def test_agree(self, words, source, target, expected):
        tense = "past" if words == ["went"] else "present"
        v = vp(words, tense=tense, kernel_tense=tense, person=source[0], number=source[1])
        assert agree(v, *target).verb_words == expected


class TestSmallPhrases:
    def test_prep_phrase(self):
        pp = parse_prep_phrase(node("<prep_phrase><prep>in</prep><object><noun><word>room</word>"
                                    "<article>the</article></noun></object></prep_phrase>"))
        assert pp.prep == "in" and pp.object_np.text == "the room" and pp.core.text == "in the room"

    def test_superlative_adverb(self):
        adv = parse_adverb(node("<adv><word>fastest</word><grad>supl</grad></adv>"))
        assert adv.grad == "supl" and adv.extent_np is None

    def test_extent_adverb(self):
        adv = parse_adverb(node(f"<adv><type>too_to</type><word>old</word><np>{noun('walk')}</np></adv>"))
        assert adv.core.text == "too old to walk"

    def test_circumstance_yesterday(self):
        c = parse_circumstance(node("<circum><type>adverb</type><position>post</position><attribute>time</attribute>"
                                    "<adv><word>yesterday</word></adv></circum>"))
        assert (c.circum_type, c.position, c.attribute, c.query_adv) == ("adverb", "post", "time", None)

    def test_query_circumstance(self):
        c = parse_circumstance(node("<circum><type>adverb</type><adv><word>When</word></adv></circum>"))
        assert c.query_adv == "When" and c.position == "post"


def test_join_parts():
    assert join_parts(["A"], None) == "A"
    assert join_parts(["A", "B"], "and") == "A and B"
    assert join_parts(["A", "B", "C"], "or") == "A, B or C"
    assert join_parts(["A", "B", "C"], "neither_nor") == "neither A nor B nor C"


def test_make_noun_phrase_requires_parts():
    with pytest.raises(SchemaError):
        make_noun_phrase([])


class TestMorphology:
    @pytest.mark.parametrize("word, base", [("studies", "study"), ("watches", "watch"), ("went", "go"),
                                            ("running", "run"), ("finished", "finish"), ("is", "be")])
    def test_base_form(self, word, base):
        assert morph.base_form(word)[0] == base

    def test_unknown_form_warns(self):
        base, warning = morph.base_form("blorfed", "past")
        assert base == "blorf" and warning

    @pytest.mark.parametrize("base, third, past, ing", [("go", "goes", "went", "going"), ("study", "studies", "studied", "studying"),
                                                      ("stop", "stops", "stopped", "stopping"), ("make", "makes", "made", "making")])
    def test_inflection(self, base, third, past, ing):
        assert morph.third_singular(base) == third
        assert morph.past(base) == past
        assert morph.present_participle(base) == ing
